// Compares the serial reference runner against the OpenMP runner on the
// standard verification suite and checks that they agree.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "gl2/sweep.hpp"

#ifdef GL2_HAVE_OPENMP
#include <omp.h>
#endif

using namespace gl2;

namespace {

double now_seconds() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

} // namespace

int main(int argc, char** argv) {
    sweep::Options opt;
    opt.trials = argc > 1 ? std::atoll(argv[1]) : 2000;
    auto tasks = sweep::build_suite(opt);
    std::printf("suite: %zu work items (trials=%lld)\n", tasks.size(),
                static_cast<long long>(opt.trials));

    double t0 = now_seconds();
    auto serial = sweep::run_serial(tasks);
    double t_serial = now_seconds() - t0;

    t0 = now_seconds();
    auto parallel = sweep::run_parallel(tasks);
    double t_parallel = now_seconds() - t0;

    bool agree = serial.size() == parallel.size();
    for (size_t i = 0; agree && i < serial.size(); ++i)
        agree = serial[i].name == parallel[i].name && serial[i].pass == parallel[i].pass &&
                serial[i].items == parallel[i].items && serial[i].witness == parallel[i].witness;

    int threads = 1;
#ifdef GL2_HAVE_OPENMP
    threads = omp_get_max_threads();
#endif
    std::printf("serial:   %8.3f s\n", t_serial);
    std::printf("parallel: %8.3f s  (%d threads)\n", t_parallel, threads);
    std::printf("speedup:  %8.2fx\n", t_parallel > 0 ? t_serial / t_parallel : 0.0);
    std::printf("outcomes agree: %s\n", agree ? "yes" : "NO");

    bool all_pass = true;
    for (const auto& c : serial)
        all_pass = all_pass && c.pass;
    std::printf("checks: %zu, all passing: %s\n", serial.size(), all_pass ? "yes" : "NO");
    return agree && all_pass ? 0 : 1;
}
