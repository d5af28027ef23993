#pragma once

#include <functional>

#include "gl2/report.hpp"

namespace gl2::sweep {

struct Options {
    i64 p_max = 31;
    i64 f_max = 4;
    i64 trials = 1000;
    u64 seed = 20260810;
};

struct ItemResult {
    bool pass = true;
    std::string witness;
};

// One independent unit of verification work: a grid point or a trial batch
// of one named check. Items never share state; any runner may execute them
// in any order.
struct Task {
    std::string check;
    std::string item;
    std::function<ItemResult()> run;
};

struct CheckOutcome {
    std::string name;
    bool pass = true;
    i64 items = 0;
    std::string witness; // first failing item, by task order
};

// The full verification suite over every invariant of the core modules.
// Deterministic in (options); per-item randomness is seeded from the check
// and item names.
std::vector<Task> build_suite(const Options& opt);

// Reference runner: executes tasks in order on one thread.
std::vector<CheckOutcome> run_serial(const std::vector<Task>& tasks);

// OpenMP runner; results are aggregated by task order, never by completion
// order, so the outcome is identical to the serial runner. threads <= 0
// keeps the OpenMP default. Falls back to the serial loop when built
// without OpenMP.
std::vector<CheckOutcome> run_parallel(const std::vector<Task>& tasks, int threads = 0);

Report make_report(const Options& opt, const std::vector<CheckOutcome>& outcomes);

u64 item_seed(u64 base, const std::string& check, const std::string& item);

} // namespace gl2::sweep
