#include "gl2/sweep.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "gl2/oracles.hpp"

#ifdef GL2_HAVE_OPENMP
#include <omp.h>
#endif

namespace gl2::sweep {

namespace {

u64 splitmix64(u64 x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

u64 fnv1a(const std::string& s) {
    u64 h = 0xcbf29ce484222325ull;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::vector<i64> odd_primes_up_to(i64 n) {
    std::vector<i64> out;
    for (i64 p = 3; p <= n; p += 2)
        if (is_prime_u64(static_cast<u64>(p)))
            out.push_back(p);
    return out;
}

std::string pf_label(i64 p, i64 f) {
    return "p=" + std::to_string(p) + " f=" + std::to_string(f);
}

ItemResult pass_item() {
    return ItemResult{};
}

ItemResult fail_item(const std::string& witness) {
    return ItemResult{false, witness};
}

// Iterate all digit vectors in [lo, hi]^f; stops when body returns false.
template <typename Body>
bool for_each_vector(i64 f, i64 lo, i64 hi, Body body) {
    if (hi < lo)
        return true;
    std::vector<i64> v(static_cast<size_t>(f), lo);
    while (true) {
        if (!body(v))
            return false;
        size_t i = 0;
        while (i < v.size() && ++v[i] > hi) {
            v[i] = lo;
            ++i;
        }
        if (i == v.size())
            return true;
    }
}

std::vector<i64> random_vector(std::mt19937_64& rng, i64 f, i64 lo, i64 hi) {
    std::uniform_int_distribution<i64> d(lo, hi);
    std::vector<i64> v(static_cast<size_t>(f));
    for (auto& x : v)
        x = d(rng);
    return v;
}

std::string join_i64(const std::vector<i64>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(v[i]);
    }
    return s;
}

} // namespace

u64 item_seed(u64 base, const std::string& check, const std::string& item) {
    return splitmix64(base ^ fnv1a(check + "\x1f" + item));
}

namespace {

struct SuiteBuilder {
    const Options& opt;
    std::vector<Task> tasks;

    void add(const std::string& check, const std::string& item,
             std::function<ItemResult()> run) {
        tasks.push_back(Task{check, item, std::move(run)});
    }

    u64 seed_for(const std::string& check, const std::string& item) const {
        return item_seed(opt.seed, check, item);
    }

    // ---------------- weights ----------------

    void weights_char_injective() {
        const std::string name = "weights.char_injective_on_1generic";
        for (i64 p : odd_primes_up_to(std::min<i64>(31, opt.p_max))) {
            for (i64 f = 1; f <= std::min<i64>(2, opt.f_max); ++f) {
                add(name, pf_label(p, f), [p, f]() {
                    Params P = make_params(p, f);
                    if (P.p - 3 < 1)
                        return pass_item(); // no 1-generic weights at all
                    std::vector<unsigned __int128> codes;
                    bool ok = for_each_vector(f, 1, P.p - 3, [&](const std::vector<i64>& d) {
                        for (i64 m = 0; m < P.qm1(); ++m) {
                            ToralCharacter chi = char_of_weight(SerreWeight{d, m}, P);
                            codes.push_back(
                                (static_cast<unsigned __int128>(chi.a_exp) << 64) |
                                static_cast<u64>(chi.d_exp));
                        }
                        return true;
                    });
                    (void)ok;
                    std::sort(codes.begin(), codes.end());
                    if (std::adjacent_find(codes.begin(), codes.end()) != codes.end())
                        return fail_item("two distinct 1-generic weights share a character");
                    return pass_item();
                });
            }
        }
    }

    void weights_boundary_collision() {
        const std::string name = "weights.boundary_collision_witness";
        for (i64 p : odd_primes_up_to(std::min<i64>(13, opt.p_max))) {
            for (i64 f = 1; f <= std::min<i64>(2, opt.f_max); ++f) {
                add(name, pf_label(p, f), [p, f]() {
                    Params P = make_params(p, f);
                    for (i64 m : {i64(0), i64(1), P.qm1() - 1}) {
                        if (m < 0 || m >= P.qm1())
                            continue;
                        SerreWeight lo{std::vector<i64>(static_cast<size_t>(f), 0), m};
                        SerreWeight hi{std::vector<i64>(static_cast<size_t>(f), p - 1), m};
                        if (!(char_of_weight(lo, P) == char_of_weight(hi, P)))
                            return fail_item("boundary weights at twist " + std::to_string(m) +
                                             " have distinct characters");
                    }
                    return pass_item();
                });
            }
        }
    }

    void weights_involutions() {
        for (i64 p : odd_primes_up_to(std::min<i64>(31, opt.p_max))) {
            for (i64 f = 1; f <= std::min<i64>(2, opt.f_max); ++f) {
                add("weights.conj_s_involution", pf_label(p, f),
                    [p, f, s = seed_for("weights.conj_s_involution", pf_label(p, f))]() {
                        Params P = make_params(p, f);
                        std::mt19937_64 rng(s);
                        std::uniform_int_distribution<i64> e(0, P.qm1() - 1);
                        for (int t = 0; t < 200; ++t) {
                            ToralCharacter chi{e(rng), e(rng)};
                            if (!(conj_s(conj_s(chi)) == chi))
                                return fail_item("conj_s not an involution at " + to_string(chi));
                        }
                        return pass_item();
                    });
                add("weights.weight_s_involution", pf_label(p, f),
                    [p, f, s = seed_for("weights.weight_s_involution", pf_label(p, f))]() {
                        Params P = make_params(p, f);
                        if (P.p - 3 < 1)
                            return pass_item();
                        std::mt19937_64 rng(s);
                        for (int t = 0; t < 200; ++t) {
                            SerreWeight w = oracle::random_generic_weight(rng, P, 1);
                            if (!(weight_s(weight_s(w, P), P) == w))
                                return fail_item("weight_s^2 != id at " + to_string(w));
                        }
                        return pass_item();
                    });
                add("weights.weight_s_matches_oracle", pf_label(p, f),
                    [p, f,
                     s = seed_for("weights.weight_s_matches_oracle", pf_label(p, f))]() {
                        Params P = make_params(p, f);
                        if (P.p - 3 < 1)
                            return pass_item();
                        std::mt19937_64 rng(s);
                        for (int t = 0; t < 50; ++t) {
                            SerreWeight w = oracle::random_generic_weight(rng, P, 1);
                            if (!(weight_s(w, P) == oracle::weight_s_bruteforce(w, P)))
                                return fail_item("closed form disagrees with search at " +
                                                 to_string(w));
                        }
                        return pass_item();
                    });
            }
        }
    }

    void weights_generic_count() {
        const std::string name = "weights.generic_count";
        for (i64 p : odd_primes_up_to(std::min<i64>(13, opt.p_max))) {
            for (i64 f = 1; f <= std::min<i64>(2, opt.f_max); ++f) {
                add(name, pf_label(p, f), [p, f]() {
                    Params P = make_params(p, f);
                    for (i64 n = 0; n <= (p + 1) / 2; ++n) {
                        i64 expected =
                            (P.p - 2 - n >= n) ? checked_pow(P.p - 1 - 2 * n, f) * P.qm1() : 0;
                        i64 got = oracle::count_generic_weights_bruteforce(P, n);
                        if (expected != got)
                            return fail_item("n=" + std::to_string(n) + ": formula " +
                                             std::to_string(expected) + " vs count " +
                                             std::to_string(got));
                    }
                    return pass_item();
                });
            }
        }
    }

    void weights_thresholds() {
        const std::string name = "weights.threshold_order";
        for (i64 f = 1; f <= std::max<i64>(opt.f_max, 6); ++f) {
            add(name, "f=" + std::to_string(f), [f]() {
                Params P = make_params(3, f);
                i64 global = required_genericity(Statement::global_finite_length, P);
                i64 local = required_genericity(Statement::finite_length, P);
                i64 graded = required_genericity(Statement::graded_presentation, P);
                if (!(global >= local && local >= graded))
                    return fail_item("threshold order violated at f=" + std::to_string(f));
                if (graded != 9 || local != std::max<i64>(9, 2 * f + 1) ||
                    global != std::max<i64>(12, 2 * f + 1) ||
                    required_genericity(Statement::socle_dimension, P) != 2 * f ||
                    required_genericity(Statement::global_hypotheses, P) != 12)
                    return fail_item("threshold table mismatch at f=" + std::to_string(f));
                return pass_item();
            });
        }
    }

    // ---------------- tuples ----------------

    std::vector<i64> tuple_primes() const {
        std::vector<i64> ps = {3};
        if (opt.p_max >= 29)
            ps.push_back(29);
        auto all = odd_primes_up_to(opt.p_max);
        if (!all.empty() && all.back() != 3 && all.back() != 29)
            ps.push_back(all.back());
        return ps;
    }

    void tuples_families() {
        for (i64 p : tuple_primes()) {
            for (i64 f = 1; f <= 6; ++f) {
                add("tuples.family_counts", pf_label(p, f), [p, f]() {
                    Params P = make_params(p, f);
                    i64 expect = checked_pow(2, f);
                    auto d = enumerate_D(P);
                    auto ps = enumerate_P_ind(P);
                    if (static_cast<i64>(d.size()) != expect)
                        return fail_item("weight family has " + std::to_string(d.size()) +
                                         " tuples, expected 2^f");
                    if (static_cast<i64>(ps.size()) != expect)
                        return fail_item("series family has " + std::to_string(ps.size()) +
                                         " tuples, expected 2^f");
                    return pass_item();
                });
                add("tuples.transfer_equals_bruteforce", pf_label(p, f), [p, f]() {
                    Params P = make_params(p, f);
                    if (!(enumerate_D(P) == oracle::enumerate_D_bruteforce(P)))
                        return fail_item("weight family differs from filtered candidates");
                    if (!(enumerate_P_ind(P) == oracle::enumerate_P_bruteforce(P)))
                        return fail_item("series family differs from filtered candidates");
                    return pass_item();
                });
                add("tuples.j_bijection_powerset", pf_label(p, f), [p, f]() {
                    Params P = make_params(p, f);
                    std::set<std::vector<int>> subsets;
                    for (const auto& t : enumerate_D(P))
                        subsets.insert(j_set(t, P));
                    if (static_cast<i64>(subsets.size()) != checked_pow(2, f))
                        return fail_item("position sets are not pairwise distinct");
                    return pass_item();
                });
                add("tuples.length_counts_binomial", pf_label(p, f), [p, f]() {
                    Params P = make_params(p, f);
                    std::map<i64, i64> counts;
                    for (const auto& t : enumerate_D(P))
                        ++counts[tuple_length(t, P)];
                    for (i64 l = 0; l <= f; ++l)
                        if (counts[l] != binomial(f, l))
                            return fail_item("length " + std::to_string(l) + " has " +
                                             std::to_string(counts[l]) + " tuples, expected C(f,l)");
                    return pass_item();
                });
                add("tuples.intersection_identity", pf_label(p, f), [p, f]() {
                    Params P = make_params(p, f);
                    if (!check_intersection(P))
                        return fail_item("family intersection is not the identity tuple alone");
                    return pass_item();
                });
            }
        }
    }

    void tuples_twist_properties() {
        for (i64 p : odd_primes_up_to(std::min<i64>(31, opt.p_max))) {
            for (i64 f = 1; f <= std::min<i64>(4, opt.f_max); ++f) {
                add("tuples.twist_parity", pf_label(p, f),
                    [p, f, s = seed_for("tuples.twist_parity", pf_label(p, f))]() {
                        Params P = make_params(p, f);
                        std::mt19937_64 rng(s);
                        auto families = enumerate_D(P);
                        auto ps = enumerate_P_ind(P);
                        families.insert(families.end(), ps.begin(), ps.end());
                        for (int t = 0; t < 30; ++t) {
                            auto r = random_vector(rng, f, -10, P.p + 10);
                            for (const auto& tup : families) {
                                try {
                                    e_twist(tup, r, P);
                                } catch (const arithmetic_error& e) {
                                    return fail_item(std::string("parity failure: ") + e.what() +
                                                     " at r=" + join_i64(r));
                                }
                            }
                        }
                        return pass_item();
                    });
                add("tuples.range_validity", pf_label(p, f),
                    [p, f, s = seed_for("tuples.range_validity", pf_label(p, f))]() {
                        Params P = make_params(p, f);
                        std::mt19937_64 rng(s);
                        auto try_all = [&](const std::vector<AffineTuple>& fam, i64 lo, i64 hi) {
                            if (hi < lo)
                                return std::string();
                            auto run_r = [&](const std::vector<i64>& r) {
                                for (const auto& t : fam) {
                                    try {
                                        weight_of_tuple(t, r, P);
                                    } catch (const error& e) {
                                        return std::string(e.what()) + " at r=" + join_i64(r);
                                    }
                                }
                                return std::string();
                            };
                            if (checked_pow(hi - lo + 1, f) <= 4096) {
                                std::string w;
                                for_each_vector(f, lo, hi, [&](const std::vector<i64>& r) {
                                    w = run_r(r);
                                    return w.empty();
                                });
                                return w;
                            }
                            for (int t = 0; t < 200; ++t) {
                                auto w = run_r(random_vector(rng, f, lo, hi));
                                if (!w.empty())
                                    return w;
                            }
                            return std::string();
                        };
                        std::string w = try_all(enumerate_D(P), 1, P.p - 4);
                        if (w.empty())
                            w = try_all(enumerate_P_ind(P), 1, P.p - 3);
                        return w.empty() ? pass_item() : fail_item(w);
                    });
            }
        }
    }

    // ---------------- diagram ----------------

    void diagram_weightsets() {
        for (i64 p : odd_primes_up_to(std::min<i64>(31, opt.p_max))) {
            for (i64 f = 1; f <= std::min<i64>(4, opt.f_max); ++f) {
                add("diagram.weightset_shape", pf_label(p, f),
                    [p, f, s = seed_for("diagram.weightset_shape", pf_label(p, f))]() {
                        Params P = make_params(p, f);
                        auto check_rho = [&](const std::vector<i64>& r) {
                            InertialData rho{r, InertialKind::reducible_split, 0};
                            if (!is_inertial_generic(rho, 0, P))
                                return std::string();
                            WeightSet W;
                            try {
                                W = serre_weights(rho, P);
                            } catch (const error& e) {
                                return std::string(e.what()) + " at r=" + join_i64(r);
                            }
                            if (static_cast<i64>(W.size()) != checked_pow(2, f))
                                return "wrong size at r=" + join_i64(r);
                            for (i64 l = 0; l <= f; ++l)
                                if (static_cast<i64>(W.by_length(l).size()) != binomial(f, l))
                                    return "level size mismatch at r=" + join_i64(r);
                            if (!char_injectivity_check(W, P))
                                return "characters collide at r=" + join_i64(r);
                            return std::string();
                        };
                        std::string w;
                        if (checked_pow(P.p - 2, f) <= 20000) {
                            for_each_vector(f, 0, P.p - 3, [&](const std::vector<i64>& r) {
                                w = check_rho(r);
                                return w.empty();
                            });
                        } else {
                            std::mt19937_64 rng(s);
                            for (int t = 0; t < 2000 && w.empty(); ++t)
                                w = check_rho(random_vector(rng, f, 0, P.p - 3));
                        }
                        return w.empty() ? pass_item() : fail_item(w);
                    });
            }
        }
    }

    void diagram_jh() {
        for (i64 p : odd_primes_up_to(std::min<i64>(31, opt.p_max))) {
            for (i64 f = 1; f <= std::min<i64>(3, opt.f_max); ++f) {
                add("diagram.jh_count", pf_label(p, f),
                    [p, f, s = seed_for("diagram.jh_count", pf_label(p, f))]() {
                        Params P = make_params(p, f);
                        if (P.p - 3 < 1)
                            return pass_item();
                        std::mt19937_64 rng(s);
                        for (int t = 0; t < 100; ++t) {
                            SerreWeight s0 = oracle::random_generic_weight(rng, P, 1);
                            auto jh = jh_principal_series(s0, P);
                            std::set<SerreWeight> distinct(jh.begin(), jh.end());
                            if (static_cast<i64>(distinct.size()) != checked_pow(2, f))
                                return fail_item("constituents not distinct at " + to_string(s0));
                            if (!distinct.count(s0))
                                return fail_item("constituents miss the inducing weight " +
                                                 to_string(s0));
                        }
                        return pass_item();
                    });
                add("diagram.jh_meets_singleton", pf_label(p, f),
                    [p, f, s = seed_for("diagram.jh_meets_singleton", pf_label(p, f))]() {
                        Params P = make_params(p, f);
                        if (P.p - 3 < 1)
                            return pass_item();
                        auto check_r = [&](const std::vector<i64>& r) {
                            InertialData rho{r, InertialKind::reducible_split, 0};
                            if (!is_inertial_generic(rho, 0, P))
                                return std::string(); // no weight set to meet
                            WeightSet W = serre_weights(rho, P);
                            SerreWeight s0{r, 0};
                            auto meet = jh_meets_weightset(s0, W, P);
                            if (meet.size() != 1 || !(meet.front() == s0))
                                return "intersection not {inducing weight} at r=" + join_i64(r);
                            return std::string();
                        };
                        std::string w;
                        if (checked_pow(P.p - 3, f) <= 4000) {
                            for_each_vector(f, 1, P.p - 3, [&](const std::vector<i64>& r) {
                                w = check_r(r);
                                return w.empty();
                            });
                        } else {
                            std::mt19937_64 rng(s);
                            for (int t = 0; t < 1000 && w.empty(); ++t)
                                w = check_r(random_vector(rng, f, 1, P.p - 3));
                        }
                        return w.empty() ? pass_item() : fail_item(w);
                    });
            }
            add("diagram.f1_second_constituent", "p=" + std::to_string(p), [p]() {
                Params P = make_params(p, 1);
                for (i64 d = 1; d <= P.p - 3; ++d) {
                    for (i64 m : {i64(0), i64(1), P.qm1() / 2, P.qm1() - 1}) {
                        if (m < 0 || m >= P.qm1())
                            continue;
                        SerreWeight s0{{d}, m};
                        auto jh = jh_principal_series(s0, P);
                        SerreWeight other = jh[0] == s0 ? jh[1] : jh[0];
                        if (!(other == weight_s(s0, P)))
                            return fail_item("second constituent != involution partner at " +
                                             to_string(s0));
                    }
                }
                return pass_item();
            });
        }
    }

    void diagram_profiles() {
        const std::string name = "diagram.ext_profile";
        for (i64 r = 1; r <= 5; ++r) {
            for (i64 f = 1; f <= std::min<i64>(5, opt.f_max); ++f) {
                add(name, "r=" + std::to_string(r) + " f=" + std::to_string(f), [r, f]() {
                    Params P = make_params(3, f);
                    for (auto kind : {ProfileKind::reducible, ProfileKind::irreducible}) {
                        HypothesisProfile h = hypothesis_profile(r, P, kind);
                        i64 total = 0;
                        for (i64 i = 0; i <= 2 * f; ++i) {
                            i64 want = binomial(2 * f, i) * r;
                            if (h.ext_dims[static_cast<size_t>(i)] != want)
                                return fail_item("ext dim mismatch at i=" + std::to_string(i));
                            if (h.ext_dims[static_cast<size_t>(i)] !=
                                h.ext_dims[static_cast<size_t>(2 * f - i)])
                                return fail_item("ext dims asymmetric at i=" + std::to_string(i));
                            total += want;
                        }
                        if (h.ext_total != total || h.ext_total != checked_pow(4, f) * r)
                            return fail_item("ext total mismatch");
                        if (h.socle_length != checked_pow(2, f) * r)
                            return fail_item("socle length mismatch");
                        if (h.torsion_char_multiplicity != r)
                            return fail_item("torsion multiplicity mismatch");
                    }
                    return pass_item();
                });
            }
        }
    }

    // ---------------- lattice ----------------

    void lattice_subspaces() {
        for (i64 c : {2, 3, 5}) {
            for (i64 r = 1; r <= 4; ++r) {
                std::string label = "c=" + std::to_string(c) + " r=" + std::to_string(r);
                add("lattice.canonical_form", label,
                    [c, r, s = seed_for("lattice.canonical_form",
                                              "c=" + std::to_string(c) +
                                                  " r=" + std::to_string(r))]() {
                        std::mt19937_64 rng(s);
                        std::uniform_int_distribution<i64> coef(0, c - 1);
                        for (int t = 0; t < 200; ++t) {
                            Subspace A = random_subspace(rng, c, r);
                            // Re-present with scaled sums of basis rows.
                            std::vector<std::vector<i64>> rows;
                            for (int k = 0; k < 2 * r; ++k) {
                                std::vector<i64> v(static_cast<size_t>(r), 0);
                                for (const auto& b : A.basis()) {
                                    i64 x = coef(rng);
                                    for (size_t j = 0; j < v.size(); ++j)
                                        v[j] = mod_reduce(v[j] + x * b[j], c);
                                }
                                rows.push_back(std::move(v));
                            }
                            for (const auto& b : A.basis())
                                rows.push_back(b);
                            Subspace B = Subspace::span_of(c, r, std::move(rows));
                            if (!(A == B))
                                return fail_item("canonical form depends on presentation");
                        }
                        return pass_item();
                    });
                add("lattice.modular_dim_law", label,
                    [c, r, s = seed_for("lattice.modular_dim_law",
                                              "c=" + std::to_string(c) +
                                                  " r=" + std::to_string(r))]() {
                        std::mt19937_64 rng(s);
                        for (int t = 0; t < 200; ++t) {
                            Subspace A = random_subspace(rng, c, r);
                            Subspace B = random_subspace(rng, c, r);
                            auto alg = subspace_algebra(A, B);
                            if (alg.dims[0] + alg.dims[1] != alg.dims[2] + alg.dims[3])
                                return fail_item("dimension law fails");
                            if (!alg.sum.contains(A) || !alg.sum.contains(B) ||
                                !A.contains(alg.intersection) || !B.contains(alg.intersection))
                                return fail_item("sum/intersection containments fail");
                        }
                        return pass_item();
                    });
            }
        }
    }

    void lattice_profiles() {
        for (i64 c : {2, 3}) {
            for (i64 r = 1; r <= 4; ++r) {
                for (i64 f = 1; f <= std::min<i64>(3, opt.f_max); ++f) {
                    std::string label = "c=" + std::to_string(c) + " r=" + std::to_string(r) +
                                        " f=" + std::to_string(f);
                    add("lattice.soc_additivity", label,
                        [c, r, f, trials = opt.trials,
                         s = seed_for("lattice.soc_additivity",
                                      "c=" + std::to_string(c) + " r=" + std::to_string(r) +
                                          " f=" + std::to_string(f))]() {
                            Params P = make_params(3, f);
                            std::mt19937_64 rng(s);
                            i64 n = std::max<i64>(trials / 24, 10);
                            for (i64 t = 0; t < n; ++t) {
                                auto outer = random_profile(rng, ProfileKind::reducible, f, c, r);
                                auto inner = random_subprofile(rng, outer);
                                if (!socle_additivity_check(outer, inner, P))
                                    return fail_item("socle additivity fails");
                                auto q = quotient_profile(outer, inner);
                                for (size_t l = 0; l < q.spaces.size(); ++l)
                                    if (q.spaces[l].dim() !=
                                        outer.spaces[l].dim() - inner.spaces[l].dim())
                                        return fail_item("quotient dimension mismatch");
                                auto zero = SubrepProfile::zero(ProfileKind::reducible, f, c, r);
                                if (!(quotient_profile(outer, zero).dims() == outer.dims()))
                                    return fail_item("quotient by zero changes dimensions");
                            }
                            return pass_item();
                        });
                    add("lattice.soc_strict_monotone", label,
                        [c, r, f, s = seed_for("lattice.soc_strict_monotone",
                                                     "c=" + std::to_string(c) + " r=" +
                                                         std::to_string(r) +
                                                         " f=" + std::to_string(f))]() {
                            Params P = make_params(3, f);
                            std::mt19937_64 rng(s);
                            for (int t = 0; t < 100; ++t) {
                                auto outer = random_profile(rng, ProfileKind::reducible, f, c, r);
                                auto inner = random_subprofile(rng, outer);
                                if (inner.dims() == outer.dims())
                                    continue;
                                if (!(soc_length(inner, P) < soc_length(outer, P)))
                                    return fail_item("socle length not strictly monotone");
                            }
                            return pass_item();
                        });
                }
            }
        }
    }

    void lattice_chains() {
        for (i64 c : {2, 3}) {
            for (i64 r = 1; r <= 2; ++r) {
                for (i64 f = 1; f <= std::min<i64>(2, opt.f_max); ++f) {
                    std::string label = "c=" + std::to_string(c) + " r=" + std::to_string(r) +
                                        " f=" + std::to_string(f);
                    add("lattice.chain_bounds_exhaustive", label,
                        [c, r, f, s = seed_for("lattice.chain_bounds_exhaustive",
                                                     "c=" + std::to_string(c) + " r=" +
                                                         std::to_string(r) +
                                                         " f=" + std::to_string(f))]() {
                            Params P = make_params(3, f);
                            return max_chain_check(P, r, c, 5, s)
                                       ? pass_item()
                                       : fail_item("chain bound check failed");
                        });
                }
            }
        }
        for (i64 c : {2, 3, 5}) {
            for (i64 r = 3; r <= 4; ++r) {
                for (i64 f = 2; f <= std::min<i64>(3, opt.f_max); ++f) {
                    std::string label = "c=" + std::to_string(c) + " r=" + std::to_string(r) +
                                        " f=" + std::to_string(f);
                    add("lattice.chain_bounds_randomized", label,
                        [c, r, f, s = seed_for("lattice.chain_bounds_randomized",
                                                     "c=" + std::to_string(c) + " r=" +
                                                         std::to_string(r) +
                                                         " f=" + std::to_string(f))]() {
                            Params P = make_params(3, f);
                            std::mt19937_64 rng(s);
                            for (int t = 0; t < 20; ++t) {
                                auto outer = random_profile(rng, ProfileKind::reducible, f, c, r);
                                auto inner = random_subprofile(rng, outer);
                                auto rep = chain_bound_randomized(inner, outer, P, 3, rng);
                                if (rep.exceeded || !(rep.achieved || rep.bound == 0))
                                    return fail_item("randomized chain bound violated");
                            }
                            return pass_item();
                        });
                }
            }
        }
    }

    void lattice_headline_bounds() {
        const std::string name = "lattice.headline_bounds";
        for (i64 r = 1; r <= 5; ++r) {
            for (i64 f = 1; f <= std::min<i64>(4, opt.f_max); ++f) {
                add(name, "r=" + std::to_string(r) + " f=" + std::to_string(f), [r, f]() {
                    Params P = make_params(3, f);
                    auto zero_red = SubrepProfile::zero(ProfileKind::reducible, f, 3, r);
                    auto full_red = SubrepProfile::full(ProfileKind::reducible, f, 3, r);
                    if (length_bound(full_red, zero_red, P) != r * (f + 1))
                        return fail_item("reducible bound != r*(f+1)");
                    auto zero_irr = SubrepProfile::zero(ProfileKind::irreducible, f, 3, r);
                    auto full_irr = SubrepProfile::full(ProfileKind::irreducible, f, 3, r);
                    if (length_bound(full_irr, zero_irr, P) != r)
                        return fail_item("irreducible bound != r");
                    auto dec = ps_decomposition(full_red, r, P);
                    if (dec.remainder_bound != r * (f - 1))
                        return fail_item("remainder bound != r*(f-1)");
                    if (dec.remainder_socle != r * (checked_pow(2, f) - 2))
                        return fail_item("remainder socle != r*(2^f-2)");
                    if (length_bound(dec.remainder, zero_red, P) != dec.remainder_bound)
                        return fail_item("remainder profile bound mismatch");
                    if (soc_length(dec.remainder, P) != dec.remainder_socle)
                        return fail_item("remainder profile socle mismatch");
                    return pass_item();
                });
            }
        }
    }

    // ---------------- characteristic cycles ----------------

    void cycles_mult() {
        for (i64 f = 1; f <= std::min<i64>(3, opt.f_max); ++f) {
            std::string label = "f=" + std::to_string(f);
            add("cycles.mult_matches_saturation", label,
                [f, trials = opt.trials,
                 s = seed_for("cycles.mult_matches_saturation", "f=" + std::to_string(f))]() {
                    Params P = make_params(3, f);
                    std::mt19937_64 rng(s);
                    auto primes = minimal_primes(P);
                    for (i64 t = 0; t < std::max<i64>(trials, 1); ++t) {
                        MonomialIdeal I = oracle::random_monomial_ideal(rng, P);
                        for (const auto& q : primes) {
                            if (mult_at_prime(I, q) != oracle::mult_at_prime_saturation(I, q))
                                return fail_item("closed form disagrees with saturation at " +
                                                 to_string(q));
                        }
                    }
                    return pass_item();
                });
            add("cycles.cyclic_mult_01", label,
                [f, s = seed_for("cycles.cyclic_mult_01", "f=" + std::to_string(f))]() {
                    Params P = make_params(3, f);
                    std::mt19937_64 rng(s);
                    auto primes = minimal_primes(P);
                    for (const auto& q : primes)
                        if (mult_at_prime(MonomialIdeal::zero(f), q) != 1)
                            return fail_item("free module must have multiplicity 1 everywhere");
                    for (int t = 0; t < 300; ++t) {
                        MonomialIdeal I = oracle::random_monomial_ideal(rng, P);
                        for (const auto& q : primes) {
                            i64 m = mult_at_prime(I, q);
                            if (m != 0 && m != 1)
                                return fail_item("cyclic multiplicity outside {0,1}");
                        }
                    }
                    return pass_item();
                });
            add("cycles.additivity", label,
                [f, s = seed_for("cycles.additivity", "f=" + std::to_string(f))]() {
                    Params P = make_params(3, f);
                    std::mt19937_64 rng(s);
                    std::uniform_int_distribution<i64> mult(1, 3);
                    std::uniform_int_distribution<i64> nsum(1, 3);
                    auto random_spec = [&]() {
                        ModuleSpec N;
                        i64 n = nsum(rng);
                        for (i64 i = 0; i < n; ++i)
                            N.summands.push_back(
                                {oracle::random_monomial_ideal(rng, P), mult(rng), ""});
                        return N;
                    };
                    for (int t = 0; t < 200; ++t) {
                        ModuleSpec N1 = random_spec();
                        ModuleSpec N2 = random_spec();
                        ModuleSpec direct_sum;
                        direct_sum.summands = N1.summands;
                        direct_sum.summands.insert(direct_sum.summands.end(),
                                                   N2.summands.begin(), N2.summands.end());
                        ModuleSpec filtered;
                        filtered.filtration = {N1, N2};
                        auto lhs = char_cycle(direct_sum, P);
                        auto via_layers = char_cycle(filtered, P);
                        auto rhs = cycle_add(char_cycle(N1, P), char_cycle(N2, P));
                        if (!(lhs == rhs) || !(via_layers == rhs))
                            return fail_item("characteristic cycle not additive");
                        // Effective difference recovers a summand cycle.
                        if (!(cycle_sub(rhs, char_cycle(N2, P)) == char_cycle(N1, P)))
                            return fail_item("cycle subtraction inconsistent");
                    }
                    return pass_item();
                });
            add("cycles.coeff_bounds", label,
                [f, s = seed_for("cycles.coeff_bounds", "f=" + std::to_string(f))]() {
                    Params P = make_params(3, f);
                    std::mt19937_64 rng(s);
                    std::uniform_int_distribution<i64> mult(1, 3);
                    for (int t = 0; t < 200; ++t) {
                        ModuleSpec N;
                        i64 total = 0;
                        i64 n = 1 + static_cast<i64>(rng() % 3);
                        for (i64 i = 0; i < n; ++i) {
                            i64 k = mult(rng);
                            total += k;
                            N.summands.push_back(
                                {oracle::random_monomial_ideal(rng, P), k, ""});
                        }
                        auto z = char_cycle(N, P);
                        for (i64 v : z.coeffs())
                            if (v < 0 || v > total)
                                return fail_item("cycle coefficient outside [0, total mult]");
                    }
                    return pass_item();
                });
        }
    }

    void cycles_profile_bridge() {
        const std::string name = "cycles.p0_equals_socle";
        for (i64 f = 1; f <= std::min<i64>(3, opt.f_max); ++f) {
            for (i64 r = 1; r <= 4; ++r) {
                std::string label = "f=" + std::to_string(f) + " r=" + std::to_string(r);
                add(name, label, [f, r, s = seed_for(name, "f=" + std::to_string(f) +
                                                                     " r=" + std::to_string(r))]() {
                    Params P = make_params(3, f);
                    std::mt19937_64 rng(s);
                    for (int t = 0; t < 100; ++t) {
                        auto prof = random_profile(rng, ProfileKind::reducible, f, 3, r);
                        i64 m = 0;
                        try {
                            m = profile_p0_multiplicity(prof, P);
                        } catch (const invariant_error& e) {
                            return fail_item(e.what());
                        }
                        if (m != soc_length(prof, P))
                            return fail_item("distinguished-prime multiplicity != socle length");
                    }
                    return pass_item();
                });
            }
        }
    }
};

std::vector<CheckOutcome> aggregate(const std::vector<Task>& tasks,
                                    const std::vector<ItemResult>& results) {
    std::vector<CheckOutcome> outcomes;
    std::map<std::string, size_t> index;
    for (size_t i = 0; i < tasks.size(); ++i) {
        auto it = index.find(tasks[i].check);
        if (it == index.end()) {
            index.emplace(tasks[i].check, outcomes.size());
            outcomes.push_back(CheckOutcome{tasks[i].check, true, 0, ""});
            it = index.find(tasks[i].check);
        }
        CheckOutcome& c = outcomes[it->second];
        ++c.items;
        if (!results[i].pass && c.pass) {
            c.pass = false;
            c.witness = "[" + tasks[i].item + "] " + results[i].witness;
        }
    }
    return outcomes;
}

ItemResult run_guarded(const Task& t) {
    try {
        return t.run();
    } catch (const std::exception& e) {
        return ItemResult{false, std::string("exception: ") + e.what()};
    }
}

} // namespace

std::vector<Task> build_suite(const Options& opt) {
    SuiteBuilder b{opt, {}};
    b.weights_char_injective();
    b.weights_boundary_collision();
    b.weights_involutions();
    b.weights_generic_count();
    b.weights_thresholds();
    b.tuples_families();
    b.tuples_twist_properties();
    b.diagram_weightsets();
    b.diagram_jh();
    b.diagram_profiles();
    b.lattice_subspaces();
    b.lattice_profiles();
    b.lattice_chains();
    b.lattice_headline_bounds();
    b.cycles_mult();
    b.cycles_profile_bridge();
    return std::move(b.tasks);
}

std::vector<CheckOutcome> run_serial(const std::vector<Task>& tasks) {
    std::vector<ItemResult> results(tasks.size());
    for (size_t i = 0; i < tasks.size(); ++i)
        results[i] = run_guarded(tasks[i]);
    return aggregate(tasks, results);
}

std::vector<CheckOutcome> run_parallel(const std::vector<Task>& tasks, int threads) {
    std::vector<ItemResult> results(tasks.size());
#ifdef GL2_HAVE_OPENMP
    if (threads > 0)
        omp_set_num_threads(threads);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(tasks.size()); ++i)
        results[static_cast<size_t>(i)] = run_guarded(tasks[static_cast<size_t>(i)]);
#else
    (void)threads;
    for (size_t i = 0; i < tasks.size(); ++i)
        results[i] = run_guarded(tasks[i]);
#endif
    return aggregate(tasks, results);
}

Report make_report(const Options& opt, const std::vector<CheckOutcome>& outcomes) {
    Report rep;
    rep.command = "verify";
    rep.params["f_max"] = opt.f_max;
    rep.params["p_max"] = opt.p_max;
    rep.params["seed"] = opt.seed;
    rep.params["trials"] = opt.trials;
    i64 items = 0;
    i64 failed = 0;
    for (const auto& c : outcomes) {
        rep.add_check(c.name, c.pass, c.witness);
        items += c.items;
        if (!c.pass)
            ++failed;
    }
    rep.results["checks_failed"] = failed;
    rep.results["checks_total"] = static_cast<i64>(outcomes.size());
    rep.results["items_total"] = items;
    return rep;
}

} // namespace gl2::sweep
