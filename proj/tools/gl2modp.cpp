#include <functional>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "gl2/oracles.hpp"
#include "gl2/report.hpp"
#include "gl2/sweep.hpp"

using namespace gl2;

namespace {

std::vector<i64> parse_i64_list(const std::string& csv, const std::string& field) {
    std::vector<i64> out;
    size_t start = 0;
    while (start <= csv.size()) {
        size_t comma = csv.find(',', start);
        std::string tok =
            comma == std::string::npos ? csv.substr(start) : csv.substr(start, comma - start);
        try {
            out.push_back(std::stoll(tok));
        } catch (const std::exception&) {
            throw validation_error(field + ": bad integer '" + tok + "'");
        }
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return out;
}

InertialKind parse_inertial_kind(const std::string& s) {
    if (s == "reducible-split")
        return InertialKind::reducible_split;
    if (s == "irreducible")
        return InertialKind::irreducible;
    throw validation_error("kind: expected reducible-split or irreducible, got '" + s + "'");
}

ProfileKind parse_profile_kind(const std::string& s) {
    if (s == "reducible")
        return ProfileKind::reducible;
    if (s == "irreducible")
        return ProfileKind::irreducible;
    throw validation_error("kind: expected reducible or irreducible, got '" + s + "'");
}

Json tuple_listing(const std::vector<AffineTuple>& ts, const Params& P) {
    Json arr = Json::array();
    for (const auto& t : ts)
        arr.push_back(to_string(t, P));
    return arr;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact combinatorics of mod-p principal-series and weight-set invariants "
                 "for GL2 over an unramified p-adic field"};
    app.require_subcommand(1);

    std::function<Report()> action;

    // Shared flag storage.
    i64 p = 29, f = 1, n = 0, r = 1, c = 3, twist = 0, trials = 1000;
    u64 seed = 20260810;
    std::string digits_csv, r_digits_csv, tuple_csv, r_csv, dims_csv, dims1_csv, dims2_csv;
    std::string kind_str = "reducible-split", pkind_str = "reducible";
    std::string statement_str, ideal_str, prime_str, summands_str, layers_str;
    i64 window_digit = -1;
    i64 p_max = 31, f_max = 4;
    int threads = 0;
    bool serial = false;

    // ---- weights ----
    auto* weights_cmd = app.add_subcommand("weights", "Serre weights and torus characters");
    weights_cmd->require_subcommand(1);

    auto* w_char = weights_cmd->add_subcommand("char", "character of a weight");
    w_char->add_option("--p", p)->required();
    w_char->add_option("--f", f)->required();
    w_char->add_option("--digits", digits_csv)->required();
    w_char->add_option("--twist", twist);
    w_char->callback([&]() {
        action = [&]() {
            Params P = make_params(p, f);
            SerreWeight w{parse_i64_list(digits_csv, "digits"), twist};
            ToralCharacter chi = char_of_weight(w, P);
            Report rep;
            rep.command = "weights.char";
            rep.params = {{"digits", w.digits}, {"f", f}, {"p", p}, {"twist", w.twist}};
            rep.results["character"] = to_json(chi);
            rep.results["swapped"] = to_json(conj_s(chi));
            return rep;
        };
    });

    auto* w_s = weights_cmd->add_subcommand("s", "involution partner of a weight");
    w_s->add_option("--p", p)->required();
    w_s->add_option("--f", f)->required();
    w_s->add_option("--digits", digits_csv)->required();
    w_s->add_option("--twist", twist);
    w_s->callback([&]() {
        action = [&]() {
            Params P = make_params(p, f);
            SerreWeight w{parse_i64_list(digits_csv, "digits"), twist};
            SerreWeight partner = weight_s(w, P);
            Report rep;
            rep.command = "weights.s";
            rep.params = {{"digits", w.digits}, {"f", f}, {"p", p}, {"twist", w.twist}};
            rep.results["partner"] = to_json(partner);
            rep.results["partner_character"] = to_json(char_of_weight(partner, P));
            rep.add_check("weights.involution_roundtrip", weight_s(partner, P) == w);
            rep.add_check("weights.partner_matches_search",
                          oracle::weight_s_bruteforce(w, P) == partner);
            return rep;
        };
    });

    auto* w_gen = weights_cmd->add_subcommand("generic", "genericity predicates");
    w_gen->add_option("--p", p)->required();
    w_gen->add_option("--f", f)->required();
    w_gen->add_option("--digits", digits_csv)->required();
    w_gen->add_option("--n", n)->required();
    w_gen->add_option("--twist", twist);
    bool inertial = false;
    w_gen->add_flag("--inertial", inertial, "treat digits as inertial data");
    w_gen->add_option("--kind", kind_str, "reducible-split | irreducible");
    w_gen->callback([&]() {
        action = [&]() {
            Params P = make_params(p, f);
            auto digits = parse_i64_list(digits_csv, "digits");
            Report rep;
            rep.command = "weights.generic";
            rep.params = {{"digits", digits}, {"f", f}, {"n", n}, {"p", p}};
            if (inertial) {
                InertialData rho{digits, parse_inertial_kind(kind_str), twist};
                rep.params["kind"] = kind_str;
                rep.results["generic"] = is_inertial_generic(rho, n, P);
            } else {
                SerreWeight w{digits, twist};
                validate_weight(w, P);
                rep.results["generic"] = is_weight_generic(w, n, P);
            }
            return rep;
        };
    });

    auto* w_thr = weights_cmd->add_subcommand("thresholds", "genericity threshold table");
    w_thr->add_option("--f", f)->required();
    w_thr->add_option("--p", p);
    w_thr->add_option("--statement", statement_str, "restrict to one statement");
    w_thr->add_option("--digit", window_digit, "test a digit against the global window");
    w_thr->callback([&]() {
        action = [&]() {
            Params P = make_params(p, f);
            Report rep;
            rep.command = "weights.thresholds";
            rep.params = {{"f", f}, {"p", p}};
            Json table = Json::object();
            if (statement_str.empty()) {
                for (Statement s : all_statements())
                    table[statement_name(s)] = required_genericity(s, P);
            } else {
                Statement s = parse_statement(statement_str);
                table[statement_name(s)] = required_genericity(s, P);
                rep.params["statement"] = statement_str;
            }
            rep.results["table"] = table;
            Window w = global_genericity_window(P);
            rep.results["window"] = {{"hi_exclusive", w.hi}, {"lo_exclusive", w.lo}};
            if (window_digit >= 0) {
                rep.params["digit"] = window_digit;
                rep.results["digit_in_window"] = w.contains(window_digit);
            }
            rep.add_check("weights.threshold_order",
                          required_genericity(Statement::global_finite_length, P) >=
                                  required_genericity(Statement::finite_length, P) &&
                              required_genericity(Statement::finite_length, P) >=
                                  required_genericity(Statement::graded_presentation, P));
            return rep;
        };
    });

    // ---- tuples ----
    auto* tuples_cmd = app.add_subcommand("tuples", "affine tuple families");
    tuples_cmd->require_subcommand(1);

    auto add_family_cmd = [&](const char* sub, const char* help, bool weight_family) {
        auto* cmd = tuples_cmd->add_subcommand(sub, help);
        cmd->add_option("--p", p)->required();
        cmd->add_option("--f", f)->required();
        cmd->callback([&, weight_family]() {
            action = [&, weight_family]() {
                Params P = make_params(p, f);
                auto ts = weight_family ? enumerate_D(P) : enumerate_P_ind(P);
                Report rep;
                rep.command = weight_family ? "tuples.list-D" : "tuples.list-P";
                rep.params = {{"f", f}, {"p", p}};
                rep.results["count"] = static_cast<i64>(ts.size());
                rep.results["tuples"] = tuple_listing(ts, P);
                Json lengths = Json::array();
                for (const auto& t : ts)
                    lengths.push_back(tuple_length(t, P));
                rep.results["lengths"] = lengths;
                rep.add_check("tuples.family_counts",
                              static_cast<i64>(ts.size()) == checked_pow(2, f));
                return rep;
            };
        });
    };
    add_family_cmd("list-D", "weight-set tuple family", true);
    add_family_cmd("list-P", "principal-series tuple family", false);

    auto* t_e = tuples_cmd->add_subcommand("e", "determinant twist of a tuple");
    t_e->add_option("--p", p)->required();
    t_e->add_option("--f", f)->required();
    t_e->add_option("--tuple", tuple_csv)->required();
    t_e->add_option("--r", r_csv)->required();
    t_e->callback([&]() {
        action = [&]() {
            Params P = make_params(p, f);
            AffineTuple t = parse_tuple(tuple_csv, P);
            auto rv = parse_i64_list(r_csv, "r");
            Report rep;
            rep.command = "tuples.e";
            rep.params = {{"f", f}, {"p", p}, {"r", rv}, {"tuple", to_string(t, P)}};
            rep.results["e_twist"] = e_twist(t, rv, P);
            return rep;
        };
    });

    auto* t_w = tuples_cmd->add_subcommand("weight", "weight attached to a tuple");
    t_w->add_option("--p", p)->required();
    t_w->add_option("--f", f)->required();
    t_w->add_option("--tuple", tuple_csv)->required();
    t_w->add_option("--r", r_csv)->required();
    t_w->callback([&]() {
        action = [&]() {
            Params P = make_params(p, f);
            AffineTuple t = parse_tuple(tuple_csv, P);
            auto rv = parse_i64_list(r_csv, "r");
            Report rep;
            rep.command = "tuples.weight";
            rep.params = {{"f", f}, {"p", p}, {"r", rv}, {"tuple", to_string(t, P)}};
            rep.results["weight"] = to_json(weight_of_tuple(t, rv, P));
            return rep;
        };
    });

    auto* t_int = tuples_cmd->add_subcommand("intersection", "family intersection check");
    t_int->add_option("--p", p)->required();
    t_int->add_option("--f", f)->required();
    t_int->callback([&]() {
        action = [&]() {
            Params P = make_params(p, f);
            Report rep;
            rep.command = "tuples.intersection";
            rep.params = {{"f", f}, {"p", p}};
            bool ok = check_intersection(P);
            rep.results["witness"] = to_string(identity_tuple(f), P);
            rep.add_check("tuples.intersection_identity", ok,
                          ok ? "" : "intersection differs from {identity}");
            return rep;
        };
    });

    // ---- diagram ----
    auto* diagram_cmd = app.add_subcommand("diagram", "weight sets and constituents");
    diagram_cmd->require_subcommand(1);

    auto* d_w = diagram_cmd->add_subcommand("weights", "weight set of inertial data");
    d_w->add_option("--p", p)->required();
    d_w->add_option("--f", f)->required();
    d_w->add_option("--r-digits", r_digits_csv)->required();
    d_w->add_option("--kind", kind_str);
    d_w->callback([&]() {
        action = [&]() {
            Params P = make_params(p, f);
            InertialData rho{parse_i64_list(r_digits_csv, "r-digits"),
                             parse_inertial_kind(kind_str), 0};
            WeightSet W = serre_weights(rho, P);
            Report rep;
            rep.command = "diagram.weights";
            rep.params = {{"f", f}, {"kind", kind_str}, {"p", p}, {"r_digits", rho.digits}};
            Json entries = Json::array();
            for (size_t i = 0; i < W.size(); ++i) {
                Json e;
                e["length"] = W.lengths[i];
                e["tuple"] = to_string(W.tuples[i], P);
                e["weight"] = to_json(W.weights[i]);
                entries.push_back(e);
            }
            rep.results["entries"] = entries;
            Json by_len = Json::object();
            bool sizes_ok = true;
            for (i64 l = 0; l <= f; ++l) {
                i64 count = static_cast<i64>(W.by_length(l).size());
                by_len[std::to_string(l)] = count;
                sizes_ok = sizes_ok && count == binomial(f, l);
            }
            rep.results["by_length"] = by_len;
            rep.add_check("diagram.weightset_shape",
                          sizes_ok && static_cast<i64>(W.size()) == checked_pow(2, f));
            rep.add_check("diagram.char_injectivity", char_injectivity_check(W, P));
            return rep;
        };
    });

    auto* d_jh = diagram_cmd->add_subcommand("jh", "principal-series constituents");
    d_jh->add_option("--p", p)->required();
    d_jh->add_option("--f", f)->required();
    d_jh->add_option("--digits", digits_csv)->required();
    d_jh->add_option("--twist", twist);
    d_jh->add_option("--r-digits", r_digits_csv, "intersect with this weight set");
    d_jh->callback([&]() {
        action = [&]() {
            Params P = make_params(p, f);
            SerreWeight s0{parse_i64_list(digits_csv, "digits"), twist};
            auto jh = jh_principal_series(s0, P);
            Report rep;
            rep.command = "diagram.jh";
            rep.params = {{"digits", s0.digits}, {"f", f}, {"p", p}, {"twist", s0.twist}};
            Json arr = Json::array();
            for (const auto& w : jh)
                arr.push_back(to_json(w));
            rep.results["constituents"] = arr;
            rep.results["count"] = static_cast<i64>(jh.size());
            std::set<SerreWeight> distinct(jh.begin(), jh.end());
            rep.add_check("diagram.jh_count",
                          static_cast<i64>(distinct.size()) == checked_pow(2, f) &&
                              distinct.count(s0) == 1);
            if (!r_digits_csv.empty()) {
                InertialData rho{parse_i64_list(r_digits_csv, "r-digits"),
                                 InertialKind::reducible_split, 0};
                rep.params["r_digits"] = rho.digits;
                WeightSet W = serre_weights(rho, P);
                auto meet = jh_meets_weightset(s0, W, P);
                Json marr = Json::array();
                for (const auto& w : meet)
                    marr.push_back(to_json(w));
                rep.results["meet"] = marr;
                rep.add_check("diagram.jh_meets_singleton",
                              meet.size() == 1 && meet.front() == s0);
            }
            return rep;
        };
    });

    auto* d_prof = diagram_cmd->add_subcommand("profile", "hypothesis profile counts");
    d_prof->add_option("--f", f)->required();
    d_prof->add_option("--r", r)->required();
    d_prof->add_option("--p", p);
    d_prof->add_option("--kind", pkind_str);
    d_prof->callback([&]() {
        action = [&]() {
            Params P = make_params(p, f);
            HypothesisProfile h = hypothesis_profile(r, P, parse_profile_kind(pkind_str));
            Report rep;
            rep.command = "diagram.profile";
            rep.params = {{"f", f}, {"kind", pkind_str}, {"p", p}, {"r", r}};
            rep.results["ext_dims"] = h.ext_dims;
            rep.results["ext_total"] = h.ext_total;
            rep.results["socle_length"] = h.socle_length;
            rep.results["torsion_char_multiplicity"] = h.torsion_char_multiplicity;
            bool symmetric = true;
            for (i64 i = 0; i <= 2 * f; ++i)
                symmetric = symmetric && h.ext_dims[static_cast<size_t>(i)] ==
                                             h.ext_dims[static_cast<size_t>(2 * f - i)];
            rep.add_check("diagram.ext_symmetry", symmetric);
            rep.add_check("diagram.ext_total", h.ext_total == checked_pow(4, f) * r);
            return rep;
        };
    });

    // ---- lattice ----
    auto* lattice_cmd = app.add_subcommand("lattice", "subspace profiles");
    lattice_cmd->require_subcommand(1);

    auto add_profile_opts = [&](CLI::App* cmd) {
        cmd->add_option("--f", f)->required();
        cmd->add_option("--r", r, "ambient dimension (multiplicity)")->required();
        cmd->add_option("--c", c, "coefficient field size");
        cmd->add_option("--p", p);
        cmd->add_option("--kind", pkind_str);
    };

    auto* l_soc = lattice_cmd->add_subcommand("soc", "socle length of a profile");
    add_profile_opts(l_soc);
    l_soc->add_option("--dims", dims_csv)->required();
    l_soc->callback([&]() {
        action = [&]() {
            Params P = make_params(p, f);
            auto prof = SubrepProfile::from_dims(parse_profile_kind(pkind_str), f, c, r,
                                                 parse_i64_list(dims_csv, "dims"));
            Report rep;
            rep.command = "lattice.soc";
            rep.params = {{"c", c}, {"dims", prof.dims()}, {"f", f},
                          {"kind", pkind_str}, {"p", p}, {"r", r}};
            rep.results["socle_length"] = soc_length(prof, P);
            rep.results["phi_gamma_dim"] = phi_gamma_dim(prof, P);
            return rep;
        };
    });

    auto* l_bound = lattice_cmd->add_subcommand("bound", "length bound between profiles");
    add_profile_opts(l_bound);
    l_bound->add_option("--dims2", dims2_csv, "outer profile dims")->required();
    l_bound->add_option("--dims1", dims1_csv, "inner profile dims")->required();
    l_bound->callback([&]() {
        action = [&]() {
            Params P = make_params(p, f);
            auto kind = parse_profile_kind(pkind_str);
            auto outer = SubrepProfile::from_dims(kind, f, c, r, parse_i64_list(dims2_csv, "dims2"));
            auto inner = SubrepProfile::from_dims(kind, f, c, r, parse_i64_list(dims1_csv, "dims1"));
            Report rep;
            rep.command = "lattice.bound";
            rep.params = {{"c", c}, {"dims1", inner.dims()}, {"dims2", outer.dims()},
                          {"f", f}, {"kind", pkind_str}, {"p", p}, {"r", r}};
            rep.results["bound"] = length_bound(outer, inner, P);
            return rep;
        };
    });

    auto* l_quot = lattice_cmd->add_subcommand("quotient", "quotient profile");
    add_profile_opts(l_quot);
    l_quot->add_option("--dims2", dims2_csv)->required();
    l_quot->add_option("--dims1", dims1_csv)->required();
    l_quot->callback([&]() {
        action = [&]() {
            Params P = make_params(p, f);
            auto kind = parse_profile_kind(pkind_str);
            auto outer = SubrepProfile::from_dims(kind, f, c, r, parse_i64_list(dims2_csv, "dims2"));
            auto inner = SubrepProfile::from_dims(kind, f, c, r, parse_i64_list(dims1_csv, "dims1"));
            auto q = quotient_profile(outer, inner);
            Report rep;
            rep.command = "lattice.quotient";
            rep.params = {{"c", c}, {"dims1", inner.dims()}, {"dims2", outer.dims()},
                          {"f", f}, {"kind", pkind_str}, {"p", p}, {"r", r}};
            rep.results["profile"] = to_json(q);
            rep.results["socle_length"] = soc_length(q, P);
            rep.add_check("lattice.soc_additivity", socle_additivity_check(outer, inner, P));
            return rep;
        };
    });

    auto* l_chains = lattice_cmd->add_subcommand("chains", "strict chain length bounds");
    l_chains->add_option("--f", f)->required();
    l_chains->add_option("--r", r)->required();
    l_chains->add_option("--c", c);
    l_chains->add_option("--p", p);
    l_chains->add_option("--trials", trials);
    l_chains->add_option("--seed", seed);
    l_chains->callback([&]() {
        action = [&]() {
            Params P = make_params(p, f);
            bool ok = max_chain_check(P, r, c, trials, seed);
            Report rep;
            rep.command = "lattice.chains";
            rep.params = {{"c", c}, {"f", f}, {"p", p}, {"r", r},
                          {"seed", seed}, {"trials", trials}};
            rep.add_check("lattice.chain_bounds", ok,
                          ok ? "" : "a strict chain violated the dimension-gap bound");
            return rep;
        };
    });

    auto* l_ps = lattice_cmd->add_subcommand("ps-split", "principal-series decomposition shape");
    l_ps->add_option("--f", f)->required();
    l_ps->add_option("--r", r)->required();
    l_ps->add_option("--c", c);
    l_ps->add_option("--p", p);
    l_ps->callback([&]() {
        action = [&]() {
            Params P = make_params(p, f);
            auto full = SubrepProfile::full(ProfileKind::reducible, f, c, r);
            auto dec = ps_decomposition(full, r, P);
            Report rep;
            rep.command = "lattice.ps-split";
            rep.params = {{"c", c}, {"f", f}, {"p", p}, {"r", r}};
            rep.results["multiplicity"] = dec.multiplicity;
            rep.results["remainder_dims"] = dec.remainder.dims();
            rep.results["remainder_bound"] = dec.remainder_bound;
            rep.results["remainder_socle_length"] = dec.remainder_socle;
            rep.add_check("lattice.remainder_consistency",
                          soc_length(dec.remainder, P) == dec.remainder_socle &&
                              length_bound(dec.remainder,
                                           SubrepProfile::zero(ProfileKind::reducible, f, c, r),
                                           P) == dec.remainder_bound);
            return rep;
        };
    });

    // ---- cycles ----
    auto* cycles_cmd = app.add_subcommand("cycles", "monomial multiplicities and cycles");
    cycles_cmd->require_subcommand(1);

    auto* c_primes = cycles_cmd->add_subcommand("primes", "minimal primes");
    c_primes->add_option("--f", f)->required();
    c_primes->add_option("--p", p);
    c_primes->callback([&]() {
        action = [&]() {
            Params P = make_params(p, f);
            Report rep;
            rep.command = "cycles.primes";
            rep.params = {{"f", f}, {"p", p}};
            Json arr = Json::array();
            for (const auto& q : minimal_primes(P))
                arr.push_back(to_string(q));
            rep.results["primes"] = arr;
            rep.results["count"] = checked_pow(2, f);
            rep.results["distinguished"] = to_string(distinguished_prime(P));
            return rep;
        };
    });

    auto* c_mult = cycles_cmd->add_subcommand("mult", "multiplicity of a cyclic module");
    c_mult->add_option("--f", f)->required();
    c_mult->add_option("--ideal", ideal_str, "e.g. 'y0*z1^2,z0' or '0'")->required();
    c_mult->add_option("--prime", prime_str, "e.g. 'z0,y1'")->required();
    c_mult->add_option("--p", p);
    c_mult->callback([&]() {
        action = [&]() {
            Params P = make_params(p, f);
            MonomialIdeal I = parse_ideal(ideal_str, P);
            MinimalPrime q = parse_prime(prime_str, P);
            Report rep;
            rep.command = "cycles.mult";
            rep.params = {{"f", f}, {"ideal", ideal_str}, {"p", p}, {"prime", to_string(q)}};
            rep.results["mult"] = mult_at_prime(I, q);
            rep.add_check("cycles.mult_matches_saturation",
                          mult_at_prime(I, q) == oracle::mult_at_prime_saturation(I, q));
            return rep;
        };
    });

    auto* c_cycle = cycles_cmd->add_subcommand("cycle", "characteristic cycle of a module");
    c_cycle->add_option("--f", f)->required();
    c_cycle->add_option("--summands", summands_str, "'ideal@mult;ideal@mult;...'");
    c_cycle->add_option("--layers", layers_str, "filtration layers 'summands|summands|...'");
    c_cycle->add_option("--p", p);
    c_cycle->callback([&]() {
        action = [&]() {
            Params P = make_params(p, f);
            auto parse_summands = [&](const std::string& text) {
                ModuleSpec N;
                if (text.empty())
                    return N;
                size_t start = 0;
                while (start <= text.size()) {
                    size_t semi = text.find(';', start);
                    std::string tok = semi == std::string::npos ? text.substr(start)
                                                                : text.substr(start, semi - start);
                    size_t at = tok.find('@');
                    std::string ideal_part = at == std::string::npos ? tok : tok.substr(0, at);
                    i64 mult = 1;
                    if (at != std::string::npos) {
                        try {
                            mult = std::stoll(tok.substr(at + 1));
                        } catch (const std::exception&) {
                            throw validation_error("summand '" + tok + "': bad multiplicity");
                        }
                    }
                    if (mult < 1)
                        throw validation_error("summand '" + tok + "': multiplicity must be >= 1");
                    N.summands.push_back({parse_ideal(ideal_part, P), mult, ""});
                    if (semi == std::string::npos)
                        break;
                    start = semi + 1;
                }
                return N;
            };
            ModuleSpec N;
            if (!layers_str.empty()) {
                size_t start = 0;
                while (start <= layers_str.size()) {
                    size_t bar = layers_str.find('|', start);
                    std::string tok = bar == std::string::npos
                                          ? layers_str.substr(start)
                                          : layers_str.substr(start, bar - start);
                    N.filtration.push_back(parse_summands(tok));
                    if (bar == std::string::npos)
                        break;
                    start = bar + 1;
                }
            } else {
                N = parse_summands(summands_str);
            }
            CycleVector z = char_cycle(N, P);
            Report rep;
            rep.command = "cycles.cycle";
            rep.params = {{"f", f}, {"p", p}};
            if (!summands_str.empty())
                rep.params["summands"] = summands_str;
            if (!layers_str.empty())
                rep.params["layers"] = layers_str;
            rep.results["cycle"] = to_json(z);
            rep.results["total"] = z.total();
            return rep;
        };
    });

    // ---- verify ----
    auto* verify_cmd = app.add_subcommand("verify", "run the full invariant sweep");
    verify_cmd->add_option("--p-max", p_max);
    verify_cmd->add_option("--f-max", f_max);
    verify_cmd->add_option("--trials", trials);
    verify_cmd->add_option("--seed", seed);
    verify_cmd->add_option("--threads", threads, "OpenMP thread count (0 = default)");
    verify_cmd->add_flag("--serial", serial, "use the serial reference runner");
    verify_cmd->callback([&]() {
        action = [&]() {
            sweep::Options opt;
            opt.p_max = p_max;
            opt.f_max = f_max;
            opt.trials = trials;
            opt.seed = seed;
            auto tasks = sweep::build_suite(opt);
            auto outcomes =
                serial ? sweep::run_serial(tasks) : sweep::run_parallel(tasks, threads);
            return sweep::make_report(opt, outcomes);
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            return app.exit(e);
        }
        std::cerr << e.what() << "\n" << app.help() << "\n";
        return 1;
    }

    try {
        Report rep = action();
        std::cout << rep.serialize();
        return rep.exit_code();
    } catch (const invariant_error& e) {
        std::cerr << "invariant falsified: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
