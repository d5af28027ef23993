#include "gl2/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace gl2 {

namespace {

i64 inv_mod(i64 a, i64 c) {
    // c is a small prime; Fermat.
    i64 r = 1;
    i64 b = a % c;
    i64 e = c - 2;
    while (e) {
        if (e & 1)
            r = r * b % c;
        b = b * b % c;
        e >>= 1;
    }
    return r;
}

// In-place reduced row echelon form; returns the rank.
size_t rref(std::vector<std::vector<i64>>& m, i64 c) {
    size_t rows = m.size();
    if (rows == 0)
        return 0;
    size_t cols = m[0].size();
    size_t pivot_row = 0;
    for (size_t col = 0; col < cols && pivot_row < rows; ++col) {
        size_t sel = pivot_row;
        while (sel < rows && m[sel][col] % c == 0)
            ++sel;
        if (sel == rows)
            continue;
        std::swap(m[pivot_row], m[sel]);
        i64 inv = inv_mod(mod_reduce(m[pivot_row][col], c), c);
        for (size_t j = 0; j < cols; ++j)
            m[pivot_row][j] = mod_reduce(m[pivot_row][j] * inv, c);
        for (size_t i = 0; i < rows; ++i) {
            if (i == pivot_row)
                continue;
            i64 factor = mod_reduce(m[i][col], c);
            if (factor == 0)
                continue;
            for (size_t j = 0; j < cols; ++j)
                m[i][j] = mod_reduce(m[i][j] - factor * m[pivot_row][j], c);
        }
        ++pivot_row;
    }
    m.resize(pivot_row);
    return pivot_row;
}

void check_field(i64 c) {
    if (c < 2 || c > 251 || !is_prime_u64(static_cast<u64>(c)))
        throw validation_error("c: field size must be a prime in [2, 251], got " +
                               std::to_string(c));
}

void check_same_ambient(const Subspace& A, const Subspace& B) {
    if (A.field() != B.field())
        throw validation_error("subspaces live over different fields");
    if (A.ambient() != B.ambient())
        throw validation_error("ambient mismatch: " + std::to_string(A.ambient()) + " vs " +
                               std::to_string(B.ambient()));
}

} // namespace

Subspace Subspace::zero(i64 c, i64 ambient) {
    check_field(c);
    if (ambient < 0)
        throw validation_error("ambient: must be >= 0");
    return Subspace(c, ambient);
}

Subspace Subspace::full(i64 c, i64 ambient) {
    return standard_prefix(c, ambient, ambient);
}

Subspace Subspace::standard_prefix(i64 c, i64 ambient, i64 k) {
    Subspace s = zero(c, ambient);
    if (k < 0 || k > ambient)
        throw validation_error("dim: " + std::to_string(k) + " outside [0, ambient]");
    for (i64 i = 0; i < k; ++i) {
        std::vector<i64> row(static_cast<size_t>(ambient), 0);
        row[static_cast<size_t>(i)] = 1;
        s.rows_.push_back(std::move(row));
    }
    return s;
}

Subspace Subspace::span_of(i64 c, i64 ambient, std::vector<std::vector<i64>> rows) {
    Subspace s = zero(c, ambient);
    for (auto& r : rows) {
        if (static_cast<i64>(r.size()) != ambient)
            throw validation_error("row length does not match ambient dimension");
        for (auto& x : r)
            x = mod_reduce(x, c);
    }
    rref(rows, c);
    s.rows_ = std::move(rows);
    return s;
}

bool Subspace::contains_vector(const std::vector<i64>& v) const {
    if (static_cast<i64>(v.size()) != ambient_)
        throw validation_error("vector length does not match ambient dimension");
    std::vector<i64> w = v;
    for (auto& x : w)
        x = mod_reduce(x, c_);
    // Reduce by the echelon basis; membership iff reduction is zero.
    for (const auto& row : rows_) {
        size_t pivot = 0;
        while (pivot < row.size() && row[pivot] == 0)
            ++pivot;
        if (pivot == row.size())
            continue;
        i64 coef = w[pivot];
        if (coef == 0)
            continue;
        for (size_t j = 0; j < w.size(); ++j)
            w[j] = mod_reduce(w[j] - coef * row[j], c_);
    }
    return std::all_of(w.begin(), w.end(), [](i64 x) { return x == 0; });
}

bool Subspace::contains(const Subspace& other) const {
    check_same_ambient(*this, other);
    return std::all_of(other.rows_.begin(), other.rows_.end(),
                       [&](const auto& r) { return contains_vector(r); });
}

SubspaceAlgebra subspace_algebra(const Subspace& A, const Subspace& B) {
    check_same_ambient(A, B);
    const i64 c = A.field();
    const i64 n = A.ambient();
    // Zassenhaus block matrix: rows [a|a] for a in A, [b|0] for b in B.
    std::vector<std::vector<i64>> block;
    for (const auto& a : A.basis()) {
        std::vector<i64> row(a);
        row.insert(row.end(), a.begin(), a.end());
        block.push_back(std::move(row));
    }
    for (const auto& b : B.basis()) {
        std::vector<i64> row(b);
        row.resize(static_cast<size_t>(2 * n), 0);
        block.push_back(std::move(row));
    }
    rref(block, c);
    std::vector<std::vector<i64>> sum_rows;
    std::vector<std::vector<i64>> meet_rows;
    for (const auto& row : block) {
        bool left_zero = std::all_of(row.begin(), row.begin() + n, [](i64 x) { return x == 0; });
        if (left_zero)
            meet_rows.emplace_back(row.begin() + n, row.end());
        else
            sum_rows.emplace_back(row.begin(), row.begin() + n);
    }
    SubspaceAlgebra out{Subspace::span_of(c, n, std::move(sum_rows)),
                        Subspace::span_of(c, n, std::move(meet_rows)),
                        {}};
    out.dims = {A.dim(), B.dim(), out.sum.dim(), out.intersection.dim()};
    return out;
}

SubrepProfile SubrepProfile::zero(ProfileKind kind, i64 f, i64 c, i64 ambient) {
    SubrepProfile p;
    p.kind = kind;
    i64 n = kind == ProfileKind::reducible ? f + 1 : 1;
    for (i64 i = 0; i < n; ++i)
        p.spaces.push_back(Subspace::zero(c, ambient));
    return p;
}

SubrepProfile SubrepProfile::full(ProfileKind kind, i64 f, i64 c, i64 ambient) {
    SubrepProfile p = zero(kind, f, c, ambient);
    for (auto& s : p.spaces)
        s = Subspace::full(c, ambient);
    return p;
}

SubrepProfile SubrepProfile::from_dims(ProfileKind kind, i64 f, i64 c, i64 ambient,
                                       const std::vector<i64>& dims) {
    SubrepProfile p = zero(kind, f, c, ambient);
    if (dims.size() != p.spaces.size())
        throw validation_error("dims: expected " + std::to_string(p.spaces.size()) +
                               " entries, got " + std::to_string(dims.size()));
    for (size_t i = 0; i < dims.size(); ++i)
        p.spaces[i] = Subspace::standard_prefix(c, ambient, dims[i]);
    return p;
}

std::vector<i64> SubrepProfile::dims() const {
    std::vector<i64> d;
    d.reserve(spaces.size());
    for (const auto& s : spaces)
        d.push_back(s.dim());
    return d;
}

void validate_profile(const SubrepProfile& prof, const Params& P) {
    size_t expect = prof.kind == ProfileKind::reducible ? static_cast<size_t>(P.f) + 1 : 1;
    if (prof.spaces.size() != expect)
        throw validation_error("profile: expected " + std::to_string(expect) + " spaces, got " +
                               std::to_string(prof.spaces.size()));
    for (const auto& s : prof.spaces) {
        if (s.ambient() != prof.spaces.front().ambient() ||
            s.field() != prof.spaces.front().field())
            throw validation_error("profile: all spaces must share one ambient and field");
    }
}

std::optional<size_t> containment_violation(const SubrepProfile& outer,
                                            const SubrepProfile& inner) {
    if (outer.kind != inner.kind || outer.spaces.size() != inner.spaces.size())
        throw validation_error("profiles have different shapes");
    for (size_t l = 0; l < outer.spaces.size(); ++l)
        if (!outer.spaces[l].contains(inner.spaces[l]))
            return l;
    return std::nullopt;
}

i64 soc_length(const SubrepProfile& prof, const Params& P) {
    validate_profile(prof, P);
    if (prof.kind == ProfileKind::irreducible)
        return prof.spaces.front().dim() * checked_pow(2, P.f);
    i64 total = 0;
    for (size_t l = 0; l < prof.spaces.size(); ++l)
        total += prof.spaces[l].dim() * binomial(P.f, static_cast<i64>(l));
    return total;
}

i64 phi_gamma_dim(const SubrepProfile& prof, const Params& P) {
    return soc_length(prof, P);
}

i64 length_bound(const SubrepProfile& outer, const SubrepProfile& inner, const Params& P) {
    validate_profile(outer, P);
    validate_profile(inner, P);
    if (auto l = containment_violation(outer, inner))
        throw validation_error("containment violation at length " + std::to_string(*l));
    i64 total = 0;
    for (size_t l = 0; l < outer.spaces.size(); ++l)
        total += outer.spaces[l].dim() - inner.spaces[l].dim();
    return total;
}

SubrepProfile quotient_profile(const SubrepProfile& outer, const SubrepProfile& inner) {
    if (auto l = containment_violation(outer, inner))
        throw validation_error("containment violation at length " + std::to_string(*l));
    SubrepProfile q;
    q.kind = outer.kind;
    for (size_t l = 0; l < outer.spaces.size(); ++l) {
        const Subspace& O = outer.spaces[l];
        const Subspace& I = inner.spaces[l];
        std::vector<std::vector<i64>> reach = I.basis();
        std::vector<std::vector<i64>> picked;
        for (const auto& b : O.basis()) {
            auto probe = reach;
            probe.push_back(b);
            if (rref(probe, O.field()) > reach.size()) {
                reach = std::move(probe);
                picked.push_back(b);
            }
        }
        q.spaces.push_back(Subspace::span_of(O.field(), O.ambient(), std::move(picked)));
    }
    return q;
}

bool socle_additivity_check(const SubrepProfile& outer, const SubrepProfile& inner,
                            const Params& P) {
    SubrepProfile q = quotient_profile(outer, inner);
    return soc_length(inner, P) + soc_length(q, P) == soc_length(outer, P);
}

std::vector<Subspace> enumerate_subspaces(i64 c, i64 ambient) {
    check_field(c);
    std::vector<Subspace> out;
    std::vector<size_t> pivots;
    // Enumerate echelon bases: choose pivot columns, then fill the free
    // entries (right of a pivot, not in a pivot column).
    auto choose = [&](auto&& self, size_t start, size_t k) -> void {
        if (pivots.size() == k) {
            std::vector<std::vector<i64>> rows(k, std::vector<i64>(static_cast<size_t>(ambient), 0));
            std::vector<std::pair<size_t, size_t>> free_cells;
            for (size_t i = 0; i < k; ++i) {
                rows[i][pivots[i]] = 1;
                for (size_t j = pivots[i] + 1; j < static_cast<size_t>(ambient); ++j)
                    if (std::find(pivots.begin(), pivots.end(), j) == pivots.end())
                        free_cells.emplace_back(i, j);
            }
            u64 combos = 1;
            for (size_t t = 0; t < free_cells.size(); ++t)
                combos *= static_cast<u64>(c);
            for (u64 v = 0; v < combos; ++v) {
                u64 x = v;
                for (auto [i, j] : free_cells) {
                    rows[i][j] = static_cast<i64>(x % static_cast<u64>(c));
                    x /= static_cast<u64>(c);
                }
                out.push_back(Subspace::span_of(c, ambient, rows));
            }
            return;
        }
        for (size_t col = start; col < static_cast<size_t>(ambient); ++col) {
            pivots.push_back(col);
            self(self, col + 1, k);
            pivots.pop_back();
        }
    };
    for (i64 k = 0; k <= ambient; ++k)
        choose(choose, 0, static_cast<size_t>(k));
    return out;
}

std::vector<Subspace> enumerate_between(const Subspace& inner, const Subspace& outer) {
    if (!outer.contains(inner))
        throw validation_error("enumerate_between: inner not contained in outer");
    std::vector<Subspace> out;
    for (const auto& W : enumerate_subspaces(outer.field(), outer.dim())) {
        // Lift coordinates from the outer basis back to the ambient space.
        std::vector<std::vector<i64>> rows = inner.basis();
        for (const auto& coords : W.basis()) {
            std::vector<i64> v(static_cast<size_t>(outer.ambient()), 0);
            for (size_t t = 0; t < coords.size(); ++t)
                for (size_t j = 0; j < v.size(); ++j)
                    v[j] = mod_reduce(v[j] + coords[t] * outer.basis()[t][j], outer.field());
            rows.push_back(std::move(v));
        }
        Subspace s = Subspace::span_of(outer.field(), outer.ambient(), std::move(rows));
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Subspace random_subspace(std::mt19937_64& rng, i64 c, i64 ambient) {
    std::uniform_int_distribution<i64> dim_dist(0, ambient);
    std::uniform_int_distribution<i64> entry(0, c - 1);
    i64 k = dim_dist(rng);
    std::vector<std::vector<i64>> rows(static_cast<size_t>(k),
                                       std::vector<i64>(static_cast<size_t>(ambient)));
    for (auto& row : rows)
        for (auto& x : row)
            x = entry(rng);
    return Subspace::span_of(c, ambient, std::move(rows));
}

Subspace random_subspace_of(std::mt19937_64& rng, const Subspace& outer) {
    std::uniform_int_distribution<i64> dim_dist(0, outer.dim());
    std::uniform_int_distribution<i64> entry(0, outer.field() - 1);
    i64 k = dim_dist(rng);
    std::vector<std::vector<i64>> rows;
    for (i64 t = 0; t < k; ++t) {
        std::vector<i64> v(static_cast<size_t>(outer.ambient()), 0);
        for (const auto& b : outer.basis()) {
            i64 coef = entry(rng);
            for (size_t j = 0; j < v.size(); ++j)
                v[j] = mod_reduce(v[j] + coef * b[j], outer.field());
        }
        rows.push_back(std::move(v));
    }
    return Subspace::span_of(outer.field(), outer.ambient(), std::move(rows));
}

SubrepProfile random_profile(std::mt19937_64& rng, ProfileKind kind, i64 f, i64 c, i64 ambient) {
    SubrepProfile p = SubrepProfile::zero(kind, f, c, ambient);
    for (auto& s : p.spaces)
        s = random_subspace(rng, c, ambient);
    return p;
}

SubrepProfile random_subprofile(std::mt19937_64& rng, const SubrepProfile& outer) {
    SubrepProfile p = outer;
    for (auto& s : p.spaces)
        s = random_subspace_of(rng, s);
    return p;
}

ChainBoundReport chain_bound_exhaustive(const SubrepProfile& inner, const SubrepProfile& outer,
                                        const Params& P) {
    ChainBoundReport rep;
    rep.exhaustive = true;
    rep.bound = length_bound(outer, inner, P);
    // Interval lattice as a product of per-length subspace intervals.
    std::vector<std::vector<Subspace>> choices;
    for (size_t l = 0; l < outer.spaces.size(); ++l)
        choices.push_back(enumerate_between(inner.spaces[l], outer.spaces[l]));
    std::vector<SubrepProfile> nodes;
    std::vector<size_t> pick(choices.size(), 0);
    while (true) {
        SubrepProfile prof;
        prof.kind = outer.kind;
        for (size_t l = 0; l < choices.size(); ++l)
            prof.spaces.push_back(choices[l][pick[l]]);
        nodes.push_back(std::move(prof));
        size_t l = 0;
        while (l < pick.size() && ++pick[l] == choices[l].size()) {
            pick[l] = 0;
            ++l;
        }
        if (l == pick.size())
            break;
    }
    auto total_dim = [](const SubrepProfile& p) {
        i64 d = 0;
        for (const auto& s : p.spaces)
            d += s.dim();
        return d;
    };
    std::sort(nodes.begin(), nodes.end(), [&](const auto& a, const auto& b) {
        return total_dim(a) < total_dim(b);
    });
    auto strictly_below = [](const SubrepProfile& a, const SubrepProfile& b) {
        for (size_t l = 0; l < a.spaces.size(); ++l)
            if (!b.spaces[l].contains(a.spaces[l]))
                return false;
        return a.spaces != b.spaces;
    };
    // Longest strict chain by dynamic programming over the sorted nodes.
    std::vector<i64> longest(nodes.size(), 0);
    i64 best_to_outer = 0;
    for (size_t i = 0; i < nodes.size(); ++i) {
        for (size_t j = 0; j < i; ++j)
            if (total_dim(nodes[j]) < total_dim(nodes[i]) && strictly_below(nodes[j], nodes[i]))
                longest[i] = std::max(longest[i], longest[j] + 1);
        if (nodes[i].spaces == outer.spaces)
            best_to_outer = std::max(best_to_outer, longest[i]);
    }
    rep.longest_found = best_to_outer;
    rep.achieved = best_to_outer == rep.bound;
    rep.exceeded = best_to_outer > rep.bound;
    return rep;
}

ChainBoundReport chain_bound_randomized(const SubrepProfile& inner, const SubrepProfile& outer,
                                        const Params& P, i64 trials, std::mt19937_64& rng) {
    ChainBoundReport rep;
    rep.bound = length_bound(outer, inner, P);
    std::uniform_int_distribution<i64> entry(0, outer.field() - 1);
    std::uniform_int_distribution<size_t> which(0, outer.spaces.size() - 1);
    for (i64 t = 0; t < std::max<i64>(trials, 1); ++t) {
        // Grow a saturated chain: one new vector at a time, in a random
        // component that still has room.
        SubrepProfile cur = inner;
        i64 steps = 0;
        while (cur.spaces != outer.spaces) {
            size_t l = which(rng);
            if (cur.spaces[l].dim() == outer.spaces[l].dim())
                continue;
            std::vector<i64> v;
            do {
                v.assign(static_cast<size_t>(outer.ambient()), 0);
                for (const auto& b : outer.spaces[l].basis()) {
                    i64 coef = entry(rng);
                    for (size_t j = 0; j < v.size(); ++j)
                        v[j] = mod_reduce(v[j] + coef * b[j], outer.field());
                }
            } while (cur.spaces[l].contains_vector(v));
            auto rows = cur.spaces[l].basis();
            rows.push_back(v);
            cur.spaces[l] = Subspace::span_of(outer.field(), outer.ambient(), std::move(rows));
            ++steps;
            if (steps > rep.bound) {
                rep.exceeded = true;
                rep.longest_found = steps;
                return rep;
            }
        }
        rep.longest_found = std::max(rep.longest_found, steps);
        if (steps == rep.bound)
            rep.achieved = true;
    }
    return rep;
}

bool max_chain_check(const Params& P, i64 r, i64 c, i64 trials, u64 seed) {
    if (r < 0 || r > 5)
        throw validation_error("r: chain search supports 0 <= r <= 5");
    if (P.f > 4)
        throw validation_error("f: chain search supports f <= 4");
    if (c != 2 && c != 3 && c != 5)
        throw validation_error("c: chain search supports c in {2, 3, 5}");
    std::mt19937_64 rng(seed);

    auto run_pair = [&](const SubrepProfile& inner, const SubrepProfile& outer) {
        // Exhaust the interval when it is small enough to enumerate.
        i128 interval = 1;
        for (size_t l = 0; l < outer.spaces.size(); ++l) {
            interval *= static_cast<i64>(
                enumerate_between(inner.spaces[l], outer.spaces[l]).size());
            if (interval > 4000)
                break;
        }
        ChainBoundReport rep = interval <= 4000
                                   ? chain_bound_exhaustive(inner, outer, P)
                                   : chain_bound_randomized(inner, outer, P, trials, rng);
        return rep.ok() || rep.bound == 0; // equal profiles: empty chain, bound 0
    };

    for (ProfileKind kind : {ProfileKind::reducible, ProfileKind::irreducible}) {
        auto zero = SubrepProfile::zero(kind, P.f, c, r);
        auto full = SubrepProfile::full(kind, P.f, c, r);
        if (!run_pair(zero, full))
            return false;
        if (length_bound(full, zero, P) !=
            (kind == ProfileKind::reducible ? r * (P.f + 1) : r))
            return false;
    }
    // Principal-series remainder interval: full in the middle lengths only.
    if (P.f >= 1) {
        auto zero = SubrepProfile::zero(ProfileKind::reducible, P.f, c, r);
        auto rem = zero;
        for (i64 l = 1; l < P.f; ++l)
            rem.spaces[static_cast<size_t>(l)] = Subspace::full(c, r);
        if (length_bound(rem, zero, P) != r * (P.f - 1))
            return false;
        if (!run_pair(zero, rem))
            return false;
    }
    for (i64 t = 0; t < trials; ++t) {
        auto outer = random_profile(rng, ProfileKind::reducible, P.f, c, r);
        auto inner = random_subprofile(rng, outer);
        ChainBoundReport rep = chain_bound_randomized(inner, outer, P, 3, rng);
        if (rep.exceeded || !(rep.achieved || rep.bound == 0))
            return false;
    }
    return true;
}

PsDecomposition ps_decomposition(const SubrepProfile& prof, i64 r, const Params& P) {
    validate_profile(prof, P);
    if (prof.kind != ProfileKind::reducible)
        throw validation_error("ps_decomposition: profile must be reducible");
    if (prof.ambient() != r)
        throw validation_error("ps_decomposition: ambient dimension must equal r");
    for (const auto& s : prof.spaces)
        if (s.dim() != r)
            throw validation_error("ps_decomposition: profile must be full");
    PsDecomposition out;
    out.multiplicity = r;
    out.remainder = SubrepProfile::zero(ProfileKind::reducible, P.f, prof.field(), r);
    for (i64 l = 1; l < P.f; ++l)
        out.remainder.spaces[static_cast<size_t>(l)] = Subspace::full(prof.field(), r);
    out.remainder_bound = r * (P.f - 1);
    out.remainder_socle = r * (checked_pow(2, P.f) - 2);
    return out;
}

} // namespace gl2
