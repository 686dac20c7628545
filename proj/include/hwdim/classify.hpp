#pragma once

// Weights with dim V(lambda) <= bound^2, semiprime dimensions, and
// dimension search.

#include "hwdim/duality.hpp"
#include "hwdim/enumerate.hpp"
#include "hwdim/heightmin.hpp"
#include "hwdim/reference_tables.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hwdim {

struct BoundValue {
    long long long_bound = 0;               // (rho + lambda, alpha_h)
    std::optional<long long> short_bound;   // (rho + lambda, 2 beta), type B only
    long long coroot_bound = 0;             // max_alpha <rho + lambda, alpha^vee>
    friend bool operator==(const BoundValue&, const BoundValue&) = default;
};

inline BoundValue bound_value(const RootSystem& rs, const DominantWeight& w)
{
    const RootVec v = detail::axpy(Rational(1), weight_vector(rs, w), rs.rho());
    BoundValue b;
    b.long_bound = rational_to_int64(inner(rs, v, rs.highest_root()), "long bound");
    if (rs.type().family == Family::B)
        b.short_bound = rational_to_int64(2 * inner(rs, v, rs.highest_short_root()), "short bound");
    for (std::size_t k = 0; k < rs.num_positive_roots(); ++k)
        b.coroot_bound = std::max<long long>(b.coroot_bound, shifted_pairing(rs, w, k));
    return b;
}

// Which bound a classification squares.
enum class BoundKind { long_root, short_root, coroot };

inline std::string to_string(BoundKind k)
{
    switch (k) {
    case BoundKind::long_root: return "long";
    case BoundKind::short_root: return "short";
    case BoundKind::coroot: return "coroot";
    }
    return "?";
}

// The bound used for the bounded classification: (rho + lambda, alpha_h)
// for A-E, and the highest-coroot pairing for F4 and G2 (the linear forms
// 2a1+4a2+3a3+2a4+11 and 2a+3b+5).
inline BoundKind default_bound_kind(LieType t)
{
    return (t.family == Family::F || t.family == Family::G) ? BoundKind::coroot : BoundKind::long_root;
}

inline long long select_bound(const BoundValue& b, BoundKind k)
{
    switch (k) {
    case BoundKind::long_root: return b.long_bound;
    case BoundKind::short_root:
        if (!b.short_bound) throw std::invalid_argument("short bound is only defined for type B");
        return *b.short_bound;
    case BoundKind::coroot: return b.coroot_bound;
    }
    return 0;
}

struct ClassifiedModule {
    LieType type;
    DominantWeight weight;
    BigInt dim;
    BoundValue bound;
    Duality duality = Duality::orthogonal;
    std::vector<DominantWeight> orbit; // graph-automorphism images, sorted, includes weight
    std::string tag;                   // reference-table row or pq clause, when known
};

inline ClassifiedModule make_module(const RootSystem& rs, const DominantWeight& w)
{
    return {rs.type(), w, weyl_dim(rs, w), bound_value(rs, w), duality_indicator(rs, w), automorphism_orbit(rs, w), {}};
}

// One of the infinite rank-<=2 families: the coefficient at fixed_node is
// fixed_coeff, the other coefficient m ranges over all m >= 0.
struct FamilyDescriptor {
    std::string name;
    std::string constraint;
    std::string weight_pattern;
    std::string dim_formula;
    LieType type;
    int fixed_node = 0; // 0 when no coefficient is fixed (A1)
    int fixed_coeff = 0;

    DominantWeight instantiate(int m) const
    {
        std::vector<int> c(static_cast<std::size_t>(type.rank), m);
        if (fixed_node) c[static_cast<std::size_t>(fixed_node - 1)] = fixed_coeff;
        return DominantWeight(c);
    }
    // Closed form of dim V(instantiate(m)).
    BigInt dim(int m) const
    {
        if (type.rank == 1) return BigInt(m + 1);
        const BigInt a = fixed_coeff, b = m;
        return (a + 1) * (b + 1) * (a + b + 2) / 2;
    }
};

// Monotonicity cutoff: past t_star every weight of height t has
// dim >= f_s(t) > (c0 + t cmax)^2 >= bound^2.
struct CutoffRecord {
    BoundKind bound = BoundKind::long_root;
    long long c0 = 0;          // bound at the zero weight
    long long cmax = 0;        // largest bound increment per unit of height
    Rational t_mono;           // f_s(t)/(c0 + t cmax)^2 is nondecreasing for t >= t_mono
    int t_star = 0;            // first excluded height
    BigInt min_dim_at_t_star;  // f_s(t_star)
    BigInt max_bound_at_t_star;

    bool sound() const { return min_dim_at_t_star > max_bound_at_t_star * max_bound_at_t_star; }
};

struct ClassificationResult {
    LieType type;
    BoundKind bound = BoundKind::long_root;
    std::vector<ClassifiedModule> modules;   // lexicographic by weight, zero weight included
    std::optional<CutoffRecord> cutoff;      // empty for A1 and A2
    std::vector<FamilyDescriptor> families;  // A1 and A2 only
    std::vector<DominantWeight> residue;     // A2: solutions outside the families
    bool finite_window = false;              // modules is a height-capped window of infinite families
    std::optional<int> window_height;
};

// Computes the cutoff height for bound kind k, or nothing if the Theorem-1
// polynomial has degree <= 2 (no finite cutoff exists).
inline std::optional<CutoffRecord> cutoff_height(const RootSystem& rs, BoundKind k)
{
    const int s = min_fundamental(rs).s;
    const auto rs_idx = nilradical_indices(rs, s);
    const long long d = static_cast<long long>(rs_idx.size());
    if (d <= 2) return std::nullopt;
    CutoffRecord rec;
    rec.bound = k;
    rec.c0 = select_bound(bound_value(rs, DominantWeight::zero(rs.rank())), k);
    for (int i = 1; i <= rs.rank(); ++i)
        rec.cmax = std::max(rec.cmax, select_bound(bound_value(rs, DominantWeight::fundamental(rs.rank(), i)), k) - rec.c0);
    // d/dt log(f_s/B^2) = sum 1/(r_i + t) - 2/(r0 + t) >= d/(rmax + t) - 2/(r0 + t).
    Rational rmax = 0;
    for (auto idx : rs_idx)
        rmax = std::max(rmax, Rational(rs.rho_pairings()[idx], lambda_pairing(rs, s, idx)));
    const Rational r0(rec.c0, rec.cmax);
    const Rational raw = (2 * rmax - d * r0) / (d - 2);
    rec.t_mono = raw > 0 ? raw : Rational(0);
    BigInt start = boost::multiprecision::numerator(rec.t_mono) / boost::multiprecision::denominator(rec.t_mono);
    if (Rational(start) < rec.t_mono) start += 1;
    for (long long t = static_cast<long long>(start);; ++t) {
        const BigInt f = weyl_dim(rs, DominantWeight::fundamental(rs.rank(), s, static_cast<int>(t)));
        const BigInt b = rec.c0 + t * rec.cmax;
        if (f > b * b) {
            rec.t_star = static_cast<int>(t);
            rec.min_dim_at_t_star = f;
            rec.max_bound_at_t_star = b;
            return rec;
        }
    }
}

inline std::vector<FamilyDescriptor> rank_le2_families(LieType t)
{
    if (t == LieType{Family::A, 1})
        return {{"all", "a >= 0", "a L1", "a+1", t, 0, 0}};
    if (t == LieType{Family::A, 2})
        return {
            {"a=0", "b >= 0", "b L2", "(b+1)(b+2)/2", t, 1, 0},
            {"a=1", "b >= 0", "L1 + b L2", "(b+1)(b+3)", t, 1, 1},
            {"b=0", "a >= 0", "a L1", "(a+1)(a+2)/2", t, 2, 0},
            {"b=1", "a >= 0", "a L1 + L2", "(a+1)(a+3)", t, 2, 1},
        };
    return {};
}

inline constexpr int default_window_height = 8;

// All dominant weights with dim V(lambda) <= bound^2. Complete for every
// type except A1 and A2, whose solutions include infinite families; those
// are returned as descriptors and the module list is the window of height
// <= window_height.
inline ClassificationResult classify_bounded(const RootSystem& rs, std::optional<BoundKind> kind = std::nullopt,
                                             int window_height = default_window_height)
{
    ClassificationResult res;
    res.type = rs.type();
    res.bound = kind.value_or(default_bound_kind(rs.type()));
    res.cutoff = cutoff_height(rs, res.bound);
    int max_t = 0;
    if (res.cutoff) {
        max_t = res.cutoff->t_star - 1;
    } else {
        res.families = rank_le2_families(rs.type());
        res.finite_window = true;
        res.window_height = window_height;
        max_t = window_height;
    }
    for (int t = 0; t <= max_t; ++t) {
        for_each_weight_of_height(rs.rank(), t, [&](const DominantWeight& w) {
            const BigInt d = weyl_dim(rs, w);
            const BigInt b = select_bound(bound_value(rs, w), res.bound);
            if (d <= b * b) res.modules.push_back(make_module(rs, w));
        });
    }
    std::sort(res.modules.begin(), res.modules.end(),
              [](const ClassifiedModule& x, const ClassifiedModule& y) { return x.weight < y.weight; });
    if (rs.type() == LieType{Family::A, 2}) {
        for (const auto& m : res.modules)
            if (m.weight.coeff(1) > 1 && m.weight.coeff(2) > 1) res.residue.push_back(m.weight);
    }
    return res;
}

inline ClassificationResult classify_bounded(LieType t) { return classify_bounded(build(t)); }

// ---------------------------------------------------------------------------
// Semiprime dimensions

inline std::optional<std::pair<BigInt, BigInt>> is_semiprime_dim(const BigInt& d) { return semiprime_factors(d); }

struct PqModule {
    ClassifiedModule module;
    BigInt p, q;
    std::vector<std::string> clauses;    // pq clauses matched numerically
    std::vector<Table6Match> table6;     // reference rows reproducing (type, weight)
    bool matched() const { return !clauses.empty() || !table6.empty(); }
};

struct PqCatalogue {
    LieType type;
    BigInt dim_cap;
    std::optional<int> height_cap;
    int heights_scanned = 0; // heights 0..heights_scanned-1 were enumerated
    std::vector<PqModule> modules;
};

// Every weight with semiprime dimension <= dim_cap (and height <= height_cap
// if given). Complete: all prime factors of dim V(lambda) are at most the
// coroot bound, so dim = pq forces dim <= coroot_bound^2, and heights past
// the coroot cutoff or with f_s(t) > dim_cap are excluded.
inline PqCatalogue pq_catalogue(const RootSystem& rs, const BigInt& dim_cap, std::optional<int> height_cap = std::nullopt)
{
    PqCatalogue cat;
    cat.type = rs.type();
    cat.dim_cap = dim_cap;
    cat.height_cap = height_cap;
    const int s = min_fundamental(rs).s;
    const auto cut = cutoff_height(rs, BoundKind::coroot);
    int t_end = 0; // exclusive
    while (true) {
        if (cut && t_end >= cut->t_star) break;
        if (height_cap && t_end > *height_cap) break;
        if (weyl_dim(rs, DominantWeight::fundamental(rs.rank(), s, t_end)) > dim_cap) break;
        ++t_end;
    }
    cat.heights_scanned = t_end;
    for (int t = 0; t < t_end; ++t) {
        for_each_weight_of_height(rs.rank(), t, [&](const DominantWeight& w) {
            const BigInt d = weyl_dim(rs, w);
            if (d > dim_cap) return;
            auto pq = semiprime_factors(d);
            if (!pq) return;
            PqModule m{make_module(rs, w), pq->first, pq->second, {}, {}};
            if (rs.rank() >= 2) m.clauses = match_pq_clauses(rs.type(), w, d);
            m.table6 = match_table6(rs, w, d);
            if (!m.table6.empty()) m.module.tag = m.table6.front().row;
            else if (!m.clauses.empty()) m.module.tag = m.clauses.front();
            cat.modules.push_back(std::move(m));
        });
    }
    std::sort(cat.modules.begin(), cat.modules.end(),
              [](const PqModule& x, const PqModule& y) { return x.module.weight < y.module.weight; });
    return cat;
}

// ---------------------------------------------------------------------------
// Dimension search

inline std::vector<DominantWeight> search_dimension(const RootSystem& rs, const BigInt& d, int height_cap)
{
    std::vector<DominantWeight> out;
    for (int t = 0; t <= height_cap; ++t)
        for_each_weight_of_height(rs.rank(), t, [&](const DominantWeight& w) {
            if (weyl_dim(rs, w) == d) out.push_back(w);
        });
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace hwdim
