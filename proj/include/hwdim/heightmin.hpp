#pragma once

// Minimal dimension at fixed height, its brute-force check, and injection
// certificates phi_j : R_s -> R_j comparing dim V(t lambda_j) with
// dim V(t lambda_s).

#include "hwdim/dims.hpp"
#include "hwdim/enumerate.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace hwdim {

struct HeightMinimum {
    LieType type;
    int t = 0;
    std::vector<DominantWeight> minimizing_weights; // sorted
    BigInt min_dim;
};

inline HeightMinimum min_dim_at_height(const RootSystem& rs, int t)
{
    if (t < 1) throw std::invalid_argument("height must be at least 1");
    const auto mf = min_fundamental(rs);
    HeightMinimum hm;
    hm.type = rs.type();
    hm.t = t;
    hm.min_dim = weyl_dim(rs, DominantWeight::fundamental(rs.rank(), mf.s, t));
    for (int node : mf.orbit) hm.minimizing_weights.push_back(DominantWeight::fundamental(rs.rank(), node, t));
    std::sort(hm.minimizing_weights.begin(), hm.minimizing_weights.end());
    return hm;
}

inline constexpr long long default_enumeration_cap = 2'000'000;

class CapExceeded : public std::runtime_error {
public:
    CapExceeded(const BigInt& required, long long cap)
        : std::runtime_error("enumeration needs " + to_string(required) + " weights, cap is " + std::to_string(cap)),
          required_(required)
    {
    }
    const BigInt& required() const { return required_; }

private:
    BigInt required_;
};

struct Theorem1Report {
    LieType type;
    int t = 0;
    BigInt enumerated;
    BigInt expected_min;                        // dim V(t lambda_s)
    BigInt observed_min;                        // over the whole simplex
    std::vector<DominantWeight> expected_minimizers;
    std::vector<DominantWeight> observed_minimizers;
    bool pass = false;
};

// Enumerates every dominant weight of height t and checks that the minimum
// dimension is dim V(t lambda_s), attained exactly on the orbit of t lambda_s.
inline Theorem1Report verify_theorem1(const RootSystem& rs, int t, long long cap = default_enumeration_cap)
{
    const BigInt size = simplex_size(rs.rank(), t);
    if (size > cap) throw CapExceeded(size, cap);
    const auto hm = min_dim_at_height(rs, t);
    Theorem1Report rep;
    rep.type = rs.type();
    rep.t = t;
    rep.enumerated = size;
    rep.expected_min = hm.min_dim;
    rep.expected_minimizers = hm.minimizing_weights;
    bool first = true;
    for_each_weight_of_height(rs.rank(), t, [&](const DominantWeight& w) {
        const BigInt d = weyl_dim(rs, w);
        if (first || d < rep.observed_min) {
            rep.observed_min = d;
            rep.observed_minimizers.clear();
            first = false;
        }
        if (d == rep.observed_min) rep.observed_minimizers.push_back(w);
    });
    rep.pass = rep.observed_min == rep.expected_min && rep.observed_minimizers == rep.expected_minimizers;
    return rep;
}

// ---------------------------------------------------------------------------
// Injection certificates

struct RootPair {
    std::size_t source = 0; // index into positive_roots()
    std::size_t target = 0;
    friend bool operator==(const RootPair&, const RootPair&) = default;
};

// One source root u of R_s charged against two targets t1, t2 of R_j:
//   (r_u + t c_u) / r_u <= (r_1 + t c_1) / r_1 * (r_2 + t c_2) / r_2   for t >= 0,
// where r = <rho, .> and c = <lambda_s, .> or <lambda_j, .>.
struct FallbackRecord {
    std::size_t source = 0;
    std::size_t target1 = 0;
    std::size_t target2 = 0;
    friend bool operator==(const FallbackRecord&, const FallbackRecord&) = default;
};

struct InjectionCertificate {
    LieType type;
    int s = 1;
    int j = 1;
    std::vector<RootPair> mapping; // sorted by source
    std::optional<FallbackRecord> fallback;
    friend bool operator==(const InjectionCertificate&, const InjectionCertificate&) = default;
};

// <lambda_node, alpha_k^vee>
inline int lambda_pairing(const RootSystem& rs, int node, std::size_t k)
{
    return rs.coroot_pairings()[k][static_cast<std::size_t>(node - 1)];
}

// Conditions (1) and (2) for the pair (a in R_s, b in R_j).
inline bool admissible(const RootSystem& rs, int s, int j, std::size_t a, std::size_t b)
{
    return rs.rho_pairings()[a] <= rs.rho_pairings()[b] && lambda_pairing(rs, s, a) <= lambda_pairing(rs, j, b);
}

// (r_a + t c_a)/r_a <= (r_b + t c_b)/r_b for every t >= 0, i.e. c_a/r_a <= c_b/r_b.
inline bool ratio_dominated(const RootSystem& rs, int s, int j, std::size_t a, std::size_t b)
{
    return static_cast<long long>(lambda_pairing(rs, s, a)) * rs.rho_pairings()[b] <=
           static_cast<long long>(lambda_pairing(rs, j, b)) * rs.rho_pairings()[a];
}

// Fallback inequality for all real t >= 0. Both sides agree at t = 0 and the
// difference of cross-multiplied sides is t (A t + B) with A >= 0, so it
// holds iff B >= 0, i.e. c_1/r_1 + c_2/r_2 >= c_u/r_u.
inline bool fallback_inequality(const RootSystem& rs, int s, int j, const FallbackRecord& f)
{
    const Rational lhs = Rational(lambda_pairing(rs, s, f.source), rs.rho_pairings()[f.source]);
    const Rational rhs = Rational(lambda_pairing(rs, j, f.target1), rs.rho_pairings()[f.target1]) +
                         Rational(lambda_pairing(rs, j, f.target2), rs.rho_pairings()[f.target2]);
    return lhs <= rhs;
}

// The same inequality evaluated exactly at integer t = 0..t_max.
inline bool fallback_inequality_at(const RootSystem& rs, int s, int j, const FallbackRecord& f, int t_max)
{
    auto factor = [&](int node, std::size_t k, int t) {
        const int r = rs.rho_pairings()[k];
        return Rational(r + t * lambda_pairing(rs, node, k), r);
    };
    for (int t = 0; t <= t_max; ++t)
        if (factor(s, f.source, t) > factor(j, f.target1, t) * factor(j, f.target2, t)) return false;
    return true;
}

struct CertificateCheck {
    bool covers_sources = true; // mapping plus fallback source is exactly R_s
    bool targets_in_rj = true;
    bool injective = true;
    bool condition1 = true;
    bool condition2 = true;
    bool fallback_ok = true;     // inequality for all t >= 0 and at t = 0..2n
    bool ratio_dominated = true; // every pair dominates factorwise in the Weyl product
    std::vector<std::string> problems;

    // An admissible injection in the sense of conditions (1) and (2).
    bool admissible() const
    {
        return covers_sources && targets_in_rj && injective && condition1 && condition2 && fallback_ok;
    }
    // Admissible and every Weyl factor ratio of R_s is dominated, which
    // gives dim V(t lambda_j) >= dim V(t lambda_s) for all t >= 0.
    bool proves_lemma2() const { return admissible() && ratio_dominated; }
};

inline std::string root_label(const RootSystem& rs, std::size_t k)
{
    std::string out = "[";
    const auto& c = rs.root_coefficients()[k];
    for (std::size_t i = 0; i < c.size(); ++i) out += (i ? "," : "") + std::to_string(c[i]);
    return out + "]";
}

inline CertificateCheck verify_certificate(const RootSystem& rs, const InjectionCertificate& cert)
{
    CertificateCheck chk;
    auto fail = [&](bool& flag, std::string why) {
        flag = false;
        chk.problems.push_back(std::move(why));
    };
    const auto rs_idx = nilradical_indices(rs, cert.s);
    const auto rj_idx = nilradical_indices(rs, cert.j);
    const std::set<std::size_t> rj(rj_idx.begin(), rj_idx.end());

    std::multiset<std::size_t> sources, targets;
    for (const auto& p : cert.mapping) {
        sources.insert(p.source);
        targets.insert(p.target);
    }
    if (cert.fallback) {
        sources.insert(cert.fallback->source);
        targets.insert(cert.fallback->target1);
        targets.insert(cert.fallback->target2);
    }
    if (sources != std::multiset<std::size_t>(rs_idx.begin(), rs_idx.end()))
        fail(chk.covers_sources, "sources are not exactly R_" + std::to_string(cert.s));
    for (auto t : std::set<std::size_t>(targets.begin(), targets.end())) {
        if (!rj.count(t)) fail(chk.targets_in_rj, "target " + root_label(rs, t) + " not in R_" + std::to_string(cert.j));
        if (targets.count(t) > 1) fail(chk.injective, "target " + root_label(rs, t) + " used more than once");
    }
    for (const auto& p : cert.mapping) {
        if (p.source >= rs.num_positive_roots() || p.target >= rs.num_positive_roots()) {
            fail(chk.covers_sources, "root index out of range");
            continue;
        }
        if (rs.rho_pairings()[p.source] > rs.rho_pairings()[p.target])
            fail(chk.condition1, "condition (1) fails at " + root_label(rs, p.source) + " -> " + root_label(rs, p.target));
        if (lambda_pairing(rs, cert.s, p.source) > lambda_pairing(rs, cert.j, p.target))
            fail(chk.condition2, "condition (2) fails at " + root_label(rs, p.source) + " -> " + root_label(rs, p.target));
        if (!ratio_dominated(rs, cert.s, cert.j, p.source, p.target)) {
            chk.ratio_dominated = false;
            chk.problems.push_back("factor ratio not dominated at " + root_label(rs, p.source) + " -> " +
                                   root_label(rs, p.target));
        }
    }
    if (cert.fallback) {
        const auto& f = *cert.fallback;
        if (f.target1 == f.target2) fail(chk.injective, "fallback targets coincide");
        if (!fallback_inequality(rs, cert.s, cert.j, f) ||
            !fallback_inequality_at(rs, cert.s, cert.j, f, 2 * rs.rank()))
            fail(chk.fallback_ok, "fallback inequality fails for " + root_label(rs, f.source));
    }
    return chk;
}

class InjectionNotFound : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

// Kuhn's augmenting-path matching. Left vertices are tried in order, each
// one's neighbours in list order, so the result is deterministic.
// Returns match[left] = right index or -1.
inline std::vector<int> max_matching(const std::vector<std::vector<int>>& adj, int n_right,
                                     const std::vector<bool>& right_blocked = {})
{
    std::vector<int> match_left(adj.size(), -1), match_right(static_cast<std::size_t>(n_right), -1);
    std::vector<int> seen(static_cast<std::size_t>(n_right), -1);
    auto augment = [&](auto&& self, int u, int stamp) -> bool {
        for (int v : adj[static_cast<std::size_t>(u)]) {
            const auto vi = static_cast<std::size_t>(v);
            if (!right_blocked.empty() && right_blocked[vi]) continue;
            if (seen[vi] == stamp) continue;
            seen[vi] = stamp;
            if (match_right[vi] < 0 || self(self, match_right[vi], stamp)) {
                match_right[vi] = u;
                match_left[static_cast<std::size_t>(u)] = v;
                return true;
            }
        }
        return false;
    };
    for (int u = 0; u < static_cast<int>(adj.size()); ++u) augment(augment, u, u);
    return match_left;
}

inline bool is_perfect(const std::vector<int>& m)
{
    return std::all_of(m.begin(), m.end(), [](int x) { return x >= 0; });
}

} // namespace detail

// Searches for phi_j : R_s -> R_j. Tries, in order: a perfect matching on
// pairs that satisfy (1), (2) and dominate factorwise; a perfect matching on
// pairs satisfying (1) and (2) alone; and finally one source charged against
// two targets with the rest matched as before.
inline InjectionCertificate find_injection(const RootSystem& rs, int j)
{
    const int s = min_fundamental(rs).s;
    const auto src = nilradical_indices(rs, s);
    const auto tgt = nilradical_indices(rs, j);
    InjectionCertificate cert;
    cert.type = rs.type();
    cert.s = s;
    cert.j = j;

    auto graph = [&](bool strict) {
        std::vector<std::vector<int>> adj(src.size());
        for (std::size_t a = 0; a < src.size(); ++a)
            for (std::size_t b = 0; b < tgt.size(); ++b)
                if (admissible(rs, s, j, src[a], tgt[b]) && (!strict || ratio_dominated(rs, s, j, src[a], tgt[b])))
                    adj[a].push_back(static_cast<int>(b));
        return adj;
    };
    auto emit = [&](const std::vector<int>& m, std::size_t skip) {
        for (std::size_t a = 0; a < src.size(); ++a)
            if (a != skip) cert.mapping.push_back({src[a], tgt[static_cast<std::size_t>(m[a])]});
    };

    for (bool strict : {true, false}) {
        const auto m = detail::max_matching(graph(strict), static_cast<int>(tgt.size()));
        if (detail::is_perfect(m)) {
            emit(m, src.size());
            return cert;
        }
    }

    // Fallback. Sources with the largest lambda_s pairing first, since those
    // are the ones a single target cannot absorb.
    std::vector<std::size_t> order(src.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return lambda_pairing(rs, s, src[x]) > lambda_pairing(rs, s, src[y]);
    });
    for (bool strict : {true, false}) {
        auto adj = graph(strict);
        for (std::size_t u : order) {
            auto sub = adj;
            sub[u].clear();
            // First target: same rho pairing as u if possible.
            std::vector<std::size_t> firsts(tgt.size());
            std::iota(firsts.begin(), firsts.end(), 0);
            std::stable_sort(firsts.begin(), firsts.end(), [&](std::size_t x, std::size_t y) {
                const bool ex = rs.rho_pairings()[tgt[x]] == rs.rho_pairings()[src[u]];
                const bool ey = rs.rho_pairings()[tgt[y]] == rs.rho_pairings()[src[u]];
                return ex > ey;
            });
            for (std::size_t b1 : firsts) {
                for (std::size_t b2 = 0; b2 < tgt.size(); ++b2) {
                    if (b2 == b1) continue;
                    const FallbackRecord f{src[u], tgt[b1], tgt[b2]};
                    if (!fallback_inequality(rs, s, j, f) || !fallback_inequality_at(rs, s, j, f, 2 * rs.rank()))
                        continue;
                    std::vector<bool> blocked(tgt.size(), false);
                    blocked[b1] = blocked[b2] = true;
                    auto m = detail::max_matching(sub, static_cast<int>(tgt.size()), blocked);
                    m[u] = 0;
                    if (!detail::is_perfect(m)) continue;
                    emit(m, u);
                    cert.fallback = f;
                    return cert;
                }
            }
        }
    }
    throw InjectionNotFound("no injection certificate for " + to_string(rs.type()) + " node " + std::to_string(j));
}

struct Lemma2Report {
    int s = 1;
    int j = 1;
    int t_max = 0;
    bool pass = true;   // dim V(t lambda_j) >= dim V(t lambda_s) for 1 <= t <= t_max
    bool strict = true; // strict throughout
    std::optional<int> first_failure;
};

inline Lemma2Report verify_lemma2_numeric(const RootSystem& rs, int j, int t_max)
{
    if (t_max < 1) throw std::invalid_argument("t_max must be at least 1");
    if (j < 1 || j > rs.rank()) throw std::out_of_range("node " + std::to_string(j) + " out of range");
    Lemma2Report rep;
    rep.s = min_fundamental(rs).s;
    rep.j = j;
    rep.t_max = t_max;
    for (int t = 1; t <= t_max; ++t) {
        const BigInt dj = weyl_dim(rs, DominantWeight::fundamental(rs.rank(), j, t));
        const BigInt ds = weyl_dim(rs, DominantWeight::fundamental(rs.rank(), rep.s, t));
        if (dj < ds) {
            rep.pass = false;
            if (!rep.first_failure) rep.first_failure = t;
        }
        if (dj <= ds) rep.strict = false;
    }
    return rep;
}

// (2t + 2n - 1)/(2n - 1) <= (t + 2n - 1)/(2n - 1) * (t + n)/n
inline bool lemma33_holds(int n, int t)
{
    const Rational lhs(2 * t + 2 * n - 1, 2 * n - 1);
    const Rational rhs = Rational(t + 2 * n - 1, 2 * n - 1) * Rational(t + n, n);
    return lhs <= rhs;
}

} // namespace hwdim
