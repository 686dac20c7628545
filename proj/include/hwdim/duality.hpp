#pragma once

// Self-duality of V(lambda) and orthogonal/symplectic type.

#include "hwdim/root_system.hpp"

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace hwdim {

enum class Duality { not_self_dual, orthogonal, symplectic };

inline std::string to_string(Duality d)
{
    switch (d) {
    case Duality::not_self_dual: return "not-self-dual";
    case Duality::orthogonal: return "orthogonal";
    case Duality::symplectic: return "symplectic";
    }
    return "?";
}

inline Duality parse_duality(const std::string& s)
{
    if (s == "not-self-dual") return Duality::not_self_dual;
    if (s == "orthogonal") return Duality::orthogonal;
    if (s == "symplectic") return Duality::symplectic;
    throw std::invalid_argument("unknown duality '" + s + "'");
}

// The permutation i -> pi(i) with -w0(lambda_i) = lambda_pi(i), 0-based.
// Found by reflecting -lambda_i into the dominant chamber.
inline NodePermutation minus_w0(const RootSystem& rs)
{
    const int n = rs.rank();
    const auto& A = rs.cartan_matrix();
    NodePermutation perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        std::vector<int> m(static_cast<std::size_t>(n), 0);
        m[static_cast<std::size_t>(i)] = -1;
        for (bool moved = true; moved;) {
            moved = false;
            for (std::size_t j = 0; j < m.size(); ++j) {
                if (m[j] >= 0) continue;
                // s_j(mu) = mu - <mu, alpha_j^vee> alpha_j, alpha_j = sum_k A[j][k] lambda_k
                const int c = m[j];
                for (std::size_t k = 0; k < m.size(); ++k) m[k] -= c * A[j][k];
                moved = true;
            }
        }
        int image = -1;
        for (int k = 0; k < n; ++k) {
            const int v = m[static_cast<std::size_t>(k)];
            if (v == 1 && image < 0) image = k;
            else if (v != 0) image = -2;
        }
        if (image < 0) throw std::logic_error("-w0 did not map a fundamental weight to a fundamental weight");
        perm[static_cast<std::size_t>(i)] = image;
    }
    return perm;
}

inline bool is_self_dual(const RootSystem& rs, const DominantWeight& w)
{
    if (w.rank() != rs.rank()) throw std::invalid_argument("weight length does not match rank");
    return permute_weight(minus_w0(rs), w) == w;
}

inline bool is_self_dual(LieType type, const DominantWeight& w) { return is_self_dual(build(type), w); }

// 2k+1: the largest odd integer <= n.
inline int largest_odd_at_most(int n) { return n % 2 ? n : n - 1; }

// Nodes (1-based) whose fundamental module is self-dual and symplectic.
inline std::set<int> symplectic_fundamentals(LieType t)
{
    if (!is_valid(t)) throw std::invalid_argument("invalid Lie type " + to_string(t));
    const int n = t.rank;
    std::set<int> b;
    switch (t.family) {
    case Family::A:
        if (n % 4 == 1) b.insert((n + 1) / 2);
        break;
    case Family::B:
        if (n % 4 == 1 || n % 4 == 2) b.insert(n);
        break;
    case Family::C:
        for (int i = 1; i <= n; i += 2) b.insert(i);
        break;
    case Family::D:
        if (n % 4 == 2) b.insert({n - 1, n});
        break;
    case Family::E:
        if (n == 7) b.insert({2, 5, 7});
        break;
    case Family::F:
    case Family::G:
        break;
    }
    return b;
}

// <lambda, 2 rho^vee> = sum over positive roots of <lambda, alpha^vee>.
inline long long two_rho_check_pairing(const RootSystem& rs, const DominantWeight& w)
{
    long long s = 0;
    for (const auto& row : rs.coroot_pairings())
        for (std::size_t j = 0; j < row.size(); ++j) s += static_cast<long long>(w.coeffs()[j]) * row[j];
    return s;
}

// The same set obtained from the root system: a self-dual V(lambda_i) is
// symplectic iff <lambda_i, 2 rho^vee> is odd.
inline std::set<int> derived_symplectic_fundamentals(const RootSystem& rs)
{
    std::set<int> b;
    for (int i = 1; i <= rs.rank(); ++i) {
        const auto w = DominantWeight::fundamental(rs.rank(), i);
        if (is_self_dual(rs, w) && two_rho_check_pairing(rs, w) % 2 != 0) b.insert(i);
    }
    return b;
}

inline Duality duality_indicator(const RootSystem& rs, const DominantWeight& w)
{
    if (!is_self_dual(rs, w)) return Duality::not_self_dual;
    long long sum = 0;
    for (int i : symplectic_fundamentals(rs.type())) sum += w.coeff(i);
    return sum % 2 ? Duality::symplectic : Duality::orthogonal;
}

inline Duality duality_indicator(LieType type, const DominantWeight& w) { return duality_indicator(build(type), w); }

} // namespace hwdim
