#pragma once

// Exact root-system data for the simple complex Lie algebras.
//
// Realizations follow the Bourbaki planches: classical types in the usual
// e_i coordinates, G2 in the plane x+y+z = 0 of R^3, F4 in R^4, and
// E6/E7/E8 as the spans of the first 6/7/8 simple roots of the standard E8
// realization in R^8. Nodes are numbered as in Bourbaki; public functions
// take 1-based node indices.
//
// Only the simple roots are written down per type. Positive roots,
// fundamental weights, rho, the highest root and the form normalization are
// all derived, so the tests can check them against independent descriptions.

#include "hwdim/arith.hpp"
#include "hwdim/lie_type.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace hwdim {

// Coordinates in the ambient Euclidean space of a realization.
using RootVec = std::vector<Rational>;

// lambda = sum_i a_i lambda_i with every a_i >= 0.
class DominantWeight {
public:
    DominantWeight() = default;

    explicit DominantWeight(std::vector<int> coeffs) : coeffs_(std::move(coeffs))
    {
        for (int a : coeffs_)
            if (a < 0) throw std::invalid_argument("dominant weight coefficients must be non-negative");
    }

    static DominantWeight zero(int rank) { return DominantWeight(std::vector<int>(static_cast<std::size_t>(rank), 0)); }

    // t * lambda_node, node 1-based.
    static DominantWeight fundamental(int rank, int node, int t = 1)
    {
        if (node < 1 || node > rank) throw std::out_of_range("node " + std::to_string(node) + " out of range");
        std::vector<int> c(static_cast<std::size_t>(rank), 0);
        c[static_cast<std::size_t>(node - 1)] = t;
        return DominantWeight(std::move(c));
    }

    int rank() const { return static_cast<int>(coeffs_.size()); }
    const std::vector<int>& coeffs() const { return coeffs_; }
    // 1-based coefficient access.
    int coeff(int node) const { return coeffs_.at(static_cast<std::size_t>(node - 1)); }

    friend auto operator<=>(const DominantWeight&, const DominantWeight&) = default;

private:
    std::vector<int> coeffs_;
};

inline int height(const DominantWeight& w)
{
    return std::accumulate(w.coeffs().begin(), w.coeffs().end(), 0);
}

// "2L1+L3"; the zero weight prints as "0".
inline std::string to_string(const DominantWeight& w)
{
    std::string out;
    for (int i = 0; i < w.rank(); ++i) {
        const int a = w.coeffs()[static_cast<std::size_t>(i)];
        if (a == 0) continue;
        if (!out.empty()) out += '+';
        if (a != 1) out += std::to_string(a);
        out += 'L' + std::to_string(i + 1);
    }
    return out.empty() ? "0" : out;
}

// "2,0,1"
inline std::string coeff_string(const DominantWeight& w)
{
    std::string out;
    for (std::size_t i = 0; i < w.coeffs().size(); ++i) {
        if (i) out += ',';
        out += std::to_string(w.coeffs()[i]);
    }
    return out;
}

// Node permutation, 0-based: node i goes to perm[i].
using NodePermutation = std::vector<int>;

inline DominantWeight permute_weight(const NodePermutation& perm, const DominantWeight& w)
{
    std::vector<int> c(w.coeffs().size(), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[static_cast<std::size_t>(perm[i])] = w.coeffs()[i];
    return DominantWeight(std::move(c));
}

class RootSystem;
RootSystem build(LieType type);

// Immutable after construction; every accessor is const.
class RootSystem {
public:
    LieType type() const { return type_; }
    int rank() const { return type_.rank; }
    std::size_t ambient_dim() const { return ambient_dim_; }

    const std::vector<RootVec>& simple_roots() const { return simple_; }
    const std::vector<RootVec>& positive_roots() const { return positive_; }
    const std::vector<RootVec>& fundamental_weights() const { return fundamental_; }
    const RootVec& rho() const { return rho_; }
    const RootVec& highest_root() const { return highest_; }
    const RootVec& highest_short_root() const { return highest_short_; }
    // The invariant form is form_scale * (ambient dot product).
    const Rational& form_scale() const { return form_scale_; }

    // A[i][j] = <alpha_i, alpha_j^vee>.
    const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }
    // Simple-root coefficients of each positive root, same order as positive_roots().
    const std::vector<std::vector<int>>& root_coefficients() const { return coeffs_; }
    // pairings[k][j] = <lambda_{j+1}, alpha_k^vee>, always a non-negative integer.
    const std::vector<std::vector<int>>& coroot_pairings() const { return pairings_; }
    // <rho, alpha_k^vee> for each positive root.
    const std::vector<int>& rho_pairings() const { return rho_pairings_; }
    // prod_k <rho, alpha_k^vee>, the Weyl-formula denominator.
    const BigInt& weyl_denominator() const { return weyl_denominator_; }
    // Squared length of each positive root under the normalized form.
    const std::vector<Rational>& root_norms() const { return norms_; }

    std::size_t highest_root_index() const { return highest_index_; }
    std::size_t highest_short_root_index() const { return highest_short_index_; }

    std::size_t num_positive_roots() const { return positive_.size(); }

private:
    friend RootSystem build(LieType type);
    RootSystem() = default;

    LieType type_{};
    std::size_t ambient_dim_ = 0;
    std::vector<RootVec> simple_, positive_, fundamental_;
    RootVec rho_, highest_, highest_short_;
    Rational form_scale_{1};
    std::vector<std::vector<int>> cartan_, coeffs_, pairings_;
    std::vector<int> rho_pairings_;
    BigInt weyl_denominator_{1};
    std::vector<Rational> norms_;
    std::size_t highest_index_ = 0, highest_short_index_ = 0;
};

namespace detail {

inline Rational dot(const RootVec& x, const RootVec& y)
{
    if (x.size() != y.size())
        throw std::invalid_argument("vectors from different ambient spaces (" + std::to_string(x.size()) + " vs " +
                                    std::to_string(y.size()) + " coordinates)");
    Rational s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

inline RootVec unit(std::size_t dim, std::size_t i, Rational c = 1)
{
    RootVec v(dim, Rational(0));
    v[i] = c;
    return v;
}

inline RootVec axpy(const Rational& a, const RootVec& x, RootVec y)
{
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
    return y;
}

// e_i - e_j with 1-based indices.
inline RootVec e_minus(std::size_t dim, std::size_t i, std::size_t j)
{
    RootVec v(dim, Rational(0));
    v[i - 1] += 1;
    v[j - 1] -= 1;
    return v;
}

inline std::vector<RootVec> e8_simple_roots()
{
    const Rational h(1, 2);
    std::vector<RootVec> s;
    s.push_back(RootVec{h, -h, -h, -h, -h, -h, -h, h});
    s.push_back(RootVec{1, 1, 0, 0, 0, 0, 0, 0});
    for (std::size_t k = 2; k <= 7; ++k) s.push_back(e_minus(8, k, k - 1));
    return s;
}

inline std::pair<std::size_t, std::vector<RootVec>> simple_roots_for(LieType t)
{
    const auto n = static_cast<std::size_t>(t.rank);
    std::vector<RootVec> s;
    switch (t.family) {
    case Family::A:
        for (std::size_t i = 1; i <= n; ++i) s.push_back(e_minus(n + 1, i, i + 1));
        return {n + 1, s};
    case Family::B:
    case Family::C:
    case Family::D:
        for (std::size_t i = 1; i < n; ++i) s.push_back(e_minus(n, i, i + 1));
        if (t.family == Family::B) s.push_back(unit(n, n - 1));
        if (t.family == Family::C) s.push_back(unit(n, n - 1, 2));
        if (t.family == Family::D) {
            RootVec v(n, Rational(0));
            v[n - 2] = 1;
            v[n - 1] = 1;
            s.push_back(v);
        }
        return {n, s};
    case Family::E: {
        auto e8 = e8_simple_roots();
        e8.resize(n);
        return {8, e8};
    }
    case Family::F: {
        const Rational h(1, 2);
        s.push_back(e_minus(4, 2, 3));
        s.push_back(e_minus(4, 3, 4));
        s.push_back(unit(4, 3));
        s.push_back(RootVec{h, -h, -h, -h});
        return {4, s};
    }
    case Family::G:
        s.push_back(RootVec{1, -1, 0});
        s.push_back(RootVec{-2, 1, 1});
        return {3, s};
    }
    throw std::invalid_argument("unknown family");
}

// Inverse of an integer matrix over the rationals (Gauss-Jordan).
inline std::vector<std::vector<Rational>> invert(const std::vector<std::vector<int>>& m)
{
    const std::size_t n = m.size();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
        a[i][n + i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw std::logic_error("singular Cartan matrix");
        std::swap(a[piv], a[col]);
        const Rational p = a[col][col];
        for (auto& x : a[col]) x /= p;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            const Rational f = a[r][col];
            for (std::size_t c = 0; c < 2 * n; ++c) a[r][c] -= f * a[col][c];
        }
    }
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
    return inv;
}

inline bool is_zero(const RootVec& v)
{
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

} // namespace detail

// The normalized invariant form: symmetric, positive definite, integral on
// the root lattice with gcd 1.
inline Rational inner(const RootSystem& rs, const RootVec& x, const RootVec& y)
{
    if (x.size() != rs.ambient_dim() || y.size() != rs.ambient_dim())
        throw std::invalid_argument("inner: vector dimension does not match the ambient space of " +
                                    to_string(rs.type()));
    return rs.form_scale() * detail::dot(x, y);
}

// <x, alpha> = 2 (x, alpha) / (alpha, alpha). Independent of the form scale.
inline Rational pair(const RootSystem& rs, const RootVec& x, const RootVec& alpha)
{
    if (detail::is_zero(alpha)) throw std::invalid_argument("pair: alpha must be nonzero");
    return 2 * inner(rs, x, alpha) / inner(rs, alpha, alpha);
}

// sum_i a_i lambda_i in ambient coordinates.
inline RootVec weight_vector(const RootSystem& rs, const DominantWeight& w)
{
    if (w.rank() != rs.rank())
        throw std::invalid_argument("weight has " + std::to_string(w.rank()) + " coefficients, " +
                                    to_string(rs.type()) + " has rank " + std::to_string(rs.rank()));
    RootVec v(rs.ambient_dim(), Rational(0));
    for (int i = 0; i < w.rank(); ++i)
        v = detail::axpy(Rational(w.coeffs()[static_cast<std::size_t>(i)]), rs.fundamental_weights()[static_cast<std::size_t>(i)], v);
    return v;
}

inline RootSystem build(LieType type)
{
    if (auto why = rank_violation(type); !why.empty())
        throw std::invalid_argument("invalid Lie type " + to_string(type) + ": " + why);

    RootSystem rs;
    rs.type_ = type;
    const auto n = static_cast<std::size_t>(type.rank);
    auto [dim, simple] = detail::simple_roots_for(type);
    rs.ambient_dim_ = dim;
    rs.simple_ = simple;

    // Cartan matrix from the ambient dot product.
    rs.cartan_.assign(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            rs.cartan_[i][j] = static_cast<int>(rational_to_int64(
                2 * detail::dot(simple[i], simple[j]) / detail::dot(simple[j], simple[j]), "Cartan entry"));

    // All roots as the closure of the simple roots under simple reflections,
    // in simple-root coordinates.
    std::set<std::vector<int>> roots;
    std::vector<std::vector<int>> todo;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<int> c(n, 0);
        c[i] = 1;
        roots.insert(c);
        todo.push_back(c);
    }
    while (!todo.empty()) {
        auto c = todo.back();
        todo.pop_back();
        for (std::size_t j = 0; j < n; ++j) {
            int p = 0;
            for (std::size_t i = 0; i < n; ++i) p += c[i] * rs.cartan_[i][j];
            if (p == 0) continue;
            auto r = c;
            r[j] -= p;
            if (roots.insert(r).second) todo.push_back(r);
        }
    }
    std::vector<std::vector<int>> pos;
    for (const auto& c : roots)
        if (std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; })) pos.push_back(c);
    std::sort(pos.begin(), pos.end(), [](const auto& a, const auto& b) {
        const int ha = std::accumulate(a.begin(), a.end(), 0);
        const int hb = std::accumulate(b.begin(), b.end(), 0);
        if (ha != hb) return ha < hb;
        return a > b;
    });
    if (pos.size() * 2 != roots.size()) throw std::logic_error("root system is not split into positive and negative halves");
    rs.coeffs_ = pos;
    for (const auto& c : pos) {
        RootVec v(dim, Rational(0));
        for (std::size_t i = 0; i < n; ++i)
            if (c[i]) v = detail::axpy(Rational(c[i]), simple[i], v);
        rs.positive_.push_back(v);
    }

    // Form normalization: divide the dot product by the gcd of all root
    // inner products so the root lattice becomes integral with gcd 1.
    std::vector<Rational> products;
    for (const auto& x : rs.positive_)
        for (const auto& y : rs.positive_) products.push_back(detail::dot(x, y));
    rs.form_scale_ = 1 / rational_gcd(products);
    // In A1 and C2 the root products have gcd 2 and the rule above would
    // halve the form. Keep the A_n / C_n normalization (the ambient dot
    // product) there, so (lambda, 2 alpha) stays even and the bounds agree
    // with the rest of the family.
    if (type == LieType{Family::A, 1} || type == LieType{Family::C, 2}) rs.form_scale_ = 1;

    // Fundamental weights lambda_i = sum_j (A^{-1})_{ij} alpha_j: they lie in
    // the span of the roots, which for A_n is the trace-zero hyperplane.
    const auto inv = detail::invert(rs.cartan_);
    for (std::size_t i = 0; i < n; ++i) {
        RootVec v(dim, Rational(0));
        for (std::size_t j = 0; j < n; ++j)
            if (inv[i][j] != 0) v = detail::axpy(inv[i][j], simple[j], v);
        rs.fundamental_.push_back(v);
    }

    // rho two ways; they must agree exactly.
    RootVec half_sum(dim, Rational(0));
    for (const auto& a : rs.positive_) half_sum = detail::axpy(Rational(1, 2), a, half_sum);
    RootVec weight_sum(dim, Rational(0));
    for (const auto& l : rs.fundamental_) weight_sum = detail::axpy(Rational(1), l, weight_sum);
    if (half_sum != weight_sum) throw std::logic_error("rho: half-sum of positive roots differs from sum of fundamental weights");
    rs.rho_ = half_sum;

    // Norms, pairings and the Weyl denominator.
    rs.weyl_denominator_ = 1;
    for (std::size_t k = 0; k < rs.positive_.size(); ++k) {
        const auto& a = rs.positive_[k];
        rs.norms_.push_back(inner(rs, a, a));
        std::vector<int> row(n);
        for (std::size_t j = 0; j < n; ++j)
            row[j] = static_cast<int>(rational_to_int64(pair(rs, rs.fundamental_[j], a), "coroot pairing"));
        const int rp = static_cast<int>(rational_to_int64(pair(rs, rs.rho_, a), "rho pairing"));
        if (rp != std::accumulate(row.begin(), row.end(), 0)) throw std::logic_error("rho pairing is not the sum of fundamental pairings");
        rs.pairings_.push_back(std::move(row));
        rs.rho_pairings_.push_back(rp);
        rs.weyl_denominator_ *= rp;
    }

    // Highest root: the unique root of maximal height. Highest short root:
    // the same among the roots of minimal length.
    const Rational shortest = *std::min_element(rs.norms_.begin(), rs.norms_.end());
    auto root_height = [&](std::size_t k) { return std::accumulate(rs.coeffs_[k].begin(), rs.coeffs_[k].end(), 0); };
    rs.highest_index_ = rs.positive_.size() - 1;
    for (std::size_t k = 0; k + 1 < rs.positive_.size(); ++k)
        if (root_height(k) == root_height(rs.highest_index_)) throw std::logic_error("highest root is not unique");
    rs.highest_short_index_ = 0;
    for (std::size_t k = 0; k < rs.positive_.size(); ++k)
        if (rs.norms_[k] == shortest && root_height(k) >= root_height(rs.highest_short_index_)) rs.highest_short_index_ = k;
    rs.highest_ = rs.positive_[rs.highest_index_];
    rs.highest_short_ = rs.positive_[rs.highest_short_index_];
    return rs;
}

// R_j: the positive roots whose alpha_j coefficient is nonzero, i.e. the
// roots of the nilradical of the maximal parabolic at node j (1-based).
inline std::vector<std::size_t> nilradical_indices(const RootSystem& rs, int node)
{
    if (node < 1 || node > rs.rank())
        throw std::out_of_range("node " + std::to_string(node) + " out of range for " + to_string(rs.type()));
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < rs.num_positive_roots(); ++k)
        if (rs.root_coefficients()[k][static_cast<std::size_t>(node - 1)] != 0) out.push_back(k);
    return out;
}

inline std::vector<RootVec> nilradical_roots(const RootSystem& rs, int node)
{
    std::vector<RootVec> out;
    for (auto k : nilradical_indices(rs, node)) out.push_back(rs.positive_roots()[k]);
    return out;
}

// Every permutation of the nodes preserving the Cartan matrix, identity
// first, in lexicographic order.
inline std::vector<NodePermutation> diagram_automorphisms(const std::vector<std::vector<int>>& cartan)
{
    const int n = static_cast<int>(cartan.size());
    std::vector<NodePermutation> out;
    NodePermutation perm(static_cast<std::size_t>(n), -1);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    auto extend = [&](auto&& self, int i) -> void {
        if (i == n) {
            out.push_back(perm);
            return;
        }
        for (int img = 0; img < n; ++img) {
            if (used[static_cast<std::size_t>(img)]) continue;
            bool ok = cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] ==
                      cartan[static_cast<std::size_t>(img)][static_cast<std::size_t>(img)];
            for (int k = 0; k < i && ok; ++k) {
                const auto pk = static_cast<std::size_t>(perm[static_cast<std::size_t>(k)]);
                ok = cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] == cartan[static_cast<std::size_t>(img)][pk] &&
                     cartan[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] == cartan[pk][static_cast<std::size_t>(img)];
            }
            if (!ok) continue;
            perm[static_cast<std::size_t>(i)] = img;
            used[static_cast<std::size_t>(img)] = true;
            self(self, i + 1);
            used[static_cast<std::size_t>(img)] = false;
        }
        perm[static_cast<std::size_t>(i)] = -1;
    };
    extend(extend, 0);
    return out;
}

inline std::vector<NodePermutation> diagram_automorphisms(const RootSystem& rs)
{
    return diagram_automorphisms(rs.cartan_matrix());
}

// Orbits of the diagram automorphism group on nodes, 1-based, each orbit
// sorted and orbits ordered by their least node.
inline std::vector<std::vector<int>> diagram_automorphism_orbits(const RootSystem& rs)
{
    const auto autos = diagram_automorphisms(rs);
    std::vector<std::vector<int>> orbits;
    std::vector<bool> seen(static_cast<std::size_t>(rs.rank()), false);
    for (int i = 0; i < rs.rank(); ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        std::set<int> orbit;
        for (const auto& p : autos) orbit.insert(p[static_cast<std::size_t>(i)]);
        std::vector<int> o;
        for (int k : orbit) {
            seen[static_cast<std::size_t>(k)] = true;
            o.push_back(k + 1);
        }
        orbits.push_back(o);
    }
    return orbits;
}

inline std::vector<std::vector<int>> diagram_automorphism_orbits(LieType type)
{
    return diagram_automorphism_orbits(build(type));
}

// The distinct images of w under the diagram automorphism group, sorted.
inline std::vector<DominantWeight> automorphism_orbit(const RootSystem& rs, const DominantWeight& w)
{
    std::set<DominantWeight> out;
    for (const auto& p : diagram_automorphisms(rs)) out.insert(permute_weight(p, w));
    return {out.begin(), out.end()};
}

} // namespace hwdim
