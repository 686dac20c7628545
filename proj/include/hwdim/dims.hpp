#pragma once

// Weyl dimension formula and the height-t polynomials f_j(t) = dim V(t lambda_j).

#include "hwdim/polynomial.hpp"
#include "hwdim/root_system.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

namespace hwdim {

// <rho + lambda, alpha_k^vee> for positive root k.
inline std::int64_t shifted_pairing(const RootSystem& rs, const DominantWeight& w, std::size_t k)
{
    const auto& row = rs.coroot_pairings()[k];
    std::int64_t s = 0;
    for (std::size_t j = 0; j < row.size(); ++j) s += static_cast<std::int64_t>(w.coeffs()[j] + 1) * row[j];
    return s;
}

inline void check_weight(const RootSystem& rs, const DominantWeight& w)
{
    if (w.rank() != rs.rank())
        throw std::invalid_argument("weight " + coeff_string(w) + " has " + std::to_string(w.rank()) +
                                    " coefficients but " + to_string(rs.type()) + " has rank " +
                                    std::to_string(rs.rank()));
}

// prod_alpha <rho + lambda, alpha^vee>.
inline BigInt weyl_numerator(const RootSystem& rs, const DominantWeight& w)
{
    check_weight(rs, w);
    BigInt num = 1;
    for (std::size_t k = 0; k < rs.num_positive_roots(); ++k) num *= shifted_pairing(rs, w, k);
    return num;
}

inline BigInt weyl_dim(const RootSystem& rs, const DominantWeight& w)
{
    const BigInt num = weyl_numerator(rs, w);
    BigInt q, r;
    boost::multiprecision::divide_qr(num, rs.weyl_denominator(), q, r);
    if (r != 0)
        throw std::logic_error("Weyl numerator not divisible by denominator for " + to_string(rs.type()) + " " +
                               coeff_string(w));
    return q;
}

// f_j(t) = dim V(t lambda_j), degree |R_j|, by interpolation at t = 0..deg.
inline ExactPolynomial f_poly(const RootSystem& rs, int node)
{
    const auto deg = nilradical_indices(rs, node).size();
    std::vector<Rational> values;
    for (std::size_t t = 0; t <= deg; ++t)
        values.emplace_back(weyl_dim(rs, DominantWeight::fundamental(rs.rank(), node, static_cast<int>(t))));
    return ExactPolynomial::interpolate(values);
}

struct MinFundamentalReport {
    int s = 1;              // 1-based
    std::vector<int> orbit; // 1-based, sorted
    BigInt m;
};

// The fundamental weights of least dimension. They form one orbit of the
// diagram automorphism group; s is its least node.
inline MinFundamentalReport min_fundamental(const RootSystem& rs)
{
    std::vector<BigInt> dims;
    for (int i = 1; i <= rs.rank(); ++i) dims.push_back(weyl_dim(rs, DominantWeight::fundamental(rs.rank(), i)));
    MinFundamentalReport rep;
    rep.m = *std::min_element(dims.begin(), dims.end());
    for (int i = 1; i <= rs.rank(); ++i)
        if (dims[static_cast<std::size_t>(i - 1)] == rep.m) rep.orbit.push_back(i);
    rep.s = rep.orbit.front();
    const auto orbits = diagram_automorphism_orbits(rs);
    if (std::find(orbits.begin(), orbits.end(), rep.orbit) == orbits.end())
        throw std::logic_error("minimal fundamental weights of " + to_string(rs.type()) + " are not a single orbit");
    return rep;
}

} // namespace hwdim
