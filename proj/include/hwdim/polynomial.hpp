#pragma once

// Univariate polynomials with exact rational coefficients.

#include "hwdim/arith.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace hwdim {

class ExactPolynomial {
public:
    ExactPolynomial() = default;

    // Ascending degree; trailing zeros are dropped.
    explicit ExactPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static ExactPolynomial constant(Rational c) { return ExactPolynomial({std::move(c)}); }
    // c0 + c1 t
    static ExactPolynomial linear(Rational c0, Rational c1) { return ExactPolynomial({std::move(c0), std::move(c1)}); }

    // The unique polynomial of degree <= values.size() - 1 with p(i) = values[i].
    static ExactPolynomial interpolate(const std::vector<Rational>& values)
    {
        // Newton forward differences, then expand the falling-factorial basis.
        std::vector<Rational> diff = values;
        std::vector<Rational> newton;
        for (std::size_t k = 0; k < values.size(); ++k) {
            newton.push_back(diff[0]);
            for (std::size_t i = 0; i + 1 < diff.size(); ++i) diff[i] = diff[i + 1] - diff[i];
            if (!diff.empty()) diff.pop_back();
        }
        ExactPolynomial result;
        ExactPolynomial basis = constant(1); // t(t-1)...(t-k+1)/k!
        for (std::size_t k = 0; k < newton.size(); ++k) {
            result = result + basis * constant(newton[k]);
            basis = basis * linear(-Rational(static_cast<long long>(k)), 1) *
                    constant(Rational(1, static_cast<long long>(k + 1)));
        }
        return result;
    }

    bool is_zero() const { return coeffs_.empty(); }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    Rational coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
    Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

    Rational operator()(const Rational& t) const
    {
        Rational acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
        return acc;
    }

    friend ExactPolynomial operator+(const ExactPolynomial& p, const ExactPolynomial& q)
    {
        std::vector<Rational> c(std::max(p.coeffs_.size(), q.coeffs_.size()), Rational(0));
        for (std::size_t i = 0; i < p.coeffs_.size(); ++i) c[i] += p.coeffs_[i];
        for (std::size_t i = 0; i < q.coeffs_.size(); ++i) c[i] += q.coeffs_[i];
        return ExactPolynomial(std::move(c));
    }

    friend ExactPolynomial operator-(const ExactPolynomial& p, const ExactPolynomial& q)
    {
        return p + q * constant(-1);
    }

    friend ExactPolynomial operator*(const ExactPolynomial& p, const ExactPolynomial& q)
    {
        if (p.is_zero() || q.is_zero()) return {};
        std::vector<Rational> c(p.coeffs_.size() + q.coeffs_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < p.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < q.coeffs_.size(); ++j) c[i + j] += p.coeffs_[i] * q.coeffs_[j];
        return ExactPolynomial(std::move(c));
    }

    friend bool operator==(const ExactPolynomial&, const ExactPolynomial&) = default;

private:
    void trim()
    {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

// "1 + 3/2*t + t^2"
inline std::string to_string(const ExactPolynomial& p)
{
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k < p.coefficients().size(); ++k) {
        const Rational& c = p.coefficients()[k];
        if (c == 0) continue;
        std::string term = to_string(c);
        if (k > 0) {
            if (c == 1) term.clear();
            else if (c == -1) term = "-";
            else term += "*";
            term += k == 1 ? "t" : "t^" + std::to_string(k);
        }
        if (!out.empty()) out += term[0] == '-' ? " - " + term.substr(1) : " + " + term;
        else out = term;
    }
    return out;
}

} // namespace hwdim
