#pragma once

// Exact integer and rational arithmetic shared by every module.
//
// Dimensions of highest-weight modules outgrow 64 bits quickly (E8 at
// modest heights), so every dimension is a BigInt. Ambient root coordinates
// need denominators (A_n weights, half-integral spin weights) and are held
// as Rationals. Nothing in the library touches floating point.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hwdim {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt& x) { return x.str(); }

inline std::string to_string(const Rational& x)
{
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (denominator(x) == 1) return numerator(x).str();
    return numerator(x).str() + "/" + denominator(x).str();
}

inline bool is_integral(const Rational& x)
{
    return boost::multiprecision::denominator(x) == 1;
}

// Throws std::logic_error when x is not an integer; `what` names the
// quantity for the message.
inline BigInt require_integer(const Rational& x, const char* what)
{
    if (!is_integral(x))
        throw std::logic_error(std::string(what) + " is not integral: " + to_string(x));
    return boost::multiprecision::numerator(x);
}

inline std::int64_t to_int64(const BigInt& x, const char* what)
{
    if (x > BigInt(INT64_MAX) || x < BigInt(INT64_MIN))
        throw std::overflow_error(std::string(what) + " does not fit in 64 bits");
    return static_cast<std::int64_t>(x);
}

inline std::int64_t rational_to_int64(const Rational& x, const char* what)
{
    return to_int64(require_integer(x, what), what);
}

// gcd of a list of rationals: the largest positive rational g with every
// x_i / g integral. Zero entries are ignored; the gcd of nothing is zero.
inline Rational rational_gcd(const std::vector<Rational>& xs)
{
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    BigInt num = 0;
    BigInt den = 1;
    for (const auto& x : xs) {
        if (x == 0) continue;
        num = boost::multiprecision::gcd(num, boost::multiprecision::abs(numerator(x)));
        den = boost::multiprecision::lcm(den, denominator(x));
    }
    return Rational(num, den);
}

inline BigInt binomial(std::int64_t n, std::int64_t k)
{
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Primality and semiprime factorisation
// ---------------------------------------------------------------------------

// Miller-Rabin with the first twelve primes as witnesses is deterministic
// for every n < 3.317e24.
inline const BigInt& miller_rabin_limit()
{
    static const BigInt limit("3317044064679887385961981");
    return limit;
}

namespace detail {

inline bool miller_rabin_round(const BigInt& n, const BigInt& d, unsigned r, const BigInt& a)
{
    BigInt x = boost::multiprecision::powm(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (unsigned i = 1; i < r; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return true;
    }
    return false;
}

} // namespace detail

inline bool is_prime(const BigInt& n)
{
    static constexpr unsigned witnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    if (n < 2) return false;
    for (unsigned p : witnesses) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    if (n >= miller_rabin_limit())
        throw std::domain_error("is_prime: " + n.str() + " exceeds the deterministic Miller-Rabin range");
    BigInt d = n - 1;
    unsigned r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (unsigned a : witnesses)
        if (!detail::miller_rabin_round(n, d, r, BigInt(a))) return false;
    return true;
}

namespace detail {

// Pollard-Brent with fixed polynomial constants, so factorisation is fully
// deterministic. Returns a nontrivial factor of a composite n.
inline BigInt pollard_brent(const BigInt& n)
{
    if ((n & 1) == 0) return 2;
    for (unsigned c = 1; c < 64; ++c) {
        auto f = [&](const BigInt& x) { return (x * x + c) % n; };
        BigInt y = 2, x = 2, g = 1, q = 1, ys = 2;
        std::size_t r = 1;
        constexpr std::size_t m = 64;
        do {
            x = y;
            for (std::size_t i = 0; i < r; ++i) y = f(y);
            std::size_t k = 0;
            do {
                ys = y;
                for (std::size_t i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = (q * boost::multiprecision::abs(x - y)) % n;
                }
                g = boost::multiprecision::gcd(q, n);
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = boost::multiprecision::gcd(boost::multiprecision::abs(x - ys), n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
    throw std::runtime_error("pollard_brent: no factor found for " + n.str());
}

} // namespace detail

// If d = p*q with p <= q prime (not necessarily distinct), returns (p, q).
inline std::optional<std::pair<BigInt, BigInt>> semiprime_factors(const BigInt& d)
{
    if (d < 4) return std::nullopt;
    // Small factors by trial division first; a semiprime has its least
    // prime factor below sqrt(d), which trial division finds quickly when
    // it is small.
    for (unsigned p = 2; p < 1000; ++p) {
        if (BigInt(p) * p > d) break;
        if (d % p == 0) {
            BigInt q = d / p;
            if (is_prime(q)) return std::make_pair(BigInt(p), q);
            return std::nullopt;
        }
    }
    if (is_prime(d)) return std::nullopt;
    BigInt f = detail::pollard_brent(d);
    BigInt g = d / f;
    if (!is_prime(f) || !is_prime(g)) return std::nullopt;
    if (f > g) std::swap(f, g);
    return std::make_pair(f, g);
}

inline bool is_semiprime(const BigInt& d) { return semiprime_factors(d).has_value(); }

} // namespace hwdim
