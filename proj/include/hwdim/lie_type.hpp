#pragma once

#include <cctype>
#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hwdim {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

inline char family_letter(Family f) { return static_cast<char>(f); }

// A simple complex Lie algebra: Cartan-Killing family plus rank.
//
// Valid ranks: A_n (n >= 1), B_n (n >= 3), C_n (n >= 2), D_n (n >= 4),
// E_6, E_7, E_8, F_4, G_2. B_2 is never built: it is the same algebra as
// C_2 and is always presented that way.
struct LieType {
    Family family = Family::A;
    int rank = 1;

    friend auto operator<=>(const LieType&, const LieType&) = default;
};

inline std::string to_string(LieType t)
{
    return std::string(1, family_letter(t.family)) + std::to_string(t.rank);
}

// Empty string when valid, otherwise the violated constraint.
inline std::string rank_violation(LieType t)
{
    const int n = t.rank;
    switch (t.family) {
    case Family::A:
        return n >= 1 ? "" : "type A requires rank >= 1";
    case Family::B:
        if (n == 2) return "type B requires rank >= 3 (B2 is presented as C2)";
        return n >= 3 ? "" : "type B requires rank >= 3";
    case Family::C:
        return n >= 2 ? "" : "type C requires rank >= 2";
    case Family::D:
        return n >= 4 ? "" : "type D requires rank >= 4";
    case Family::E:
        return (n >= 6 && n <= 8) ? "" : "type E requires rank 6, 7 or 8";
    case Family::F:
        return n == 4 ? "" : "type F requires rank 4";
    case Family::G:
        return n == 2 ? "" : "type G requires rank 2";
    }
    return "unknown family";
}

inline bool is_valid(LieType t) { return rank_violation(t).empty(); }

inline LieType make_type(Family f, int rank)
{
    LieType t{f, rank};
    if (auto why = rank_violation(t); !why.empty())
        throw std::invalid_argument("invalid Lie type " + to_string(t) + ": " + why);
    return t;
}

// Parses "C3", "e7", "A12". Case-insensitive family letter followed by a
// decimal rank.
inline LieType parse_type(std::string_view spec)
{
    if (spec.size() < 2)
        throw std::invalid_argument("type spec '" + std::string(spec) + "' must be a family letter followed by a rank");
    const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(spec[0])));
    if (letter < 'A' || letter > 'G')
        throw std::invalid_argument("unknown Lie family '" + std::string(1, spec[0]) + "'");
    int rank = 0;
    for (char c : spec.substr(1)) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw std::invalid_argument("rank in type spec '" + std::string(spec) + "' is not a decimal number");
        rank = rank * 10 + (c - '0');
        if (rank > 1000) throw std::invalid_argument("rank in type spec '" + std::string(spec) + "' is too large");
    }
    if (letter == 'B' && rank == 2)
        throw std::invalid_argument("B2 is not constructed; use C2 (the same algebra)");
    return make_type(static_cast<Family>(letter), rank);
}

// Every valid type whose rank lies in [lo, hi], in the order A, B, C, D, E,
// F, G and then by rank.
inline std::vector<LieType> types_in_rank_range(int lo, int hi)
{
    std::vector<LieType> out;
    for (char f : {'A', 'B', 'C', 'D', 'E', 'F', 'G'})
        for (int n = lo; n <= hi; ++n)
            if (LieType t{static_cast<Family>(f), n}; is_valid(t)) out.push_back(t);
    return out;
}

} // namespace hwdim
