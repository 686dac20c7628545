#pragma once

// Dominant weights of a given height: compositions of t into n parts.

#include "hwdim/arith.hpp"
#include "hwdim/root_system.hpp"

#include <type_traits>
#include <vector>

namespace hwdim {

// C(n + t - 1, t)
inline BigInt simplex_size(int rank, int t) { return binomial(rank + t - 1, t); }

// Calls fn(w) for every dominant weight of height t, in increasing
// lexicographic order of the coefficient vector. Stops early if fn returns false.
template <class Fn>
void for_each_weight_of_height(int rank, int t, Fn&& fn)
{
    if (rank <= 0 || t < 0) return;
    std::vector<int> c(static_cast<std::size_t>(rank), 0);
    c.back() = t;
    while (true) {
        if constexpr (std::is_same_v<decltype(fn(DominantWeight(c))), bool>) {
            if (!fn(DominantWeight(c))) return;
        } else {
            fn(DominantWeight(c));
        }
        // Next composition: find the rightmost position before the last with
        // something to its right, bump it, and move the remainder to the end.
        int i = rank - 2;
        while (i >= 0) {
            int rest = 0;
            for (int k = i + 1; k < rank; ++k) rest += c[static_cast<std::size_t>(k)];
            if (rest > 0) break;
            --i;
        }
        if (i < 0) return;
        int rest = 0;
        for (int k = i + 1; k < rank; ++k) {
            rest += c[static_cast<std::size_t>(k)];
            c[static_cast<std::size_t>(k)] = 0;
        }
        c[static_cast<std::size_t>(i)] += 1;
        c.back() = rest - 1;
    }
}

inline std::vector<DominantWeight> weights_of_height(int rank, int t)
{
    std::vector<DominantWeight> out;
    for_each_weight_of_height(rank, t, [&](const DominantWeight& w) { out.push_back(w); });
    return out;
}

} // namespace hwdim
