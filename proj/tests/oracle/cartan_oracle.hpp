#pragma once

// Cartan matrices read off the Dynkin diagrams (Bourbaki numbering), with
// no root realization involved. A[i][j] = <alpha_i, alpha_j^vee>.

#include <stdexcept>
#include <utility>
#include <vector>

namespace oracle {

struct Diagram {
    std::vector<int> length;                // squared length of each simple root, in units of the shortest
    std::vector<std::pair<int, int>> edges; // 1-based node pairs
};

inline Diagram diagram(char family, int n)
{
    Diagram d;
    d.length.assign(static_cast<std::size_t>(n), 1);
    auto chain = [&](int from, int to) {
        for (int i = from; i < to; ++i) d.edges.push_back({i, i + 1});
    };
    switch (family) {
    case 'A': chain(1, n); break;
    case 'B':
        chain(1, n);
        for (int i = 0; i < n - 1; ++i) d.length[static_cast<std::size_t>(i)] = 2;
        break;
    case 'C':
        chain(1, n);
        d.length[static_cast<std::size_t>(n - 1)] = 2;
        break;
    case 'D':
        chain(1, n - 1);
        d.edges.push_back({n - 2, n});
        break;
    case 'E':
        d.edges = {{1, 3}, {3, 4}, {2, 4}, {4, 5}};
        chain(5, n);
        break;
    case 'F':
        chain(1, 4);
        d.length = {2, 2, 1, 1};
        break;
    case 'G':
        d.edges = {{1, 2}};
        d.length = {1, 3};
        break;
    default: throw std::invalid_argument("family");
    }
    return d;
}

inline std::vector<std::vector<int>> cartan(char family, int n)
{
    const Diagram d = diagram(family, n);
    std::vector<std::vector<int>> a(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 2;
    for (auto [p, q] : d.edges) {
        const int li = d.length[static_cast<std::size_t>(p - 1)], lj = d.length[static_cast<std::size_t>(q - 1)];
        // The longer root pairs with the shorter coroot to -(ratio of lengths).
        a[static_cast<std::size_t>(p - 1)][static_cast<std::size_t>(q - 1)] = li >= lj ? -li / lj : -1;
        a[static_cast<std::size_t>(q - 1)][static_cast<std::size_t>(p - 1)] = lj >= li ? -lj / li : -1;
    }
    return a;
}

inline int positive_root_count(char family, int n)
{
    switch (family) {
    case 'A': return n * (n + 1) / 2;
    case 'B':
    case 'C': return n * n;
    case 'D': return n * (n - 1);
    case 'E': return n == 6 ? 36 : n == 7 ? 63 : 120;
    case 'F': return 24;
    case 'G': return 6;
    }
    throw std::invalid_argument("family");
}

// Dimensions of the fundamental modules of the exceptional algebras.
inline std::vector<long long> exceptional_fundamental_dims(char family, int n)
{
    if (family == 'E' && n == 6) return {27, 78, 351, 2925, 351, 27};
    if (family == 'E' && n == 7) return {133, 912, 8645, 365750, 27664, 1539, 56};
    if (family == 'E' && n == 8) return {3875, 147250, 6696000, 6899079264LL, 146325270, 2450240, 30380, 248};
    if (family == 'F') return {52, 1274, 273, 26};
    if (family == 'G') return {7, 14};
    throw std::invalid_argument("not exceptional");
}

} // namespace oracle
