// Prints, for each simple type of rank <= 8, the least dimension of a
// nontrivial module and the weights attaining it.

#include "hwdim/hwdim.hpp"

#include <iostream>

int main()
{
    using namespace hwdim;
    for (LieType t : types_in_rank_range(1, 8)) {
        const auto rs = build(t);
        const auto hm = min_dim_at_height(rs, 1);
        std::cout << to_string(t) << "  dim " << to_string(hm.min_dim) << "  at";
        for (const auto& w : hm.minimizing_weights) std::cout << " " << to_string(w);
        std::cout << "  (" << to_string(duality_indicator(rs, hm.minimizing_weights.front())) << ")\n";
    }
}
