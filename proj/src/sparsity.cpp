#include "intpart/sparsity.hpp"

#include <algorithm>

namespace intpart {

std::optional<std::array<int, 4>> find_dense_four_set(const Graph& g) {
    // A 4-set spanning >= 5 edges contains an edge whose endpoints have two
    // common neighbors, and conversely such an edge plus two common neighbors
    // spans >= 5 edges. So scanning edges for two common neighbors is exact.
    for (int u = 0; u < g.n(); ++u) {
        const auto& nu = g.neighbors(u);
        for (int v : nu) {
            if (v <= u) continue;
            const auto& nv = g.neighbors(v);
            int common[2];
            int found = 0;
            std::size_t i = 0, j = 0;
            while (i < nu.size() && j < nv.size()) {
                if (nu[i] < nv[j]) {
                    ++i;
                } else if (nu[i] > nv[j]) {
                    ++j;
                } else {
                    common[found++] = nu[i];
                    if (found == 2) break;
                    ++i;
                    ++j;
                }
            }
            if (found == 2) {
                std::array<int, 4> w = {u, v, common[0], common[1]};
                std::sort(w.begin(), w.end());
                return w;
            }
        }
    }
    return std::nullopt;
}

bool is_four_sparse(const Graph& g) { return !find_dense_four_set(g).has_value(); }

}  // namespace intpart
