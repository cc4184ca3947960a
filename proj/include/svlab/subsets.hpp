#ifndef SVLAB_SUBSETS_HPP
#define SVLAB_SUBSETS_HPP

#include <vector>

namespace svlab {

/// All size-m subsets of {0..q-1} in lexicographic order.
inline std::vector<std::vector<int>> subsets_of_size(int q, int m) {
    std::vector<std::vector<int>> out;
    if (m < 0 || m > q) return out;
    std::vector<int> cur(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) cur[static_cast<std::size_t>(j)] = j;
    while (true) {
        out.push_back(cur);
        int j = m - 1;
        while (j >= 0 && cur[static_cast<std::size_t>(j)] == q - m + j) --j;
        if (j < 0) break;
        ++cur[static_cast<std::size_t>(j)];
        for (int t = j + 1; t < m; ++t)
            cur[static_cast<std::size_t>(t)] = cur[static_cast<std::size_t>(t - 1)] + 1;
    }
    return out;
}

/// All nonempty subsets of {0..q-1} of size at most m, sizes ascending, lexicographic within a size.
inline std::vector<std::vector<int>> subsets_up_to_size(int q, int m) {
    std::vector<std::vector<int>> out;
    for (int s = 1; s <= m && s <= q; ++s)
        for (auto& sub : subsets_of_size(q, s)) out.push_back(std::move(sub));
    return out;
}

} // namespace svlab

#endif
