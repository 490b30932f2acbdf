#pragma once

#include <cstdint>
#include <vector>

#include "shiftgb/error.hpp"

namespace shiftgb {

inline std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    std::uint64_t acc = 1;
    for (int i = 1; i <= k; ++i) {
        // exact at every step: acc is C(n-k+i-1, i-1) * ... kept integral
        acc = acc * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    }
    return acc;
}

// All k-subsets of {1, 2, ..., n} in lexicographic order.
inline std::vector<std::vector<int>> combinations_lex(int n, int k) {
    if (k < 0 || n < 0 || k > n)
        throw value_error("combinations_lex: need 0 <= k <= n");
    std::vector<std::vector<int>> out;
    if (k == 0) {
        out.push_back({});
        return out;
    }
    std::vector<int> cur(k);
    for (int i = 0; i < k; ++i)
        cur[i] = i + 1;
    for (;;) {
        out.push_back(cur);
        // advance to the lexicographic successor
        int i = k - 1;
        while (i >= 0 && cur[i] == n - (k - 1 - i))
            --i;
        if (i < 0)
            break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j)
            cur[j] = cur[j - 1] + 1;
    }
    return out;
}

} // namespace shiftgb
