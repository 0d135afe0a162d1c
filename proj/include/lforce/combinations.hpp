#pragma once

#include <cstdint>
#include <limits>
#include <vector>

namespace lforce {

// Enumeration of k-subsets of {0..n-1} in lexicographic order of the sorted
// member tuples, plus rank arithmetic for splitting the sequence into
// contiguous blocks.

inline std::vector<int> first_combination(int k) {
    std::vector<int> c(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = i;
    return c;
}

// Advance c to its lexicographic successor; false when c was the last one.
inline bool next_combination(std::vector<int>& c, int n) {
    int k = static_cast<int>(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[static_cast<std::size_t>(i)] < n - k + i) {
            int v = ++c[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j) c[static_cast<std::size_t>(j)] = ++v;
            return true;
        }
    }
    return false;
}

// C(n, k), saturating at max() instead of overflowing.
inline std::uint64_t binomial_saturating(int n, int k) {
    constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        std::uint64_t factor = static_cast<std::uint64_t>(n - k + i);
        if (r > kMax / factor) return kMax;
        r = r * factor / static_cast<std::uint64_t>(i);
    }
    return r;
}

// The rank-th k-subset (0-based) in the lexicographic order above. Assumes
// rank < C(n, k) and C(n, k) fits in 64 bits.
inline std::vector<int> combination_from_rank(int n, int k, std::uint64_t rank) {
    std::vector<int> c;
    c.reserve(static_cast<std::size_t>(k));
    int v = 0;
    for (int remaining = k; remaining > 0; --remaining) {
        for (;; ++v) {
            std::uint64_t block = binomial_saturating(n - v - 1, remaining - 1);
            if (rank < block) break;
            rank -= block;
        }
        c.push_back(v++);
    }
    return c;
}

} // namespace lforce
