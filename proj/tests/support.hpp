#pragma once

// Shared brute-force oracles for the test binaries. Everything here is an
// independent route to results the library computes another way.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "footseq/sequence.hpp"

namespace testsupport {

// All nondecreasing integer sequences of length n with entries in [lo, hi],
// enumerated by plain recursion (independent of RegularGenerator).
inline std::vector<std::vector<int>> brute_sequences(int n, int lo, int hi) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(n));
    auto rec = [&](auto&& self, int pos, int minv) -> void {
        if (pos == n) {
            out.push_back(cur);
            return;
        }
        for (int v = minv; v <= hi; ++v) {
            cur[pos] = v;
            self(self, pos + 1, v);
        }
    };
    rec(rec, 0, lo);
    return out;
}

// Point totals realizable by some round-robin with results 3:0 / 1:1 / 0:3,
// found by trying all 3^(n(n-1)/2) outcome vectors. Returns sorted totals.
inline std::set<std::vector<int>> brute_football_sequences(int n) {
    std::set<std::vector<int>> out;
    const int m = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> matches;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) matches.emplace_back(i, j);
    long long total = 1;
    for (int i = 0; i < m; ++i) total *= 3;
    std::vector<int> score(static_cast<std::size_t>(n));
    for (long long code = 0; code < total; ++code) {
        std::fill(score.begin(), score.end(), 0);
        long long c = code;
        for (int i = 0; i < m; ++i) {
            const int r = static_cast<int>(c % 3);
            c /= 3;
            const auto [a, b] = matches[i];
            if (r == 0) {
                score[a] += 1;
                score[b] += 1;
            } else if (r == 1) {
                score[a] += 3;
            } else {
                score[b] += 3;
            }
        }
        std::vector<int> sorted = score;
        std::sort(sorted.begin(), sorted.end());
        out.insert(std::move(sorted));
    }
    return out;
}

// Sorted degree sequences of all simple graphs on n vertices, by enumerating
// every edge subset.
inline std::set<std::vector<int>> brute_graphical_sequences(int n) {
    std::set<std::vector<int>> out;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    const int m = static_cast<int>(edges.size());
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        std::vector<int> deg(static_cast<std::size_t>(n), 0);
        for (int e = 0; e < m; ++e) {
            if (mask & (1u << e)) {
                ++deg[edges[e].first];
                ++deg[edges[e].second];
            }
        }
        std::sort(deg.begin(), deg.end());
        out.insert(std::move(deg));
    }
    return out;
}

}  // namespace testsupport
