// Test-only exhaustive oracles: plain bitmask scans over every vertex (or
// edge) subset, judged by the definitional predicates. Deliberately
// independent of the branch-and-bound solver path.
#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "opl/graph.hpp"

namespace oracle {

inline opl::VertexSet mask_to_set(uint64_t mask) {
    opl::VertexSet out;
    for (int v = 0; mask; ++v, mask >>= 1)
        if (mask & 1) out.push_back(v);
    return out;
}

struct ScanResult {
    int value = 0;
    std::vector<opl::VertexSet> witnesses;  // all optimal sets, lex order
    bool unique() const { return witnesses.size() == 1; }
};

template <typename Pred>
ScanResult max_scan(const opl::Graph& g, Pred pred) {
    ScanResult best;
    best.value = -1;
    for (uint64_t mask = 0; mask < (uint64_t(1) << g.n()); ++mask) {
        auto s = mask_to_set(mask);
        if (!pred(g, s)) continue;
        int size = static_cast<int>(s.size());
        if (size > best.value) {
            best.value = size;
            best.witnesses.clear();
        }
        if (size == best.value) best.witnesses.push_back(std::move(s));
    }
    std::sort(best.witnesses.begin(), best.witnesses.end());
    return best;
}

inline ScanResult max_open_packing(const opl::Graph& g) {
    return max_scan(g, [](const opl::Graph& gg, const opl::VertexSet& s) {
        return opl::is_open_packing(gg, s);
    });
}

inline ScanResult max_two_packing(const opl::Graph& g) {
    return max_scan(g, [](const opl::Graph& gg, const opl::VertexSet& s) {
        return opl::is_two_packing(gg, s);
    });
}

inline ScanResult max_independent_set(const opl::Graph& g) {
    return max_scan(g, [](const opl::Graph& gg, const opl::VertexSet& s) {
        return opl::is_independent(gg, s);
    });
}

inline ScanResult min_total_dominating_set(const opl::Graph& g) {
    ScanResult best;
    best.value = g.n() + 1;
    for (uint64_t mask = 0; mask < (uint64_t(1) << g.n()); ++mask) {
        auto s = mask_to_set(mask);
        if (!opl::is_total_dominating(g, s)) continue;
        int size = static_cast<int>(s.size());
        if (size < best.value) {
            best.value = size;
            best.witnesses.clear();
        }
        if (size == best.value) best.witnesses.push_back(std::move(s));
    }
    std::sort(best.witnesses.begin(), best.witnesses.end());
    return best;
}

inline int max_matching_value(const opl::Graph& g) {
    auto edges = g.edges();
    // Dense graphs have too many edge subsets for a flat scan, so walk every
    // matching instead: at each edge, skip it or take it when disjoint. No
    // bounding or memoization -- still a full enumeration of matchings.
    int best = 0;
    uint64_t used = 0;
    auto rec = [&](auto&& self, size_t i, int size) -> void {
        best = std::max(best, size);
        for (size_t j = i; j < edges.size(); ++j) {
            uint64_t bits = (uint64_t(1) << edges[j].first) |
                            (uint64_t(1) << edges[j].second);
            if (used & bits) continue;
            used |= bits;
            self(self, j + 1, size + 1);
            used &= ~bits;
        }
    };
    rec(rec, 0, 0);
    return best;
}

inline long count_open_packings_avoiding(const opl::Graph& g, int k, int x) {
    long count = 0;
    for (uint64_t mask = 0; mask < (uint64_t(1) << g.n()); ++mask) {
        if (mask & (uint64_t(1) << x)) continue;
        auto s = mask_to_set(mask);
        if (static_cast<int>(s.size()) != k) continue;
        if (opl::is_open_packing(g, s)) ++count;
    }
    return count;
}

}  // namespace oracle
