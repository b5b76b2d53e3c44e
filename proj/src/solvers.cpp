#include "opl/solvers.hpp"

#include <bit>
#include <limits>

namespace opl {

namespace {

constexpr size_t kNoLimit = std::numeric_limits<size_t>::max();

int popcount(uint64_t x) { return std::popcount(x); }

VertexSet mask_to_set(uint64_t mask) {
    VertexSet out;
    while (mask) {
        int v = std::countr_zero(mask);
        out.push_back(v);
        mask &= mask - 1;
    }
    return out;
}

// Branch-and-bound maximum independent set over a pairwise conflict
// relation given as bitmasks. Branches on the lowest candidate vertex,
// include before exclude, so witnesses come out in lexicographic order
// and the first one kept is the lexicographically smallest maximum set.
// Collects at most `limit` maximum sets; the remaining-capacity bound
// count + |candidates| prunes branches that cannot reach the incumbent.
struct MaxSetSearch {
    const std::vector<uint64_t>& conf;
    size_t limit;
    int best = -1;
    std::vector<uint64_t> witnesses;

    void dfs(uint64_t cands, uint64_t chosen, int count) {
        int cap = count + popcount(cands);
        if (best >= 0) {
            if (cap < best) return;
            if (cap == best && witnesses.size() >= limit) return;
        }
        if (!cands) {
            if (count > best) {
                best = count;
                witnesses.assign(1, chosen);
            } else if (count == best && witnesses.size() < limit) {
                witnesses.push_back(chosen);
            }
            return;
        }
        int v = std::countr_zero(cands);
        uint64_t bit = uint64_t(1) << v;
        dfs(cands & ~bit & ~conf[static_cast<size_t>(v)], chosen | bit, count + 1);
        dfs(cands & ~bit, chosen, count);
    }
};

SolverResult solve_max_set(const std::vector<uint64_t>& conf, int n, bool enumerate) {
    MaxSetSearch search{conf, enumerate ? kNoLimit : size_t{2}};
    uint64_t all = n == 64 ? ~uint64_t(0) : (uint64_t(1) << n) - 1;
    search.dfs(all, 0, 0);
    SolverResult res;
    res.value = search.best;
    res.witness = mask_to_set(search.witnesses.front());
    res.unique = search.witnesses.size() == 1;
    if (enumerate) {
        res.all_witnesses.emplace();
        for (uint64_t w : search.witnesses) res.all_witnesses->push_back(mask_to_set(w));
    }
    return res;
}

SolverResult empty_graph_result(bool enumerate) {
    SolverResult res;
    if (enumerate) res.all_witnesses.emplace(1, VertexSet{});
    return res;
}

void require_small(const Graph& g) {
    if (g.n() > 64) throw std::domain_error("solver supports n <= 64");
}

// Conflict relation for open packings: u and v clash iff they share a
// neighbor (an open packing is exactly an independent set of this relation).
std::vector<uint64_t> open_packing_conflicts(const Graph& g) {
    int n = g.n();
    std::vector<uint64_t> nb(static_cast<size_t>(n)), conf(static_cast<size_t>(n), 0);
    for (int v = 0; v < n; ++v) nb[static_cast<size_t>(v)] = g.neighbor_mask(v);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (nb[static_cast<size_t>(u)] & nb[static_cast<size_t>(v)]) {
                conf[static_cast<size_t>(u)] |= uint64_t(1) << v;
                conf[static_cast<size_t>(v)] |= uint64_t(1) << u;
            }
    return conf;
}

// 2-packing: clash iff distance <= 2 (adjacent or sharing a neighbor).
std::vector<uint64_t> two_packing_conflicts(const Graph& g) {
    auto conf = open_packing_conflicts(g);
    for (int v = 0; v < g.n(); ++v) conf[static_cast<size_t>(v)] |= g.neighbor_mask(v);
    return conf;
}

std::vector<uint64_t> adjacency_conflicts(const Graph& g) {
    std::vector<uint64_t> conf(static_cast<size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) conf[static_cast<size_t>(v)] = g.neighbor_mask(v);
    return conf;
}

}  // namespace

SolverResult max_open_packing(const Graph& g, bool enumerate) {
    require_small(g);
    if (g.n() == 0) return empty_graph_result(enumerate);
    return solve_max_set(open_packing_conflicts(g), g.n(), enumerate);
}

SolverResult max_two_packing(const Graph& g, bool enumerate) {
    require_small(g);
    if (g.n() == 0) return empty_graph_result(enumerate);
    return solve_max_set(two_packing_conflicts(g), g.n(), enumerate);
}

SolverResult max_independent_set(const Graph& g, bool enumerate) {
    require_small(g);
    if (g.n() == 0) return empty_graph_result(enumerate);
    return solve_max_set(adjacency_conflicts(g), g.n(), enumerate);
}

namespace {

struct MatchingSearch {
    const EdgeSet& edges;
    int n;
    int best = -1;
    size_t found = 0;
    EdgeSet incumbent;
    EdgeSet stack;

    void dfs(size_t i, uint64_t used, int count) {
        int free_pairs = (n - popcount(used)) / 2;
        int cap = count + std::min(static_cast<int>(edges.size() - i), free_pairs);
        if (best >= 0 && (cap < best || (cap == best && found >= 2))) return;
        if (i == edges.size()) {
            if (count > best) {
                best = count;
                incumbent = stack;
                found = 1;
            } else if (count == best) {
                ++found;
            }
            return;
        }
        auto [u, v] = edges[i];
        uint64_t ub = uint64_t(1) << u, vb = uint64_t(1) << v;
        if (!(used & (ub | vb))) {
            stack.push_back(edges[i]);
            dfs(i + 1, used | ub | vb, count + 1);
            stack.pop_back();
        }
        dfs(i + 1, used, count);
    }
};

}  // namespace

SolverResult max_matching(const Graph& g) {
    require_small(g);
    SolverResult res;
    if (g.n() == 0) return res;
    auto edges = g.edges();
    MatchingSearch search{edges, g.n()};
    search.dfs(0, 0, 0);
    res.value = search.best;
    res.edge_witness = search.incumbent;
    res.unique = search.found == 1;
    return res;
}

namespace {

struct TotalDominationSearch {
    const std::vector<uint64_t>& nb;
    int n;
    uint64_t all;
    int best;
    size_t found = 0;
    uint64_t incumbent = 0;

    void dfs(int idx, uint64_t chosen, uint64_t dominated, int count) {
        if (count > best || (count == best && dominated != all)) return;
        if (dominated == all && (count < best || found < 2)) {
            // Completing with no further vertices is optimal here.
            if (count < best) {
                best = count;
                incumbent = chosen;
                found = 1;
            } else if (count == best) {
                ++found;
            }
            return;
        }
        if (idx == n) return;
        // Infeasible when some vertex can no longer acquire a dominator.
        uint64_t undecided_hi = idx + 1 >= 64 ? 0 : ~((uint64_t(1) << (idx + 1)) - 1) & all;
        uint64_t avail = chosen | (uint64_t(1) << idx) | undecided_hi;
        for (int v = 0; v < n; ++v)
            if (!(nb[static_cast<size_t>(v)] & avail)) {
                // v only dominatable if idx itself is chosen
                if (!(nb[static_cast<size_t>(v)] & (uint64_t(1) << idx))) return;
            }
        uint64_t bit = uint64_t(1) << idx;
        dfs(idx + 1, chosen | bit, dominated | nb[static_cast<size_t>(idx)], count + 1);
        dfs(idx + 1, chosen, dominated, count);
    }
};

}  // namespace

SolverResult total_domination_number(const Graph& g) {
    require_small(g);
    if (g.n() == 0) return SolverResult{};
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) == 0)
            throw std::domain_error("total domination undefined with isolated vertices");
    std::vector<uint64_t> nb(static_cast<size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) nb[static_cast<size_t>(v)] = g.neighbor_mask(v);
    uint64_t all = g.n() == 64 ? ~uint64_t(0) : (uint64_t(1) << g.n()) - 1;
    TotalDominationSearch search{nb, g.n(), all, g.n() + 1};
    search.dfs(0, 0, 0, 0);
    SolverResult res;
    res.value = search.best;
    res.witness = mask_to_set(search.incumbent);
    res.unique = search.found == 1;
    return res;
}

std::optional<VertexSet> unique_max_open_packing(const Graph& g) {
    auto res = max_open_packing(g);
    if (!res.unique) return std::nullopt;
    return res.witness;
}

namespace {

struct RestrictedCountSearch {
    const std::vector<uint64_t>& conf;
    int k;
    long total = 0;
    std::vector<uint64_t> samples;

    void dfs(uint64_t cands, uint64_t chosen, int count) {
        if (count == k) {
            ++total;
            if (samples.size() < 2) samples.push_back(chosen);
            return;
        }
        if (count + popcount(cands) < k) return;
        int v = std::countr_zero(cands);
        uint64_t bit = uint64_t(1) << v;
        dfs(cands & ~bit & ~conf[static_cast<size_t>(v)], chosen | bit, count + 1);
        dfs(cands & ~bit, chosen, count);
    }
};

}  // namespace

long count_open_packings_avoiding(const Graph& g, int k, int x,
                                  std::vector<VertexSet>* out) {
    require_small(g);
    g.check_vertex(x);
    if (k < 0) throw std::invalid_argument("negative packing size");
    auto conf = open_packing_conflicts(g);
    uint64_t all = g.n() == 64 ? ~uint64_t(0) : (uint64_t(1) << g.n()) - 1;
    RestrictedCountSearch search{conf, k};
    search.dfs(all & ~(uint64_t(1) << x), 0, 0);
    if (out) {
        out->clear();
        if (search.total <= 2)
            for (uint64_t s : search.samples) out->push_back(mask_to_set(s));
    }
    return search.total;
}

bool unique_restricted_open_packing(const Graph& g, int k, int x) {
    return count_open_packings_avoiding(g, k, x) == 1;
}

}  // namespace opl
