#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace opl {

/// Sorted list of vertex ids; the witness type for packings and
/// independent sets.
using VertexSet = std::vector<int>;

/// Unordered vertex pair, stored with first < second.
using Edge = std::pair<int, int>;
using EdgeSet = std::vector<Edge>;

/// Simple undirected graph on vertices 0..n-1. Immutable after
/// construction; no loops, no multi-edges.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(static_cast<size_t>(n)) {
        if (n < 0) throw std::invalid_argument("negative vertex count");
    }
    static Graph from_edges(int n, const std::vector<Edge>& edges);

    int n() const { return static_cast<int>(adj_.size()); }
    int m() const;

    const std::vector<int>& neighbors(int v) const {
        check_vertex(v);
        return adj_[static_cast<size_t>(v)];
    }
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    bool adjacent(int u, int v) const;

    /// All edges as sorted (u,v) pairs, u < v, lexicographic order.
    EdgeSet edges() const;

    /// Neighborhood as a 64-bit mask; only valid for n <= 64.
    uint64_t neighbor_mask(int v) const;

    void check_vertex(int v) const {
        if (v < 0 || v >= n()) throw std::out_of_range("vertex out of range");
    }

    bool operator==(const Graph& other) const { return adj_ == other.adj_; }

private:
    std::vector<std::vector<int>> adj_;  // each list sorted
};

VertexSet open_neighborhood(const Graph& g, int v);

bool is_open_packing(const Graph& g, const VertexSet& s);
bool is_two_packing(const Graph& g, const VertexSet& s);
bool is_independent(const Graph& g, const VertexSet& s);
bool is_total_dominating(const Graph& g, const VertexSet& s);
bool is_matching(const Graph& g, const EdgeSet& s);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

/// BFS distance; nullopt when u and v are in different components.
std::optional<int> distance(const Graph& g, int u, int v);

VertexSet leaves(const Graph& g);
VertexSet support_vertices(const Graph& g);
VertexSet strong_support_vertices(const Graph& g);

/// AHU code rooted at the tree center; equal codes iff isomorphic.
/// Throws on non-tree input.
std::string canonical_tree_code(const Graph& g);

bool is_cut_edge(const Graph& g, Edge e);

/// Path graph 0-1-...-(n-1).
Graph path_graph(int n);
/// Cycle graph on n >= 3 vertices.
Graph cycle_graph(int n);
/// Complete graph.
Graph complete_graph(int n);
/// Star K_{1,k} with center 0.
Graph star_graph(int k);

/// Delete the given vertices and compact ids; old_to_new[v] is the new id
/// or -1 when v was removed.
Graph remove_vertices(const Graph& g, const VertexSet& removed,
                      std::vector<int>* old_to_new = nullptr);

/// Brute-force canonical key: lexicographically smallest upper-triangle
/// bitstring over all vertex permutations. Requires n <= 10.
uint64_t brute_force_canonical_key(const Graph& g);

}  // namespace opl
