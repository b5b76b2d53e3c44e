#include "opl/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace opl {

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        g.check_vertex(u);
        g.check_vertex(v);
        if (u == v) throw std::invalid_argument("self-loop rejected");
        if (!g.adjacent(u, v)) {
            g.adj_[static_cast<size_t>(u)].push_back(v);
            g.adj_[static_cast<size_t>(v)].push_back(u);
        }
    }
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
    return g;
}

int Graph::m() const {
    size_t deg_sum = 0;
    for (const auto& nb : adj_) deg_sum += nb.size();
    return static_cast<int>(deg_sum / 2);
}

bool Graph::adjacent(int u, int v) const {
    const auto& nb = neighbors(u);
    check_vertex(v);
    return std::binary_search(nb.begin(), nb.end(), v);
}

EdgeSet Graph::edges() const {
    EdgeSet out;
    for (int u = 0; u < n(); ++u)
        for (int v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

uint64_t Graph::neighbor_mask(int v) const {
    if (n() > 64) throw std::domain_error("neighbor_mask needs n <= 64");
    uint64_t mask = 0;
    for (int u : neighbors(v)) mask |= uint64_t(1) << u;
    return mask;
}

VertexSet open_neighborhood(const Graph& g, int v) { return g.neighbors(v); }

bool is_open_packing(const Graph& g, const VertexSet& s) {
    // Equivalent pairwise-disjoint-neighborhood check: no vertex of g has
    // two neighbors in s.
    std::vector<int> hits(static_cast<size_t>(g.n()), 0);
    for (int v : s) {
        g.check_vertex(v);
        for (int u : g.neighbors(v))
            if (++hits[static_cast<size_t>(u)] > 1) return false;
    }
    return true;
}

bool is_two_packing(const Graph& g, const VertexSet& s) {
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j) {
            auto d = distance(g, s[i], s[j]);
            if (s[i] == s[j]) continue;
            if (d && *d < 3) return false;
        }
    return true;
}

bool is_independent(const Graph& g, const VertexSet& s) {
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j)
            if (g.adjacent(s[i], s[j])) return false;
    return true;
}

bool is_total_dominating(const Graph& g, const VertexSet& s) {
    std::vector<char> in(static_cast<size_t>(g.n()), 0);
    for (int v : s) {
        g.check_vertex(v);
        in[static_cast<size_t>(v)] = 1;
    }
    for (int v = 0; v < g.n(); ++v) {
        bool dominated = false;
        for (int u : g.neighbors(v))
            if (in[static_cast<size_t>(u)]) { dominated = true; break; }
        if (!dominated) return false;
    }
    return true;
}

bool is_matching(const Graph& g, const EdgeSet& s) {
    std::vector<char> used(static_cast<size_t>(g.n()), 0);
    for (auto [u, v] : s) {
        if (!g.adjacent(u, v)) return false;
        if (used[static_cast<size_t>(u)] || used[static_cast<size_t>(v)])
            return false;
        used[static_cast<size_t>(u)] = used[static_cast<size_t>(v)] = 1;
    }
    return true;
}

bool is_connected(const Graph& g) {
    if (g.n() == 0) return true;
    std::vector<char> seen(static_cast<size_t>(g.n()), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int count = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int u : g.neighbors(v))
            if (!seen[static_cast<size_t>(u)]) {
                seen[static_cast<size_t>(u)] = 1;
                ++count;
                q.push(u);
            }
    }
    return count == g.n();
}

bool is_tree(const Graph& g) {
    if (g.n() == 0) return false;
    return is_connected(g) && g.m() == g.n() - 1;
}

std::optional<int> distance(const Graph& g, int u, int v) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v) return 0;
    std::vector<int> dist(static_cast<size_t>(g.n()), -1);
    std::queue<int> q;
    q.push(u);
    dist[static_cast<size_t>(u)] = 0;
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int y : g.neighbors(x))
            if (dist[static_cast<size_t>(y)] < 0) {
                dist[static_cast<size_t>(y)] = dist[static_cast<size_t>(x)] + 1;
                if (y == v) return dist[static_cast<size_t>(y)];
                q.push(y);
            }
    }
    return std::nullopt;
}

VertexSet leaves(const Graph& g) {
    VertexSet out;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) == 1) out.push_back(v);
    return out;
}

VertexSet support_vertices(const Graph& g) {
    std::vector<char> mark(static_cast<size_t>(g.n()), 0);
    for (int v : leaves(g)) mark[static_cast<size_t>(g.neighbors(v)[0])] = 1;
    VertexSet out;
    for (int v = 0; v < g.n(); ++v)
        if (mark[static_cast<size_t>(v)]) out.push_back(v);
    return out;
}

VertexSet strong_support_vertices(const Graph& g) {
    std::vector<int> leaf_count(static_cast<size_t>(g.n()), 0);
    for (int v : leaves(g)) ++leaf_count[static_cast<size_t>(g.neighbors(v)[0])];
    VertexSet out;
    for (int v = 0; v < g.n(); ++v)
        if (leaf_count[static_cast<size_t>(v)] >= 2) out.push_back(v);
    return out;
}

namespace {

std::string ahu_code(const Graph& g, int root, int parent) {
    std::vector<std::string> child_codes;
    for (int u : g.neighbors(root))
        if (u != parent) child_codes.push_back(ahu_code(g, u, root));
    std::sort(child_codes.begin(), child_codes.end());
    std::string out = "(";
    for (const auto& c : child_codes) out += c;
    out += ")";
    return out;
}

// Tree center: one or two vertices left after repeatedly removing leaves.
std::vector<int> tree_centers(const Graph& g) {
    int n = g.n();
    if (n == 1) return {0};
    std::vector<int> deg(static_cast<size_t>(n));
    std::vector<int> layer;
    for (int v = 0; v < n; ++v) {
        deg[static_cast<size_t>(v)] = g.degree(v);
        if (deg[static_cast<size_t>(v)] == 1) layer.push_back(v);
    }
    int remaining = n;
    while (remaining > 2) {
        std::vector<int> next;
        remaining -= static_cast<int>(layer.size());
        for (int v : layer)
            for (int u : g.neighbors(v))
                if (--deg[static_cast<size_t>(u)] == 1) next.push_back(u);
        layer = std::move(next);
    }
    return layer;
}

}  // namespace

std::string canonical_tree_code(const Graph& g) {
    if (!is_tree(g)) throw std::invalid_argument("canonical_tree_code: not a tree");
    auto centers = tree_centers(g);
    if (centers.size() == 1) return "1" + ahu_code(g, centers[0], -1);
    std::string a = ahu_code(g, centers[0], centers[1]);
    std::string b = ahu_code(g, centers[1], centers[0]);
    if (b < a) std::swap(a, b);
    return "2" + a + b;
}

bool is_cut_edge(const Graph& g, Edge e) {
    auto [u, v] = e;
    if (!g.adjacent(u, v)) throw std::invalid_argument("is_cut_edge: not an edge");
    // BFS from u avoiding the edge uv.
    std::vector<char> seen(static_cast<size_t>(g.n()), 0);
    std::queue<int> q;
    q.push(u);
    seen[static_cast<size_t>(u)] = 1;
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int y : g.neighbors(x)) {
            if ((x == u && y == v) || (x == v && y == u)) continue;
            if (!seen[static_cast<size_t>(y)]) {
                if (y == v) return false;
                seen[static_cast<size_t>(y)] = 1;
                q.push(y);
            }
        }
    }
    return true;
}

Graph path_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, edges);
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, edges);
}

Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

Graph star_graph(int k) {
    std::vector<Edge> edges;
    for (int i = 1; i <= k; ++i) edges.emplace_back(0, i);
    return Graph::from_edges(k + 1, edges);
}

Graph remove_vertices(const Graph& g, const VertexSet& removed,
                      std::vector<int>* old_to_new) {
    std::vector<char> gone(static_cast<size_t>(g.n()), 0);
    for (int v : removed) {
        g.check_vertex(v);
        gone[static_cast<size_t>(v)] = 1;
    }
    std::vector<int> map(static_cast<size_t>(g.n()), -1);
    int next = 0;
    for (int v = 0; v < g.n(); ++v)
        if (!gone[static_cast<size_t>(v)]) map[static_cast<size_t>(v)] = next++;
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        if (!gone[static_cast<size_t>(u)] && !gone[static_cast<size_t>(v)])
            edges.emplace_back(map[static_cast<size_t>(u)], map[static_cast<size_t>(v)]);
    if (old_to_new) *old_to_new = map;
    return Graph::from_edges(next, edges);
}

uint64_t brute_force_canonical_key(const Graph& g) {
    int n = g.n();
    if (n > 10) throw std::domain_error("brute_force_canonical_key needs n <= 10");
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    uint64_t best = ~uint64_t(0);
    auto edges = g.edges();
    do {
        uint64_t key = 0;
        for (auto [u, v] : edges) {
            int a = perm[static_cast<size_t>(u)];
            int b = perm[static_cast<size_t>(v)];
            if (a > b) std::swap(a, b);
            key |= uint64_t(1) << (b * (b - 1) / 2 + a);
        }
        best = std::min(best, key);
    } while (std::next_permutation(perm.begin(), perm.end()));
    // Fold in n so graphs of different orders never collide.
    return best ^ (uint64_t(n) << 56);
}

}  // namespace opl
