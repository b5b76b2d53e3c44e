#include "opl/reductions.hpp"

#include "opl/solvers.hpp"

namespace opl {

namespace {

void tag_originals(ReductionOutput& out, int n) {
    for (int v = 0; v < n; ++v)
        out.vertex_roles[v] = "orig:" + std::to_string(v);
}

}  // namespace

ReductionOutput subdivision(const Graph& g) {
    int n = g.n();
    auto base_edges = g.edges();
    std::vector<Edge> edges;
    ReductionOutput out;
    tag_originals(out, n);
    int next = n;
    for (auto [u, v] : base_edges) {
        edges.emplace_back(u, next);
        edges.emplace_back(next, v);
        out.vertex_roles[next] =
            "sub:" + std::to_string(u) + "-" + std::to_string(v);
        ++next;
    }
    out.graph = Graph::from_edges(next, edges);
    return out;
}

bool check_subdivision_identity(const Graph& g) {
    int lhs = max_open_packing(subdivision(g).graph).value;
    int rhs = max_independent_set(g).value + max_matching(g).value;
    return lhs == rhs;
}

ReductionOutput clique_extension(const Graph& g) {
    if (!is_connected(g))
        throw std::domain_error("clique_extension requires a connected graph");
    int n = g.n();
    auto base_edges = g.edges();
    std::vector<Edge> edges = base_edges;
    ReductionOutput out;
    tag_originals(out, n);
    int next = n;
    for (auto [u, v] : base_edges) {
        edges.emplace_back(u, next);
        edges.emplace_back(next, v);
        out.vertex_roles[next] =
            "edge:" + std::to_string(u) + "-" + std::to_string(v);
        ++next;
    }
    for (int a = n; a < next; ++a)
        for (int b = a + 1; b < next; ++b) edges.emplace_back(a, b);
    out.graph = Graph::from_edges(next, edges);
    return out;
}

ReductionOutput gadget_plus(const Graph& g) {
    int n = g.n();
    static const char* kNames[6] = {"u1", "u2", "u3", "u1'", "u2'", "u3'"};
    auto gid = [n](int u, int i) { return n + 6 * u + i; };
    std::vector<Edge> edges = g.edges();
    ReductionOutput out;
    tag_originals(out, n);
    for (int u = 0; u < n; ++u) {
        for (int i = 0; i < 6; ++i)
            out.vertex_roles[gid(u, i)] =
                "gadget:" + std::to_string(u) + ":" + kNames[i];
        for (int i = 0; i < 3; ++i) {
            for (int j = i + 1; j < 3; ++j) edges.emplace_back(gid(u, i), gid(u, j));
            edges.emplace_back(u, gid(u, i));
            edges.emplace_back(gid(u, i), gid(u, i + 3));
        }
    }
    for (auto [u, v] : g.edges()) {
        edges.emplace_back(gid(u, 3), v);  // u1' - v
        edges.emplace_back(gid(v, 3), u);  // v1' - u
    }
    out.graph = Graph::from_edges(7 * n, edges);
    return out;
}

ReductionOutput product_gadget(const Graph& g) {
    int n = g.n();
    if (n < 2) throw std::domain_error("product_gadget requires n >= 2");
    auto pid = [n](int i, int j) { return i * n + j; };
    std::vector<Edge> edges;
    ReductionOutput out;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out.vertex_roles[pid(i, j)] =
                "pair:" + std::to_string(i) + "," + std::to_string(j);
    // Cartesian product G x K_n.
    for (int k = 0; k < n; ++k)
        for (auto [i, j] : g.edges()) edges.emplace_back(pid(i, k), pid(j, k));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            for (int l = k + 1; l < n; ++l) edges.emplace_back(pid(i, k), pid(i, l));
    // Pendant gadgets b_ij, c_ij for i != j, grouped per i.
    int next = n * n;
    std::vector<std::vector<int>> b_ids(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            int b = next++, c = next++;
            out.vertex_roles[b] = "b:" + std::to_string(i) + "," + std::to_string(j);
            out.vertex_roles[c] = "c:" + std::to_string(i) + "," + std::to_string(j);
            edges.emplace_back(b, c);
            edges.emplace_back(b, pid(i, j));
            b_ids[static_cast<size_t>(i)].push_back(b);
        }
    for (int i = 0; i < n; ++i)
        for (size_t a = 0; a < b_ids[static_cast<size_t>(i)].size(); ++a)
            for (size_t b = a + 1; b < b_ids[static_cast<size_t>(i)].size(); ++b)
                edges.emplace_back(b_ids[static_cast<size_t>(i)][a],
                                   b_ids[static_cast<size_t>(i)][b]);
    out.graph = Graph::from_edges(next, edges);
    return out;
}

ReductionOutput square(const Graph& g) {
    std::vector<Edge> edges = g.edges();
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v) {
            if (g.adjacent(u, v)) continue;
            for (int w : g.neighbors(u))
                if (g.adjacent(w, v)) {
                    edges.emplace_back(u, v);
                    break;
                }
        }
    ReductionOutput out;
    tag_originals(out, g.n());
    out.graph = Graph::from_edges(g.n(), edges);
    return out;
}

Graph join_empty(const Graph& g, int r) {
    if (r < 0) throw std::invalid_argument("join size must be non-negative");
    std::vector<Edge> edges = g.edges();
    for (int k = 0; k < r; ++k)
        for (int v = 0; v < g.n(); ++v) edges.emplace_back(v, g.n() + k);
    return Graph::from_edges(g.n() + r, edges);
}

int alpha_via_uniqueness_oracle(const Graph& g) {
    if (g.n() < 1) throw std::domain_error("alpha oracle needs n >= 1");
    // Edgeless: alpha = n and every join is degenerate for the descent.
    if (g.m() == 0) return g.n();
    for (int r = g.n(); r >= 1; --r)
        if (!max_independent_set(join_empty(g, r)).unique) return r;
    throw std::logic_error("alpha descent failed to terminate");
}

}  // namespace opl
