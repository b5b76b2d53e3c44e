#pragma once

#include <map>
#include <string>

#include "opl/graph.hpp"

namespace opl {

/// A constructed graph plus the role of every vertex, keyed by vertex id.
/// Role strings are stable and documented per construction (e.g. "orig:3",
/// "sub:1-4", "gadget:2:u1'", "pair:0,1", "b:1,2", "c:1,2", "join:0").
struct ReductionOutput {
    Graph graph;
    std::map<int, std::string> vertex_roles;
};

/// S(G): every edge subdivided once. Originals keep their ids; subdivided
/// vertices follow in lexicographic edge order.
ReductionOutput subdivision(const Graph& g);

/// Exact-solver check of rho_o(S(g)) == alpha(g) + alpha'(g).
bool check_subdivision_identity(const Graph& g);

/// G': one vertex per edge adjacent to both endpoints, all edge-vertices
/// forming a clique. Connected inputs only.
ReductionOutput clique_extension(const Graph& g);

/// G+: six gadget vertices per original vertex (u1,u2,u3,u1',u2',u3' at
/// ids n+6u..n+6u+5) with cross edges u1'-v and v1'-u per edge uv.
ReductionOutput gadget_plus(const Graph& g);

/// G*: Cartesian product with K_n (pair (a_i,v_j) at id i*n+j) plus the
/// pendant b/c gadgets per off-diagonal pair. Requires n >= 2.
ReductionOutput product_gadget(const Graph& g);

/// G^2: edges added between all distance-2 pairs.
ReductionOutput square(const Graph& g);

/// G joined with r mutually non-adjacent new vertices.
Graph join_empty(const Graph& g, int r);

/// alpha(g) recovered purely from unique-maximum-independent-set queries
/// on joins G v K_r-bar; returns n directly for edgeless graphs.
int alpha_via_uniqueness_oracle(const Graph& g);

}  // namespace opl
