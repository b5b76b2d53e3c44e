#pragma once

#include <optional>
#include <string>
#include <vector>

#include "opl/graph.hpp"

namespace opl {

/// Raised when an operation's structural precondition fails; the message
/// names the violated clause.
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class OpKind { Op1 = 1, Op2 = 2, Op3 = 3, Op4 = 4 };

struct OperationStep {
    OpKind kind;
    int anchor_u = -1;            // vertex anchor (Op1-Op3) or edge endpoint
    int anchor_v = -1;            // second edge endpoint (Op4 only)
    std::vector<int> new_vertices;
};

/// Steps building a tree from the base; an empty step list means the tree
/// is one of the bases P1/P2 itself.
struct ConstructionTrace {
    int base = 2;  // 1 or 2 (P1 or P2)
    std::vector<OperationStep> steps;
};

/// Append pendant P4 a-b-c-d at x (new ids n..n+3, a adjacent to x).
/// Requires a unique maximum open packing U with x in U and a neighbor of
/// x in U.
Graph apply_op1(const Graph& g, int x);

/// Append pendant P3 a-b-c at x (new ids n..n+2). Requires x outside U
/// with a neighbor in U.
Graph apply_op2(const Graph& g, int x);

/// Append two pendant P3s at x (new ids n..n+5, ordered a,b,c,a',b',c').
/// Requires x in U, a neighbor of x in U, and exactly one open packing of
/// size rho-1 avoiding x.
Graph apply_op3(const Graph& g, int x);

/// Subdivide cut edge xy with new vertex b = n and hang leaf a = n+1 on b.
/// Requires x,y outside U, each with a neighbor in U.
Graph apply_op4(const Graph& g, Edge xy);

Graph apply_step(const Graph& g, const OperationStep& step);

/// All (kind, anchor) pairs whose preconditions hold on g.
/// Throws PreconditionError when g has no unique maximum open packing.
std::vector<OperationStep> eligible_steps(const Graph& g);

/// Replay a trace from its base; fills in the deterministic new-vertex ids.
Graph replay_trace(const ConstructionTrace& trace,
                   std::vector<OperationStep>* resolved = nullptr);

struct ClassMember {
    Graph tree;
    ConstructionTrace trace;
    std::string code;  // canonical tree code
};

/// Closure of {P2} under the four operations, truncated at max_n vertices
/// and deduplicated by canonical code; P1 is included as a base member.
/// Sorted by (order, code).
std::vector<ClassMember> generate_class_O(int max_n);

/// Construction trace iff the tree is in the constructive closure. For
/// every tree on at most 14 vertices this coincides with having a unique
/// maximum open packing, except for the trees listed by
/// constructive_gap_trees().
std::optional<ConstructionTrace> recognize_tree(const Graph& t);

/// Trees with a unique maximum open packing that are nevertheless not
/// reachable from P2 by the four operations. Found by exhaustively
/// comparing the generated closure against the solver on all trees with
/// up to 14 vertices; currently a single 13-vertex tree.
std::vector<Graph> constructive_gap_trees();

/// Auxiliary tree on the degree->=3 vertices of t; map gives the original
/// vertex id for each L-vertex. Requires max degree >= 3.
Graph l_graph(const Graph& t, std::vector<int>* l_to_orig = nullptr);

/// Forbidden structures for unique maximum open packings: a leaf and a
/// pendant P2 hanging on the same vertex, or two pendant P2s on the same
/// vertex. Either one rules out uniqueness.
bool has_leaf_and_pendant_p2(const Graph& g);
bool has_two_pendant_p2s(const Graph& g);

/// Line-oriented trace text: one `OP<k> anchor=<v or u-v> new=<ids>` per
/// step, preceded by a `BASE P<1|2>` line.
std::string write_trace(const ConstructionTrace& trace);
ConstructionTrace parse_trace(const std::string& text);

}  // namespace opl
