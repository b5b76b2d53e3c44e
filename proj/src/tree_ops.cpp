#include "opl/tree_ops.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>

#include "opl/solvers.hpp"

namespace opl {

namespace {

bool in_set(const VertexSet& s, int v) {
    return std::binary_search(s.begin(), s.end(), v);
}

bool neighbor_in(const Graph& g, const VertexSet& s, int v) {
    for (int u : g.neighbors(v))
        if (in_set(s, u)) return true;
    return false;
}

VertexSet require_unique_packing(const Graph& g, const char* op) {
    auto u = unique_max_open_packing(g);
    if (!u)
        throw PreconditionError(std::string(op) +
                                ": graph has no unique maximum open packing");
    return *u;
}

Graph with_appended_path(const Graph& g, int x, int len) {
    auto edges = g.edges();
    int base = g.n();
    edges.emplace_back(x, base);
    for (int i = 1; i < len; ++i) edges.emplace_back(base + i - 1, base + i);
    return Graph::from_edges(base + len, edges);
}

}  // namespace

Graph apply_op1(const Graph& g, int x) {
    g.check_vertex(x);
    auto u = require_unique_packing(g, "op1");
    if (!in_set(u, x)) throw PreconditionError("op1: anchor not in U(G)");
    if (!neighbor_in(g, u, x))
        throw PreconditionError("op1: no neighbor of anchor in U(G)");
    return with_appended_path(g, x, 4);
}

Graph apply_op2(const Graph& g, int x) {
    g.check_vertex(x);
    auto u = require_unique_packing(g, "op2");
    if (in_set(u, x)) throw PreconditionError("op2: anchor must not be in U(G)");
    if (!neighbor_in(g, u, x))
        throw PreconditionError("op2: no neighbor of anchor in U(G)");
    return with_appended_path(g, x, 3);
}

Graph apply_op3(const Graph& g, int x) {
    g.check_vertex(x);
    auto u = require_unique_packing(g, "op3");
    if (!in_set(u, x)) throw PreconditionError("op3: anchor not in U(G)");
    if (!neighbor_in(g, u, x))
        throw PreconditionError("op3: no neighbor of anchor in U(G)");
    if (count_open_packings_avoiding(g, static_cast<int>(u.size()) - 1, x) != 1)
        throw PreconditionError(
            "op3: open packing of size rho-1 avoiding the anchor is not unique");
    return with_appended_path(with_appended_path(g, x, 3), x, 3);
}

Graph apply_op4(const Graph& g, Edge xy) {
    auto [x, y] = xy;
    if (!g.adjacent(x, y)) throw PreconditionError("op4: anchor is not an edge");
    auto u = require_unique_packing(g, "op4");
    if (!is_cut_edge(g, xy)) throw PreconditionError("op4: anchor is not a cut edge");
    if (in_set(u, x) || in_set(u, y))
        throw PreconditionError("op4: edge endpoint lies in U(G)");
    if (!neighbor_in(g, u, x) || !neighbor_in(g, u, y))
        throw PreconditionError("op4: edge endpoint has no neighbor in U(G)");
    int b = g.n(), a = g.n() + 1;
    std::vector<Edge> edges;
    for (auto e : g.edges())
        if (e != Edge{std::min(x, y), std::max(x, y)}) edges.push_back(e);
    edges.emplace_back(x, b);
    edges.emplace_back(b, y);
    edges.emplace_back(b, a);
    return Graph::from_edges(g.n() + 2, edges);
}

Graph apply_step(const Graph& g, const OperationStep& step) {
    switch (step.kind) {
        case OpKind::Op1: return apply_op1(g, step.anchor_u);
        case OpKind::Op2: return apply_op2(g, step.anchor_u);
        case OpKind::Op3: return apply_op3(g, step.anchor_u);
        case OpKind::Op4: return apply_op4(g, {step.anchor_u, step.anchor_v});
    }
    throw std::invalid_argument("unknown operation kind");
}

std::vector<OperationStep> eligible_steps(const Graph& g) {
    auto u = require_unique_packing(g, "eligible_steps");
    int rho = static_cast<int>(u.size());
    std::vector<OperationStep> out;
    for (int x = 0; x < g.n(); ++x) {
        bool member = in_set(u, x);
        bool dominated = neighbor_in(g, u, x);
        if (!dominated) continue;
        if (member) {
            out.push_back({OpKind::Op1, x, -1, {}});
            if (count_open_packings_avoiding(g, rho - 1, x) == 1)
                out.push_back({OpKind::Op3, x, -1, {}});
        } else {
            out.push_back({OpKind::Op2, x, -1, {}});
        }
    }
    for (auto [x, y] : g.edges()) {
        if (in_set(u, x) || in_set(u, y)) continue;
        if (!neighbor_in(g, u, x) || !neighbor_in(g, u, y)) continue;
        if (!is_cut_edge(g, {x, y})) continue;
        out.push_back({OpKind::Op4, x, y, {}});
    }
    return out;
}

namespace {

int vertices_added(OpKind kind) {
    switch (kind) {
        case OpKind::Op1: return 4;
        case OpKind::Op2: return 3;
        case OpKind::Op3: return 6;
        case OpKind::Op4: return 2;
    }
    return 0;
}

}  // namespace

Graph replay_trace(const ConstructionTrace& trace,
                   std::vector<OperationStep>* resolved) {
    if (trace.base != 1 && trace.base != 2)
        throw std::invalid_argument("trace base must be P1 or P2");
    Graph g = path_graph(trace.base);
    if (resolved) resolved->clear();
    for (auto step : trace.steps) {
        int base = g.n();
        step.new_vertices.clear();
        for (int i = 0; i < vertices_added(step.kind); ++i)
            step.new_vertices.push_back(base + i);
        g = apply_step(g, step);
        if (resolved) resolved->push_back(step);
    }
    return g;
}

std::vector<ClassMember> generate_class_O(int max_n) {
    if (max_n < 1) throw std::invalid_argument("max_n must be at least 1");
    std::map<std::string, ClassMember> found;
    auto add = [&](const Graph& g, const ConstructionTrace& trace) -> bool {
        std::string code = canonical_tree_code(g);
        if (found.count(code)) return false;
        found.emplace(code, ClassMember{g, trace, code});
        return true;
    };
    add(path_graph(1), ConstructionTrace{1, {}});
    if (max_n >= 2) {
        std::queue<std::string> frontier;
        add(path_graph(2), ConstructionTrace{2, {}});
        frontier.push(canonical_tree_code(path_graph(2)));
        while (!frontier.empty()) {
            ClassMember member = found.at(frontier.front());
            frontier.pop();
            if (member.tree.n() + 2 > max_n) continue;
            for (auto step : eligible_steps(member.tree)) {
                if (member.tree.n() + vertices_added(step.kind) > max_n) continue;
                int base = member.tree.n();
                for (int i = 0; i < vertices_added(step.kind); ++i)
                    step.new_vertices.push_back(base + i);
                Graph next = apply_step(member.tree, step);
                ConstructionTrace trace = member.trace;
                trace.steps.push_back(step);
                if (add(next, trace)) frontier.push(canonical_tree_code(next));
            }
        }
    }
    std::vector<ClassMember> out;
    for (auto& [code, member] : found) out.push_back(std::move(member));
    std::sort(out.begin(), out.end(), [](const ClassMember& a, const ClassMember& b) {
        if (a.tree.n() != b.tree.n()) return a.tree.n() < b.tree.n();
        return a.code < b.code;
    });
    return out;
}

Graph l_graph(const Graph& t, std::vector<int>* l_to_orig) {
    if (!is_tree(t)) throw std::invalid_argument("l_graph: not a tree");
    std::vector<int> branch;  // degree >= 3 vertices
    std::vector<int> index(static_cast<size_t>(t.n()), -1);
    for (int v = 0; v < t.n(); ++v)
        if (t.degree(v) >= 3) {
            index[static_cast<size_t>(v)] = static_cast<int>(branch.size());
            branch.push_back(v);
        }
    if (branch.empty()) throw std::domain_error("l_graph: maximum degree below 3");
    std::vector<Edge> edges;
    for (int p : branch)
        for (int w : t.neighbors(p)) {
            int prev = p, cur = w;
            while (t.degree(cur) == 2) {
                int next = t.neighbors(cur)[0] == prev ? t.neighbors(cur)[1]
                                                       : t.neighbors(cur)[0];
                prev = cur;
                cur = next;
            }
            if (t.degree(cur) >= 3 && p < cur)
                edges.emplace_back(index[static_cast<size_t>(p)],
                                   index[static_cast<size_t>(cur)]);
        }
    if (l_to_orig) *l_to_orig = branch;
    return Graph::from_edges(static_cast<int>(branch.size()), edges);
}

namespace {

// Pendant P2 at x: path x-y-z with deg(y)=2 and z a leaf. Anchors of such
// configurations drive the forbidden-structure rejections.
std::vector<std::pair<int, int>> pendant_p2_anchors(const Graph& g) {
    std::vector<std::pair<int, int>> out;  // (anchor x, middle y)
    for (int y = 0; y < g.n(); ++y) {
        if (g.degree(y) != 2) continue;
        int p = g.neighbors(y)[0], q = g.neighbors(y)[1];
        if (g.degree(p) == 1) out.emplace_back(q, y);
        if (g.degree(q) == 1) out.emplace_back(p, y);
    }
    return out;
}

bool supports_leaf(const Graph& g, int x) {
    for (int u : g.neighbors(x))
        if (g.degree(u) == 1) return true;
    return false;
}

}  // namespace

bool has_leaf_and_pendant_p2(const Graph& g) {
    for (auto [x, y] : pendant_p2_anchors(g))
        if (supports_leaf(g, x)) return true;
    return false;
}

bool has_two_pendant_p2s(const Graph& g) {
    std::map<int, int> count;
    for (auto [x, y] : pendant_p2_anchors(g))
        if (++count[x] >= 2) return true;
    return false;
}

namespace {

struct RecState {
    Graph replay;
    ConstructionTrace trace;
    std::vector<int> to_target;  // replay id -> target tree id
};

std::optional<RecState> recognize_rec(const Graph& t);

// Recurse on `smaller`, then extend with one forward operation whose new
// replay vertices correspond (in order) to `corr` in the original tree t.
std::optional<RecState> extend(const Graph& smaller,
                               const std::vector<int>& new_to_old,
                               OpKind kind, int anchor_t, int anchor2_t,
                               const std::vector<int>& corr) {
    auto st = recognize_rec(smaller);
    if (!st) return std::nullopt;
    std::vector<int> to_t(st->to_target.size());
    for (size_t r = 0; r < to_t.size(); ++r)
        to_t[r] = new_to_old[static_cast<size_t>(st->to_target[r])];
    auto replay_id = [&](int target) {
        for (size_t r = 0; r < to_t.size(); ++r)
            if (to_t[r] == target) return static_cast<int>(r);
        return -1;
    };
    OperationStep step{kind, replay_id(anchor_t),
                       anchor2_t < 0 ? -1 : replay_id(anchor2_t), {}};
    int base = st->replay.n();
    for (int i = 0; i < vertices_added(kind); ++i)
        step.new_vertices.push_back(base + i);
    Graph next;
    try {
        next = apply_step(st->replay, step);
    } catch (const PreconditionError&) {
        return std::nullopt;
    }
    for (int v : corr) to_t.push_back(v);
    st->replay = std::move(next);
    st->trace.steps.push_back(step);
    st->to_target = std::move(to_t);
    return st;
}

std::optional<RecState> strip_and_extend(const Graph& t, const VertexSet& removed,
                                         OpKind kind, int anchor_t, int anchor2_t,
                                         const std::vector<int>& corr) {
    std::vector<int> old_to_new;
    Graph smaller = remove_vertices(t, removed, &old_to_new);
    std::vector<int> new_to_old(static_cast<size_t>(smaller.n()));
    for (int v = 0; v < t.n(); ++v)
        if (old_to_new[static_cast<size_t>(v)] >= 0)
            new_to_old[static_cast<size_t>(old_to_new[static_cast<size_t>(v)])] = v;
    return extend(smaller, new_to_old, kind, anchor_t, anchor2_t, corr);
}

// Vertices of a path graph in end-to-end order.
std::vector<int> path_order(const Graph& t) {
    int start = 0;
    for (int v = 0; v < t.n(); ++v)
        if (t.degree(v) == 1) { start = v; break; }
    std::vector<int> order{start};
    int prev = -1, cur = start;
    while (static_cast<int>(order.size()) < t.n()) {
        int next = -1;
        for (int u : t.neighbors(cur))
            if (u != prev) { next = u; break; }
        order.push_back(next);
        prev = cur;
        cur = next;
    }
    return order;
}

// Pendant paths at x: maximal chains x-u1-...-uk with internal degree 2
// ending at a leaf.
std::vector<std::vector<int>> legs_at(const Graph& t, int x) {
    std::vector<std::vector<int>> legs;
    for (int w : t.neighbors(x)) {
        std::vector<int> chain{w};
        int prev = x, cur = w;
        while (t.degree(cur) == 2) {
            int next = t.neighbors(cur)[0] == prev ? t.neighbors(cur)[1]
                                                   : t.neighbors(cur)[0];
            prev = cur;
            cur = next;
            chain.push_back(cur);
        }
        if (t.degree(cur) == 1) legs.push_back(std::move(chain));
    }
    return legs;
}

std::optional<RecState> recognize_rec(const Graph& t) {
    if (t.n() == 2)
        return RecState{path_graph(2), ConstructionTrace{2, {}}, {0, 1}};
    if (!strong_support_vertices(t).empty()) return std::nullopt;
    if (has_leaf_and_pendant_p2(t) || has_two_pendant_p2s(t)) return std::nullopt;

    int max_deg = 0;
    for (int v = 0; v < t.n(); ++v) max_deg = std::max(max_deg, t.degree(v));

    if (max_deg <= 2) {
        int n = t.n();
        if (n % 4 != 2) return std::nullopt;
        auto p = path_order(t);
        VertexSet removed{p.end() - 4, p.end()};
        std::sort(removed.begin(), removed.end());
        return strip_and_extend(t, removed, OpKind::Op1, p[static_cast<size_t>(n - 5)],
                                -1, {p[static_cast<size_t>(n - 4)],
                                     p[static_cast<size_t>(n - 3)],
                                     p[static_cast<size_t>(n - 2)],
                                     p[static_cast<size_t>(n - 1)]});
    }

    // Pick a leaf of L(t): a branch vertex all but at most one of whose
    // subtrees are pendant paths.
    std::vector<int> l_to_orig;
    Graph l = l_graph(t, &l_to_orig);
    int x = -1;
    for (int i = 0; i < l.n(); ++i)
        if (l.degree(i) <= 1) { x = l_to_orig[static_cast<size_t>(i)]; break; }
    if (x < 0) return std::nullopt;

    auto legs = legs_at(t, x);
    for (const auto& leg : legs)
        if (leg.size() >= 4) {
            size_t k = leg.size();
            VertexSet removed{leg.end() - 4, leg.end()};
            std::sort(removed.begin(), removed.end());
            int anchor = k == 4 ? x : leg[k - 5];
            return strip_and_extend(t, removed, OpKind::Op1, anchor, -1,
                                    {leg[k - 4], leg[k - 3], leg[k - 2], leg[k - 1]});
        }

    std::vector<std::vector<int>> legs3, shorts;
    for (auto& leg : legs)
        (leg.size() == 3 ? legs3 : shorts).push_back(leg);
    if (shorts.size() >= 2 || legs3.empty()) return std::nullopt;

    if (legs3.size() >= 2) {
        const auto& leg_a = legs3[0];
        const auto& leg_b = legs3[1];
        VertexSet removed1(leg_a.begin(), leg_a.end());
        std::sort(removed1.begin(), removed1.end());
        Graph t1 = remove_vertices(t, removed1);
        if (max_open_packing(t1).unique)
            return strip_and_extend(t, removed1, OpKind::Op2, x, -1, leg_a);
        VertexSet removed(leg_a.begin(), leg_a.end());
        removed.insert(removed.end(), leg_b.begin(), leg_b.end());
        std::sort(removed.begin(), removed.end());
        std::vector<int> corr(leg_a.begin(), leg_a.end());
        corr.insert(corr.end(), leg_b.begin(), leg_b.end());
        return strip_and_extend(t, removed, OpKind::Op3, x, -1, corr);
    }

    if (shorts.empty()) return std::nullopt;
    const auto& long_leg = legs3[0];
    const auto& short_leg = shorts[0];
    if (short_leg.size() == 2) {
        VertexSet removed(long_leg.begin(), long_leg.end());
        std::sort(removed.begin(), removed.end());
        return strip_and_extend(t, removed, OpKind::Op2, x, -1, long_leg);
    }

    // Length-1 leg: remove x and the leaf, bridge a to the third neighbor,
    // and recover the tree by the subdivision operation.
    if (t.degree(x) != 3) return std::nullopt;
    int e = short_leg[0];
    int a = long_leg[0];
    int y = -1;
    for (int w : t.neighbors(x))
        if (w != e && w != a) y = w;
    std::vector<int> old_to_new;
    Graph stripped = remove_vertices(t, {std::min(x, e), std::max(x, e)}, &old_to_new);
    auto stripped_edges = stripped.edges();
    stripped_edges.emplace_back(old_to_new[static_cast<size_t>(a)],
                                old_to_new[static_cast<size_t>(y)]);
    Graph smaller = Graph::from_edges(stripped.n(), stripped_edges);
    std::vector<int> new_to_old(static_cast<size_t>(smaller.n()));
    for (int v = 0; v < t.n(); ++v)
        if (old_to_new[static_cast<size_t>(v)] >= 0)
            new_to_old[static_cast<size_t>(old_to_new[static_cast<size_t>(v)])] = v;
    return extend(smaller, new_to_old, OpKind::Op4, a, y, {x, e});
}

}  // namespace

std::optional<ConstructionTrace> recognize_tree(const Graph& t) {
    if (!is_tree(t)) throw std::invalid_argument("recognize_tree: not a tree");
    if (t.n() == 1) return ConstructionTrace{1, {}};
    if (t.n() == 2) return ConstructionTrace{2, {}};
    auto st = recognize_rec(t);
    if (!st) return std::nullopt;
    if (canonical_tree_code(st->replay) != canonical_tree_code(t)) return std::nullopt;
    return st->trace;
}

std::vector<Graph> constructive_gap_trees() {
    // Two degree-3 vertices (1 and 2) joined through a degree-2 middle
    // vertex (0), each carrying a pendant path of length 3 and one of
    // length 2. Its maximum open packing {5,6,7,8,9,10,11,12} is unique,
    // yet no operation can have produced it: there is no pendant path of
    // length >= 4, no vertex with two pendant P3s, no degree-3 vertex with
    // a leaf neighbor, and deleting either length-3 leg (the only P3
    // strips) leaves a tree with two maximum open packings.
    return {Graph::from_edges(13, {{0, 1},
                                   {0, 2},
                                   {1, 3},
                                   {1, 9},
                                   {2, 4},
                                   {2, 11},
                                   {3, 5},
                                   {5, 7},
                                   {4, 6},
                                   {6, 8},
                                   {9, 10},
                                   {11, 12}})};
}

std::string write_trace(const ConstructionTrace& trace) {
    std::string out = "BASE P" + std::to_string(trace.base) + "\n";
    for (const auto& step : trace.steps) {
        out += "OP" + std::to_string(static_cast<int>(step.kind));
        out += " anchor=" + std::to_string(step.anchor_u);
        if (step.kind == OpKind::Op4) out += "-" + std::to_string(step.anchor_v);
        out += " new=";
        for (size_t i = 0; i < step.new_vertices.size(); ++i)
            out += (i ? "," : "") + std::to_string(step.new_vertices[i]);
        out += "\n";
    }
    return out;
}

ConstructionTrace parse_trace(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    ConstructionTrace trace;
    bool have_base = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string tok;
        ls >> tok;
        if (tok == "BASE") {
            ls >> tok;
            if (tok != "P1" && tok != "P2")
                throw std::invalid_argument("trace base must be P1 or P2");
            trace.base = tok == "P1" ? 1 : 2;
            have_base = true;
            continue;
        }
        if (tok.size() != 3 || tok.compare(0, 2, "OP") != 0)
            throw std::invalid_argument("bad trace step: " + line);
        OperationStep step{static_cast<OpKind>(tok[2] - '0'), -1, -1, {}};
        if (tok[2] < '1' || tok[2] > '4')
            throw std::invalid_argument("bad operation kind: " + line);
        std::string field;
        while (ls >> field) {
            if (field.compare(0, 7, "anchor=") == 0) {
                std::string val = field.substr(7);
                auto dash = val.find('-');
                step.anchor_u = std::stoi(val.substr(0, dash));
                if (dash != std::string::npos)
                    step.anchor_v = std::stoi(val.substr(dash + 1));
            } else if (field.compare(0, 4, "new=") == 0) {
                std::istringstream ids(field.substr(4));
                std::string id;
                while (std::getline(ids, id, ','))
                    step.new_vertices.push_back(std::stoi(id));
            } else {
                throw std::invalid_argument("bad trace field: " + field);
            }
        }
        trace.steps.push_back(step);
    }
    if (!have_base) throw std::invalid_argument("trace missing BASE line");
    return trace;
}

}  // namespace opl
