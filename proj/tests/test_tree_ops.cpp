#include <doctest.h>

#include <algorithm>
#include <set>

#include "opl/solvers.hpp"
#include "opl/tree_ops.hpp"
#include "opl/verify.hpp"
#include "oracle.hpp"

using namespace opl;

namespace {

bool same_tree(const Graph& a, const Graph& b) {
    return canonical_tree_code(a) == canonical_tree_code(b);
}

}  // namespace

TEST_CASE("operation 1: pendant P4") {
    Graph p2 = path_graph(2);
    Graph g = apply_op1(p2, 0);
    CHECK(g.n() == 6);
    CHECK(same_tree(g, path_graph(6)));
    // U grows by the two outer new vertices c=4, d=5.
    auto u = unique_max_open_packing(g);
    REQUIRE(u.has_value());
    CHECK(*u == VertexSet{0, 1, 4, 5});

    Graph p6 = path_graph(6);
    Graph p10 = apply_op1(p6, 0);  // leaf end of U
    CHECK(p10.n() == 10);
    CHECK(same_tree(p10, path_graph(10)));

    CHECK_THROWS_AS(apply_op1(path_graph(4), 0), PreconditionError);
    CHECK_THROWS_AS(apply_op1(p6, 2), PreconditionError);  // 2 not in U
}

TEST_CASE("operation 2: pendant P3") {
    Graph p6 = path_graph(6);
    Graph g = apply_op2(p6, 2);
    CHECK(g.n() == 9);
    auto r = max_open_packing(g);
    CHECK(r.value == 6);
    CHECK(r.unique);
    // U grows by b=7, c=8.
    CHECK(r.witness == VertexSet{0, 1, 4, 5, 7, 8});

    CHECK_THROWS_AS(apply_op2(p6, 0), PreconditionError);       // 0 in U
    CHECK_THROWS_AS(apply_op2(path_graph(2), 0), PreconditionError);
    CHECK_THROWS_AS(apply_op2(path_graph(2), 1), PreconditionError);
}

TEST_CASE("operation 3: two pendant P3s") {
    Graph p2 = path_graph(2);
    Graph g = apply_op3(p2, 0);
    CHECK(g.n() == 8);
    // Spider: legs of lengths 3, 3 and 1 at vertex 0.
    CHECK(g.degree(0) == 3);
    auto deg_seq = [&](const Graph& t) {
        std::vector<int> d;
        for (int v = 0; v < t.n(); ++v) d.push_back(t.degree(v));
        std::sort(d.begin(), d.end());
        return d;
    };
    CHECK(deg_seq(g) == std::vector<int>{1, 1, 1, 2, 2, 2, 2, 3});
    auto r = max_open_packing(g);
    CHECK(r.value == 5);
    CHECK(r.unique);
    // U(g') = (U - {x}) + {b,b',c,c'} with b=3,c=4,b'=6,c'=7.
    CHECK(r.witness == VertexSet{1, 3, 4, 6, 7});

    // P6 at x=1: the restricted-count clause decides.
    Graph p6 = path_graph(6);
    long cnt = count_open_packings_avoiding(p6, 3, 1);
    if (cnt == 1) {
        Graph h = apply_op3(p6, 1);
        CHECK(max_open_packing(h).unique);
    } else {
        CHECK_THROWS_AS(apply_op3(p6, 1), PreconditionError);
    }
    CHECK_THROWS_AS(apply_op3(p6, 2), PreconditionError);  // 2 not in U
}

TEST_CASE("operation 4: subdivide a cut edge and hang a leaf") {
    Graph p6 = path_graph(6);
    Graph g = apply_op4(p6, {2, 3});
    CHECK(g.n() == 8);
    auto r = max_open_packing(g);
    CHECK(r.value == 5);
    CHECK(r.unique);
    // U grows by the new leaf a = 7.
    CHECK(r.witness == VertexSet{0, 1, 4, 5, 7});

    CHECK_THROWS_AS(apply_op4(p6, {0, 1}), PreconditionError);  // endpoints in U
    CHECK_THROWS_AS(apply_op4(p6, {0, 2}), PreconditionError);  // not an edge
}

TEST_CASE("eligible steps") {
    auto p2_steps = eligible_steps(path_graph(2));
    bool op1_at0 = false, op1_at1 = false, op3_at0 = false, op3_at1 = false;
    for (const auto& s : p2_steps) {
        CHECK(s.kind != OpKind::Op2);
        CHECK(s.kind != OpKind::Op4);
        if (s.kind == OpKind::Op1 && s.anchor_u == 0) op1_at0 = true;
        if (s.kind == OpKind::Op1 && s.anchor_u == 1) op1_at1 = true;
        if (s.kind == OpKind::Op3 && s.anchor_u == 0) op3_at0 = true;
        if (s.kind == OpKind::Op3 && s.anchor_u == 1) op3_at1 = true;
    }
    CHECK(op1_at0);
    CHECK(op1_at1);
    CHECK(op3_at0);
    CHECK(op3_at1);

    auto p6_steps = eligible_steps(path_graph(6));
    bool op2_at2 = false, op2_at3 = false, op4_at23 = false;
    for (const auto& s : p6_steps) {
        if (s.kind == OpKind::Op2 && s.anchor_u == 2) op2_at2 = true;
        if (s.kind == OpKind::Op2 && s.anchor_u == 3) op2_at3 = true;
        if (s.kind == OpKind::Op4 && s.anchor_u == 2 && s.anchor_v == 3)
            op4_at23 = true;
    }
    CHECK(op2_at2);
    CHECK(op2_at3);
    CHECK(op4_at23);

    CHECK_THROWS_AS(eligible_steps(path_graph(4)), PreconditionError);
}

TEST_CASE("eligible steps match a direct precondition scan") {
    // Cross-check every claimed step on members up to 8 vertices by just
    // applying it and brute-forcing the result.
    for (const auto& member : generate_class_O(8)) {
        const Graph& g = member.tree;
        if (g.n() < 2) continue;
        for (const auto& step : eligible_steps(g)) {
            Graph h = apply_step(g, step);
            auto before = oracle::max_open_packing(g);
            auto after = oracle::max_open_packing(h);
            CHECK(after.unique());
            int inc = 0;
            switch (step.kind) {
                case OpKind::Op1: inc = 2; break;
                case OpKind::Op2: inc = 2; break;
                case OpKind::Op3: inc = 3; break;
                case OpKind::Op4: inc = 1; break;
            }
            CHECK(after.value == before.value + inc);
        }
    }
}

TEST_CASE("class generation") {
    auto upto5 = generate_class_O(5);
    REQUIRE(upto5.size() == 2);
    CHECK(upto5[0].tree.n() == 1);
    CHECK(upto5[1].tree.n() == 2);

    auto upto6 = generate_class_O(6);
    REQUIRE(upto6.size() == 3);
    CHECK(upto6[2].tree.n() == 6);
    CHECK(same_tree(upto6[2].tree, path_graph(6)));

    // Members agree with the uniqueness oracle over all trees n <= 10.
    auto upto10 = generate_class_O(10);
    std::set<std::string> generated;
    for (const auto& m : upto10) {
        generated.insert(m.code);
        CHECK(replay_trace(m.trace).n() == m.tree.n());
        CHECK(same_tree(replay_trace(m.trace), m.tree));
    }
    std::set<std::string> expected;
    for (int n = 1; n <= 10; ++n)
        for (const auto& t : enumerate_trees(n))
            if (max_open_packing(t).unique) expected.insert(canonical_tree_code(t));
    CHECK(generated == expected);
}

TEST_CASE("recognizer on named trees") {
    auto p6 = recognize_tree(path_graph(6));
    REQUIRE(p6.has_value());
    CHECK(p6->base == 2);
    REQUIRE(p6->steps.size() == 1);
    CHECK(p6->steps[0].kind == OpKind::Op1);
    CHECK(same_tree(replay_trace(*p6), path_graph(6)));

    auto p10 = recognize_tree(path_graph(10));
    REQUIRE(p10.has_value());
    CHECK(p10->steps.size() == 2);
    CHECK(p10->steps[0].kind == OpKind::Op1);
    CHECK(p10->steps[1].kind == OpKind::Op1);
    CHECK(same_tree(replay_trace(*p10), path_graph(10)));

    CHECK_FALSE(recognize_tree(star_graph(3)).has_value());
    CHECK_FALSE(recognize_tree(path_graph(4)).has_value());
    CHECK(recognize_tree(path_graph(1)).has_value());
    CHECK(recognize_tree(path_graph(2)).has_value());
    CHECK_THROWS_AS(recognize_tree(cycle_graph(4)), std::invalid_argument);
}

TEST_CASE("recognizer agrees with the solver on all trees n <= 11") {
    for (int n = 1; n <= 11; ++n) {
        for (const auto& t : enumerate_trees(n)) {
            auto trace = recognize_tree(t);
            bool unique = max_open_packing(t).unique;
            CHECK(trace.has_value() == unique);
            if (trace) CHECK(same_tree(replay_trace(*trace), t));
        }
    }
}

TEST_CASE("path law") {
    for (int n = 2; n <= 30; ++n) {
        bool member = recognize_tree(path_graph(n)).has_value();
        CHECK(member == (n % 4 == 2));
    }
}

TEST_CASE("auxiliary tree on high-degree vertices") {
    // Single spider: legs 3,3,1 at the center.
    Graph spider = apply_op3(path_graph(2), 0);
    std::vector<int> to_orig;
    Graph l = l_graph(spider, &to_orig);
    CHECK(l.n() == 1);
    CHECK(to_orig == std::vector<int>{0});

    // Double spider: two degree-3 vertices joined through degree-2 vertices.
    Graph ds = Graph::from_edges(10, {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {4, 5},
                                      {5, 6}, {6, 7}, {6, 8}, {8, 9}});
    std::vector<int> map2;
    Graph l2 = l_graph(ds, &map2);
    CHECK(l2.n() == 2);
    CHECK(l2.adjacent(0, 1));
    CHECK(map2 == std::vector<int>{0, 6});

    CHECK_THROWS_AS(l_graph(path_graph(5)), std::domain_error);
}

TEST_CASE("forbidden local configurations") {
    // Leaf plus pendant P2 on the same vertex.
    Graph a = Graph::from_edges(4, {{0, 1}, {0, 2}, {2, 3}});
    CHECK(has_leaf_and_pendant_p2(a));
    CHECK_FALSE(has_two_pendant_p2s(a));
    // Two pendant P2s on the same vertex.
    Graph b = Graph::from_edges(5, {{0, 1}, {1, 2}, {0, 3}, {3, 4}});
    CHECK(has_two_pendant_p2s(b));
    CHECK_FALSE(has_leaf_and_pendant_p2(path_graph(6)));
    CHECK_FALSE(has_two_pendant_p2s(path_graph(6)));
}

TEST_CASE("the constructive gap tree") {
    // A unique maximum open packing without a construction: the closure
    // under the four operations provably cannot reach this tree, because
    // it offers no anchor for any operation's inverse.
    auto gaps = constructive_gap_trees();
    REQUIRE(gaps.size() == 1);
    const Graph& t = gaps[0];
    CHECK(t.n() == 13);
    CHECK(is_tree(t));

    auto r = max_open_packing(t);
    CHECK(r.unique);
    CHECK(r.value == 8);
    CHECK(r.witness == VertexSet{5, 6, 7, 8, 9, 10, 11, 12});

    // Not constructible, hence rejected.
    CHECK_FALSE(recognize_tree(t).has_value());
    std::set<std::string> codes13;
    for (const auto& m : generate_class_O(13)) codes13.insert(m.code);
    CHECK(codes13.count(canonical_tree_code(t)) == 0);

    // Both pendant-P3 strips (the only candidate inverse steps) leave a
    // tree with two maximum open packings.
    for (VertexSet leg : {VertexSet{3, 5, 7}, VertexSet{4, 6, 8}}) {
        Graph stripped = remove_vertices(t, leg);
        auto scan = oracle::max_open_packing(stripped);
        CHECK(scan.witnesses.size() == 2);
    }
}

TEST_CASE("trace round-trip") {
    auto trace = recognize_tree(path_graph(10));
    REQUIRE(trace.has_value());
    std::string text = write_trace(*trace);
    ConstructionTrace back = parse_trace(text);
    CHECK(back.base == trace->base);
    REQUIRE(back.steps.size() == trace->steps.size());
    for (size_t i = 0; i < back.steps.size(); ++i) {
        CHECK(back.steps[i].kind == trace->steps[i].kind);
        CHECK(back.steps[i].anchor_u == trace->steps[i].anchor_u);
        CHECK(back.steps[i].anchor_v == trace->steps[i].anchor_v);
    }
    CHECK(same_tree(replay_trace(back), path_graph(10)));
    CHECK_THROWS(parse_trace("OP9 anchor=0 new=1"));
}
