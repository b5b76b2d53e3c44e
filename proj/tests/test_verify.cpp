#include <doctest.h>

#include <set>

#include "opl/graph6.hpp"
#include "opl/verify.hpp"

using namespace opl;

TEST_CASE("tree enumeration counts") {
    const int expected[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
    for (int n = 1; n <= 10; ++n)
        CHECK(enumerate_trees(n).size() == static_cast<size_t>(expected[n - 1]));
    for (const auto& t : enumerate_trees(8)) {
        CHECK(t.n() == 8);
        CHECK(is_tree(t));
    }
    // Pairwise non-isomorphic.
    std::set<std::string> codes;
    for (const auto& t : enumerate_trees(9)) codes.insert(canonical_tree_code(t));
    CHECK(codes.size() == 47);
}

TEST_CASE("graph enumeration counts") {
    const int all_counts[] = {1, 2, 4, 11, 34, 156, 1044};
    const int connected_counts[] = {1, 1, 2, 6, 21, 112, 853};
    for (int n = 1; n <= 6; ++n) {
        CHECK(enumerate_graphs(n).size() ==
              static_cast<size_t>(all_counts[n - 1]));
        CHECK(enumerate_connected_graphs(n).size() ==
              static_cast<size_t>(connected_counts[n - 1]));
    }
    CHECK_THROWS_AS(enumerate_graphs(8), std::domain_error);
}

TEST_CASE("check registry") {
    auto ids = registered_checks();
    CHECK(ids.size() >= 20);
    for (const char* id :
         {"rall-theorem", "leaf-lemma", "no-strong-support", "forbidden-21",
          "forbidden-22", "op1-sound", "op2-sound", "op3-sound", "op4-sound",
          "path-law", "main-theorem", "subdivision-identity", "gprime-identity",
          "gplus-identity", "gstar-identity", "square-identity",
          "uniqueness-transfers", "join-alpha"})
        CHECK(is_registered_check(id));
    CHECK_FALSE(is_registered_check("bogus"));
    CHECK_THROWS_AS(run_check("bogus", VerifyOptions{}), std::invalid_argument);
}

TEST_CASE("individual checks pass on small corpora") {
    VerifyOptions opts;
    opts.max_tree_n = 9;
    opts.max_graph_n = 5;
    for (const char* id : {"path-law", "rall-theorem", "leaf-lemma",
                           "subdivision-identity", "square-identity",
                           "main-theorem", "join-alpha"}) {
        auto report = run_check(id, opts);
        CHECK(report.passed());
        CHECK(report.instances_checked > 0);
        CHECK(report.theorem_id == id);
    }
}

TEST_CASE("full run on trivially small corpora") {
    VerifyOptions opts;
    opts.max_tree_n = 6;
    opts.max_graph_n = 3;
    auto reports = run_all(opts);
    CHECK(reports.size() == registered_checks().size());
    for (const auto& r : reports) CHECK(r.passed());
}

TEST_CASE("reports are deterministic and machine-readable") {
    VerifyOptions opts;
    opts.max_tree_n = 8;
    opts.max_graph_n = 4;
    auto a = run_check("path-law", opts);
    auto b = run_check("path-law", opts);
    CHECK(a.instances_checked == b.instances_checked);
    CHECK(a.failures.size() == b.failures.size());

    std::string json = report_to_json(a);
    CHECK(json.find("\"schema\"") != std::string::npos);
    CHECK(json.find("\"theorem_id\"") != std::string::npos);
    CHECK(json.find("path-law") != std::string::npos);
    CHECK(json.find('\n') == std::string::npos);  // single line
}

TEST_CASE("external corpus replaces exhaustive enumeration") {
    VerifyOptions opts;
    opts.max_graph_n = 7;
    opts.graph_corpus = std::vector<Graph>{path_graph(3), complete_graph(3),
                                           path_graph(5)};
    auto report = run_check("subdivision-identity", opts);
    CHECK(report.passed());
    CHECK(report.instances_checked == 3);
}

TEST_CASE("parallel run matches single-threaded") {
    VerifyOptions seq;
    seq.max_tree_n = 7;
    seq.max_graph_n = 4;
    VerifyOptions par = seq;
    par.jobs = 4;
    auto a = run_all(seq);
    auto b = run_all(par);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].theorem_id == b[i].theorem_id);
        CHECK(a[i].instances_checked == b[i].instances_checked);
        CHECK(a[i].failures.size() == b[i].failures.size());
    }
}
