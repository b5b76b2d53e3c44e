#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "opl/graph.hpp"

namespace opl {

/// One failure row: the offending graph plus what was expected/observed.
struct CheckFailure {
    std::string graph6;
    std::string expected;
    std::string actual;
};

struct VerificationReport {
    std::string theorem_id;
    std::string corpus_spec;
    long instances_checked = 0;
    std::vector<CheckFailure> failures;
    double wall_time = 0.0;
    bool passed() const { return failures.empty(); }
};

/// Exactly one representative per isomorphism class of trees on n vertices.
std::vector<Graph> enumerate_trees(int n);

/// One representative per isomorphism class of all graphs on n vertices.
/// Exhaustive mode is capped at n = 7.
std::vector<Graph> enumerate_graphs(int n);
std::vector<Graph> enumerate_connected_graphs(int n);

/// Corpus caps and an optional externally supplied graph corpus used in
/// place of exhaustive enumeration.
struct VerifyOptions {
    int max_tree_n = 14;
    int max_graph_n = 7;
    std::optional<std::vector<Graph>> graph_corpus;
    int jobs = 1;
};

std::vector<std::string> registered_checks();
bool is_registered_check(const std::string& id);

VerificationReport run_check(const std::string& theorem_id,
                             const VerifyOptions& options);
std::vector<VerificationReport> run_all(const VerifyOptions& options);

/// One JSON object per line (wall_time excluded from determinism
/// guarantees; everything else is byte-stable).
std::string report_to_json(const VerificationReport& report);

}  // namespace opl
