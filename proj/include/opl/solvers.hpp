#pragma once

#include <optional>
#include <vector>

#include "opl/graph.hpp"

namespace opl {

/// Exact invariant value with one witness and a uniqueness verdict.
/// all_witnesses is filled only when enumeration was requested; witnesses
/// are sorted vertex lists in lexicographic order and the reported witness
/// is always the lexicographically smallest one.
struct SolverResult {
    int value = 0;
    VertexSet witness;
    EdgeSet edge_witness;  // matching only
    bool unique = true;
    std::optional<std::vector<VertexSet>> all_witnesses;
};

SolverResult max_open_packing(const Graph& g, bool enumerate = false);
SolverResult max_two_packing(const Graph& g, bool enumerate = false);
SolverResult max_independent_set(const Graph& g, bool enumerate = false);
SolverResult max_matching(const Graph& g);

/// Minimum total dominating set; rejects graphs with isolated vertices.
SolverResult total_domination_number(const Graph& g);

/// U(g) when the maximum open packing is unique, absent otherwise.
std::optional<VertexSet> unique_max_open_packing(const Graph& g);

/// Number of open packings of size k avoiding x; when the count is at
/// most two and out is given, the packings themselves are reported.
long count_open_packings_avoiding(const Graph& g, int k, int x,
                                  std::vector<VertexSet>* out = nullptr);

bool unique_restricted_open_packing(const Graph& g, int k, int x);

}  // namespace opl
