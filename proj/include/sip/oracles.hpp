#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sip/graph.hpp"

namespace sip {

// Every solver call counts its branch nodes against this budget and throws
// BudgetExceeded when it runs out, never returning a wrong answer.
struct SolveOptions {
    uint64_t node_budget = 100'000'000;
};

// Maximum-cardinality independent set; among optima, the lexicographically
// smallest vertex set. Branch and bound with greedy clique-cover upper
// bounds and max-degree branching, followed by a lex-min extraction pass.
std::vector<int> max_independent_set(const Graph& g, const SolveOptions& opts = {});

// max_independent_set on the complement.
std::vector<int> max_clique(const Graph& g, const SolveOptions& opts = {});

// Decision forms used by the drivers; same budget semantics.
bool has_independent_set(const Graph& g, int k, const SolveOptions& opts = {});

// Minimum-cardinality dominating set, lex-min among optima.
std::vector<int> min_dominating_set(const Graph& g, const SolveOptions& opts = {});
bool has_dominating_set(const Graph& g, int k, const SolveOptions& opts = {});

// Multicolored independent set: one vertex from every class, pairwise
// non-adjacent, or certified absence. Classes need not be independent sets.
struct ColorClassPartition {
    std::vector<std::vector<int>> classes;  // 1-based vertex labels
    int k() const { return int(classes.size()); }
    // Throws InputError unless the classes are disjoint, nonempty and cover 1..n.
    void validate(const Graph& g) const;
    int class_of(int v) const;  // 1-based class index, 0 if absent
};

std::optional<std::vector<int>> multicolored_independent_set(const Graph& g,
                                                             const ColorClassPartition& p,
                                                             const SolveOptions& opts = {});

// Text format:  colors <k>  header, then  class <i> : v1 v2 ...  lines.
ColorClassPartition parse_partition(const std::string& text);
std::string serialize_partition(const ColorClassPartition& p);

}  // namespace sip
