#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sip/graph.hpp"

namespace sip {

// Inclusion-maximal independent set built by scanning labels in ascending
// order; maximality makes it a dominating set as well.
std::vector<int> greedy_maximal_is(const Graph& g);

struct BranchReport {
    std::vector<int> result;  // independent set, sorted
    int depth_reached = 0;
    uint64_t nodes_explored = 0;
    bool cap_hit = false;  // depth cap truncated the recursion; guarantee void
};

// Branching approximation for independent set. On an edgeless graph the
// whole vertex set is returned. Otherwise the best of the greedy maximal set
// and, for every ordered adjacent pair (u, v) in lexicographic order,
// {u} + recurse(G[N(v) \ N[u]]). Each recursive graph has strictly smaller
// half-graph index, so with half-graph index h the result size s satisfies
// s^h >= independence number. Ties between equal-size candidates go to the
// lexicographically smallest set.
BranchReport approx_is_halfgraph(const Graph& g, std::optional<int> depth_cap = std::nullopt);

}  // namespace sip
