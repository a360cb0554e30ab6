#pragma once

#include <optional>
#include <vector>

#include "sip/gridtiling.hpp"
#include "sip/graph.hpp"
#include "sip/oracles.hpp"
#include "sip/pattern.hpp"

namespace sip::brute {

// Exhaustive subset-enumeration solvers, usable up to ~20 vertices. They are
// deliberately independent of the production branch-and-bound code paths.

std::vector<int> max_independent_set(const Graph& g);  // lex-min among optima
std::vector<int> min_dominating_set(const Graph& g);   // lex-min among optima
std::optional<std::vector<int>> multicolored_independent_set(const Graph& g,
                                                             const ColorClassPartition& p);

// Ordered-tuple-pair enumeration for semi-induced patterns.
bool has_pattern(const Graph& g, PatternKind kind, int h);
int pattern_index(const Graph& g, PatternKind kind, int cap);

// Full product enumeration over the tile sets.
bool has_grid_tiling(const GridTilingInstance& inst);

bool is_connected(const Graph& g);

}  // namespace sip::brute
