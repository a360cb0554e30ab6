#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sip/oracles.hpp"

namespace sip {

using Tile = std::pair<int, int>;  // coordinates in [n] x [n]

// The grid tiling problem: pick one tile per cell of a k x k grid so that
// s(i, j) and s(i+1, j) share the first component, and s(i, j) and s(i, j+1)
// share the second component.
struct GridTilingInstance {
    int k = 0;
    int n = 0;
    // tiles[i-1][j-1] is the nonempty tile set of cell (i, j), input order kept.
    std::vector<std::vector<std::vector<Tile>>> tiles;

    const std::vector<Tile>& cell(int i, int j) const { return tiles[i - 1][j - 1]; }
    int total_tiles() const;
    void validate() const;  // throws InputError
};

struct Selection {
    int k = 0;
    std::vector<std::vector<Tile>> choice;  // [k][k]

    Tile at(int i, int j) const { return choice[i - 1][j - 1]; }
};

// Empty reason on success; otherwise names the offending cell pair.
std::string selection_agreement_failure(const GridTilingInstance& inst, const Selection& sel);

// Cell-by-cell backtracking in row-major cell order with tiles tried in
// input order, pruning against the already-assigned row/column neighbors.
// Returns the first selection found, or nullopt (certified absence).
std::optional<Selection> solve_grid_tiling(const GridTilingInstance& inst,
                                           const SolveOptions& opts = {});

// Text format:
//   gridtiling <k> <n>
//   cell <i> <j> : <a>,<b> <a>,<b> ...     (one line per cell, all k^2 cells)
GridTilingInstance parse_grid_tiling(const std::string& text);
std::string serialize_grid_tiling(const GridTilingInstance& inst);

// Selection text format:
//   selection <k>
//   s <i> <j> : <a>,<b>
Selection parse_selection(const std::string& text);
std::string serialize_selection(const Selection& sel);

}  // namespace sip
