#pragma once

#include <string>
#include <vector>

#include "sip/gridtiling.hpp"
#include "sip/graph.hpp"
#include "sip/oracles.hpp"

namespace sip {

// ---- grid tiling -> independent set ------------------------------------------
//
// Per cell (i, j), four direction cliques U, R, D, L with one vertex per tile.
// Inside a cell, consecutive direction pairs (U,R), (R,D), (D,L), (L,U)
// semi-induce a co-matching indexed by tiles. Between cells, r(i,j,t) is
// adjacent to l(i+1,j,t') iff the first components differ, and d(i,j,t) to
// u(i,j+1,t') iff the second components differ. Target: 4 k^2.
//
// Vertex numbering: cells in row-major order ((1,1), (1,2), ..., (k,k)),
// directions U, R, D, L, tiles in input order.

struct TileVertexLabel {
    char dir;  // 'U', 'R', 'D', 'L'
    int cell_i, cell_j;
    Tile tile;
};

struct TilingReductionOutput {
    Graph graph;
    int target;  // 4 k^2
    std::vector<TileVertexLabel> labels;  // labels[v-1] describes vertex v
    GridTilingInstance instance;

    int vertex_of(char dir, int i, int j, int tile_index) const;  // tile_index 0-based
    std::vector<std::string> label_comments() const;  // c-label lines plus target
};

TilingReductionOutput grid_tiling_to_is(const GridTilingInstance& inst);

// The 4 k^2 vertices {u,r,d,l}(cell, sel(cell)); throws InputError naming the
// offending cell pair when sel violates agreement, InvariantViolation if the
// lifted set fails to be independent.
std::vector<int> lift_tiling_solution(const GridTilingInstance& inst, const Selection& sel,
                                      const TilingReductionOutput& out);

// Inverse direction: a size-4k^2 independent set determines a unique valid
// selection. Distinct diagnostics for non-independent input, wrong size, and
// a cell whose four vertices do not share a tile.
Selection extract_tiling_solution(const GridTilingInstance& inst,
                                  const TilingReductionOutput& out,
                                  const std::vector<int>& independent_set);

struct TilingStructureReport {
    int max_parts_touched;        // parts of the clique partition seen by one vertex
    int max_nonneighbors_across;  // within same-cell part pairs that carry edges
    bool ok() const { return max_parts_touched <= 4 && max_nonneighbors_across <= 1; }
};
// Certifies the structural facts behind the half-graph bound of the
// construction: every vertex has neighbors in at most 4 parts, and between
// same-cell parts with edges each vertex misses at most one vertex across.
TilingStructureReport certify_tiling_structure(const TilingReductionOutput& out);

// ---- multicolored independent set -> dominating set ---------------------------
//
// G' keeps the original vertices (classes become cliques, original edges are
// dropped), adds guards x_i, y_i adjacent to exactly V_i, and one vertex w_e
// per edge e = uv adjacent to exactly (V_i u V_j) \ {u, v}. Target: k.
//
// Vertex numbering: originals 1..n, then x_1, y_1, ..., x_k, y_k, then w_e in
// canonical edge order (u < v, sorted lexicographically).
//
// Classes must be independent sets in the source graph (the construction
// does not encode intra-class edges; they are irrelevant to the problem).

struct DsReductionOutput {
    Graph graph;   // G'
    int target;    // k
    Graph source;  // the multicolored instance it came from
    ColorClassPartition partition;
    std::vector<std::pair<int, int>> w_edges;  // source edge of each w vertex, in order

    int n_source() const { return source.vertex_count(); }
    int x_vertex(int i) const;      // 1-based class index
    int y_vertex(int i) const;
    int w_vertex(int e_index) const;  // 0-based into w_edges
    std::vector<int> class_star(int i) const;  // V_i* = V_i + {x_i, y_i}
    std::vector<std::string> label_comments() const;
};

DsReductionOutput multicolored_is_to_ds(const Graph& g, const ColorClassPartition& p);

// Forward lift: a multicolored independent set is itself a dominating set of
// G'. Throws InputError when sol is not a valid MCIS of the source, and
// InvariantViolation if the lifted set fails to dominate.
std::vector<int> lift_mcis_to_ds(const DsReductionOutput& out, const std::vector<int>& sol);

// Backward lift: a size-k dominating set of G' yields a multicolored
// independent set. Classes not hit directly are repaired by substituting a
// compatible class vertex; a repair failure on valid input is a construction
// bug and throws InvariantViolation.
std::vector<int> extract_ds_to_mcis(const DsReductionOutput& out, const std::vector<int>& ds);

struct DsStructureReport {
    bool w_independent;
    int max_nonneighbors_in_star;  // over vertices with >= 1 neighbor in that V_i*
    int max_stars_touched;
    bool ok() const {
        return w_independent && max_nonneighbors_in_star <= 3 && max_stars_touched <= 2;
    }
};
DsStructureReport certify_ds_structure(const DsReductionOutput& out);

}  // namespace sip
