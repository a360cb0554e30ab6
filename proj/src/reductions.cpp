#include "sip/reductions.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "sip/errors.hpp"

namespace sip {

namespace {

constexpr const char* kDirs = "URDL";

int dir_index(char d) {
    switch (d) {
        case 'U': return 0;
        case 'R': return 1;
        case 'D': return 2;
        case 'L': return 3;
    }
    throw InputError(std::string("unknown direction '") + d + "'");
}

}  // namespace

int TilingReductionOutput::vertex_of(char dir, int i, int j, int tile_index) const {
    int k = instance.k;
    int base = 0;
    for (int ci = 1; ci <= k; ++ci)
        for (int cj = 1; cj <= k; ++cj) {
            int sz = int(instance.cell(ci, cj).size());
            if (ci == i && cj == j) return base + dir_index(dir) * sz + tile_index + 1;
            base += 4 * sz;
        }
    throw InputError("cell out of range");
}

std::vector<std::string> TilingReductionOutput::label_comments() const {
    std::vector<std::string> out;
    out.push_back("target " + std::to_string(target));
    for (size_t v = 0; v < labels.size(); ++v) {
        const TileVertexLabel& l = labels[v];
        std::ostringstream ss;
        ss << "label " << v + 1 << " " << l.dir << " " << l.cell_i << " " << l.cell_j << " "
           << l.tile.first << " " << l.tile.second;
        out.push_back(ss.str());
    }
    return out;
}

TilingReductionOutput grid_tiling_to_is(const GridTilingInstance& inst) {
    inst.validate();
    TilingReductionOutput out;
    out.instance = inst;
    out.target = 4 * inst.k * inst.k;
    int n = 4 * inst.total_tiles();
    out.graph = Graph(n);
    out.labels.reserve(n);
    for (int i = 1; i <= inst.k; ++i)
        for (int j = 1; j <= inst.k; ++j)
            for (int d = 0; d < 4; ++d)
                for (Tile t : inst.cell(i, j)) out.labels.push_back({kDirs[d], i, j, t});

    for (int i = 1; i <= inst.k; ++i)
        for (int j = 1; j <= inst.k; ++j) {
            int sz = int(inst.cell(i, j).size());
            for (int d = 0; d < 4; ++d) {
                // direction sets are cliques
                for (int s = 0; s < sz; ++s)
                    for (int s2 = s + 1; s2 < sz; ++s2)
                        out.graph.add_edge(out.vertex_of(kDirs[d], i, j, s),
                                           out.vertex_of(kDirs[d], i, j, s2));
                // co-matching toward the next direction (U-R, R-D, D-L, L-U)
                char d2 = kDirs[(d + 1) % 4];
                for (int s = 0; s < sz; ++s)
                    for (int s2 = 0; s2 < sz; ++s2)
                        if (s != s2)
                            out.graph.add_edge(out.vertex_of(kDirs[d], i, j, s),
                                               out.vertex_of(d2, i, j, s2));
            }
        }

    for (int i = 1; i < inst.k; ++i)
        for (int j = 1; j <= inst.k; ++j) {
            const auto& here = inst.cell(i, j);
            const auto& right = inst.cell(i + 1, j);
            for (size_t s = 0; s < here.size(); ++s)
                for (size_t s2 = 0; s2 < right.size(); ++s2)
                    if (here[s].first != right[s2].first)
                        out.graph.add_edge(out.vertex_of('R', i, j, int(s)),
                                           out.vertex_of('L', i + 1, j, int(s2)));
        }
    for (int i = 1; i <= inst.k; ++i)
        for (int j = 1; j < inst.k; ++j) {
            const auto& here = inst.cell(i, j);
            const auto& down = inst.cell(i, j + 1);
            for (size_t s = 0; s < here.size(); ++s)
                for (size_t s2 = 0; s2 < down.size(); ++s2)
                    if (here[s].second != down[s2].second)
                        out.graph.add_edge(out.vertex_of('D', i, j, int(s)),
                                           out.vertex_of('U', i, j + 1, int(s2)));
        }
    return out;
}

std::vector<int> lift_tiling_solution(const GridTilingInstance& inst, const Selection& sel,
                                      const TilingReductionOutput& out) {
    std::string fail = selection_agreement_failure(inst, sel);
    if (!fail.empty()) throw InputError("selection is not a grid tiling solution: " + fail);
    std::vector<int> lifted;
    for (int i = 1; i <= inst.k; ++i)
        for (int j = 1; j <= inst.k; ++j) {
            Tile t = sel.at(i, j);
            const auto& cell = inst.cell(i, j);
            int idx = -1;
            for (size_t s = 0; s < cell.size(); ++s)
                if (cell[s] == t) idx = int(s);
            for (char d : {'U', 'R', 'D', 'L'}) lifted.push_back(out.vertex_of(d, i, j, idx));
        }
    std::sort(lifted.begin(), lifted.end());
    for (size_t a = 0; a < lifted.size(); ++a)
        for (size_t b = a + 1; b < lifted.size(); ++b)
            if (out.graph.adjacent(lifted[a], lifted[b]))
                throw InvariantViolation("lifted tiling solution is not independent");
    return lifted;
}

Selection extract_tiling_solution(const GridTilingInstance& inst,
                                  const TilingReductionOutput& out,
                                  const std::vector<int>& independent_set) {
    for (int v : independent_set)
        if (v < 1 || v > out.graph.vertex_count())
            throw InputError("vertex " + std::to_string(v) + " outside the reduction graph");
    for (size_t a = 0; a < independent_set.size(); ++a)
        for (size_t b = a + 1; b < independent_set.size(); ++b)
            if (out.graph.adjacent(independent_set[a], independent_set[b]))
                throw InputError("input set is not independent: edge " +
                                 std::to_string(independent_set[a]) + "-" +
                                 std::to_string(independent_set[b]));
    if (int(independent_set.size()) != out.target)
        throw InputError("independent set has size " + std::to_string(independent_set.size()) +
                         ", the reduction target is " + std::to_string(out.target));
    Selection sel;
    sel.k = inst.k;
    sel.choice.assign(inst.k, std::vector<Tile>(inst.k, {0, 0}));
    std::map<std::pair<int, int>, std::vector<const TileVertexLabel*>> per_cell;
    for (int v : independent_set) per_cell[{out.labels[v - 1].cell_i, out.labels[v - 1].cell_j}]
        .push_back(&out.labels[v - 1]);
    for (int i = 1; i <= inst.k; ++i)
        for (int j = 1; j <= inst.k; ++j) {
            const auto& got = per_cell[{i, j}];
            if (got.size() != 4)
                throw InputError("cell (" + std::to_string(i) + "," + std::to_string(j) +
                                 ") contributes " + std::to_string(got.size()) +
                                 " vertices, expected 4");
            Tile t = got[0]->tile;
            for (const TileVertexLabel* l : got)
                if (l->tile != t)
                    throw InputError("the four vertices of cell (" + std::to_string(i) + "," +
                                     std::to_string(j) + ") do not share a tile");
            sel.choice[i - 1][j - 1] = t;
        }
    std::string fail = selection_agreement_failure(inst, sel);
    if (!fail.empty())
        throw InvariantViolation("extracted selection violates agreement: " + fail);
    return sel;
}

TilingStructureReport certify_tiling_structure(const TilingReductionOutput& out) {
    const Graph& g = out.graph;
    const GridTilingInstance& inst = out.instance;
    TilingStructureReport rep{0, 0};
    // Enumerate parts as (cell, dir) -> member list.
    std::vector<std::vector<int>> parts;
    std::vector<int> part_of(g.vertex_count() + 1, -1);
    for (int i = 1; i <= inst.k; ++i)
        for (int j = 1; j <= inst.k; ++j)
            for (int d = 0; d < 4; ++d) {
                std::vector<int> part;
                for (size_t s = 0; s < inst.cell(i, j).size(); ++s)
                    part.push_back(out.vertex_of(kDirs[d], i, j, int(s)));
                for (int v : part) part_of[v] = int(parts.size());
                parts.push_back(std::move(part));
            }
    for (int v = 1; v <= g.vertex_count(); ++v) {
        std::vector<bool> touched(parts.size(), false);
        for (int w = g.neighbors(v).find_first(); w != -1; w = g.neighbors(v).find_next(w))
            touched[part_of[w]] = true;
        int cnt = 0;
        for (bool b : touched) cnt += b;
        rep.max_parts_touched = std::max(rep.max_parts_touched, cnt);
    }
    // Same-cell part pairs with at least one edge between them.
    for (int i = 1; i <= inst.k; ++i)
        for (int j = 1; j <= inst.k; ++j)
            for (int d = 0; d < 4; ++d)
                for (int d2 = d + 1; d2 < 4; ++d2) {
                    int sz = int(inst.cell(i, j).size());
                    std::vector<int> xs, ys;
                    for (int s = 0; s < sz; ++s) {
                        xs.push_back(out.vertex_of(kDirs[d], i, j, s));
                        ys.push_back(out.vertex_of(kDirs[d2], i, j, s));
                    }
                    bool any_edge = false;
                    for (int x : xs)
                        for (int y : ys) any_edge |= g.adjacent(x, y);
                    if (!any_edge) continue;
                    for (int x : xs) {
                        int miss = 0;
                        for (int y : ys) miss += !g.adjacent(x, y);
                        rep.max_nonneighbors_across = std::max(rep.max_nonneighbors_across, miss);
                    }
                    for (int y : ys) {
                        int miss = 0;
                        for (int x : xs) miss += !g.adjacent(y, x);
                        rep.max_nonneighbors_across = std::max(rep.max_nonneighbors_across, miss);
                    }
                }
    return rep;
}

// ---- theorem-5 style construction ---------------------------------------------

int DsReductionOutput::x_vertex(int i) const { return n_source() + 2 * (i - 1) + 1; }
int DsReductionOutput::y_vertex(int i) const { return n_source() + 2 * (i - 1) + 2; }
int DsReductionOutput::w_vertex(int e_index) const {
    return n_source() + 2 * partition.k() + e_index + 1;
}

std::vector<int> DsReductionOutput::class_star(int i) const {
    std::vector<int> star = partition.classes[i - 1];
    star.push_back(x_vertex(i));
    star.push_back(y_vertex(i));
    std::sort(star.begin(), star.end());
    return star;
}

std::vector<std::string> DsReductionOutput::label_comments() const {
    std::vector<std::string> out;
    out.push_back("target " + std::to_string(target));
    std::vector<int> owner(n_source() + 1, 0);
    for (int i = 1; i <= partition.k(); ++i)
        for (int v : partition.classes[i - 1]) owner[v] = i;
    for (int v = 1; v <= n_source(); ++v)
        out.push_back("label " + std::to_string(v) + " orig " + std::to_string(owner[v]));
    for (int i = 1; i <= partition.k(); ++i) {
        out.push_back("label " + std::to_string(x_vertex(i)) + " x " + std::to_string(i));
        out.push_back("label " + std::to_string(y_vertex(i)) + " y " + std::to_string(i));
    }
    for (size_t e = 0; e < w_edges.size(); ++e)
        out.push_back("label " + std::to_string(w_vertex(int(e))) + " w " +
                      std::to_string(w_edges[e].first) + " " +
                      std::to_string(w_edges[e].second));
    return out;
}

DsReductionOutput multicolored_is_to_ds(const Graph& g, const ColorClassPartition& p) {
    p.validate(g);
    int n = g.vertex_count();
    int k = p.k();
    std::vector<int> owner(n + 1, 0);
    for (int i = 1; i <= k; ++i)
        for (int v : p.classes[i - 1]) owner[v] = i;
    for (auto [u, v] : g.edges())
        if (owner[u] == owner[v])
            throw InputError("classes must be independent sets: edge " + std::to_string(u) +
                             "-" + std::to_string(v) + " lies inside class " +
                             std::to_string(owner[u]));

    DsReductionOutput out;
    out.source = g;
    out.partition = p;
    out.target = k;
    out.w_edges = g.edges();
    out.graph = Graph(n + 2 * k + int(out.w_edges.size()));

    for (int i = 1; i <= k; ++i) {
        const auto& cls = p.classes[i - 1];
        for (size_t a = 0; a < cls.size(); ++a)
            for (size_t b = a + 1; b < cls.size(); ++b) out.graph.add_edge(cls[a], cls[b]);
        for (int v : cls) {
            out.graph.add_edge(out.x_vertex(i), v);
            out.graph.add_edge(out.y_vertex(i), v);
        }
    }
    for (size_t e = 0; e < out.w_edges.size(); ++e) {
        auto [u, v] = out.w_edges[e];
        int wu = out.w_vertex(int(e));
        for (int z : p.classes[owner[u] - 1])
            if (z != u && z != v) out.graph.add_edge(wu, z);
        for (int z : p.classes[owner[v] - 1])
            if (z != u && z != v) out.graph.add_edge(wu, z);
    }
    return out;
}

std::vector<int> lift_mcis_to_ds(const DsReductionOutput& out, const std::vector<int>& sol) {
    int k = out.partition.k();
    if (int(sol.size()) != k)
        throw InputError("solution has " + std::to_string(sol.size()) + " vertices, expected " +
                         std::to_string(k));
    std::vector<bool> hit(k + 1, false);
    for (int v : sol) {
        if (v < 1 || v > out.n_source())
            throw InputError("vertex " + std::to_string(v) + " is not a source vertex");
        int cls = out.partition.class_of(v);
        if (hit[cls]) throw InputError("class " + std::to_string(cls) + " picked twice");
        hit[cls] = true;
    }
    for (int i = 1; i <= k; ++i)
        if (!hit[i]) throw InputError("class " + std::to_string(i) + " has no pick");
    for (size_t a = 0; a < sol.size(); ++a)
        for (size_t b = a + 1; b < sol.size(); ++b)
            if (out.source.adjacent(sol[a], sol[b]))
                throw InputError("picks " + std::to_string(sol[a]) + " and " +
                                 std::to_string(sol[b]) + " are adjacent in the source");
    std::vector<int> ds = sol;
    std::sort(ds.begin(), ds.end());
    Bitset covered(out.graph.vertex_count() + 1);
    for (int v : ds) {
        covered.set(v);
        covered |= out.graph.neighbors(v);
    }
    for (int v = 1; v <= out.graph.vertex_count(); ++v)
        if (!covered.test(v))
            throw InvariantViolation("lifted set misses vertex " + std::to_string(v));
    return ds;
}

std::vector<int> extract_ds_to_mcis(const DsReductionOutput& out, const std::vector<int>& ds) {
    const Graph& gp = out.graph;
    int k = out.partition.k();
    if (int(ds.size()) != k)
        throw InputError("dominating set has size " + std::to_string(ds.size()) +
                         ", expected " + std::to_string(k));
    Bitset covered(gp.vertex_count() + 1);
    for (int v : ds) {
        if (v < 1 || v > gp.vertex_count())
            throw InputError("vertex " + std::to_string(v) + " outside the reduction graph");
        covered.set(v);
        covered |= gp.neighbors(v);
    }
    for (int v = 1; v <= gp.vertex_count(); ++v)
        if (!covered.test(v))
            throw InputError("input does not dominate vertex " + std::to_string(v));

    std::vector<int> owner(out.n_source() + 1, 0);
    for (int i = 1; i <= k; ++i)
        for (int v : out.partition.classes[i - 1]) owner[v] = i;
    std::vector<int> picks(k + 1, 0);
    std::vector<int> leftover;
    for (int v : ds) {
        int cls = v <= out.n_source() ? owner[v] : 0;
        if (cls != 0 && picks[cls] == 0)
            picks[cls] = v;
        else
            leftover.push_back(v);
    }
    // A size-k dominating set must take one vertex per class; repair anything
    // else by substituting a class vertex compatible with the fixed picks.
    for (int i = 1; i <= k; ++i) {
        if (picks[i] != 0) continue;
        int sub = 0;
        for (int v : out.partition.classes[i - 1]) {
            bool ok = true;
            for (int j = 1; j <= k; ++j)
                if (picks[j] != 0 && out.source.adjacent(v, picks[j])) ok = false;
            if (ok) {
                sub = v;
                break;
            }
        }
        if (sub == 0)
            throw InvariantViolation("no substitute vertex for class " + std::to_string(i));
        picks[i] = sub;
    }
    std::vector<int> sol(picks.begin() + 1, picks.end());
    for (size_t a = 0; a < sol.size(); ++a)
        for (size_t b = a + 1; b < sol.size(); ++b)
            if (out.source.adjacent(sol[a], sol[b]))
                throw InvariantViolation("extracted picks are adjacent in the source");
    std::sort(sol.begin(), sol.end());
    return sol;
}

DsStructureReport certify_ds_structure(const DsReductionOutput& out) {
    const Graph& gp = out.graph;
    DsStructureReport rep{true, 0, 0};
    for (size_t a = 0; a < out.w_edges.size(); ++a)
        for (size_t b = a + 1; b < out.w_edges.size(); ++b)
            if (gp.adjacent(out.w_vertex(int(a)), out.w_vertex(int(b)))) rep.w_independent = false;
    int k = out.partition.k();
    std::vector<std::vector<int>> stars;
    for (int i = 1; i <= k; ++i) stars.push_back(out.class_star(i));
    for (int v = 1; v <= gp.vertex_count(); ++v) {
        int touched = 0;
        for (const auto& star : stars) {
            int nb = 0, miss = 0;
            for (int s : star) {
                if (s == v) continue;
                if (gp.adjacent(v, s))
                    ++nb;
                else
                    ++miss;
            }
            if (nb > 0) {
                ++touched;
                rep.max_nonneighbors_in_star = std::max(rep.max_nonneighbors_in_star, miss);
            }
        }
        rep.max_stars_touched = std::max(rep.max_stars_touched, touched);
    }
    return rep;
}

}  // namespace sip
