#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "sip/errors.hpp"
#include "sip/generate.hpp"
#include "sip/pattern.hpp"
#include "sip/reductions.hpp"
#include "sip/witness.hpp"
#include "support/brute.hpp"

using namespace sip;

namespace {

const char* kFixture3x3 =
    "gridtiling 3 6\n"
    "cell 1 1 : 4,4 5,4\n"
    "cell 1 2 : 5,4 6,4 5,5\n"
    "cell 1 3 : 6,4 6,5\n"
    "cell 2 1 : 4,5 4,4 5,5\n"
    "cell 2 2 : 5,5 4,5 5,4 6,5\n"
    "cell 2 3 : 6,5 5,5 6,6\n"
    "cell 3 1 : 4,6 5,4\n"
    "cell 3 2 : 5,6 4,6 6,6\n"
    "cell 3 3 : 6,6 5,5\n";

GridTilingInstance single_cell(std::vector<Tile> tiles, int n = 3) {
    GridTilingInstance inst;
    inst.k = 1;
    inst.n = n;
    inst.tiles = {{std::move(tiles)}};
    return inst;
}

// Random class-independent 3-class instance on <= 9 source vertices.
struct McisInstance {
    Graph g;
    ColorClassPartition p;
};
McisInstance random_mcis(uint64_t seed, int n_min = 6, int n_max = 9) {
    SplitMix64 rng(seed);
    int n = n_min + int(rng.next_below(uint64_t(n_max - n_min + 1)));
    ColorClassPartition p{{{}, {}, {}}};
    for (int v = 1; v <= n; ++v) p.classes[v % 3].push_back(v);
    double density = 0.2 + 0.2 * double(rng.next_below(4));
    Graph g(n);
    std::vector<int> owner(n + 1);
    for (int c = 0; c < 3; ++c)
        for (int v : p.classes[c]) owner[v] = c;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (owner[u] != owner[v] && rng.next_double() < density) g.add_edge(u, v);
    return {std::move(g), std::move(p)};
}

}  // namespace

TEST_CASE("grid_tiling_to_is: fixture has 96 vertices and target 36") {
    GridTilingInstance inst = parse_grid_tiling(kFixture3x3);
    TilingReductionOutput out = grid_tiling_to_is(inst);
    CHECK(out.graph.vertex_count() == 96);
    CHECK(out.target == 36);
}

TEST_CASE("grid_tiling_to_is: single-cell shapes") {
    TilingReductionOutput one = grid_tiling_to_is(single_cell({{1, 1}}));
    CHECK(one.graph.vertex_count() == 4);
    CHECK(one.graph.edge_count() == 0);
    CHECK(one.target == 4);

    TilingReductionOutput two = grid_tiling_to_is(single_cell({{1, 1}, {2, 2}}));
    CHECK(two.graph.vertex_count() == 8);
    CHECK(two.graph.edge_count() == 12);  // 4 clique edges + 8 co-matching edges
}

TEST_CASE("grid_tiling_to_is: construction invariants") {
    GridTilingInstance inst = parse_grid_tiling(kFixture3x3);
    TilingReductionOutput out = grid_tiling_to_is(inst);
    const Graph& g = out.graph;
    const char* dirs = "URDL";
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            int sz = int(inst.cell(i, j).size());
            for (int d = 0; d < 4; ++d) {
                // direction sets are cliques
                for (int s = 0; s < sz; ++s)
                    for (int s2 = s + 1; s2 < sz; ++s2)
                        CHECK(g.adjacent(out.vertex_of(dirs[d], i, j, s),
                                         out.vertex_of(dirs[d], i, j, s2)));
                // consecutive directions semi-induce a tile-indexed co-matching
                char d2 = dirs[(d + 1) % 4];
                for (int s = 0; s < sz; ++s)
                    for (int s2 = 0; s2 < sz; ++s2)
                        CHECK(g.adjacent(out.vertex_of(dirs[d], i, j, s),
                                         out.vertex_of(d2, i, j, s2)) == (s != s2));
            }
            // opposite directions carry no edges
            for (auto [da, db] : {std::pair<char, char>{'U', 'D'}, {'R', 'L'}})
                for (int s = 0; s < sz; ++s)
                    for (int s2 = 0; s2 < sz; ++s2)
                        CHECK(!g.adjacent(out.vertex_of(da, i, j, s),
                                          out.vertex_of(db, i, j, s2)));
        }
    // inter-cell rule
    for (int i = 1; i < 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            const auto& here = inst.cell(i, j);
            const auto& next = inst.cell(i + 1, j);
            for (size_t s = 0; s < here.size(); ++s)
                for (size_t s2 = 0; s2 < next.size(); ++s2)
                    CHECK(g.adjacent(out.vertex_of('R', i, j, int(s)),
                                     out.vertex_of('L', i + 1, j, int(s2))) ==
                          (here[s].first != next[s2].first));
        }
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j < 3; ++j) {
            const auto& here = inst.cell(i, j);
            const auto& next = inst.cell(i, j + 1);
            for (size_t s = 0; s < here.size(); ++s)
                for (size_t s2 = 0; s2 < next.size(); ++s2)
                    CHECK(g.adjacent(out.vertex_of('D', i, j, int(s)),
                                     out.vertex_of('U', i, j + 1, int(s2))) ==
                          (here[s].second != next[s2].second));
        }
}

TEST_CASE("grid_tiling_to_is: deterministic numbering, byte-stable output") {
    GridTilingInstance inst = parse_grid_tiling(kFixture3x3);
    TilingReductionOutput a = grid_tiling_to_is(inst);
    TilingReductionOutput b = grid_tiling_to_is(inst);
    CHECK(serialize_graph(a.graph, a.label_comments()) ==
          serialize_graph(b.graph, b.label_comments()));
    CHECK(a.labels[0].dir == 'U');
    CHECK(a.labels[0].tile == Tile{4, 4});
}

TEST_CASE("claim-2 structure: parts and cross non-neighbors") {
    GridTilingInstance inst = parse_grid_tiling(kFixture3x3);
    TilingReductionOutput out = grid_tiling_to_is(inst);
    TilingStructureReport rep = certify_tiling_structure(out);
    CHECK(rep.max_parts_touched <= 4);
    CHECK(rep.max_nonneighbors_across <= 1);
    CHECK(rep.ok());
}

TEST_CASE("lift and extract round-trip on the fixture") {
    GridTilingInstance inst = parse_grid_tiling(kFixture3x3);
    TilingReductionOutput out = grid_tiling_to_is(inst);
    auto sel = solve_grid_tiling(inst);
    REQUIRE(sel.has_value());
    std::vector<int> lifted = lift_tiling_solution(inst, *sel, out);
    CHECK(int(lifted.size()) == 36);
    CHECK(verify_witness(out.graph, Witness::set_of(WitnessKind::IndependentSet, lifted)).ok);
    Selection back = extract_tiling_solution(inst, out, lifted);
    CHECK(back.choice == sel->choice);
}

TEST_CASE("lift rejects broken selections with the offending cells") {
    GridTilingInstance inst = parse_grid_tiling(kFixture3x3);
    TilingReductionOutput out = grid_tiling_to_is(inst);
    Selection bad = *solve_grid_tiling(inst);
    bad.choice[0][0] = {5, 4};  // breaks agreement with (2,1)
    try {
        lift_tiling_solution(inst, bad, out);
        FAIL("expected InputError");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("(1,1)") != std::string::npos);
    }
}

TEST_CASE("extract rejects wrong sizes and non-independent sets") {
    GridTilingInstance inst = parse_grid_tiling(kFixture3x3);
    TilingReductionOutput out = grid_tiling_to_is(inst);
    std::vector<int> lifted = lift_tiling_solution(inst, *solve_grid_tiling(inst), out);
    std::vector<int> short_set(lifted.begin(), lifted.end() - 1);
    CHECK_THROWS_AS(extract_tiling_solution(inst, out, short_set), InputError);
    std::vector<int> clash = lifted;
    clash.back() = clash.front() == 1 ? 2 : 1;
    CHECK_THROWS_AS(extract_tiling_solution(inst, out, clash), InputError);
}

TEST_CASE("oracle MIS of 36 on the fixture output extracts to a valid tiling") {
    GridTilingInstance inst = parse_grid_tiling(kFixture3x3);
    TilingReductionOutput out = grid_tiling_to_is(inst);
    std::vector<int> best = max_independent_set(out.graph);
    REQUIRE(int(best.size()) == 36);
    Selection sel = extract_tiling_solution(inst, out, best);
    CHECK(selection_agreement_failure(inst, sel).empty());
}

TEST_CASE("theorem-2 equivalence on small random instances") {
    SplitMix64 rng(20250810);
    for (int trial = 0; trial < 40; ++trial) {
        GridTilingInstance inst;
        inst.k = 2;
        inst.n = 3;
        inst.tiles.assign(2, std::vector<std::vector<Tile>>(2));
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                int count = 1 + int(rng.next_below(3));
                for (int c = 0; c < count; ++c)
                    inst.tiles[i][j].push_back(
                        {1 + int(rng.next_below(3)), 1 + int(rng.next_below(3))});
            }
        TilingReductionOutput out = grid_tiling_to_is(inst);
        bool tiling = solve_grid_tiling(inst).has_value();
        bool mis = int(max_independent_set(out.graph).size()) >= out.target;
        CHECK(tiling == mis);
    }
}

TEST_CASE("multicolored_is_to_ds: vertex counts") {
    Graph one_edge(2);
    one_edge.add_edge(1, 2);
    ColorClassPartition p2{{{1}, {2}}};
    DsReductionOutput out = multicolored_is_to_ds(one_edge, p2);
    CHECK(out.graph.vertex_count() == 7);  // 2 + 4 + 1
    CHECK(out.target == 2);

    Graph e5(5);
    ColorClassPartition p{{{1, 2}, {3, 4}, {5}}};
    DsReductionOutput empty = multicolored_is_to_ds(e5, p);
    CHECK(empty.graph.vertex_count() == 5 + 6);
    CHECK(empty.w_edges.empty());
}

TEST_CASE("multicolored_is_to_ds: rejects intra-class edges") {
    Graph g(2);
    g.add_edge(1, 2);
    ColorClassPartition p{{{1, 2}}};
    CHECK_THROWS_AS(multicolored_is_to_ds(g, p), InputError);
}

TEST_CASE("multicolored_is_to_ds: adjacency schema") {
    McisInstance mi = random_mcis(77);
    DsReductionOutput out = multicolored_is_to_ds(mi.g, mi.p);
    const Graph& gp = out.graph;
    int n = mi.g.vertex_count();
    std::vector<int> owner(n + 1);
    for (int c = 1; c <= 3; ++c)
        for (int v : mi.p.classes[c - 1]) owner[v] = c;
    for (int i = 1; i <= 3; ++i) {
        const auto& cls = mi.p.classes[i - 1];
        for (size_t a = 0; a < cls.size(); ++a)
            for (size_t b = a + 1; b < cls.size(); ++b) CHECK(gp.adjacent(cls[a], cls[b]));
        for (int v = 1; v <= gp.vertex_count(); ++v) {
            if (v == out.x_vertex(i) || v == out.y_vertex(i)) continue;
            bool in_class = v <= n && owner[v] == i;
            CHECK(gp.adjacent(out.x_vertex(i), v) == in_class);
            CHECK(gp.adjacent(out.y_vertex(i), v) == in_class);
        }
    }
    // original inter-class edges are not carried over; w vertices encode them
    for (size_t e = 0; e < out.w_edges.size(); ++e) {
        auto [u, v] = out.w_edges[e];
        CHECK(!gp.adjacent(u, v));
        int w = out.w_vertex(int(e));
        for (int z = 1; z <= gp.vertex_count(); ++z) {
            if (z == w) continue;
            bool expect = z != u && z != v && z <= n &&
                          (owner[z] == owner[u] || owner[z] == owner[v]);
            CHECK(gp.adjacent(w, z) == expect);
        }
    }
}

TEST_CASE("theorem-5 structure holds on seeded instances") {
    for (uint64_t seed = 1; seed <= 25; ++seed) {
        McisInstance mi = random_mcis(seed);
        DsReductionOutput out = multicolored_is_to_ds(mi.g, mi.p);
        DsStructureReport rep = certify_ds_structure(out);
        CHECK(rep.w_independent);
        CHECK(rep.max_nonneighbors_in_star <= 3);
        CHECK(rep.max_stars_touched <= 2);
    }
}

TEST_CASE("lift_mcis_to_ds and extract_ds_to_mcis round-trip on seeded instances") {
    int lifted_count = 0;
    for (uint64_t seed = 1; seed <= 50; ++seed) {
        McisInstance mi = random_mcis(seed * 3 + 1);
        DsReductionOutput out = multicolored_is_to_ds(mi.g, mi.p);
        auto sol = multicolored_independent_set(mi.g, mi.p);
        if (!sol) continue;
        ++lifted_count;
        std::vector<int> ds = lift_mcis_to_ds(out, *sol);
        CHECK(verify_witness(out.graph, Witness::set_of(WitnessKind::DominatingSet, ds)).ok);
        std::vector<int> back = extract_ds_to_mcis(out, ds);
        CHECK(back == *sol);
    }
    CHECK(lifted_count >= 20);
}

TEST_CASE("extract_ds_to_mcis accepts oracle minimum dominating sets") {
    for (uint64_t seed = 100; seed <= 130; ++seed) {
        McisInstance mi = random_mcis(seed);
        DsReductionOutput out = multicolored_is_to_ds(mi.g, mi.p);
        std::vector<int> ds = min_dominating_set(out.graph);
        if (int(ds.size()) != out.target) continue;  // infeasible source instance
        std::vector<int> sol = extract_ds_to_mcis(out, ds);
        Witness w = Witness::set_of(WitnessKind::IndependentSet, sol);
        CHECK(verify_witness(mi.g, w).ok);
        std::set<int> classes;
        for (int v : sol) classes.insert(mi.p.class_of(v));
        CHECK(int(classes.size()) == out.target);
    }
}

TEST_CASE("lift_mcis_to_ds: singleton classes on an edgeless source") {
    Graph e3(3);
    ColorClassPartition p{{{1}, {2}, {3}}};
    DsReductionOutput out = multicolored_is_to_ds(e3, p);
    std::vector<int> ds = lift_mcis_to_ds(out, {1, 2, 3});
    CHECK(ds == std::vector<int>{1, 2, 3});
    CHECK(verify_witness(out.graph, Witness::set_of(WitnessKind::DominatingSet, ds)).ok);
}

TEST_CASE("lift/extract precondition diagnostics") {
    McisInstance mi = random_mcis(5);
    REQUIRE(mi.p.classes[0].size() >= 2);
    DsReductionOutput out = multicolored_is_to_ds(mi.g, mi.p);
    std::vector<int> two_same{mi.p.classes[0][0], mi.p.classes[0][1], mi.p.classes[1][0]};
    CHECK_THROWS_AS(lift_mcis_to_ds(out, two_same), InputError);
    CHECK_THROWS_AS(lift_mcis_to_ds(out, {1}), InputError);
    CHECK_THROWS_AS(extract_ds_to_mcis(out, {1, 2}), InputError);
    std::vector<int> not_dominating{1, 2, 3};
    CHECK_THROWS_AS(extract_ds_to_mcis(out, not_dominating), InputError);
}

TEST_CASE("theorem-5 equivalence on seeded instances") {
    for (uint64_t seed = 1; seed <= 30; ++seed) {
        McisInstance mi = random_mcis(seed * 13 + 2);
        DsReductionOutput out = multicolored_is_to_ds(mi.g, mi.p);
        bool mcis = multicolored_independent_set(mi.g, mi.p).has_value();
        bool ds = has_dominating_set(out.graph, out.target);
        CHECK(mcis == ds);
    }
}

TEST_CASE("reduction outputs have small exact half-graph index") {
    GridTilingInstance inst = parse_grid_tiling(
        "gridtiling 2 2\ncell 1 1 : 1,1 2,2\ncell 1 2 : 1,1\ncell 2 1 : 2,1 1,2\n"
        "cell 2 2 : 1,1 2,2\n");
    TilingReductionOutput out = grid_tiling_to_is(inst);
    IndexValue hv = pattern_index(out.graph, PatternKind::HalfGraph, 8);
    CHECK(!hv.at_least);
    CHECK(hv.value <= 4);

    McisInstance mi = random_mcis(9);
    DsReductionOutput dso = multicolored_is_to_ds(mi.g, mi.p);
    IndexValue hd = pattern_index(dso.graph, PatternKind::HalfGraph, 8);
    CHECK(!hd.at_least);
    CHECK(hd.value <= 16);
}
