#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sip/errors.hpp"
#include "sip/generate.hpp"
#include "sip/pattern.hpp"
#include "support/brute.hpp"
#include "support/enumerate.hpp"

using namespace sip;

TEST_CASE("find_semi_induced: generator patterns are found verbatim") {
    Graph half3 = make_halfgraph(3).graph;
    auto w = find_semi_induced(half3, PatternKind::HalfGraph, 3);
    REQUIRE(w.has_value());
    CHECK(w->a_side == std::vector<int>{1, 2, 3});
    CHECK(w->b_side == std::vector<int>{4, 5, 6});
    CHECK(verify_pattern_witness(half3, *w).ok);
}

TEST_CASE("find_semi_induced: K5 has no co-matching of order 1") {
    CHECK(!find_semi_induced(make_clique(5).graph, PatternKind::CoMatching, 1).has_value());
}

TEST_CASE("find_semi_induced: half-graph of order 2 in C5") {
    Graph c5 = make_cycle(5).graph;
    auto w = find_semi_induced(c5, PatternKind::HalfGraph, 2);
    REQUIRE(w.has_value());
    CHECK(w->a_side == std::vector<int>{1, 4});
    CHECK(w->b_side == std::vector<int>{2, 5});
    CHECK(verify_pattern_witness(c5, *w).ok);
}

TEST_CASE("pattern_index: edgeless graph") {
    Graph e5(5);
    CHECK(pattern_index(e5, PatternKind::HalfGraph, 8).value == 0);
    CHECK(pattern_index(e5, PatternKind::Matching, 8).value == 0);
    IndexValue cm = pattern_index(e5, PatternKind::CoMatching, 8);
    CHECK(cm.value == 1);
    CHECK(!cm.at_least);
    REQUIRE(cm.witness.has_value());
    CHECK(verify_pattern_witness(e5, *cm.witness).ok);
}

TEST_CASE("pattern_index: half-graph generator has index exactly its order") {
    IndexValue v = pattern_index(make_halfgraph(3).graph, PatternKind::HalfGraph, 5);
    CHECK(v.value == 3);
    CHECK(!v.at_least);
}

TEST_CASE("pattern_index: cliques have matching index 1") {
    for (int n : {2, 4, 7}) {
        IndexValue v = pattern_index(make_clique(n).graph, PatternKind::Matching, 4);
        CHECK(v.value == 1);
        CHECK(!v.at_least);
    }
}

TEST_CASE("pattern_index: cap reporting") {
    IndexValue v = pattern_index(make_halfgraph(6).graph, PatternKind::HalfGraph, 4);
    CHECK(v.value == 4);
    CHECK(v.at_least);
    CHECK(v.to_string() == ">=4");
}

TEST_CASE("index_report: C5 and the P4 self-duality") {
    IndexReport rep = index_report(make_cycle(5).graph, 8);
    CHECK(rep.halfgraph.value == 2);
    CHECK(!rep.halfgraph.at_least);
    CHECK(rep.neighborhood_diversity == 5);

    Graph p4 = make_path(4).graph;
    IndexReport rp = index_report(p4, 8);
    IndexReport rc = index_report(complement(p4), 8);
    CHECK(rp.matching.value == rc.comatching.value);
}

TEST_CASE("monotonicity: a witness at h implies one at h-1") {
    for (uint64_t seed = 1; seed <= 24; ++seed) {
        Graph g = make_gnp(10, 0.25 * (1 + double(seed % 3)), seed).graph;
        for (PatternKind kind :
             {PatternKind::Matching, PatternKind::CoMatching, PatternKind::HalfGraph}) {
            for (int h = 2; h <= 3; ++h)
                if (find_semi_induced(g, kind, h).has_value())
                    CHECK(find_semi_induced(g, kind, h - 1).has_value());
        }
    }
}

TEST_CASE("witness soundness on random graphs") {
    for (uint64_t seed = 1; seed <= 30; ++seed) {
        Graph g = make_gnp(11, 0.4, seed).graph;
        for (PatternKind kind :
             {PatternKind::Matching, PatternKind::CoMatching, PatternKind::HalfGraph}) {
            IndexValue v = pattern_index(g, kind, 5);
            if (v.value >= 1) {
                REQUIRE(v.witness.has_value());
                CHECK(v.witness->order() == v.value);
                CHECK(verify_pattern_witness(g, *v.witness).ok);
            }
        }
    }
}

TEST_CASE("brute-force equivalence on all graphs up to 7 vertices") {
    for (int n = 1; n <= 7; ++n) {
        for (const auto& sg : enumerate::all_graphs(n)) {
            Graph g = sg.to_graph();
            for (PatternKind kind :
                 {PatternKind::Matching, PatternKind::CoMatching, PatternKind::HalfGraph}) {
                int expect = brute::pattern_index(g, kind, 4);
                IndexValue got = pattern_index(g, kind, 4);
                CHECK(got.value == expect);
            }
        }
    }
}

TEST_CASE("brute-force equivalence on all 8-vertex graphs") {
    long long mismatches = 0;
    for (const auto& sg : enumerate::all_graphs(8)) {
        Graph g = sg.to_graph();
        for (PatternKind kind :
             {PatternKind::Matching, PatternKind::CoMatching, PatternKind::HalfGraph})
            if (pattern_index(g, kind, 5).value != brute::pattern_index(g, kind, 5))
                ++mismatches;
    }
    CHECK(mismatches == 0);
}

TEST_CASE("matching/co-matching duality is exact; half-graph within one") {
    for (uint64_t seed = 1; seed <= 60; ++seed) {
        Graph g = make_gnp(9, 0.2 + 0.06 * double(seed % 10), seed).graph;
        Graph co = complement(g);
        CHECK(pattern_index(g, PatternKind::Matching, 5).value ==
              pattern_index(co, PatternKind::CoMatching, 5).value);
        int h = pattern_index(g, PatternKind::HalfGraph, 5).value;
        int hc = pattern_index(co, PatternKind::HalfGraph, 5).value;
        CHECK(std::abs(h - hc) <= 1);
    }
}

TEST_CASE("contains_induced: paths and stars") {
    Graph c5 = make_cycle(5).graph;
    Graph p4 = make_path(4).graph;
    Graph p5 = make_path(5).graph;
    auto hit = contains_induced(c5, p4);
    REQUIRE(hit.has_value());
    // re-check the embedding preserves edges and non-edges
    for (int u = 1; u <= 4; ++u)
        for (int v = u + 1; v <= 4; ++v)
            CHECK(p4.adjacent(u, v) == c5.adjacent((*hit)[u - 1], (*hit)[v - 1]));
    CHECK(!contains_induced(c5, p5).has_value());

    Graph k15(6);
    for (int leaf = 2; leaf <= 6; ++leaf) k15.add_edge(1, leaf);
    auto self = contains_induced(k15, k15);
    REQUIRE(self.has_value());
    CHECK((*self) == std::vector<int>{1, 2, 3, 4, 5, 6});
    CHECK_THROWS_AS(contains_induced(c5, make_clique(13).graph), InputError);
}
