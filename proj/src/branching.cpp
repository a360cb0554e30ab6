#include "sip/branching.hpp"

#include <algorithm>

namespace sip {

namespace {

Bitset greedy_within(const Graph& g, const Bitset& live) {
    Bitset picked(g.vertex_count() + 1);
    Bitset blocked(g.vertex_count() + 1);
    for (int v = live.find_first(); v != -1; v = live.find_next(v)) {
        if (blocked.test(v)) continue;
        picked.set(v);
        blocked |= g.neighbors(v);
    }
    return picked;
}

struct Brancher {
    const Graph& g;
    std::optional<int> depth_cap;
    uint64_t nodes = 0;
    int depth_reached = 0;
    bool cap_hit = false;

    // Prefer larger sets; among equal sizes the lexicographically smaller one.
    static bool better(const Bitset& cand, int cand_size, const Bitset& best, int best_size) {
        if (cand_size != best_size) return cand_size > best_size;
        return cand.lex_less_as_set(best);
    }

    Bitset rec(const Bitset& live, int depth) {
        ++nodes;
        depth_reached = std::max(depth_reached, depth);
        bool has_edge = false;
        for (int u = live.find_first(); u != -1 && !has_edge; u = live.find_next(u))
            has_edge = g.neighbors(u).intersects(live);
        if (!has_edge) return live;

        Bitset best = greedy_within(g, live);
        int best_size = best.count();
        if (depth_cap && depth >= *depth_cap) {
            cap_hit = true;
            return best;
        }
        for (int u = live.find_first(); u != -1; u = live.find_next(u)) {
            Bitset nbrs = g.neighbors(u) & live;
            for (int v = nbrs.find_first(); v != -1; v = nbrs.find_next(v)) {
                Bitset child = g.neighbors(v) & live;
                child.andnot(g.neighbors(u));
                child.reset(u);
                child.reset(v);
                Bitset cand = rec(child, depth + 1);
                cand.set(u);
                int cand_size = cand.count();
                if (better(cand, cand_size, best, best_size)) {
                    best = cand;
                    best_size = cand_size;
                }
            }
        }
        return best;
    }
};

}  // namespace

std::vector<int> greedy_maximal_is(const Graph& g) {
    return greedy_within(g, g.full_set()).to_vector();
}

BranchReport approx_is_halfgraph(const Graph& g, std::optional<int> depth_cap) {
    Brancher b{g, depth_cap};
    Bitset result = b.rec(g.full_set(), 0);
    BranchReport rep;
    rep.result = result.to_vector();
    rep.depth_reached = b.depth_reached;
    rep.nodes_explored = b.nodes;
    rep.cap_hit = b.cap_hit;
    return rep;
}

}  // namespace sip
