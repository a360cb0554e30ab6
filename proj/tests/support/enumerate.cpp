#include "support/enumerate.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace sip::enumerate {

Graph SmallGraph::to_graph() const {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (edge(u, v)) g.add_edge(u + 1, v + 1);
    return g;
}

namespace {

// Code layout: chunks for positions j = 1..n-1, each of j bits (adjacency of
// perm[j] toward perm[0..j-1], i ascending toward the low bit), concatenated
// so that earlier chunks are more significant. Lexicographic comparisons are
// then plain integer comparisons, prefix by prefix.
struct CanonSearch {
    const SmallGraph& g;
    uint64_t best = ~uint64_t(0);
    int total_bits;
    std::vector<int> perm;
    std::vector<bool> used;

    explicit CanonSearch(const SmallGraph& g_) : g(g_) {
        total_bits = g.n * (g.n - 1) / 2;
        perm.assign(g.n, 0);
        used.assign(g.n, false);
    }

    void rec(int j, uint64_t code, int bits) {
        if (j == g.n) {
            best = std::min(best, code);
            return;
        }
        for (int v = 0; v < g.n; ++v) {
            if (used[v]) continue;
            uint64_t chunk = 0;
            for (int i = 0; i < j; ++i) chunk = (chunk << 1) | (g.edge(perm[i], v) ? 1 : 0);
            uint64_t cand = (code << j) | chunk;
            int cand_bits = bits + j;
            if (best != ~uint64_t(0) && cand > (best >> (total_bits - cand_bits))) continue;
            used[v] = true;
            perm[j] = v;
            rec(j + 1, cand, cand_bits);
            used[v] = false;
        }
    }
};

SmallGraph from_code(int n, uint64_t code) {
    SmallGraph g;
    g.n = n;
    g.adj.assign(n, 0);
    int total_bits = n * (n - 1) / 2;
    int shift = total_bits;
    for (int j = 1; j < n; ++j) {
        shift -= j;
        uint64_t chunk = (code >> shift) & ((uint64_t(1) << j) - 1);
        for (int i = 0; i < j; ++i) {
            if ((chunk >> (j - 1 - i)) & 1) {
                g.adj[i] |= uint16_t(1) << j;
                g.adj[j] |= uint16_t(1) << i;
            }
        }
    }
    return g;
}

bool small_connected(const SmallGraph& g) {
    if (g.n == 0) return false;
    uint16_t seen = 1;
    while (true) {
        uint16_t next = seen;
        for (int v = 0; v < g.n; ++v)
            if ((seen >> v) & 1) next |= g.adj[v];
        if (next == seen) break;
        seen = next;
    }
    return seen == (uint16_t(1) << g.n) - 1;
}

}  // namespace

uint64_t canonical_code(const SmallGraph& g) {
    if (g.n > 8) throw std::runtime_error("canonical_code is limited to 8 vertices");
    if (g.n <= 1) return 0;
    CanonSearch s(g);
    s.rec(0, 0, 0);
    return s.best;
}

std::vector<SmallGraph> all_graphs(int n) {
    if (n < 1 || n > 8) throw std::runtime_error("all_graphs supports 1..8 vertices");
    std::vector<uint64_t> codes{0};  // the single 1-vertex graph
    for (int m = 2; m <= n; ++m) {
        std::unordered_set<uint64_t> next;
        for (uint64_t code : codes) {
            SmallGraph base = from_code(m - 1, code);
            for (uint32_t subset = 0; subset < (uint32_t(1) << (m - 1)); ++subset) {
                SmallGraph ext = base;
                ext.n = m;
                ext.adj.push_back(0);
                for (int v = 0; v < m - 1; ++v)
                    if ((subset >> v) & 1) {
                        ext.adj[v] |= uint16_t(1) << (m - 1);
                        ext.adj[m - 1] |= uint16_t(1) << v;
                    }
                next.insert(canonical_code(ext));
            }
        }
        codes.assign(next.begin(), next.end());
        std::sort(codes.begin(), codes.end());
    }
    std::vector<SmallGraph> out;
    out.reserve(codes.size());
    for (uint64_t code : codes) out.push_back(from_code(n, code));
    return out;
}

std::vector<SmallGraph> all_connected_graphs(int n) {
    std::vector<SmallGraph> out;
    for (SmallGraph& g : all_graphs(n))
        if (small_connected(g)) out.push_back(std::move(g));
    return out;
}

}  // namespace sip::enumerate
