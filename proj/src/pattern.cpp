#include "sip/pattern.hpp"

#include <sstream>

#include "sip/errors.hpp"

namespace sip {

const char* pattern_kind_name(PatternKind k) {
    switch (k) {
        case PatternKind::Matching: return "matching";
        case PatternKind::CoMatching: return "comatching";
        case PatternKind::HalfGraph: return "halfgraph";
    }
    return "?";
}

std::optional<PatternKind> pattern_kind_from_name(const std::string& name) {
    if (name == "matching") return PatternKind::Matching;
    if (name == "comatching") return PatternKind::CoMatching;
    if (name == "halfgraph") return PatternKind::HalfGraph;
    return std::nullopt;
}

bool pattern_edge_required(PatternKind kind, int i, int j) {
    switch (kind) {
        case PatternKind::Matching: return i == j;
        case PatternKind::CoMatching: return i != j;
        case PatternKind::HalfGraph: return i <= j;
    }
    return false;
}

PatternCheck verify_pattern_witness(const Graph& g, const PatternWitness& w) {
    int h = w.order();
    if (h < 1) return {false, "empty witness"};
    if (int(w.b_side.size()) != h) return {false, "side lengths differ"};
    std::vector<int> all = w.a_side;
    all.insert(all.end(), w.b_side.begin(), w.b_side.end());
    for (int v : all)
        if (v < 1 || v > g.vertex_count())
            return {false, "vertex " + std::to_string(v) + " out of range"};
    for (size_t i = 0; i < all.size(); ++i)
        for (size_t j = i + 1; j < all.size(); ++j)
            if (all[i] == all[j])
                return {false, "vertex " + std::to_string(all[i]) + " repeated"};
    for (int i = 1; i <= h; ++i)
        for (int j = 1; j <= h; ++j) {
            bool want = pattern_edge_required(w.kind, i, j);
            bool have = g.adjacent(w.a_side[i - 1], w.b_side[j - 1]);
            if (want != have)
                return {false, "pair a_" + std::to_string(i) + " b_" + std::to_string(j) +
                                   (want ? " should be an edge" : " should be a non-edge")};
        }
    return {true, ""};
}

namespace {

// Interleaved pair-by-pair backtracking. After i pairs are placed, CA holds
// the vertices still eligible as a_{i+1} (consistent with all placed b's) and
// CB those eligible as b_{i+1} (consistent with all placed a's). For matching
// and co-matching the pattern is invariant under permuting pairs and swapping
// whole sides, so the search may assume a_1 is the smallest witness vertex
// and the a-side ascends; the half-graph has no such symmetry.
struct PairSearch {
    const Graph& g;
    PatternKind kind;
    int h;
    std::vector<Bitset> non_nbrs;  // full \ N[v] \ {v}
    std::vector<int> a, b;
    bool symmetric;  // matching / comatching

    PairSearch(const Graph& g_, PatternKind kind_, int h_)
        : g(g_), kind(kind_), h(h_), symmetric(kind_ != PatternKind::HalfGraph) {
        int n = g.vertex_count();
        Bitset full = g.full_set();
        non_nbrs.resize(n + 1);
        for (int v = 1; v <= n; ++v) {
            non_nbrs[v] = full;
            non_nbrs[v].andnot(g.neighbors(v));
            non_nbrs[v].reset(v);
        }
    }

    // Constraint of placed b-vertex y on future a's.
    const Bitset& a_mask(int y) const {
        return kind == PatternKind::CoMatching ? g.neighbors(y) : non_nbrs[y];
    }
    // Constraint of placed a-vertex x on future b's.
    const Bitset& b_mask(int x) const {
        return kind == PatternKind::Matching ? non_nbrs[x] : g.neighbors(x);
    }
    // Vertices eligible as the partner of x within its own pair.
    const Bitset& pair_mask(int x) const {
        return kind == PatternKind::CoMatching ? non_nbrs[x] : g.neighbors(x);
    }

    bool extend(const Bitset& ca, const Bitset& cb, int placed) {
        if (placed == h) return true;
        int need = h - placed - 1;
        int from = symmetric && placed > 0 ? a[placed - 1] : 0;
        for (int x = ca.find_next(from); x != -1; x = ca.find_next(x)) {
            Bitset ys = cb & pair_mask(x);
            Bitset cb2 = cb & b_mask(x);
            cb2.reset(x);
            if (cb2.count() < need) continue;
            for (int y = ys.find_first(); y != -1; y = ys.find_next(y)) {
                if (y == x) continue;
                Bitset ca2 = ca & a_mask(y);
                ca2.reset(x);
                ca2.reset(y);
                if (ca2.count() < need) continue;
                Bitset cb3 = cb2;
                cb3.reset(y);
                if (cb3.count() < need) continue;
                a[placed] = x;
                b[placed] = y;
                if (symmetric && placed == 0) {
                    // a_1 is the global minimum of the witness.
                    Bitset above(g.vertex_count() + 1);
                    for (int v = x + 1; v <= g.vertex_count(); ++v) above.set(v);
                    ca2 &= above;
                    cb3 &= above;
                    if (ca2.count() < need || cb3.count() < need) continue;
                }
                if (extend(ca2, cb3, placed + 1)) return true;
            }
        }
        return false;
    }
};

}  // namespace

std::optional<PatternWitness> find_semi_induced(const Graph& g, PatternKind kind, int h) {
    if (h < 1) throw InputError("pattern order must be positive");
    if (2 * h > g.vertex_count()) return std::nullopt;
    PairSearch s(g, kind, h);
    s.a.assign(h, 0);
    s.b.assign(h, 0);
    Bitset all = g.full_set();
    if (!s.extend(all, all, 0)) return std::nullopt;
    return PatternWitness{kind, s.a, s.b};
}

IndexValue pattern_index(const Graph& g, PatternKind kind, int cap) {
    if (cap < 1) throw InputError("cap must be positive");
    IndexValue out{0, false, std::nullopt};
    for (int h = 1; h <= cap; ++h) {
        auto w = find_semi_induced(g, kind, h);
        if (!w) return out;  // absence at order h certifies value h-1
        out.value = h;
        out.witness = std::move(w);
    }
    out.at_least = true;  // witness of order cap exists
    return out;
}

std::string IndexValue::to_string() const {
    return (at_least ? ">=" : "") + std::to_string(value);
}

IndexReport index_report(const Graph& g, int cap) {
    IndexReport r{pattern_index(g, PatternKind::Matching, cap),
                  pattern_index(g, PatternKind::CoMatching, cap),
                  pattern_index(g, PatternKind::HalfGraph, cap),
                  twin_classes(g).diversity()};
    return r;
}

namespace {

bool induced_extend(const Graph& g, const Graph& pat, std::vector<int>& map, Bitset& used,
                    int next) {
    int p = pat.vertex_count();
    if (next > p) return true;
    for (int cand = 1; cand <= g.vertex_count(); ++cand) {
        if (used.test(cand)) continue;
        bool ok = true;
        for (int prev = 1; prev < next; ++prev) {
            if (pat.adjacent(prev, next) != g.adjacent(map[prev], cand)) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        map[next] = cand;
        used.set(cand);
        if (induced_extend(g, pat, map, used, next + 1)) return true;
        used.reset(cand);
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> contains_induced(const Graph& g, const Graph& pattern) {
    if (pattern.vertex_count() > 12) throw InputError("pattern too large (limit 12 vertices)");
    if (pattern.vertex_count() > g.vertex_count()) return std::nullopt;
    std::vector<int> map(pattern.vertex_count() + 1, 0);
    Bitset used(g.vertex_count() + 1);
    if (!induced_extend(g, pattern, map, used, 1)) return std::nullopt;
    return std::vector<int>(map.begin() + 1, map.end());
}

std::string pattern_witness_text(const PatternWitness& w) {
    std::ostringstream out;
    out << "pattern " << pattern_kind_name(w.kind) << " " << w.order() << " : a =";
    for (int v : w.a_side) out << " " << v;
    out << " ; b =";
    for (int v : w.b_side) out << " " << v;
    return out.str();
}

}  // namespace sip
