#include "sip/gyarfas.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <ostream>
#include <set>

#include "sip/errors.hpp"

namespace sip {

uint64_t f_colors(int k, int t) {
    if (k < 1 || t < 1) throw InputError("f(k, t) needs k, t >= 1");
    uint64_t f = 0;
    for (int i = 2; i <= k; ++i) {
        uint64_t plus_one;
        if (__builtin_add_overflow(f, uint64_t(1), &plus_one) ||
            __builtin_mul_overflow(plus_one, uint64_t(t - 1), &f))
            throw std::overflow_error("f(" + std::to_string(k) + ", " + std::to_string(t) +
                                      ") exceeds 64-bit integers");
    }
    return f;
}

uint64_t g_colors(int k, int t, int l) {
    if (k < 1 || t < 1 || l < 1) throw InputError("g(k, t, l) needs k, t, l >= 1");
    if (k == 1) return 0;  // never reached by the recursion; keeps g(1,t,t) = f(1,t)
    uint64_t inner = f_colors(k - 1, t);
    uint64_t plus_one, g;
    if (__builtin_add_overflow(inner, uint64_t(1), &plus_one) ||
        __builtin_mul_overflow(plus_one, uint64_t(l - 1), &g))
        throw std::overflow_error("g(" + std::to_string(k) + ", " + std::to_string(t) + ", " +
                                  std::to_string(l) + ") exceeds 64-bit integers");
    return g;
}

bool pow_at_least(uint64_t base, uint64_t exp, uint64_t target) {
    if (target <= 1) return true;
    if (base <= 1) return base >= target;
    uint64_t acc = 1;
    for (uint64_t i = 0; i < exp; ++i) {
        if (__builtin_mul_overflow(acc, base, &acc)) return true;
        if (acc >= target) return true;
    }
    return acc >= target;
}

namespace {

struct SubResult {
    enum class Tag { Path, Clique, Coloring, EndpointPath } tag;
    std::vector<int> verts;        // path / clique / endpoint path
    std::vector<uint64_t> colors;  // ambient-indexed, 0 = unassigned
};

class Trichotomy {
public:
    Trichotomy(const Graph& g, int t) : g_(g), t_(t) {}

    // Either a P_t / K_k, or a proper coloring of live with ids <= f(k, t).
    SubResult main_rec(const Bitset& live, int k) {
        std::vector<uint64_t> colors(g_.vertex_count() + 1, 0);
        for (const Bitset& comp : connected_components_within(g_, live)) {
            int v = comp.find_first();
            SubResult r = sub_rec(comp, k, v, t_);
            if (r.tag == SubResult::Tag::Path || r.tag == SubResult::Tag::Clique) return r;
            if (r.tag == SubResult::Tag::EndpointPath) {
                // an endpoint path produced at l = t is an induced P_t
                r.tag = SubResult::Tag::Path;
                return r;
            }
            for (int u = comp.find_first(); u != -1; u = comp.find_next(u))
                colors[u] = r.colors[u];
        }
        return {SubResult::Tag::Coloring, {}, std::move(colors)};
    }

    SubResult sub_rec(const Bitset& live, int k, int v, int l) {
        if (t_ == 1) return {SubResult::Tag::Path, {v}, {}};
        if (k == 1) return {SubResult::Tag::Clique, {v}, {}};
        if (l == 1) return {SubResult::Tag::EndpointPath, {v}, {}};
        if (live.count() == 1) {
            std::vector<uint64_t> colors(g_.vertex_count() + 1, 0);
            colors[v] = 1;
            return {SubResult::Tag::Coloring, {}, std::move(colors)};
        }
        Bitset nv = g_.neighbors(v) & live;
        if (nv.none()) throw InvariantViolation("disconnected live set in the recursion");
        SubResult inner = main_rec(nv, k - 1);
        if (inner.tag == SubResult::Tag::Path) return inner;
        if (inner.tag == SubResult::Tag::Clique) {
            inner.verts.push_back(v);
            std::sort(inner.verts.begin(), inner.verts.end());
            return inner;
        }

        Bitset rest = live;
        rest.andnot(nv);
        rest.reset(v);
        uint64_t zone1 = g_colors(k, t_, l - 1);
        uint64_t zone2 = f_colors(k - 1, t_);
        uint64_t z12, top;
        if (__builtin_add_overflow(zone1, zone2, &z12) ||
            __builtin_add_overflow(z12, uint64_t(1), &top))
            throw std::overflow_error("color range exceeds 64-bit integers");
        std::vector<uint64_t> colors(g_.vertex_count() + 1, 0);
        for (const Bitset& comp : connected_components_within(g_, rest)) {
            int w = -1;
            for (int cand = nv.find_first(); cand != -1; cand = nv.find_next(cand))
                if (g_.neighbors(cand).intersects(comp)) {
                    w = cand;
                    break;
                }
            if (w == -1) throw InvariantViolation("component without an attachment in N(v)");
            Bitset sub_live = comp;
            sub_live.set(w);
            SubResult r = sub_rec(sub_live, k, w, l - 1);
            if (r.tag == SubResult::Tag::Path || r.tag == SubResult::Tag::Clique) return r;
            if (r.tag == SubResult::Tag::EndpointPath) {
                std::vector<int> path{v};
                path.insert(path.end(), r.verts.begin(), r.verts.end());
                return {SubResult::Tag::EndpointPath, std::move(path), {}};
            }
            for (int u = comp.find_first(); u != -1; u = comp.find_next(u))
                colors[u] = r.colors[u];  // w is recolored with N(v) below
        }
        // Disjoint ranges: components of the rest, then N(v), then v itself,
        // totalling g(k, t, l-1) + f(k-1, t) + 1 = g(k, t, l).
        for (int u = nv.find_first(); u != -1; u = nv.find_next(u))
            colors[u] = zone1 + inner.colors[u];
        colors[v] = top;
        return {SubResult::Tag::Coloring, {}, std::move(colors)};
    }

private:
    const Graph& g_;
    int t_;
};

GyarfasOutcome finish(const Graph& g, SubResult r) {
    GyarfasOutcome out;
    switch (r.tag) {
        case SubResult::Tag::Path:
            out.kind = GyarfasOutcome::Kind::Path;
            out.path = std::move(r.verts);
            return out;
        case SubResult::Tag::Clique:
            out.kind = GyarfasOutcome::Kind::Clique;
            out.clique = std::move(r.verts);
            return out;
        case SubResult::Tag::Coloring: {
            out.kind = GyarfasOutcome::Kind::Coloring;
            out.colors = std::move(r.colors);
            std::set<uint64_t> distinct;
            for (int v = 1; v <= g.vertex_count(); ++v)
                if (out.colors[v] != 0) distinct.insert(out.colors[v]);
            out.color_count = distinct.size();
            return out;
        }
        case SubResult::Tag::EndpointPath: break;
    }
    throw InvariantViolation("unexpected endpoint path at the top level");
}

}  // namespace

GyarfasOutcome gyarfas(const Graph& g, int k, int t) {
    if (g.vertex_count() == 0) throw InputError("gyarfas needs a nonempty graph");
    if (k < 1 || t < 1) throw InputError("gyarfas needs k, t >= 1");
    Trichotomy tri(g, t);
    return finish(g, tri.main_rec(g.full_set(), k));
}

SubOutcome gyarfas_sub(const Graph& g, int k, int t, int v, int l) {
    if (g.vertex_count() == 0) throw InputError("gyarfas_sub needs a nonempty graph");
    if (k < 1 || t < 1) throw InputError("gyarfas_sub needs k, t >= 1");
    if (l < 1 || l > t) throw InputError("gyarfas_sub needs 1 <= l <= t");
    if (v < 1 || v > g.vertex_count()) throw InputError("start vertex out of range");
    if (connected_components(g).size() != 1)
        throw InputError("gyarfas_sub requires a connected graph");
    Trichotomy tri(g, t);
    SubResult r = tri.sub_rec(g.full_set(), k, v, l);
    SubOutcome out;
    if (r.tag == SubResult::Tag::EndpointPath) {
        out.is_endpoint_path = true;
        out.endpoint_path = std::move(r.verts);
        return out;
    }
    out.is_endpoint_path = false;
    out.outcome = finish(g, std::move(r));
    return out;
}

Witness to_coloring_witness(const GyarfasOutcome& o) {
    if (o.kind != GyarfasOutcome::Kind::Coloring)
        throw InputError("outcome is not a coloring");
    std::vector<int> colors(o.colors.size(), 0);
    for (size_t v = 1; v < o.colors.size(); ++v) {
        if (o.colors[v] > uint64_t(INT_MAX))
            throw std::overflow_error("color id exceeds the witness text range");
        colors[v] = int(o.colors[v]);
    }
    return Witness::coloring_of(std::move(colors));
}

namespace {

// Outcome of one gyarfas probe at clique target kp.
struct Probe {
    bool clique;
    std::vector<int> witness;
};

Probe probe(const Graph& g, int kp, int t, const char* bound_name) {
    GyarfasOutcome o = gyarfas(g, kp, t);
    switch (o.kind) {
        case GyarfasOutcome::Kind::Clique: return {true, std::move(o.clique)};
        case GyarfasOutcome::Kind::Coloring: return {false, {}};
        case GyarfasOutcome::Kind::Path:
            throw IndexBoundError(std::string(bound_name) +
                                      " index exceeds the supplied bound: found an induced P_" +
                                      std::to_string(t),
                                  std::move(o.path));
    }
    throw InvariantViolation("unreachable");
}

std::vector<int> approx_clique_impl(const Graph& g, int m, std::ostream* diag,
                                    const char* bound_name) {
    if (m < 0) throw InputError("index bound must be non-negative");
    if (g.vertex_count() == 0) throw InputError("approximation needs a nonempty graph");
    int n = g.vertex_count();
    int t = 2 * m + 2;
    std::map<int, Probe> seen;
    auto eval = [&](int kp) -> const Probe& {
        auto it = seen.find(kp);
        if (it == seen.end()) it = seen.emplace(kp, probe(g, kp, t, bound_name)).first;
        return it->second;
    };
    int lo = 1, hi = n + 1;  // P(1) holds, P(n+1) is false by convention
    if (!eval(1).clique) throw InvariantViolation("gyarfas failed to produce K_1");
    while (hi - lo > 1) {
        int mid = lo + (hi - lo) / 2;
        if (eval(mid).clique)
            lo = mid;
        else
            hi = mid;
    }
    // The observations should be monotone in k'; if not, fall back to a
    // downward scan for the largest succeeding k'.
    int last_true = 0, first_false = n + 1;
    for (const auto& [kp, pr] : seen) {
        if (pr.clique) last_true = std::max(last_true, kp);
        else first_false = std::min(first_false, kp);
    }
    if (last_true > first_false) {
        if (diag)
            *diag << "warning: non-monotone trichotomy outcomes (clique at " << last_true
                  << ", coloring at " << first_false << "); scanning linearly\n";
        for (int kp = n; kp >= 1; --kp)
            if (eval(kp).clique) return eval(kp).witness;
    }
    return eval(lo).witness;
}

}  // namespace

std::vector<int> approx_clique(const Graph& g, int m, std::ostream* diag) {
    return approx_clique_impl(g, m, diag, "matching");
}

std::vector<int> approx_is_comatching(const Graph& g, int m, std::ostream* diag) {
    return approx_clique_impl(complement(g), m, diag, "co-matching");
}

}  // namespace sip
