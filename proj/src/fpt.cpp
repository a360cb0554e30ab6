#include "sip/fpt.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "sip/errors.hpp"

namespace sip {

int GammaFormula::arity() const {
    switch (shape) {
        case GammaShape::Eta: return 2;
        case GammaShape::Chi:
        case GammaShape::ChiStar: return 2 * t;
        case GammaShape::Theta:
        case GammaShape::Delta:
        case GammaShape::DeltaStar: return 2 * t + 1;
    }
    return 0;
}

std::string GammaFormula::name() const {
    std::string base;
    switch (shape) {
        case GammaShape::Eta: return "eta";
        case GammaShape::Chi: base = "chi"; break;
        case GammaShape::ChiStar: base = "chi*"; break;
        case GammaShape::Theta: base = "theta"; break;
        case GammaShape::Delta: base = "delta"; break;
        case GammaShape::DeltaStar: base = "delta*"; break;
    }
    return base + "_" + std::to_string(2 * t);
}

std::vector<GammaFormula> gamma_family(int t) {
    if (t < 1) throw InputError("gamma family needs t >= 1");
    return {{GammaShape::Eta, t},   {GammaShape::Chi, t},   {GammaShape::ChiStar, t},
            {GammaShape::Theta, t}, {GammaShape::Delta, t}, {GammaShape::DeltaStar, t}};
}

bool eval_formula(const Graph& g, const GammaFormula& phi, const std::vector<int>& tuple) {
    if (int(tuple.size()) != phi.arity())
        throw InputError("formula " + phi.name() + " has arity " + std::to_string(phi.arity()) +
                         ", got " + std::to_string(tuple.size()) + " arguments");
    for (int v : tuple)
        if (v < 1 || v > g.vertex_count())
            throw InputError("tuple entry " + std::to_string(v) + " out of range");
    for (size_t i = 0; i < tuple.size(); ++i)
        for (size_t j = i + 1; j < tuple.size(); ++j)
            if (tuple[i] == tuple[j])
                throw InputError("tuple entries must be distinct, " + std::to_string(tuple[i]) +
                                 " repeats");
    if (phi.shape == GammaShape::Eta) return g.adjacent(tuple[0], tuple[1]);

    int t = phi.t;
    // Position p (0-based) must be a non-neighbor of the witness exactly when
    // the shape says so.
    auto wants_edge = [&](size_t p) {
        switch (phi.shape) {
            case GammaShape::Chi: return int(p) < t;
            case GammaShape::ChiStar: return int(p) >= t;
            case GammaShape::Theta: return int(p) != t;
            case GammaShape::Delta: return p != 0;
            case GammaShape::DeltaStar: return int(p) != 2 * t;
            case GammaShape::Eta: break;
        }
        return false;
    };
    for (int y = 1; y <= g.vertex_count(); ++y) {
        bool used = false;
        for (int v : tuple) used |= (v == y);
        if (used) continue;
        bool ok = true;
        for (size_t p = 0; p < tuple.size() && ok; ++p)
            ok = (g.adjacent(y, tuple[p]) == wants_edge(p));
        if (ok) return true;
    }
    return false;
}

namespace {

// Enumerates increasing index tuples of the given arity.
struct TupleEnum {
    int n, arity;
    std::vector<int> idx;
    bool first = true;

    TupleEnum(int n_, int arity_) : n(n_), arity(arity_), idx(arity_) {
        std::iota(idx.begin(), idx.end(), 0);
    }
    bool next() {
        if (first) {
            first = false;
            return arity <= n;
        }
        int i = arity - 1;
        while (i >= 0 && idx[i] == n - arity + i) --i;
        if (i < 0) return false;
        ++idx[i];
        for (int j = i + 1; j < arity; ++j) idx[j] = idx[j - 1] + 1;
        return true;
    }
};

}  // namespace

IndiscernibleResult is_indiscernible(const Graph& g, const std::vector<int>& seq,
                                     const std::vector<GammaFormula>& formulas,
                                     uint64_t max_checks) {
    for (size_t i = 0; i < seq.size(); ++i)
        for (size_t j = i + 1; j < seq.size(); ++j)
            if (seq[i] == seq[j])
                throw InputError("sequence entries must be distinct");
    uint64_t checks = 0;
    for (const GammaFormula& phi : formulas) {
        int arity = phi.arity();
        if (int(seq.size()) < arity) continue;  // no tuples to distinguish
        TupleEnum en(int(seq.size()), arity);
        bool have_ref = false, ref_value = false;
        std::vector<int> ref_tuple;
        while (en.next()) {
            if (++checks > max_checks) throw BudgetExceeded("indiscernibility check budget");
            std::vector<int> tuple(arity);
            for (int p = 0; p < arity; ++p) tuple[p] = seq[en.idx[p]];
            bool val = eval_formula(g, phi, tuple);
            if (!have_ref) {
                have_ref = true;
                ref_value = val;
                ref_tuple = tuple;
            } else if (val != ref_value) {
                return {false, phi, ref_tuple, tuple};
            }
        }
    }
    return {true, std::nullopt, {}, {}};
}

HomogeneityCheck verify_homogeneous_set(const Graph& g, int t, const std::vector<int>& s) {
    if (t < 1) throw InputError("verify_homogeneous_set needs t >= 1");
    for (int v : s)
        if (v < 1 || v > g.vertex_count())
            return {false, v, "member " + std::to_string(v) + " out of range"};
    Bitset members = Bitset::of(g.vertex_count() + 1, s);
    if (members.count() != int(s.size())) return {false, 0, "repeated members"};
    // Condition 1.
    bool all_edges = true, no_edges = true;
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j) {
            if (g.adjacent(s[i], s[j]))
                no_edges = false;
            else
                all_edges = false;
        }
    if (!all_edges && !no_edges)
        return {false, s.empty() ? 0 : s[0], "set is neither a clique nor independent"};
    // Condition 2: one neighbor-count pass per outside vertex.
    int size = int(s.size());
    for (int w = 1; w <= g.vertex_count(); ++w) {
        if (members.test(w)) continue;
        int counter = g.neighbors(w).count_and(members);
        if (counter >= 2 * t && counter != size)
            return {false, w,
                    "outside vertex " + std::to_string(w) + " has " + std::to_string(counter) +
                        " >= " + std::to_string(2 * t) + " neighbors without covering the set"};
    }
    return {true, 0, ""};
}

namespace {

std::optional<HomogeneousSet> accept_candidate(const Graph& g, int t, std::vector<int> cand,
                                               uint64_t& budget) {
    if (budget == 0) return std::nullopt;
    --budget;
    if (!verify_homogeneous_set(g, t, cand).ok) return std::nullopt;
    HomogeneousSet hs;
    std::sort(cand.begin(), cand.end());
    hs.clique = cand.size() >= 2 && g.adjacent(cand[0], cand[1]);
    hs.members = std::move(cand);
    hs.t = t;
    return hs;
}

}  // namespace

std::optional<HomogeneousSet> find_homogeneous_set(const Graph& g, int t, int L,
                                                   uint64_t budget) {
    if (L < 1) throw InputError("find_homogeneous_set needs L >= 1");
    if (t < 1) throw InputError("find_homogeneous_set needs t >= 1");
    int n = g.vertex_count();
    if (n < L) return std::nullopt;

    // (i) Twin classes: any L members of a class of size >= L work, since
    // every outside vertex sees all of a twin class or none of it.
    for (const auto& cls : twin_classes(g).classes) {
        if (int(cls.size()) < L) continue;
        std::vector<int> cand(cls.begin(), cls.begin() + L);
        if (auto hs = accept_candidate(g, t, std::move(cand), budget)) return hs;
        if (budget == 0) return std::nullopt;
    }

    // Degree-then-label order drives the greedy and exhaustive stages.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 1);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) < g.degree(b); });

    // (ii) Greedy growth of an independent set / clique from each seed.
    for (bool want_clique : {false, true}) {
        for (int seed : order) {
            std::vector<int> cand{seed};
            for (int v : order) {
                if (int(cand.size()) == L) break;
                if (v == seed) continue;
                bool fits = true;
                for (int u : cand)
                    if (g.adjacent(u, v) != want_clique) fits = false;
                if (fits) cand.push_back(v);
            }
            if (int(cand.size()) < L) continue;
            if (auto hs = accept_candidate(g, t, std::move(cand), budget)) return hs;
            if (budget == 0) return std::nullopt;
        }
    }

    // (iii) Bounded exhaustive sweep over a small low-degree pool.
    int pool_size = std::min(n, L + 8);
    std::vector<int> pool(order.begin(), order.begin() + pool_size);
    std::sort(pool.begin(), pool.end());
    std::vector<int> pick;
    std::optional<HomogeneousSet> found;
    auto sweep = [&](auto&& self, size_t from) -> bool {
        if (budget == 0) return true;  // stop the recursion, not a find
        if (int(pick.size()) == L) {
            found = accept_candidate(g, t, pick, budget);
            return found.has_value();
        }
        for (size_t i = from; i < pool.size(); ++i) {
            if (int(pool.size() - i) < L - int(pick.size())) break;
            pick.push_back(pool[i]);
            bool homogeneous = true;
            if (pick.size() >= 2) {
                bool want = g.adjacent(pick[0], pick[1]);
                for (size_t a = 0; a + 1 < pick.size() && homogeneous; ++a)
                    homogeneous = g.adjacent(pick[a], pick.back()) == want;
            }
            if (homogeneous && self(self, i + 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    sweep(sweep, 0);
    return found;
}

std::string KernelState::dump() const {
    std::ostringstream out;
    out << "kernel n=" << residual.vertex_count() << " deleted=";
    for (size_t i = 0; i < deletions.size(); ++i) out << (i ? "," : "") << deletions[i];
    out << " early=" << (early_answer ? "yes" : "none");
    return out.str();
}

KernelState kernel_reduce(const Graph& g, int k, int t, int threshold, uint64_t budget) {
    if (k < 1 || t < 1) throw InputError("kernel_reduce needs k, t >= 1");
    int K = (k - 1) * (2 * t - 1) + 2;
    KernelState state;
    state.k = k;
    state.t = t;
    std::vector<int> alive(g.vertex_count());
    std::iota(alive.begin(), alive.end(), 1);
    Graph current = g;
    std::vector<int> labels = alive;  // current index -> original label
    while (current.vertex_count() >= threshold) {
        auto hs = find_homogeneous_set(current, t, K, budget);
        if (!hs) break;
        if (!hs->clique) {
            std::vector<int> yes;
            for (int i = 0; i < k; ++i) yes.push_back(labels[hs->members[i] - 1]);
            std::sort(yes.begin(), yes.end());
            state.early_answer = std::move(yes);
            break;
        }
        // Delete the clique member with the smallest original label.
        int victim = hs->members[0];
        for (int m : hs->members)
            if (labels[m - 1] < labels[victim - 1]) victim = m;
        state.deletions.push_back(labels[victim - 1]);
        std::vector<int> keep;
        for (int v = 1; v <= current.vertex_count(); ++v)
            if (v != victim) keep.push_back(v);
        InducedSubgraph sub = induced_subgraph(current, keep);
        std::vector<int> new_labels;
        for (int v : sub.labels) new_labels.push_back(labels[v - 1]);
        current = std::move(sub.graph);
        labels = std::move(new_labels);
    }
    state.residual = std::move(current);
    state.residual_labels = std::move(labels);
    return state;
}

FptResult fpt_independent_set(const Graph& g, int k, int t, int threshold, uint64_t budget,
                              const SolveOptions& opts) {
    FptResult res;
    res.kernel = kernel_reduce(g, k, t, threshold, budget);
    if (res.kernel.early_answer) {
        res.yes = true;
        res.witness = *res.kernel.early_answer;
    } else {
        std::vector<int> best = max_independent_set(res.kernel.residual, opts);
        if (int(best.size()) >= k) {
            res.yes = true;
            for (int i = 0; i < k; ++i)
                res.witness.push_back(res.kernel.residual_labels[best[i] - 1]);
            std::sort(res.witness.begin(), res.witness.end());
        } else {
            res.yes = false;
        }
    }
    if (res.yes) {
        for (size_t a = 0; a < res.witness.size(); ++a)
            for (size_t b = a + 1; b < res.witness.size(); ++b)
                if (g.adjacent(res.witness[a], res.witness[b]))
                    throw InvariantViolation("fpt witness is not independent in the input");
    }
    return res;
}

}  // namespace sip
