#include "sip/oracles.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

#include "sip/errors.hpp"

namespace sip {

namespace {

struct NodeCounter {
    uint64_t nodes = 0;
    uint64_t budget;
    explicit NodeCounter(uint64_t b) : budget(b) {}
    void tick() {
        if (++nodes > budget) throw BudgetExceeded("search node budget exceeded");
    }
};

// Branch and bound for maximum independent set. Upper bound: size of a
// greedy clique cover of the live vertices. Branching: max-degree vertex,
// include branch first. Only strict improvements are recorded, so the engine
// can stop early once `stop_at` is reached (decision mode).
class MisEngine {
public:
    MisEngine(const Graph& g, NodeCounter& counter) : g_(g), counter_(counter) {}

    int alpha(const Bitset& live, int stop_at) {
        best_ = 0;
        stop_ = stop_at;
        rec(live, 0);
        return best_;
    }

private:
    // Greedy clique cover of live; alpha(live) never exceeds the number of
    // cliques. A cover of singletons only arises on edgeless remainders.
    int cover_bound(const Bitset& live, bool& edgeless) {
        Bitset left = live;
        int cliques = 0;
        edgeless = true;
        for (int u = left.find_first(); u != -1; u = left.find_first()) {
            left.reset(u);
            ++cliques;
            Bitset ext = left & g_.neighbors(u);
            int w = ext.find_first();
            if (w != -1) edgeless = false;
            while (w != -1) {
                left.reset(w);
                ext &= g_.neighbors(w);
                ext.reset(w);
                w = ext.find_first();
            }
        }
        return cliques;
    }

    void rec(const Bitset& live, int cur) {
        counter_.tick();
        if (best_ >= stop_) return;
        bool edgeless = false;
        int bound = cover_bound(live, edgeless);
        if (cur + bound <= best_) return;
        if (edgeless) {
            best_ = cur + bound;
            return;
        }
        int pick = -1, pick_deg = -1;
        for (int v = live.find_first(); v != -1; v = live.find_next(v)) {
            int d = g_.neighbors(v).count_and(live);
            if (d > pick_deg) {
                pick_deg = d;
                pick = v;
            }
        }
        Bitset with = live;
        with.reset(pick);
        with.andnot(g_.neighbors(pick));
        rec(with, cur + 1);
        Bitset without = live;
        without.reset(pick);
        rec(without, cur);
    }

    const Graph& g_;
    NodeCounter& counter_;
    int best_ = 0;
    int stop_ = INT_MAX;
};

// Lexicographically smallest independent set of size `target` inside cand.
std::vector<int> lexmin_is(const Graph& g, MisEngine& eng, Bitset cand, int target) {
    std::vector<int> chosen;
    int remaining = target;
    for (int v = cand.find_first(); v != -1 && remaining > 0; v = cand.find_next(v)) {
        Bitset rest = cand;
        rest.reset(v);
        rest.andnot(g.neighbors(v));
        if (eng.alpha(rest, remaining - 1) >= remaining - 1) {
            chosen.push_back(v);
            cand = rest;
            --remaining;
            v = 0;  // restart scan from the top of the shrunken candidate set
        } else {
            cand.reset(v);
        }
    }
    if (remaining != 0) throw InvariantViolation("lex-min extraction lost the optimum");
    return chosen;
}

}  // namespace

std::vector<int> max_independent_set(const Graph& g, const SolveOptions& opts) {
    if (g.vertex_count() == 0) return {};
    NodeCounter counter(opts.node_budget);
    MisEngine eng(g, counter);
    Bitset all = g.full_set();
    int target = eng.alpha(all, INT_MAX);
    return lexmin_is(g, eng, all, target);
}

std::vector<int> max_clique(const Graph& g, const SolveOptions& opts) {
    return max_independent_set(complement(g), opts);
}

bool has_independent_set(const Graph& g, int k, const SolveOptions& opts) {
    if (k <= 0) return true;
    if (k > g.vertex_count()) return false;
    NodeCounter counter(opts.node_budget);
    MisEngine eng(g, counter);
    return eng.alpha(g.full_set(), k) >= k;
}

namespace {

class DsEngine {
public:
    DsEngine(const Graph& g, NodeCounter& counter) : g_(g), counter_(counter) {
        all_ = g.full_set();
    }

    // Is there a dominating set D with forced <= D <= forced + allowed and
    // |D| <= |forced| + extra? On success `solution` holds the extension.
    bool exists(const Bitset& forced, const Bitset& allowed, int extra) {
        Bitset dominated(g_.vertex_count() + 1);
        for (int v = forced.find_first(); v != -1; v = forced.find_next(v)) {
            dominated.set(v);
            dominated |= g_.neighbors(v);
        }
        solution.clear();
        return rec(dominated, allowed, extra);
    }

    std::vector<int> solution;

private:
    bool rec(const Bitset& dominated, const Bitset& allowed, int extra) {
        counter_.tick();
        Bitset missing = all_;
        missing.andnot(dominated);
        int miss = missing.count();
        if (miss == 0) return true;
        if (extra == 0) return false;
        // Most-constrained undominated vertex, plus a coverage bound.
        int pick = -1, pick_opts = INT_MAX, max_cover = 0;
        for (int u = missing.find_first(); u != -1; u = missing.find_next(u)) {
            Bitset cands = g_.neighbors(u) & allowed;
            if (allowed.test(u)) cands.set(u);
            int c = cands.count();
            if (c == 0) return false;
            if (c < pick_opts) {
                pick_opts = c;
                pick = u;
            }
        }
        for (int a = allowed.find_first(); a != -1; a = allowed.find_next(a)) {
            int cover = g_.neighbors(a).count_and(missing) + (missing.test(a) ? 1 : 0);
            max_cover = std::max(max_cover, cover);
        }
        if (uint64_t(max_cover) * uint64_t(extra) < uint64_t(miss)) return false;
        Bitset cands = g_.neighbors(pick) & allowed;
        if (allowed.test(pick)) cands.set(pick);
        for (int c = cands.find_first(); c != -1; c = cands.find_next(c)) {
            Bitset dom2 = dominated;
            dom2.set(c);
            dom2 |= g_.neighbors(c);
            Bitset allowed2 = allowed;
            allowed2.reset(c);
            solution.push_back(c);
            if (rec(dom2, allowed2, extra - 1)) return true;
            solution.pop_back();
        }
        return false;
    }

    const Graph& g_;
    NodeCounter& counter_;
    Bitset all_;
};

}  // namespace

std::vector<int> min_dominating_set(const Graph& g, const SolveOptions& opts) {
    int n = g.vertex_count();
    if (n == 0) return {};
    NodeCounter counter(opts.node_budget);
    DsEngine eng(g, counter);
    Bitset none(n + 1);
    Bitset all = g.full_set();
    int sigma = -1;
    for (int s = 0; s <= n; ++s) {
        if (eng.exists(none, all, s)) {
            sigma = s;
            break;
        }
    }
    if (sigma < 0) throw InvariantViolation("no dominating set found");
    // Lex-min extraction: fix the smallest vertex consistent with size sigma.
    Bitset forced(n + 1);
    std::vector<int> chosen;
    for (int v = 1; v <= n && int(chosen.size()) < sigma; ++v) {
        if (forced.test(v)) continue;
        Bitset f2 = forced;
        f2.set(v);
        Bitset allowed(n + 1);
        for (int w = v + 1; w <= n; ++w) allowed.set(w);
        if (eng.exists(f2, allowed, sigma - int(chosen.size()) - 1)) {
            forced = f2;
            chosen.push_back(v);
        }
    }
    if (int(chosen.size()) != sigma)
        throw InvariantViolation("dominating-set lex-min extraction lost the optimum");
    return chosen;
}

bool has_dominating_set(const Graph& g, int k, const SolveOptions& opts) {
    int n = g.vertex_count();
    if (n == 0) return true;
    if (k < 0) return false;
    NodeCounter counter(opts.node_budget);
    DsEngine eng(g, counter);
    return eng.exists(Bitset(n + 1), g.full_set(), std::min(k, n));
}

void ColorClassPartition::validate(const Graph& g) const {
    int n = g.vertex_count();
    std::vector<int> owner(n + 1, 0);
    for (size_t i = 0; i < classes.size(); ++i) {
        if (classes[i].empty())
            throw InputError("class " + std::to_string(i + 1) + " is empty");
        for (int v : classes[i]) {
            if (v < 1 || v > n)
                throw InputError("class member " + std::to_string(v) + " out of range");
            if (owner[v] != 0)
                throw InputError("vertex " + std::to_string(v) + " appears in classes " +
                                 std::to_string(owner[v]) + " and " + std::to_string(i + 1));
            owner[v] = int(i) + 1;
        }
    }
    for (int v = 1; v <= n; ++v)
        if (owner[v] == 0)
            throw InputError("vertex " + std::to_string(v) + " is in no class");
}

int ColorClassPartition::class_of(int v) const {
    for (size_t i = 0; i < classes.size(); ++i)
        for (int u : classes[i])
            if (u == v) return int(i) + 1;
    return 0;
}

namespace {

class McisEngine {
public:
    McisEngine(const Graph& g, const ColorClassPartition& p, NodeCounter& counter)
        : g_(g), p_(p), counter_(counter) {}

    // picks[i] == 0 means class i+1 is free. Free classes draw candidates
    // with label > min_label only.
    bool exists(std::vector<int> picks, int min_label) {
        int n = g_.vertex_count();
        std::vector<Bitset> cands(p_.classes.size());
        Bitset excluded(n + 1);
        for (int v : picks)
            if (v != 0) excluded |= g_.neighbors(v);
        for (size_t i = 0; i < p_.classes.size(); ++i) {
            cands[i] = Bitset(n + 1);
            if (picks[i] != 0) continue;
            for (int v : p_.classes[i])
                if (v > min_label && !excluded.test(v)) cands[i].set(v);
        }
        solution = picks;
        return rec(cands, 0);
    }

    std::vector<int> solution;

private:
    bool rec(const std::vector<Bitset>& cands, size_t from) {
        counter_.tick();
        while (from < solution.size() && solution[from] != 0) ++from;
        if (from == solution.size()) return true;
        // Forward check: every free class must keep a candidate.
        for (size_t i = from; i < solution.size(); ++i)
            if (solution[i] == 0 && cands[i].none()) return false;
        for (int v = cands[from].find_first(); v != -1; v = cands[from].find_next(v)) {
            solution[from] = v;
            std::vector<Bitset> next = cands;
            for (size_t i = 0; i < next.size(); ++i)
                if (i != from) next[i].andnot(g_.neighbors(v));
            if (rec(next, from + 1)) return true;
        }
        solution[from] = 0;
        return false;
    }

    const Graph& g_;
    const ColorClassPartition& p_;
    NodeCounter& counter_;
};

}  // namespace

std::optional<std::vector<int>> multicolored_independent_set(const Graph& g,
                                                             const ColorClassPartition& p,
                                                             const SolveOptions& opts) {
    p.validate(g);
    NodeCounter counter(opts.node_budget);
    McisEngine eng(g, p, counter);
    int k = p.k();
    std::vector<int> free_picks(k, 0);
    if (!eng.exists(free_picks, 0)) return std::nullopt;
    // Lex-min extraction over the vertex set of the solution.
    std::vector<int> owner(g.vertex_count() + 1, 0);
    for (int i = 0; i < k; ++i)
        for (int v : p.classes[i]) owner[v] = i + 1;
    std::vector<int> picks(k, 0);
    int fixed = 0;
    for (int v = 1; v <= g.vertex_count() && fixed < k; ++v) {
        int cls = owner[v];
        if (cls == 0 || picks[cls - 1] != 0) continue;
        std::vector<int> attempt = picks;
        attempt[cls - 1] = v;
        bool compatible = true;
        for (int u : attempt)
            if (u != 0 && u != v && g.adjacent(u, v)) compatible = false;
        if (compatible && eng.exists(attempt, v)) {
            picks = attempt;
            ++fixed;
        }
    }
    if (fixed != k) throw InvariantViolation("multicolored lex-min extraction lost a solution");
    std::sort(picks.begin(), picks.end());
    return picks;
}

ColorClassPartition parse_partition(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    int k = -1;
    ColorClassPartition p;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ss(line);
        std::string tag;
        if (!(ss >> tag)) continue;
        if (tag == "c") continue;
        if (tag == "colors") {
            if (k >= 0) throw ParseError(line_no, "duplicate 'colors' header");
            if (!(ss >> k) || k < 1) throw ParseError(line_no, "expected 'colors <k>' with k >= 1");
            p.classes.assign(k, {});
            continue;
        }
        if (tag == "class") {
            if (k < 0) throw ParseError(line_no, "'class' line before 'colors' header");
            int idx;
            std::string colon;
            if (!(ss >> idx >> colon) || colon != ":")
                throw ParseError(line_no, "expected 'class <i> : v1 v2 ...'");
            if (idx < 1 || idx > k)
                throw ParseError(line_no, "class index out of 1.." + std::to_string(k));
            if (!p.classes[idx - 1].empty())
                throw ParseError(line_no, "class " + std::to_string(idx) + " defined twice");
            int v;
            while (ss >> v) p.classes[idx - 1].push_back(v);
            if (p.classes[idx - 1].empty())
                throw ParseError(line_no, "class " + std::to_string(idx) + " is empty");
            std::sort(p.classes[idx - 1].begin(), p.classes[idx - 1].end());
            continue;
        }
        throw ParseError(line_no, "unknown line type '" + tag + "'");
    }
    if (k < 0) throw ParseError(line_no + 1, "missing 'colors' header");
    for (int i = 0; i < k; ++i)
        if (p.classes[i].empty())
            throw ParseError(line_no + 1, "class " + std::to_string(i + 1) + " never defined");
    return p;
}

std::string serialize_partition(const ColorClassPartition& p) {
    std::ostringstream out;
    out << "colors " << p.k() << "\n";
    for (int i = 0; i < p.k(); ++i) {
        out << "class " << i + 1 << " :";
        for (int v : p.classes[i]) out << " " << v;
        out << "\n";
    }
    return out.str();
}

}  // namespace sip
