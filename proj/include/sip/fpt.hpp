#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sip/graph.hpp"
#include "sip/oracles.hpp"

namespace sip {

// The six adjacency-pattern formulas used for indiscernibility. eta is the
// plain edge test; the other five assert a witness vertex y, distinct from
// the whole tuple, realizing a fixed adjacency pattern toward it:
//   chi        (arity 2t):   y ~ x_1..x_t,      y !~ x_{t+1}..x_{2t}
//   chi_star   (arity 2t):   y !~ x_1..x_t,     y ~ x_{t+1}..x_{2t}
//   theta      (arity 2t+1): y ~ all except x_{t+1}
//   delta      (arity 2t+1): y ~ all except x_1
//   delta_star (arity 2t+1): y ~ all except x_{2t+1}
enum class GammaShape { Eta, Chi, ChiStar, Theta, Delta, DeltaStar };

struct GammaFormula {
    GammaShape shape;
    int t;
    int arity() const;
    std::string name() const;
};

// The full family {eta, chi, chi_star, theta, delta, delta_star} at level t.
std::vector<GammaFormula> gamma_family(int t);

// Truth by direct semantics; throws InputError on arity mismatch or repeated
// tuple entries.
bool eval_formula(const Graph& g, const GammaFormula& phi, const std::vector<int>& tuple);

struct IndiscernibleResult {
    bool indiscernible;
    // On failure: the formula and two increasing tuples it distinguishes.
    std::optional<GammaFormula> formula;
    std::vector<int> tuple_a, tuple_b;
};

// Checks that every formula is constant over all increasing tuples drawn
// from seq. max_checks bounds the number of formula evaluations.
IndiscernibleResult is_indiscernible(const Graph& g, const std::vector<int>& seq,
                                     const std::vector<GammaFormula>& formulas,
                                     uint64_t max_checks = 100'000'000);

struct HomogeneousSet {
    std::vector<int> members;  // sorted, size L
    bool clique = false;       // otherwise independent
    int t = 0;                 // the parameter certifying the outside condition
};

struct HomogeneityCheck {
    bool ok;
    int violator = 0;  // offending outside vertex, or an inside vertex for condition 1
    std::string reason;
};

// Condition 1: s induces a clique or an independent set. Condition 2: every
// outside w has fewer than 2t neighbors in s or contains s in its
// neighborhood. One counter pass per outside vertex.
HomogeneityCheck verify_homogeneous_set(const Graph& g, int t, const std::vector<int>& s);

// Search for a verified homogeneous set of size exactly L: twin classes
// first, then greedy degree-ordered growth, then a bounded exhaustive sweep
// over a small candidate pool. budget caps the number of candidate sets
// verified; exhausting it yields nullopt ("not found" is a value).
std::optional<HomogeneousSet> find_homogeneous_set(const Graph& g, int t, int L,
                                                   uint64_t budget = 10'000);

struct KernelState {
    Graph residual;                   // current graph, relabeled 1..|alive|
    std::vector<int> residual_labels; // original label of each residual vertex
    int k = 0;
    int t = 0;
    std::vector<int> deletions;       // original labels, in deletion order
    std::optional<std::vector<int>> early_answer;  // size-k independent set, original labels

    std::string dump() const;  // kernel n=<residual> deleted=<list> early=<yes|none>
};

// While the graph has at least `threshold` vertices, look for a homogeneous
// set of size K = (k-1)(2t-1) + 2. An independent one contains k pairwise
// non-adjacent undeleted vertices: answer yes early. A clique one loses its
// minimum-label member, which preserves the answer. Stops when the search
// comes back empty.
KernelState kernel_reduce(const Graph& g, int k, int t, int threshold = 64,
                          uint64_t budget = 10'000);

struct FptResult {
    bool yes;
    std::vector<int> witness;  // size k in the original graph when yes
    KernelState kernel;
};

// kernel_reduce followed by the exact solver on the residual graph. Correct
// for every input; the index bounds only affect how much the kernel shrinks.
FptResult fpt_independent_set(const Graph& g, int k, int t, int threshold = 64,
                              uint64_t budget = 10'000, const SolveOptions& opts = {});

}  // namespace sip
