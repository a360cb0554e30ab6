#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sip/graph.hpp"

namespace sip {

enum class PatternKind { Matching, CoMatching, HalfGraph };

const char* pattern_kind_name(PatternKind k);
std::optional<PatternKind> pattern_kind_from_name(const std::string& name);

// An ordered pair of disjoint vertex tuples realizing a bipartite pattern
// between them: a_i b_j is an edge iff the kind's predicate holds on (i, j).
// Matching: i = j.  CoMatching: i != j.  HalfGraph: i <= j.
struct PatternWitness {
    PatternKind kind;
    std::vector<int> a_side;
    std::vector<int> b_side;
    int order() const { return int(a_side.size()); }
};

bool pattern_edge_required(PatternKind kind, int i, int j);

// Re-checks the witness invariants (distinctness plus the full predicate
// matrix) directly against g, independently of any search.
struct PatternCheck {
    bool ok;
    std::string reason;
};
PatternCheck verify_pattern_witness(const Graph& g, const PatternWitness& w);

// Exhaustive backtracking search for a semi-induced pattern of order exactly
// h. Absence is a certificate. Deterministic: pairs are placed interleaved
// (a_1, b_1, a_2, b_2, ...), candidates in ascending label order.
std::optional<PatternWitness> find_semi_induced(const Graph& g, PatternKind kind, int h);

// Exact index value, or ">= cap" when a witness of order cap exists.
struct IndexValue {
    int value;
    bool at_least;  // true: witness of order `value` == cap exists, search stopped
    std::optional<PatternWitness> witness;  // present when value >= 1
    std::string to_string() const;
};
IndexValue pattern_index(const Graph& g, PatternKind kind, int cap);

struct IndexReport {
    IndexValue matching;
    IndexValue comatching;
    IndexValue halfgraph;
    int neighborhood_diversity;
};
IndexReport index_report(const Graph& g, int cap);

// Injective map from pattern vertices to g preserving edges and non-edges.
// out[i] (0-based over pattern vertices 1..p) is the image of pattern vertex
// i+1. Patterns are capped at 12 vertices.
std::optional<std::vector<int>> contains_induced(const Graph& g, const Graph& pattern);

// Text form: pattern <kind> <h> : a = v1 .. vh ; b = u1 .. uh
std::string pattern_witness_text(const PatternWitness& w);

}  // namespace sip
