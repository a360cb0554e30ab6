#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sip/graph.hpp"
#include "sip/pattern.hpp"

namespace sip {

enum class WitnessKind { IndependentSet, Clique, DominatingSet, Coloring, InducedPath, Pattern };

const char* witness_kind_name(WitnessKind k);  // is | clique | ds | coloring | path | pattern
std::optional<WitnessKind> witness_kind_from_name(const std::string& name);

struct Witness {
    WitnessKind kind;
    // IndependentSet / Clique / DominatingSet: sorted member list.
    // InducedPath: vertex sequence in path order.
    std::vector<int> vertices;
    // Coloring: colors[v] for v = 1..n (index 0 unused), all positive.
    std::vector<int> colors;
    int color_count = 0;  // distinct colors used
    std::optional<PatternWitness> pattern;

    static Witness set_of(WitnessKind kind, std::vector<int> members);
    static Witness path_of(std::vector<int> sequence);
    static Witness coloring_of(std::vector<int> colors);
    static Witness pattern_of(PatternWitness w);
};

struct VerifyResult {
    bool ok;
    std::string reason;  // empty on accept
};

// Referee for solver outputs. The optional target tightens the check:
// independent-set / clique / pattern order: size >= target;
// dominating-set: size <= target; coloring: distinct colors <= target;
// induced-path: length >= target.
VerifyResult verify_witness(const Graph& g, const Witness& w,
                            std::optional<int> target = std::nullopt);

// Text forms:
//   is <size> : v1 ... vk
//   clique <size> : v1 ... vk
//   ds <size> : v1 ... vk
//   path <t> : v1 ... vt
//   coloring <count> : c(1) ... c(n)
//   pattern <kind> <h> : a = v1 .. vh ; b = u1 .. uh
std::string witness_text(const Witness& w);
Witness parse_witness(const std::string& text);

}  // namespace sip
