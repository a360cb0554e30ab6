#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sip/graph.hpp"
#include "sip/witness.hpp"

namespace sip {

// f(1, t) = 0, f(k, t) = (t-1)(f(k-1, t) + 1); always below t^k.
// Exact integer arithmetic; throws std::overflow_error when it leaves uint64.
uint64_t f_colors(int k, int t);
// g(k, t, l) = (l-1)(f(k-1, t) + 1); g(k, t, t) = f(k, t).
uint64_t g_colors(int k, int t, int l);

// Saturating check base^exp >= target.
bool pow_at_least(uint64_t base, uint64_t exp, uint64_t target);

struct GyarfasOutcome {
    enum class Kind { Clique, Path, Coloring } kind;
    std::vector<int> clique;          // size exactly k
    std::vector<int> path;            // induced, length exactly t
    std::vector<uint64_t> colors;     // colors[v] for v = 1..n, 0 where unassigned
    uint64_t color_count = 0;         // distinct colors used
};

// Trichotomy driver: an induced K_k, an induced P_t, or a proper coloring
// with at most f(k, t) colors (color ids are never compacted; the distinct
// count is reported separately). All "arbitrary" picks resolve to the
// minimum label, so results are deterministic.
GyarfasOutcome gyarfas(const Graph& g, int k, int t);

// The recursive subroutine, exposed with its full contract: on a connected
// graph it returns a P_t, a K_k, a proper coloring with at most g(k, t, l)
// colors, or an induced P_l starting at v.
struct SubOutcome {
    bool is_endpoint_path;          // the P_l-with-endpoint variant
    std::vector<int> endpoint_path; // starts at v, length exactly l
    GyarfasOutcome outcome;         // otherwise
};
SubOutcome gyarfas_sub(const Graph& g, int k, int t, int v, int l);

// Converts a coloring outcome to a witness; throws if a color id exceeds the
// int range of the witness text format.
Witness to_coloring_witness(const GyarfasOutcome& o);

// Raised when the trichotomy finds an induced path that contradicts a
// caller-supplied pattern-index bound; the path is the certificate.
struct IndexBoundError : std::runtime_error {
    std::vector<int> certificate_path;
    IndexBoundError(const std::string& msg, std::vector<int> path)
        : std::runtime_error(msg), certificate_path(std::move(path)) {}
};

// Clique of size s with (2m+2)^(s+2) >= clique number, provided the matching
// index of g is at most m. Binary search over k' with a linear fallback scan
// if the observed outcomes are not monotone (logged to diag when given).
std::vector<int> approx_clique(const Graph& g, int m, std::ostream* diag = nullptr);

// approx_clique on the complement: independent set of size s with
// (2m+2)^(s+2) >= independence number when the co-matching index is <= m.
std::vector<int> approx_is_comatching(const Graph& g, int m, std::ostream* diag = nullptr);

}  // namespace sip
