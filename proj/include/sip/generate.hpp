#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sip/graph.hpp"

namespace sip {

// Fixed, documented PRNG so generated instances are reproducible across
// implementations: Steele/Lea/Vigna splitmix64.
struct SplitMix64 {
    uint64_t state;
    explicit SplitMix64(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // Uniform in [0,1), 53-bit mantissa.
    double next_double() { return double(next() >> 11) * 0x1.0p-53; }
    // Uniform in [0, m).
    uint64_t next_below(uint64_t m) {
        return uint64_t((__uint128_t(next()) * m) >> 64);
    }
};

struct RoleLabel {
    int vertex;
    char side;  // 'a' or 'b'
    int index;  // 1..t
};

struct GeneratedGraph {
    Graph graph;
    std::vector<RoleLabel> roles;  // nonempty only for the bipartite pattern families
};

// Pattern families on 2t vertices: a_1..a_t are 1..t, b_1..b_t are t+1..2t.
GeneratedGraph make_matching(int t);    // a_i b_j edge iff i = j
GeneratedGraph make_comatching(int t);  // a_i b_j edge iff i != j
GeneratedGraph make_halfgraph(int t);   // a_i b_j edge iff i <= j

GeneratedGraph make_path(int n);
GeneratedGraph make_cycle(int n);
GeneratedGraph make_clique(int n);

// Each pair u < v (lexicographic order) becomes an edge iff the next PRNG
// double is < p.
GeneratedGraph make_gnp(int n, double p, uint64_t seed);

// n unit squares with centers drawn uniformly from [0, side]^2 (x then y per
// vertex, in label order). Two squares are adjacent iff both coordinate
// distances are strictly below 1.
GeneratedGraph make_unit_squares(int n, double side, uint64_t seed);

// Dispatcher for the CLI: family plus raw parameter strings.
// Families: halfgraph t | matching t | comatching t | path t | cycle n |
//           clique n | gnp n p | unit-squares n side
GeneratedGraph generate(const std::string& family, const std::vector<std::string>& params,
                        uint64_t seed);

}  // namespace sip
