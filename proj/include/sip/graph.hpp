#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "sip/bitset.hpp"

namespace sip {

// Undirected simple graph on vertices 1..n. Immutable after construction by
// convention: builders add edges, algorithms only read.
class Graph {
public:
    Graph() : Graph(0) {}
    explicit Graph(int n);

    int vertex_count() const { return n_; }
    long long edge_count() const { return m_; }

    void add_edge(int u, int v);  // throws InputError on self-loop / range
    bool adjacent(int u, int v) const { return adj_[u].test(v); }
    const Bitset& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }

    // All vertices as a bitset (bits 1..n).
    Bitset full_set() const;

    // Edges with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& o) const;

private:
    int n_;
    long long m_ = 0;
    std::vector<Bitset> adj_;
};

// ---- edge-list text format -------------------------------------------------
//
//   c <free-form comment>
//   p edge <n> <m>
//   e <u> <v>            (m lines, 1 <= u,v <= n, u != v)
//
// Duplicate e-lines collapse to one edge; self-loops are errors. Comments are
// allowed anywhere and are ignored by the parser.

Graph parse_graph(std::istream& in);
Graph parse_graph(const std::string& text);

// Canonical form: comment lines first, then header, then edges with the
// smaller endpoint first, sorted. Output re-parses to an equal graph.
std::string serialize_graph(const Graph& g, const std::vector<std::string>& comments = {});

// ---- elementary transforms ---------------------------------------------------

Graph complement(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> labels;  // labels[v] = original label of new vertex v (1-based)
};
// Keeps the members of s in ascending label order. Throws on out-of-range members.
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& s);
InducedSubgraph induced_subgraph(const Graph& g, const Bitset& s);

// Maximal connected blocks, each sorted, ordered by minimum element.
std::vector<std::vector<int>> connected_components(const Graph& g);
// Components restricted to a vertex subset.
std::vector<Bitset> connected_components_within(const Graph& g, const Bitset& live);

// ---- twins -------------------------------------------------------------------

struct TwinPartition {
    std::vector<std::vector<int>> classes;  // blocks sorted, ordered by min element
    int diversity() const { return int(classes.size()); }
};

// u, v are twins iff N(u) \ {v} = N(v) \ {u}. Blocks are the equivalence
// classes; each induces a clique or an independent set.
TwinPartition twin_classes(const Graph& g);
bool are_twins(const Graph& g, int u, int v);

}  // namespace sip
