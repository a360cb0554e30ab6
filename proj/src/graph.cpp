#include "sip/graph.hpp"

#include <algorithm>
#include <sstream>

#include "sip/errors.hpp"

namespace sip {

Graph::Graph(int n) : n_(n) {
    if (n < 0) throw InputError("negative vertex count");
    adj_.assign(n + 1, Bitset(n + 1));
}

void Graph::add_edge(int u, int v) {
    if (u < 1 || u > n_ || v < 1 || v > n_)
        throw InputError("vertex out of range 1.." + std::to_string(n_));
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    if (adj_[u].test(v)) return;  // duplicates collapse
    adj_[u].set(v);
    adj_[v].set(u);
    ++m_;
}

Bitset Graph::full_set() const {
    Bitset b(n_ + 1);
    for (int v = 1; v <= n_; ++v) b.set(v);
    return b;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(size_t(m_));
    for (int u = 1; u <= n_; ++u)
        for (int v = adj_[u].find_next(u); v != -1; v = adj_[u].find_next(v))
            out.emplace_back(u, v);
    return out;
}

bool Graph::operator==(const Graph& o) const {
    return n_ == o.n_ && m_ == o.m_ && adj_ == o.adj_;
}

namespace {

// One whitespace-separated line, already split; throws ParseError on misuse.
std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> toks;
    std::string t;
    while (ss >> t) toks.push_back(t);
    return toks;
}

int parse_int(const std::string& tok, int line_no, const char* what) {
    size_t pos = 0;
    long long val = 0;
    try {
        val = std::stoll(tok, &pos);
    } catch (...) {
        throw ParseError(line_no, std::string("expected ") + what + ", got '" + tok + "'");
    }
    if (pos != tok.size() || val < -1000000000LL || val > 1000000000LL)
        throw ParseError(line_no, std::string("expected ") + what + ", got '" + tok + "'");
    return int(val);
}

}  // namespace

Graph parse_graph(std::istream& in) {
    std::string line;
    int line_no = 0;
    bool have_header = false;
    int n = 0;
    long long m = 0, seen = 0;
    Graph g;
    while (std::getline(in, line)) {
        ++line_no;
        auto toks = tokens_of(line);
        if (toks.empty()) continue;
        if (toks[0] == "c") continue;
        if (toks[0] == "p") {
            if (have_header) throw ParseError(line_no, "duplicate 'p' header");
            if (toks.size() != 4 || toks[1] != "edge")
                throw ParseError(line_no, "malformed header, expected 'p edge <n> <m>'");
            n = parse_int(toks[2], line_no, "vertex count");
            m = parse_int(toks[3], line_no, "edge count");
            if (n < 1) throw ParseError(line_no, "vertex count must be positive");
            if (m < 0) throw ParseError(line_no, "edge count must be non-negative");
            g = Graph(n);
            have_header = true;
            continue;
        }
        if (toks[0] == "e") {
            if (!have_header) throw ParseError(line_no, "'e' line before 'p edge' header");
            if (toks.size() != 3) throw ParseError(line_no, "malformed edge, expected 'e <u> <v>'");
            int u = parse_int(toks[1], line_no, "vertex");
            int v = parse_int(toks[2], line_no, "vertex");
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError(line_no, "vertex index out of 1.." + std::to_string(n));
            if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
            ++seen;
            if (seen > m) throw ParseError(line_no, "more 'e' lines than the header announced");
            g.add_edge(u, v);
            continue;
        }
        throw ParseError(line_no, "unknown line type '" + toks[0] + "'");
    }
    if (!have_header) throw ParseError(line_no + 1, "missing 'p edge' header");
    if (seen != m)
        throw ParseError(line_no + 1, "edge count mismatch: header says " + std::to_string(m) +
                                          ", found " + std::to_string(seen));
    return g;
}

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

std::string serialize_graph(const Graph& g, const std::vector<std::string>& comments) {
    std::ostringstream out;
    for (const auto& c : comments) out << "c " << c << "\n";
    auto es = g.edges();
    out << "p edge " << g.vertex_count() << " " << es.size() << "\n";
    for (auto [u, v] : es) out << "e " << u << " " << v << "\n";
    return out.str();
}

Graph complement(const Graph& g) {
    int n = g.vertex_count();
    Graph c(n);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (!g.adjacent(u, v)) c.add_edge(u, v);
    return c;
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& s) {
    std::vector<int> labels = s;
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    for (int v : labels)
        if (v < 1 || v > g.vertex_count())
            throw InputError("subgraph member " + std::to_string(v) + " out of range");
    InducedSubgraph out;
    out.graph = Graph(int(labels.size()));
    out.labels = labels;
    for (size_t i = 0; i < labels.size(); ++i)
        for (size_t j = i + 1; j < labels.size(); ++j)
            if (g.adjacent(labels[i], labels[j])) out.graph.add_edge(int(i) + 1, int(j) + 1);
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const Bitset& s) {
    return induced_subgraph(g, s.to_vector());
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<std::vector<int>> out;
    for (const Bitset& comp : connected_components_within(g, g.full_set()))
        out.push_back(comp.to_vector());
    return out;
}

std::vector<Bitset> connected_components_within(const Graph& g, const Bitset& live) {
    std::vector<Bitset> out;
    Bitset todo = live;
    while (true) {
        int start = todo.find_first();
        if (start == -1) break;
        Bitset comp(g.vertex_count() + 1);
        std::vector<int> stack{start};
        comp.set(start);
        todo.reset(start);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            Bitset next = g.neighbors(v) & todo;
            for (int w = next.find_first(); w != -1; w = next.find_next(w)) {
                comp.set(w);
                todo.reset(w);
                stack.push_back(w);
            }
        }
        out.push_back(std::move(comp));
    }
    return out;
}

bool are_twins(const Graph& g, int u, int v) {
    Bitset nu = g.neighbors(u);
    Bitset nv = g.neighbors(v);
    nu.reset(v);
    nv.reset(u);
    return nu == nv;
}

TwinPartition twin_classes(const Graph& g) {
    TwinPartition p;
    int n = g.vertex_count();
    std::vector<int> reps;
    for (int v = 1; v <= n; ++v) {
        bool placed = false;
        for (size_t i = 0; i < reps.size(); ++i) {
            if (are_twins(g, reps[i], v)) {
                p.classes[i].push_back(v);
                placed = true;
                break;
            }
        }
        if (!placed) {
            reps.push_back(v);
            p.classes.push_back({v});
        }
    }
    return p;
}

}  // namespace sip
