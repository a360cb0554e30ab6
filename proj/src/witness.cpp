#include "sip/witness.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "sip/errors.hpp"

namespace sip {

const char* witness_kind_name(WitnessKind k) {
    switch (k) {
        case WitnessKind::IndependentSet: return "is";
        case WitnessKind::Clique: return "clique";
        case WitnessKind::DominatingSet: return "ds";
        case WitnessKind::Coloring: return "coloring";
        case WitnessKind::InducedPath: return "path";
        case WitnessKind::Pattern: return "pattern";
    }
    return "?";
}

std::optional<WitnessKind> witness_kind_from_name(const std::string& name) {
    if (name == "is") return WitnessKind::IndependentSet;
    if (name == "clique") return WitnessKind::Clique;
    if (name == "ds") return WitnessKind::DominatingSet;
    if (name == "coloring") return WitnessKind::Coloring;
    if (name == "path") return WitnessKind::InducedPath;
    if (name == "pattern") return WitnessKind::Pattern;
    return std::nullopt;
}

Witness Witness::set_of(WitnessKind kind, std::vector<int> members) {
    std::sort(members.begin(), members.end());
    return Witness{kind, std::move(members), {}, 0, std::nullopt};
}
Witness Witness::path_of(std::vector<int> sequence) {
    return Witness{WitnessKind::InducedPath, std::move(sequence), {}, 0, std::nullopt};
}
Witness Witness::coloring_of(std::vector<int> colors) {
    std::set<int> distinct(colors.begin() + 1, colors.end());
    int count = int(distinct.size());
    return Witness{WitnessKind::Coloring, {}, std::move(colors), count, std::nullopt};
}
Witness Witness::pattern_of(PatternWitness w) {
    return Witness{WitnessKind::Pattern, {}, {}, 0, std::move(w)};
}

namespace {

VerifyResult reject(const std::string& reason) { return {false, reason}; }

VerifyResult check_members(const Graph& g, const std::vector<int>& vs) {
    std::set<int> seen;
    for (int v : vs) {
        if (v < 1 || v > g.vertex_count())
            return reject("vertex " + std::to_string(v) + " out of range");
        if (!seen.insert(v).second) return reject("vertex " + std::to_string(v) + " repeated");
    }
    return {true, ""};
}

}  // namespace

VerifyResult verify_witness(const Graph& g, const Witness& w, std::optional<int> target) {
    switch (w.kind) {
        case WitnessKind::IndependentSet: {
            if (auto r = check_members(g, w.vertices); !r.ok) return r;
            for (size_t i = 0; i < w.vertices.size(); ++i)
                for (size_t j = i + 1; j < w.vertices.size(); ++j)
                    if (g.adjacent(w.vertices[i], w.vertices[j]))
                        return reject("edge " + std::to_string(w.vertices[i]) + "-" +
                                      std::to_string(w.vertices[j]) + " inside the set");
            if (target && int(w.vertices.size()) < *target)
                return reject("size " + std::to_string(w.vertices.size()) + " below target " +
                              std::to_string(*target));
            return {true, ""};
        }
        case WitnessKind::Clique: {
            if (auto r = check_members(g, w.vertices); !r.ok) return r;
            for (size_t i = 0; i < w.vertices.size(); ++i)
                for (size_t j = i + 1; j < w.vertices.size(); ++j)
                    if (!g.adjacent(w.vertices[i], w.vertices[j]))
                        return reject("non-edge " + std::to_string(w.vertices[i]) + "-" +
                                      std::to_string(w.vertices[j]) + " inside the clique");
            if (target && int(w.vertices.size()) < *target)
                return reject("size " + std::to_string(w.vertices.size()) + " below target " +
                              std::to_string(*target));
            return {true, ""};
        }
        case WitnessKind::DominatingSet: {
            if (auto r = check_members(g, w.vertices); !r.ok) return r;
            Bitset covered(g.vertex_count() + 1);
            for (int v : w.vertices) {
                covered.set(v);
                covered |= g.neighbors(v);
            }
            for (int v = 1; v <= g.vertex_count(); ++v)
                if (!covered.test(v))
                    return reject("vertex " + std::to_string(v) + " not dominated");
            if (target && int(w.vertices.size()) > *target)
                return reject("size " + std::to_string(w.vertices.size()) + " above target " +
                              std::to_string(*target));
            return {true, ""};
        }
        case WitnessKind::Coloring: {
            if (int(w.colors.size()) != g.vertex_count() + 1)
                return reject("coloring must assign all " +
                              std::to_string(g.vertex_count()) + " vertices");
            for (int v = 1; v <= g.vertex_count(); ++v)
                if (w.colors[v] < 1) return reject("vertex " + std::to_string(v) + " uncolored");
            for (auto [u, v] : g.edges())
                if (w.colors[u] == w.colors[v])
                    return reject("edge " + std::to_string(u) + "-" + std::to_string(v) +
                                  " is monochromatic");
            if (target && w.color_count > *target)
                return reject("uses " + std::to_string(w.color_count) + " colors, above target " +
                              std::to_string(*target));
            return {true, ""};
        }
        case WitnessKind::InducedPath: {
            if (auto r = check_members(g, w.vertices); !r.ok) return r;
            if (w.vertices.empty()) return reject("empty path");
            for (size_t i = 0; i < w.vertices.size(); ++i)
                for (size_t j = i + 1; j < w.vertices.size(); ++j) {
                    bool want = (j == i + 1);
                    if (g.adjacent(w.vertices[i], w.vertices[j]) != want)
                        return reject((want ? "missing edge " : "chord ") +
                                      std::to_string(w.vertices[i]) + "-" +
                                      std::to_string(w.vertices[j]));
                }
            if (target && int(w.vertices.size()) < *target)
                return reject("length " + std::to_string(w.vertices.size()) +
                              " below target " + std::to_string(*target));
            return {true, ""};
        }
        case WitnessKind::Pattern: {
            if (!w.pattern) return reject("pattern witness missing payload");
            auto r = verify_pattern_witness(g, *w.pattern);
            if (!r.ok) return reject(r.reason);
            if (target && w.pattern->order() < *target)
                return reject("order " + std::to_string(w.pattern->order()) +
                              " below target " + std::to_string(*target));
            return {true, ""};
        }
    }
    return reject("unknown witness kind");
}

std::string witness_text(const Witness& w) {
    std::ostringstream out;
    switch (w.kind) {
        case WitnessKind::IndependentSet:
        case WitnessKind::Clique:
        case WitnessKind::DominatingSet:
        case WitnessKind::InducedPath:
            out << witness_kind_name(w.kind) << " " << w.vertices.size() << " :";
            for (int v : w.vertices) out << " " << v;
            return out.str();
        case WitnessKind::Coloring:
            out << "coloring " << w.color_count << " :";
            for (size_t v = 1; v < w.colors.size(); ++v) out << " " << w.colors[v];
            return out.str();
        case WitnessKind::Pattern:
            return pattern_witness_text(*w.pattern);
    }
    return "";
}

namespace {

int witness_int(std::istringstream& ss, const char* what) {
    std::string tok;
    if (!(ss >> tok)) throw ParseError(1, std::string("witness: expected ") + what);
    try {
        size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw ParseError(1, std::string("witness: bad integer '") + tok + "' for " + what);
    }
}

void expect_token(std::istringstream& ss, const std::string& want) {
    std::string tok;
    if (!(ss >> tok) || tok != want)
        throw ParseError(1, "witness: expected '" + want + "', got '" + tok + "'");
}

}  // namespace

Witness parse_witness(const std::string& text) {
    std::istringstream ss(text);
    std::string kind_name;
    if (!(ss >> kind_name)) throw ParseError(1, "empty witness");
    auto kind = witness_kind_from_name(kind_name);
    if (!kind) throw ParseError(1, "unknown witness kind '" + kind_name + "'");
    if (*kind == WitnessKind::Pattern) {
        std::string pat_name;
        if (!(ss >> pat_name)) throw ParseError(1, "witness: missing pattern kind");
        auto pk = pattern_kind_from_name(pat_name);
        if (!pk) throw ParseError(1, "unknown pattern kind '" + pat_name + "'");
        int h = witness_int(ss, "order");
        if (h < 1) throw ParseError(1, "pattern order must be positive");
        expect_token(ss, ":");
        expect_token(ss, "a");
        expect_token(ss, "=");
        PatternWitness pw{*pk, {}, {}};
        for (int i = 0; i < h; ++i) pw.a_side.push_back(witness_int(ss, "a-side vertex"));
        expect_token(ss, ";");
        expect_token(ss, "b");
        expect_token(ss, "=");
        for (int i = 0; i < h; ++i) pw.b_side.push_back(witness_int(ss, "b-side vertex"));
        return Witness::pattern_of(std::move(pw));
    }
    int count = witness_int(ss, "size");
    if (count < 0) throw ParseError(1, "negative witness size");
    expect_token(ss, ":");
    if (*kind == WitnessKind::Coloring) {
        std::vector<int> colors{0};
        int c;
        while (ss >> c) colors.push_back(c);
        Witness w = Witness::coloring_of(std::move(colors));
        if (w.color_count != count)
            throw ParseError(1, "coloring header count " + std::to_string(count) +
                                    " does not match " + std::to_string(w.color_count) +
                                    " distinct colors");
        return w;
    }
    std::vector<int> vs;
    int v;
    while (ss >> v) vs.push_back(v);
    if (int(vs.size()) != count)
        throw ParseError(1, "witness lists " + std::to_string(vs.size()) +
                                " vertices but header says " + std::to_string(count));
    if (*kind == WitnessKind::InducedPath) return Witness::path_of(std::move(vs));
    return Witness::set_of(*kind, std::move(vs));
}

}  // namespace sip
