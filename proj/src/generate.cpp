#include "sip/generate.hpp"

#include <cmath>

#include "sip/errors.hpp"

namespace sip {

namespace {

GeneratedGraph make_pattern(int t, bool (*pred)(int, int)) {
    if (t < 1) throw InputError("pattern order must be positive");
    GeneratedGraph out;
    out.graph = Graph(2 * t);
    for (int i = 1; i <= t; ++i)
        for (int j = 1; j <= t; ++j)
            if (pred(i, j)) out.graph.add_edge(i, t + j);
    for (int i = 1; i <= t; ++i) out.roles.push_back({i, 'a', i});
    for (int j = 1; j <= t; ++j) out.roles.push_back({t + j, 'b', j});
    return out;
}

}  // namespace

GeneratedGraph make_matching(int t) {
    return make_pattern(t, [](int i, int j) { return i == j; });
}
GeneratedGraph make_comatching(int t) {
    return make_pattern(t, [](int i, int j) { return i != j; });
}
GeneratedGraph make_halfgraph(int t) {
    return make_pattern(t, [](int i, int j) { return i <= j; });
}

GeneratedGraph make_path(int n) {
    if (n < 1) throw InputError("path size must be positive");
    GeneratedGraph out;
    out.graph = Graph(n);
    for (int v = 1; v < n; ++v) out.graph.add_edge(v, v + 1);
    return out;
}

GeneratedGraph make_cycle(int n) {
    if (n < 1) throw InputError("cycle size must be positive");
    GeneratedGraph out = make_path(n);
    if (n >= 3) out.graph.add_edge(n, 1);
    return out;
}

GeneratedGraph make_clique(int n) {
    if (n < 1) throw InputError("clique size must be positive");
    GeneratedGraph out;
    out.graph = Graph(n);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) out.graph.add_edge(u, v);
    return out;
}

GeneratedGraph make_gnp(int n, double p, uint64_t seed) {
    if (n < 1) throw InputError("gnp size must be positive");
    if (!(p >= 0.0 && p <= 1.0)) throw InputError("gnp probability must be in [0,1]");
    GeneratedGraph out;
    out.graph = Graph(n);
    SplitMix64 rng(seed);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (rng.next_double() < p) out.graph.add_edge(u, v);
    return out;
}

GeneratedGraph make_unit_squares(int n, double side, uint64_t seed) {
    if (n < 1) throw InputError("unit-squares size must be positive");
    if (!(side > 0.0)) throw InputError("unit-squares side length must be positive");
    SplitMix64 rng(seed);
    std::vector<double> xs(n + 1), ys(n + 1);
    for (int v = 1; v <= n; ++v) {
        xs[v] = side * rng.next_double();
        ys[v] = side * rng.next_double();
    }
    GeneratedGraph out;
    out.graph = Graph(n);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (std::abs(xs[u] - xs[v]) < 1.0 && std::abs(ys[u] - ys[v]) < 1.0)
                out.graph.add_edge(u, v);
    return out;
}

namespace {

int param_int(const std::vector<std::string>& params, size_t i, const char* what) {
    if (i >= params.size()) throw InputError(std::string("missing parameter: ") + what);
    try {
        size_t pos = 0;
        int v = std::stoi(params[i], &pos);
        if (pos != params[i].size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw InputError(std::string("bad integer parameter '") + params[i] + "' for " + what);
    }
}

double param_double(const std::vector<std::string>& params, size_t i, const char* what) {
    if (i >= params.size()) throw InputError(std::string("missing parameter: ") + what);
    try {
        size_t pos = 0;
        double v = std::stod(params[i], &pos);
        if (pos != params[i].size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw InputError(std::string("bad numeric parameter '") + params[i] + "' for " + what);
    }
}

void expect_params(const std::vector<std::string>& params, size_t count,
                   const std::string& family) {
    if (params.size() != count)
        throw InputError("family '" + family + "' takes " + std::to_string(count) +
                         " parameter(s), got " + std::to_string(params.size()));
}

}  // namespace

GeneratedGraph generate(const std::string& family, const std::vector<std::string>& params,
                        uint64_t seed) {
    if (family == "halfgraph") {
        expect_params(params, 1, family);
        return make_halfgraph(param_int(params, 0, "t"));
    }
    if (family == "matching") {
        expect_params(params, 1, family);
        return make_matching(param_int(params, 0, "t"));
    }
    if (family == "comatching") {
        expect_params(params, 1, family);
        return make_comatching(param_int(params, 0, "t"));
    }
    if (family == "path") {
        expect_params(params, 1, family);
        return make_path(param_int(params, 0, "t"));
    }
    if (family == "cycle") {
        expect_params(params, 1, family);
        return make_cycle(param_int(params, 0, "n"));
    }
    if (family == "clique") {
        expect_params(params, 1, family);
        return make_clique(param_int(params, 0, "n"));
    }
    if (family == "gnp") {
        expect_params(params, 2, family);
        return make_gnp(param_int(params, 0, "n"), param_double(params, 1, "p"), seed);
    }
    if (family == "unit-squares") {
        expect_params(params, 2, family);
        return make_unit_squares(param_int(params, 0, "n"), param_double(params, 1, "side"),
                                 seed);
    }
    throw InputError("unknown family '" + family + "'");
}

}  // namespace sip
