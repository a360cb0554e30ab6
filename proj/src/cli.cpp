#include "sip/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "sip/branching.hpp"
#include "sip/errors.hpp"
#include "sip/fpt.hpp"
#include "sip/generate.hpp"
#include "sip/graph.hpp"
#include "sip/gridtiling.hpp"
#include "sip/gyarfas.hpp"
#include "sip/oracles.hpp"
#include "sip/pattern.hpp"
#include "sip/reductions.hpp"
#include "sip/witness.hpp"

namespace sip {

namespace {

std::string slurp(const std::string& path, std::istream& in) {
    if (path == "-") {
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
    std::ifstream f(path);
    if (!f) throw InputError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

Graph load_graph(const std::string& path, std::istream& in) {
    return parse_graph(slurp(path, in));
}

struct CliArgs {
    // gen
    std::string family;
    std::vector<std::string> params;
    uint64_t seed = 1;
    // shared
    std::string graph_file = "-";
    std::string second_file;
    std::string third_file;
    int cap = 8;
    int k = 0;
    int t = 0;
    int m = -1;
    bool use_max = false;
    bool use_halfgraph = false;
    bool use_gyarfas = false;
    int depth_cap = -1;
    int threshold = 64;
    uint64_t budget = 0;  // 0 = defaults
    std::string kind;
};

SolveOptions solve_opts(const CliArgs& a) {
    SolveOptions o;
    if (a.budget != 0) o.node_budget = a.budget;
    return o;
}

int cmd_gen(const CliArgs& a, std::ostream& out) {
    GeneratedGraph gg = generate(a.family, a.params, a.seed);
    std::vector<std::string> comments;
    for (const RoleLabel& r : gg.roles)
        comments.push_back("role " + std::to_string(r.vertex) + " " + std::string(1, r.side) +
                           " " + std::to_string(r.index));
    out << serialize_graph(gg.graph, comments);
    return 0;
}

int cmd_indices(const CliArgs& a, std::istream& in, std::ostream& out) {
    Graph g = load_graph(a.graph_file, in);
    IndexReport rep = index_report(g, a.cap);
    out << "matching " << rep.matching.to_string() << "\n";
    out << "comatching " << rep.comatching.to_string() << "\n";
    out << "halfgraph " << rep.halfgraph.to_string() << "\n";
    out << "diversity " << rep.neighborhood_diversity << "\n";
    for (const IndexValue* iv : {&rep.matching, &rep.comatching, &rep.halfgraph})
        if (iv->witness) out << pattern_witness_text(*iv->witness) << "\n";
    return 0;
}

int cmd_solve(const CliArgs& a, std::istream& in, std::ostream& out) {
    Graph g = load_graph(a.graph_file, in);
    SolveOptions opts = solve_opts(a);
    if (a.kind == "is" || a.kind == "clique") {
        std::vector<int> best = a.kind == "is" ? max_independent_set(g, opts)
                                               : max_clique(g, opts);
        WitnessKind wk = a.kind == "is" ? WitnessKind::IndependentSet : WitnessKind::Clique;
        if (!a.use_max && int(best.size()) < a.k) {
            out << "no\n";
            return 1;
        }
        out << witness_text(Witness::set_of(wk, best)) << "\n";
        return 0;
    }
    std::vector<int> ds = min_dominating_set(g, opts);
    if (!a.use_max && int(ds.size()) > a.k) {
        out << "no\n";
        return 1;
    }
    out << witness_text(Witness::set_of(WitnessKind::DominatingSet, ds)) << "\n";
    return 0;
}

int cmd_approx_is(const CliArgs& a, std::istream& in, std::ostream& out, std::ostream& err) {
    Graph g = load_graph(a.graph_file, in);
    if (a.use_halfgraph) {
        std::optional<int> cap;
        if (a.depth_cap >= 0) cap = a.depth_cap;
        BranchReport rep = approx_is_halfgraph(g, cap);
        err << "branching nodes=" << rep.nodes_explored << " depth=" << rep.depth_reached
            << " cap_hit=" << (rep.cap_hit ? 1 : 0) << "\n";
        out << witness_text(Witness::set_of(WitnessKind::IndependentSet, rep.result)) << "\n";
        return 0;
    }
    std::vector<int> is = approx_is_comatching(g, a.m, &err);
    out << witness_text(Witness::set_of(WitnessKind::IndependentSet, is)) << "\n";
    return 0;
}

int cmd_approx_clique(const CliArgs& a, std::istream& in, std::ostream& out, std::ostream& err) {
    Graph g = load_graph(a.graph_file, in);
    std::vector<int> c = approx_clique(g, a.m, &err);
    out << witness_text(Witness::set_of(WitnessKind::Clique, c)) << "\n";
    return 0;
}

int cmd_fpt(const CliArgs& a, std::istream& in, std::ostream& out, std::ostream& err) {
    Graph g = load_graph(a.graph_file, in);
    uint64_t hom_budget = a.budget != 0 ? a.budget : 10'000;
    FptResult res = fpt_independent_set(g, a.k, a.t, a.threshold, hom_budget, solve_opts(a));
    err << res.kernel.dump() << "\n";
    if (!res.yes) {
        out << "no\n";
        return 1;
    }
    out << "yes\n";
    out << witness_text(Witness::set_of(WitnessKind::IndependentSet, res.witness)) << "\n";
    return 0;
}

int cmd_reduce_gt2is(const CliArgs& a, std::istream& in, std::ostream& out) {
    GridTilingInstance inst = parse_grid_tiling(slurp(a.graph_file, in));
    TilingReductionOutput red = grid_tiling_to_is(inst);
    out << serialize_graph(red.graph, red.label_comments());
    return 0;
}

int cmd_reduce_mcis2ds(const CliArgs& a, std::istream& in, std::ostream& out) {
    Graph g = load_graph(a.graph_file, in);
    ColorClassPartition p = parse_partition(slurp(a.second_file, in));
    DsReductionOutput red = multicolored_is_to_ds(g, p);
    out << serialize_graph(red.graph, red.label_comments());
    return 0;
}

int cmd_tiling_solve(const CliArgs& a, std::istream& in, std::ostream& out) {
    GridTilingInstance inst = parse_grid_tiling(slurp(a.graph_file, in));
    auto sel = solve_grid_tiling(inst, solve_opts(a));
    if (!sel) {
        out << "no\n";
        return 1;
    }
    out << serialize_selection(*sel);
    return 0;
}

int cmd_lift(const std::string& mode, const CliArgs& a, std::istream& in, std::ostream& out) {
    if (mode == "gt2is") {
        GridTilingInstance inst = parse_grid_tiling(slurp(a.graph_file, in));
        Selection sel = parse_selection(slurp(a.second_file, in));
        TilingReductionOutput red = grid_tiling_to_is(inst);
        std::vector<int> is = lift_tiling_solution(inst, sel, red);
        out << witness_text(Witness::set_of(WitnessKind::IndependentSet, is)) << "\n";
        return 0;
    }
    if (mode == "is2gt") {
        GridTilingInstance inst = parse_grid_tiling(slurp(a.graph_file, in));
        Witness w = parse_witness(slurp(a.second_file, in));
        if (w.kind != WitnessKind::IndependentSet)
            throw InputError("is2gt expects an independent-set witness");
        TilingReductionOutput red = grid_tiling_to_is(inst);
        Selection sel = extract_tiling_solution(inst, red, w.vertices);
        out << serialize_selection(sel);
        return 0;
    }
    Graph g = load_graph(a.graph_file, in);
    ColorClassPartition p = parse_partition(slurp(a.second_file, in));
    DsReductionOutput red = multicolored_is_to_ds(g, p);
    Witness w = parse_witness(slurp(a.third_file, in));
    if (mode == "mcis2ds") {
        if (w.kind != WitnessKind::IndependentSet)
            throw InputError("mcis2ds expects an independent-set witness");
        std::vector<int> ds = lift_mcis_to_ds(red, w.vertices);
        out << witness_text(Witness::set_of(WitnessKind::DominatingSet, ds)) << "\n";
        return 0;
    }
    if (w.kind != WitnessKind::DominatingSet)
        throw InputError("ds2mcis expects a dominating-set witness");
    std::vector<int> sol = extract_ds_to_mcis(red, w.vertices);
    out << witness_text(Witness::set_of(WitnessKind::IndependentSet, sol)) << "\n";
    return 0;
}

int cmd_verify(const CliArgs& a, std::istream& in, std::ostream& out) {
    auto kind = witness_kind_from_name(a.kind);
    if (!kind) throw InputError("unknown witness kind '" + a.kind + "'");
    Graph g = load_graph(a.graph_file, in);
    Witness w = parse_witness(slurp(a.second_file, in));
    if (w.kind != *kind)
        throw InputError("witness file holds a '" +
                         std::string(witness_kind_name(w.kind)) + "' witness, not '" + a.kind +
                         "'");
    std::optional<int> target;
    if (a.k > 0) target = a.k;
    VerifyResult res = verify_witness(g, w, target);
    if (res.ok) {
        out << "accept\n";
        return 0;
    }
    out << "reject: " << res.reason << "\n";
    return 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"semi-induced pattern toolkit"};
    app.require_subcommand(1);
    CliArgs a;

    CLI::App* gen = app.add_subcommand("gen", "generate a graph family");
    gen->add_option("family", a.family, "family name")->required();
    gen->add_option("params", a.params, "family parameters");
    gen->add_option("--seed", a.seed, "PRNG seed");

    CLI::App* indices = app.add_subcommand("indices", "pattern indices and diversity");
    indices->add_option("graph", a.graph_file, "graph file or - for stdin");
    indices->add_option("--cap", a.cap, "search cap (report >= cap beyond)")
        ->check(CLI::PositiveNumber);

    CLI::App* solve = app.add_subcommand("solve", "exact solvers");
    solve->add_option("what", a.kind, "is | clique | ds")
        ->required()
        ->check(CLI::IsMember({"is", "clique", "ds"}));
    solve->add_option("graph", a.graph_file, "graph file or - for stdin");
    CLI::Option* omax = solve->add_flag("--max", a.use_max, "optimize (max for is/clique, min for ds)");
    CLI::Option* ok = solve->add_option("-k", a.k, "target size");
    omax->excludes(ok);
    solve->add_option("--budget", a.budget, "search node budget");

    CLI::App* approx = app.add_subcommand("approx", "approximation algorithms");
    approx->require_subcommand(1);
    CLI::App* ais = approx->add_subcommand("is", "independent set approximation");
    ais->add_option("graph", a.graph_file, "graph file or - for stdin");
    CLI::Option* oh = ais->add_flag("--halfgraph", a.use_halfgraph, "branching algorithm");
    CLI::Option* og = ais->add_flag("--gyarfas", a.use_gyarfas, "trichotomy on the complement");
    oh->excludes(og);
    ais->add_option("-m", a.m, "co-matching index bound (with --gyarfas)");
    ais->add_option("--depth-cap", a.depth_cap, "branching depth cap (with --halfgraph)");
    CLI::App* aclique = approx->add_subcommand("clique", "clique approximation");
    aclique->add_option("graph", a.graph_file, "graph file or - for stdin");
    aclique->add_flag("--gyarfas", a.use_gyarfas, "trichotomy driver")->required();
    aclique->add_option("-m", a.m, "matching index bound")->required();

    CLI::App* fpt = app.add_subcommand("fpt", "fixed-parameter solver");
    fpt->require_subcommand(1);
    CLI::App* fis = fpt->add_subcommand("is", "independent set");
    fis->add_option("graph", a.graph_file, "graph file or - for stdin");
    fis->add_option("-k", a.k, "solution size")->required();
    fis->add_option("-t", a.t, "index bound parameter")->required();
    fis->add_option("--threshold", a.threshold, "kernelization threshold");
    fis->add_option("--budget", a.budget, "search budget");

    CLI::App* reduce = app.add_subcommand("reduce", "hardness constructions");
    reduce->require_subcommand(1);
    CLI::App* rgt = reduce->add_subcommand("gt2is", "grid tiling to independent set");
    rgt->add_option("instance", a.graph_file, "grid tiling file or -")->required();
    CLI::App* rm = reduce->add_subcommand("mcis2ds", "multicolored IS to dominating set");
    rm->add_option("graph", a.graph_file, "graph file")->required();
    rm->add_option("partition", a.second_file, "partition file")->required();

    CLI::App* lift = app.add_subcommand("lift", "solution lifting across reductions");
    lift->require_subcommand(1);
    CLI::App* lgt = lift->add_subcommand("gt2is", "tiling selection to independent set");
    lgt->add_option("instance", a.graph_file, "grid tiling file")->required();
    lgt->add_option("selection", a.second_file, "selection file")->required();
    CLI::App* lis = lift->add_subcommand("is2gt", "independent set to tiling selection");
    lis->add_option("instance", a.graph_file, "grid tiling file")->required();
    lis->add_option("witness", a.second_file, "independent set witness file")->required();
    CLI::App* lmc = lift->add_subcommand("mcis2ds", "multicolored IS to dominating set");
    lmc->add_option("graph", a.graph_file, "graph file")->required();
    lmc->add_option("partition", a.second_file, "partition file")->required();
    lmc->add_option("witness", a.third_file, "independent set witness file")->required();
    CLI::App* lds = lift->add_subcommand("ds2mcis", "dominating set to multicolored IS");
    lds->add_option("graph", a.graph_file, "graph file")->required();
    lds->add_option("partition", a.second_file, "partition file")->required();
    lds->add_option("witness", a.third_file, "dominating set witness file")->required();

    CLI::App* tiling = app.add_subcommand("tiling", "grid tiling tools");
    tiling->require_subcommand(1);
    CLI::App* tsolve = tiling->add_subcommand("solve", "find a selection");
    tsolve->add_option("instance", a.graph_file, "grid tiling file or -");
    tsolve->add_option("--budget", a.budget, "search node budget");

    CLI::App* verify = app.add_subcommand("verify", "check a witness against a graph");
    verify->add_option("kind", a.kind, "is | clique | ds | coloring | path | pattern")
        ->required();
    verify->add_option("graph", a.graph_file, "graph file")->required();
    verify->add_option("witness", a.second_file, "witness file")->required();
    verify->add_option("-k", a.k, "target (min size; max for ds/coloring)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (*gen) return cmd_gen(a, out);
        if (*indices) return cmd_indices(a, in, out);
        if (*solve) {
            if (!a.use_max && !solve->count("-k"))
                throw InputError("solve needs --max or -k");
            return cmd_solve(a, in, out);
        }
        if (*approx) {
            if (*ais) {
                if (!a.use_halfgraph && !a.use_gyarfas)
                    throw InputError("approx is needs --halfgraph or --gyarfas");
                if (a.use_gyarfas && a.m < 0)
                    throw InputError("--gyarfas needs -m");
                return cmd_approx_is(a, in, out, err);
            }
            if (*aclique) return cmd_approx_clique(a, in, out, err);
        }
        if (*fpt) return cmd_fpt(a, in, out, err);
        if (*reduce) {
            if (*rgt) return cmd_reduce_gt2is(a, in, out);
            if (*rm) return cmd_reduce_mcis2ds(a, in, out);
        }
        if (*lift) {
            if (*lgt) return cmd_lift("gt2is", a, in, out);
            if (*lis) return cmd_lift("is2gt", a, in, out);
            if (*lmc) return cmd_lift("mcis2ds", a, in, out);
            if (*lds) return cmd_lift("ds2mcis", a, in, out);
        }
        if (*tiling && *tsolve) return cmd_tiling_solve(a, in, out);
        if (*verify) return cmd_verify(a, in, out);
        throw InputError("no subcommand selected");
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const IndexBoundError& e) {
        err << "error: " << e.what() << "\n";
        err << witness_text(Witness::path_of(e.certificate_path)) << "\n";
        return 2;
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::overflow_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const InvariantViolation& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace sip
