// Command-line front end: every subcommand reads JSON, prints a JSON report
// to stdout and diagnostics to stderr. Exit codes: 0 success, 1 negative
// finding of a check command, 2 input error, 3 numerical failure.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "rigidity/json_io.hpp"

namespace {

using namespace rigidity;

constexpr std::uint64_t kDefaultSeed = 20130;

Rat64 parse_rat(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rat64(std::stoll(text), 1);
    return Rat64(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
}

Surface make_surface(const std::string& kind_name, const std::string& a_text,
                     const std::string& b_text) {
    const SurfaceKind kind = surface_kind_from_name(kind_name);
    if (kind != SurfaceKind::Ellipsoid) return Surface(kind);
    return Surface(kind, parse_rat(a_text), parse_rat(b_text));
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

struct Options {
    std::string input;
    std::string input2;
    std::string surface = "cylinder";
    std::string a = "2";
    std::string b = "3";
    std::string out;
    std::uint64_t seed = kDefaultSeed;
    int trials = 3;
    int n = 4;
    double tol = kDefaultRankTol;
    double congruence_tol = 1e-9;
    double step = 0.02;
    int max_steps = 20000;
    std::vector<int> edge;
    bool rational = false;
};

int run_analyze(const Options& opt) {
    const Framework fw = framework_from_json(load_json(opt.input));
    json j = report_to_json(classify(fw, opt.tol));
    if (const auto flex = nontrivial_flex(fw, opt.tol)) {
        json v = json::array();
        for (int i = 0; i < flex->size(); ++i) v.push_back((*flex)(i));
        j["nontrivial_flex"] = v;
    }
    emit(j);
    return 0;
}

int run_sparsity(const Options& opt) {
    const Graph g = graph_from_json(load_json(opt.input));
    const SurfaceKind kind = surface_kind_from_name(opt.surface);
    const int ell = surface_meta(kind).ell;
    json j = {{"surface", opt.surface},
              {"ell", ell},
              {"is_sparse", is_sparse(g, ell)},
              {"is_tight", is_tight(g, ell)}};
    try {
        j["combinatorial_isostatic"] = combinatorial_isostatic(g, kind);
    } catch (const InputError& e) {
        j["combinatorial_isostatic"] = nullptr;
        j["note"] = e.what();
    }
    emit(j);
    return 0;
}

int run_hendrickson(const Options& opt) {
    const Graph g = graph_from_json(load_json(opt.input));
    const Surface s = make_surface(opt.surface, opt.a, opt.b);
    emit(verdict_to_json(check_necessary_conditions(g, s, opt.trials, opt.seed)));
    return 0;
}

int run_sample(const Options& opt) {
    const Graph g = graph_from_json(load_json(opt.input));
    const Surface s = make_surface(opt.surface, opt.a, opt.b);
    if (opt.rational) {
        emit(framework_to_json(
            Framework(g, s, sample_rational_config(s, g.vertex_count(), opt.seed))));
    } else {
        emit(framework_to_json(Framework(g, s, sample_config(s, g.vertex_count(), opt.seed))));
    }
    return 0;
}

int run_trace(const Options& opt) {
    if (opt.edge.size() != 2) throw InputError("--edge needs two 1-based vertex labels i,j");
    Framework fw = framework_from_json(load_json(opt.input));
    // move to standard position so the pinned coordinates are canonical
    Framework standardized(fw.graph, fw.surface,
                           to_standard_position(fw.surface, fw.config));
    const Edge removed(opt.edge[0] - 1, opt.edge[1] - 1);

    TraceParams params;
    params.step = opt.step;
    params.corrector_tol = opt.tol;
    params.max_steps = opt.max_steps;

    const FlexPath path = trace(standardized, removed, params);
    const int crossings = count_crossings(standardized, removed, path);
    const auto witness = find_second_realization_on_path(standardized, removed, params, path);

    const json summary = {{"closed", path.closed},
                          {"crossings", crossings},
                          {"witness", witness ? framework_to_json(*witness) : json(nullptr)}};
    if (!opt.out.empty()) {
        std::ofstream os(opt.out);
        if (!os) throw InputError("cannot open output file: " + opt.out);
        write_trajectory(os, path, crossings, witness);
        emit(summary);
    } else {
        write_trajectory(std::cout, path, crossings, witness);
    }
    return 0;
}

int run_congruent(const Options& opt) {
    const Framework a = framework_from_json(load_json(opt.input));
    const Framework b = framework_from_json(load_json(opt.input2));
    if (a.config.size() != b.config.size())
        throw InputError("frameworks differ in vertex count");
    double max_dev = 0.0;
    for (std::size_t i = 0; i < a.config.size(); ++i)
        for (std::size_t j = i + 1; j < a.config.size(); ++j)
            max_dev = std::max(max_dev,
                               std::abs((a.config[i] - a.config[j]).norm() -
                                        (b.config[i] - b.config[j]).norm()));
    const bool congruent = max_dev <= opt.congruence_tol;
    emit({{"congruent", congruent}, {"max_pair_deviation", max_dev}});
    return congruent ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Rigidity analysis of bar-joint frameworks on quadric surfaces\n"
        "(sphere, cylinder, cone, ellipsoid). All randomness is seeded; the\n"
        "default seed is 20130, so identical invocations give identical output."};
    app.require_subcommand(1);
    Options opt;

    auto add_surface_flags = [&](CLI::App* cmd) {
        cmd->add_option("--surface", opt.surface, "sphere|cylinder|cone|ellipsoid")
            ->capture_default_str();
        cmd->add_option("--a", opt.a, "ellipsoid parameter a as num/den")->capture_default_str();
        cmd->add_option("--b", opt.b, "ellipsoid parameter b as num/den")->capture_default_str();
    };

    auto* analyze = app.add_subcommand(
        "analyze", "Classify a framework: ranks, flex dimensions, rigidity flags");
    analyze->add_option("framework", opt.input, "framework JSON file (- for stdin)")->required();
    analyze->add_option("--tol", opt.tol, "relative rank tolerance")->capture_default_str();

    auto* sparsity =
        app.add_subcommand("sparsity", "Combinatorial counts: sparsity, tightness, isostatic");
    sparsity->add_option("graph", opt.input, "graph JSON file (- for stdin)")->required();
    add_surface_flags(sparsity);

    auto* hendrickson = app.add_subcommand(
        "hendrickson", "Necessary conditions for generic global rigidity");
    hendrickson->add_option("graph", opt.input, "graph JSON file (- for stdin)")->required();
    add_surface_flags(hendrickson);
    hendrickson->add_option("--trials", opt.trials, "sampled configurations per decision")
        ->capture_default_str();
    hendrickson->add_option("--seed", opt.seed, "random seed")->capture_default_str();

    auto* sample = app.add_subcommand("sample", "Realize a graph at a random configuration");
    sample->add_option("graph", opt.input, "graph JSON file (- for stdin)")->required();
    add_surface_flags(sample);
    sample->add_option("--seed", opt.seed, "random seed")->capture_default_str();
    sample->add_flag("--rational", opt.rational,
                     "sample exact rational surface points (enables exact rank)");

    auto* trace_cmd = app.add_subcommand(
        "trace", "Delete an edge and trace the one-dimensional flex manifold");
    trace_cmd->add_option("framework", opt.input, "framework JSON file (- for stdin)")
        ->required();
    trace_cmd->add_option("--edge", opt.edge, "edge to delete, 1-based labels i,j")
        ->required()
        ->delimiter(',')
        ->expected(2);
    trace_cmd->add_option("--step", opt.step, "predictor arc-length step")
        ->capture_default_str();
    trace_cmd->add_option("--tol", opt.tol, "corrector residual tolerance")
        ->default_val(1e-10);
    trace_cmd->add_option("--max-steps", opt.max_steps, "step budget")->capture_default_str();
    trace_cmd->add_option("--out", opt.out,
                          "trajectory file (JSON lines); summary goes to stdout");

    auto* congruent_cmd = app.add_subcommand(
        "congruent", "Compare all pairwise vertex distances of two frameworks");
    congruent_cmd->add_option("framework_a", opt.input, "first framework JSON file")->required();
    congruent_cmd->add_option("framework_b", opt.input2, "second framework JSON file")
        ->required();
    congruent_cmd->add_option("--tol", opt.congruence_tol, "distance agreement tolerance")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(analyze)) return run_analyze(opt);
        if (app.got_subcommand(sparsity)) return run_sparsity(opt);
        if (app.got_subcommand(hendrickson)) return run_hendrickson(opt);
        if (app.got_subcommand(sample)) return run_sample(opt);
        if (app.got_subcommand(trace_cmd)) return run_trace(opt);
        if (app.got_subcommand(congruent_cmd)) return run_congruent(opt);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return 3;
    }
    return 2;
}
