// webtopo -- command-line front end: analyze and summarize edge lists,
// average curves across networks, fit and compare log-log curves, and
// generate synthetic baseline graphs.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "webtopo/aggregate.hpp"
#include "webtopo/connectivity.hpp"
#include "webtopo/generate.hpp"
#include "webtopo/graph.hpp"
#include "webtopo/io.hpp"
#include "webtopo/triangles.hpp"

namespace fs = std::filesystem;
using namespace webtopo;

namespace {

NetworkSummary summarize(const UndirectedGraph& g, const TriangleProfile& tri) {
    NetworkSummary s;
    s.nodes = g.node_count();
    s.links = g.link_count();
    s.average_degree =
        s.nodes == 0 ? 0.0
                     : 2.0 * static_cast<double>(s.links) / static_cast<double>(s.nodes);
    s.assortative_coefficient = assortative_coefficient(g);
    const std::uint64_t total =
        std::accumulate(tri.delta.begin(), tri.delta.end(), std::uint64_t{0});
    s.mean_triangle_coefficient =
        s.nodes == 0 ? 0.0
                     : static_cast<double>(total) / static_cast<double>(s.nodes);
    return s;
}

std::string default_name(const std::string& given, const fs::path& input) {
    return given.empty() ? input.stem().string() : given;
}

struct AnalyzeArgs {
    std::string input;
    std::string out_dir = ".";
    std::string name;
    bool directed = false;
};

int run_analyze(const AnalyzeArgs& args) {
    const fs::path input(args.input);
    const fs::path out(args.out_dir);
    fs::create_directories(out);

    UndirectedGraph g;
    std::optional<DirectedGraph> gd;
    if (args.directed) {
        gd = read_directed(input, {.directed = true});
        g = to_undirected(*gd);
    } else {
        g = read_undirected(input);
    }

    const TriangleProfile tri = triangle_coefficients(g);

    write_curve(degree_distribution(g), out / "pk.csv");
    write_curve(knn_curve(g), out / "knn.csv");
    write_curve(rich_club_curve(g), out / "phi.csv");
    write_curve(triangle_ccdf(g, tri), out / "pc_delta.csv");
    write_curve(delta_of_k_curve(g, tri), out / "delta_k.csv");
    write_curve(c_of_k_curve(g, tri), out / "c_k.csv");
    if (gd) {
        const DirectedTriangleProfile dtri = directed_triangle_coefficients(*gd);
        write_curve(delta_in_of_k_curve(*gd, dtri), out / "delta_in.csv");
        write_curve(delta_out_of_k_curve(*gd, dtri), out / "delta_out.csv");
    }
    write_summary(summarize(g, tri), out / "summary.json",
                  default_name(args.name, input));
    return 0;
}

int run_summary(const AnalyzeArgs& args) {
    const fs::path input(args.input);
    UndirectedGraph g = args.directed
                            ? to_undirected(read_directed(input, {.directed = true}))
                            : read_undirected(input);
    // degree_distribution rejects the empty network like analyze does
    (void)degree_distribution(g);
    const TriangleProfile tri = triangle_coefficients(g);
    std::cout << summary_json_text(summarize(g, tri), default_name(args.name, input));
    return 0;
}

int run_aggregate(const std::vector<std::string>& inputs, double ratio,
                  const std::string& out) {
    std::vector<MetricCurve> curves;
    curves.reserve(inputs.size());
    for (const auto& p : inputs) curves.push_back(read_curve(p));
    const MetricCurve avg = average_curves(curves, ratio);
    if (out.empty())
        std::cout << curve_csv_text(avg);
    else
        write_curve(avg, out);
    return 0;
}

int run_fit(const std::string& input) {
    const QuadraticLogFit fit = fit_quadratic_loglog(read_curve(input));
    nlohmann::json j{{"a", fit.a},
                     {"b", fit.b},
                     {"c", fit.c},
                     {"x_min", fit.x_min},
                     {"x_max", fit.x_max},
                     {"residual_rms", fit.residual_rms}};
    std::cout << j.dump(2) << '\n';
    return 0;
}

int run_compare(const std::string& input, const std::string& reference) {
    const MetricCurve curve = read_curve(input);
    const QuadraticLogFit base =
        reference.empty() ? reference_fit() : fit_quadratic_loglog(read_curve(reference));
    const DivergenceReport rep = compare_to_fit(curve, base);
    nlohmann::json j{{"rms", rep.rms},
                     {"max_abs_deviation", rep.max_abs},
                     {"points_used", rep.points_used},
                     {"points_skipped", rep.points_skipped}};
    std::cout << j.dump(2) << '\n';
    return 0;
}

struct GenerateArgs {
    std::string model;
    std::uint32_t nodes = 0;
    std::uint32_t links_per_node = 1;
    std::uint32_t seed_nodes = 0;
    std::optional<double> prob;
    std::optional<std::uint64_t> links;
    std::uint64_t seed = 1;
    std::string out;
};

int run_generate(const GenerateArgs& args) {
    UndirectedGraph g;
    if (args.model == "ba") {
        g = generate_ba({.n_final = args.nodes,
                         .m = args.links_per_node,
                         .m0 = args.seed_nodes,
                         .seed = args.seed});
    } else if (args.model == "er") {
        g = generate_er({.n = args.nodes,
                         .p = args.prob,
                         .target_links = args.links,
                         .seed = args.seed});
    } else {
        throw std::invalid_argument("unknown model: " + args.model);
    }
    write_edge_list(g, args.out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"link-structure characterization toolkit"};
    app.require_subcommand(1);

    AnalyzeArgs analyze_args;
    auto* analyze = app.add_subcommand(
        "analyze", "Compute all metric curves and the summary for one edge list");
    analyze->add_option("input", analyze_args.input, "edge-list file")->required();
    analyze->add_flag("--directed", analyze_args.directed,
                      "treat lines as arcs; adds in/out triangle curves");
    analyze->add_option("--out-dir", analyze_args.out_dir, "output directory");
    analyze->add_option("--name", analyze_args.name,
                        "dataset name recorded in summary.json");

    AnalyzeArgs summary_args;
    auto* summary =
        app.add_subcommand("summary", "Print the scalar network profile as JSON");
    summary->add_option("input", summary_args.input, "edge-list file")->required();
    summary->add_flag("--directed", summary_args.directed,
                      "treat lines as arcs (profile is of the collapsed graph)");
    summary->add_option("--name", summary_args.name, "dataset name");

    std::vector<std::string> agg_inputs;
    double agg_ratio = 2.0 / 3.0;
    std::string agg_out;
    auto* aggregate = app.add_subcommand(
        "aggregate", "Average curve CSVs pointwise with a support threshold");
    aggregate->add_option("inputs", agg_inputs, "curve CSV files")->required();
    aggregate->add_option("--min-support-ratio", agg_ratio,
                          "fraction of curves that must define an x value");
    aggregate->add_option("--out", agg_out, "output CSV (stdout when omitted)");

    std::string fit_input;
    auto* fit = app.add_subcommand("fit", "Fit y ~ 10^(a t^2 + b t + c), t = log10 x");
    fit->add_option("input", fit_input, "curve CSV")->required();

    std::string cmp_input, cmp_reference;
    auto* compare = app.add_subcommand(
        "compare", "Log-space divergence of a curve from a fitted baseline");
    compare->add_option("input", cmp_input, "curve CSV")->required();
    compare->add_option("--reference", cmp_reference,
                        "curve CSV to fit as baseline (default: built-in)");

    GenerateArgs gen_args;
    auto* generate =
        app.add_subcommand("generate", "Write a synthetic baseline graph edge list");
    generate->add_option("--model", gen_args.model, "ba or er")->required();
    generate->add_option("--nodes", gen_args.nodes, "node count")->required();
    generate->add_option("-m,--links-per-node", gen_args.links_per_node,
                         "links added per node (ba)");
    generate->add_option("--seed-nodes", gen_args.seed_nodes,
                         "initial ring size (ba; default: links per node)");
    generate->add_option("--prob", gen_args.prob, "link probability (er)");
    generate->add_option("--links", gen_args.links, "exact link count (er)");
    generate->add_option("--seed", gen_args.seed, "RNG seed");
    generate->add_option("--out", gen_args.out, "output edge-list file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(analyze)) return run_analyze(analyze_args);
        if (app.got_subcommand(summary)) return run_summary(summary_args);
        if (app.got_subcommand(aggregate))
            return run_aggregate(agg_inputs, agg_ratio, agg_out);
        if (app.got_subcommand(fit)) return run_fit(fit_input);
        if (app.got_subcommand(compare)) return run_compare(cmp_input, cmp_reference);
        if (app.got_subcommand(generate)) return run_generate(gen_args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
