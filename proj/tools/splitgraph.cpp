#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "splitgraph/analytic.hpp"
#include "splitgraph/fit.hpp"
#include "splitgraph/gof.hpp"
#include "splitgraph/growth.hpp"
#include "splitgraph/ingest.hpp"

namespace sg = splitgraph;

namespace {

constexpr std::uint64_t kDefaultSeed = 1729;

const std::map<std::string, sg::Variant> kVariants = {
    {"baseline", sg::Variant::Baseline},
    {"uniform", sg::Variant::UniformAttach},
    {"copy", sg::Variant::CopySplit},
    {"binomial", sg::Variant::BinomialSplit},
};

const std::map<std::string, sg::Kind> kKinds = {
    {"out", sg::Kind::Out},
    {"in", sg::Kind::In},
};

void run_simulate(double gamma, std::int64_t steps, sg::Variant variant,
                  std::uint64_t seed, const std::string& prefix) {
    sg::ModelParams params{gamma, steps, variant, seed};
    sg::GrowthState state = sg::simulate(params);
    auto [out_hist, in_hist] = sg::degree_histograms(state);
    sg::write_histogram(out_hist, prefix + ".out.csv");
    sg::write_histogram(in_hist, prefix + ".in.csv");

    std::ofstream meta(prefix + ".meta", std::ios::binary);
    if (!meta) throw std::runtime_error("cannot write " + prefix + ".meta");
    std::string variant_name;
    for (const auto& [name, v] : kVariants)
        if (v == variant) variant_name = name;
    meta << "gamma=" << sg::format_double(gamma) << "\n"
         << "steps=" << steps << "\n"
         << "variant=" << variant_name << "\n"
         << "seed=" << seed << "\n"
         << "k=" << state.k() << "\n"
         << "t=" << state.t << "\n"
         << "kt_ratio="
         << sg::format_double(static_cast<double>(state.k()) /
                              static_cast<double>(state.t))
         << "\n";
}

void run_dist(sg::Kind kind, double gamma, std::int64_t max_degree,
              const std::string& out_path) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << "degree,pmf,cdf,ccdf\n";
    if (kind == sg::Kind::Out) {
        sg::OutDist dist(gamma);
        for (std::int64_t d = 1; d <= max_degree; ++d)
            out << d << "," << sg::format_double(dist.pmf(d)) << ","
                << sg::format_double(dist.cdf(d)) << ","
                << sg::format_double(dist.ccdf(d)) << "\n";
    } else {
        sg::InDist dist(gamma);
        for (std::int64_t d = 1; d <= max_degree; ++d)
            out << d << "," << sg::format_double(dist.pmf(d)) << ","
                << sg::format_double(dist.cdf(d)) << ","
                << sg::format_double(dist.ccdf(d)) << "\n";
    }
}

void run_fit(sg::Kind kind, const std::string& input) {
    sg::DegreeHistogram hist = sg::read_histogram(input);
    sg::FitResult r = sg::fit(hist, kind);
    std::cout << "gamma_hat=" << sg::format_double(r.gamma_hat) << "\n"
              << "loglik=" << sg::format_double(r.loglik) << "\n"
              << "k=" << hist.k() << "\n"
              << "t=" << hist.t() << "\n"
              << "kt_ratio=" << sg::format_double(r.kt_ratio) << "\n"
              << "dropped_zeros=" << hist.dropped_zeros() << "\n"
              << "method="
              << (r.method == sg::FitResult::Method::Analytic ? "analytic"
                                                              : "numeric")
              << "\n";
}

void run_gof(sg::Kind kind, const std::string& input, std::int64_t n_synth,
             std::uint64_t seed) {
    sg::DegreeHistogram hist = sg::read_histogram(input);
    if (hist.k() < 100)
        std::cerr << "warning: only " << hist.k()
                  << " nodes; bootstrap p-values on tiny samples are noisy\n";
    sg::GofResult r = sg::mc_pvalue(hist, kind, n_synth, seed);
    std::cout << "D=" << sg::format_double(r.D) << "\n"
              << "p=" << sg::format_double(r.p_value) << "\n"
              << "n_synth=" << r.n_synth << "\n"
              << "gamma_hat=" << sg::format_double(r.gamma_hat) << "\n"
              << "seed=" << r.seed << "\n";
}

void run_extract(const std::string& root, const std::string& out_path) {
    sg::ImportGraph graph = sg::extract_import_graph(root);
    sg::write_edge_list(graph.edges, out_path);
    std::cout << sg::skip_report_text(graph.skipped);
}

void run_ccdf(const std::string& input, const std::string& out_path) {
    sg::DegreeHistogram hist = sg::read_histogram(input);
    sg::write_ccdf(sg::ccdf(hist), out_path);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Split-model dependency graph toolkit: simulate, fit and "
                 "test degree distributions"};
    app.require_subcommand(1);

    double gamma = 0.3;
    std::int64_t steps = 1000000;
    std::string variant_name = "baseline";
    std::string kind_name = "out";
    std::uint64_t seed = kDefaultSeed;
    std::int64_t n_synth = 1000;
    std::int64_t max_degree = 100;
    std::string input, output, prefix, root;

    auto add_gamma = [&](CLI::App* cmd) {
        cmd->add_option("--gamma", gamma, "splitting probability in (0,1)")
            ->check(CLI::Range(1e-12, 1.0 - 1e-12));
    };
    auto add_kind = [&](CLI::App* cmd) {
        cmd->add_option("--kind", kind_name, "degree kind: out or in")
            ->check(CLI::IsMember({"out", "in"}))
            ->required();
    };

    auto* sim = app.add_subcommand("simulate", "run the growth process");
    add_gamma(sim);
    sim->add_option("--steps", steps, "number of growth steps")
        ->check(CLI::PositiveNumber);
    sim->add_option("--variant", variant_name,
                    "baseline, uniform, copy or binomial")
        ->check(CLI::IsMember({"baseline", "uniform", "copy", "binomial"}));
    sim->add_option("--seed", seed, "RNG seed");
    sim->add_option("--out-prefix", prefix, "output path prefix")->required();

    auto* dist = app.add_subcommand("dist", "tabulate a model distribution");
    add_kind(dist);
    add_gamma(dist);
    dist->add_option("--max-degree", max_degree, "last degree to tabulate")
        ->check(CLI::PositiveNumber);
    dist->add_option("--out", output, "output CSV path")->required();

    auto* fit_cmd = app.add_subcommand("fit", "maximum-likelihood fit");
    add_kind(fit_cmd);
    fit_cmd->add_option("--input", input, "histogram CSV")->required();

    auto* gof_cmd =
        app.add_subcommand("gof", "KS goodness of fit with bootstrap p-value");
    add_kind(gof_cmd);
    gof_cmd->add_option("--input", input, "histogram CSV")->required();
    gof_cmd->add_option("--nsynth", n_synth, "number of synthetic datasets")
        ->check(CLI::PositiveNumber);
    gof_cmd->add_option("--seed", seed, "RNG seed");

    auto* extract =
        app.add_subcommand("extract", "extract a Java import graph");
    extract->add_option("--root", root, "corpus root directory")->required();
    extract->add_option("--out", output, "output edge list TSV")->required();

    auto* ccdf_cmd = app.add_subcommand("ccdf", "emit a CCDF table");
    ccdf_cmd->add_option("--input", input, "histogram CSV")->required();
    ccdf_cmd->add_option("--out", output, "output CSV path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // Usage errors exit 1; --help exits 0.
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (sim->parsed())
            run_simulate(gamma, steps, kVariants.at(variant_name), seed,
                         prefix);
        else if (dist->parsed())
            run_dist(kKinds.at(kind_name), gamma, max_degree, output);
        else if (fit_cmd->parsed())
            run_fit(kKinds.at(kind_name), input);
        else if (gof_cmd->parsed())
            run_gof(kKinds.at(kind_name), input, n_synth, seed);
        else if (extract->parsed())
            run_extract(root, output);
        else if (ccdf_cmd->parsed())
            run_ccdf(input, output);
    } catch (const sg::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const sg::DegenerateData& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
