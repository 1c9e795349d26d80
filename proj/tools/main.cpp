#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "flagfold/io.hpp"

namespace {

using namespace flagfold;

int cmd_sample(Vertex n, double p, double alpha, bool has_p, std::uint64_t seed,
               const std::string& out_path) {
    double prob = has_p ? p : alpha_to_p(n, alpha);
    Graph g = sample_gnp({n, prob, seed});
    io::save_edge_list(g, std::filesystem::path(out_path));
    std::cout << "{\"n\": " << n << ", \"p\": " << prob << ", \"seed\": " << seed
              << ", \"edges\": " << g.num_edges() << ", \"out\": \"" << out_path << "\"}\n";
    return 0;
}

int cmd_check(const std::string& in_path, int k, const std::string& mode) {
    io::LoadedComplex input = io::load_complex_auto(in_path);
    if (mode == "prefilter") {
        Graph g = input.as_clique ? input.as_clique->graph() : [&] {
            std::vector<std::pair<Vertex, Vertex>> edges;
            for (const Simplex& f : input.faces)
                if (f.dim() == 1) edges.emplace_back(f.verts[0], f.verts[1]);
            return build_graph(input.n, edges);
        }();
        auto core = core_prefilter(g, 2 * k + 2);
        std::cout << "{\"status\": \"" << (core.empty() ? "satisfied" : "inconclusive")
                  << "\", \"core_size\": " << core.size() << "}\n";
        return 0;
    }
    if (!input.as_clique)
        throw std::invalid_argument("degree condition check needs a clique complex input");
    ConditionReport report = check_condition(*input.as_clique, k);
    std::cout << io::condition_report_to_json(report) << "\n";
    return 0;
}

int cmd_collapse(const std::string& in_path, int k, const std::string& strategy,
                 const std::string& cert_path) {
    io::LoadedComplex input = io::load_complex_auto(in_path);
    CollapseOutcome outcome;
    if (strategy == "theorem") {
        if (!input.as_clique)
            throw std::invalid_argument(
                "theorem strategy needs a clique complex; this face list is not one");
        outcome = collapse_to_dim(*input.as_clique, k, CollapseStrategy::Theorem);
    } else if (input.as_clique) {
        outcome = collapse_to_dim(*input.as_clique, k, CollapseStrategy::Greedy);
    } else {
        outcome = collapse_faces_greedy(input.faces, k);
    }
    if (outcome.certificate && !cert_path.empty()) {
        std::ofstream out(cert_path);
        if (!out) throw std::runtime_error("cannot open " + cert_path + " for writing");
        out << io::certificate_to_json(*outcome.certificate) << "\n";
    }
    std::cout << io::outcome_to_json(outcome) << "\n";
    return 0;
}

int cmd_verify(const std::string& in_path, const std::string& cert_path) {
    io::LoadedComplex input = io::load_complex_auto(in_path);
    std::ifstream certin(cert_path);
    if (!certin) throw std::runtime_error("cannot open " + cert_path);
    CollapseCertificate cert = io::certificate_from_json(certin);
    VerifyResult result = verify_certificate(input.faces, cert);
    std::cout << io::verify_result_to_json(result) << "\n";
    return result.pass ? 0 : 1;
}

int cmd_homology(const std::string& in_path, int max_dim) {
    io::LoadedComplex input = io::load_complex_auto(in_path);
    HomologyProfile profile = homology_profile(input.faces, max_dim);
    std::cout << io::homology_profile_to_json(profile) << "\n";
    return 0;
}

int cmd_experiment(const std::string& config_path, const std::string& out_dir, int workers) {
    std::ifstream in(config_path);
    if (!in) throw std::runtime_error("cannot open " + config_path);
    ExperimentConfig cfg = io::experiment_config_from_json(in);
    SweepResult result = run_sweep(cfg, workers);

    std::filesystem::create_directories(out_dir);
    {
        std::ofstream csv(std::filesystem::path(out_dir) / "results.csv");
        csv << results_csv(result.records);
    }
    {
        std::ofstream summary(std::filesystem::path(out_dir) / "summary.json");
        summary << io::summary_json(cfg, result) << "\n";
    }
    std::cout << io::summary_json(cfg, result) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"clique-complex collapsibility toolkit"};
    app.require_subcommand(1);

    // sample
    auto* sample = app.add_subcommand("sample", "sample G(n,p) and write an edge list");
    Vertex n = 0;
    double p = 0, alpha = 0;
    std::uint64_t seed = 0;
    std::string out_path, in_path, cert_path, mode = "exact", strategy = "theorem";
    auto* popt = sample->add_option("--p", p, "edge probability");
    auto* aopt = sample->add_option("--alpha", alpha, "p = n^-alpha");
    sample->add_option("--n", n, "vertex count")->required();
    sample->add_option("--seed", seed, "RNG seed")->required();
    sample->add_option("--out", out_path, "output edge-list file")->required();
    popt->excludes(aopt);

    auto* check = app.add_subcommand("check", "decide the degree condition");
    int k = 1;
    check->add_option("--in", in_path, "edge list or complex JSON")->required();
    check->add_option("--k", k, "parameter k")->required();
    check->add_option("--mode", mode, "exact|prefilter")->check(CLI::IsMember({"exact", "prefilter"}));

    auto* collapse = app.add_subcommand("collapse", "collapse to dimension k");
    collapse->add_option("--in", in_path, "edge list or complex JSON")->required();
    collapse->add_option("--k", k, "parameter k")->required();
    collapse->add_option("--strategy", strategy, "theorem|greedy")
        ->check(CLI::IsMember({"theorem", "greedy"}));
    collapse->add_option("--cert-out", cert_path, "certificate JSON output");

    auto* verify = app.add_subcommand("verify", "replay and verify a certificate");
    verify->add_option("--in", in_path, "edge list or complex JSON")->required();
    verify->add_option("--cert", cert_path, "certificate JSON")->required();

    auto* homology = app.add_subcommand("homology", "integer homology profile");
    int max_dim = kUncappedDim;
    homology->add_option("--in", in_path, "edge list or complex JSON")->required();
    homology->add_option("--max-dim", max_dim, "top dimension to report");

    auto* experiment = app.add_subcommand("experiment", "Monte Carlo sweep");
    std::string config_path, exp_out_dir;
    int workers = 1;
    experiment->add_option("--config", config_path, "experiment config JSON")->required();
    experiment->add_option("--out-dir", exp_out_dir, "output directory")->required();
    experiment->add_option("--workers", workers, "worker thread count");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sample->parsed()) {
            if (!*popt && !*aopt) throw CLI::RequiredError("--p or --alpha");
            return cmd_sample(n, p, alpha, static_cast<bool>(*popt), seed, out_path);
        }
        if (check->parsed()) return cmd_check(in_path, k, mode);
        if (collapse->parsed()) return cmd_collapse(in_path, k, strategy, cert_path);
        if (verify->parsed()) return cmd_verify(in_path, cert_path);
        if (homology->parsed()) return cmd_homology(in_path, max_dim);
        if (experiment->parsed()) return cmd_experiment(config_path, exp_out_dir, workers);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
