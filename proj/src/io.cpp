#include "flagfold/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace flagfold::io {

using nlohmann::json;

Graph load_edge_list(std::istream& in) {
    Vertex n = 0;
    std::size_t m = 0;
    if (!(in >> n >> m)) throw std::invalid_argument("edge list: missing 'n m' header");
    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        Vertex u, v;
        if (!(in >> u >> v))
            throw std::invalid_argument("edge list: expected " + std::to_string(m) +
                                        " edges, got " + std::to_string(i));
        edges.emplace_back(u, v);
    }
    return build_graph(n, edges);
}

Graph load_edge_list(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return load_edge_list(in);
}

void save_edge_list(const Graph& g, std::ostream& out) {
    auto edges = g.edges();
    out << g.num_vertices() << " " << edges.size() << "\n";
    for (auto [u, v] : edges) out << u << " " << v << "\n";
}

void save_edge_list(const Graph& g, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    save_edge_list(g, out);
}

ComplexFile load_complex_json(std::istream& in) {
    json j = json::parse(in);
    ComplexFile out;
    out.n = j.at("n").get<Vertex>();
    if (out.n < 1) throw std::invalid_argument("complex JSON: n must be positive");
    for (const auto& face : j.at("faces")) {
        Simplex s = make_simplex(face.get<std::vector<Vertex>>());
        if (s.verts.back() >= out.n)
            throw std::invalid_argument("complex JSON: vertex id " +
                                        std::to_string(s.verts.back()) + " out of range");
        out.maximal.push_back(std::move(s));
    }
    return out;
}

void save_complex_json(Vertex n, std::span<const Simplex> maximal, std::ostream& out) {
    json j;
    j["n"] = n;
    j["faces"] = json::array();
    for (const Simplex& f : maximal) j["faces"].push_back(f.verts);
    out << j.dump() << "\n";
}

std::vector<Simplex> expand_closure(std::span<const Simplex> maximal, std::size_t face_budget) {
    std::set<Simplex> all;
    std::vector<Simplex> stack(maximal.begin(), maximal.end());
    while (!stack.empty()) {
        Simplex f = std::move(stack.back());
        stack.pop_back();
        if (!all.insert(f).second) continue;
        if (all.size() > face_budget)
            throw budget_error("face budget of " + std::to_string(face_budget) +
                               " exceeded while expanding the closure");
        if (f.dim() > 0)
            for (std::size_t i = 0; i < f.size(); ++i) stack.push_back(f.facet_omitting(i));
    }
    return {all.begin(), all.end()};
}

LoadedComplex load_complex_auto(const std::filesystem::path& path, std::size_t face_budget) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    char first = 0;
    in >> std::ws;
    first = static_cast<char>(in.peek());
    LoadedComplex out;
    if (first == '{') {
        ComplexFile file = load_complex_json(in);
        out.n = file.n;
        out.faces = expand_closure(file.maximal, face_budget);
        // vertices mentioned nowhere become isolated 0-faces
        std::set<Vertex> seen;
        for (const Simplex& f : out.faces) seen.insert(f.verts.begin(), f.verts.end());
        for (Vertex v = 0; v < out.n; ++v)
            if (!seen.count(v)) out.faces.push_back(Simplex{v});
        std::sort(out.faces.begin(), out.faces.end());
        // flag check: compare against the clique complex of the 1-skeleton
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (const Simplex& f : out.faces)
            if (f.dim() == 1) edges.emplace_back(f.verts[0], f.verts[1]);
        Graph g = build_graph(out.n, edges);
        try {
            CliqueComplex c = clique_complex(g, kUncappedDim, face_budget);
            bool flag = c.face_count() == out.faces.size();
            if (flag)
                for (const Simplex& f : out.faces)
                    if (!c.contains(f)) {
                        flag = false;
                        break;
                    }
            if (flag) {
                out.faces = c.all_faces();
                out.as_clique = std::move(c);
            }
        } catch (const budget_error&) {
            // leave as a plain face list
        }
    } else {
        Graph g = load_edge_list(in);
        out.n = g.num_vertices();
        CliqueComplex c = clique_complex(std::move(g), kUncappedDim, face_budget);
        out.faces = c.all_faces();
        out.as_clique = std::move(c);
    }
    return out;
}

std::string certificate_to_json(const CollapseCertificate& cert) {
    json j;
    j["k"] = cert.k;
    j["fingerprint"] = cert.fingerprint;
    j["steps"] = json::array();
    for (const CollapseStep& st : cert.steps)
        j["steps"].push_back({{"free", st.free_face.verts}, {"coface", st.coface.verts}});
    j["final_dim"] = cert.final_dim;
    return j.dump();
}

CollapseCertificate certificate_from_json(std::istream& in) {
    json j = json::parse(in);
    CollapseCertificate cert;
    cert.k = j.at("k").get<int>();
    cert.fingerprint = j.at("fingerprint").get<std::string>();
    cert.final_dim = j.at("final_dim").get<int>();
    for (const auto& st : j.at("steps"))
        cert.steps.push_back({Simplex(st.at("free").get<std::vector<Vertex>>()),
                              Simplex(st.at("coface").get<std::vector<Vertex>>())});
    return cert;
}

namespace {

json subcomplex_to_json(const RelevantSubcomplex& s) {
    json j;
    j["dim"] = s.dim;
    j["facets"] = json::array();
    for (const Simplex& f : s.facets) j["facets"].push_back(f.verts);
    j["support"] = s.support;
    return j;
}

}  // namespace

std::string condition_report_to_json(const ConditionReport& report) {
    json j;
    j["status"] = report.status == ConditionStatus::Satisfied ? "satisfied" : "violated";
    if (report.witness) j["witness"] = subcomplex_to_json(*report.witness);
    if (report.status == ConditionStatus::Satisfied) {
        j["peel_order"] = json::array();
        for (const PeelEvent& e : report.peel_order)
            j["peel_order"].push_back({e.vertex, e.component});
    }
    return j.dump();
}

std::string intersection_report_to_json(const IntersectionReport& report) {
    json j;
    j["pass"] = report.pass;
    j["violations"] = json::array();
    for (const IntersectionViolation& v : report.violations)
        j["violations"].push_back({{"pair", {v.first, v.second}}, {"face", v.face.verts}});
    return j.dump();
}

std::string homology_profile_to_json(const HomologyProfile& profile) {
    json j;
    j["betti"] = profile.betti;
    j["torsion"] = profile.torsion;
    j["euler"] = profile.euler;
    return j.dump();
}

std::string outcome_to_json(const CollapseOutcome& outcome) {
    json j;
    j["status"] = outcome.status == CollapseStatus::Success ? "success" : "failure";
    if (outcome.certificate) {
        j["final_dim"] = outcome.certificate->final_dim;
        j["steps"] = outcome.certificate->steps.size();
        j["fingerprint"] = outcome.certificate->fingerprint;
    }
    if (outcome.witness) j["witness"] = subcomplex_to_json(*outcome.witness);
    return j.dump();
}

std::string verify_result_to_json(const VerifyResult& result) {
    json j;
    j["pass"] = result.pass;
    if (result.pass) j["final_dim"] = result.final_dim;
    if (result.failed_step) j["failed_step"] = *result.failed_step;
    if (!result.error.empty()) j["error"] = result.error;
    return j.dump();
}

std::string summary_json(const ExperimentConfig& cfg, const SweepResult& result) {
    json j;
    j["config"] = {{"k", cfg.k},
                   {"alphas", cfg.alphas},
                   {"ns", cfg.ns},
                   {"trials", cfg.trials},
                   {"master_seed", cfg.master_seed},
                   {"strategy", cfg.strategy == CollapseStrategy::Theorem ? "theorem" : "greedy"},
                   {"measure_homology", cfg.measure_homology},
                   {"rng", kRngScheme}};
    j["cells"] = json::array();
    for (const CellSummary& c : result.cells) {
        json cell = {{"n", c.n},
                     {"alpha", c.alpha},
                     {"p", c.p},
                     {"trials", c.trials},
                     {"errors", c.errors},
                     {"condition_satisfied_frac", c.condition_satisfied_frac},
                     {"collapse_success_frac", c.collapse_success_frac},
                     {"mean_final_dim", c.mean_final_dim},
                     {"mean_max_support", c.mean_max_support},
                     {"max_max_support", c.max_max_support},
                     {"bouquet_certified_count", c.bouquet_certified_count}};
        if (c.betti_nonzero_frac) cell["betti_nonzero_frac"] = *c.betti_nonzero_frac;
        if (c.success_betti_nonzero_frac)
            cell["success_betti_nonzero_frac"] = *c.success_betti_nonzero_frac;
        if (c.connected_frac) cell["connected_frac"] = *c.connected_frac;
        j["cells"].push_back(std::move(cell));
    }
    return j.dump(2);
}

ExperimentConfig experiment_config_from_json(std::istream& in) {
    json j = json::parse(in);
    ExperimentConfig cfg;
    cfg.k = j.at("k").get<int>();
    cfg.alphas = j.at("alphas").get<std::vector<double>>();
    cfg.ns = j.at("ns").get<std::vector<Vertex>>();
    cfg.trials = j.at("trials").get<int>();
    cfg.master_seed = j.at("master_seed").get<std::uint64_t>();
    if (j.contains("strategy")) {
        auto s = j["strategy"].get<std::string>();
        if (s == "theorem")
            cfg.strategy = CollapseStrategy::Theorem;
        else if (s == "greedy")
            cfg.strategy = CollapseStrategy::Greedy;
        else
            throw std::invalid_argument("unknown strategy '" + s + "'");
    }
    if (j.contains("measure_homology")) cfg.measure_homology = j["measure_homology"].get<bool>();
    if (j.contains("dim_cap")) cfg.dim_cap = j["dim_cap"].get<int>();
    if (j.contains("face_budget")) cfg.face_budget = j["face_budget"].get<std::size_t>();
    return cfg;
}

}  // namespace flagfold::io
