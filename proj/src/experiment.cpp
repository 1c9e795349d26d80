#include "flagfold/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <stdexcept>
#include <thread>

#include "flagfold/homology.hpp"
#include "flagfold/union_find.hpp"

namespace flagfold {

bool connectivity_check(const Graph& g) {
    Vertex n = g.num_vertices();
    if (n <= 1) return true;
    UnionFind uf(static_cast<std::size_t>(n));
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v : g.neighbors(u))
            if (u < v) uf.unite(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
    return uf.component_size(0) == static_cast<std::size_t>(n);
}

TrialRecord run_trial(Vertex n, double alpha, int k, std::uint64_t seed,
                      const ExperimentConfig& opts) {
    TrialRecord rec;
    rec.n = n;
    rec.alpha = alpha;
    rec.p = alpha_to_p(n, alpha);
    rec.seed = seed;
    auto t0 = std::chrono::steady_clock::now();
    try {
        Graph g = sample_gnp({n, rec.p, seed});
        rec.connected = connectivity_check(g);
        CliqueComplex c = clique_complex(std::move(g), opts.dim_cap, opts.face_budget);

        for (const RelevantSubcomplex& comp : facet_adjacency_components(c, k + 1))
            rec.max_relevant_support = std::max(rec.max_relevant_support, comp.support.size());

        ConditionReport cond = check_condition(c, k);
        rec.condition = cond.status;

        CollapseOutcome out = collapse_to_dim(c, k, opts.strategy);
        rec.collapse = out.status;

        std::vector<Simplex> final_faces;
        if (out.status == CollapseStatus::Success) {
            rec.final_dim = out.certificate->final_dim;
            VerifyResult ver = verify_certificate(c, *out.certificate);
            if (!ver.pass) {
                rec.reason = "certificate verification failed: " + ver.error;
                return rec;
            }
            final_faces = std::move(ver.final_faces);
        }

        if (cond.status == ConditionStatus::Satisfied &&
            opts.strategy == CollapseStrategy::Theorem &&
            out.status != CollapseStatus::Success) {
            rec.reason = "invariant violation: condition satisfied but collapse failed";
            return rec;
        }

        if (opts.measure_homology) {
            HomologyProfile prof = homology_profile(c, k);
            rec.betti_k = prof.betti[static_cast<std::size_t>(k)];
            if (k == 1) {
                bool certified = false;
                if (out.status == CollapseStatus::Success && rec.connected.value_or(false) &&
                    *rec.betti_k > 0) {
                    HomologyProfile after = homology_profile(final_faces, 1);
                    certified = rec.final_dim <= 1 && after.betti[0] == 1 && after.betti[1] > 0;
                }
                rec.bouquet_certified = certified;
            }
        }
    } catch (const std::exception& e) {
        rec.reason = e.what();
    }
    auto t1 = std::chrono::steady_clock::now();
    rec.wall_time_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return rec;
}

SweepResult run_sweep(const ExperimentConfig& cfg, int workers) {
    if (cfg.trials < 1) throw std::invalid_argument("trials must be at least 1");
    if (cfg.ns.empty() || cfg.alphas.empty())
        throw std::invalid_argument("sweep needs at least one n and one alpha");
    for (double a : cfg.alphas)
        if (a <= 0) throw std::invalid_argument("alpha values must be positive");
    for (Vertex n : cfg.ns)
        if (n < 1) throw std::invalid_argument("n values must be positive");
    if (workers < 1) workers = 1;

    struct Task {
        Vertex n;
        double alpha;
        int trial;
    };
    std::vector<Task> tasks;
    for (Vertex n : cfg.ns)
        for (double a : cfg.alphas)
            for (int t = 0; t < cfg.trials; ++t) tasks.push_back({n, a, t});

    SweepResult result;
    result.records.resize(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) break;
            const Task& t = tasks[i];
            std::uint64_t seed = derive_child_seed(cfg.master_seed,
                                                   static_cast<std::uint64_t>(t.trial));
            result.records[i] = run_trial(t.n, t.alpha, cfg.k, seed, cfg);
        }
    };
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    // aggregate per (n, alpha) cell, in task order
    std::size_t idx = 0;
    for (Vertex n : cfg.ns)
        for (double a : cfg.alphas) {
            CellSummary cell;
            cell.n = n;
            cell.alpha = a;
            cell.p = alpha_to_p(n, a);
            cell.trials = cfg.trials;
            int satisfied = 0, success = 0, measured = 0, betti_nz = 0;
            int success_measured = 0, success_betti_nz = 0;
            int connected_known = 0, connected_true = 0;
            long long final_dim_sum = 0;
            double support_sum = 0;
            for (int t = 0; t < cfg.trials; ++t, ++idx) {
                const TrialRecord& r = result.records[idx];
                if (!r.reason.empty()) ++cell.errors;
                if (r.condition == ConditionStatus::Satisfied) ++satisfied;
                bool ok = r.collapse == CollapseStatus::Success && r.reason.empty();
                if (ok) {
                    ++success;
                    final_dim_sum += r.final_dim;
                }
                support_sum += static_cast<double>(r.max_relevant_support);
                cell.max_max_support = std::max(cell.max_max_support, r.max_relevant_support);
                if (r.betti_k) {
                    ++measured;
                    if (*r.betti_k > 0) ++betti_nz;
                    if (ok) {
                        ++success_measured;
                        if (*r.betti_k > 0) ++success_betti_nz;
                    }
                }
                if (r.connected) {
                    ++connected_known;
                    if (*r.connected) ++connected_true;
                }
                if (r.bouquet_certified.value_or(false)) ++cell.bouquet_certified_count;
            }
            double nt = static_cast<double>(cfg.trials);
            cell.condition_satisfied_frac = satisfied / nt;
            cell.collapse_success_frac = success / nt;
            cell.mean_final_dim = success ? static_cast<double>(final_dim_sum) / success : 0.0;
            cell.mean_max_support = support_sum / nt;
            if (measured) cell.betti_nonzero_frac = betti_nz / static_cast<double>(measured);
            if (success_measured)
                cell.success_betti_nonzero_frac =
                    success_betti_nz / static_cast<double>(success_measured);
            if (connected_known)
                cell.connected_frac = connected_true / static_cast<double>(connected_known);
            result.cells.push_back(cell);
        }
    return result;
}

namespace {

std::string csv_escape(const std::string& s) {
    std::string out;
    for (char ch : s) out += (ch == ',' || ch == '\n') ? ';' : ch;
    return out;
}

}  // namespace

std::string results_csv(std::span<const TrialRecord> records) {
    std::string out =
        "n,alpha,p,seed,condition,collapse,final_dim,max_support,betti,connected,"
        "wall_time_ms,reason\n";
    char buf[64];
    for (const TrialRecord& r : records) {
        out += std::to_string(r.n) + ",";
        std::snprintf(buf, sizeof(buf), "%g", r.alpha);
        out += std::string(buf) + ",";
        std::snprintf(buf, sizeof(buf), "%.10g", r.p);
        out += std::string(buf) + ",";
        out += std::to_string(r.seed) + ",";
        if (r.condition)
            out += *r.condition == ConditionStatus::Satisfied ? "satisfied" : "violated";
        out += ",";
        if (r.collapse) out += *r.collapse == CollapseStatus::Success ? "success" : "failure";
        out += ",";
        if (r.collapse == CollapseStatus::Success) out += std::to_string(r.final_dim);
        out += ",";
        out += std::to_string(r.max_relevant_support) + ",";
        if (r.betti_k) out += std::to_string(*r.betti_k);
        out += ",";
        if (r.connected) out += *r.connected ? "1" : "0";
        out += ",";
        std::snprintf(buf, sizeof(buf), "%.3f", r.wall_time_ms);
        out += std::string(buf) + ",";
        out += csv_escape(r.reason) + "\n";
    }
    return out;
}

}  // namespace flagfold
