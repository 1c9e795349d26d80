#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "flagfold/collapse.hpp"
#include "flagfold/degree_condition.hpp"
#include "flagfold/sampler.hpp"

namespace flagfold {

struct ExperimentConfig {
    int k = 1;
    std::vector<double> alphas;
    std::vector<Vertex> ns;
    int trials = 1;
    std::uint64_t master_seed = 0;
    CollapseStrategy strategy = CollapseStrategy::Theorem;
    bool measure_homology = false;
    int dim_cap = kUncappedDim;
    std::size_t face_budget = kDefaultFaceBudget;
};

struct TrialRecord {
    Vertex n = 0;
    double alpha = 0;
    double p = 0;
    std::uint64_t seed = 0;
    std::optional<ConditionStatus> condition;
    std::optional<CollapseStatus> collapse;
    int final_dim = -1;  // valid on collapse Success
    std::size_t max_relevant_support = 0;
    std::optional<long long> betti_k;  // beta_k of the sample, when measured
    std::optional<bool> connected;
    std::optional<bool> bouquet_certified;  // k = 1 with homology only
    double wall_time_ms = 0;
    std::string reason;  // nonempty when the trial errored
};

struct CellSummary {
    Vertex n = 0;
    double alpha = 0;
    double p = 0;
    int trials = 0;
    int errors = 0;
    double condition_satisfied_frac = 0;
    double collapse_success_frac = 0;
    double mean_final_dim = 0;           // over successes
    double mean_max_support = 0;
    std::size_t max_max_support = 0;
    std::optional<double> betti_nonzero_frac;          // over measured trials
    std::optional<double> success_betti_nonzero_frac;  // over measured successes
    std::optional<double> connected_frac;
    int bouquet_certified_count = 0;
};

struct SweepResult {
    std::vector<TrialRecord> records;  // ordered by (n, alpha, trial)
    std::vector<CellSummary> cells;
};

/// True iff a single component spans all n vertices.
bool connectivity_check(const Graph& g);

/// One Monte Carlo trial: sample X(n, n^{-alpha}), check the degree
/// condition, collapse, verify the certificate, optionally measure
/// homology and connectivity. Budget breaches and other per-trial errors
/// land in `reason`, never throw.
TrialRecord run_trial(Vertex n, double alpha, int k, std::uint64_t seed,
                      const ExperimentConfig& opts);

/// Full sweep over ns x alphas x trials. Trial i uses the child seed
/// derived from (master_seed, i) in every cell, so cells are coupled and
/// directly comparable. Deterministic given the config, whatever the
/// worker count.
SweepResult run_sweep(const ExperimentConfig& cfg, int workers = 1);

/// Fixed-column CSV, one row per record:
/// n,alpha,p,seed,condition,collapse,final_dim,max_support,betti,connected,wall_time_ms,reason
std::string results_csv(std::span<const TrialRecord> records);

}  // namespace flagfold
