#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "flagfold/collapse.hpp"
#include "flagfold/degree_condition.hpp"
#include "flagfold/experiment.hpp"
#include "flagfold/homology.hpp"

namespace flagfold::io {

/// Edge-list text format: header line "n m", then m lines "u v" (0-based).
Graph load_edge_list(std::istream& in);
Graph load_edge_list(const std::filesystem::path& path);
void save_edge_list(const Graph& g, std::ostream& out);
void save_edge_list(const Graph& g, const std::filesystem::path& path);

/// Complex JSON: {"n": int, "faces": [[ints]]} listing maximal faces only.
struct ComplexFile {
    Vertex n = 0;
    std::vector<Simplex> maximal;
};

ComplexFile load_complex_json(std::istream& in);
void save_complex_json(Vertex n, std::span<const Simplex> maximal, std::ostream& out);

/// Downward closure of a maximal-face list, budget-guarded.
std::vector<Simplex> expand_closure(std::span<const Simplex> maximal,
                                    std::size_t face_budget = kDefaultFaceBudget);

/// A complex loaded from either input format. `as_clique` is set when the
/// input was an edge list, or when the JSON faces turned out to be exactly
/// the clique complex of their own 1-skeleton.
struct LoadedComplex {
    Vertex n = 0;
    std::vector<Simplex> faces;  // downward closed
    std::optional<CliqueComplex> as_clique;
};

/// Sniffs the format (JSON starts with '{') and loads.
LoadedComplex load_complex_auto(const std::filesystem::path& path,
                                std::size_t face_budget = kDefaultFaceBudget);

std::string certificate_to_json(const CollapseCertificate& cert);
CollapseCertificate certificate_from_json(std::istream& in);

std::string condition_report_to_json(const ConditionReport& report);
std::string intersection_report_to_json(const IntersectionReport& report);
std::string homology_profile_to_json(const HomologyProfile& profile);
std::string outcome_to_json(const CollapseOutcome& outcome);
std::string verify_result_to_json(const VerifyResult& result);

std::string summary_json(const ExperimentConfig& cfg, const SweepResult& result);
ExperimentConfig experiment_config_from_json(std::istream& in);

}  // namespace flagfold::io
