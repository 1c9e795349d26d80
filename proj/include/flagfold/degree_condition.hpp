#pragma once

#include <optional>
#include <vector>

#include "flagfold/decomposition.hpp"

namespace flagfold {

enum class ConditionStatus { Satisfied, Violated };

struct PeelEvent {
    Vertex vertex = -1;
    int component = -1;
    std::size_t faces_removed = 0;
};

/// Verdict on the degree hypothesis: does every strongly connected, pure
/// (k+1)-dimensional subcomplex contain a vertex of degree at most 2k+1?
struct ConditionReport {
    ConditionStatus status = ConditionStatus::Satisfied;
    /// Violated: a relevant (k+1)-subcomplex whose minimum internal vertex
    /// degree is at least 2k+2.
    std::optional<RelevantSubcomplex> witness;
    /// Satisfied: the peeling that emptied the (k+1)-faces.
    std::vector<PeelEvent> peel_order;
};

/// Exact decision by iterated peeling. Each round splits the surviving
/// (k+1)-faces into facet-adjacency components and, in every component with
/// a vertex of degree <= 2k+1, deletes all faces containing the least such
/// vertex of minimum degree. A violating subcomplex has internal degrees
/// >= 2k+2, hence >= 2k+2 inside any surviving component containing it, so
/// its vertices are never peeled: the peel empties exactly when no violating
/// subcomplex exists.
ConditionReport check_condition(const CliqueComplex& c, int k);

/// The d-core: vertex set of the maximal induced subgraph with minimum
/// degree >= d. An empty (2k+2)-core means the condition is Satisfied; a
/// nonempty core is inconclusive.
std::vector<Vertex> core_prefilter(const Graph& g, int d);

/// Independent test oracle. Components with at most 12 facets are decided
/// by enumerating every connected facet subset; larger components fall back
/// to enumerating vertex subsets of the support (a violator with support U
/// survives inside the faces induced on U, as a full-degree component), up
/// to 20 support vertices.
ConditionReport brute_force_condition(const CliqueComplex& c, int k);

}  // namespace flagfold
