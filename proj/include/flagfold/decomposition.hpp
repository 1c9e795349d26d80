#pragma once

#include <span>
#include <vector>

#include "flagfold/clique_complex.hpp"

namespace flagfold {

/// A strongly connected, pure d-dimensional subcomplex given by its facets.
/// Outputs of facet_adjacency_components are additionally maximal: no other
/// d-face of the ambient complex shares a (d-1)-face with any member.
/// Only the facets are stored; lower faces are derived on demand.
struct RelevantSubcomplex {
    int dim = -1;
    std::vector<Simplex> facets;    // sorted lexicographically
    std::vector<Vertex> support;    // sorted vertex support
    const CliqueComplex* ambient = nullptr;

    /// Degree of v in the subcomplex's 1-skeleton.
    int degree(Vertex v) const;
    std::span<const Vertex> skeleton_neighbors(Vertex v) const;
    bool skeleton_adjacent(Vertex u, Vertex v) const;

    // adjacency lists parallel to `support`, built at construction
    std::vector<std::vector<Vertex>> adjacency;
};

RelevantSubcomplex make_relevant_subcomplex(int d, std::vector<Simplex> facets,
                                            const CliqueComplex* ambient);

/// Connected components of the facet-adjacency relation (two d-faces are
/// adjacent when they share a (d-1)-face) over an explicit facet list.
/// Components are ordered by their lexicographically least facet.
std::vector<RelevantSubcomplex> facet_components(std::span<const Simplex> facets, int d,
                                                 const CliqueComplex* ambient);

/// The maximal relevant d-subcomplexes of c: every d-face of c lands in
/// exactly one returned subcomplex.
std::vector<RelevantSubcomplex> facet_adjacency_components(const CliqueComplex& c, int d);

/// Flag closure of a relevant subcomplex: the clique complex of its
/// 1-skeleton, on the original vertex ids.
CliqueComplex flag_closure(const RelevantSubcomplex& s,
                           std::size_t face_budget = kDefaultFaceBudget);

struct ClosurePair {
    RelevantSubcomplex subcomplex;
    CliqueComplex closure;
};

/// Pairs (S_i, closure of S_i) over the maximal relevant d-subcomplexes.
/// The faces of dimension >= d across all closures partition the faces of
/// c of dimension >= d.
std::vector<ClosurePair> closure_partition(const CliqueComplex& c, int d,
                                           std::size_t face_budget = kDefaultFaceBudget);

struct IntersectionViolation {
    std::size_t first = 0;
    std::size_t second = 0;
    Simplex face;
};

struct IntersectionReport {
    bool pass = true;
    std::vector<IntersectionViolation> violations;
};

/// Checks, for every pair of distinct closures, that their intersection has
/// dimension <= d-1 and that every (d-1)-face of the intersection is a
/// maximal face of at least one of the two closures. Both properties hold
/// for closures of maximal relevant d-subcomplexes of a clique complex; a
/// failure indicates an implementation bug.
IntersectionReport check_intersection_bound(std::span<const ClosurePair> pairs, int d);

}  // namespace flagfold
