#pragma once

#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "flagfold/graph.hpp"
#include "flagfold/simplex.hpp"

namespace flagfold {

/// Thrown when an enumeration would exceed the configured face budget.
/// A breach is a hard error, never silent truncation.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr int kUncappedDim = std::numeric_limits<int>::max();
inline constexpr std::size_t kDefaultFaceBudget = 5'000'000;

/// All cliques of a graph up to a dimension cap, stored per dimension in
/// lexicographic order. Immutable after construction and safe to share
/// across threads read-only. Vertex ids are always the original graph ids,
/// also for links and induced complexes.
class CliqueComplex {
public:
    CliqueComplex() = default;
    CliqueComplex(Graph graph, std::vector<Vertex> vertices,
                  std::vector<std::vector<Simplex>> faces_by_dim, int dim_cap);

    const Graph& graph() const { return graph_; }
    std::span<const Vertex> vertices() const { return vertices_; }

    /// Top nonempty dimension; -1 for the empty complex.
    int dim() const { return static_cast<int>(faces_.size()) - 1; }
    int dim_cap() const { return dim_cap_; }

    /// True when the dimension cap provably did not truncate enumeration,
    /// i.e. the stored faces are the whole clique complex of the graph.
    bool is_flag_complete() const { return dim() < dim_cap_; }

    std::span<const Simplex> faces(int d) const;
    std::size_t face_count() const { return face_count_; }
    bool contains(const Simplex& s) const;
    bool has_vertex(Vertex v) const;

    std::vector<std::size_t> f_vector() const;
    std::vector<Simplex> all_faces() const;
    std::vector<Simplex> maximal_faces() const;

private:
    Graph graph_;
    std::vector<Vertex> vertices_;
    std::vector<std::vector<Simplex>> faces_;  // faces_[d] sorted lexicographically
    int dim_cap_ = kUncappedDim;
    std::size_t face_count_ = 0;
};

/// Enumerates every clique of g with at most dim_cap+1 vertices.
CliqueComplex clique_complex(Graph g, int dim_cap = kUncappedDim,
                             std::size_t face_budget = kDefaultFaceBudget);

/// Clique complex of the subgraph induced on `verts` (sorted original ids).
CliqueComplex induced_clique_complex(const Graph& g, std::span<const Vertex> verts,
                                     int dim_cap = kUncappedDim,
                                     std::size_t face_budget = kDefaultFaceBudget);

/// A set of faces of an ambient complex. Stars are the canonical example;
/// the set need not be closed under subfaces.
class FaceSet {
public:
    FaceSet() = default;

    /// Validates that every face belongs to `owner`.
    static FaceSet from_faces(const CliqueComplex& owner, std::vector<Simplex> faces);

    const CliqueComplex* owner() const { return owner_; }
    int dim() const { return static_cast<int>(faces_.size()) - 1; }
    std::span<const Simplex> faces(int d) const;
    std::size_t face_count() const;
    std::vector<Simplex> all_faces() const;
    bool contains(const Simplex& s) const;

private:
    friend FaceSet star(const CliqueComplex&, Vertex);
    friend FaceSet skeleton(const CliqueComplex&, int);

    const CliqueComplex* owner_ = nullptr;
    std::vector<std::vector<Simplex>> faces_;  // per dim, sorted
};

/// Link of a vertex: the clique complex induced on its neighbors,
/// carrying original vertex ids.
CliqueComplex link(const CliqueComplex& c, Vertex v,
                   std::size_t face_budget = kDefaultFaceBudget);

/// Star of a vertex: every face containing it.
FaceSet star(const CliqueComplex& c, Vertex v);

/// All faces of dimension at most i.
FaceSet skeleton(const CliqueComplex& c, int i);

/// The clique complex of the face set's 1-skeleton. Vertex degrees are
/// unchanged by this closure.
CliqueComplex flag_closure(const FaceSet& faces,
                           std::size_t face_budget = kDefaultFaceBudget);

/// Vertex support: union of vertices over all faces, sorted.
std::vector<Vertex> vsupp(const FaceSet& faces);

/// Number of 1-faces of the subcomplex generated by `s` that contain v.
int vertex_degree_in(const FaceSet& s, Vertex v);
int vertex_degree_in(const CliqueComplex& c, Vertex v);

}  // namespace flagfold
