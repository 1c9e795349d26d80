#pragma once

#include <span>
#include <utility>
#include <vector>

#include "flagfold/simplex.hpp"

namespace flagfold {

/// Simple undirected graph on vertex ids 0..n-1 with strictly sorted,
/// duplicate-free neighbor lists. The 1-skeleton that determines every
/// clique complex in this library.
class Graph {
public:
    Graph() = default;
    explicit Graph(Vertex n) : adj_(static_cast<std::size_t>(n)) {}

    Vertex num_vertices() const { return static_cast<Vertex>(adj_.size()); }
    std::size_t num_edges() const { return edge_count_; }

    std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
    bool adjacent(Vertex u, Vertex v) const;

    /// All edges as (u, v) with u < v, in lexicographic order.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    /// Subgraph induced on `verts` (sorted vertex ids); keeps original ids
    /// and the original vertex count, other vertices become isolated.
    Graph induced(std::span<const Vertex> verts) const;

    /// Builds from normalized (u < v), sorted, deduplicated pairs. No checks.
    static Graph from_sorted_edges(Vertex n, std::span<const std::pair<Vertex, Vertex>> edges);

private:
    std::vector<std::vector<Vertex>> adj_;
    std::size_t edge_count_ = 0;
};

/// Validates vertex ids and rejects self-loops; duplicate pairs (in either
/// orientation) are deduplicated.
Graph build_graph(Vertex n, std::span<const std::pair<Vertex, Vertex>> edges);

}  // namespace flagfold
