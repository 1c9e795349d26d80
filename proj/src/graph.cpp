#include "flagfold/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace flagfold {

bool Graph::adjacent(Vertex u, Vertex v) const {
    const auto& a = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(a.begin(), a.end(), v);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < num_vertices(); ++u)
        for (Vertex v : adj_[static_cast<std::size_t>(u)])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph Graph::induced(std::span<const Vertex> verts) const {
    Graph out(num_vertices());
    for (Vertex v : verts) {
        const auto& nbrs = adj_[static_cast<std::size_t>(v)];
        auto& row = out.adj_[static_cast<std::size_t>(v)];
        std::set_intersection(nbrs.begin(), nbrs.end(), verts.begin(), verts.end(),
                              std::back_inserter(row));
        out.edge_count_ += row.size();
    }
    out.edge_count_ /= 2;
    return out;
}

Graph Graph::from_sorted_edges(Vertex n, std::span<const std::pair<Vertex, Vertex>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        g.adj_[static_cast<std::size_t>(u)].push_back(v);
        g.adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& row : g.adj_) std::sort(row.begin(), row.end());
    g.edge_count_ = edges.size();
    return g;
}

Graph build_graph(Vertex n, std::span<const std::pair<Vertex, Vertex>> edges) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    std::vector<std::pair<Vertex, Vertex>> norm;
    norm.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) +
                                        "," + std::to_string(v) + ")");
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        norm.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(norm.begin(), norm.end());
    norm.erase(std::unique(norm.begin(), norm.end()), norm.end());
    return Graph::from_sorted_edges(n, norm);
}

}  // namespace flagfold
