#include "flagfold/decomposition.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "flagfold/union_find.hpp"

namespace flagfold {

namespace {

std::size_t support_index(const std::vector<Vertex>& support, Vertex v) {
    auto it = std::lower_bound(support.begin(), support.end(), v);
    if (it == support.end() || *it != v)
        throw std::invalid_argument("vertex " + std::to_string(v) + " not in subcomplex support");
    return static_cast<std::size_t>(it - support.begin());
}

}  // namespace

int RelevantSubcomplex::degree(Vertex v) const {
    return static_cast<int>(adjacency[support_index(support, v)].size());
}

std::span<const Vertex> RelevantSubcomplex::skeleton_neighbors(Vertex v) const {
    return adjacency[support_index(support, v)];
}

bool RelevantSubcomplex::skeleton_adjacent(Vertex u, Vertex v) const {
    const auto& row = adjacency[support_index(support, u)];
    return std::binary_search(row.begin(), row.end(), v);
}

RelevantSubcomplex make_relevant_subcomplex(int d, std::vector<Simplex> facets,
                                            const CliqueComplex* ambient) {
    RelevantSubcomplex out;
    out.dim = d;
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    for (const Simplex& f : facets)
        if (f.dim() != d)
            throw std::invalid_argument("facet " + to_string(f) + " does not have dimension " +
                                        std::to_string(d));
    out.facets = std::move(facets);
    out.ambient = ambient;

    std::set<Vertex> support;
    for (const Simplex& f : out.facets) support.insert(f.verts.begin(), f.verts.end());
    out.support.assign(support.begin(), support.end());

    std::vector<std::set<Vertex>> adj(out.support.size());
    for (const Simplex& f : out.facets)
        for (std::size_t i = 0; i < f.size(); ++i)
            for (std::size_t j = i + 1; j < f.size(); ++j) {
                auto a = support_index(out.support, f.verts[i]);
                auto b = support_index(out.support, f.verts[j]);
                adj[a].insert(f.verts[j]);
                adj[b].insert(f.verts[i]);
            }
    out.adjacency.reserve(adj.size());
    for (auto& row : adj) out.adjacency.emplace_back(row.begin(), row.end());
    return out;
}

std::vector<RelevantSubcomplex> facet_components(std::span<const Simplex> facets, int d,
                                                 const CliqueComplex* ambient) {
    if (d < 1) throw std::invalid_argument("decomposition dimension must be at least 1");
    std::vector<Simplex> sorted(facets.begin(), facets.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (const Simplex& f : sorted)
        if (f.dim() != d)
            throw std::invalid_argument("facet " + to_string(f) + " does not have dimension " +
                                        std::to_string(d));

    // union facets that share a (d-1)-face
    UnionFind uf(sorted.size());
    std::unordered_map<Simplex, std::size_t, SimplexHash> first_seen;
    for (std::size_t i = 0; i < sorted.size(); ++i)
        for (std::size_t j = 0; j < sorted[i].size(); ++j) {
            Simplex sub = sorted[i].facet_omitting(j);
            auto [it, inserted] = first_seen.try_emplace(std::move(sub), i);
            if (!inserted) uf.unite(i, it->second);
        }

    // group by root; facet order within a group stays lexicographic
    std::map<std::size_t, std::vector<Simplex>> groups;
    std::map<std::size_t, std::size_t> least_index;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        auto r = uf.find(i);
        groups[r].push_back(sorted[i]);
        auto [it, inserted] = least_index.try_emplace(r, i);
        if (!inserted) it->second = std::min(it->second, i);
    }
    std::vector<std::pair<std::size_t, std::size_t>> order;  // (least facet index, root)
    for (auto& [root, idx] : least_index) order.emplace_back(idx, root);
    std::sort(order.begin(), order.end());

    std::vector<RelevantSubcomplex> out;
    out.reserve(order.size());
    for (auto& [idx, root] : order)
        out.push_back(make_relevant_subcomplex(d, std::move(groups[root]), ambient));
    return out;
}

std::vector<RelevantSubcomplex> facet_adjacency_components(const CliqueComplex& c, int d) {
    return facet_components(c.faces(d), d, &c);
}

CliqueComplex flag_closure(const RelevantSubcomplex& s, std::size_t face_budget) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t i = 0; i < s.support.size(); ++i)
        for (Vertex u : s.adjacency[i])
            if (s.support[i] < u) edges.emplace_back(s.support[i], u);
    std::sort(edges.begin(), edges.end());
    Vertex n = s.ambient ? s.ambient->graph().num_vertices()
                         : (s.support.empty() ? 0 : s.support.back() + 1);
    Graph g = Graph::from_sorted_edges(n, edges);
    return induced_clique_complex(g, s.support, kUncappedDim, face_budget);
}

std::vector<ClosurePair> closure_partition(const CliqueComplex& c, int d,
                                           std::size_t face_budget) {
    std::vector<ClosurePair> out;
    for (RelevantSubcomplex& s : facet_adjacency_components(c, d)) {
        CliqueComplex closure = flag_closure(s, face_budget);
        out.push_back({std::move(s), std::move(closure)});
    }
    return out;
}

namespace {

bool maximal_in(const CliqueComplex& c, const Simplex& f) {
    if (!c.contains(f)) return false;
    for (Vertex w : c.vertices()) {
        if (f.contains(w)) continue;
        if (c.contains(f.with(w))) return false;
    }
    return true;
}

}  // namespace

IntersectionReport check_intersection_bound(std::span<const ClosurePair> pairs, int d) {
    IntersectionReport report;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        for (std::size_t j = i + 1; j < pairs.size(); ++j) {
            const CliqueComplex& a = pairs[i].closure;
            const CliqueComplex& b = pairs[j].closure;
            const CliqueComplex& small = a.face_count() <= b.face_count() ? a : b;
            const CliqueComplex& large = a.face_count() <= b.face_count() ? b : a;
            for (int dd = 0; dd <= small.dim(); ++dd)
                for (const Simplex& f : small.faces(dd)) {
                    if (!large.contains(f)) continue;
                    if (dd >= d) {
                        report.violations.push_back({i, j, f});
                    } else if (dd == d - 1) {
                        if (!maximal_in(a, f) && !maximal_in(b, f))
                            report.violations.push_back({i, j, f});
                    }
                }
        }
    }
    report.pass = report.violations.empty();
    return report;
}

}  // namespace flagfold
