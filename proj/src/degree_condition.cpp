#include "flagfold/degree_condition.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace flagfold {

ConditionReport check_condition(const CliqueComplex& c, int k) {
    if (k < 0) throw std::invalid_argument("condition parameter k must be nonnegative");
    ConditionReport report;
    auto top = c.faces(k + 1);
    std::vector<Simplex> faces(top.begin(), top.end());

    int next_component_id = 0;
    while (!faces.empty()) {
        auto comps = facet_components(faces, k + 1, &c);
        std::set<Simplex> removed;
        for (RelevantSubcomplex& comp : comps) {
            int id = next_component_id++;
            // least id among minimum-degree vertices
            Vertex v = -1;
            int min_deg = -1;
            for (std::size_t i = 0; i < comp.support.size(); ++i) {
                int deg = static_cast<int>(comp.adjacency[i].size());
                if (min_deg < 0 || deg < min_deg) {
                    min_deg = deg;
                    v = comp.support[i];
                }
            }
            if (min_deg > 2 * k + 1) {
                report.status = ConditionStatus::Violated;
                report.witness = std::move(comp);
                report.peel_order.clear();
                return report;
            }
            std::size_t n_removed = 0;
            for (const Simplex& f : comp.facets)
                if (f.contains(v)) {
                    removed.insert(f);
                    ++n_removed;
                }
            report.peel_order.push_back({v, id, n_removed});
        }
        std::erase_if(faces, [&removed](const Simplex& f) { return removed.count(f) > 0; });
    }
    report.status = ConditionStatus::Satisfied;
    return report;
}

std::vector<Vertex> core_prefilter(const Graph& g, int d) {
    if (d < 1) throw std::invalid_argument("core degree bound must be at least 1");
    Vertex n = g.num_vertices();
    std::vector<int> deg(static_cast<std::size_t>(n));
    std::vector<bool> removed(static_cast<std::size_t>(n), false);
    std::deque<Vertex> q;
    for (Vertex v = 0; v < n; ++v) {
        deg[static_cast<std::size_t>(v)] = g.degree(v);
        if (deg[static_cast<std::size_t>(v)] < d) {
            removed[static_cast<std::size_t>(v)] = true;
            q.push_back(v);
        }
    }
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop_front();
        for (Vertex u : g.neighbors(v)) {
            if (removed[static_cast<std::size_t>(u)]) continue;
            if (--deg[static_cast<std::size_t>(u)] < d) {
                removed[static_cast<std::size_t>(u)] = true;
                q.push_back(u);
            }
        }
    }
    std::vector<Vertex> core;
    for (Vertex v = 0; v < n; ++v)
        if (!removed[static_cast<std::size_t>(v)]) core.push_back(v);
    return core;
}

namespace {

constexpr std::size_t kFacetSubsetBound = 12;
constexpr std::size_t kSupportSubsetBound = 20;

// adjacency bitmask between facets of one component
std::vector<std::uint64_t> facet_adjacency_masks(const std::vector<Simplex>& facets) {
    std::vector<std::uint64_t> adj(facets.size(), 0);
    for (std::size_t i = 0; i < facets.size(); ++i)
        for (std::size_t j = i + 1; j < facets.size(); ++j) {
            std::vector<Vertex> common;
            std::set_intersection(facets[i].verts.begin(), facets[i].verts.end(),
                                  facets[j].verts.begin(), facets[j].verts.end(),
                                  std::back_inserter(common));
            if (common.size() + 1 == facets[i].size()) {
                adj[i] |= std::uint64_t{1} << j;
                adj[j] |= std::uint64_t{1} << i;
            }
        }
    return adj;
}

bool mask_connected(std::uint64_t mask, const std::vector<std::uint64_t>& adj) {
    std::uint64_t seen = mask & (~mask + 1);  // lowest set bit
    while (true) {
        std::uint64_t grow = seen;
        std::uint64_t m = seen;
        while (m) {
            auto i = static_cast<std::size_t>(std::countr_zero(m));
            m &= m - 1;
            grow |= adj[i] & mask;
        }
        if (grow == seen) break;
        seen = grow;
    }
    return seen == mask;
}

// minimum skeleton degree of the pure subcomplex spanned by the chosen facets
int min_internal_degree(const std::vector<Simplex>& facets, std::uint64_t mask) {
    std::map<Vertex, std::set<Vertex>> adj;
    std::uint64_t m = mask;
    while (m) {
        auto i = static_cast<std::size_t>(std::countr_zero(m));
        m &= m - 1;
        const Simplex& f = facets[i];
        for (std::size_t a = 0; a < f.size(); ++a)
            for (std::size_t b = a + 1; b < f.size(); ++b) {
                adj[f.verts[a]].insert(f.verts[b]);
                adj[f.verts[b]].insert(f.verts[a]);
            }
    }
    int min_deg = -1;
    for (const auto& [v, nbrs] : adj) {
        int deg = static_cast<int>(nbrs.size());
        if (min_deg < 0 || deg < min_deg) min_deg = deg;
    }
    return min_deg;
}

std::optional<std::vector<Simplex>> violator_by_facet_subsets(const std::vector<Simplex>& facets,
                                                              int k) {
    auto adj = facet_adjacency_masks(facets);
    std::uint64_t full = facets.size() == 64 ? ~std::uint64_t{0}
                                             : (std::uint64_t{1} << facets.size()) - 1;
    for (std::uint64_t mask = 1; mask <= full; ++mask) {
        if (!mask_connected(mask, adj)) continue;
        if (min_internal_degree(facets, mask) >= 2 * k + 2) {
            std::vector<Simplex> witness;
            std::uint64_t m = mask;
            while (m) {
                auto i = static_cast<std::size_t>(std::countr_zero(m));
                m &= m - 1;
                witness.push_back(facets[i]);
            }
            return witness;
        }
    }
    return std::nullopt;
}

std::optional<std::vector<Simplex>> violator_by_vertex_subsets(const RelevantSubcomplex& comp,
                                                               int k) {
    const auto& support = comp.support;
    std::uint64_t full = (std::uint64_t{1} << support.size()) - 1;
    for (std::uint64_t umask = 1; umask <= full; ++umask) {
        if (std::popcount(umask) < k + 2) continue;
        std::vector<Simplex> inside;
        for (const Simplex& f : comp.facets) {
            bool ok = true;
            for (Vertex v : f.verts) {
                auto idx = static_cast<std::size_t>(
                    std::lower_bound(support.begin(), support.end(), v) - support.begin());
                if (!(umask & (std::uint64_t{1} << idx))) {
                    ok = false;
                    break;
                }
            }
            if (ok) inside.push_back(f);
        }
        if (inside.empty()) continue;
        for (RelevantSubcomplex& sub : facet_components(inside, comp.dim, comp.ambient)) {
            int min_deg = -1;
            for (const auto& row : sub.adjacency) {
                int deg = static_cast<int>(row.size());
                if (min_deg < 0 || deg < min_deg) min_deg = deg;
            }
            if (min_deg >= 2 * k + 2) return std::move(sub.facets);
        }
    }
    return std::nullopt;
}

}  // namespace

ConditionReport brute_force_condition(const CliqueComplex& c, int k) {
    if (k < 0) throw std::invalid_argument("condition parameter k must be nonnegative");
    ConditionReport report;
    report.status = ConditionStatus::Satisfied;
    for (const RelevantSubcomplex& comp : facet_adjacency_components(c, k + 1)) {
        std::optional<std::vector<Simplex>> witness;
        if (comp.facets.size() <= kFacetSubsetBound) {
            witness = violator_by_facet_subsets(comp.facets, k);
        } else if (comp.support.size() <= kSupportSubsetBound) {
            witness = violator_by_vertex_subsets(comp, k);
        } else {
            throw std::invalid_argument(
                "component exceeds brute-force oracle bounds (" +
                std::to_string(comp.facets.size()) + " facets on " +
                std::to_string(comp.support.size()) + " vertices)");
        }
        if (witness) {
            report.status = ConditionStatus::Violated;
            report.witness = make_relevant_subcomplex(k + 1, std::move(*witness), &c);
            return report;
        }
    }
    return report;
}

}  // namespace flagfold
