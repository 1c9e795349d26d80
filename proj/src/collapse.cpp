#include "flagfold/collapse.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace flagfold {

std::vector<CollapseStep> expand_interval(const Simplex& sigma, const Simplex& tau) {
    if (!sigma.is_valid() || !tau.is_valid())
        throw std::invalid_argument("expand_interval: invalid simplex");
    if (sigma == tau || !tau.contains_all(sigma))
        throw std::invalid_argument("expand_interval: " + to_string(sigma) +
                                    " is not a proper subface of " + to_string(tau));
    std::vector<Vertex> rest;  // tau minus sigma
    for (Vertex v : tau.verts)
        if (!sigma.contains(v)) rest.push_back(v);
    Vertex w = rest.front();
    rest.erase(rest.begin());

    // every eta with sigma <= eta <= tau - w, paired with eta + w
    std::vector<CollapseStep> steps;
    std::size_t m = rest.size();
    steps.reserve(std::size_t{1} << m);
    for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
        Simplex eta = sigma;
        for (std::size_t b = 0; b < m; ++b)
            if (mask & (std::size_t{1} << b)) eta = eta.with(rest[b]);
        steps.push_back({std::move(eta), Simplex{}});
    }
    for (auto& st : steps) st.coface = st.free_face.with(w);
    std::sort(steps.begin(), steps.end(), [](const CollapseStep& a, const CollapseStep& b) {
        if (a.free_face.dim() != b.free_face.dim()) return a.free_face.dim() > b.free_face.dim();
        return a.free_face < b.free_face;
    });
    return steps;
}

std::vector<CollapseStep> cone_collapse(const CliqueComplex& c, Vertex apex, int target_dim) {
    if (target_dim < 1) throw std::invalid_argument("cone_collapse: target dimension must be >= 1");
    if (!c.has_vertex(apex))
        throw std::invalid_argument("cone_collapse: apex " + std::to_string(apex) +
                                    " not in complex");
    for (Vertex v : c.vertices())
        if (v != apex && !c.graph().adjacent(apex, v))
            throw std::invalid_argument("cone_collapse: apex " + std::to_string(apex) +
                                        " is not universal (misses vertex " + std::to_string(v) +
                                        ")");
    std::vector<CollapseStep> steps;
    for (int d = c.dim() - 1; d >= target_dim - 1; --d)
        for (const Simplex& f : c.faces(d))
            if (!f.contains(apex)) steps.push_back({f, f.with(apex)});
    return steps;
}

namespace {

CollapseOutcome collapse_theorem(const CliqueComplex& c, int k);

// Link of v inside the flag closure of a relevant subcomplex: the clique
// complex on the skeleton neighbors of v, with the subcomplex's own edges.
CliqueComplex closure_link(const RelevantSubcomplex& s, Vertex v) {
    auto nbrs = s.skeleton_neighbors(v);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t i = 0; i < nbrs.size(); ++i)
        for (std::size_t j = i + 1; j < nbrs.size(); ++j)
            if (s.skeleton_adjacent(nbrs[i], nbrs[j])) edges.emplace_back(nbrs[i], nbrs[j]);
    Vertex n = s.ambient ? s.ambient->graph().num_vertices()
                         : (s.support.empty() ? 0 : s.support.back() + 1);
    Graph g = Graph::from_sorted_edges(n, edges);
    return induced_clique_complex(g, nbrs);
}

}  // namespace

std::vector<CollapseStep> collapse_link_to_dim(const CliqueComplex& link, int k) {
    if (k < 1)
        throw std::invalid_argument(
            "collapse_link_to_dim requires k >= 1; at k = 0 the engine pairs the vertex "
            "with its unique edge directly");
    if (link.vertices().size() > static_cast<std::size_t>(2 * k + 1))
        throw std::invalid_argument("link has " + std::to_string(link.vertices().size()) +
                                    " vertices, more than 2k+1 = " + std::to_string(2 * k + 1));
    if (link.dim() <= k - 1) return {};

    // cone case: any universal vertex will do; take the least
    for (Vertex x : link.vertices()) {
        if (link.graph().degree(x) == static_cast<int>(link.vertices().size()) - 1)
            return cone_collapse(link, x, k);
    }

    // otherwise the 1-skeleton is a proper subgraph of K_{2k+1}, so every
    // relevant k-subcomplex of the link has a vertex of degree <= 2k-1 and
    // the degree condition holds one parameter down
    CollapseOutcome sub = collapse_theorem(link, k - 1);
    if (sub.status != CollapseStatus::Success)
        throw std::logic_error("link without a universal vertex failed to collapse at k-1");
    return sub.certificate->steps;
}

std::vector<CollapseStep> lift_steps(std::span<const CollapseStep> steps, Vertex v,
                                     int min_free_dim) {
    std::vector<CollapseStep> out;
    out.reserve(steps.size());
    for (const CollapseStep& st : steps) {
        if (st.free_face.dim() < min_free_dim)
            throw std::invalid_argument("lift_steps: free face " + to_string(st.free_face) +
                                        " has dimension below " + std::to_string(min_free_dim));
        if (st.free_face.contains(v) || st.coface.contains(v))
            throw std::invalid_argument("lift_steps: step " + to_string(st) +
                                        " already contains vertex " + std::to_string(v));
        out.push_back({st.free_face.with(v), st.coface.with(v)});
    }
    return out;
}

namespace {

// Least-id vertex of minimum skeleton degree; nullopt when that degree
// exceeds 2k+1.
std::optional<Vertex> pick_low_degree_vertex(const RelevantSubcomplex& s, int k) {
    Vertex best = -1;
    int best_deg = -1;
    for (std::size_t i = 0; i < s.support.size(); ++i) {
        int deg = static_cast<int>(s.adjacency[i].size());
        if (best_deg < 0 || deg < best_deg) {
            best_deg = deg;
            best = s.support[i];
        }
    }
    if (best_deg < 0 || best_deg > 2 * k + 1) return std::nullopt;
    return best;
}

CollapseOutcome collapse_theorem(const CliqueComplex& c, int k) {
    WorkingComplex w(c);
    std::vector<CollapseStep> steps;

    std::deque<std::vector<Simplex>> queue;
    for (RelevantSubcomplex& comp : facet_adjacency_components(c, k + 1))
        queue.push_back(std::move(comp.facets));

    while (!queue.empty()) {
        std::vector<Simplex> facets = std::move(queue.front());
        queue.pop_front();
        if (facets.empty()) continue;
        for (const Simplex& f : facets)
            if (!w.contains(f))
                throw std::logic_error("queued facet " + to_string(f) +
                                       " was removed by another subcomplex");
        RelevantSubcomplex sub = make_relevant_subcomplex(k + 1, std::move(facets), &c);

        auto picked = pick_low_degree_vertex(sub, k);
        if (!picked) {
            CollapseOutcome out;
            out.status = CollapseStatus::Failure;
            out.witness = std::move(sub);
            return out;
        }
        Vertex v = *picked;

        std::vector<CollapseStep> lifted;
        if (k == 0) {
            // leaf pruning: v has a unique incident edge
            Vertex u = sub.skeleton_neighbors(v).front();
            lifted.push_back({Simplex{v}, Simplex{v}.with(u)});
        } else {
            CliqueComplex lk = closure_link(sub, v);
            lifted = lift_steps(collapse_link_to_dim(lk, k), v, k - 1);
        }
        for (const CollapseStep& st : lifted) {
            w.collapse(st);
            steps.push_back(st);
        }

        std::vector<Simplex> rest;
        rest.reserve(sub.facets.size());
        for (Simplex& f : sub.facets)
            if (!f.contains(v)) rest.push_back(std::move(f));
        if (!rest.empty()) {
            auto comps = facet_components(rest, k + 1, &c);
            for (auto it = comps.rbegin(); it != comps.rend(); ++it)
                queue.push_front(std::move(it->facets));
        }
    }

    int final_dim = w.dim();
    if (final_dim > k)
        throw std::logic_error("theorem collapse left dimension " + std::to_string(final_dim));
    CollapseOutcome out;
    out.status = CollapseStatus::Success;
    out.certificate = CollapseCertificate{k, complex_fingerprint(c), std::move(steps), final_dim};
    return out;
}

struct GreedyOrder {
    bool operator()(const Simplex& a, const Simplex& b) const {
        if (a.dim() != b.dim()) return a.dim() > b.dim();
        return a < b;
    }
};

CollapseOutcome greedy_run(WorkingComplex w, int k, std::string fingerprint) {
    std::vector<CollapseStep> steps;
    std::set<Simplex, GreedyOrder> candidates;
    for (const CollapseStep& st : find_free_faces(w, k)) candidates.insert(st.free_face);

    while (!candidates.empty()) {
        Simplex sigma = *candidates.begin();
        candidates.erase(candidates.begin());
        if (sigma.dim() < k || !w.is_free(sigma)) continue;
        auto tau = w.unique_coface(sigma);
        if (!tau) continue;
        CollapseStep st{std::move(sigma), std::move(*tau)};
        auto affected = w.collapse(st);
        steps.push_back(std::move(st));
        for (Simplex& f : affected)
            if (f.dim() >= k && w.is_free(f)) candidates.insert(std::move(f));
    }

    CollapseOutcome out;
    if (w.dim() <= k) {
        out.status = CollapseStatus::Success;
        out.certificate =
            CollapseCertificate{k, std::move(fingerprint), std::move(steps), w.dim()};
    } else {
        out.status = CollapseStatus::Failure;
    }
    return out;
}

}  // namespace

CollapseOutcome collapse_to_dim(const CliqueComplex& c, int k, CollapseStrategy strategy) {
    if (k < 0) throw std::invalid_argument("collapse parameter k must be nonnegative");
    if (strategy == CollapseStrategy::Theorem) {
        if (!c.is_flag_complete())
            throw std::invalid_argument(
                "theorem strategy needs the full clique complex; dim_cap truncated enumeration");
        return collapse_theorem(c, k);
    }
    return greedy_run(WorkingComplex(c), k, complex_fingerprint(c));
}

CollapseOutcome collapse_faces_greedy(std::span<const Simplex> faces, int k) {
    if (k < 0) throw std::invalid_argument("collapse parameter k must be nonnegative");
    WorkingComplex w(faces);
    std::string fp = complex_fingerprint(w.maximal_faces());
    return greedy_run(std::move(w), k, std::move(fp));
}

namespace {

VerifyResult verify_impl(WorkingComplex w, const std::string& fingerprint,
                         const CollapseCertificate& cert) {
    VerifyResult res;
    if (fingerprint != cert.fingerprint) {
        res.error = "fingerprint mismatch: complex " + fingerprint + ", certificate " +
                    cert.fingerprint;
        return res;
    }
    for (std::size_t i = 0; i < cert.steps.size(); ++i) {
        const CollapseStep& st = cert.steps[i];
        auto fail = [&](const std::string& why) {
            res.failed_step = i;
            res.error = "step " + std::to_string(i) + ": " + why;
            return res;
        };
        if (!st.free_face.is_valid() || !st.coface.is_valid())
            return fail("malformed simplex");
        if (st.coface.dim() != st.free_face.dim() + 1 || !st.coface.contains_all(st.free_face))
            return fail("pair " + to_string(st) + " is not elementary");
        if (st.free_face.dim() < cert.k)
            return fail("free face " + to_string(st.free_face) + " below certificate dimension " +
                        std::to_string(cert.k));
        if (!w.contains(st.free_face)) return fail("free face " + to_string(st.free_face) + " absent");
        if (!w.contains(st.coface)) return fail("coface " + to_string(st.coface) + " absent");
        // independent free-face check: scan for cofaces directly
        for (Vertex u : w.universe()) {
            if (st.free_face.contains(u)) continue;
            Simplex cand = st.free_face.with(u);
            if (w.contains(cand) && cand != st.coface)
                return fail("free face " + to_string(st.free_face) + " has another coface " +
                            to_string(cand));
        }
        for (Vertex u : w.universe()) {
            if (st.coface.contains(u)) continue;
            if (w.contains(st.coface.with(u)))
                return fail("coface " + to_string(st.coface) + " is not maximal");
        }
        w.collapse(st);
    }
    res.final_dim = w.dim();
    if (res.final_dim != cert.final_dim) {
        res.error = "final dimension " + std::to_string(res.final_dim) +
                    " does not match recorded " + std::to_string(cert.final_dim);
        return res;
    }
    if (res.final_dim > cert.k) {
        res.error = "final dimension " + std::to_string(res.final_dim) + " exceeds k = " +
                    std::to_string(cert.k);
        return res;
    }
    res.pass = true;
    res.final_faces = w.all_faces();
    return res;
}

}  // namespace

VerifyResult verify_certificate(const CliqueComplex& c, const CollapseCertificate& cert) {
    return verify_impl(WorkingComplex(c), complex_fingerprint(c), cert);
}

VerifyResult verify_certificate(std::span<const Simplex> faces, const CollapseCertificate& cert) {
    WorkingComplex w(faces);
    std::string fp = complex_fingerprint(w.maximal_faces());
    return verify_impl(std::move(w), fp, cert);
}

}  // namespace flagfold
