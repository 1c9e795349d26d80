#include "flagfold/clique_complex.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <unordered_set>

namespace flagfold {

namespace {

// Depth-first clique enumeration: each clique is visited exactly once as a
// strictly increasing vertex sequence, extending only by common neighbors
// larger than the last vertex. Emits per dimension in lexicographic order.
class CliqueEnumerator {
public:
    CliqueEnumerator(const Graph& g, std::span<const Vertex> verts, int dim_cap,
                     std::size_t budget)
        : g_(g), verts_(verts), budget_(budget) {
        max_size_ = dim_cap >= kUncappedDim - 1 ? std::numeric_limits<int>::max()
                                                : dim_cap + 1;
    }

    std::vector<std::vector<Simplex>> run() {
        std::vector<Vertex> cands;
        for (Vertex v : verts_) {
            cur_.assign(1, v);
            emit();
            if (max_size_ > 1) {
                cands.clear();
                auto nbrs = g_.neighbors(v);
                auto from = std::upper_bound(nbrs.begin(), nbrs.end(), v);
                std::set_intersection(from, nbrs.end(),
                                      std::upper_bound(verts_.begin(), verts_.end(), v),
                                      verts_.end(), std::back_inserter(cands));
                extend(cands);
            }
        }
        return std::move(out_);
    }

private:
    void emit() {
        auto d = cur_.size() - 1;
        if (out_.size() <= d) out_.resize(d + 1);
        out_[d].emplace_back(cur_);
        if (++count_ > budget_)
            throw budget_error("face budget of " + std::to_string(budget_) +
                               " exceeded while enumerating cliques");
    }

    void extend(const std::vector<Vertex>& cands) {
        for (std::size_t i = 0; i < cands.size(); ++i) {
            cur_.push_back(cands[i]);
            emit();
            if (static_cast<int>(cur_.size()) < max_size_ && i + 1 < cands.size()) {
                std::vector<Vertex> next;
                auto nbrs = g_.neighbors(cands[i]);
                std::set_intersection(cands.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                                      cands.end(), nbrs.begin(), nbrs.end(),
                                      std::back_inserter(next));
                extend(next);
            }
            cur_.pop_back();
        }
    }

    const Graph& g_;
    std::span<const Vertex> verts_;
    std::size_t budget_;
    int max_size_;
    std::vector<Vertex> cur_;
    std::vector<std::vector<Simplex>> out_;
    std::size_t count_ = 0;
};

std::vector<Vertex> all_vertices(Vertex n) {
    std::vector<Vertex> out(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) out[static_cast<std::size_t>(v)] = v;
    return out;
}

}  // namespace

CliqueComplex::CliqueComplex(Graph graph, std::vector<Vertex> vertices,
                             std::vector<std::vector<Simplex>> faces_by_dim, int dim_cap)
    : graph_(std::move(graph)),
      vertices_(std::move(vertices)),
      faces_(std::move(faces_by_dim)),
      dim_cap_(dim_cap) {
    for (const auto& fs : faces_) face_count_ += fs.size();
}

std::span<const Simplex> CliqueComplex::faces(int d) const {
    if (d < 0 || d > dim()) return {};
    return faces_[static_cast<std::size_t>(d)];
}

bool CliqueComplex::contains(const Simplex& s) const {
    int d = s.dim();
    if (d < 0 || d > dim()) return false;
    const auto& fs = faces_[static_cast<std::size_t>(d)];
    return std::binary_search(fs.begin(), fs.end(), s);
}

bool CliqueComplex::has_vertex(Vertex v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

std::vector<std::size_t> CliqueComplex::f_vector() const {
    std::vector<std::size_t> f;
    f.reserve(faces_.size());
    for (const auto& fs : faces_) f.push_back(fs.size());
    return f;
}

std::vector<Simplex> CliqueComplex::all_faces() const {
    std::vector<Simplex> out;
    out.reserve(face_count_);
    for (const auto& fs : faces_) out.insert(out.end(), fs.begin(), fs.end());
    return out;
}

std::vector<Simplex> CliqueComplex::maximal_faces() const {
    std::vector<Simplex> out;
    for (int d = 0; d <= dim(); ++d) {
        std::unordered_set<Simplex, SimplexHash> covered;
        if (d + 1 <= dim())
            for (const Simplex& f : faces(d + 1))
                for (std::size_t i = 0; i < f.size(); ++i) covered.insert(f.facet_omitting(i));
        for (const Simplex& f : faces(d))
            if (!covered.count(f)) out.push_back(f);
    }
    return out;
}

CliqueComplex clique_complex(Graph g, int dim_cap, std::size_t face_budget) {
    if (dim_cap < 1) throw std::invalid_argument("dim_cap must be at least 1");
    auto verts = all_vertices(g.num_vertices());
    auto faces = CliqueEnumerator(g, verts, dim_cap, face_budget).run();
    return CliqueComplex(std::move(g), std::move(verts), std::move(faces), dim_cap);
}

CliqueComplex induced_clique_complex(const Graph& g, std::span<const Vertex> verts,
                                     int dim_cap, std::size_t face_budget) {
    Graph sub = g.induced(verts);
    std::vector<Vertex> vs(verts.begin(), verts.end());
    auto faces = CliqueEnumerator(sub, vs, dim_cap, face_budget).run();
    return CliqueComplex(std::move(sub), std::move(vs), std::move(faces), dim_cap);
}

FaceSet FaceSet::from_faces(const CliqueComplex& owner, std::vector<Simplex> faces) {
    FaceSet out;
    out.owner_ = &owner;
    for (Simplex& s : faces) {
        if (!s.is_valid()) throw std::invalid_argument("invalid simplex in face set");
        if (!owner.contains(s))
            throw std::invalid_argument("face " + to_string(s) + " is not in the ambient complex");
        auto d = static_cast<std::size_t>(s.dim());
        if (out.faces_.size() <= d) out.faces_.resize(d + 1);
        out.faces_[d].push_back(std::move(s));
    }
    for (auto& fs : out.faces_) {
        std::sort(fs.begin(), fs.end());
        fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
    }
    return out;
}

std::span<const Simplex> FaceSet::faces(int d) const {
    if (d < 0 || d > dim()) return {};
    return faces_[static_cast<std::size_t>(d)];
}

std::size_t FaceSet::face_count() const {
    std::size_t n = 0;
    for (const auto& fs : faces_) n += fs.size();
    return n;
}

std::vector<Simplex> FaceSet::all_faces() const {
    std::vector<Simplex> out;
    out.reserve(face_count());
    for (const auto& fs : faces_) out.insert(out.end(), fs.begin(), fs.end());
    return out;
}

bool FaceSet::contains(const Simplex& s) const {
    int d = s.dim();
    if (d < 0 || d > dim()) return false;
    const auto& fs = faces_[static_cast<std::size_t>(d)];
    return std::binary_search(fs.begin(), fs.end(), s);
}

CliqueComplex link(const CliqueComplex& c, Vertex v, std::size_t face_budget) {
    if (!c.has_vertex(v))
        throw std::invalid_argument("link: vertex " + std::to_string(v) + " not in complex");
    int cap = c.dim_cap() == kUncappedDim ? kUncappedDim : c.dim_cap() - 1;
    return induced_clique_complex(c.graph(), c.graph().neighbors(v), cap, face_budget);
}

FaceSet star(const CliqueComplex& c, Vertex v) {
    if (!c.has_vertex(v))
        throw std::invalid_argument("star: vertex " + std::to_string(v) + " not in complex");
    FaceSet out;
    out.owner_ = &c;
    out.faces_.resize(static_cast<std::size_t>(c.dim()) + 1);
    for (int d = 0; d <= c.dim(); ++d)
        for (const Simplex& f : c.faces(d))
            if (f.contains(v)) out.faces_[static_cast<std::size_t>(d)].push_back(f);
    while (!out.faces_.empty() && out.faces_.back().empty()) out.faces_.pop_back();
    return out;
}

FaceSet skeleton(const CliqueComplex& c, int i) {
    if (i < 0) throw std::invalid_argument("skeleton dimension must be nonnegative");
    FaceSet out;
    out.owner_ = &c;
    int top = std::min(i, c.dim());
    out.faces_.resize(static_cast<std::size_t>(top) + 1);
    for (int d = 0; d <= top; ++d) {
        auto fs = c.faces(d);
        out.faces_[static_cast<std::size_t>(d)].assign(fs.begin(), fs.end());
    }
    return out;
}

CliqueComplex flag_closure(const FaceSet& faces, std::size_t face_budget) {
    if (!faces.owner()) throw std::invalid_argument("flag_closure: face set has no ambient complex");
    std::vector<Vertex> support = vsupp(faces);
    std::set<std::pair<Vertex, Vertex>> edges;
    for (int d = 1; d <= faces.dim(); ++d)
        for (const Simplex& f : faces.faces(d))
            for (std::size_t i = 0; i < f.size(); ++i)
                for (std::size_t j = i + 1; j < f.size(); ++j)
                    edges.emplace(f.verts[i], f.verts[j]);
    std::vector<std::pair<Vertex, Vertex>> edge_list(edges.begin(), edges.end());
    Graph g = Graph::from_sorted_edges(faces.owner()->graph().num_vertices(), edge_list);
    return induced_clique_complex(g, support, kUncappedDim, face_budget);
}

std::vector<Vertex> vsupp(const FaceSet& faces) {
    std::set<Vertex> support;
    for (int d = 0; d <= faces.dim(); ++d)
        for (const Simplex& f : faces.faces(d))
            support.insert(f.verts.begin(), f.verts.end());
    return {support.begin(), support.end()};
}

int vertex_degree_in(const FaceSet& s, Vertex v) {
    std::set<Vertex> nbrs;
    bool present = false;
    for (int d = 0; d <= s.dim(); ++d)
        for (const Simplex& f : s.faces(d))
            if (f.contains(v)) {
                present = true;
                for (Vertex u : f.verts)
                    if (u != v) nbrs.insert(u);
            }
    if (!present)
        throw std::invalid_argument("vertex " + std::to_string(v) + " not in the face set's support");
    return static_cast<int>(nbrs.size());
}

int vertex_degree_in(const CliqueComplex& c, Vertex v) {
    if (!c.has_vertex(v))
        throw std::invalid_argument("vertex " + std::to_string(v) + " not in complex");
    return c.graph().degree(v);
}

}  // namespace flagfold
