#include "flagfold/working_complex.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <stdexcept>

namespace flagfold {

std::string to_string(const CollapseStep& s) {
    return "[" + to_string(s.free_face) + " < " + to_string(s.coface) + "]";
}

WorkingComplex::WorkingComplex(const CliqueComplex& c) {
    universe_.assign(c.vertices().begin(), c.vertices().end());
    by_dim_.resize(static_cast<std::size_t>(std::max(c.dim(), 0)) + 1);
    for (int d = 0; d <= c.dim(); ++d)
        for (const Simplex& f : c.faces(d)) insert(f);
}

WorkingComplex::WorkingComplex(std::span<const Simplex> faces) {
    std::set<Vertex> verts;
    int top = -1;
    for (const Simplex& f : faces) {
        if (!f.is_valid()) throw std::invalid_argument("invalid simplex in face list");
        top = std::max(top, f.dim());
        verts.insert(f.verts.begin(), f.verts.end());
    }
    universe_.assign(verts.begin(), verts.end());
    by_dim_.resize(static_cast<std::size_t>(std::max(top, 0)) + 1);
    for (const Simplex& f : faces) {
        if (contains(f)) throw std::invalid_argument("duplicate face " + to_string(f));
        insert(f);
    }
    // downward closure check
    for (int d = 1; d <= top; ++d)
        for (const auto& [f, cnt] : by_dim_[static_cast<std::size_t>(d)])
            for (std::size_t i = 0; i < f.size(); ++i)
                if (!contains(f.facet_omitting(i)))
                    throw std::invalid_argument("face list is not downward closed at " +
                                                to_string(f));
}

void WorkingComplex::insert(const Simplex& s) {
    auto d = static_cast<std::size_t>(s.dim());
    by_dim_[d][s] = 0;
    ++count_;
    if (d > 0)
        for (std::size_t i = 0; i < s.size(); ++i) {
            auto it = by_dim_[d - 1].find(s.facet_omitting(i));
            if (it != by_dim_[d - 1].end()) ++it->second;
        }
}

int WorkingComplex::dim() const {
    for (int d = static_cast<int>(by_dim_.size()) - 1; d >= 0; --d)
        if (!by_dim_[static_cast<std::size_t>(d)].empty()) return d;
    return -1;
}

std::size_t WorkingComplex::face_count(int d) const {
    if (d < 0 || d >= static_cast<int>(by_dim_.size())) return 0;
    return by_dim_[static_cast<std::size_t>(d)].size();
}

bool WorkingComplex::contains(const Simplex& s) const {
    int d = s.dim();
    if (d < 0 || d >= static_cast<int>(by_dim_.size())) return false;
    return by_dim_[static_cast<std::size_t>(d)].count(s) > 0;
}

int WorkingComplex::coface_count(const Simplex& s) const {
    int d = s.dim();
    if (d < 0 || d >= static_cast<int>(by_dim_.size())) return -1;
    auto it = by_dim_[static_cast<std::size_t>(d)].find(s);
    if (it == by_dim_[static_cast<std::size_t>(d)].end()) return -1;
    return it->second;
}

std::optional<Simplex> WorkingComplex::unique_coface(const Simplex& s) const {
    if (coface_count(s) != 1) return std::nullopt;
    for (Vertex w : universe_) {
        if (s.contains(w)) continue;
        Simplex cand = s.with(w);
        if (contains(cand)) return cand;
    }
    return std::nullopt;
}

std::vector<Simplex> WorkingComplex::faces_sorted(int d) const {
    std::vector<Simplex> out;
    if (d < 0 || d >= static_cast<int>(by_dim_.size())) return out;
    out.reserve(by_dim_[static_cast<std::size_t>(d)].size());
    for (const auto& [f, cnt] : by_dim_[static_cast<std::size_t>(d)]) out.push_back(f);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Simplex> WorkingComplex::all_faces() const {
    std::vector<Simplex> out;
    out.reserve(count_);
    for (int d = 0; d < static_cast<int>(by_dim_.size()); ++d) {
        auto fs = faces_sorted(d);
        out.insert(out.end(), fs.begin(), fs.end());
    }
    return out;
}

std::vector<Simplex> WorkingComplex::maximal_faces() const {
    std::vector<Simplex> out;
    for (int d = 0; d < static_cast<int>(by_dim_.size()); ++d)
        for (const auto& [f, cnt] : by_dim_[static_cast<std::size_t>(d)])
            if (cnt == 0) out.push_back(f);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::size_t> WorkingComplex::f_vector() const {
    std::vector<std::size_t> f(static_cast<std::size_t>(dim() + 1));
    for (std::size_t d = 0; d < f.size(); ++d) f[d] = by_dim_[d].size();
    return f;
}

long long WorkingComplex::euler_characteristic() const {
    long long chi = 0;
    for (std::size_t d = 0; d < by_dim_.size(); ++d)
        chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(by_dim_[d].size());
    return chi;
}

void WorkingComplex::remove_face(const Simplex& s, std::vector<Simplex>* affected) {
    auto d = static_cast<std::size_t>(s.dim());
    by_dim_[d].erase(s);
    --count_;
    if (d > 0)
        for (std::size_t i = 0; i < s.size(); ++i) {
            Simplex sub = s.facet_omitting(i);
            auto it = by_dim_[d - 1].find(sub);
            if (it != by_dim_[d - 1].end()) {
                --it->second;
                if (affected) affected->push_back(std::move(sub));
            }
        }
}

std::vector<Simplex> WorkingComplex::collapse(const CollapseStep& step) {
    const Simplex& sigma = step.free_face;
    const Simplex& tau = step.coface;
    if (!sigma.is_valid() || !tau.is_valid())
        throw std::invalid_argument("collapse step has an invalid simplex");
    if (tau.dim() != sigma.dim() + 1 || !tau.contains_all(sigma))
        throw std::invalid_argument("step " + to_string(step) + " is not elementary");
    if (!contains(sigma))
        throw std::invalid_argument("free face " + to_string(sigma) + " is absent");
    if (!contains(tau))
        throw std::invalid_argument("coface " + to_string(tau) + " is absent");
    if (coface_count(sigma) != 1)
        throw std::invalid_argument("face " + to_string(sigma) + " is not free (coface count " +
                                    std::to_string(coface_count(sigma)) + ")");
    if (coface_count(tau) != 0)
        throw std::invalid_argument("coface " + to_string(tau) + " is not maximal");
    std::vector<Simplex> affected;
    remove_face(tau, &affected);
    remove_face(sigma, &affected);
    return affected;
}

std::vector<CollapseStep> find_free_faces(const WorkingComplex& c, int min_dim) {
    if (min_dim < 0) throw std::invalid_argument("min_dim must be nonnegative");
    std::vector<CollapseStep> out;
    for (int d = min_dim; d <= c.dim(); ++d)
        for (const Simplex& f : c.faces_sorted(d))
            if (c.is_free(f)) {
                auto tau = c.unique_coface(f);
                if (tau) out.push_back({f, *tau});
            }
    std::sort(out.begin(), out.end(),
              [](const CollapseStep& a, const CollapseStep& b) { return a.free_face < b.free_face; });
    return out;
}

void elementary_collapse(WorkingComplex& c, const CollapseStep& step) { c.collapse(step); }

std::string complex_fingerprint(std::span<const Simplex> maximal_faces) {
    std::vector<Simplex> sorted(maximal_faces.begin(), maximal_faces.end());
    std::sort(sorted.begin(), sorted.end());
    std::uint64_t h = 0xcbf29ce484222325ull;
    auto feed = [&h](std::uint8_t byte) {
        h ^= byte;
        h *= 0x100000001b3ull;
    };
    for (const Simplex& f : sorted) {
        for (Vertex v : f.verts) {
            auto x = static_cast<std::uint32_t>(v);
            for (int b = 0; b < 4; ++b) feed(static_cast<std::uint8_t>((x >> (8 * b)) & 0xffu));
        }
        feed(0xff);
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string complex_fingerprint(const CliqueComplex& c) {
    auto maximal = c.maximal_faces();
    return complex_fingerprint(maximal);
}

}  // namespace flagfold
