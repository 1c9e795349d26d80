#include "flagfold/simplex.hpp"

#include <algorithm>
#include <stdexcept>

namespace flagfold {

bool Simplex::contains(Vertex v) const {
    return std::binary_search(verts.begin(), verts.end(), v);
}

bool Simplex::contains_all(const Simplex& other) const {
    return std::includes(verts.begin(), verts.end(), other.verts.begin(), other.verts.end());
}

Simplex Simplex::with(Vertex v) const {
    Simplex out;
    out.verts.reserve(verts.size() + 1);
    auto pos = std::lower_bound(verts.begin(), verts.end(), v);
    out.verts.insert(out.verts.end(), verts.begin(), pos);
    out.verts.push_back(v);
    out.verts.insert(out.verts.end(), pos, verts.end());
    return out;
}

Simplex Simplex::without(Vertex v) const {
    Simplex out;
    out.verts.reserve(verts.size() - 1);
    for (Vertex u : verts)
        if (u != v) out.verts.push_back(u);
    return out;
}

Simplex Simplex::facet_omitting(std::size_t i) const {
    Simplex out;
    out.verts.reserve(verts.size() - 1);
    for (std::size_t j = 0; j < verts.size(); ++j)
        if (j != i) out.verts.push_back(verts[j]);
    return out;
}

bool Simplex::is_valid() const {
    if (verts.empty()) return false;
    for (std::size_t i = 1; i < verts.size(); ++i)
        if (verts[i - 1] >= verts[i]) return false;
    return true;
}

Simplex make_simplex(std::vector<Vertex> vs) {
    if (vs.empty()) throw std::invalid_argument("simplex must have at least one vertex");
    std::sort(vs.begin(), vs.end());
    if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
        throw std::invalid_argument("simplex has a repeated vertex");
    return Simplex(std::move(vs));
}

std::string to_string(const Simplex& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.verts.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s.verts[i]);
    }
    out += "}";
    return out;
}

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept {
    // FNV-1a over the vertex ids.
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (Vertex v : s.verts) {
        auto x = static_cast<std::uint32_t>(v);
        for (int b = 0; b < 4; ++b) {
            h ^= (x >> (8 * b)) & 0xffu;
            h *= 0x100000001b3ull;
        }
    }
    return static_cast<std::size_t>(h);
}

}  // namespace flagfold
