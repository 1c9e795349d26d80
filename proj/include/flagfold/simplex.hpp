#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace flagfold {

using Vertex = std::int32_t;

/// A simplex: a nonempty, strictly increasing list of vertex ids.
/// Dimension is one less than the number of vertices. The empty simplex is
/// not representable on purpose; nothing in this library collapses through
/// dimension -1.
struct Simplex {
    std::vector<Vertex> verts;

    Simplex() = default;
    explicit Simplex(std::vector<Vertex> vs) : verts(std::move(vs)) {}
    Simplex(std::initializer_list<Vertex> vs) : verts(vs) {}

    int dim() const { return static_cast<int>(verts.size()) - 1; }
    std::size_t size() const { return verts.size(); }
    bool empty() const { return verts.empty(); }

    bool contains(Vertex v) const;

    /// True when every vertex of `other` is a vertex of this simplex.
    bool contains_all(const Simplex& other) const;

    /// Copy with `v` inserted in order. `v` must not already be present.
    Simplex with(Vertex v) const;

    /// Copy with `v` removed. `v` must be present.
    Simplex without(Vertex v) const;

    /// The codimension-1 face obtained by dropping the i-th vertex.
    Simplex facet_omitting(std::size_t i) const;

    /// Nonempty and strictly increasing.
    bool is_valid() const;

    auto operator<=>(const Simplex&) const = default;
};

/// Canonicalize an arbitrary vertex list: sorts, rejects empty lists and
/// duplicate vertices.
Simplex make_simplex(std::vector<Vertex> vs);

std::string to_string(const Simplex& s);

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const noexcept;
};

}  // namespace flagfold
