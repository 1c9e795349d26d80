#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "flagfold/clique_complex.hpp"

namespace flagfold {

/// One elementary collapse: free_face is removed together with its unique
/// maximal coface, which is exactly one dimension higher.
struct CollapseStep {
    Simplex free_face;
    Simplex coface;

    bool operator==(const CollapseStep&) const = default;
};

std::string to_string(const CollapseStep& s);

/// Mutable face store supporting checked elementary collapses.
///
/// For every face it tracks the number of cofaces one dimension up. In a
/// downward-closed complex a face is a free face exactly when that count
/// is 1: the unique coface is then automatically maximal.
class WorkingComplex {
public:
    explicit WorkingComplex(const CliqueComplex& c);

    /// From an explicit downward-closed face list (duplicates rejected).
    explicit WorkingComplex(std::span<const Simplex> faces);

    int dim() const;
    std::size_t face_count() const { return count_; }
    std::size_t face_count(int d) const;
    bool contains(const Simplex& s) const;

    /// Number of cofaces of s one dimension up; -1 if s is absent.
    int coface_count(const Simplex& s) const;
    bool is_free(const Simplex& s) const { return coface_count(s) == 1; }

    /// The unique coface of a free face, found by scanning candidate
    /// vertices; nullopt when s is not free.
    std::optional<Simplex> unique_coface(const Simplex& s) const;

    std::vector<Simplex> faces_sorted(int d) const;
    std::vector<Simplex> all_faces() const;
    std::vector<Simplex> maximal_faces() const;
    std::vector<std::size_t> f_vector() const;
    long long euler_characteristic() const;

    /// Applies one elementary collapse after checking the free-face
    /// condition; returns the faces whose coface count changed.
    std::vector<Simplex> collapse(const CollapseStep& step);

    std::span<const Vertex> universe() const { return universe_; }

private:
    void insert(const Simplex& s);
    void remove_face(const Simplex& s, std::vector<Simplex>* affected);

    std::vector<std::unordered_map<Simplex, int, SimplexHash>> by_dim_;
    std::vector<Vertex> universe_;  // vertex ids present at construction
    std::size_t count_ = 0;
};

/// All current elementary free-face pairs with dim(free_face) >= min_dim,
/// ordered lexicographically by free face.
std::vector<CollapseStep> find_free_faces(const WorkingComplex& c, int min_dim);

/// Applies the step to c (checked). Thin wrapper over WorkingComplex::collapse.
void elementary_collapse(WorkingComplex& c, const CollapseStep& step);

/// Order-independent hash of a complex, taken over its maximal faces.
std::string complex_fingerprint(std::span<const Simplex> maximal_faces);
std::string complex_fingerprint(const CliqueComplex& c);

}  // namespace flagfold
