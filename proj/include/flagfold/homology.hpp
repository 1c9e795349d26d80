#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "flagfold/clique_complex.hpp"
#include "flagfold/simplex.hpp"

namespace flagfold {

/// Signed incidence matrix of the boundary map from d-faces to (d-1)-faces.
/// Rows and columns are indexed by the faces in lexicographic order.
struct BoundaryMatrix {
    std::vector<Simplex> rows;  // (d-1)-faces
    std::vector<Simplex> cols;  // d-faces
    std::vector<std::vector<std::int8_t>> entries;  // entries[i][j] in {-1,0,1}
};

BoundaryMatrix boundary_matrix(std::span<const Simplex> faces, int d);

/// Rank and invariant factors d1 | d2 | ... of an integer matrix. Computed
/// in 64-bit arithmetic with overflow detection; intermediate blowups fall
/// back to arbitrary precision transparently.
struct SnfResult {
    std::size_t rank = 0;
    std::vector<long long> factors;
};

SnfResult smith_normal_form(std::vector<std::vector<long long>> m);

/// Integer homology read off the Smith normal forms of the boundary maps:
/// betti_d = f_d - rank d_d - rank d_{d+1}, torsion_d = invariant factors
/// of d_{d+1} exceeding 1. When max_dim is finite, betti and torsion carry
/// exactly max_dim+1 entries (zero-padded beyond the complex dimension);
/// euler always comes from the full f-vector.
struct HomologyProfile {
    std::vector<long long> betti;
    std::vector<std::vector<long long>> torsion;
    long long euler = 0;

    bool operator==(const HomologyProfile&) const = default;
};

HomologyProfile homology_profile(std::span<const Simplex> faces, int max_dim = kUncappedDim);
HomologyProfile homology_profile(const CliqueComplex& c, int max_dim = kUncappedDim);

long long euler_characteristic(std::span<const Simplex> faces);
long long euler_characteristic(const CliqueComplex& c);

}  // namespace flagfold
