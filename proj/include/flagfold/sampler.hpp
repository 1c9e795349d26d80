#pragma once

#include <cstdint>

#include "flagfold/clique_complex.hpp"

namespace flagfold {

/// RNG scheme identifier recorded alongside experiment output.
inline constexpr const char* kRngScheme = "splitmix64-v1";

/// The splitmix64 mixing function.
std::uint64_t splitmix64_mix(std::uint64_t x);

/// Sequential splitmix64 stream.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    /// Uniform in [0, 1).
    double next_double();

private:
    std::uint64_t state_;
};

/// Child seed for trial `index`, independent of scheduling: the same
/// (master, index) always yields the same child.
std::uint64_t derive_child_seed(std::uint64_t master, std::uint64_t index);

struct SamplerConfig {
    Vertex n = 1;
    double p = 0.0;
    std::uint64_t seed = 0;
};

/// G(n,p): the C(n,2) candidate edges are visited in lexicographic order
/// with one RNG draw each, so identical configs give identical graphs and
/// the samples at p1 <= p2 are nested for a fixed seed.
Graph sample_gnp(const SamplerConfig& cfg);

/// X(n,p): the clique complex of a G(n,p) sample.
CliqueComplex sample_xnp(const SamplerConfig& cfg, int dim_cap = kUncappedDim,
                         std::size_t face_budget = kDefaultFaceBudget);

/// p = n^{-alpha}.
double alpha_to_p(Vertex n, double alpha);

}  // namespace flagfold
