#include "flagfold/sampler.hpp"

#include <cmath>
#include <stdexcept>

namespace flagfold {

std::uint64_t splitmix64_mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

std::uint64_t SplitMix64::next() {
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

double SplitMix64::next_double() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

std::uint64_t derive_child_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64_mix(master ^ splitmix64_mix(index + 0x715eed5eed5eed51ull));
}

namespace {

void validate(const SamplerConfig& cfg) {
    if (cfg.n < 1) throw std::invalid_argument("sampler needs at least one vertex");
    if (!(cfg.p >= 0.0 && cfg.p <= 1.0))
        throw std::invalid_argument("edge probability must lie in [0, 1]");
}

}  // namespace

Graph sample_gnp(const SamplerConfig& cfg) {
    validate(cfg);
    SplitMix64 rng(cfg.seed);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < cfg.n; ++u)
        for (Vertex v = u + 1; v < cfg.n; ++v)
            if (rng.next_double() < cfg.p) edges.emplace_back(u, v);
    return Graph::from_sorted_edges(cfg.n, edges);
}

CliqueComplex sample_xnp(const SamplerConfig& cfg, int dim_cap, std::size_t face_budget) {
    return clique_complex(sample_gnp(cfg), dim_cap, face_budget);
}

double alpha_to_p(Vertex n, double alpha) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (alpha <= 0) throw std::invalid_argument("alpha must be positive");
    return std::pow(static_cast<double>(n), -alpha);
}

}  // namespace flagfold
