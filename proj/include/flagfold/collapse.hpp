#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "flagfold/decomposition.hpp"
#include "flagfold/working_complex.hpp"

namespace flagfold {

/// A replayable witness that a complex collapses to dimension at most k.
/// Replaying the steps in order, each free_face is a free face of its
/// coface at that moment; only faces of dimension >= k are ever removed.
struct CollapseCertificate {
    int k = 0;
    std::string fingerprint;  // of the initial complex's maximal faces
    std::vector<CollapseStep> steps;
    int final_dim = -1;
};

enum class CollapseStatus { Success, Failure };
enum class CollapseStrategy { Theorem, Greedy };

struct CollapseOutcome {
    CollapseStatus status = CollapseStatus::Failure;
    std::optional<CollapseCertificate> certificate;  // present on Success
    /// Present on Failure under the theorem strategy: a strongly connected,
    /// pure (k+1)-dimensional subcomplex whose minimum vertex degree is at
    /// least 2k+2. The witness shows the degree hypothesis fails, not that
    /// the complex is non-collapsible.
    std::optional<RelevantSubcomplex> witness;
};

/// Factors the collapse of the interval [sigma, tau] into elementary steps:
/// each face containing sigma but not the distinguished vertex w (the least
/// vertex of tau minus sigma) is paired with its join with w, by decreasing
/// dimension. Requires sigma to be a proper subface of tau.
std::vector<CollapseStep> expand_interval(const Simplex& sigma, const Simplex& tau);

/// Collapses a cone from the top down to below target_dim: every apex-free
/// face of dimension >= target_dim - 1 is paired with its apex join, by
/// decreasing dimension. The apex must be adjacent to every other vertex.
std::vector<CollapseStep> cone_collapse(const CliqueComplex& c, Vertex apex, int target_dim);

/// Steps, valid inside the link, whose replay leaves the link with
/// dimension <= k-1 and whose free faces all have dimension >= k-1.
/// The link must live on at most 2k+1 vertices. A link with a universal
/// vertex is collapsed as a cone; otherwise its 1-skeleton is a proper
/// subgraph of K_{2k+1} and the degree-condition machinery recurses at k-1.
std::vector<CollapseStep> collapse_link_to_dim(const CliqueComplex& link, int k);

/// Joins v into both sides of each step: (sigma, tau) -> (sigma+v, tau+v).
/// Rejects steps whose free face has dimension below min_free_dim or that
/// already contain v.
std::vector<CollapseStep> lift_steps(std::span<const CollapseStep> steps, Vertex v,
                                     int min_free_dim = 0);

/// Removes every face of dimension >= k+1 via elementary collapses at
/// dimensions >= k, when possible.
///
/// Theorem strategy: works one maximal relevant (k+1)-subcomplex at a time.
/// In each, it picks the least minimum-degree vertex v with degree <= 2k+1
/// (Failure with the subcomplex as witness when none exists), collapses the
/// link of v inside the flag closure, lifts the steps at v, replays them,
/// and re-decomposes the remaining facets.
///
/// Greedy strategy: repeatedly applies the highest-dimension available
/// free-face step with free face dimension >= k (ties broken
/// lexicographically); Failure carries no witness.
CollapseOutcome collapse_to_dim(const CliqueComplex& c, int k, CollapseStrategy strategy);

/// Greedy collapse over an explicit downward-closed face list. Used for
/// complexes that are not clique complexes.
CollapseOutcome collapse_faces_greedy(std::span<const Simplex> faces, int k);

struct VerifyResult {
    bool pass = false;
    int final_dim = -1;
    std::optional<std::size_t> failed_step;  // index of the first invalid step
    std::string error;                       // empty on pass
    std::vector<Simplex> final_faces;        // the replayed complex on pass
};

/// Replays a certificate from scratch, checking the fingerprint, the
/// free-face condition at every step, the per-step dimension bound, and
/// the recorded final dimension. Independent of the engine that produced
/// the certificate.
VerifyResult verify_certificate(const CliqueComplex& c, const CollapseCertificate& cert);
VerifyResult verify_certificate(std::span<const Simplex> faces, const CollapseCertificate& cert);

}  // namespace flagfold
