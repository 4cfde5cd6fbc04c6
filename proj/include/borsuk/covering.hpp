#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "borsuk/lpcore.hpp"

namespace borsuk {

/// Claim: C_{n,p} ⊆ ∪_i (lambda * C_{n,p} + centers[i]).
struct CoveringSpec {
  std::size_t dim = 0;
  PNorm nm{1.0};
  double lambda = 1.0;
  std::vector<Vector> centers;
};

struct CoverReport {
  bool covered = false;
  /// min over tested x of (lambda - min_i ||x - c_i||_p).
  double worst_margin = 0.0;
  Vector witness;
  std::size_t samples_used = 0;
};

/// The 2n translates with lambda = ((n-1)/n)^(1/p) and centers +-(1/n)^(1/p) e_i,
/// centers ordered +e_1..+e_n then -e_1..-e_n.
/// Throws std::invalid_argument unless n >= 2 and 1 <= p <= 2.
CoveringSpec lemma5_spec(std::size_t n, const PNorm& nm);

inline constexpr std::size_t kDefaultCoverSamples = 1'000'000;

/// Checks the covering claim on a deterministic witness set and on sampled points.
///
/// Witnesses (tested first, so ties resolve to them): the diagonal boundary point
/// n^(-1/p)(1,...,1) and its sign orbit, the points +-e_i, and the origin. Then
/// n_samples boundary points (Gaussian directions rescaled to unit p-norm) and a
/// lattice of interior points. The report keeps the lowest-index point of worst margin.
CoverReport verify_covering(const CoveringSpec& spec, std::size_t n_samples = kDefaultCoverSamples,
                            std::uint64_t seed = 0, double tolerance = kTolerance);

/// Smallest shrink factor (to within epsilon) for which verify_covering passes with
/// the given centers, found by bisection on [0, 1].
/// Throws std::invalid_argument for empty centers, std::runtime_error when lambda = 1 fails.
double gamma_estimate(std::size_t n, const PNorm& nm, const std::vector<Vector>& centers, double epsilon,
                      std::size_t n_samples = kDefaultCoverSamples, std::uint64_t seed = 0);

}  // namespace borsuk
