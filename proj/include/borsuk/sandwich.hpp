#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "borsuk/hadamard.hpp"
#include "borsuk/lpcore.hpp"

namespace borsuk {

/// Witness for C_{n,p} ⊆ g C_n ⊆ r C_{n,p}.
///
/// r is the exact maximum of ||g v||_p over the 2^n cube vertices. The left
/// inclusion holds iff every row of g^{-1} has q-norm at most 1; dual_margin is
/// the largest such row norm.
struct SandwichCertificate {
  LinearMap g;
  PNorm nm;
  double r = 0.0;
  double dual_margin = 0.0;
  /// Lexicographically smallest maximizing sign vector (+1 ordered before -1).
  std::vector<int> argmax_vertex;
  /// Number of vertices attaining r within a relative 1e-12.
  std::uint64_t tight_vertices = 0;

  bool valid() const { return dual_margin <= 1.0 + kTolerance; }
};

/// Enumerates all 2^n sign vectors in Gray-code order (one column update per step).
/// Throws std::invalid_argument for n > 20.
SandwichCertificate bm_upper_certificate(const LinearMap& g, const PNorm& nm);

/// max_i ||row_i(g^{-1})||_q. A value <= 1 certifies C_{n,p} ⊆ g C_n.
double dual_feasibility(const LinearMap& g, const PNorm& nm);

/// 2^(1/2 - 1/p) sqrt(n), the lower bound on d_BM(C_n, C_{n,p}) for 1 <= p < 2.
/// Throws std::invalid_argument outside that range or for n < 1.
double bm_lower_bound(int n, const PNorm& nm);

struct SandwichReport {
  /// dual_feasibility(g): C_{n,p} ⊆ left_margin * g C_n, tight.
  double left_margin = 0.0;
  double r = 0.0;
  /// Rows of g^{-1} whose q-norm attains left_margin (relative 1e-12); the
  /// corresponding facet pairs of g C_n touch the p-ball when left_margin = 1.
  std::vector<std::size_t> tight_directions;
  std::vector<int> argmax_vertex;
  std::uint64_t tight_vertices = 0;

  /// Largest ||g^{-1} x||_inf over the sampled points of C_{n,p}, including
  /// the support maximizers of every row of g^{-1}.
  double sampled_max = 0.0;
  std::size_t samples = 0;

  bool left_inclusion() const { return left_margin <= 1.0 + kTolerance; }
  /// Sampling and the analytic predicate give the same verdict on C_{n,p} ⊆ g C_n.
  bool sampling_agrees() const { return (sampled_max <= 1.0 + kTolerance) == left_inclusion(); }
};

/// Default sample count for the membership cross-check.
inline constexpr std::size_t kSandwichSamples = 100'000;

SandwichReport check_sandwich(const LinearMap& g, const PNorm& nm, std::size_t samples = kSandwichSamples,
                              std::uint64_t seed = 0);

}  // namespace borsuk
