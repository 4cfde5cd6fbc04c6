#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace borsuk {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Relative tolerance for geometric membership and inclusion predicates.
inline constexpr double kTolerance = 1e-9;

/// Exponent of an l_p norm, p in [1, inf], together with its dual exponent.
///
/// p = inf is a distinguished state rather than a sentinel double; comparisons
/// on p are exact against the value that was entered.
class PNorm {
 public:
  /// Throws std::invalid_argument unless 1 <= p < inf (use infinity() for inf).
  explicit PNorm(double p);
  static PNorm infinity() { return PNorm(); }

  bool is_infinite() const { return infinite_; }
  /// The finite exponent. Undefined meaning when is_infinite().
  double p() const { return p_; }
  /// 1/p with 1/inf = 0.
  double inv_p() const { return infinite_ ? 0.0 : 1.0 / p_; }

  /// Dual exponent q with 1/p + 1/q = 1 (q = inf for p = 1, q = 1 for p = inf).
  PNorm dual() const;

  bool is_one() const { return !infinite_ && p_ == 1.0; }
  bool is_two() const { return !infinite_ && p_ == 2.0; }

  /// "inf" or the shortest round-trip decimal spelling of p.
  std::string to_string() const;

  friend bool operator==(const PNorm& a, const PNorm& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.p_ == b.p_);
  }

 private:
  PNorm() : p_(0.0), infinite_(true) {}
  double p_;
  bool infinite_;
};

/// Parses "inf" or a decimal number >= 1. Throws std::invalid_argument.
PNorm parse_pnorm(const std::string& text);

/// Finite list of points in R^n, stored one point per row.
class PointCloud {
 public:
  using Storage = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

  explicit PointCloud(std::size_t dim);
  /// Rows are points. Throws if dim == 0 or a coordinate is not finite.
  explicit PointCloud(Storage points);
  PointCloud(std::size_t dim, const std::vector<Vector>& points);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return static_cast<std::size_t>(points_.rows()); }
  bool empty() const { return size() == 0; }

  Vector point(std::size_t i) const { return points_.row(static_cast<Eigen::Index>(i)).transpose(); }
  const Storage& data() const { return points_; }

  void push_back(const Vector& x);
  /// Subset of the cloud in the given index order.
  PointCloud subset(std::span<const std::size_t> indices) const;
  /// s * X + t, applied pointwise.
  PointCloud transformed(double scale, const Vector& translation) const;

 private:
  std::size_t dim_;
  Storage points_;
};

/// A pair of points realizing the diameter. Indices are equal when |X| <= 1.
struct DiameterWitness {
  double value = 0.0;
  std::size_t index_a = 0;
  std::size_t index_b = 0;
};

struct FunctionalRange {
  double min = 0.0;
  double max = 0.0;
  double mid = 0.0;
  double width() const { return max - min; }
};

double pnorm(const Vector& x, const PNorm& nm);
double pdistance(const Vector& x, const Vector& y, const PNorm& nm);

/// Exact O(|X|^2) diameter. Ties keep the lexicographically first pair (i < j).
DiameterWitness diameter(const PointCloud& X, const PNorm& nm);

/// Support function of the unit p-ball, h(u) = ||u||_q.
double support(const Vector& u, const PNorm& nm);

/// A point of the unit p-sphere maximizing <x, u>; x_i ~ sign(u_i)|u_i|^(q-1).
/// Returns the zero vector for u = 0.
Vector support_maximizer(const Vector& u, const PNorm& nm);

/// min / max / midpoint of <x, u> over X. Throws std::invalid_argument on an empty cloud.
FunctionalRange width_functional(const PointCloud& X, const Vector& u);

/// Random direction on the Euclidean sphere rescaled to unit p-norm.
Vector sample_sphere(std::size_t n, const PNorm& nm, std::mt19937_64& rng);

/// Uniform sample from the unit p-ball (generalized-Gaussian construction).
Vector sample_ball(std::size_t n, const PNorm& nm, std::mt19937_64& rng);

/// `count` points drawn uniformly from the unit p-ball.
PointCloud sample_ball_cloud(std::size_t n, std::size_t count, const PNorm& nm, std::uint64_t seed);

/// Worker count for internal parallel loops: hardware concurrency, capped by
/// the BORSUK_THREADS environment variable when it is set to a positive integer.
unsigned worker_count();

}  // namespace borsuk
