#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "borsuk/lpcore.hpp"

namespace borsuk {

/// Square matrix with entries in {-1, +1}.
class SignMatrix {
 public:
  /// Throws std::invalid_argument for a non-square matrix or an entry other than +-1.
  explicit SignMatrix(Eigen::MatrixXi entries);

  std::size_t order() const { return static_cast<std::size_t>(entries_.rows()); }
  const Eigen::MatrixXi& entries() const { return entries_; }
  int operator()(std::size_t i, std::size_t j) const {
    return entries_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }
  Matrix as_real() const { return entries_.cast<double>(); }

 private:
  Eigen::MatrixXi entries_;
};

/// True iff M * M^T = order * I, checked in 64-bit integer arithmetic.
/// Throws std::invalid_argument when M is not square or has an entry other than +-1.
bool is_hadamard(const Eigen::MatrixXi& M);
bool is_hadamard(const SignMatrix& M);

/// Sylvester's doubling construction, order 2^k. Throws std::invalid_argument for k > 20.
SignMatrix sylvester(int k);

/// The 4x4 Hadamard matrix whose columns are the cell normals of the 1 < p <= 2
/// partition: rows (1,-1,1,1), (1,1,-1,1), (1,1,1,-1), (-1,1,1,1).
SignMatrix paper_h4();

/// Known Hadamard matrix of the given order: Sylvester for powers of two, plus a
/// stored order-12 matrix (Paley type I, q = 11). std::nullopt otherwise.
std::optional<SignMatrix> known_hadamard(std::size_t order);

/// g = scale * S for a sign matrix S.
struct ScaledSign {
  SignMatrix signs;
  double scale;
};

/// Invertible linear map with its inverse computed once at construction.
class LinearMap {
 public:
  /// General matrix: LU with partial pivoting. Throws std::domain_error when the
  /// matrix is singular; records a warning when the condition number exceeds 1e12.
  static LinearMap from_matrix(const Matrix& m);
  /// scale * H for a Hadamard matrix H; inverse in closed form H^T / (scale * n).
  /// Throws std::invalid_argument when H is not Hadamard or scale <= 0.
  static LinearMap scaled_hadamard(const SignMatrix& H, double scale);
  static LinearMap identity(std::size_t n);
  static LinearMap block_diagonal(std::span<const LinearMap> blocks);

  /// c * g for c > 0.
  LinearMap scaled(double c) const;

  std::size_t dim() const { return static_cast<std::size_t>(matrix_.rows()); }
  const Matrix& matrix() const { return matrix_; }
  const Matrix& inverse() const { return inverse_; }
  Vector apply(const Vector& x) const { return matrix_ * x; }

  const std::optional<ScaledSign>& scale_exact() const { return scale_exact_; }
  /// Sizes of the diagonal blocks, leading block first. A single entry for an unstructured map.
  const std::vector<std::size_t>& block_sizes() const { return block_sizes_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

 private:
  LinearMap(Matrix m, Matrix inv) : matrix_(std::move(m)), inverse_(std::move(inv)) {}

  Matrix matrix_;
  Matrix inverse_;
  std::optional<ScaledSign> scale_exact_;
  std::vector<std::size_t> block_sizes_;
  std::vector<std::string> warnings_;
};

/// g_n from the Hadamard constructions, valid for 1 <= n <= 20 and 1 <= p <= 2.
///
/// n = 2^k gives n^(-1/p) H_n. Otherwise n = 2^k + t with 2^k the largest power of
/// two not exceeding n, and g_n = blockdiag(2^(-k/p) H_{2^k}, g_t). g_1 = (1).
LinearMap build_g(int n, const PNorm& nm);

/// blockdiag(I_j, (4k)^(-1/p) H_4k) in dimension 4k + j, 0 <= j < 4.
/// Throws std::invalid_argument unless H_4k is a Hadamard matrix of order 4k.
LinearMap build_g_4kj(int k, int j, const PNorm& nm, const SignMatrix& H4k);

/// Reduced fraction num/den with den > 0.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d = 1);
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Rational&, const Rational&) = default;
};

/// Certificate values of g = n^(-1/p) H for p in {1, 2, inf}, computed entirely in
/// integer arithmetic. For p = 1 and p = inf the values are r and the dual margin
/// themselves (power 1); for p = 2 they are r^2 and margin^2 (power 2).
struct ExactCertificate {
  int power = 1;
  Rational r_power;
  Rational dual_power;
};

/// Throws std::invalid_argument when p is not 1, 2 or inf, when H is not Hadamard,
/// or when the order exceeds 20.
ExactCertificate exact_hadamard_certificate(const SignMatrix& H, const PNorm& nm);

}  // namespace borsuk
