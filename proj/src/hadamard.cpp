#include "borsuk/hadamard.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace borsuk {

namespace {

void require_sign_entries(const Eigen::MatrixXi& M) {
  if (M.rows() != M.cols() || M.rows() == 0) {
    throw std::invalid_argument("sign matrix must be square and non-empty");
  }
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    for (Eigen::Index j = 0; j < M.cols(); ++j) {
      const int v = M(i, j);
      if (v != 1 && v != -1) {
        throw std::invalid_argument("sign matrix entry (" + std::to_string(i) + "," + std::to_string(j) +
                                    ") is " + std::to_string(v) + ", expected +1 or -1");
      }
    }
  }
}

// Paley type I construction for q = 11, stored as data.
constexpr std::array<const char*, 12> kPaley12 = {
    "++++++++++++", "-++-+++---+-", "--++-+++---+", "-+-++-+++---",
    "--+-++-+++--", "---+-++-+++-", "----+-++-+++", "-+---+-++-++",
    "-++---+-++-+", "-+++---+-++-", "--+++---+-++", "-+-+++---+-+",
};

}  // namespace

SignMatrix::SignMatrix(Eigen::MatrixXi entries) : entries_(std::move(entries)) { require_sign_entries(entries_); }

bool is_hadamard(const Eigen::MatrixXi& M) {
  require_sign_entries(M);
  const Eigen::Index n = M.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j < n; ++j) {
      std::int64_t dot = 0;
      for (Eigen::Index c = 0; c < n; ++c) dot += static_cast<std::int64_t>(M(i, c)) * M(j, c);
      if (dot != (i == j ? n : 0)) return false;
    }
  }
  return true;
}

bool is_hadamard(const SignMatrix& M) { return is_hadamard(M.entries()); }

SignMatrix sylvester(int k) {
  if (k < 0 || k > 20) throw std::invalid_argument("sylvester order 2^k requires 0 <= k <= 20");
  Eigen::MatrixXi H(1, 1);
  H(0, 0) = 1;
  for (int step = 0; step < k; ++step) {
    const Eigen::Index m = H.rows();
    Eigen::MatrixXi next(2 * m, 2 * m);
    next.topLeftCorner(m, m) = H;
    next.topRightCorner(m, m) = H;
    next.bottomLeftCorner(m, m) = H;
    next.bottomRightCorner(m, m) = -H;
    H = std::move(next);
  }
  return SignMatrix(std::move(H));
}

SignMatrix paper_h4() {
  Eigen::MatrixXi H(4, 4);
  H << 1, -1, 1, 1,
       1, 1, -1, 1,
       1, 1, 1, -1,
      -1, 1, 1, 1;
  return SignMatrix(std::move(H));
}

std::optional<SignMatrix> known_hadamard(std::size_t order) {
  if (order == 0) return std::nullopt;
  if (std::has_single_bit(order)) {
    const int k = std::countr_zero(order);
    if (k > 20) return std::nullopt;
    return sylvester(k);
  }
  if (order == 12) {
    Eigen::MatrixXi H(12, 12);
    for (int i = 0; i < 12; ++i) {
      for (int j = 0; j < 12; ++j) H(i, j) = kPaley12[i][j] == '+' ? 1 : -1;
    }
    return SignMatrix(std::move(H));
  }
  return std::nullopt;
}

LinearMap LinearMap::from_matrix(const Matrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0) throw std::invalid_argument("linear map must be square and non-empty");
  if (!m.allFinite()) throw std::invalid_argument("linear map has non-finite entries");
  Eigen::JacobiSVD<Matrix> svd(m);
  const auto& sv = svd.singularValues();
  const double smax = sv(0);
  const double smin = sv(sv.size() - 1);
  if (smin == 0.0 || smin <= smax * std::numeric_limits<double>::epsilon()) {
    throw std::domain_error("linear map is singular");
  }
  Eigen::PartialPivLU<Matrix> lu(m);
  LinearMap g(m, lu.inverse());
  g.block_sizes_ = {static_cast<std::size_t>(m.rows())};
  const double cond = smax / smin;
  if (cond > 1e12) {
    g.warnings_.push_back("ill-conditioned linear map (condition number " + std::to_string(cond) + ")");
  }
  return g;
}

LinearMap LinearMap::scaled_hadamard(const SignMatrix& H, double scale) {
  if (!(scale > 0.0) || !std::isfinite(scale)) throw std::invalid_argument("scale must be positive and finite");
  if (!is_hadamard(H)) throw std::invalid_argument("matrix is not a Hadamard matrix");
  const double n = static_cast<double>(H.order());
  Matrix real = H.as_real();
  LinearMap g(scale * real, real.transpose() / (scale * n));
  g.scale_exact_ = ScaledSign{H, scale};
  g.block_sizes_ = {H.order()};
  return g;
}

LinearMap LinearMap::identity(std::size_t n) {
  if (n == 0) throw std::invalid_argument("identity dimension must be positive");
  const auto dim = static_cast<Eigen::Index>(n);
  LinearMap g(Matrix::Identity(dim, dim), Matrix::Identity(dim, dim));
  g.block_sizes_ = {n};
  if (n == 1) g.scale_exact_ = ScaledSign{SignMatrix(Eigen::MatrixXi::Ones(1, 1)), 1.0};
  return g;
}

LinearMap LinearMap::block_diagonal(std::span<const LinearMap> blocks) {
  if (blocks.empty()) throw std::invalid_argument("block_diagonal needs at least one block");
  if (blocks.size() == 1) return blocks.front();
  Eigen::Index total = 0;
  for (const auto& b : blocks) total += static_cast<Eigen::Index>(b.dim());
  Matrix m = Matrix::Zero(total, total);
  Matrix inv = Matrix::Zero(total, total);
  std::vector<std::size_t> sizes;
  std::vector<std::string> warnings;
  Eigen::Index offset = 0;
  for (const auto& b : blocks) {
    const auto d = static_cast<Eigen::Index>(b.dim());
    m.block(offset, offset, d, d) = b.matrix();
    inv.block(offset, offset, d, d) = b.inverse();
    offset += d;
    sizes.push_back(b.dim());
    warnings.insert(warnings.end(), b.warnings().begin(), b.warnings().end());
  }
  LinearMap g(std::move(m), std::move(inv));
  g.block_sizes_ = std::move(sizes);
  g.warnings_ = std::move(warnings);
  return g;
}

LinearMap LinearMap::scaled(double c) const {
  if (!(c > 0.0) || !std::isfinite(c)) throw std::invalid_argument("scale must be positive and finite");
  LinearMap g(c * matrix_, inverse_ / c);
  if (scale_exact_) g.scale_exact_ = ScaledSign{scale_exact_->signs, c * scale_exact_->scale};
  g.block_sizes_ = block_sizes_;
  g.warnings_ = warnings_;
  return g;
}

LinearMap build_g(int n, const PNorm& nm) {
  if (n < 1 || n > 20) throw std::invalid_argument("build_g requires 1 <= n <= 20");
  if (nm.is_infinite() || nm.p() > 2.0) throw std::invalid_argument("build_g requires 1 <= p <= 2");
  const auto un = static_cast<unsigned>(n);
  if (std::has_single_bit(un)) {
    const int k = std::countr_zero(un);
    return LinearMap::scaled_hadamard(sylvester(k), std::pow(static_cast<double>(n), -nm.inv_p()));
  }
  const int head = static_cast<int>(std::bit_floor(un));
  const std::array<LinearMap, 2> blocks = {build_g(head, nm), build_g(n - head, nm)};
  return LinearMap::block_diagonal(blocks);
}

LinearMap build_g_4kj(int k, int j, const PNorm& nm, const SignMatrix& H4k) {
  if (k < 1) throw std::invalid_argument("build_g_4kj requires k >= 1");
  if (j < 0 || j > 3) throw std::invalid_argument("build_g_4kj requires 0 <= j < 4");
  if (H4k.order() != static_cast<std::size_t>(4 * k)) {
    throw std::invalid_argument("Hadamard block has order " + std::to_string(H4k.order()) + ", expected " +
                                std::to_string(4 * k));
  }
  LinearMap hblock = LinearMap::scaled_hadamard(H4k, std::pow(4.0 * k, -nm.inv_p()));
  if (j == 0) return hblock;
  const std::array<LinearMap, 2> blocks = {LinearMap::identity(static_cast<std::size_t>(j)), std::move(hblock)};
  return LinearMap::block_diagonal(blocks);
}

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw std::invalid_argument("zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const std::int64_t g = std::gcd(n < 0 ? -n : n, d);
  num = g ? n / g : n;
  den = g ? d / g : d;
}

ExactCertificate exact_hadamard_certificate(const SignMatrix& H, const PNorm& nm) {
  if (!(nm.is_one() || nm.is_two() || nm.is_infinite())) {
    throw std::invalid_argument("exact certificates exist only for p in {1, 2, inf}");
  }
  if (H.order() > 20) throw std::invalid_argument("exact certificate enumeration requires order <= 20");
  if (!is_hadamard(H)) throw std::invalid_argument("matrix is not a Hadamard matrix");
  const auto n = static_cast<Eigen::Index>(H.order());
  const Eigen::MatrixXi& E = H.entries();

  // Gray-code walk over sign vectors, w = H v kept in integers.
  std::vector<std::int64_t> w(static_cast<std::size_t>(n), 0);
  std::vector<int> v(static_cast<std::size_t>(n), 1);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index c = 0; c < n; ++c) w[static_cast<std::size_t>(i)] += E(i, c);
  }
  auto objective = [&]() {
    std::int64_t acc = 0;
    for (auto x : w) {
      if (nm.is_one()) acc += x < 0 ? -x : x;
      else if (nm.is_two()) acc += x * x;
      else acc = std::max(acc, x < 0 ? -x : x);
    }
    return acc;
  };
  std::int64_t best = objective();
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t step = 1; step < count; ++step) {
    const int b = std::countr_zero(step);
    const int old = v[static_cast<std::size_t>(b)];
    v[static_cast<std::size_t>(b)] = -old;
    for (Eigen::Index i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] -= 2 * old * E(i, b);
    best = std::max(best, objective());
  }

  // Rows of g^{-1} are columns of H scaled by n^(1/p - 1).
  std::int64_t dual = 0;
  for (Eigen::Index c = 0; c < n; ++c) {
    std::int64_t acc = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
      const std::int64_t e = E(i, c);
      if (nm.is_one()) acc = std::max(acc, e < 0 ? -e : e);
      else if (nm.is_two()) acc += e * e;
      else acc += e < 0 ? -e : e;
    }
    dual = std::max(dual, acc);
  }

  ExactCertificate cert;
  if (nm.is_one()) {
    cert.power = 1;
    cert.r_power = Rational(best, n);
    cert.dual_power = Rational(dual, 1);
  } else if (nm.is_two()) {
    cert.power = 2;
    cert.r_power = Rational(best, n);
    cert.dual_power = Rational(dual, n);
  } else {
    cert.power = 1;
    cert.r_power = Rational(best, 1);
    cert.dual_power = Rational(dual, n);
  }
  return cert;
}

}  // namespace borsuk
