#include <gtest/gtest.h>

#include <cmath>

#include "borsuk/hadamard.hpp"

using namespace borsuk;

namespace {

// Oracle: entry (i, j) of the Sylvester matrix is (-1)^popcount(i & j).
int sylvester_entry(int i, int j) { return (__builtin_popcount(static_cast<unsigned>(i & j)) % 2) ? -1 : 1; }

Eigen::MatrixXi int_matrix(std::initializer_list<std::initializer_list<int>> rows) {
  Eigen::MatrixXi m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& r : rows) {
    Eigen::Index j = 0;
    for (int v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

}  // namespace

TEST(Sylvester, SmallOrders) {
  EXPECT_EQ(sylvester(0).entries(), int_matrix({{1}}));
  EXPECT_EQ(sylvester(1).entries(), int_matrix({{1, 1}, {1, -1}}));
  const SignMatrix H4 = sylvester(2);
  EXPECT_EQ(H4.order(), 4u);
  EXPECT_EQ((H4.entries() * H4.entries().transpose()).eval(), (4 * Eigen::MatrixXi::Identity(4, 4)).eval());
}

TEST(Sylvester, MatchesBitParityFormulaAndIsHadamard) {
  for (int k = 0; k <= 6; ++k) {
    const SignMatrix H = sylvester(k);
    const int n = 1 << k;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) ASSERT_EQ(H.entries()(i, j), sylvester_entry(i, j));
    EXPECT_TRUE(is_hadamard(H)) << k;
    EXPECT_EQ((H.entries() * H.entries().transpose()).eval(), (n * Eigen::MatrixXi::Identity(n, n)).eval());
  }
}

TEST(Sylvester, SizeGuard) {
  EXPECT_THROW(sylvester(21), std::invalid_argument);
  EXPECT_THROW(sylvester(-1), std::invalid_argument);
}

TEST(IsHadamard, Examples) {
  EXPECT_TRUE(is_hadamard(sylvester(3)));
  EXPECT_FALSE(is_hadamard(int_matrix({{1, 1}, {1, 1}})));
  EXPECT_TRUE(is_hadamard(paper_h4()));
  EXPECT_THROW(is_hadamard(int_matrix({{1, 0}, {1, -1}})), std::invalid_argument);
  EXPECT_FALSE(is_hadamard(int_matrix({{1, 1, 1}, {1, -1, 1}, {1, 1, -1}})));
  EXPECT_THROW(SignMatrix(int_matrix({{2}})), std::invalid_argument);
}

TEST(PaperH4, RowsAndColumns) {
  const SignMatrix P = paper_h4();
  const Eigen::MatrixXi& H = P.entries();
  EXPECT_EQ(H, int_matrix({{1, -1, 1, 1}, {1, 1, -1, 1}, {1, 1, 1, -1}, {-1, 1, 1, 1}}));
  Eigen::VectorXi col1(4);
  col1 << 1, 1, 1, -1;
  EXPECT_EQ(Eigen::VectorXi(H.col(0)), col1);
  EXPECT_EQ((H * H.transpose()).eval(), (4 * Eigen::MatrixXi::Identity(4, 4)).eval());
}

TEST(KnownHadamard, Orders) {
  for (std::size_t n : {1u, 2u, 4u, 8u, 12u, 16u}) {
    auto H = known_hadamard(n);
    ASSERT_TRUE(H.has_value()) << n;
    EXPECT_EQ(H->order(), n);
    EXPECT_TRUE(is_hadamard(*H));
  }
  EXPECT_FALSE(known_hadamard(3).has_value());
  EXPECT_FALSE(known_hadamard(20).has_value());
}

TEST(BuildG, PowerOfTwoIsScaledSylvester) {
  const Matrix g = build_g(4, PNorm(1.0)).matrix();
  EXPECT_TRUE(g.isApprox(0.25 * sylvester(2).as_real(), 1e-15));
  for (double p : {1.0, 1.5, 2.0}) {
    for (int n : {2, 4, 8, 16}) {
      const LinearMap g = build_g(n, PNorm(p));
      EXPECT_TRUE(g.matrix().isApprox(std::pow(n, -1.0 / p) * sylvester(static_cast<int>(std::log2(n))).as_real()));
      ASSERT_TRUE(g.scale_exact().has_value());
      // (n^{-1/p} H)^{-1} = n^{1/p - 1} H^T
      const Matrix expected_inv = std::pow(n, 1.0 / p - 1.0) * g.scale_exact()->signs.as_real().transpose();
      EXPECT_LE((g.inverse() - expected_inv).cwiseAbs().maxCoeff(), 1e-14);
      EXPECT_LE((g.matrix() * g.inverse() - Matrix::Identity(n, n)).cwiseAbs().maxCoeff(), 1e-12);
    }
  }
}

TEST(BuildG, BlockFormForN3) {
  for (double p : {1.0, 1.25, 2.0}) {
    const Matrix g = build_g(3, PNorm(p)).matrix();
    Matrix expected = Matrix::Zero(3, 3);
    expected.block(0, 0, 2, 2) = std::pow(2.0, -1.0 / p) * sylvester(1).as_real();
    expected(2, 2) = 1.0;
    EXPECT_LE((g - expected).cwiseAbs().maxCoeff(), 1e-15);
  }
  EXPECT_EQ(build_g(1, PNorm(1.5)).matrix(), Matrix::Identity(1, 1));
}

TEST(BuildG, LeadingBlockRestrictsToSmallerBuild) {
  for (double p : {1.0, 1.5, 2.0}) {
    for (int n = 2; n <= 20; ++n) {
      const LinearMap g = build_g(n, PNorm(p));
      const auto& sizes = g.block_sizes();
      std::size_t total = 0;
      for (auto s : sizes) total += s;
      EXPECT_EQ(total, static_cast<std::size_t>(n));
      const int lead = static_cast<int>(sizes.front());
      EXPECT_EQ(lead, 1 << static_cast<int>(std::floor(std::log2(n))));
      EXPECT_LE((g.matrix().block(0, 0, lead, lead) - build_g(lead, PNorm(p)).matrix()).cwiseAbs().maxCoeff(),
                1e-15);
      if (lead == n) continue;
      EXPECT_LE((g.matrix().block(lead, lead, n - lead, n - lead) - build_g(n - lead, PNorm(p)).matrix())
                    .cwiseAbs()
                    .maxCoeff(),
                1e-15);
      EXPECT_LE((g.matrix() * g.inverse() - Matrix::Identity(n, n)).cwiseAbs().maxCoeff(), 1e-12);
    }
  }
}

TEST(BuildG, RangeGuards) {
  EXPECT_THROW(build_g(0, PNorm(1.0)), std::invalid_argument);
  EXPECT_THROW(build_g(21, PNorm(1.0)), std::invalid_argument);
  EXPECT_THROW(build_g(4, PNorm(2.5)), std::invalid_argument);
  EXPECT_THROW(build_g(4, PNorm::infinity()), std::invalid_argument);
}

TEST(BuildG4kj, Examples) {
  const Matrix g = build_g_4kj(1, 1, PNorm(1.0), sylvester(2)).matrix();
  Matrix expected = Matrix::Zero(5, 5);
  expected(0, 0) = 1.0;
  expected.block(1, 1, 4, 4) = 0.25 * sylvester(2).as_real();
  EXPECT_LE((g - expected).cwiseAbs().maxCoeff(), 1e-15);

  for (double p : {1.0, 1.5, 2.0}) {
    EXPECT_LE((build_g_4kj(1, 0, PNorm(p), sylvester(2)).matrix() - build_g(4, PNorm(p)).matrix()).cwiseAbs().maxCoeff(),
              1e-15);
  }
  EXPECT_THROW(build_g_4kj(1, 0, PNorm(1.0), SignMatrix(Eigen::MatrixXi::Ones(4, 4))), std::invalid_argument);
  EXPECT_THROW(build_g_4kj(2, 0, PNorm(1.0), sylvester(2)), std::invalid_argument);
  EXPECT_THROW(build_g_4kj(1, 4, PNorm(1.0), sylvester(2)), std::invalid_argument);
  const LinearMap g12 = build_g_4kj(3, 2, PNorm(1.5), *known_hadamard(12));
  EXPECT_EQ(g12.dim(), 14u);
}

TEST(LinearMap, FromMatrixAndWarnings) {
  Matrix m(2, 2);
  m << 2, 1, 1, 1;
  const LinearMap g = LinearMap::from_matrix(m);
  EXPECT_LE((g.inverse() * m - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_TRUE(g.warnings().empty());
  EXPECT_THROW(LinearMap::from_matrix(Matrix::Zero(2, 2)), std::domain_error);
  Matrix bad(2, 2);
  bad << 1, 1, 1, 1 + 1e-14;
  EXPECT_FALSE(LinearMap::from_matrix(bad).warnings().empty());
  const LinearMap s = LinearMap::identity(3).scaled(2.0);
  EXPECT_EQ(s.matrix(), 2.0 * Matrix::Identity(3, 3));
  EXPECT_EQ(s.inverse(), 0.5 * Matrix::Identity(3, 3));
}

TEST(Rational, Reduces) {
  EXPECT_EQ(Rational(6, 4), Rational(3, 2));
  EXPECT_EQ(Rational(-6, -4), Rational(3, 2));
  EXPECT_EQ(Rational(3, -6), Rational(-1, 2));
  EXPECT_THROW(Rational(1, 0), std::invalid_argument);
}

TEST(ExactCertificate, SylvesterValues) {
  // p = 1: r = max ||Hv||_1 / n; p = 2: r^2 = n; p = inf: r = n.
  for (int k = 0; k <= 4; ++k) {
    const int n = 1 << k;
    const SignMatrix H = sylvester(k);
    const auto c2 = exact_hadamard_certificate(H, PNorm(2.0));
    EXPECT_EQ(c2.power, 2);
    EXPECT_EQ(c2.r_power, Rational(n));
    EXPECT_EQ(c2.dual_power, Rational(1));
    const auto c1 = exact_hadamard_certificate(H, PNorm(1.0));
    EXPECT_EQ(c1.dual_power, Rational(1));
    EXPECT_LE(c1.r_power.to_double(), std::sqrt(n) + 1e-12);
    const auto ci = exact_hadamard_certificate(H, PNorm::infinity());
    EXPECT_EQ(ci.r_power, Rational(n));
  }
  EXPECT_EQ(exact_hadamard_certificate(sylvester(2), PNorm(1.0)).r_power, Rational(2));
  EXPECT_EQ(exact_hadamard_certificate(paper_h4(), PNorm(1.0)).r_power, Rational(2));
  EXPECT_THROW(exact_hadamard_certificate(sylvester(2), PNorm(1.5)), std::invalid_argument);
}

TEST(ExactCertificate, BruteForceOracleP1) {
  // Independent enumeration over all sign vectors in integer arithmetic.
  for (int k = 1; k <= 3; ++k) {
    const SignMatrix H = sylvester(k);
    const int n = 1 << k;
    long best = 0;
    for (int mask = 0; mask < (1 << n); ++mask) {
      long s = 0;
      for (int i = 0; i < n; ++i) {
        long row = 0;
        for (int j = 0; j < n; ++j) row += H.entries()(i, j) * ((mask >> j & 1) ? -1 : 1);
        s += std::abs(row);
      }
      best = std::max(best, s);
    }
    EXPECT_EQ(exact_hadamard_certificate(H, PNorm(1.0)).r_power, Rational(best, n));
  }
}
