#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "borsuk/lpcore.hpp"

using namespace borsuk;

namespace {

Vector vec(std::initializer_list<double> xs) {
  Vector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v[i++] = x;
  return v;
}

Vector unit(int n, int i, double sign = 1.0) {
  Vector e = Vector::Zero(n);
  e[i] = sign;
  return e;
}

PointCloud cross_polytope(int n) {
  PointCloud X(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    X.push_back(unit(n, i));
    X.push_back(unit(n, i, -1.0));
  }
  return X;
}

PointCloud cube_vertices(int n) {
  PointCloud X(static_cast<std::size_t>(n));
  for (int mask = 0; mask < (1 << n); ++mask) {
    Vector v(n);
    for (int b = 0; b < n; ++b) v[b] = (mask >> b & 1) ? -1.0 : 1.0;
    X.push_back(v);
  }
  return X;
}

// Independent oracle: textbook formula, no scaling or fast paths.
double naive_pnorm(const Vector& x, double p) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < x.size(); ++i) s += std::pow(std::abs(x[i]), p);
  return std::pow(s, 1.0 / p);
}

double naive_diameter(const PointCloud& X, double p) {
  double best = 0.0;
  for (std::size_t i = 0; i < X.size(); ++i) {
    for (std::size_t j = 0; j < X.size(); ++j) {
      const Vector d = X.point(i) - X.point(j);
      best = std::max(best, std::isinf(p) ? d.cwiseAbs().maxCoeff() : naive_pnorm(d, p));
    }
  }
  return best;
}

const std::vector<double> kPs = {1.0, 1.25, 1.5, 2.0, 3.0, 7.5};

}  // namespace

TEST(PNorm, DualExponents) {
  EXPECT_TRUE(PNorm(1.0).dual().is_infinite());
  EXPECT_TRUE(PNorm::infinity().dual().is_one());
  EXPECT_DOUBLE_EQ(PNorm(2.0).dual().p(), 2.0);
  EXPECT_DOUBLE_EQ(PNorm(1.5).dual().p(), 3.0);
  for (double p : kPs) {
    const PNorm nm(p);
    EXPECT_NEAR(nm.inv_p() + nm.dual().inv_p(), 1.0, 1e-15) << p;
  }
}

TEST(PNorm, RejectsOutOfRange) {
  EXPECT_THROW(PNorm{0.5}, std::invalid_argument);
  EXPECT_THROW(PNorm{INFINITY}, std::invalid_argument);
  EXPECT_THROW(PNorm{NAN}, std::invalid_argument);
}

TEST(PNorm, Parse) {
  EXPECT_TRUE(parse_pnorm("inf").is_infinite());
  EXPECT_EQ(parse_pnorm("1.5"), PNorm(1.5));
  EXPECT_THROW(parse_pnorm("Inf"), std::invalid_argument);
  EXPECT_THROW(parse_pnorm("infinity"), std::invalid_argument);
  EXPECT_THROW(parse_pnorm("0.9"), std::invalid_argument);
  EXPECT_THROW(parse_pnorm("2x"), std::invalid_argument);
  EXPECT_THROW(parse_pnorm(""), std::invalid_argument);
  EXPECT_EQ(PNorm::infinity().to_string(), "inf");
  EXPECT_EQ(PNorm(1.5).to_string(), "1.5");
}

TEST(Pnorm, SpecExamples) {
  EXPECT_DOUBLE_EQ(pnorm(vec({3, 4}), PNorm(2.0)), 5.0);
  EXPECT_DOUBLE_EQ(pnorm(vec({1, 1, 1, 1}), PNorm(1.0)), 4.0);
  EXPECT_NEAR(pnorm(vec({2, 2, 2, 2}), PNorm(3.0)), 2.0 * std::cbrt(4.0), 1e-14);
  EXPECT_NEAR(pnorm(vec({2, 2, 2, 2}), PNorm(3.0)), 3.17480, 1e-5);
  EXPECT_DOUBLE_EQ(pnorm(vec({-3, 1, 2}), PNorm::infinity()), 3.0);
}

TEST(Pnorm, MatchesNaiveFormula) {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> g;
  for (int t = 0; t < 200; ++t) {
    Vector x(5);
    for (int i = 0; i < 5; ++i) x[i] = g(rng);
    for (double p : kPs) EXPECT_NEAR(pnorm(x, PNorm(p)), naive_pnorm(x, p), 1e-12 * naive_pnorm(x, p));
  }
}

TEST(Pnorm, NoOverflowForLargeEntries) {
  const Vector x = vec({1e200, 1e200});
  EXPECT_NEAR(pnorm(x, PNorm(3.0)) / 1e200, std::cbrt(2.0), 1e-14);
}

TEST(Pnorm, MonotoneInPAndSandwichedByInfinity) {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> g;
  for (int t = 0; t < 300; ++t) {
    const int n = 1 + t % 6;
    Vector x(n);
    for (int i = 0; i < n; ++i) x[i] = g(rng);
    const double inf = pnorm(x, PNorm::infinity());
    double prev = INFINITY;
    for (double p : kPs) {
      const double v = pnorm(x, PNorm(p));
      EXPECT_LE(v, prev * (1 + 1e-14));
      EXPECT_LE(inf, v * (1 + 1e-14));
      EXPECT_LE(v, std::pow(n, 1.0 / p) * inf * (1 + 1e-14));
      prev = v;
    }
  }
}

TEST(Diameter, SpecExamples) {
  const auto w1 = diameter(cross_polytope(4), PNorm(1.0));
  EXPECT_DOUBLE_EQ(w1.value, 2.0);
  EXPECT_DOUBLE_EQ(pdistance(cross_polytope(4).point(w1.index_a), cross_polytope(4).point(w1.index_b), PNorm(1.0)),
                   2.0);
  EXPECT_DOUBLE_EQ(diameter(cube_vertices(4), PNorm(2.0)).value, 4.0);
  PointCloud X(4);
  X.push_back(Vector::Zero(4));
  X.push_back(vec({1, 1, 1, 1}));
  EXPECT_DOUBLE_EQ(diameter(X, PNorm::infinity()).value, 1.0);
}

TEST(Diameter, Degenerate) {
  PointCloud empty(3);
  const auto w0 = diameter(empty, PNorm(2.0));
  EXPECT_EQ(w0.value, 0.0);
  EXPECT_EQ(w0.index_a, w0.index_b);
  PointCloud one(3);
  one.push_back(vec({1, 2, 3}));
  const auto w1 = diameter(one, PNorm(1.0));
  EXPECT_EQ(w1.value, 0.0);
  EXPECT_EQ(w1.index_a, 0u);
  EXPECT_EQ(w1.index_b, 0u);
}

TEST(Diameter, AgreesWithBruteForce) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    for (double p : {1.0, 1.5, 2.0, 3.0}) {
      const PointCloud X = sample_ball_cloud(4, 40, PNorm(p), seed);
      const auto w = diameter(X, PNorm(p));
      EXPECT_NEAR(w.value, naive_diameter(X, p), 1e-12);
      EXPECT_NEAR(w.value, pdistance(X.point(w.index_a), X.point(w.index_b), PNorm(p)), 1e-15);
    }
    const PointCloud X = sample_ball_cloud(3, 30, PNorm::infinity(), seed);
    EXPECT_NEAR(diameter(X, PNorm::infinity()).value, naive_diameter(X, INFINITY), 1e-15);
  }
}

TEST(Diameter, TranslationInvariantAndHomogeneous) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (double p : {1.0, 1.5, 2.0, 4.0}) {
    const PointCloud X = sample_ball_cloud(4, 60, PNorm(p), 42);
    const double d = diameter(X, PNorm(p)).value;
    for (int t = 0; t < 5; ++t) {
      const double s = std::exp(u(rng) / 2.0);
      const Vector shift = vec({u(rng), u(rng), u(rng), u(rng)});
      EXPECT_NEAR(diameter(X.transformed(s, shift), PNorm(p)).value, s * d, 1e-12 * s * d + 1e-12);
    }
  }
}

TEST(Support, SpecExamples) {
  EXPECT_DOUBLE_EQ(support(vec({1, 1, 1, 1}), PNorm(1.0)), 1.0);
  EXPECT_NEAR(support(0.5 * vec({1, 1, 1, -1}), PNorm(2.0)), 1.0, 1e-15);
  for (double p : {1.25, 1.5, 1.75, 2.0}) {
    const Vector u = std::pow(4.0, -1.0 / p) * vec({1, 1, 1, -1});
    EXPECT_NEAR(support(u, PNorm(p)), std::pow(4.0, 1.0 - 2.0 / p), 1e-14) << p;
  }
}

TEST(Support, SampledPointsNeverExceedAndMaximizerAttains) {
  std::mt19937_64 rng(5);
  for (double p : {1.0, 1.25, 1.5, 2.0, 3.0}) {
    const PNorm nm(p);
    for (int t = 0; t < 10; ++t) {
      Vector u(4);
      std::normal_distribution<double> g;
      for (int i = 0; i < 4; ++i) u[i] = g(rng);
      const double h = support(u, nm);
      for (int s = 0; s < 2000; ++s) EXPECT_LE(sample_ball(4, nm, rng).dot(u), h * (1 + 1e-12));
      const Vector x = support_maximizer(u, nm);
      EXPECT_NEAR(pnorm(x, nm), 1.0, 1e-12);
      EXPECT_NEAR(x.dot(u), h, 1e-12 * h);
    }
  }
  const Vector u = vec({0.5, -2.0, 1.0});
  const Vector x = support_maximizer(u, PNorm::infinity());
  EXPECT_DOUBLE_EQ(x.dot(u), support(u, PNorm::infinity()));
  EXPECT_DOUBLE_EQ(support(u, PNorm::infinity()), 3.5);
}

TEST(Support, SampledMaximumApproachesSupport) {
  // 10^5 unit-sphere samples for u = (1,1,1,-1)/2 at p = 2.
  std::mt19937_64 rng(0);
  const Vector u = 0.5 * vec({1, 1, 1, -1});
  double best = 0.0;
  for (int s = 0; s < 100000; ++s) best = std::max(best, sample_sphere(4, PNorm(2.0), rng).dot(u));
  EXPECT_LE(best, 1.0 + 1e-12);
  EXPECT_GT(best, 0.99);
}

TEST(WidthFunctional, SpecExamples) {
  auto r = width_functional(cross_polytope(4), vec({1, 1, 1, 1}));
  EXPECT_EQ(r.min, -1.0);
  EXPECT_EQ(r.max, 1.0);
  EXPECT_EQ(r.mid, 0.0);
  PointCloud X(4);
  X.push_back(Vector::Zero(4));
  X.push_back(unit(4, 0));
  r = width_functional(X, vec({1, 1, 1, 1}));
  EXPECT_EQ(r.min, 0.0);
  EXPECT_EQ(r.max, 1.0);
  EXPECT_EQ(r.mid, 0.5);
  r = width_functional(cube_vertices(4), vec({1, 1, 1, -1}));
  EXPECT_EQ(r.min, -4.0);
  EXPECT_EQ(r.max, 4.0);
  EXPECT_EQ(r.mid, 0.0);
  EXPECT_EQ(r.width(), 8.0);
}

TEST(WidthFunctional, EmptyThrows) {
  EXPECT_THROW(width_functional(PointCloud(4), vec({1, 1, 1, 1})), std::invalid_argument);
}

TEST(Sampling, BallSamplesInsideAndSphereOnBoundary) {
  std::mt19937_64 rng(9);
  for (const PNorm nm : {PNorm(1.0), PNorm(1.5), PNorm(2.0), PNorm(3.0), PNorm::infinity()}) {
    for (int s = 0; s < 1000; ++s) {
      EXPECT_LE(pnorm(sample_ball(4, nm, rng), nm), 1.0 + 1e-12);
      EXPECT_NEAR(pnorm(sample_sphere(4, nm, rng), nm), 1.0, 1e-12);
    }
  }
}

TEST(Sampling, BallCloudIsSeeded) {
  const PointCloud a = sample_ball_cloud(4, 50, PNorm(1.5), 123);
  const PointCloud b = sample_ball_cloud(4, 50, PNorm(1.5), 123);
  const PointCloud c = sample_ball_cloud(4, 50, PNorm(1.5), 124);
  EXPECT_EQ(a.data(), b.data());
  EXPECT_NE(a.data(), c.data());
}

TEST(Sampling, BallRadialDistributionIsUniformInVolume) {
  // For a uniform sample in an n-dimensional ball, P(||x|| <= t) = t^n.
  const PointCloud X = sample_ball_cloud(4, 20000, PNorm(1.5), 1);
  int inside = 0;
  for (std::size_t i = 0; i < X.size(); ++i) inside += pnorm(X.point(i), PNorm(1.5)) <= std::pow(0.5, 0.25);
  EXPECT_NEAR(inside / 20000.0, 0.5, 0.02);
}

TEST(PointCloud, Construction) {
  PointCloud X(2);
  EXPECT_TRUE(X.empty());
  X.push_back(vec({1, 2}));
  EXPECT_THROW(X.push_back(vec({1, 2, 3})), std::invalid_argument);
  EXPECT_THROW(PointCloud{std::size_t{0}}, std::invalid_argument);
  X.push_back(vec({3, 4}));
  const std::vector<std::size_t> idx = {1};
  EXPECT_EQ(X.subset(idx).point(0), vec({3, 4}));
  EXPECT_EQ(X.transformed(2.0, vec({1, 1})).point(0), vec({3, 5}));
}
