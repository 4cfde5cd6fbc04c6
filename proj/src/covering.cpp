#include "borsuk/covering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

namespace borsuk {

namespace {

constexpr std::size_t kChunk = 1 << 15;
constexpr std::size_t kLatticeCap = 100'000;
constexpr std::size_t kMaxOrbitDim = 20;
// Distances within this relative gap count as ties, so rounding noise on sampled
// tight points does not displace an earlier exact witness.
constexpr double kTieSlack = 1e-12;

// Farthest tested point from its nearest center. Index breaks ties (lowest wins).
struct Farthest {
  double distance = -std::numeric_limits<double>::infinity();
  std::size_t index = std::numeric_limits<std::size_t>::max();
  Vector point;

  void offer(double d, std::size_t i, const Vector& x) {
    const bool empty = index == std::numeric_limits<std::size_t>::max();
    const double slack = empty ? 0.0 : kTieSlack * std::max(1.0, std::abs(distance));
    if (empty || d > distance + slack || (d >= distance - slack && i < index)) {
      distance = d;
      index = i;
      point = x;
    }
  }
  void merge(const Farthest& other) {
    if (other.index != std::numeric_limits<std::size_t>::max()) offer(other.distance, other.index, other.point);
  }
};

double nearest_center_distance(const Vector& x, const CoveringSpec& spec) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& c : spec.centers) best = std::min(best, pdistance(x, c, spec.nm));
  return best;
}

std::vector<Vector> witness_points(std::size_t n, const PNorm& nm) {
  std::vector<Vector> out;
  const auto dim = static_cast<Eigen::Index>(n);
  if (n <= kMaxOrbitDim) {
    const double m = std::pow(static_cast<double>(n), -nm.inv_p());
    const std::uint64_t count = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < count; ++mask) {
      Vector x(dim);
      for (std::size_t b = 0; b < n; ++b) x[static_cast<Eigen::Index>(b)] = (mask >> b & 1U) ? -m : m;
      out.push_back(std::move(x));
    }
  }
  for (int sign : {1, -1}) {
    for (Eigen::Index i = 0; i < dim; ++i) {
      Vector e = Vector::Zero(dim);
      e[i] = sign;
      out.push_back(std::move(e));
    }
  }
  out.push_back(Vector::Zero(dim));
  return out;
}

Farthest probe_samples(const CoveringSpec& spec, std::size_t n_samples, std::uint64_t seed, std::size_t base) {
  const std::size_t chunks = (n_samples + kChunk - 1) / kChunk;
  std::vector<Farthest> partial(chunks);
  auto run_chunk = [&](std::size_t c) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(c)};
    std::mt19937_64 rng(seq);
    const std::size_t begin = c * kChunk;
    const std::size_t end = std::min(n_samples, begin + kChunk);
    for (std::size_t s = begin; s < end; ++s) {
      const Vector x = sample_sphere(spec.dim, spec.nm, rng);
      partial[c].offer(nearest_center_distance(x, spec), base + s, x);
    }
  };

  const unsigned workers = std::min<std::size_t>(worker_count(), std::max<std::size_t>(chunks, 1));
  if (workers <= 1) {
    for (std::size_t c = 0; c < chunks; ++c) run_chunk(c);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t c = w; c < chunks; c += workers) run_chunk(c);
      });
    }
    for (auto& t : pool) t.join();
  }

  Farthest total;
  for (const auto& p : partial) total.merge(p);
  return total;
}

struct Probe {
  Farthest farthest;
  std::size_t tested = 0;
};

Probe probe_covering(const CoveringSpec& spec, std::size_t n_samples, std::uint64_t seed) {
  if (spec.dim == 0) throw std::invalid_argument("covering dimension must be positive");
  if (spec.centers.empty()) throw std::invalid_argument("covering needs at least one center");
  for (const auto& c : spec.centers) {
    if (static_cast<std::size_t>(c.size()) != spec.dim) throw std::invalid_argument("center dimension mismatch");
  }

  Probe probe;
  std::size_t index = 0;
  for (const auto& x : witness_points(spec.dim, spec.nm)) {
    probe.farthest.offer(nearest_center_distance(x, spec), index++, x);
  }

  probe.farthest.merge(probe_samples(spec, n_samples, seed, index));
  index += n_samples;

  // Interior lattice (k / L) Z^n within the ball, when it fits the budget.
  const double side = std::pow(static_cast<double>(kLatticeCap), 1.0 / static_cast<double>(spec.dim));
  const long L = static_cast<long>(std::floor((side - 1.0) / 2.0));
  if (L >= 1) {
    const long width = 2 * L + 1;
    std::vector<long> digits(spec.dim, 0);
    Vector x(static_cast<Eigen::Index>(spec.dim));
    bool done = false;
    while (!done) {
      for (std::size_t d = 0; d < spec.dim; ++d) {
        x[static_cast<Eigen::Index>(d)] = static_cast<double>(digits[d] - L) / static_cast<double>(L);
      }
      if (pnorm(x, spec.nm) <= 1.0) probe.farthest.offer(nearest_center_distance(x, spec), index++, x);
      std::size_t d = 0;
      while (d < spec.dim && ++digits[d] == width) digits[d++] = 0;
      done = d == spec.dim;
    }
  }
  probe.tested = index;
  return probe;
}

CoverReport make_report(const Probe& probe, double lambda, double tolerance) {
  CoverReport rep;
  rep.worst_margin = lambda - probe.farthest.distance;
  rep.witness = probe.farthest.point;
  rep.samples_used = probe.tested;
  rep.covered = rep.worst_margin >= -tolerance;
  return rep;
}

}  // namespace

CoveringSpec lemma5_spec(std::size_t n, const PNorm& nm) {
  if (n < 2) throw std::invalid_argument("lemma5_spec requires n >= 2");
  if (nm.is_infinite() || nm.p() > 2.0) throw std::invalid_argument("lemma5_spec requires 1 <= p <= 2");
  const double nd = static_cast<double>(n);
  CoveringSpec spec{n, nm, std::pow((nd - 1.0) / nd, nm.inv_p()), {}};
  const double m = std::pow(1.0 / nd, nm.inv_p());
  const auto dim = static_cast<Eigen::Index>(n);
  for (double sign : {1.0, -1.0}) {
    for (Eigen::Index i = 0; i < dim; ++i) {
      Vector c = Vector::Zero(dim);
      c[i] = sign * m;
      spec.centers.push_back(std::move(c));
    }
  }
  return spec;
}

CoverReport verify_covering(const CoveringSpec& spec, std::size_t n_samples, std::uint64_t seed, double tolerance) {
  return make_report(probe_covering(spec, n_samples, seed), spec.lambda, tolerance);
}

double gamma_estimate(std::size_t n, const PNorm& nm, const std::vector<Vector>& centers, double epsilon,
                      std::size_t n_samples, std::uint64_t seed) {
  if (centers.empty()) throw std::invalid_argument("gamma_estimate needs at least one center");
  if (!(epsilon > 0.0)) throw std::invalid_argument("bisection tolerance must be positive");
  const CoveringSpec base{n, nm, 1.0, centers};
  // The tested point set does not depend on lambda, so probe once and bisect on the verdict.
  const Probe probe = probe_covering(base, n_samples, seed);
  auto passes = [&](double lambda) { return make_report(probe, lambda, kTolerance).covered; };
  if (!passes(1.0)) throw std::runtime_error("covering fails at lambda = 1; bisection has no bracket");
  double lo = 0.0;
  double hi = 1.0;
  while (hi - lo > epsilon) {
    const double mid = 0.5 * (lo + hi);
    if (passes(mid)) hi = mid;
    else lo = mid;
  }
  return hi;
}

}  // namespace borsuk
