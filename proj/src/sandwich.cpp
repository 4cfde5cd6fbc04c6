#include "borsuk/sandwich.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace borsuk {

namespace {

constexpr double kTieTolerance = 1e-12;

// Lexicographic key of a sign mask (bit b set <=> v_b = -1) with coordinate 0
// most significant and +1 ordered before -1.
std::uint64_t lex_key(std::uint64_t mask, int n) {
  std::uint64_t key = 0;
  for (int b = 0; b < n; ++b) {
    if (mask >> b & 1U) key |= std::uint64_t{1} << (n - 1 - b);
  }
  return key;
}

Vector sign_vector(std::uint64_t mask, int n) {
  Vector v(n);
  for (int b = 0; b < n; ++b) v[b] = (mask >> b & 1U) ? -1.0 : 1.0;
  return v;
}

// Visits every vertex g v of g C_n; f(mask, g v).
template <class F>
void for_each_vertex_image(const Matrix& g, F&& f) {
  const int n = static_cast<int>(g.cols());
  Vector w = g.rowwise().sum();
  std::uint64_t mask = 0;
  f(mask, w);
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t step = 1; step < count; ++step) {
    const int b = std::countr_zero(step);
    const bool was_negative = mask >> b & 1U;
    mask ^= std::uint64_t{1} << b;
    if (was_negative) w += 2.0 * g.col(b);
    else w -= 2.0 * g.col(b);
    f(mask, w);
  }
}

}  // namespace

SandwichCertificate bm_upper_certificate(const LinearMap& g, const PNorm& nm) {
  const int n = static_cast<int>(g.dim());
  if (n > 20) throw std::invalid_argument("vertex enumeration requires n <= 20");
  const Matrix& m = g.matrix();

  double best = 0.0;
  for_each_vertex_image(m, [&](std::uint64_t, const Vector& w) { best = std::max(best, pnorm(w, nm)); });

  const double cutoff = best - kTieTolerance * std::max(1.0, best);
  std::uint64_t argmax = 0;
  std::uint64_t argmax_key = ~std::uint64_t{0};
  std::uint64_t tight = 0;
  for_each_vertex_image(m, [&](std::uint64_t mask, const Vector& w) {
    if (pnorm(w, nm) >= cutoff) {
      ++tight;
      const std::uint64_t key = lex_key(mask, n);
      if (key < argmax_key) {
        argmax_key = key;
        argmax = mask;
      }
    }
  });

  SandwichCertificate cert{g, nm, 0.0, 0.0, {}, 0};
  const Vector v = sign_vector(argmax, n);
  cert.r = pnorm(m * v, nm);
  cert.dual_margin = dual_feasibility(g, nm);
  cert.argmax_vertex.resize(static_cast<std::size_t>(n));
  for (int b = 0; b < n; ++b) cert.argmax_vertex[static_cast<std::size_t>(b)] = static_cast<int>(v[b]);
  cert.tight_vertices = tight;
  return cert;
}

double dual_feasibility(const LinearMap& g, const PNorm& nm) {
  const PNorm q = nm.dual();
  const Matrix& inv = g.inverse();
  double worst = 0.0;
  for (Eigen::Index i = 0; i < inv.rows(); ++i) worst = std::max(worst, pnorm(inv.row(i).transpose(), q));
  return worst;
}

double bm_lower_bound(int n, const PNorm& nm) {
  if (n < 1) throw std::invalid_argument("bm_lower_bound requires n >= 1");
  if (nm.is_infinite() || nm.p() >= 2.0) throw std::invalid_argument("bm_lower_bound requires 1 <= p < 2");
  // sqrt(2n) * 2^(-1/p) rounds to the exact value at p = 1 whenever 2n is a square.
  return std::sqrt(2.0 * static_cast<double>(n)) * std::pow(2.0, -1.0 / nm.p());
}

SandwichReport check_sandwich(const LinearMap& g, const PNorm& nm, std::size_t samples, std::uint64_t seed) {
  const SandwichCertificate cert = bm_upper_certificate(g, nm);
  SandwichReport rep;
  rep.left_margin = cert.dual_margin;
  rep.r = cert.r;
  rep.argmax_vertex = cert.argmax_vertex;
  rep.tight_vertices = cert.tight_vertices;

  const PNorm q = nm.dual();
  const Matrix& inv = g.inverse();
  for (Eigen::Index i = 0; i < inv.rows(); ++i) {
    const double norm = pnorm(inv.row(i).transpose(), q);
    if (norm >= rep.left_margin * (1.0 - kTieTolerance)) rep.tight_directions.push_back(static_cast<std::size_t>(i));
  }

  auto probe = [&](const Vector& x) {
    rep.sampled_max = std::max(rep.sampled_max, (inv * x).cwiseAbs().maxCoeff());
    ++rep.samples;
  };
  for (Eigen::Index i = 0; i < inv.rows(); ++i) probe(support_maximizer(inv.row(i).transpose(), nm));

  std::mt19937_64 rng(seed);
  const std::size_t n = g.dim();
  for (std::size_t s = 0; s < samples; ++s) {
    probe(s % 2 == 0 ? sample_sphere(n, nm, rng) : sample_ball(n, nm, rng));
  }
  return rep;
}

}  // namespace borsuk
