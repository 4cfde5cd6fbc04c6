#include "borsuk/lpcore.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <thread>

namespace borsuk {

PNorm::PNorm(double p) : p_(p), infinite_(false) {
  if (!std::isfinite(p) || !(p >= 1.0)) {
    throw std::invalid_argument("p must satisfy 1 <= p < inf, got " + std::to_string(p));
  }
}

PNorm PNorm::dual() const {
  if (infinite_) return PNorm(1.0);
  if (p_ == 1.0) return PNorm::infinity();
  return PNorm(p_ / (p_ - 1.0));
}

std::string PNorm::to_string() const {
  if (infinite_) return "inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), p_);
  return std::string(buf, res.ptr);
}

PNorm parse_pnorm(const std::string& text) {
  if (text == "inf") return PNorm::infinity();
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto res = std::from_chars(first, last, value);
  if (text.empty() || res.ec != std::errc() || res.ptr != last || !std::isfinite(value)) {
    throw std::invalid_argument("p must be a number >= 1 or \"inf\", got \"" + text + "\"");
  }
  return PNorm(value);
}

PointCloud::PointCloud(std::size_t dim) : dim_(dim), points_(0, static_cast<Eigen::Index>(dim)) {
  if (dim == 0) throw std::invalid_argument("point cloud dimension must be positive");
}

PointCloud::PointCloud(Storage points) : dim_(static_cast<std::size_t>(points.cols())), points_(std::move(points)) {
  if (dim_ == 0) throw std::invalid_argument("point cloud dimension must be positive");
  if (!points_.allFinite()) throw std::invalid_argument("point cloud has non-finite coordinates");
}

PointCloud::PointCloud(std::size_t dim, const std::vector<Vector>& points) : PointCloud(dim) {
  points_.resize(static_cast<Eigen::Index>(points.size()), static_cast<Eigen::Index>(dim));
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (static_cast<std::size_t>(points[i].size()) != dim) {
      throw std::invalid_argument("point " + std::to_string(i) + " has dimension " +
                                  std::to_string(points[i].size()) + ", expected " + std::to_string(dim));
    }
    if (!points[i].allFinite()) {
      throw std::invalid_argument("point " + std::to_string(i) + " has non-finite coordinates");
    }
    points_.row(static_cast<Eigen::Index>(i)) = points[i].transpose();
  }
}

void PointCloud::push_back(const Vector& x) {
  if (static_cast<std::size_t>(x.size()) != dim_) {
    throw std::invalid_argument("point dimension mismatch");
  }
  if (!x.allFinite()) throw std::invalid_argument("point has non-finite coordinates");
  points_.conservativeResize(points_.rows() + 1, Eigen::NoChange);
  points_.row(points_.rows() - 1) = x.transpose();
}

PointCloud PointCloud::subset(std::span<const std::size_t> indices) const {
  Storage out(static_cast<Eigen::Index>(indices.size()), static_cast<Eigen::Index>(dim_));
  for (std::size_t k = 0; k < indices.size(); ++k) {
    out.row(static_cast<Eigen::Index>(k)) = points_.row(static_cast<Eigen::Index>(indices[k]));
  }
  PointCloud sub(dim_);
  sub.points_ = std::move(out);
  return sub;
}

PointCloud PointCloud::transformed(double scale, const Vector& translation) const {
  if (static_cast<std::size_t>(translation.size()) != dim_) {
    throw std::invalid_argument("translation dimension mismatch");
  }
  PointCloud out(dim_);
  out.points_ = (scale * points_).rowwise() + translation.transpose();
  return out;
}

double pnorm(const Vector& x, const PNorm& nm) {
  if (x.size() == 0) return 0.0;
  if (nm.is_infinite()) return x.cwiseAbs().maxCoeff();
  if (nm.is_one()) return x.cwiseAbs().sum();
  if (nm.is_two()) return std::sqrt(x.squaredNorm());
  const double scale = x.cwiseAbs().maxCoeff();
  if (scale == 0.0) return 0.0;
  const double p = nm.p();
  double acc = 0.0;
  for (Eigen::Index i = 0; i < x.size(); ++i) acc += std::pow(std::abs(x[i]) / scale, p);
  return scale * std::pow(acc, 1.0 / p);
}

double pdistance(const Vector& x, const Vector& y, const PNorm& nm) { return pnorm(x - y, nm); }

DiameterWitness diameter(const PointCloud& X, const PNorm& nm) {
  DiameterWitness best;
  const std::size_t count = X.size();
  if (count <= 1) return best;
  const auto& data = X.data();
  Vector diff(static_cast<Eigen::Index>(X.dim()));
  for (std::size_t i = 0; i + 1 < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      diff = (data.row(static_cast<Eigen::Index>(i)) - data.row(static_cast<Eigen::Index>(j))).transpose();
      const double d = pnorm(diff, nm);
      if (d > best.value) best = {d, i, j};
    }
  }
  return best;
}

double support(const Vector& u, const PNorm& nm) { return pnorm(u, nm.dual()); }

Vector support_maximizer(const Vector& u, const PNorm& nm) {
  const Eigen::Index n = u.size();
  Vector x = Vector::Zero(n);
  if (n == 0 || u.cwiseAbs().maxCoeff() == 0.0) return x;
  auto sign = [](double v) { return v > 0 ? 1.0 : (v < 0 ? -1.0 : 0.0); };
  if (nm.is_one()) {
    Eigen::Index j = 0;
    u.cwiseAbs().maxCoeff(&j);
    x[j] = sign(u[j]);
    return x;
  }
  if (nm.is_infinite()) {
    for (Eigen::Index i = 0; i < n; ++i) x[i] = sign(u[i]);
    return x;
  }
  const double qm1 = nm.dual().p() - 1.0;
  const double scale = u.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < n; ++i) x[i] = sign(u[i]) * std::pow(std::abs(u[i]) / scale, qm1);
  return x / pnorm(x, nm);
}

FunctionalRange width_functional(const PointCloud& X, const Vector& u) {
  if (X.empty()) throw std::invalid_argument("width is undefined for an empty point cloud");
  if (static_cast<std::size_t>(u.size()) != X.dim()) {
    throw std::invalid_argument("functional dimension does not match the cloud");
  }
  const Vector values = X.data() * u;
  FunctionalRange r;
  r.min = values.minCoeff();
  r.max = values.maxCoeff();
  r.mid = 0.5 * (r.min + r.max);
  return r;
}

Vector sample_sphere(std::size_t n, const PNorm& nm, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vector x(static_cast<Eigen::Index>(n));
  double norm = 0.0;
  do {
    for (auto& c : x) c = gauss(rng);
    norm = pnorm(x, nm);
  } while (norm == 0.0);
  return x / norm;
}

Vector sample_ball(std::size_t n, const PNorm& nm, std::mt19937_64& rng) {
  Vector x(static_cast<Eigen::Index>(n));
  if (nm.is_infinite()) {
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    for (auto& c : x) c = unit(rng);
    return x;
  }
  // Coordinates with density ~ exp(-|t|^p), normalized together with an
  // independent Exp(1) variable, are uniform in the unit p-ball.
  const double p = nm.p();
  std::gamma_distribution<double> gamma(1.0 / p, 1.0);
  std::exponential_distribution<double> expo(1.0);
  std::bernoulli_distribution coin(0.5);
  double acc = 0.0;
  for (auto& c : x) {
    const double g = gamma(rng);
    acc += g;
    c = (coin(rng) ? 1.0 : -1.0) * std::pow(g, 1.0 / p);
  }
  acc += expo(rng);
  return x / std::pow(acc, 1.0 / p);
}

PointCloud sample_ball_cloud(std::size_t n, std::size_t count, const PNorm& nm, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Vector> pts;
  pts.reserve(count);
  for (std::size_t i = 0; i < count; ++i) pts.push_back(sample_ball(n, nm, rng));
  return PointCloud(n, pts);
}

unsigned worker_count() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("BORSUK_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && cap > 0) hw = std::min<unsigned>(hw, static_cast<unsigned>(cap));
  }
  return hw;
}

}  // namespace borsuk
