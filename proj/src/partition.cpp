#include "borsuk/partition.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

#include "borsuk/hadamard.hpp"

namespace borsuk {

namespace {

constexpr std::size_t kDim = 4;
constexpr int kMaxCubeDim = 10;

std::vector<PartSummary> summarize_parts(const PointCloud& X, const PNorm& nm, const std::vector<int>& labels) {
  std::map<int, std::vector<std::size_t>> members;
  for (std::size_t i = 0; i < labels.size(); ++i) members[labels[i]].push_back(i);
  std::vector<PartSummary> parts;
  for (const auto& [label, idx] : members) {
    const DiameterWitness local = diameter(X.subset(idx), nm);
    PartSummary s;
    s.label = label;
    s.size = idx.size();
    s.diameter = {local.value, idx[local.index_a], idx[local.index_b]};
    parts.push_back(s);
  }
  return parts;
}

double max_part_diameter(const std::vector<PartSummary>& parts) {
  double worst = 0.0;
  for (const auto& s : parts) worst = std::max(worst, s.diameter.value);
  return worst;
}

void finalize(const PointCloud& X, const PNorm& nm, PartitionResult& res) {
  res.parts = summarize_parts(X, nm, res.labels);
  res.nonempty_parts = static_cast<int>(res.parts.size());
  res.ratio = res.original_diameter > 0.0 ? max_part_diameter(res.parts) / res.original_diameter : 0.0;
}

// Single part when there is nothing to split.
bool handle_degenerate(const PointCloud& X, const PNorm& nm, PartitionResult& res) {
  if (res.original_diameter > 0.0) return false;
  res.labels.assign(X.size(), 0);
  res.normalization = {1.0, Vector::Zero(static_cast<Eigen::Index>(X.dim()))};
  finalize(X, nm, res);
  return true;
}

void require_dim4(const PointCloud& X) {
  if (X.dim() != kDim) {
    throw std::invalid_argument("partition requires dimension 4, got " + std::to_string(X.dim()));
  }
}

Eigen::Vector4d as4(const Vector& v) { return Eigen::Vector4d(v[0], v[1], v[2], v[3]); }

}  // namespace

std::string to_string(PartitionMethod m) {
  switch (m) {
    case PartitionMethod::Cube: return "cube";
    case PartitionMethod::HadamardCell: return "hadamard_cell";
    case PartitionMethod::CrossPolytope: return "crosspolytope";
  }
  return "unknown";
}

const std::array<Vector, 8>& SlabRegion::normals() {
  static const std::array<Vector, 8> u = [] {
    const int rows[8][4] = {
        {1, 1, 1, 1},  {-1, -1, 1, 1}, {1, -1, -1, 1}, {-1, 1, -1, 1},
        {1, 1, 1, -1}, {-1, 1, 1, 1},  {1, -1, 1, 1},  {1, 1, -1, 1},
    };
    std::array<Vector, 8> out;
    for (int i = 0; i < 8; ++i) {
      out[i] = Vector(4);
      for (int j = 0; j < 4; ++j) out[i][j] = rows[i][j];
    }
    return out;
  }();
  return u;
}

PartitionResult partition(const PointCloud& X, const PNorm& nm) {
  require_dim4(X);
  if (nm.is_one()) return partition_crosspolytope_case(X, nm);
  if (!nm.is_infinite() && nm.p() <= 2.0) return partition_hadamard_case(X, nm);
  return partition_cube_case(X, nm);
}

PartitionResult partition_cube_case(const PointCloud& X, const PNorm& nm) {
  const int n = static_cast<int>(X.dim());
  if (n > kMaxCubeDim) throw std::invalid_argument("cube split is exposed for n <= 10");
  if (!nm.is_infinite() && !(nm.p() > std::log2(static_cast<double>(n)))) {
    throw std::invalid_argument("cube split requires p > log2(n)");
  }
  PartitionResult res;
  res.method = PartitionMethod::Cube;
  res.label_count = 1 << n;
  res.original_diameter = diameter(X, nm).value;
  if (handle_degenerate(X, nm, res)) return res;

  const auto& data = X.data();
  const Vector center = 0.5 * (data.colwise().minCoeff() + data.colwise().maxCoeff()).transpose();
  res.normalization = {1.0, -center};
  res.labels.resize(X.size());
  for (std::size_t i = 0; i < X.size(); ++i) {
    int label = 0;
    for (int j = 0; j < n; ++j) {
      if (data(static_cast<Eigen::Index>(i), j) - center[j] < 0.0) label |= 1 << j;
    }
    res.labels[i] = label;
  }
  finalize(X, nm, res);
  return res;
}

PartitionResult partition_hadamard_case(const PointCloud& X, const PNorm& nm) {
  require_dim4(X);
  if (nm.is_infinite() || !(nm.p() > 1.0 && nm.p() <= 2.0)) {
    throw std::invalid_argument("Hadamard-cell partition requires 1 < p <= 2");
  }
  PartitionResult res;
  res.method = PartitionMethod::HadamardCell;
  res.original_diameter = diameter(X, nm).value;
  if (handle_degenerate(X, nm, res)) return res;

  const double inv_p = nm.inv_p();
  const Eigen::Matrix4d H = paper_h4().as_real();
  const Eigen::Matrix4d g = std::pow(4.0, -inv_p) * H;  // columns are u_1..u_4
  const double scale = 2.0 / res.original_diameter;

  // f(x)_i = <scale * x, u_i>
  const Matrix f = scale * (X.data() * g);
  const Eigen::Vector4d mid = 0.5 * (f.colwise().minCoeff() + f.colwise().maxCoeff()).transpose();
  // <t, u_i> = -mid_i  <=>  g^T t = -mid, and (g^T)^{-1} = 4^(1/p - 1) H.
  const Eigen::Vector4d t = -std::pow(4.0, inv_p - 1.0) * H * mid;
  res.normalization = {scale, t};

  const double cell = std::pow(4.0, 2.0 * inv_p - 1.0);
  double max_coord = 0.0;
  res.labels.resize(X.size());
  for (std::size_t i = 0; i < X.size(); ++i) {
    int label = 0;
    for (int k = 0; k < 4; ++k) {
      const double s = cell * (f(static_cast<Eigen::Index>(i), k) - mid[k]);
      max_coord = std::max(max_coord, std::abs(s));
      if (s < 0.0) label |= 1 << k;
    }
    res.labels[i] = label;
  }
  if (max_coord > 1.0 + kTolerance) {
    res.warnings.push_back("cell coordinate " + std::to_string(max_coord) + " exceeds 1; cloud escapes Q");
  }
  finalize(X, nm, res);
  return res;
}

PartitionResult partition_crosspolytope_case(const PointCloud& X, const PNorm& nm) {
  require_dim4(X);
  if (!nm.is_one()) throw std::invalid_argument("cross-polytope partition requires p = 1");
  PartitionResult res;
  res.method = PartitionMethod::CrossPolytope;
  res.original_diameter = diameter(X, nm).value;
  if (handle_degenerate(X, nm, res)) return res;

  const auto& u = SlabRegion::normals();
  const double scale = 2.0 / res.original_diameter;

  // Fix the slabs along u_5..u_8; their normals are the columns of H, so the
  // system <t, u_{4+k}> = -mid_k reads H^T t = -mid with (H^T)^{-1} = H / 4.
  const Eigen::Matrix4d H = paper_h4().as_real();
  const Matrix y = scale * X.data();
  Eigen::Vector4d mid_fixed;
  for (int k = 0; k < 4; ++k) {
    const Vector f = y * u[4 + k];
    mid_fixed[k] = 0.5 * (f.minCoeff() + f.maxCoeff());
  }
  const Eigen::Vector4d t = -0.25 * H * mid_fixed;
  res.normalization = {scale, t};

  const Matrix z = y.rowwise() + t.transpose();

  double worst_fixed = 0.0;
  for (int k = 4; k < 8; ++k) worst_fixed = std::max(worst_fixed, (z * u[k]).cwiseAbs().maxCoeff());
  if (worst_fixed > 1.0 + kTolerance) {
    res.warnings.push_back("fixed slab functional reaches " + std::to_string(worst_fixed) + " > 1");
  }

  SlabRegion slabs;
  for (int i = 0; i < 4; ++i) {
    const Vector f = z * u[i];
    double alpha = 0.5 * (f.minCoeff() + f.maxCoeff()) / 4.0;
    if (std::abs(alpha) > 0.25 + kTolerance) {
      res.warnings.push_back("alpha_" + std::to_string(i + 1) + " = " + std::to_string(alpha) +
                             " clamped to [-1/4, 1/4]");
      alpha = std::clamp(alpha, -0.25, 0.25);
    }
    slabs.alpha[static_cast<std::size_t>(i)] = alpha;
  }
  res.slabs = slabs;

  std::array<Eigen::Vector4d, 8> centers;
  for (int k = 0; k < 8; ++k) {
    centers[k].setZero();
    centers[k][k % 4] = k < 4 ? 0.25 : -0.25;
  }
  constexpr double kPieceRadius = 0.75;

  res.labels.resize(X.size());
  for (std::size_t i = 0; i < X.size(); ++i) {
    const Eigen::Vector4d x = as4(z.row(static_cast<Eigen::Index>(i)).transpose());
    if (x.lpNorm<1>() <= 1.0 + kTolerance) {
      int label = -1;
      int nearest = 0;
      double nearest_dist = std::numeric_limits<double>::infinity();
      for (int k = 0; k < 8; ++k) {
        const double d = (x - centers[k]).lpNorm<1>();
        if (label < 0 && d <= kPieceRadius + 2.0 * kTolerance) label = k;
        if (d < nearest_dist) {
          nearest_dist = d;
          nearest = k;
        }
      }
      res.labels[i] = label >= 0 ? label : nearest;
      continue;
    }
    int spike = 0;
    double excess = -1.0;
    double value = 0.0;
    for (int k = 0; k < 4; ++k) {
      const double f = x.dot(as4(u[k]));
      if (std::abs(f) > excess) {
        excess = std::abs(f);
        spike = k;
        value = f;
      }
    }
    if (excess <= 1.0) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "point " << i << " (normalized " << x.transpose() << ", l1 norm " << x.lpNorm<1>()
          << ") lies in no ball piece and no spike; the cloud violates the diameter-2 slab bounds";
      throw std::runtime_error(msg.str());
    }
    res.labels[i] = value > 0.0 ? 8 + spike : 12 + spike;
  }

  for (int k = 0; k < 4; ++k) {
    const bool plus = std::find(res.labels.begin(), res.labels.end(), 8 + k) != res.labels.end();
    const bool minus = std::find(res.labels.begin(), res.labels.end(), 12 + k) != res.labels.end();
    if (plus && minus) {
      res.warnings.push_back("opposite spikes +" + std::to_string(k + 1) + " and -" + std::to_string(k + 1) +
                             " are both occupied");
    }
  }
  finalize(X, nm, res);
  return res;
}

PartitionVerification verify_partition(const PointCloud& X, const PNorm& nm, const PartitionResult& result) {
  if (result.labels.size() != X.size()) {
    throw std::invalid_argument("partition has " + std::to_string(result.labels.size()) + " labels for " +
                                std::to_string(X.size()) + " points");
  }
  for (std::size_t i = 0; i < result.labels.size(); ++i) {
    if (result.labels[i] < 0 || result.labels[i] >= result.label_count) {
      throw std::invalid_argument("label " + std::to_string(result.labels[i]) + " of point " + std::to_string(i) +
                                  " is outside [0, " + std::to_string(result.label_count) + ")");
    }
  }
  PartitionVerification v;
  v.original_diameter = diameter(X, nm).value;
  v.parts = summarize_parts(X, nm, result.labels);
  v.nonempty_parts = static_cast<int>(v.parts.size());
  v.ratio = v.original_diameter > 0.0 ? max_part_diameter(v.parts) / v.original_diameter : 0.0;
  v.valid = v.original_diameter == 0.0 || v.ratio < 1.0 - 1e-12;
  return v;
}

}  // namespace borsuk
