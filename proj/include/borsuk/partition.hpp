#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "borsuk/lpcore.hpp"

namespace borsuk {

enum class PartitionMethod { Cube, HadamardCell, CrossPolytope };

std::string to_string(PartitionMethod m);

/// One nonempty part: its label, size, and diameter witness in original point indices.
struct PartSummary {
  int label = 0;
  std::size_t size = 0;
  DiameterWitness diameter;
};

/// normalized = scale * x + translation.
struct Normalization {
  double scale = 1.0;
  Vector translation;
};

/// Slab description of the region containing a normalized l_1 cloud of diameter 2.
///
/// Normals u_1..u_8 are sign vectors; slab i is |<x, u_i>| <= 1 for i = 5..8 and
/// |<x, u_i> - 4 alpha_i| <= 1 (the slab shifted by alpha_i u_i) for i = 1..4.
struct SlabRegion {
  std::array<double, 4> alpha{};

  static const std::array<Vector, 8>& normals();
};

struct PartitionResult {
  PartitionMethod method = PartitionMethod::Cube;
  /// Size of the label space: 16 in dimension 4, 2^n for the cube split in dimension n.
  int label_count = 16;
  std::vector<int> labels;
  std::vector<PartSummary> parts;
  double original_diameter = 0.0;
  /// max part diameter / original diameter; 0 when the original diameter is 0.
  double ratio = 0.0;
  int nonempty_parts = 0;
  Normalization normalization;
  std::optional<SlabRegion> slabs;
  std::vector<std::string> warnings;
};

/// Dispatch on p: p = 1 cross-polytope case, 1 < p <= 2 Hadamard cells, p > 2 cube split.
/// Throws std::invalid_argument unless X has dimension 4.
PartitionResult partition(const PointCloud& X, const PNorm& nm);

/// Orthant split of the centered bounding box. Requires p > log2(n) and n <= 10.
/// Every part has diameter at most (n^(1/p) / 2) d(X).
PartitionResult partition_cube_case(const PointCloud& X, const PNorm& nm);

/// Cells of g C_4 with g = 4^(-1/p) H_4 after scaling X to diameter 2 and
/// centering each functional <x, u_i> (u_i the columns of g). Requires 1 < p <= 2.
PartitionResult partition_hadamard_case(const PointCloud& X, const PNorm& nm);

/// Eight pieces of the 2n-translate covering of C_{4,1} (labels 0..7, centers
/// +1/4 e_1..e_4 then -1/4 e_1..e_4) plus the spike slots +i -> 7 + i and
/// -i -> 11 + i for points outside the ball. Requires p = 1.
/// Throws std::runtime_error when a point fits neither a ball piece nor a spike.
PartitionResult partition_crosspolytope_case(const PointCloud& X, const PNorm& nm);

struct PartitionVerification {
  bool valid = false;
  double ratio = 0.0;
  double original_diameter = 0.0;
  int nonempty_parts = 0;
  std::vector<PartSummary> parts;
};

/// Recomputes part diameters from the labels alone. Valid iff the original diameter
/// is 0 or ratio < 1 - 1e-12.
/// Throws std::invalid_argument for a label outside [0, label_count) or a label
/// vector whose length differs from |X|.
PartitionVerification verify_partition(const PointCloud& X, const PNorm& nm, const PartitionResult& result);

}  // namespace borsuk
