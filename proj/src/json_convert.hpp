#pragma once

// nlohmann/json conversions shared by io.cpp and the CLI. Not installed.

#include <json.hpp>

#include "borsuk/io.hpp"

namespace borsuk::io::detail {

using nlohmann::json;

inline json pnorm_json(const PNorm& nm) {
  if (nm.is_infinite()) return "inf";
  return nm.p();
}

inline json vector_json(const Vector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

inline json matrix_json(const Matrix& m) {
  json out = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) out.push_back(vector_json(m.row(i).transpose()));
  return out;
}

json point_cloud_json(const PointCloud& X);
json partition_json(const PartitionResult& r);
json certificate_json(const SandwichCertificate& c);
json cover_json(const CoveringSpec& spec, const CoverReport& rep);
json parts_json(const std::vector<PartSummary>& parts);

}  // namespace borsuk::io::detail
