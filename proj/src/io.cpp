#include "borsuk/io.hpp"

#include <cmath>
#include <stdexcept>

#include "json_convert.hpp"

namespace borsuk::io {

namespace detail {

json point_cloud_json(const PointCloud& X) {
  json pts = json::array();
  for (std::size_t i = 0; i < X.size(); ++i) pts.push_back(vector_json(X.point(i)));
  return {{"dim", X.dim()}, {"points", std::move(pts)}};
}

json parts_json(const std::vector<PartSummary>& parts) {
  json out = json::array();
  for (const auto& s : parts) {
    out.push_back({{"label", s.label},
                   {"size", s.size},
                   {"value", s.diameter.value},
                   {"index_a", s.diameter.index_a},
                   {"index_b", s.diameter.index_b}});
  }
  return out;
}

json partition_json(const PartitionResult& r) {
  json j = {
      {"method", to_string(r.method)},
      {"labels", r.labels},
      {"ratio", r.ratio},
      {"original_diameter", r.original_diameter},
      {"nonempty_parts", r.nonempty_parts},
      {"label_count", r.label_count},
      {"part_diameters", parts_json(r.parts)},
      {"normalization",
       {{"scale", r.normalization.scale}, {"translation", vector_json(r.normalization.translation)}}},
      {"warnings", r.warnings},
  };
  if (r.slabs) j["slabs"] = {{"alpha", r.slabs->alpha}};
  return j;
}

json certificate_json(const SandwichCertificate& c) {
  return {
      {"n", c.g.dim()},
      {"p", pnorm_json(c.nm)},
      {"r", c.r},
      {"dual_margin", c.dual_margin},
      {"feasible", c.valid()},
      {"argmax_vertex", c.argmax_vertex},
      {"tight_vertices", c.tight_vertices},
      {"block_sizes", c.g.block_sizes()},
      {"matrix", matrix_json(c.g.matrix())},
      {"warnings", c.g.warnings()},
  };
}

json cover_json(const CoveringSpec& spec, const CoverReport& rep) {
  json centers = json::array();
  for (const auto& c : spec.centers) centers.push_back(vector_json(c));
  return {
      {"n", spec.dim},
      {"p", pnorm_json(spec.nm)},
      {"lambda", spec.lambda},
      {"centers", std::move(centers)},
      {"covered", rep.covered},
      {"worst_margin", rep.worst_margin},
      {"witness", vector_json(rep.witness)},
      {"samples_used", rep.samples_used},
  };
}

}  // namespace detail

using detail::json;

PointCloud parse_point_cloud(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("document: expected a JSON object");
  if (!doc.contains("dim")) throw std::invalid_argument("field \"dim\": missing");
  const json& dim_field = doc["dim"];
  if (!dim_field.is_number_integer() || dim_field.get<long long>() <= 0) {
    throw std::invalid_argument("field \"dim\": expected a positive integer");
  }
  const auto dim = static_cast<std::size_t>(dim_field.get<long long>());
  if (!doc.contains("points")) throw std::invalid_argument("field \"points\": missing");
  const json& pts = doc["points"];
  if (!pts.is_array()) throw std::invalid_argument("field \"points\": expected an array");

  PointCloud::Storage data(static_cast<Eigen::Index>(pts.size()), static_cast<Eigen::Index>(dim));
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const std::string where = "field \"points[" + std::to_string(i) + "]\"";
    const json& row = pts[i];
    if (!row.is_array()) throw std::invalid_argument(where + ": expected an array");
    if (row.size() != dim) {
      throw std::invalid_argument(where + ": has " + std::to_string(row.size()) + " coordinates, expected " +
                                  std::to_string(dim));
    }
    for (std::size_t j = 0; j < dim; ++j) {
      if (!row[j].is_number()) {
        throw std::invalid_argument("field \"points[" + std::to_string(i) + "][" + std::to_string(j) +
                                    "]\": expected a number");
      }
      const double v = row[j].get<double>();
      if (!std::isfinite(v)) {
        throw std::invalid_argument("field \"points[" + std::to_string(i) + "][" + std::to_string(j) +
                                    "]\": not finite");
      }
      data(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = v;
    }
  }
  if (pts.empty()) return PointCloud(dim);
  return PointCloud(std::move(data));
}

std::string to_json(const PointCloud& X) { return detail::point_cloud_json(X).dump(); }
std::string to_json(const PartitionResult& result) { return detail::partition_json(result).dump(); }
std::string to_json(const SandwichCertificate& cert) { return detail::certificate_json(cert).dump(); }
std::string to_json(const CoveringSpec& spec, const CoverReport& report) {
  return detail::cover_json(spec, report).dump();
}

}  // namespace borsuk::io
