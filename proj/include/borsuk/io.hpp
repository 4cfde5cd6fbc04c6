#pragma once

#include <string>
#include <string_view>

#include "borsuk/covering.hpp"
#include "borsuk/lpcore.hpp"
#include "borsuk/partition.hpp"
#include "borsuk/sandwich.hpp"

namespace borsuk::io {

/// Parses {"dim": int, "points": [[float x dim], ...]}.
/// Throws std::invalid_argument naming the offending field.
PointCloud parse_point_cloud(std::string_view text);

/// Serialized JSON documents. Doubles are written in shortest round-trip form.
std::string to_json(const PointCloud& X);
std::string to_json(const PartitionResult& result);
std::string to_json(const SandwichCertificate& cert);
std::string to_json(const CoveringSpec& spec, const CoverReport& report);

}  // namespace borsuk::io
