#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "borsuk/lpcore.hpp"

namespace borsuk::cli {

/// Exit codes of `run`.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerificationFailed = 2;

/// Runs one subcommand (hadamard, bm, sandwich, cover, partition, bench).
/// `args` excludes the program name. Structured output goes to `out` unless
/// --output is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct BenchConfig {
  std::vector<PNorm> p_grid;
  std::vector<std::size_t> sizes;
  std::uint64_t seed = 0;
  /// Wall times make the table run-dependent; without this flag the column reads NA.
  bool timing = false;
};

/// CSV with columns p,n_points,method,nonempty_parts,ratio,wall_time_ms; one row
/// per (p, size), clouds drawn uniformly from C_{4,p}.
std::string bench(const BenchConfig& config);

}  // namespace borsuk::cli
