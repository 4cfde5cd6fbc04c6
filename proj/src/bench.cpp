#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>

#include "borsuk/cli.hpp"
#include "borsuk/partition.hpp"

namespace borsuk::cli {

namespace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::uint64_t cell_seed(std::uint64_t seed, std::size_t p_index, std::size_t size_index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(p_index), static_cast<std::uint32_t>(size_index)};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

}  // namespace

std::string bench(const BenchConfig& config) {
  std::ostringstream csv;
  csv << "p,n_points,method,nonempty_parts,ratio,wall_time_ms\n";
  for (std::size_t pi = 0; pi < config.p_grid.size(); ++pi) {
    const PNorm& nm = config.p_grid[pi];
    for (std::size_t si = 0; si < config.sizes.size(); ++si) {
      const PointCloud X = sample_ball_cloud(4, config.sizes[si], nm, cell_seed(config.seed, pi, si));
      const auto start = std::chrono::steady_clock::now();
      const PartitionResult res = partition(X, nm);
      const auto stop = std::chrono::steady_clock::now();
      csv << nm.to_string() << ',' << X.size() << ',' << to_string(res.method) << ',' << res.nonempty_parts << ','
          << format_double(res.ratio) << ',';
      if (config.timing) {
        csv << format_double(std::chrono::duration<double, std::milli>(stop - start).count());
      } else {
        csv << "NA";
      }
      csv << '\n';
    }
  }
  return csv.str();
}

}  // namespace borsuk::cli
