#include "borsuk/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "borsuk/covering.hpp"
#include "borsuk/hadamard.hpp"
#include "borsuk/io.hpp"
#include "borsuk/partition.hpp"
#include "borsuk/sandwich.hpp"
#include "json_convert.hpp"

namespace borsuk::cli {

namespace {

using io::detail::json;

struct RunConfig {
  int n = 4;
  int order = 4;
  std::string p = "2";
  std::string construction = "blocks";
  std::uint64_t seed = 0;
  std::size_t samples = kDefaultCoverSamples;
  std::size_t sandwich_samples = kSandwichSamples;
  double tolerance = kTolerance;
  double scale = 1.0;
  std::optional<double> shrink;
  std::string input;
  std::string output;
  bool verify = false;
  std::string p_grid = "1,1.5,2,3";
  std::string sizes = "50,500";
  bool timing = false;
};

// Thrown for failures that map to the verification exit code.
struct VerificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string rational_string(const Rational& r) {
  return r.den == 1 ? std::to_string(r.num) : std::to_string(r.num) + "/" + std::to_string(r.den);
}

LinearMap construct_g(const std::string& construction, int n, const PNorm& nm) {
  if (construction == "blocks") return build_g(n, nm);
  if (construction == "sylvester") {
    if (n < 1 || !std::has_single_bit(static_cast<unsigned>(n))) {
      throw std::invalid_argument("--construction sylvester requires n to be a power of two");
    }
    return build_g(n, nm);
  }
  if (construction == "4kj") {
    const int k = n / 4;
    const int j = n % 4;
    if (k < 1) throw std::invalid_argument("--construction 4kj requires n >= 4");
    auto H = known_hadamard(static_cast<std::size_t>(4 * k));
    if (!H) throw std::invalid_argument("no Hadamard matrix of order " + std::to_string(4 * k) + " is available");
    return build_g_4kj(k, j, nm, *H);
  }
  throw std::invalid_argument("unknown construction \"" + construction + "\" (sylvester, blocks, 4kj)");
}

json exact_json(const LinearMap& g, const PNorm& nm) {
  const auto& exact = g.scale_exact();
  if (!exact || !(nm.is_one() || nm.is_two() || nm.is_infinite()) || g.dim() > 20) return nullptr;
  const double expected = std::pow(static_cast<double>(g.dim()), -nm.inv_p());
  if (exact->scale != expected) return nullptr;
  const ExactCertificate cert = exact_hadamard_certificate(exact->signs, nm);
  return {{"power", cert.power},
          {"r_power", rational_string(cert.r_power)},
          {"dual_power", rational_string(cert.dual_power)}};
}

json cmd_hadamard(const RunConfig& cfg) {
  if (cfg.order < 1) throw std::invalid_argument("--order must be positive");
  auto H = known_hadamard(static_cast<std::size_t>(cfg.order));
  if (!H) {
    throw std::invalid_argument("no construction for order " + std::to_string(cfg.order) +
                                " (powers of two and 12 are available)");
  }
  json rows = json::array();
  for (Eigen::Index i = 0; i < H->entries().rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < H->entries().cols(); ++j) row.push_back(H->entries()(i, j));
    rows.push_back(std::move(row));
  }
  const bool ok = is_hadamard(*H);
  if (!ok) throw VerificationFailure("constructed matrix failed the Hadamard check");
  return {{"order", cfg.order},
          {"construction", std::has_single_bit(static_cast<unsigned>(cfg.order)) ? "sylvester" : "paley"},
          {"hadamard", ok},
          {"rows", std::move(rows)}};
}

json cmd_bm(const RunConfig& cfg, bool& failed) {
  const PNorm nm = parse_pnorm(cfg.p);
  const LinearMap g = construct_g(cfg.construction, cfg.n, nm);
  const SandwichCertificate cert = bm_upper_certificate(g, nm);
  json j = io::detail::certificate_json(cert);
  j["construction"] = cfg.construction;
  j["lower_bound"] = (!nm.is_infinite() && nm.p() < 2.0) ? json(bm_lower_bound(cfg.n, nm)) : json(nullptr);
  j["exact"] = exact_json(g, nm);
  failed = !cert.valid();
  return j;
}

json cmd_sandwich(const RunConfig& cfg, bool& failed) {
  const PNorm nm = parse_pnorm(cfg.p);
  const LinearMap g = construct_g(cfg.construction, cfg.n, nm).scaled(cfg.scale);
  const SandwichReport rep = check_sandwich(g, nm, cfg.sandwich_samples, cfg.seed);
  failed = !rep.left_inclusion() || !rep.sampling_agrees();
  return {{"n", cfg.n},
          {"p", io::detail::pnorm_json(nm)},
          {"construction", cfg.construction},
          {"scale", cfg.scale},
          {"left_margin", rep.left_margin},
          {"left_inclusion", rep.left_inclusion()},
          {"r", rep.r},
          {"argmax_vertex", rep.argmax_vertex},
          {"tight_vertices", rep.tight_vertices},
          {"tight_directions", rep.tight_directions},
          {"samples", rep.samples},
          {"sampled_max", rep.sampled_max},
          {"sampling_agrees", rep.sampling_agrees()}};
}

json cmd_cover(const RunConfig& cfg, bool& failed) {
  const PNorm nm = parse_pnorm(cfg.p);
  if (cfg.n < 2) throw std::invalid_argument("--n must be at least 2");
  CoveringSpec spec = lemma5_spec(static_cast<std::size_t>(cfg.n), nm);
  if (cfg.shrink) {
    if (!(*cfg.shrink > 0.0)) throw std::invalid_argument("--shrink must be positive");
    spec.lambda = *cfg.shrink;
  }
  const CoverReport rep = verify_covering(spec, cfg.samples, cfg.seed, cfg.tolerance);
  failed = !rep.covered;
  return io::detail::cover_json(spec, rep);
}

json cmd_partition(const RunConfig& cfg, bool& failed) {
  const PNorm nm = parse_pnorm(cfg.p);
  std::ifstream in(cfg.input);
  if (!in) throw std::invalid_argument("cannot read input file \"" + cfg.input + "\"");
  std::stringstream buf;
  buf << in.rdbuf();
  const PointCloud X = io::parse_point_cloud(buf.str());
  PartitionResult res;
  try {
    res = partition(X, nm);
  } catch (const std::runtime_error& e) {
    throw VerificationFailure(e.what());
  }
  json j = io::detail::partition_json(res);
  j["p"] = io::detail::pnorm_json(nm);
  if (cfg.verify) {
    const PartitionVerification v = verify_partition(X, nm, res);
    j["verified"] = v.valid;
    j["verified_ratio"] = v.ratio;
    failed = !v.valid;
  }
  return j;
}

std::string cmd_bench(const RunConfig& cfg) {
  BenchConfig bc;
  for (const auto& p : split_list(cfg.p_grid)) bc.p_grid.push_back(parse_pnorm(p));
  for (const auto& s : split_list(cfg.sizes)) {
    std::size_t pos = 0;
    const unsigned long long v = std::stoull(s, &pos);
    if (pos != s.size() || v == 0) throw std::invalid_argument("--sizes entries must be positive integers");
    bc.sizes.push_back(static_cast<std::size_t>(v));
  }
  bc.seed = cfg.seed;
  bc.timing = cfg.timing;
  return bench(bc);
}

void emit(const std::string& text, const RunConfig& cfg, std::ostream& out) {
  if (cfg.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.output);
  if (!file) throw std::invalid_argument("cannot write output file \"" + cfg.output + "\"");
  file << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Borsuk partitions, Banach-Mazur certificates and coverings in l_p spaces", "borsuk"};
  app.require_subcommand(1);

  auto add_p = [&](CLI::App* sub) { sub->add_option("--p", cfg.p, "exponent p >= 1, or inf")->required(); };
  auto add_output = [&](CLI::App* sub) { sub->add_option("--output,-o", cfg.output, "write to file instead of stdout"); };

  auto* had = app.add_subcommand("hadamard", "Emit a Hadamard matrix as JSON rows");
  had->add_option("--order", cfg.order, "matrix order")->required();
  add_output(had);

  auto* bm = app.add_subcommand("bm", "Banach-Mazur upper certificate for C_n vs C_{n,p}");
  bm->add_option("--n", cfg.n, "dimension")->required();
  add_p(bm);
  bm->add_option("--construction", cfg.construction, "sylvester | blocks | 4kj");
  add_output(bm);

  auto* sw = app.add_subcommand("sandwich", "Check C_{n,p} in gC_n in rC_{n,p} with a sampling cross-check");
  sw->add_option("--n", cfg.n, "dimension")->required();
  add_p(sw);
  sw->add_option("--construction", cfg.construction, "sylvester | blocks | 4kj");
  sw->add_option("--scale", cfg.scale, "multiply g by this factor");
  sw->add_option("--samples", cfg.sandwich_samples, "sampled points of C_{n,p}");
  sw->add_option("--seed", cfg.seed, "random seed");
  add_output(sw);

  auto* cover = app.add_subcommand("cover", "Verify the 2n-translate covering of C_{n,p}");
  cover->add_option("--n", cfg.n, "dimension")->required();
  add_p(cover);
  cover->add_option("--samples", cfg.samples, "random boundary samples");
  cover->add_option("--shrink", cfg.shrink, "override the shrink factor lambda");
  cover->add_option("--seed", cfg.seed, "random seed");
  cover->add_option("--tolerance", cfg.tolerance, "coverage tolerance");
  add_output(cover);

  auto* part = app.add_subcommand("partition", "Partition a 4-dimensional point cloud");
  part->add_option("--input", cfg.input, "point cloud JSON")->required();
  add_p(part);
  part->add_flag("--verify", cfg.verify, "recompute part diameters and fail unless ratio < 1");
  add_output(part);

  auto* bench_cmd = app.add_subcommand("bench", "Seeded partition benchmark as CSV");
  bench_cmd->add_option("--p-grid", cfg.p_grid, "comma-separated p values");
  bench_cmd->add_option("--sizes", cfg.sizes, "comma-separated cloud sizes");
  bench_cmd->add_option("--seed", cfg.seed, "random seed");
  bench_cmd->add_flag("--timing", cfg.timing, "record wall times (output no longer reproducible)");
  add_output(bench_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    bool failed = false;
    std::string text;
    if (*had) text = cmd_hadamard(cfg).dump(2) + "\n";
    else if (*bm) text = cmd_bm(cfg, failed).dump(2) + "\n";
    else if (*sw) text = cmd_sandwich(cfg, failed).dump(2) + "\n";
    else if (*cover) text = cmd_cover(cfg, failed).dump(2) + "\n";
    else if (*part) text = cmd_partition(cfg, failed).dump(2) + "\n";
    else if (*bench_cmd) text = cmd_bench(cfg);
    emit(text, cfg, out);
    if (failed) {
      err << "verification failed\n";
      return kExitVerificationFailed;
    }
    return kExitOk;
  } catch (const VerificationFailure& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerificationFailed;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace borsuk::cli
