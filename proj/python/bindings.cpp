#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <string>

#include "borsuk/covering.hpp"
#include "borsuk/hadamard.hpp"
#include "borsuk/io.hpp"
#include "borsuk/partition.hpp"
#include "borsuk/sandwich.hpp"

namespace py = pybind11;
using namespace borsuk;

namespace {

// p arrives as a float or the string "inf" (float('inf') is accepted too).
PNorm to_pnorm(const py::object& p) {
  if (py::isinstance<PNorm>(p)) return p.cast<PNorm>();
  if (py::isinstance<py::str>(p)) return parse_pnorm(p.cast<std::string>());
  const double v = p.cast<double>();
  if (std::isinf(v) && v > 0) return PNorm::infinity();
  return PNorm(v);
}

PointCloud to_cloud(const PointCloud::Storage& points) {
  if (points.cols() == 0) throw std::invalid_argument("points must have at least one column");
  if (points.rows() == 0) return PointCloud(static_cast<std::size_t>(points.cols()));
  return PointCloud(points);
}

py::dict partition_dict(const PartitionResult& r) {
  py::list parts;
  for (const auto& s : r.parts) {
    py::dict d;
    d["label"] = s.label;
    d["size"] = s.size;
    d["diameter"] = s.diameter.value;
    d["index_a"] = s.diameter.index_a;
    d["index_b"] = s.diameter.index_b;
    parts.append(d);
  }
  py::dict out;
  out["method"] = to_string(r.method);
  out["labels"] = r.labels;
  out["label_count"] = r.label_count;
  out["parts"] = parts;
  out["original_diameter"] = r.original_diameter;
  out["ratio"] = r.ratio;
  out["nonempty_parts"] = r.nonempty_parts;
  out["scale"] = r.normalization.scale;
  out["translation"] = r.normalization.translation;
  out["alpha"] = r.slabs ? py::cast(r.slabs->alpha) : py::none();
  out["warnings"] = r.warnings;
  return out;
}

}  // namespace

PYBIND11_MODULE(_borsuk, m) {
  m.doc() = "Borsuk partitions, Banach-Mazur certificates and coverings in l_p spaces";

  py::class_<PNorm>(m, "PNorm")
      .def(py::init<double>())
      .def_static("infinity", &PNorm::infinity)
      .def_static("parse", &parse_pnorm)
      .def_property_readonly("is_infinite", &PNorm::is_infinite)
      .def_property_readonly("p", [](const PNorm& nm) { return nm.is_infinite() ? INFINITY : nm.p(); })
      .def("dual", &PNorm::dual)
      .def("__eq__", [](const PNorm& a, const PNorm& b) { return a == b; })
      .def("__repr__", [](const PNorm& nm) { return "PNorm(" + nm.to_string() + ")"; });

  m.def("pnorm", [](const Vector& x, const py::object& p) { return pnorm(x, to_pnorm(p)); }, py::arg("x"),
        py::arg("p"));
  m.def(
      "diameter",
      [](const PointCloud::Storage& pts, const py::object& p) {
        const auto w = diameter(to_cloud(pts), to_pnorm(p));
        return py::make_tuple(w.value, w.index_a, w.index_b);
      },
      py::arg("points"), py::arg("p"), "(value, index_a, index_b) of the first diametral pair.");
  m.def("support", [](const Vector& u, const py::object& p) { return support(u, to_pnorm(p)); }, py::arg("u"),
        py::arg("p"));
  m.def(
      "support_maximizer", [](const Vector& u, const py::object& p) { return support_maximizer(u, to_pnorm(p)); },
      py::arg("u"), py::arg("p"));
  m.def(
      "sample_ball",
      [](std::size_t n, std::size_t count, const py::object& p, std::uint64_t seed) {
        return sample_ball_cloud(n, count, to_pnorm(p), seed).data();
      },
      py::arg("n"), py::arg("count"), py::arg("p"), py::arg("seed") = 0);

  m.def("sylvester", [](int k) { return Eigen::MatrixXi(sylvester(k).entries()); }, py::arg("k"));
  m.def("paper_h4", [] { return Eigen::MatrixXi(paper_h4().entries()); });
  m.def(
      "known_hadamard",
      [](std::size_t order) -> py::object {
        auto H = known_hadamard(order);
        if (!H) return py::none();
        return py::cast(Eigen::MatrixXi(H->entries()));
      },
      py::arg("order"));
  m.def("is_hadamard", [](const Eigen::MatrixXi& M) { return is_hadamard(M); }, py::arg("matrix"));
  m.def(
      "build_g", [](int n, const py::object& p) { return build_g(n, to_pnorm(p)).matrix(); }, py::arg("n"),
      py::arg("p"));

  m.def(
      "bm_certificate",
      [](const Matrix& g, const py::object& p) {
        const PNorm nm = to_pnorm(p);
        const auto cert = bm_upper_certificate(LinearMap::from_matrix(g), nm);
        py::dict d;
        d["r"] = cert.r;
        d["dual_margin"] = cert.dual_margin;
        d["feasible"] = cert.valid();
        d["argmax_vertex"] = cert.argmax_vertex;
        d["tight_vertices"] = cert.tight_vertices;
        return d;
      },
      py::arg("g"), py::arg("p"));
  m.def(
      "dual_feasibility",
      [](const Matrix& g, const py::object& p) { return dual_feasibility(LinearMap::from_matrix(g), to_pnorm(p)); },
      py::arg("g"), py::arg("p"));
  m.def(
      "bm_lower_bound", [](int n, const py::object& p) { return bm_lower_bound(n, to_pnorm(p)); }, py::arg("n"),
      py::arg("p"));
  m.def(
      "check_sandwich",
      [](const Matrix& g, const py::object& p, std::size_t samples, std::uint64_t seed) {
        const auto rep = check_sandwich(LinearMap::from_matrix(g), to_pnorm(p), samples, seed);
        py::dict d;
        d["left_margin"] = rep.left_margin;
        d["left_inclusion"] = rep.left_inclusion();
        d["r"] = rep.r;
        d["tight_directions"] = rep.tight_directions;
        d["argmax_vertex"] = rep.argmax_vertex;
        d["tight_vertices"] = rep.tight_vertices;
        d["sampled_max"] = rep.sampled_max;
        d["samples"] = rep.samples;
        d["sampling_agrees"] = rep.sampling_agrees();
        return d;
      },
      py::arg("g"), py::arg("p"), py::arg("samples") = kSandwichSamples, py::arg("seed") = 0);

  m.def(
      "verify_covering",
      [](std::size_t n, const py::object& p, std::optional<double> shrink, std::size_t samples, std::uint64_t seed,
         double tolerance) {
        CoveringSpec spec = lemma5_spec(n, to_pnorm(p));
        if (shrink) spec.lambda = *shrink;
        const auto rep = verify_covering(spec, samples, seed, tolerance);
        py::dict d;
        d["lambda"] = spec.lambda;
        d["covered"] = rep.covered;
        d["worst_margin"] = rep.worst_margin;
        d["witness"] = rep.witness;
        d["samples_used"] = rep.samples_used;
        return d;
      },
      py::arg("n"), py::arg("p"), py::arg("shrink") = py::none(), py::arg("samples") = kDefaultCoverSamples,
      py::arg("seed") = 0, py::arg("tolerance") = kTolerance,
      "Checks the 2n-translate covering; `shrink` overrides lambda.");
  m.def(
      "gamma_estimate",
      [](std::size_t n, const py::object& p, double epsilon, std::size_t samples, std::uint64_t seed) {
        const PNorm nm = to_pnorm(p);
        return gamma_estimate(n, nm, lemma5_spec(n, nm).centers, epsilon, samples, seed);
      },
      py::arg("n"), py::arg("p"), py::arg("epsilon") = 1e-4, py::arg("samples") = kDefaultCoverSamples,
      py::arg("seed") = 0);

  m.def(
      "partition",
      [](const PointCloud::Storage& pts, const py::object& p) { return partition_dict(partition(to_cloud(pts), to_pnorm(p))); },
      py::arg("points"), py::arg("p"));
  m.def(
      "verify_partition",
      [](const PointCloud::Storage& pts, const py::object& p, const std::vector<int>& labels, int label_count) {
        PartitionResult r;
        r.labels = labels;
        r.label_count = label_count;
        const auto v = verify_partition(to_cloud(pts), to_pnorm(p), r);
        return py::make_tuple(v.valid, v.ratio);
      },
      py::arg("points"), py::arg("p"), py::arg("labels"), py::arg("label_count") = 16,
      "(valid, ratio) recomputed from the labels alone.");
  m.def(
      "partition_json",
      [](const PointCloud::Storage& pts, const py::object& p) { return io::to_json(partition(to_cloud(pts), to_pnorm(p))); },
      py::arg("points"), py::arg("p"));
}
