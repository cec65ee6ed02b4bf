// Python bindings for the exact solvers. Geometry crosses the boundary as
// rational strings ("p/q") so nothing is ever rounded; structured results
// (certificates, partitions, triangulations) cross as plain dicts built
// from the canonical JSON form.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "topocut/error.hpp"

#include "topocut/dolnikov.hpp"
#include "topocut/generators.hpp"
#include "topocut/ham_sandwich.hpp"
#include "topocut/json_io.hpp"
#include "topocut/kneser.hpp"
#include "topocut/necklace.hpp"
#include "topocut/perturb.hpp"
#include "topocut/predicates.hpp"
#include "topocut/rainbow.hpp"
#include "topocut/tucker.hpp"

namespace py = pybind11;
namespace io = topocut::io;

namespace {

using RatRow = std::vector<std::string>;
using RatRows = std::vector<RatRow>;

topocut::Point point_from_strings(const RatRow& coords) {
  topocut::Point p;
  for (const auto& c : coords) p.coords.push_back(topocut::parse_rational(c));
  return p;
}

std::vector<topocut::Point> points_from_strings(const RatRows& rows) {
  std::vector<topocut::Point> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(point_from_strings(r));
  return out;
}

topocut::ColoredPointSet point_set_from_strings(int dimension,
                                                const std::vector<RatRows>& classes) {
  topocut::ColoredPointSet ps(dimension, {});
  for (const auto& cls : classes) ps.classes.push_back(points_from_strings(cls));
  ps.validate();
  return ps;
}

RatRow point_to_strings(const topocut::Point& p) {
  RatRow out;
  for (const auto& c : p.coords) out.push_back(topocut::rational_to_string(c));
  return out;
}

py::object json_to_py(const io::Json& j) {
  const auto text = j.dump();
  py::module_ json = py::module_::import("json");
  return json.attr("loads")(text);
}

topocut::Necklace necklace_from(int d, const std::vector<int>& stones) {
  topocut::Necklace nk;
  nk.d = d;
  nk.stones = stones;
  nk.validate();
  return nk;
}

}  // namespace

PYBIND11_MODULE(_topocut, m) {
  m.doc() = "exact solvers for discrete cuts, fair splits, and colorings";

  py::register_exception<topocut::Error>(m, "TopocutError");

  m.def("orientation",
        [](const RatRows& points) { return topocut::orientation(points_from_strings(points)); },
        py::arg("points"),
        "Sign of the orientation determinant of d+1 points in R^d.");

  m.def("is_affinely_independent", [](const RatRows& points) {
    return topocut::is_affinely_independent(points_from_strings(points));
  });

  m.def("is_general_position", [](int dimension, const std::vector<RatRows>& classes) {
    return topocut::is_general_position(point_set_from_strings(dimension, classes));
  });

  m.def("moment_curve_point", [](const std::string& t, int d) {
    return point_to_strings(topocut::moment_curve_point(topocut::parse_rational(t), d));
  });

  m.def("hyperplane_through", [](const RatRows& points) {
    return json_to_py(io::hyperplane_to_json(topocut::hyperplane_through(points_from_strings(points))));
  });

  m.def("perturb", [](int dimension, const std::vector<RatRows>& classes, uint64_t seed) {
    const auto result = topocut::perturb(point_set_from_strings(dimension, classes), seed);
    py::dict out;
    out["points"] = json_to_py(io::point_set_to_json(result.points));
    out["eta"] = topocut::rational_to_string(result.eta);
    out["attempts"] = result.attempts;
    return out;
  }, py::arg("dimension"), py::arg("classes"), py::arg("seed"));

  m.def("find_cut", [](int dimension, const std::vector<RatRows>& classes) {
    return json_to_py(io::certificate_to_json(
        topocut::find_cut(point_set_from_strings(dimension, classes))));
  });

  m.def("verify_cut", [](int dimension, const std::vector<RatRows>& classes,
                         const std::string& certificate_json) {
    return topocut::verify_cut(point_set_from_strings(dimension, classes),
                               io::certificate_from_json(io::parse_json(certificate_json)));
  });

  m.def("enumerate_all_cuts", [](int dimension, const std::vector<RatRows>& classes) {
    const auto cuts = topocut::enumerate_all_cuts(point_set_from_strings(dimension, classes));
    py::list out;
    for (const auto& cert : cuts) out.append(json_to_py(io::certificate_to_json(cert)));
    return out;
  });

  m.def("rainbow_partition", [](int dimension, const std::vector<RatRows>& classes) {
    return json_to_py(io::rainbow_to_json(
        topocut::rainbow_partition(point_set_from_strings(dimension, classes))));
  });

  m.def("verify_rainbow", [](int dimension, const std::vector<RatRows>& classes,
                             const std::string& partition_json) {
    return topocut::verify_rainbow(point_set_from_strings(dimension, classes),
                                   io::rainbow_from_json(io::parse_json(partition_json)));
  });

  m.def("hulls_disjoint", [](const RatRows& a, const RatRows& b) {
    return topocut::hulls_disjoint(points_from_strings(a), points_from_strings(b));
  });

  m.def("necklace_split", [](int d, const std::vector<int>& stones) {
    return json_to_py(io::split_to_json(topocut::split_via_moment_curve(necklace_from(d, stones))));
  });

  m.def("necklace_split_brute_force", [](int d, const std::vector<int>& stones, int max_cuts) {
    const auto split = topocut::split_brute_force(necklace_from(d, stones), max_cuts);
    return split ? json_to_py(io::split_to_json(*split)) : py::object(py::none());
  });

  m.def("necklace_verify_split", [](int d, const std::vector<int>& stones,
                                    const std::string& split_json) {
    return topocut::verify_split(necklace_from(d, stones),
                                 io::split_from_json(io::parse_json(split_json)));
  });

  m.def("necklace_min_cuts",
        [](int d, const std::vector<int>& stones) { return topocut::min_cuts(necklace_from(d, stones)); });

  m.def("kneser_vertices", [](int n, int k) { return topocut::build_kneser(n, k).vertices; });

  m.def("kneser_edge_count",
        [](int n, int k) { return topocut::build_kneser(n, k).graph.edge_count(); });

  m.def("kneser_chromatic_number",
        [](int n, int k) { return topocut::chromatic_number(topocut::build_kneser(n, k)); });

  m.def("kneser_explicit_coloring", [](int n, int k) {
    const auto g = topocut::build_kneser(n, k);
    const auto c = topocut::explicit_coloring(g);
    py::dict out;
    out["palette_size"] = c.palette_size;
    out["colors"] = c.colors;
    out["proper"] = topocut::is_proper(g, c);
    return out;
  });

  m.def("hypergraph_is_m_colorable",
        [](int ground, const std::vector<std::vector<int>>& edges, int m) {
          const auto witness = topocut::is_m_colorable(topocut::Hypergraph(ground, edges), m);
          return witness ? py::object(py::cast(*witness)) : py::object(py::none());
        });

  m.def("colorability_defect", [](int ground, const std::vector<std::vector<int>>& edges, int m) {
    const auto cert = topocut::colorability_defect(topocut::Hypergraph(ground, edges), m);
    py::dict out;
    out["m"] = cert.m;
    out["defect"] = cert.defect;
    out["witness_removed"] = cert.witness_removed;
    out["witness_coloring"] = cert.witness_coloring;
    return out;
  });

  m.def("check_dolnikov", [](int ground, const std::vector<std::vector<int>>& edges) {
    const auto report = topocut::check_dolnikov(topocut::Hypergraph(ground, edges));
    py::dict out;
    out["chi"] = report.chi;
    out["cd2"] = report.cd2;
    out["holds"] = report.holds;
    return out;
  });

  m.def("verify_dolnikov_exhaustive", &topocut::verify_dolnikov_exhaustive, py::arg("ground_size"),
        "Checks chi(KG(F)) >= cd_2(F) over every isomorphism class; returns the class count.");

  m.def("build_disk_triangulation", [](int n, int resolution) {
    return json_to_py(io::triangulation_to_json(topocut::build_disk_triangulation(n, resolution)));
  });

  m.def("validate_complex", [](const std::string& triangulation_json) {
    return topocut::validate_complex(
        io::triangulation_from_json(io::parse_json(triangulation_json)));
  });

  m.def("find_complementary_edge",
        [](const std::string& triangulation_json, const std::map<int, int>& labels) {
          const auto t = io::triangulation_from_json(io::parse_json(triangulation_json));
          topocut::TuckerLabeling lab;
          lab.labels = labels;
          const auto edge = topocut::find_complementary_edge(t, lab);
          return edge ? py::object(py::make_tuple(edge->first, edge->second))
                      : py::object(py::none());
        });

  m.def("tucker_exhaustive", [](int n, int resolution) {
    const auto t = topocut::build_disk_triangulation(n, resolution);
    uint64_t swept = 0;
    bool all = true;
    topocut::enumerate_labelings(t, [&](const topocut::TuckerLabeling& lab) {
      ++swept;
      if (!topocut::find_complementary_edge(t, lab)) {
        all = false;
        return false;
      }
      return true;
    });
    py::dict out;
    out["labelings_swept"] = swept;
    out["all_have_complementary_edge"] = all;
    return out;
  });

  m.def("gen_points", [](int dimension, const std::vector<int>& class_sizes, uint64_t seed) {
    return json_to_py(io::point_set_to_json(topocut::gen_points(dimension, class_sizes, seed)));
  }, py::arg("dimension"), py::arg("class_sizes"), py::arg("seed"));

  m.def("gen_necklace", [](const std::vector<int>& counts, uint64_t seed) {
    const auto nk = topocut::gen_necklace(counts, seed);
    py::dict out;
    out["d"] = nk.d;
    out["stones"] = nk.stones;
    return out;
  }, py::arg("counts"), py::arg("seed"));
}
