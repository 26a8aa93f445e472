#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "simplewedge/conjecture.hpp"
#include "simplewedge/constructions.hpp"
#include "simplewedge/errors.hpp"
#include "simplewedge/io.hpp"
#include "simplewedge/orbit.hpp"
#include "simplewedge/report.hpp"
#include "simplewedge/svg.hpp"
#include "simplewedge/wedge.hpp"

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;
using namespace swedge;

namespace {

py::object to_py_int(const BigInt& v) {
  return py::reinterpret_steal<py::object>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

py::object to_fraction(const Rational& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py_int(r.numerator()), to_py_int(r.denominator()));
}

// Accepts int, Fraction or str ("4/3").
Rational to_rational(const py::handle& obj) {
  try {
    return Rational::parse(py::str(obj).cast<std::string>());
  } catch (const std::invalid_argument& e) {
    throw py::value_error(e.what());
  }
}

Point to_point(const py::handle& obj) {
  auto seq = obj.cast<py::sequence>();
  if (seq.size() != 2) throw py::value_error("a point needs exactly two coordinates");
  return Point{to_rational(seq[0]), to_rational(seq[1])};
}

std::vector<Point> to_points(const py::iterable& items) {
  std::vector<Point> out;
  for (auto item : items) out.push_back(to_point(item));
  return out;
}

py::tuple point_to_py(const Point& p) { return py::make_tuple(to_fraction(p.x), to_fraction(p.y)); }

py::list points_to_py(const std::vector<Point>& points) {
  py::list out;
  for (const auto& p : points) out.append(point_to_py(p));
  return out;
}

py::tuple key_to_py(const LineKey& key) {
  return py::make_tuple(to_py_int(key.a()), to_py_int(key.b()), to_py_int(key.c()));
}

LineKey key_from_py(const py::sequence& seq) {
  if (seq.size() != 3) throw py::value_error("a line key needs three coefficients");
  auto big = [](const py::handle& h) { return BigInt(py::str(h).cast<std::string>()); };
  return LineKey(big(seq[0]), big(seq[1]), big(seq[2]));
}

py::dict certificate_to_py(const WedgeCertificate& w) {
  py::dict d;
  d["apex"] = w.apex;
  d["arms"] = py::make_tuple(w.arm1, w.arm2);
  d["keys"] = py::make_tuple(key_to_py(w.key1), key_to_py(w.key2));
  return d;
}

py::dict orbit_to_py(const Orbit& orbit) {
  py::dict d;
  d["seq"] = orbit.seq;
  d["kind"] = orbit.kind == OrbitKind::Closed ? "closed" : "open";
  d["length"] = orbit_length(orbit);
  d["maximal"] = orbit.maximal;
  return d;
}

py::dict conjecture(std::size_t n, std::size_t trials, std::uint64_t seed, std::int64_t range,
                    bool exhaustive, std::size_t grid, unsigned threads) {
  ConjectureOptions options;
  options.n = n;
  options.mode = exhaustive ? SearchMode::Exhaustive : SearchMode::Random;
  options.trials = trials;
  options.seed = seed;
  options.range = range;
  options.grid = grid;
  options.threads = threads;
  ConjectureSummary summary;
  {
    py::gil_scoped_release release;
    summary = conjecture_search(options);
  }
  py::list failures;
  for (const auto& f : summary.failures) {
    py::dict d;
    d["seed"] = f.seed;
    d["trial"] = f.trial;
    d["n"] = f.n;
    d["points"] = points_to_py(f.points);
    d["wedge_found"] = f.wedge_found;
    failures.append(d);
  }
  py::dict out;
  out["scanned"] = summary.scanned;
  out["rejected"] = summary.rejected;
  out["failures"] = failures;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact analysis of simple lines and simple wedges in planar point sets";

  py::register_exception<Error>(m, "SimpleWedgeError", PyExc_ValueError);

  py::class_<Configuration>(m, "Configuration")
      .def(py::init([](const py::iterable& points) { return build_configuration(to_points(points)); }),
           py::arg("points"))
      .def("__len__", &Configuration::size)
      .def_property_readonly("points", [](const Configuration& c) { return points_to_py(c.points()); })
      .def("__eq__", [](const Configuration& l, const Configuration& r) { return l == r; });

  m.def("line_through", [](const py::handle& p, const py::handle& q) {
    return key_to_py(line_through(to_point(p), to_point(q)));
  });
  m.def("collinear", [](const py::handle& p, const py::handle& q, const py::handle& r) {
    return collinear(to_point(p), to_point(q), to_point(r));
  });
  m.def("intersect", [](const py::sequence& l1, const py::sequence& l2) -> py::object {
    auto p = intersect(key_from_py(l1), key_from_py(l2));
    if (!p) return py::none();
    return point_to_py(*p);
  });

  m.def("spanned_lines", [](const Configuration& c) {
    py::list out;
    for (const auto& line : spanned_lines(c).lines()) {
      out.append(py::make_tuple(key_to_py(line.key), line.points));
    }
    return out;
  });
  m.def("simple_lines", [](const Configuration& c) {
    py::list out;
    for (const auto& line : simple_lines(c)) {
      out.append(py::make_tuple(key_to_py(line.key), line.endpoints));
    }
    return out;
  });
  m.def("is_ell_bounded", &is_ell_bounded, py::arg("config"), py::arg("ell"));
  m.def("third_point", &third_point, py::arg("config"), py::arg("i"), py::arg("j"));

  m.def("verify_orbit",
        [](const Configuration& c, std::size_t a, std::size_t b, const std::vector<std::size_t>& seq) {
          return verify_orbit(c, make_base_line(c, a, b), seq);
        },
        py::arg("config"), py::arg("a"), py::arg("b"), py::arg("seq"));
  m.def("maximal_orbit",
        [](const Configuration& c, std::size_t a, std::size_t b, std::size_t start) {
          return orbit_to_py(maximal_orbit(c, make_base_line(c, a, b), start));
        },
        py::arg("config"), py::arg("a"), py::arg("b"), py::arg("start"));
  m.def("decompose",
        [](const Configuration& c, std::size_t a, std::size_t b) {
          Decomposition parts = decompose(c, make_base_line(c, a, b));
          py::list closed;
          for (const auto& o : parts.closed) closed.append(orbit_to_py(o));
          py::dict d;
          d["closed"] = closed;
          d["open"] = parts.open ? py::object(orbit_to_py(*parts.open)) : py::none();
          return d;
        },
        py::arg("config"), py::arg("a"), py::arg("b"));

  m.def("find_wedge_from_line",
        [](const Configuration& c, std::size_t a, std::size_t b) -> py::object {
          auto w = find_wedge_from_line(c, make_base_line(c, a, b));
          if (!w) return py::none();
          return certificate_to_py(*w);
        },
        py::arg("config"), py::arg("a"), py::arg("b"));
  m.def("brute_force_wedges", [](const Configuration& c) {
    py::list out;
    for (const auto& w : brute_force_wedges(c)) out.append(certificate_to_py(w));
    return out;
  });
  m.def("wedge_coverage", [](const Configuration& c) {
    py::list out;
    for (const auto& e : wedge_coverage(c).entries) {
      py::dict d;
      d["key"] = key_to_py(e.line.key);
      d["endpoints"] = e.line.endpoints;
      d["covered"] = e.covered();
      d["certificate"] = e.certificate ? py::object(certificate_to_py(*e.certificate)) : py::none();
      out.append(d);
    }
    return out;
  });

  m.def("six_point", &six_point);
  m.def("nine_point", &nine_point);
  m.def("closed_orbit_config", &closed_orbit_config, py::arg("k"));
  m.def("g_extended", &g_extended, py::arg("m"));

  m.def("analyze_json", [](const Configuration& c) { return report_to_json(analyze(c)); });
  m.def("render_svg", [](const Configuration& c) { return render_svg(c, analyze(c)); });
  m.def("parse_points", [](const std::string& text) { return points_to_py(parse_points(text)); });
  m.def("write_points", [](const py::iterable& points) { return write_points(to_points(points)); });

  m.def("conjecture_search", &conjecture, py::arg("n"), py::arg("trials") = 1000,
        py::arg("seed") = 1, py::arg("range") = 50, py::arg("exhaustive") = false,
        py::arg("grid") = 3, py::arg("threads") = 0);

#ifdef VERSION_INFO
  m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
  m.attr("__version__") = "dev";
#endif
}
