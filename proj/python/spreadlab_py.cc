// Copyright 2026 The spreadlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "spreadlab/constructions.h"
#include "spreadlab/decompose.h"
#include "spreadlab/errors.h"
#include "spreadlab/expansion.h"
#include "spreadlab/graph.h"
#include "spreadlab/graph_io.h"
#include "spreadlab/harness.h"
#include "spreadlab/randgen.h"
#include "spreadlab/spread.h"
#include "spreadlab/vertex_function.h"

namespace py = pybind11;
using namespace spreadlab;

namespace {

py::object fraction(const Rational& r) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  py::object num = py::int_(py::str(int128_to_string(r.num())));
  py::object den = py::int_(py::str(int128_to_string(r.den())));
  return cls(num, den);
}

Rational to_rational(const py::handle& x) {
  if (py::isinstance<py::str>(x)) return parse_rational(x.cast<std::string>());
  if (py::isinstance<py::int_>(x)) return Rational(x.cast<std::int64_t>());
  if (py::hasattr(x, "numerator") && py::hasattr(x, "denominator")) {
    return Rational(static_cast<Int128>(x.attr("numerator").cast<std::int64_t>()),
                    static_cast<Int128>(x.attr("denominator").cast<std::int64_t>()));
  }
  return parse_rational(py::str(x).cast<std::string>());
}

py::object value(const Value& v) {
  if (v.is_exact()) return fraction(v.rational());
  return py::float_(v.to_double());
}

py::object function_values(const VertexFunction& f) {
  if (f.is_integer()) return py::cast(std::vector<std::int64_t>(f.ints().begin(), f.ints().end()));
  return py::cast(f.as_real());
}

VertexFunction to_function(const py::sequence& values) {
  bool all_int = true;
  for (auto x : values) all_int = all_int && py::isinstance<py::int_>(x);
  if (all_int) return VertexFunction::integer(values.cast<std::vector<std::int64_t>>());
  return VertexFunction::real(values.cast<std::vector<double>>());
}

py::dict spread_dict(const SpreadResult& r) {
  py::dict d;
  d["kind"] = spread_kind_name(r.kind);
  d["value"] = value(r.value);
  d["method"] = r.method;
  d["witness"] = r.witness ? function_values(*r.witness) : py::none();
  d["nodes"] = r.stats.nodes;
  d["moves"] = r.stats.moves;
  return d;
}

py::dict certificate_dict(const Certificate& c) {
  py::dict d;
  d["kind"] = certificate_kind_name(c.kind);
  d["method"] = certificate_method_name(c.method);
  d["verified"] = c.verified;
  py::list params;
  for (const auto& p : c.params) params.append(fraction(p));
  d["params"] = params;
  d["witness"] = c.witness;
  d["extremal_ratio"] = c.extremal_ratio ? fraction(*c.extremal_ratio) : py::none();
  d["sets_checked"] = c.sets_checked;
  d["scale_note"] = c.scale_note;
  return d;
}

CheckOptions check_options(const std::string& mode, std::uint64_t samples, std::uint64_t seed) {
  CheckOptions opts;
  if (mode == "exact") {
    opts.mode = CheckMode::kExact;
  } else if (mode == "random") {
    opts.mode = CheckMode::kRandom;
  } else {
    throw Error(ErrorKind::kInvalidArgument, "mode must be 'exact' or 'random'");
  }
  opts.samples = samples;
  opts.seed = seed;
  return opts;
}

}  // namespace

PYBIND11_MODULE(_spreadlab, m) {
  m.doc() = "Lipschitz spread of graphs: exact and heuristic solvers, random graph "
            "generators, structural decomposition and expansion certificates.";

  static PyObject* error_type =
      PyErr_NewException("spreadlab._spreadlab.SpreadlabError", PyExc_ValueError, nullptr);
  m.attr("SpreadlabError") = py::handle(error_type);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::handle(error_type)(e.what());
      exc.attr("kind") = std::string(error_kind_name(e.kind()));
      PyErr_SetObject(error_type, exc.ptr());
    }
  });

  py::class_<Graph>(m, "Graph")
      .def(py::init([](std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
             std::vector<Edge> list;
             for (auto [u, v] : edges) list.push_back({u, v});
             return Graph::from_edges(n, list);
           }),
           py::arg("n"), py::arg("edges"))
      .def_property_readonly("num_vertices", &Graph::num_vertices)
      .def_property_readonly("num_edges", &Graph::num_edges)
      .def("edges", [](const Graph& g) {
        std::vector<std::pair<Vertex, Vertex>> out;
        for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
        return out;
      })
      .def("neighbors", [](const Graph& g, Vertex v) {
        if (v >= g.num_vertices()) throw Error(ErrorKind::kOutOfRange, "no such vertex");
        return std::vector<Vertex>(g.neighbors(v).begin(), g.neighbors(v).end());
      })
      .def("degree", [](const Graph& g, Vertex v) {
        if (v >= g.num_vertices()) throw Error(ErrorKind::kOutOfRange, "no such vertex");
        return g.degree(v);
      })
      .def("has_edge", &Graph::has_edge)
      .def("to_edge_list", [](const Graph& g) {
        std::ostringstream out;
        write_edge_list(out, g);
        return out.str();
      })
      .def_static("from_edge_list", [](const std::string& text) {
        std::istringstream in(text);
        return read_edge_list(in);
      })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.num_vertices()) +
               ", m=" + std::to_string(g.num_edges()) + ")";
      });

  m.def("read_edge_list", &read_edge_list_file, py::arg("path"));
  m.def("write_edge_list", &write_edge_list_file, py::arg("path"), py::arg("graph"));
  m.def("connected_components", &connected_components);
  m.def("diameter", &diameter);

  m.def("derive_trial_seed", &derive_trial_seed, py::arg("master"), py::arg("index"));
  m.def("gen_gnp", &gen_gnp, py::arg("n"), py::arg("p"), py::arg("seed"));
  m.def(
      "gen_regular",
      [](std::size_t n, std::size_t d, std::uint64_t seed, const std::string& mode) {
        return gen_regular(n, d, seed, parse_regular_mode(mode)).graph;
      },
      py::arg("n"), py::arg("d"), py::arg("seed"), py::arg("mode") = "reject");

  m.def(
      "decompose",
      [](const Graph& g) {
        Decomposition dec = decompose(g);
        py::dict d;
        d["giant"] = dec.giant;
        d["core"] = dec.core;
        d["kernel_vertices"] = dec.kernel.num_vertices();
        d["kernel_edges"] = dec.kernel.num_edges();
        d["excess"] = dec.excess;
        d["max_pendant_tree"] = dec.max_pendant_tree_size();
        d["kernel_length_histogram"] = dec.kernel_length_histogram();
        return d;
      },
      py::arg("graph"), "Structural decomposition; core ids refer to the giant's local labels.");
  m.def(
      "behaves",
      [](const Graph& g, double eps, double delta) {
        std::size_t n = g.num_vertices();
        return behaves(decompose(g), n, eps, delta).behaves;
      },
      py::arg("graph"), py::arg("eps"), py::arg("delta") = kDefaultDelta);

  m.def(
      "variance",
      [](const Graph& g, const py::sequence& f) { return value(variance(g, to_function(f))); },
      py::arg("graph"), py::arg("f"));
  m.def(
      "is_lipschitz",
      [](const Graph& g, const py::sequence& f) { return is_lipschitz(g, to_function(f)).lipschitz; },
      py::arg("graph"), py::arg("f"));
  m.def(
      "exact_spread",
      [](const Graph& g, std::size_t max_vertices) {
        return spread_dict(exact_spread(g, max_vertices));
      },
      py::arg("graph"), py::arg("max_vertices") = kDefaultExactCap);
  m.def(
      "local_search_spread",
      [](const Graph& g, int restarts, std::uint64_t seed, std::uint64_t max_moves) {
        LocalSearchOptions opts;
        opts.restarts = restarts;
        opts.seed = seed;
        opts.max_moves = max_moves;
        return spread_dict(local_search_spread(g, opts));
      },
      py::arg("graph"), py::arg("restarts") = 20, py::arg("seed") = 0,
      py::arg("max_moves") = 1'000'000);
  m.def("complete_graph_spread",
        [](std::size_t n) { return fraction(complete_graph_spread(n)); }, py::arg("n"));

  m.def(
      "three_level_function",
      [](const Graph& g, std::uint32_t d) {
        auto res = three_level_function(g, d);
        py::dict out;
        out["f"] = function_values(res.f);
        out["variance"] = fraction(res.variance);
        out["bound"] = fraction(res.bound);
        return out;
      },
      py::arg("graph"), py::arg("d"));
  m.def(
      "kernel_path_params",
      [](double eps, double delta) {
        auto p = kernel_path_params(eps, delta);
        return py::make_tuple(p.short_threshold, p.r);
      },
      py::arg("eps"), py::arg("delta") = kDefaultDelta);

  m.def(
      "cheeger_exact",
      [](const Graph& g) {
        auto res = cheeger_exact(g);
        return py::make_tuple(fraction(res.phi), res.argmin);
      },
      py::arg("graph"));
  m.def(
      "cheeger_spectral_lower",
      [](const Graph& g, double tol) {
        auto res = cheeger_spectral_lower(g, tol);
        return py::make_tuple(res.lambda2, res.bound);
      },
      py::arg("graph"), py::arg("tol") = 1e-6);
  m.def(
      "alpha_expander_check",
      [](const Graph& g, const py::object& alpha, const std::string& mode,
         std::uint64_t samples, std::uint64_t seed) {
        return certificate_dict(
            alpha_expander_check(g, to_rational(alpha), check_options(mode, samples, seed)));
      },
      py::arg("graph"), py::arg("alpha"), py::arg("mode") = "exact",
      py::arg("samples") = kDefaultSamples, py::arg("seed") = 0);
  m.def(
      "beta_eta_check",
      [](const Graph& g, const py::object& beta, const py::object& eta,
         const std::string& mode, std::uint64_t samples, std::uint64_t seed) {
        return certificate_dict(beta_eta_check(g, to_rational(beta), to_rational(eta),
                                               check_options(mode, samples, seed)));
      },
      py::arg("graph"), py::arg("beta"), py::arg("eta"), py::arg("mode") = "exact",
      py::arg("samples") = kDefaultSamples, py::arg("seed") = 0);
  m.def(
      "verify_decorated_expander",
      [](const Graph& g, const VertexSet& f, double alpha) {
        VertexSet sorted = f;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        auto rep = verify_decorated_expander(g, sorted, alpha);
        py::dict d = certificate_dict(rep.certificate);
        d["de1"] = rep.de1;
        d["de2"] = rep.de2;
        d["de2_prime"] = rep.de2_prime;
        d["de3"] = rep.de3;
        d["phi_f"] = rep.phi_f;
        d["num_decorations"] = rep.num_decorations;
        d["max_alpha"] = rep.max_alpha;
        return d;
      },
      py::arg("graph"), py::arg("f"), py::arg("alpha"));

  m.def(
      "run_sweep",
      [](const std::string& spec_json, int threads) {
        SweepSpec spec = parse_sweep_spec(spec_json);
        std::vector<TrialRecord> records;
        {
          py::gil_scoped_release release;
          records = run_sweep(spec, threads);
        }
        std::ostringstream csv;
        write_records_csv(csv, records);
        return py::make_tuple(csv.str(), summary_json(spec, records));
      },
      py::arg("spec_json"), py::arg("threads") = 1,
      "Runs a sweep and returns (records CSV text, summary JSON text).");
}
