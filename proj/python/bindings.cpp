#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "netgame/census.hpp"
#include "netgame/error.hpp"
#include "netgame/experiment.hpp"
#include "netgame/game.hpp"
#include "netgame/generators.hpp"
#include "netgame/graph.hpp"
#include "netgame/moment_bounds.hpp"
#include "netgame/report.hpp"
#include "netgame/spectral.hpp"

namespace py = pybind11;
using namespace netgame;

namespace {

GameConfig make_game(const Graph& g, double delta) { return GameConfig{g, delta, std::nullopt}; }

py::dict record_dict(const EquilibriumRecord& r) {
  py::dict d;
  d["x"] = r.profile.x;
  d["active_set"] = r.profile.active_set;
  d["stable"] = r.stable;
  d["boundary"] = r.boundary;
  d["kkt_residual"] = r.kkt_residual;
  d["kkt_max"] = r.kkt_max;
  d["fixed_point_residual"] = r.fixed_point_residual;
  return d;
}

void bind_graph(py::module_& m) {
  py::class_<Graph>(m, "Graph", "Immutable simple undirected graph")
      .def(py::init([](std::size_t n, const std::vector<Edge>& edges) { return Graph::from_edges(n, edges); }),
           py::arg("n"), py::arg("edges") = std::vector<Edge>{})
      .def_property_readonly("node_count", &Graph::node_count)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def_property_readonly("max_degree", &Graph::max_degree)
      .def("neighbors", [](const Graph& g, NodeId v) {
        if (v >= g.node_count()) throw py::index_error("node out of range");
        auto nb = g.neighbors(v);
        return std::vector<NodeId>(nb.begin(), nb.end());
      })
      .def("degree", [](const Graph& g, NodeId v) {
        if (v >= g.node_count()) throw py::index_error("node out of range");
        return g.degree(v);
      })
      .def("has_edge", [](const Graph& g, NodeId u, NodeId v) {
        return u < g.node_count() && v < g.node_count() && g.has_edge(u, v);
      })
      .def("edges", &Graph::edges)
      .def("label", [](const Graph& g, NodeId v) {
        if (v >= g.node_count()) throw py::index_error("node out of range");
        return g.label(v);
      })
      .def("find_label", &Graph::find_label)
      .def("adjacency_matrix", &adjacency_matrix)
      .def("__len__", &Graph::node_count)
      .def("__repr__", [](const Graph& g) {
        return "<netgame.Graph n=" + std::to_string(g.node_count()) + " e=" + std::to_string(g.edge_count()) + ">";
      });

  m.def("load_edge_list", [](const std::string& text) { return load_edge_list_string(text).graph; }, py::arg("text"),
        "Parse edge-list text (two ids per line, '#' comments)");
  m.def("load_edge_list_file", [](const std::string& path) { return load_edge_list_file(path).graph; }, py::arg("path"));
  m.def("write_edge_list", [](const Graph& g) {
    std::ostringstream out;
    write_edge_list(out, g);
    return out.str();
  });
  m.def("ego_subgraph", &ego_subgraph, py::arg("graph"), py::arg("seed"), py::arg("radius"));
  m.def("is_bipartite", [](const Graph& g) { return is_bipartite(g).bipartite; });
  m.def("degree_sequence", &degree_sequence);

  auto gen = m.def_submodule("generators", "Deterministic and seeded random graph families");
  gen.def("empty", &gen::empty);
  gen.def("path", &gen::path);
  gen.def("cycle", &gen::cycle);
  gen.def("complete", &gen::complete);
  gen.def("star", &gen::star, py::arg("leaves"));
  gen.def("petersen", &gen::petersen);
  gen.def("complete_bipartite", &gen::complete_bipartite);
  gen.def("disjoint_union", &gen::disjoint_union);
  gen.def("erdos_renyi", &gen::erdos_renyi, py::arg("n"), py::arg("p"), py::arg("seed"));
  gen.def("watts_strogatz", &gen::watts_strogatz, py::arg("n"), py::arg("k"), py::arg("beta"), py::arg("seed"));
  gen.def("barabasi_albert", &gen::barabasi_albert, py::arg("n"), py::arg("m"), py::arg("seed"));
  gen.def("social_mix", &gen::social_mix, py::arg("n"), py::arg("seed"));
}

void bind_spectra(py::module_& m) {
  py::class_<StructuralCensus>(m, "StructuralCensus")
      .def_readonly("n", &StructuralCensus::n)
      .def_readonly("e", &StructuralCensus::e)
      .def_readonly("degree", &StructuralCensus::degree)
      .def_readonly("triangles_per_node", &StructuralCensus::triangles_per_node)
      .def_readonly("quadrangles_per_node", &StructuralCensus::quadrangles_per_node)
      .def_readonly("pentagons_per_node", &StructuralCensus::pentagons_per_node)
      .def_readonly("triangles", &StructuralCensus::triangles)
      .def_readonly("quadrangles", &StructuralCensus::quadrangles)
      .def_readonly("pentagons", &StructuralCensus::pentagons)
      .def_readonly("W2", &StructuralCensus::W2)
      .def_readonly("C_dt", &StructuralCensus::C_dt)
      .def("to_json", [](const StructuralCensus& c, bool per_node) { return report::census_json(c, per_node).dump(); },
           py::arg("per_node") = false);

  m.def("census", [](const Graph& g, std::size_t threads) { return census(g, {threads}); }, py::arg("graph"),
        py::arg("threads") = 1, py::call_guard<py::gil_scoped_release>());

  py::class_<MomentSequence>(m, "MomentSequence")
      .def_readonly("n", &MomentSequence::n)
      .def_property_readonly("m", [](const MomentSequence& s) { return s.m; })
      .def_property_readonly("walks", [](const MomentSequence& s) { return s.walks; })
      .def("__getitem__", [](const MomentSequence& s, std::size_t k) {
        if (k > MomentSequence::kMaxOrder) throw py::index_error("moments are available up to order 5");
        return s[k];
      });

  m.def("moments_from_census", &moments_from_census);
  m.def("moments", [](const Graph& g) { return moments_from_census(census(g)); }, py::arg("graph"),
        "Spectral moments m0..m5 from the structural census");
  m.def("closed_walk_counts", &closed_walk_counts, py::arg("graph"), py::arg("k_max") = 5, py::arg("threads") = 1);
  m.def("extreme_eigenvalues", [](const Graph& g) {
    auto x = extreme_eigenvalues(g);
    return std::make_pair(x.lambda_min, x.lambda_max);
  });
}

void bind_bounds(py::module_& m) {
  py::class_<SupportBounds>(m, "SupportBounds")
      .def_readonly("s", &SupportBounds::s)
      .def_readonly("alpha", &SupportBounds::alpha)
      .def_readonly("beta", &SupportBounds::beta)
      .def_property_readonly("method", [](const SupportBounds& b) { return std::string(to_string(b.method)); })
      .def_readonly("degenerate", &SupportBounds::degenerate)
      .def_readonly("effective_order", &SupportBounds::effective_order)
      .def_readonly("bracket", &SupportBounds::bracket)
      .def_readonly("iterations", &SupportBounds::iterations)
      .def_readonly("diagnostic", &SupportBounds::diagnostic)
      .def("__repr__", [](const SupportBounds& b) {
        return "<SupportBounds s=" + std::to_string(b.s) + " alpha=" + report::format_double(b.alpha) +
               " beta=" + report::format_double(b.beta) + ">";
      });

  m.def("hankel_matrices", [](const MomentSequence& s, int order) {
    auto h = hankel_matrices(s, order);
    return std::make_pair(h.even, h.odd);
  });
  m.def("localizing_matrix", py::overload_cast<const MomentSequence&, int, double>(&localizing_matrix));
  m.def(
      "bounds",
      [](const MomentSequence& s, int order, const std::string& method) {
        if (method == "analytic") return bounds_analytic(s, order);
        if (method == "bisect") return bounds_bisect(s, order);
        throw ArgumentError("method must be 'analytic' or 'bisect'");
      },
      py::arg("moments"), py::arg("order") = 2, py::arg("method") = "analytic");
  m.def(
      "bound_sensitivity",
      [](const StructuralCensus& c, const std::string& property, double h) {
        auto d = bound_sensitivity(aggregates(c), parse_structural_property(property), h);
        return std::make_pair(d.d_alpha, d.d_beta);
      },
      py::arg("census"), py::arg("property"), py::arg("h"));
}

void bind_game(py::module_& m) {
  m.def("best_response", [](const Graph& g, double delta, const std::vector<double>& x) {
    return best_response(x, make_game(g, delta));
  });
  m.def("potential", [](const Graph& g, double delta, const std::vector<double>& x) {
    return potential(x, make_game(g, delta));
  });
  m.def("kkt_residual", [](const Graph& g, double delta, const std::vector<double>& x) {
    return kkt_residual(x, make_game(g, delta));
  });
  m.def(
      "payoff",
      [](const Graph& g, double delta, std::size_t i, const std::vector<double>& x, double a, double b, double d) {
        return payoff(static_cast<NodeId>(i), x, GameConfig{g, delta, CournotParameters{a, b, d}});
      },
      py::arg("graph"), py::arg("delta"), py::arg("i"), py::arg("x"), py::arg("a"), py::arg("b"), py::arg("d"));
  m.def(
      "enumerate_equilibria",
      [](const Graph& g, double delta, std::size_t max_n, std::size_t threads) {
        EnumerationResult r;
        {
          py::gil_scoped_release release;
          r = enumerate_equilibria(make_game(g, delta), max_n, {}, threads);
        }
        py::list out;
        for (const auto& e : r.equilibria) out.append(record_dict(e));
        return out;
      },
      py::arg("graph"), py::arg("delta"), py::arg("max_n") = kDefaultMaxEnumerationNodes, py::arg("threads") = 1);
  m.def("interior_equilibrium", [](const Graph& g, double delta) { return interior_equilibrium(make_game(g, delta)).x; });
  m.def("stability_check", [](const Graph& g, double delta, const std::vector<double>& x) {
    return stability_check(x, make_game(g, delta));
  });
  m.def("uniqueness_threshold", &uniqueness_threshold);
  m.def("uniqueness_certificate", [](const Graph& g, double delta) {
    auto c = uniqueness_certificate(make_game(g, delta));
    py::dict d;
    d["status"] = std::string(to_string(c.status));
    d["threshold_exact"] = c.threshold_exact;
    d["threshold_spectral_radius"] = c.threshold_spectral_radius;
    d["threshold_estimate"] = c.threshold_estimate;
    d["lambda_min"] = c.lambda_min;
    d["lambda_max"] = c.lambda_max;
    return d;
  });
  m.def(
      "best_response_dynamics",
      [](const Graph& g, double delta, const std::vector<double>& x0, double dt, std::size_t max_steps, double tol) {
        DynamicsOptions opt;
        opt.dt = dt;
        opt.max_steps = max_steps;
        opt.tol = tol;
        auto r = best_response_dynamics(make_game(g, delta), x0, opt);
        py::dict d;
        d["converged"] = r.converged;
        d["steps"] = r.steps;
        d["residual"] = r.residual;
        d["limit"] = r.limit.x;
        return d;
      },
      py::arg("graph"), py::arg("delta"), py::arg("x0"), py::arg("dt") = 0.5, py::arg("max_steps") = 1'000'000,
      py::arg("tol") = 1e-8);
}

void bind_experiment(py::module_& m) {
  m.def(
      "experiment_csv",
      [](const Graph& g, std::size_t num_subgraphs, std::size_t radius, std::uint64_t rng_seed, std::size_t threads) {
        ExperimentOptions opt{num_subgraphs, radius, rng_seed, threads};
        std::ostringstream out;
        {
          py::gil_scoped_release release;
          auto r = run_experiment(g, opt);
          write_experiment_csv(out, r.rows, false);
        }
        return out.str();
      },
      py::arg("graph"), py::arg("num_subgraphs") = 100, py::arg("radius") = 2, py::arg("rng_seed") = 1,
      py::arg("threads") = 1);
  m.def("spearman", &spearman);
}

}  // namespace

PYBIND11_MODULE(_netgame, m) {
  m.doc() = "Spectral moments, Hankel eigenvalue bounds and linear best-response network games";
  m.attr("__version__") = "0.1.0";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<ArgumentError>(m, "ArgumentError", PyExc_ValueError);
  py::register_exception<NumericalError>(m, "NumericalError", base.ptr());

  bind_graph(m);
  bind_spectra(m);
  bind_bounds(m);
  bind_game(m);
  bind_experiment(m);
}
