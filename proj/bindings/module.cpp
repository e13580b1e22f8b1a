#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "pebbling/compositions.hpp"
#include "pebbling/errors.hpp"
#include "pebbling/graph.hpp"
#include "pebbling/graph_spec.hpp"
#include "pebbling/properties.hpp"
#include "pebbling/report.hpp"
#include "pebbling/search.hpp"
#include "pebbling/solver.hpp"

namespace py = pybind11;
using namespace pebbling;

namespace {

Configuration config_from_object(const Graph& g, const py::object& obj) {
    if (py::isinstance<py::str>(obj)) return parse_config(g, obj.cast<std::string>());
    if (py::isinstance<py::dict>(obj)) {
        Configuration config;
        config.counts.assign(static_cast<std::size_t>(g.vertex_count()), 0);
        for (auto item : obj.cast<py::dict>()) {
            int v = g.require_vertex(item.first.cast<std::string>());
            config.counts[static_cast<std::size_t>(v)] = item.second.cast<int>();
        }
        return config;
    }
    Configuration config;
    config.counts = obj.cast<std::vector<int>>();
    validate_config(g, config);
    return config;
}

int target_from_object(const Graph& g, const py::object& obj) {
    if (py::isinstance<py::str>(obj)) return g.require_vertex(obj.cast<std::string>());
    int v = obj.cast<int>();
    if (v < 0 || v >= g.vertex_count()) throw InvalidParameter("target index out of range");
    return v;
}

SearchOptions options_from_kwargs(int threads, const std::string& mode,
                                  std::optional<long long> budget) {
    SearchOptions o;
    o.threads = threads;
    o.mode = mode == "fast" ? SearchMode::fast : SearchMode::deterministic;
    o.node_budget = budget;
    return o;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact graph-pebbling workbench: graph builders, t-pebbling solver, "
              "pebbling numbers, property checks";

    py::register_exception<ParseError>(m, "SpecParseError", PyExc_ValueError);
    py::register_exception<InvalidParameter>(m, "InvalidParameterError", PyExc_ValueError);
    py::register_exception<IllegalMove>(m, "IllegalMoveError", PyExc_ValueError);
    py::register_exception<OversizeError>(m, "OversizeError", PyExc_RuntimeError);
    py::register_exception<BudgetExceeded>(m, "BudgetExceededError", PyExc_RuntimeError);

    py::class_<Graph>(m, "Graph")
        .def_property_readonly("vertex_count", &Graph::vertex_count)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def_property_readonly("name", &Graph::name)
        .def_property_readonly("labels", &Graph::labels)
        .def_property_readonly("edges", &Graph::edges)
        .def("neighbors", &Graph::neighbors, py::arg("v"))
        .def("distance", &Graph::distance, py::arg("u"), py::arg("v"))
        .def("eccentricity", &Graph::eccentricity, py::arg("v"))
        .def("vertex", &Graph::require_vertex, py::arg("label"))
        .def_property_readonly("total_path_order", &Graph::total_path_order)
        .def("__repr__",
             [](const Graph& g) {
                 std::ostringstream s;
                 s << "Graph(" << g.name() << ", " << g.vertex_count() << " vertices, "
                   << g.edge_count() << " edges)";
                 return s.str();
             });

    m.def("build_path", &build_path, py::arg("n"));
    m.def("build_cycle", &build_cycle, py::arg("n"));
    m.def("build_complete", &build_complete, py::arg("n"));
    m.def("total_graph", &total_graph, py::arg("g"));
    m.def("cartesian_product", &cartesian_product, py::arg("g"), py::arg("h"));
    m.def("parse_graph_spec", [](const std::string& s) { return parse_graph_spec(s); },
          py::arg("spec"));

    py::class_<Move>(m, "Move")
        .def_readonly("from_vertex", &Move::from)
        .def_readonly("to_vertex", &Move::to)
        .def("__repr__", [](const Move& mv) {
            return "Move(" + std::to_string(mv.from) + "->" + std::to_string(mv.to) + ")";
        });

    py::class_<SolveStats>(m, "SolveStats")
        .def_readonly("nodes_explored", &SolveStats::nodes_explored)
        .def_readonly("memo_hits", &SolveStats::memo_hits)
        .def_readonly("pruned_potential", &SolveStats::pruned_potential)
        .def_readonly("fastpath_stack", &SolveStats::fastpath_stack)
        .def_readonly("fastpath_greedy", &SolveStats::fastpath_greedy);

    py::class_<SolveResult>(m, "SolveResult")
        .def_readonly("solvable", &SolveResult::solvable)
        .def_readonly("certificate", &SolveResult::certificate)
        .def_readonly("stats", &SolveResult::stats)
        .def("__bool__", [](const SolveResult& r) { return r.solvable; });

    m.def(
        "solve",
        [](const Graph& g, const py::object& config, const py::object& target, long long t,
           bool certificate, std::optional<long long> budget) {
            return is_solvable(g, config_from_object(g, config), target_from_object(g, target),
                               t, certificate, budget);
        },
        py::arg("graph"), py::arg("config"), py::arg("target"), py::arg("t") = 1,
        py::arg("certificate") = false, py::arg("budget") = std::nullopt);

    m.def(
        "naive_solve",
        [](const Graph& g, const py::object& config, const py::object& target, long long t) {
            return naive_is_solvable(g, config_from_object(g, config),
                                     target_from_object(g, target), t);
        },
        py::arg("graph"), py::arg("config"), py::arg("target"), py::arg("t") = 1);

    m.def(
        "verify_certificate",
        [](const Graph& g, const py::object& config, const std::vector<std::pair<int, int>>& cert,
           const py::object& target, long long t) {
            std::vector<Move> moves;
            for (auto [a, b] : cert) moves.push_back(Move{a, b});
            std::string diag;
            bool ok = verify_certificate(g, config_from_object(g, config), moves,
                                         target_from_object(g, target), t, &diag);
            return py::make_tuple(ok, diag);
        },
        py::arg("graph"), py::arg("config"), py::arg("certificate"), py::arg("target"),
        py::arg("t") = 1);

    m.def(
        "potential",
        [](const Graph& g, const py::object& config, const py::object& target) {
            PotentialValue p = potential(g, config_from_object(g, config),
                                         target_from_object(g, target));
            return py::make_tuple(p.numerator, p.scale_log2);
        },
        py::arg("graph"), py::arg("config"), py::arg("target"));

    m.def("format_config",
          [](const Graph& g, const py::object& config) {
              return format_config(g, config_from_object(g, config));
          },
          py::arg("graph"), py::arg("config"));

    m.def("count_configurations", &count_compositions, py::arg("parts"), py::arg("total"),
          py::arg("support") = std::nullopt);

    m.def(
        "configurations",
        [](int parts, long long total, std::optional<int> support) {
            ConfigCursor cursor(parts, total, support);
            std::vector<std::vector<int>> out;
            std::vector<int> buf;
            while (cursor.next(buf)) out.push_back(buf);
            return out;
        },
        py::arg("parts"), py::arg("total"), py::arg("support") = std::nullopt,
        "materializes the full lexicographic enumeration; guard sizes yourself");

    py::class_<PerTargetNumber>(m, "PerTargetNumber")
        .def_readonly("target", &PerTargetNumber::target)
        .def_readonly("value", &PerTargetNumber::value)
        .def_property_readonly("witness",
                               [](const PerTargetNumber& p) { return p.witness.counts; });

    py::class_<PebblingNumberReport>(m, "PebblingNumberReport")
        .def_readonly("graph_name", &PebblingNumberReport::graph_name)
        .def_readonly("t", &PebblingNumberReport::demand)
        .def_readonly("value", &PebblingNumberReport::value)
        .def_readonly("per_target", &PebblingNumberReport::per_target)
        .def_readonly("witness_target", &PebblingNumberReport::witness_target)
        .def_property_readonly("witness",
                               [](const PebblingNumberReport& r) { return r.witness.counts; })
        .def_readonly("formula", &PebblingNumberReport::formula)
        .def_property_readonly("configs_tested",
                               [](const PebblingNumberReport& r) {
                                   return r.stats.configs_tested;
                               })
        .def("__repr__", [](const PebblingNumberReport& r) {
            return "PebblingNumberReport(" + r.graph_name + ", t=" + std::to_string(r.demand) +
                   ", value=" + std::to_string(r.value) + ")";
        });

    m.def(
        "pebbling_number",
        [](const Graph& g, long long t, int threads, const std::string& mode,
           std::optional<long long> budget) {
            return pebbling_number(g, t, options_from_kwargs(threads, mode, budget));
        },
        py::arg("graph"), py::arg("t") = 1, py::arg("threads") = 0,
        py::arg("mode") = "deterministic", py::arg("budget") = std::nullopt);

    m.def(
        "target_pebbling_number",
        [](const Graph& g, const py::object& target, long long t, int threads,
           const std::string& mode, std::optional<long long> budget) {
            TargetNumber tn = target_pebbling_number(g, target_from_object(g, target), t,
                                                     options_from_kwargs(threads, mode, budget));
            return py::make_tuple(tn.value, tn.witness.counts);
        },
        py::arg("graph"), py::arg("target"), py::arg("t") = 1, py::arg("threads") = 0,
        py::arg("mode") = "deterministic", py::arg("budget") = std::nullopt);

    m.def(
        "find_unsolvable",
        [](const Graph& g, long long k, const py::object& target, long long t, int threads)
            -> std::optional<std::vector<int>> {
            ScanResult r = find_unsolvable(g, k, target_from_object(g, target), t,
                                           options_from_kwargs(threads, "deterministic", {}));
            if (!r.witness) return std::nullopt;
            return r.witness->counts;
        },
        py::arg("graph"), py::arg("k"), py::arg("target"), py::arg("t") = 1,
        py::arg("threads") = 0);

    py::class_<PropertyReport>(m, "PropertyReport")
        .def_readonly("property", &PropertyReport::property)
        .def_readonly("verdict", &PropertyReport::verdict)
        .def_readonly("coverage", &PropertyReport::coverage)
        .def_property_readonly("params",
                               [](const PropertyReport& r) { return r.params.dump(); })
        .def_property_readonly("details",
                               [](const PropertyReport& r) { return r.details.dump(); })
        .def_property_readonly(
            "counterexample",
            [](const PropertyReport& r) -> std::optional<py::tuple> {
                if (!r.counterexample) return std::nullopt;
                return py::make_tuple(r.counterexample->config_text,
                                      r.counterexample->target_label,
                                      r.counterexample->demand);
            })
        .def_property_readonly("exit_code", &PropertyReport::exit_code)
        .def("to_json",
             [](const PropertyReport& r) { return property_report_json(r).dump(2); })
        .def("__repr__", [](const PropertyReport& r) {
            return "PropertyReport(" + r.property + ": " + r.verdict + ")";
        });

    m.def(
        "check_2t_property",
        [](const Graph& g, long long t, const std::string& mode, long long samples,
           std::uint64_t seed, int threads) {
            CheckMode cm;
            cm.kind = mode == "sampled" ? CheckKind::sampled : CheckKind::exhaustive;
            cm.samples = samples;
            cm.seed = seed;
            return check_2t_property(g, t, cm, options_from_kwargs(threads, "deterministic", {}));
        },
        py::arg("graph"), py::arg("t") = 1, py::arg("mode") = "exhaustive",
        py::arg("samples") = 5000, py::arg("seed") = 0, py::arg("threads") = 0);

    m.def(
        "check_formula_tpn",
        [](int n_lo, int n_hi, long long t_lo, long long t_hi, int threads) {
            return check_formula_tpn(n_lo, n_hi, t_lo, t_hi,
                                     options_from_kwargs(threads, "deterministic", {}));
        },
        py::arg("n_lo"), py::arg("n_hi"), py::arg("t_lo") = 1, py::arg("t_hi") = 1,
        py::arg("threads") = 0);

    m.def(
        "check_product_bound",
        [](const Graph& g, const Graph& h, long long s, long long t, const std::string& mode,
           long long samples, std::uint64_t seed, int threads) {
            CheckMode cm;
            cm.kind = mode == "sampled"       ? CheckKind::sampled
                      : mode == "adversarial" ? CheckKind::adversarial
                                              : CheckKind::exhaustive;
            cm.samples = samples;
            cm.seed = seed;
            return check_product_bound(g, h, s, t, cm,
                                       options_from_kwargs(threads, "deterministic", {}));
        },
        py::arg("g"), py::arg("h"), py::arg("s") = 1, py::arg("t") = 1,
        py::arg("mode") = "sampled", py::arg("samples") = 5000, py::arg("seed") = 0,
        py::arg("threads") = 0);

    m.def(
        "tpath_witness",
        [](int n, const std::string& variant) {
            WitnessInstance w = tpath_witness(
                n, variant == "with_y12" ? WitnessVariant::with_y12 : WitnessVariant::base);
            return py::make_tuple(std::move(w.graph), w.config.counts, w.target);
        },
        py::arg("n"), py::arg("variant") = "base",
        "(graph, config, target) for the T(P_n) lower-bound construction");

    m.attr("__version__") = kToolVersion;
}
