#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "vcsolve/bounds.hpp"
#include "vcsolve/graph.hpp"
#include "vcsolve/report.hpp"
#include "vcsolve/scheduler.hpp"
#include "vcsolve/solver_seq.hpp"

namespace py = pybind11;
using namespace vcsolve;

namespace {

SchedulerConfig build_config(unsigned workers, std::size_t capacity, double threshold_fraction,
                             unsigned depth, std::uint64_t backoff_us,
                             std::optional<double> timeout_s,
                             std::optional<std::uint64_t> node_budget) {
    SchedulerConfig config;
    config.num_workers = workers;
    config.worklist_capacity = capacity;
    config.threshold_fraction = threshold_fraction;
    config.stackonly_depth = depth;
    config.backoff = std::chrono::microseconds(backoff_us);
    config.limits.timeout_s = timeout_s;
    config.limits.node_budget = node_budget;
    return config;
}

py::dict report_to_dict(const RunReport& report) {
    py::dict d;
    d["n"] = report.n;
    d["m"] = report.m;
    d["mode"] = report.mode;
    if (report.k)
        d["k"] = *report.k;
    else
        d["k"] = py::none();
    d["strategy"] = report.strategy;
    d["workers"] = report.workers;
    d["capacity"] = report.capacity;
    d["threshold_fraction"] = report.threshold_fraction;
    d["depth"] = report.depth;
    if (report.size)
        d["size"] = *report.size;
    else
        d["size"] = py::none();
    d["feasible"] = report.feasible;
    d["cover"] = report.cover;
    d["wall_ms"] = report.wall_ms;
    d["status"] = report.status;
    d["worker_nodes"] = report.worker_nodes;
    d["load_ratios"] = report.load_ratios;
    d["phase_shares"] = report.phase_shares;
    return d;
}

py::dict solve(const BaseGraph& g, const std::string& mode_name, std::uint32_t k,
               const std::string& strategy, unsigned workers, std::size_t capacity,
               double threshold_fraction, unsigned depth, std::uint64_t backoff_us,
               std::optional<double> timeout_s, std::optional<std::uint64_t> node_budget) {
    SolveMode mode = mode_name == "pvc" ? SolveMode::pvc(k) : SolveMode::mvc();
    SchedulerConfig config = build_config(workers, capacity, threshold_fraction, depth,
                                          backoff_us, timeout_s, node_budget);

    Solution solution;
    RunStatus status = RunStatus::Complete;
    double wall_ms = 0.0;
    std::vector<WorkerMetrics> metrics;
    GlobalWorklist::Stats wl_stats{};
    {
        py::gil_scoped_release release;
        if (strategy == "seq") {
            SeqRun run = mode.is_pvc() ? solve_pvc_seq(g, k, config.limits)
                                       : solve_mvc_seq(g, config.limits);
            solution = std::move(run.solution);
            status = run.status;
            wall_ms = run.wall_ms;
            metrics.push_back(std::move(run.metrics));
            config.num_workers = 1;
        } else if (strategy == "stackonly" || strategy == "hybrid") {
            ParallelRun run = strategy == "hybrid" ? run_hybrid(g, mode, config)
                                                   : run_stackonly(g, mode, config);
            solution = std::move(run.solution);
            status = run.status;
            wall_ms = run.wall_ms;
            metrics = std::move(run.workers);
            wl_stats = run.worklist;
        } else {
            throw std::invalid_argument("unknown strategy: " + strategy);
        }
    }
    RunReport report =
        make_report(g, mode, strategy, config, solution, status, wall_ms, metrics);
    report.worklist = wl_stats;
    return report_to_dict(report);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact MVC/PVC branch-and-reduce solver with hybrid work distribution";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<BaseGraph>(m, "BaseGraph")
        .def_readonly("num_vertices", &BaseGraph::num_vertices)
        .def_readonly("num_edges", &BaseGraph::num_edges)
        .def_readonly("id_base", &BaseGraph::id_base)
        .def("degree", &BaseGraph::degree, py::arg("v"))
        .def("has_edge", &BaseGraph::has_edge, py::arg("u"), py::arg("v"))
        .def(
            "neighbors",
            [](const BaseGraph& g, Vertex v) {
                auto slice = g.neighbors_of(v);
                return std::vector<Vertex>(slice.begin(), slice.end());
            },
            py::arg("v"))
        .def("__eq__", [](const BaseGraph& a, const BaseGraph& b) { return a == b; })
        .def("__repr__", [](const BaseGraph& g) {
            std::ostringstream out;
            out << "BaseGraph(n=" << g.num_vertices << ", m=" << g.num_edges << ")";
            return out.str();
        });

    m.def(
        "parse_edge_list",
        [](const std::string& text) {
            std::istringstream in(text);
            return parse_edge_list(in);
        },
        py::arg("text"), "Parse a whitespace-separated edge list ('#'/'%' comments).");
    m.def(
        "parse_dimacs",
        [](const std::string& text) {
            std::istringstream in(text);
            return parse_dimacs(in);
        },
        py::arg("text"), "Parse a DIMACS ascii clique file ('p edge N M').");
    m.def(
        "make_graph",
        [](std::uint32_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
            return make_graph(n, edges, 0);
        },
        py::arg("num_vertices"), py::arg("edges"),
        "Build a graph from (u, v) pairs; duplicates and self-loops are dropped.");
    m.def("complement", &complement, py::arg("graph"));
    m.def(
        "write_edge_list",
        [](const BaseGraph& g) {
            std::ostringstream out;
            write_edge_list(g, out);
            return out.str();
        },
        py::arg("graph"));

    m.def(
        "greedy_approx",
        [](const BaseGraph& g) {
            GreedyResult r = greedy_approx(g);
            return py::make_tuple(r.size, r.cover);
        },
        py::arg("graph"), "Greedy upper bound: (size, cover in internal ids).");
    m.def(
        "brute_force_mvc",
        [](const BaseGraph& g) {
            Solution s = brute_force_mvc(g);
            return py::make_tuple(s.size, s.cover);
        },
        py::arg("graph"), "Exhaustive oracle for graphs of at most 20 vertices.");

    m.def(
        "solve_mvc",
        [](const BaseGraph& g, const std::string& strategy, unsigned workers,
           std::size_t capacity, double threshold_fraction, unsigned depth,
           std::uint64_t backoff_us, std::optional<double> timeout_s,
           std::optional<std::uint64_t> node_budget) {
            return solve(g, "mvc", 0, strategy, workers, capacity, threshold_fraction, depth,
                         backoff_us, timeout_s, node_budget);
        },
        py::arg("graph"), py::arg("strategy") = "hybrid", py::arg("workers") = 4,
        py::arg("capacity") = 4096, py::arg("threshold_fraction") = 0.5, py::arg("depth") = 8,
        py::arg("backoff_us") = 50, py::arg("timeout_s") = py::none(),
        py::arg("node_budget") = py::none(),
        "Solve MVC; returns the run report as a dict.");
    m.def(
        "solve_pvc",
        [](const BaseGraph& g, std::uint32_t k, const std::string& strategy, unsigned workers,
           std::size_t capacity, double threshold_fraction, unsigned depth,
           std::uint64_t backoff_us, std::optional<double> timeout_s,
           std::optional<std::uint64_t> node_budget) {
            if (k < 1) throw std::invalid_argument("pvc requires k >= 1");
            return solve(g, "pvc", k, strategy, workers, capacity, threshold_fraction, depth,
                         backoff_us, timeout_s, node_budget);
        },
        py::arg("graph"), py::arg("k"), py::arg("strategy") = "hybrid", py::arg("workers") = 4,
        py::arg("capacity") = 4096, py::arg("threshold_fraction") = 0.5, py::arg("depth") = 8,
        py::arg("backoff_us") = 50, py::arg("timeout_s") = py::none(),
        py::arg("node_budget") = py::none(),
        "Solve PVC for a given k; returns the run report as a dict.");
}
