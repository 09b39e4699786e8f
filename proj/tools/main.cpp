// vcsolve: exact Minimum Vertex Cover / Parameterized Vertex Cover solver
// with sequential, stack-only, and hybrid (worklist-balanced) strategies.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vcsolve/graph.hpp"
#include "vcsolve/report.hpp"
#include "vcsolve/scheduler.hpp"
#include "vcsolve/solver_seq.hpp"

namespace {

using namespace vcsolve;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIncomplete = 2;

struct CommonOptions {
    std::string input;
    std::string format;  // "", "edgelist", "dimacs"
    bool complement_input = false;
    std::string output = "json";  // json | csv | text
    std::string report_path;
};

struct SolveOptions {
    std::string mode = "mvc";
    std::optional<std::uint32_t> k;
    std::string strategy = "hybrid";
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    std::size_t capacity = 4096;
    double threshold_fraction = 0.5;
    unsigned depth = 8;
    std::uint64_t backoff_us = 50;
    std::optional<double> timeout_s;
    std::optional<std::uint64_t> node_budget;
};

struct SweepOptions {
    std::vector<std::string> strategies = {"seq", "stackonly", "hybrid"};
    std::vector<unsigned> workers = {8};
    std::vector<std::size_t> capacities = {4096};
    std::vector<double> fractions = {0.5};
    std::vector<unsigned> depths = {8};
    std::vector<std::string> instances = {"mvc", "pvc-1", "pvc", "pvc+1"};
    std::optional<double> timeout_s;
    std::string out_path;
};

BaseGraph load_graph(const CommonOptions& opts) {
    std::ifstream in(opts.input);
    if (!in) throw std::runtime_error("cannot open input file: " + opts.input);

    std::string format = opts.format;
    if (format.empty()) {
        auto ext = std::filesystem::path(opts.input).extension().string();
        format = (ext == ".clq" || ext == ".col" || ext == ".dimacs") ? "dimacs" : "edgelist";
    }
    BaseGraph g = format == "dimacs" ? parse_dimacs(in) : parse_edge_list(in);
    if (opts.complement_input) g = complement(g);
    return g;
}

SchedulerConfig scheduler_config(const SolveOptions& opts) {
    SchedulerConfig config;
    config.num_workers = opts.workers;
    config.worklist_capacity = opts.capacity;
    config.threshold_fraction = opts.threshold_fraction;
    config.stackonly_depth = opts.depth;
    config.backoff = std::chrono::microseconds(opts.backoff_us);
    config.limits.timeout_s = opts.timeout_s;
    config.limits.node_budget = opts.node_budget;
    return config;
}

RunReport run_one(const BaseGraph& g, const SolveOptions& opts) {
    SolveMode mode = opts.mode == "pvc" ? SolveMode::pvc(*opts.k) : SolveMode::mvc();
    SchedulerConfig config = scheduler_config(opts);

    if (opts.strategy == "seq") {
        SeqRun run = opts.mode == "pvc" ? solve_pvc_seq(g, *opts.k, config.limits)
                                        : solve_mvc_seq(g, config.limits);
        SchedulerConfig echo = config;
        echo.num_workers = 1;
        return make_report(g, mode, "seq", echo, run.solution, run.status, run.wall_ms,
                           {run.metrics});
    }
    if (opts.strategy == "oracle") {
        if (g.num_vertices > 20)
            throw std::runtime_error("oracle strategy is limited to 20 vertices");
        auto t0 = std::chrono::steady_clock::now();
        Solution sol = brute_force_mvc(g);
        if (mode.is_pvc()) {
            sol.feasible = sol.size <= mode.k;
            if (!sol.feasible) sol.cover.clear();
        }
        double wall_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count();
        SchedulerConfig echo = config;
        echo.num_workers = 1;
        WorkerMetrics m;
        m.nodes_visited = g.num_vertices == 0 ? 1 : (std::uint64_t{1} << g.num_vertices);
        return make_report(g, mode, "oracle", echo, sol, RunStatus::Complete, wall_ms, {m});
    }

    ParallelRun run = opts.strategy == "hybrid" ? run_hybrid(g, mode, config)
                                                : run_stackonly(g, mode, config);
    RunReport report = make_report(g, mode, opts.strategy, config, run.solution, run.status,
                                   run.wall_ms, run.workers);
    report.worklist = run.worklist;
    return report;
}

void emit(const RunReport& report, const std::string& output, const std::string& path) {
    std::ostringstream body;
    if (output == "json") {
        body << report.to_json();
    } else if (output == "csv") {
        body << RunReport::csv_header() << "\n" << report.to_csv_row() << "\n";
    } else {
        report.write_text(body);
    }
    if (path.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot write report file: " + path);
        out << body.str();
    }
}

int do_solve(const CommonOptions& common, SolveOptions& opts) {
    if (opts.mode == "pvc" && !opts.k) {
        std::cerr << "error: --mode pvc requires --k\n";
        return kExitUsage;
    }
    if (opts.mode == "pvc" && *opts.k < 1) {
        std::cerr << "error: --k must be >= 1\n";
        return kExitUsage;
    }

    BaseGraph g = load_graph(common);
    RunReport report = run_one(g, opts);
    report.file = common.input;
    report.complemented = common.complement_input;
    emit(report, common.output, common.report_path);
    return report.status == "complete" ? kExitOk : kExitIncomplete;
}

// One sweep row: a full RunReport plus the instance label and a best-in-group flag.
struct SweepRow {
    std::string instance;
    RunReport report;
    bool best = false;
};

int do_sweep(const CommonOptions& common, const SweepOptions& sweep) {
    BaseGraph g = load_graph(common);

    // PVC instances need min from a completed MVC solve; chain it first and
    // cache the result.
    std::optional<std::uint32_t> min_size;
    bool wants_pvc = false;
    bool has_mvc_instance = false;
    for (const auto& inst : sweep.instances) {
        if (inst == "mvc")
            has_mvc_instance = true;
        else
            wants_pvc = true;
    }
    if (wants_pvc && !has_mvc_instance) {
        SolveOptions pre;
        pre.mode = "mvc";
        pre.strategy = "hybrid";
        pre.workers = sweep.workers.empty() ? 1 : sweep.workers.front();
        pre.timeout_s = sweep.timeout_s;
        RunReport report = run_one(g, pre);
        if (report.status == "complete" && report.size) min_size = *report.size;
    }

    std::vector<SweepRow> rows;
    auto run_configs = [&](const std::string& instance, const std::string& strategy,
                           const std::string& mode, std::optional<std::uint32_t> k) {
        std::size_t group_start = rows.size();
        SolveOptions opts;
        opts.mode = mode;
        opts.k = k;
        opts.strategy = strategy;
        opts.timeout_s = sweep.timeout_s;
        auto push = [&](const SolveOptions& configured) {
            RunReport report = run_one(g, configured);
            report.file = common.input;
            report.complemented = common.complement_input;
            rows.push_back({instance, std::move(report), false});
        };
        if (strategy == "seq" || strategy == "oracle") {
            opts.workers = 1;
            push(opts);
        } else if (strategy == "stackonly") {
            for (unsigned w : sweep.workers)
                for (unsigned d : sweep.depths) {
                    opts.workers = w;
                    opts.depth = d;
                    push(opts);
                }
        } else {
            for (unsigned w : sweep.workers)
                for (std::size_t cap : sweep.capacities)
                    for (double f : sweep.fractions) {
                        opts.workers = w;
                        opts.capacity = cap;
                        opts.threshold_fraction = f;
                        push(opts);
                    }
        }
        // Best result per (instance, strategy): the completed run with the
        // smallest wall time.
        std::size_t best_idx = rows.size();
        for (std::size_t i = group_start; i < rows.size(); ++i) {
            if (rows[i].report.status != "complete") continue;
            if (best_idx == rows.size() || rows[i].report.wall_ms < rows[best_idx].report.wall_ms)
                best_idx = i;
        }
        if (best_idx < rows.size()) rows[best_idx].best = true;
    };

    // Process mvc first so PVC instances can reuse its min.
    std::vector<std::string> ordered = sweep.instances;
    std::stable_partition(ordered.begin(), ordered.end(),
                          [](const std::string& s) { return s == "mvc"; });

    for (const auto& instance : ordered) {
        std::string mode = instance == "mvc" ? "mvc" : "pvc";
        std::optional<std::uint32_t> k;
        if (mode == "pvc") {
            if (!min_size) {
                std::cerr << "note: skipping " << instance << " (no completed MVC solve for min)\n";
                continue;
            }
            std::int64_t base = static_cast<std::int64_t>(*min_size);
            std::int64_t kk = instance == "pvc-1" ? base - 1 : instance == "pvc+1" ? base + 1 : base;
            if (kk < 1) {
                std::cerr << "note: skipping " << instance << " (k would be " << kk << ")\n";
                continue;
            }
            k = static_cast<std::uint32_t>(kk);
        }
        for (const auto& strategy : sweep.strategies) run_configs(instance, strategy, mode, k);
        if (instance == "mvc" && !min_size) {
            for (const auto& row : rows) {
                if (row.instance == "mvc" && row.report.status == "complete" &&
                    row.report.size) {
                    min_size = *row.report.size;
                    break;
                }
            }
            if (!min_size && wants_pvc)
                std::cerr << "note: MVC did not complete; PVC instances will be skipped\n";
        }
    }

    std::ostringstream body;
    if (common.output == "csv" || common.output == "text") {
        body << "instance,best," << RunReport::csv_header() << "\n";
        for (const auto& row : rows)
            body << row.instance << ',' << (row.best ? 1 : 0) << ',' << row.report.to_csv_row()
                 << "\n";
    } else {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& row : rows) {
            nlohmann::json item = nlohmann::json::parse(row.report.to_json());
            item["instance"] = row.instance;
            item["best"] = row.best;
            arr.push_back(std::move(item));
        }
        body << arr.dump(2) << "\n";
    }
    if (sweep.out_path.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream out(sweep.out_path);
        if (!out) throw std::runtime_error("cannot write report file: " + sweep.out_path);
        out << body.str();
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact MVC/PVC solver with hybrid worklist load balancing"};
    app.require_subcommand(0, 1);

    CommonOptions common;
    SolveOptions solve;
    bool depth_given = false;

    app.add_option("--input", common.input, "Graph file")->required();
    app.add_option("--format", common.format, "Input format")
        ->check(CLI::IsMember({"dimacs", "edgelist"}));
    app.add_flag("--complement", common.complement_input, "Solve on the edge complement");
    app.add_option("--mode", solve.mode, "Problem variant")
        ->check(CLI::IsMember({"mvc", "pvc"}));
    app.add_option("--k", solve.k, "Cover size bound for pvc");
    app.add_option("--strategy", solve.strategy, "Execution strategy")
        ->check(CLI::IsMember({"seq", "stackonly", "hybrid", "oracle"}));
    app.add_option("--workers", solve.workers, "Worker count for parallel strategies");
    app.add_option("--worklist-capacity", solve.capacity, "Hybrid worklist capacity");
    app.add_option("--threshold-fraction", solve.threshold_fraction,
                   "Hybrid donation threshold as a fraction of capacity");
    app.add_option("--depth", solve.depth, "StackOnly sub-tree starting depth")
        ->check(CLI::Range(1u, 30u))
        ->each([&](const std::string&) { depth_given = true; });
    app.add_option("--backoff-us", solve.backoff_us, "Sleep between worklist retries");
    app.add_option("--timeout-s", solve.timeout_s, "Wall-clock limit per solve");
    app.add_option("--node-budget", solve.node_budget, "Visited-node limit per solve");
    app.add_option("--output", common.output, "Report format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--report", common.report_path, "Write the report to this path");

    SweepOptions sweep;
    CLI::App* sweep_cmd = app.add_subcommand(
        "sweep", "Run a configuration matrix and emit one row per run");
    sweep_cmd->add_option("--strategies", sweep.strategies, "Strategies to sweep")
        ->delimiter(',');
    sweep_cmd->add_option("--workers", sweep.workers, "Worker counts")->delimiter(',');
    sweep_cmd->add_option("--capacities", sweep.capacities, "Hybrid worklist capacities")
        ->delimiter(',');
    sweep_cmd->add_option("--fractions", sweep.fractions, "Hybrid threshold fractions")
        ->delimiter(',');
    sweep_cmd->add_option("--depths", sweep.depths, "StackOnly depths")->delimiter(',');
    sweep_cmd->add_option("--instances", sweep.instances,
                          "Problem instances: mvc, pvc-1, pvc, pvc+1")
        ->delimiter(',');
    sweep_cmd->add_option("--timeout-s", sweep.timeout_s, "Per-run wall-clock limit");
    sweep_cmd->add_option("--out", sweep.out_path, "Write the matrix to this path");
    sweep_cmd->fallthrough();  // lets --input etc. appear after "sweep"

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (sweep_cmd->parsed()) return do_sweep(common, sweep);
        if (depth_given && solve.strategy == "hybrid")
            std::cerr << "warning: --depth has no effect with --strategy hybrid; ignored\n";
        return do_solve(common, solve);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
