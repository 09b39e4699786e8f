#include "vcsolve/report.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace vcsolve {

namespace {

using nlohmann::json;

std::string join_u64(const std::vector<std::uint64_t>& xs) {
    std::ostringstream out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out << ';';
        out << xs[i];
    }
    return out.str();
}

std::string fmt_double(double x) {
    std::ostringstream out;
    out << std::setprecision(12) << x;
    return out.str();
}

std::string join_doubles(const std::vector<double>& xs) {
    std::ostringstream out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out << ';';
        out << fmt_double(xs[i]);
    }
    return out.str();
}

}  // namespace

std::string RunReport::to_json() const {
    json j;
    j["file"] = file;
    j["complemented"] = complemented;
    j["n"] = n;
    j["m"] = m;
    j["mode"] = mode;
    if (k)
        j["k"] = *k;
    else
        j["k"] = nullptr;
    j["strategy"] = strategy;
    j["workers"] = workers;
    j["capacity"] = capacity;
    j["threshold_fraction"] = threshold_fraction;
    j["depth"] = depth;
    if (size)
        j["size"] = *size;
    else
        j["size"] = nullptr;
    j["feasible"] = feasible;
    j["cover"] = cover;
    j["wall_ms"] = wall_ms;
    j["status"] = status;
    j["worker_nodes"] = worker_nodes;
    j["load_ratios"] = load_ratios;
    j["phase_shares"] = phase_shares;
    j["worklist"] = {{"added", worklist.added},
                     {"removed", worklist.removed},
                     {"max_size", worklist.max_size}};
    return j.dump(2) + "\n";
}

RunReport RunReport::from_json(const std::string& text) {
    json j = json::parse(text);
    RunReport r;
    r.file = j.at("file").get<std::string>();
    r.complemented = j.at("complemented").get<bool>();
    r.n = j.at("n").get<std::uint32_t>();
    r.m = j.at("m").get<std::uint64_t>();
    r.mode = j.at("mode").get<std::string>();
    if (!j.at("k").is_null()) r.k = j.at("k").get<std::uint32_t>();
    r.strategy = j.at("strategy").get<std::string>();
    r.workers = j.at("workers").get<unsigned>();
    r.capacity = j.at("capacity").get<std::size_t>();
    r.threshold_fraction = j.at("threshold_fraction").get<double>();
    r.depth = j.at("depth").get<unsigned>();
    if (!j.at("size").is_null()) r.size = j.at("size").get<std::uint32_t>();
    r.feasible = j.at("feasible").get<bool>();
    r.cover = j.at("cover").get<std::vector<std::uint32_t>>();
    r.wall_ms = j.at("wall_ms").get<double>();
    r.status = j.at("status").get<std::string>();
    r.worker_nodes = j.at("worker_nodes").get<std::vector<std::uint64_t>>();
    r.load_ratios = j.at("load_ratios").get<std::vector<double>>();
    r.phase_shares = j.at("phase_shares").get<std::map<std::string, double>>();
    r.worklist.added = j.at("worklist").at("added").get<std::uint64_t>();
    r.worklist.removed = j.at("worklist").at("removed").get<std::uint64_t>();
    r.worklist.max_size = j.at("worklist").at("max_size").get<std::size_t>();
    return r;
}

std::string RunReport::csv_header() {
    return "file,complemented,n,m,mode,k,strategy,workers,capacity,threshold_fraction,depth,"
           "size,feasible,wall_ms,status,worker_nodes,load_ratios,phase_shares";
}

std::string RunReport::to_csv_row() const {
    std::ostringstream out;
    out << file << ',' << (complemented ? 1 : 0) << ',' << n << ',' << m << ',' << mode << ',';
    if (k) out << *k;
    out << ',' << strategy << ',' << workers << ',' << capacity << ','
        << fmt_double(threshold_fraction) << ',' << depth << ',';
    if (size) out << *size;
    out << ',' << (feasible ? 1 : 0) << ',' << fmt_double(wall_ms) << ',' << status << ','
        << join_u64(worker_nodes) << ',' << join_doubles(load_ratios) << ',';
    bool first = true;
    for (const auto& [key, value] : phase_shares) {
        if (!first) out << ';';
        first = false;
        out << key << ':' << fmt_double(value);
    }
    return out.str();
}

void RunReport::write_text(std::ostream& out) const {
    out << "input:     " << (file.empty() ? "<none>" : file) << (complemented ? " (complemented)" : "")
        << "  n=" << n << " m=" << m << "\n";
    out << "problem:   " << mode;
    if (k) out << " k=" << *k;
    out << "\n";
    out << "strategy:  " << strategy << "  workers=" << workers;
    if (strategy == "hybrid")
        out << " capacity=" << capacity << " threshold_fraction=" << threshold_fraction;
    if (strategy == "stackonly") out << " depth=" << depth;
    out << "\n";
    out << "status:    " << status << "  wall_ms=" << fmt_double(wall_ms) << "\n";
    if (size)
        out << "result:    size=" << *size << (feasible ? "" : " (infeasible)") << "\n";
    else
        out << "result:    infeasible\n";
    if (!cover.empty()) {
        out << "cover:    ";
        for (Vertex v : cover) out << ' ' << v;
        out << "\n";
    }
    if (!worker_nodes.empty()) {
        out << "nodes:    ";
        for (auto c : worker_nodes) out << ' ' << c;
        out << "\n";
        out << "load:     ";
        for (auto r : load_ratios) out << ' ' << fmt_double(r);
        out << "\n";
    }
    if (!phase_shares.empty()) {
        out << "phases:\n";
        for (const auto& [key, value] : phase_shares)
            out << "  " << std::left << std::setw(28) << key << fmt_double(value) << "\n";
    }
}

RunReport make_report(const BaseGraph& g, SolveMode mode, const std::string& strategy,
                      const SchedulerConfig& config, const Solution& solution,
                      RunStatus status, double wall_ms,
                      const std::vector<WorkerMetrics>& workers) {
    RunReport r;
    r.n = g.num_vertices;
    r.m = g.num_edges;
    r.mode = mode.is_pvc() ? "pvc" : "mvc";
    if (mode.is_pvc()) r.k = mode.k;
    r.strategy = strategy;
    r.workers = config.num_workers;
    r.capacity = config.worklist_capacity;
    r.threshold_fraction = config.threshold_fraction;
    r.depth = config.stackonly_depth;
    if (solution.feasible) r.size = solution.size;
    r.feasible = solution.feasible;
    r.cover = solution.cover;
    r.wall_ms = wall_ms;
    r.status = run_status_name(status);
    LoadReport load = collect_metrics(workers);
    r.worker_nodes = std::move(load.worker_nodes);
    r.load_ratios = std::move(load.load_ratios);
    r.phase_shares = std::move(load.phase_shares);
    return r;
}

}  // namespace vcsolve
