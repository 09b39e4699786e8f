#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vcsolve/metrics.hpp"
#include "vcsolve/scheduler.hpp"
#include "vcsolve/solver_seq.hpp"

namespace vcsolve {

/// Machine-readable record of one solve, with the input and configuration
/// echoed back. Serialized as JSON (stable field names), one CSV row (cover
/// omitted), or human-readable text.
struct RunReport {
    // input
    std::string file;
    bool complemented = false;
    std::uint32_t n = 0;
    std::uint64_t m = 0;
    // problem
    std::string mode;  // "mvc" | "pvc"
    std::optional<std::uint32_t> k;
    // configuration echo
    std::string strategy;  // "seq" | "stackonly" | "hybrid" | "oracle"
    unsigned workers = 1;
    std::size_t capacity = 0;
    double threshold_fraction = 0.0;
    unsigned depth = 0;
    // result
    std::optional<std::uint32_t> size;  // absent for PVC infeasible
    bool feasible = true;
    std::vector<std::uint32_t> cover;  // original ids
    double wall_ms = 0.0;
    std::string status;  // "complete" | "timeout" | "budget"
    // instrumentation
    std::vector<std::uint64_t> worker_nodes;
    std::vector<double> load_ratios;
    std::map<std::string, double> phase_shares;
    GlobalWorklist::Stats worklist;

    std::string to_json() const;           // pretty-printed, trailing newline
    static RunReport from_json(const std::string& text);

    static std::string csv_header();
    std::string to_csv_row() const;

    void write_text(std::ostream& out) const;
};

/// Assembles the common report parts from a finished run.
RunReport make_report(const BaseGraph& g, SolveMode mode, const std::string& strategy,
                      const SchedulerConfig& config, const Solution& solution,
                      RunStatus status, double wall_ms,
                      const std::vector<WorkerMetrics>& workers);

}  // namespace vcsolve
