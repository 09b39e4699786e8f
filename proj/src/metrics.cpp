#include "vcsolve/metrics.hpp"

#include <algorithm>

namespace vcsolve {

const char* phase_key(Phase p) {
    switch (p) {
        case Phase::WorklistRemove: return "worklist_remove";
        case Phase::WorklistAdd: return "worklist_add";
        case Phase::StackOps: return "stack_ops";
        case Phase::ReduceDegreeOne: return "reduce_degree_one";
        case Phase::ReduceDegreeTwoTriangle: return "reduce_degree_two_triangle";
        case Phase::ReduceHighDegree: return "reduce_high_degree";
        case Phase::MaxDegreeScan: return "max_degree_scan";
        case Phase::BranchRemoveNeighbors: return "branch_remove_neighbors";
        case Phase::BranchRemoveVertex: return "branch_remove_vertex";
        case Phase::PruneCheck: return "prune_check";
    }
    return "unknown";
}

LoadReport collect_metrics(std::span<const WorkerMetrics> workers) {
    LoadReport report;
    report.worker_nodes.reserve(workers.size());
    std::uint64_t total = 0;
    for (const auto& w : workers) {
        report.worker_nodes.push_back(w.nodes_visited);
        total += w.nodes_visited;
    }

    double mean = workers.empty() ? 0.0 : static_cast<double>(total) / workers.size();
    report.load_ratios.reserve(workers.size());
    for (const auto& w : workers) {
        double ratio = mean > 0.0 ? static_cast<double>(w.nodes_visited) / mean : 1.0;
        report.load_ratios.push_back(ratio);
    }
    if (!report.load_ratios.empty()) {
        report.max_load_ratio = *std::max_element(report.load_ratios.begin(),
                                                  report.load_ratios.end());
        report.min_load_ratio = *std::min_element(report.load_ratios.begin(),
                                                  report.load_ratios.end());
    }

    // Per-worker shares of that worker's own loop time, averaged across
    // workers; the untracked remainder is reported as "other".
    std::array<double, kNumPhases> share_sum{};
    double other_sum = 0.0;
    std::size_t counted = 0;
    for (const auto& w : workers) {
        if (w.active_ns == 0) continue;
        ++counted;
        double tracked = 0.0;
        for (std::size_t p = 0; p < kNumPhases; ++p) {
            double s = static_cast<double>(w.phase_ns[p]) / static_cast<double>(w.active_ns);
            share_sum[p] += s;
            tracked += s;
        }
        other_sum += tracked >= 1.0 ? 0.0 : 1.0 - tracked;
    }
    for (std::size_t p = 0; p < kNumPhases; ++p) {
        double mean_share = counted ? share_sum[p] / counted : 0.0;
        report.phase_shares[phase_key(static_cast<Phase>(p))] = mean_share;
    }
    report.phase_shares["other"] = counted ? other_sum / counted : 1.0;
    return report;
}

}  // namespace vcsolve
