#pragma once

#include <chrono>
#include <cstdint>
#include <vector>

#include "vcsolve/bounds.hpp"
#include "vcsolve/graph.hpp"
#include "vcsolve/metrics.hpp"
#include "vcsolve/solver_seq.hpp"
#include "vcsolve/worklist.hpp"

namespace vcsolve {

/// Knobs shared by the parallel strategies. The worklist fields apply to
/// Hybrid, stackonly_depth to StackOnly.
struct SchedulerConfig {
    unsigned num_workers = 1;
    std::size_t worklist_capacity = 4096;
    double threshold_fraction = 0.5;  // in (0, 1]
    unsigned stackonly_depth = 8;     // sub-trees start at this level
    std::chrono::microseconds backoff{50};
    SolveLimits limits;
    bool collect_visit_trace = false;
};

/// round(threshold_fraction * worklist_capacity), clamped to >= 1.
std::size_t worklist_threshold(const SchedulerConfig& config);

/// Throws std::invalid_argument on out-of-range fields.
void validate_config(const SchedulerConfig& config);

struct ParallelRun {
    Solution solution;
    RunStatus status = RunStatus::Complete;
    std::vector<WorkerMetrics> workers;
    GlobalWorklist::Stats worklist;  // zeros for StackOnly
    double wall_ms = 0.0;
    std::uint32_t greedy_size = 0;
};

/// Hybrid strategy: per-worker local stacks plus a threshold-gated global
/// worklist. The worklist is seeded with the root node; each worker pops its
/// stack first and falls back to the worklist, reduces, prunes or records
/// covers, and on branching donates the remove-N(v_max) child to the
/// worklist when it is below the threshold (stacking it otherwise) before
/// continuing with the remove-v_max child.
ParallelRun run_hybrid(const BaseGraph& g, SolveMode mode, const SchedulerConfig& config);

/// Baseline strategy: the 2^depth sub-trees rooted at a fixed level are
/// claimed dynamically from a shared counter; each worker replays the path
/// from the root to its sub-tree (branch bit j of the sub-tree index picks
/// the child at level j: 0 = remove v_max, 1 = remove N(v_max)), then
/// traverses the residual sub-tree depth-first on its local stack.
ParallelRun run_stackonly(const BaseGraph& g, SolveMode mode, const SchedulerConfig& config);

}  // namespace vcsolve
