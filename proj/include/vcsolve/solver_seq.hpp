#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "vcsolve/bounds.hpp"
#include "vcsolve/graph.hpp"
#include "vcsolve/metrics.hpp"

namespace vcsolve {

/// Solver output. `cover` is in original ids; for MVC `feasible` is always
/// true, for PVC it reports whether a cover of size <= k was found.
struct Solution {
    std::uint32_t size = 0;
    std::vector<Vertex> cover;
    bool feasible = true;
};

enum class RunStatus { Complete, Timeout, Budget };

const char* run_status_name(RunStatus s);

/// Optional caps on a solve; exceeding one aborts the run with the
/// corresponding status and the best result found so far.
struct SolveLimits {
    std::optional<std::uint64_t> node_budget;
    std::optional<double> timeout_s;
};

struct SeqRun {
    Solution solution;
    RunStatus status = RunStatus::Complete;
    WorkerMetrics metrics;
    double wall_ms = 0.0;
};

/// Reference single-threaded solver: depth-first with an explicit stack.
/// At each branch the remove-N(v_max) child is deferred onto the stack and
/// the remove-v_max child is processed next.
SeqRun solve_mvc_seq(const BaseGraph& g, const SolveLimits& limits = {},
                     bool collect_visit_trace = false);

/// PVC variant: the search ends as soon as a cover of size <= k is found.
SeqRun solve_pvc_seq(const BaseGraph& g, std::uint32_t k, const SolveLimits& limits = {},
                     bool collect_visit_trace = false);

/// Exhaustive oracle: minimum cover by enumerating all 2^|V| vertex subsets.
/// Throws std::invalid_argument for |V| > 20.
Solution brute_force_mvc(const BaseGraph& g);

/// Same enumeration over an explicit edge list on vertices [0, n). Used to
/// check reduced instances without materializing a BaseGraph.
std::uint32_t brute_force_mvc_size(std::uint32_t num_vertices,
                                   std::span<const std::pair<Vertex, Vertex>> edges);

}  // namespace vcsolve
