#pragma once

#include <atomic>
#include <cstdint>

#include "vcsolve/bounds.hpp"
#include "vcsolve/graph.hpp"
#include "vcsolve/search_node.hpp"

namespace vcsolve {

struct WorkerMetrics;  // metrics.hpp

/// Remaining budget for the high-degree rule: best - |S| - 1 for MVC,
/// k - |S| for PVC, clamped at zero. Recomputed as |S| grows.
struct ReductionBound {
    std::uint32_t limit = 0;

    static ReductionBound current(SolveMode mode, std::uint32_t best_or_k,
                                  std::uint32_t cover_count) {
        if (mode.is_pvc()) {
            std::uint32_t k = mode.k;
            return {cover_count >= k ? 0 : k - cover_count};
        }
        std::uint32_t spend = cover_count + 1;
        return {best_or_k <= spend ? 0 : best_or_k - spend};
    }
};

/// One ascending-id pass: every vertex of degree one at visit time gets its
/// alive neighbor removed into the cover (the vertex itself stays alive at
/// degree 0). When two degree-one vertices are mutual neighbors, the
/// smaller-id one acts, so exactly one endpoint enters the cover.
bool apply_degree_one(SearchNode& node, const BaseGraph& g);

/// One ascending-id pass: every vertex whose two alive neighbors u, w are
/// themselves adjacent gets both removed into the cover. When two degree-two
/// vertices share the triangle, the smaller-id one acts.
bool apply_degree_two_triangle(SearchNode& node, const BaseGraph& g);

/// One ascending-id pass removing every alive vertex whose degree exceeds
/// the remaining budget. The bound is recomputed per removal since |S| grows
/// during the pass; best_or_k itself is a snapshot taken by the caller.
bool apply_high_degree(SearchNode& node, const BaseGraph& g, SolveMode mode,
                       std::uint32_t best_or_k);

/// Applies the three rules in order (degree-one, degree-two-triangle,
/// high-degree) until one full round changes nothing. best_or_k is re-read
/// at the start of every round through the atomic overload; the plain
/// overload uses a constant snapshot. `metrics`, when given, accrues
/// per-rule time.
void reduce_to_fixpoint(SearchNode& node, const BaseGraph& g, SolveMode mode,
                        std::uint32_t best_or_k, WorkerMetrics* metrics = nullptr);
void reduce_to_fixpoint(SearchNode& node, const BaseGraph& g, SolveMode mode,
                        const std::atomic<std::uint32_t>& best_or_k,
                        WorkerMetrics* metrics = nullptr);

/// Degree-one + degree-two-triangle only, to a fixpoint. Used by the greedy
/// approximation, which has no best to feed the high-degree rule.
void reduce_degree_rules_to_fixpoint(SearchNode& node, const BaseGraph& g);

}  // namespace vcsolve
