#include "vcsolve/reductions.hpp"

#include "vcsolve/metrics.hpp"

namespace vcsolve {

bool apply_degree_one(SearchNode& node, const BaseGraph& g) {
    bool changed = false;
    for (Vertex v = 0; v < node.num_vertices(); ++v) {
        if (node.degrees[v] != 1) continue;  // degree at visit time
        for (Vertex u : g.neighbors_of(v)) {
            if (node.alive(u)) {
                remove_vertex_into_cover(node, g, u);
                changed = true;
                break;
            }
        }
    }
    return changed;
}

bool apply_degree_two_triangle(SearchNode& node, const BaseGraph& g) {
    bool changed = false;
    for (Vertex v = 0; v < node.num_vertices(); ++v) {
        if (node.degrees[v] != 2) continue;
        Vertex partner[2];
        int found = 0;
        for (Vertex u : g.neighbors_of(v)) {
            if (node.alive(u)) {
                partner[found++] = u;
                if (found == 2) break;
            }
        }
        if (found != 2) continue;
        if (!g.has_edge(partner[0], partner[1])) continue;
        remove_vertex_into_cover(node, g, partner[0]);
        remove_vertex_into_cover(node, g, partner[1]);
        changed = true;
    }
    return changed;
}

bool apply_high_degree(SearchNode& node, const BaseGraph& g, SolveMode mode,
                       std::uint32_t best_or_k) {
    bool changed = false;
    // |S| grows as the pass removes vertices, so the budget shrinks; the
    // limit is recomputed after every removal.
    std::uint32_t limit = ReductionBound::current(mode, best_or_k, node.cover_count).limit;
    for (Vertex v = 0; v < node.num_vertices(); ++v) {
        std::uint32_t d = node.degrees[v];
        if (d == kRemoved || d == 0) continue;
        if (d > limit) {
            remove_vertex_into_cover(node, g, v);
            changed = true;
            limit = ReductionBound::current(mode, best_or_k, node.cover_count).limit;
        }
    }
    return changed;
}

namespace {

template <typename BestFn>
void reduce_loop(SearchNode& node, const BaseGraph& g, SolveMode mode, BestFn&& best_or_k,
                 WorkerMetrics* metrics) {
    bool changed = true;
    while (changed) {
        if (node.alive_edge_count == 0) break;  // all degrees 0, no rule can fire
        changed = false;
        std::uint32_t bound_snapshot = best_or_k();
        if (metrics) {
            {
                ScopedPhase sp(*metrics, Phase::ReduceDegreeOne);
                changed |= apply_degree_one(node, g);
            }
            {
                ScopedPhase sp(*metrics, Phase::ReduceDegreeTwoTriangle);
                changed |= apply_degree_two_triangle(node, g);
            }
            {
                ScopedPhase sp(*metrics, Phase::ReduceHighDegree);
                changed |= apply_high_degree(node, g, mode, bound_snapshot);
            }
        } else {
            changed |= apply_degree_one(node, g);
            changed |= apply_degree_two_triangle(node, g);
            changed |= apply_high_degree(node, g, mode, bound_snapshot);
        }
    }
}

}  // namespace

void reduce_to_fixpoint(SearchNode& node, const BaseGraph& g, SolveMode mode,
                        std::uint32_t best_or_k, WorkerMetrics* metrics) {
    reduce_loop(node, g, mode, [best_or_k] { return best_or_k; }, metrics);
}

void reduce_to_fixpoint(SearchNode& node, const BaseGraph& g, SolveMode mode,
                        const std::atomic<std::uint32_t>& best_or_k, WorkerMetrics* metrics) {
    reduce_loop(
        node, g, mode, [&best_or_k] { return best_or_k.load(std::memory_order_relaxed); },
        metrics);
}

void reduce_degree_rules_to_fixpoint(SearchNode& node, const BaseGraph& g) {
    bool changed = true;
    while (changed) {
        if (node.alive_edge_count == 0) break;
        changed = false;
        changed |= apply_degree_one(node, g);
        changed |= apply_degree_two_triangle(node, g);
    }
}

}  // namespace vcsolve
