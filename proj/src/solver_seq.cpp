#include "vcsolve/solver_seq.hpp"

#include <bit>
#include <chrono>
#include <stdexcept>
#include <vector>

#include "vcsolve/reductions.hpp"
#include "vcsolve/search_node.hpp"

namespace vcsolve {

const char* run_status_name(RunStatus s) {
    switch (s) {
        case RunStatus::Complete: return "complete";
        case RunStatus::Timeout: return "timeout";
        case RunStatus::Budget: return "budget";
    }
    return "unknown";
}

namespace {

std::vector<Vertex> to_original_ids(const std::vector<Vertex>& internal, std::uint32_t id_base) {
    std::vector<Vertex> out;
    out.reserve(internal.size());
    for (Vertex v : internal) out.push_back(v + id_base);
    return out;
}

struct LimitTracker {
    std::optional<std::uint64_t> node_budget;
    std::chrono::steady_clock::time_point deadline;
    bool has_deadline = false;
    std::uint64_t nodes = 0;

    explicit LimitTracker(const SolveLimits& limits) : node_budget(limits.node_budget) {
        if (limits.timeout_s) {
            has_deadline = true;
            deadline = std::chrono::steady_clock::now() +
                       std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                           std::chrono::duration<double>(*limits.timeout_s));
        }
    }

    // Returns the abort status for this visit, if a limit tripped.
    std::optional<RunStatus> on_visit() {
        ++nodes;
        if (node_budget && nodes > *node_budget) return RunStatus::Budget;
        if (has_deadline && std::chrono::steady_clock::now() >= deadline)
            return RunStatus::Timeout;
        return std::nullopt;
    }
};

SeqRun solve_seq(const BaseGraph& g, SolveMode mode, const SolveLimits& limits,
                 bool collect_visit_trace) {
    auto t0 = std::chrono::steady_clock::now();
    SeqRun run;
    WorkerMetrics& m = run.metrics;
    LimitTracker tracker(limits);

    GreedyResult greedy = greedy_approx(g);
    std::uint32_t best = greedy.size;
    std::vector<Vertex> best_cover = greedy.cover;
    bool pvc_found = false;

    // For PVC the pruning bound is k; greedy still provisions nothing here
    // since the stack bound is k.
    std::uint32_t best_or_k = mode.is_pvc() ? mode.k : best;
    std::size_t stack_bound = mode.is_pvc()
                                  ? std::min<std::size_t>(mode.k, g.num_vertices)
                                  : greedy.size;
    LocalStack stack(stack_bound);

    SearchNode node = init_root(g);
    bool have_node = true;

    while (true) {
        if (!have_node) {
            ScopedPhase sp(m, Phase::StackOps);
            if (stack.empty()) break;
            node = stack.pop();
            have_node = true;
        }
        ++m.nodes_visited;
        if (collect_visit_trace) m.visit_trace.push_back(node_fingerprint(node));
        if (auto aborted = tracker.on_visit()) {
            run.status = *aborted;
            break;
        }

        reduce_to_fixpoint(node, g, mode, best_or_k, &m);

        bool prune;
        {
            ScopedPhase sp(m, Phase::PruneCheck);
            prune = should_prune(node, mode, best);
        }
        if (prune) {
            have_node = false;
            continue;
        }
        if (is_cover_found(node)) {
            if (mode.is_pvc()) {
                best = node.cover_count;
                best_cover = cover_vertices(node);
                pvc_found = true;
                break;  // the search is ended
            }
            if (node.cover_count < best) {
                best = node.cover_count;
                best_cover = cover_vertices(node);
                best_or_k = best;
            }
            have_node = false;
            continue;
        }

        Vertex v;
        {
            ScopedPhase sp(m, Phase::MaxDegreeScan);
            v = *max_degree_vertex(node);
        }
        SearchNode deferred;
        {
            ScopedPhase sp(m, Phase::BranchRemoveNeighbors);
            deferred = node;  // clone; the sibling branch mutates its own copy
            remove_neighbors_into_cover(deferred, g, v);
        }
        {
            ScopedPhase sp(m, Phase::StackOps);
            stack.push(std::move(deferred));
        }
        {
            ScopedPhase sp(m, Phase::BranchRemoveVertex);
            remove_vertex_into_cover(node, g, v);
        }
    }

    m.stack_high_water = stack.high_water();
    m.active_ns = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() -
                                                             t0)
            .count());

    if (mode.is_pvc()) {
        run.solution.feasible = pvc_found;
        run.solution.size = pvc_found ? best : 0;
        run.solution.cover = pvc_found ? to_original_ids(best_cover, g.id_base)
                                       : std::vector<Vertex>{};
    } else {
        run.solution.feasible = true;
        run.solution.size = best;
        run.solution.cover = to_original_ids(best_cover, g.id_base);
    }
    run.wall_ms = static_cast<double>(m.active_ns) / 1e6;
    return run;
}

}  // namespace

SeqRun solve_mvc_seq(const BaseGraph& g, const SolveLimits& limits, bool collect_visit_trace) {
    return solve_seq(g, SolveMode::mvc(), limits, collect_visit_trace);
}

SeqRun solve_pvc_seq(const BaseGraph& g, std::uint32_t k, const SolveLimits& limits,
                     bool collect_visit_trace) {
    if (k < 1) throw std::invalid_argument("pvc requires k >= 1");
    return solve_seq(g, SolveMode::pvc(k), limits, collect_visit_trace);
}

Solution brute_force_mvc(const BaseGraph& g) {
    if (g.num_vertices > 20)
        throw std::invalid_argument("brute force oracle is limited to 20 vertices");
    std::uint32_t n = g.num_vertices;
    Solution sol;
    if (n == 0) return sol;

    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(g.num_edges);
    for (Vertex v = 0; v < n; ++v) {
        for (Vertex u : g.neighbors_of(v)) {
            if (v < u) edges.emplace_back(v, u);
        }
    }

    std::uint32_t best_size = n;  // V(G) always covers
    std::uint32_t best_mask = (1u << n) - 1u;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::uint32_t size = static_cast<std::uint32_t>(std::popcount(mask));
        if (size >= best_size) continue;
        bool covers = true;
        for (auto [u, v] : edges) {
            if (((mask >> u) & 1u) == 0 && ((mask >> v) & 1u) == 0) {
                covers = false;
                break;
            }
        }
        if (covers) {
            best_size = size;
            best_mask = mask;
        }
    }

    sol.size = best_size;
    for (Vertex v = 0; v < n; ++v) {
        if ((best_mask >> v) & 1u) sol.cover.push_back(v + g.id_base);
    }
    return sol;
}

std::uint32_t brute_force_mvc_size(std::uint32_t num_vertices,
                                   std::span<const std::pair<Vertex, Vertex>> edges) {
    if (num_vertices > 20)
        throw std::invalid_argument("brute force oracle is limited to 20 vertices");
    if (num_vertices == 0) return 0;
    std::uint32_t best = num_vertices;
    for (std::uint32_t mask = 0; mask < (1u << num_vertices); ++mask) {
        std::uint32_t size = static_cast<std::uint32_t>(std::popcount(mask));
        if (size >= best) continue;
        bool covers = true;
        for (auto [u, v] : edges) {
            if (((mask >> u) & 1u) == 0 && ((mask >> v) & 1u) == 0) {
                covers = false;
                break;
            }
        }
        if (covers) best = size;
    }
    return best;
}

}  // namespace vcsolve
