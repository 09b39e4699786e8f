#include "vcsolve/scheduler.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "vcsolve/reductions.hpp"

namespace vcsolve {

std::size_t worklist_threshold(const SchedulerConfig& config) {
    auto t = static_cast<std::size_t>(
        std::llround(config.threshold_fraction * static_cast<double>(config.worklist_capacity)));
    return std::max<std::size_t>(1, std::min(t, config.worklist_capacity));
}

void validate_config(const SchedulerConfig& config) {
    if (config.num_workers < 1) throw std::invalid_argument("num_workers must be >= 1");
    if (config.worklist_capacity < 1)
        throw std::invalid_argument("worklist_capacity must be >= 1");
    if (!(config.threshold_fraction > 0.0) || config.threshold_fraction > 1.0)
        throw std::invalid_argument("threshold_fraction must be in (0, 1]");
    if (config.stackonly_depth < 1 || config.stackonly_depth > 30)
        throw std::invalid_argument("stackonly_depth must be in [1, 30]");
    if (config.backoff.count() < 0) throw std::invalid_argument("backoff must be >= 0");
}

namespace {

struct SharedSolverState {
    // Monotone non-increasing under min-update; holds k for PVC (unused by
    // its pruning formulas beyond the mode, but keeps one reduce path).
    std::atomic<std::uint32_t> best{0};
    std::atomic<bool> cancel{false};  // PVC found-flag or an abort
    std::atomic<bool> found{false};   // PVC
    std::atomic<int> status{static_cast<int>(RunStatus::Complete)};
    std::atomic<std::uint64_t> nodes_total{0};

    std::mutex cover_mu;
    std::vector<Vertex> best_cover;     // internal ids, guarded by cover_mu
    std::uint32_t best_cover_size = 0;  // guarded by cover_mu
    bool pvc_found = false;             // guarded by cover_mu

    std::optional<std::uint64_t> node_budget;
    bool has_deadline = false;
    std::chrono::steady_clock::time_point deadline;

    void configure_limits(const SolveLimits& limits) {
        node_budget = limits.node_budget;
        if (limits.timeout_s) {
            has_deadline = true;
            deadline = std::chrono::steady_clock::now() +
                       std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                           std::chrono::duration<double>(*limits.timeout_s));
        }
    }

    // Counts one visited tree node; trips the budget/timeout abort.
    // Returns true when the run is being cancelled.
    bool visit_and_check_limits() {
        std::uint64_t total = nodes_total.fetch_add(1, std::memory_order_relaxed) + 1;
        if (node_budget && total > *node_budget) {
            abort_with(RunStatus::Budget);
            return true;
        }
        if (has_deadline && std::chrono::steady_clock::now() >= deadline) {
            abort_with(RunStatus::Timeout);
            return true;
        }
        return false;
    }

    void abort_with(RunStatus s) {
        int expected = static_cast<int>(RunStatus::Complete);
        status.compare_exchange_strong(expected, static_cast<int>(s));
        cancel.store(true, std::memory_order_relaxed);
    }

    // New cover at `node`. MVC: atomic min-update of best plus a guarded
    // certificate update. PVC: record and raise the found flag.
    void record_cover(const SearchNode& node, bool pvc) {
        std::uint32_t size = node.cover_count;
        if (pvc) {
            {
                std::lock_guard lk(cover_mu);
                if (!pvc_found || size < best_cover_size) {
                    pvc_found = true;
                    best_cover_size = size;
                    best_cover = cover_vertices(node);
                }
            }
            found.store(true, std::memory_order_relaxed);
            cancel.store(true, std::memory_order_relaxed);
            return;
        }
        std::uint32_t current = best.load(std::memory_order_relaxed);
        while (size < current &&
               !best.compare_exchange_weak(current, size, std::memory_order_relaxed)) {
        }
        std::lock_guard lk(cover_mu);
        if (size < best_cover_size) {
            best_cover_size = size;
            best_cover = cover_vertices(node);
        }
    }
};

std::vector<Vertex> to_original_ids(const std::vector<Vertex>& internal, std::uint32_t id_base) {
    std::vector<Vertex> out;
    out.reserve(internal.size());
    for (Vertex v : internal) out.push_back(v + id_base);
    return out;
}

std::size_t stack_bound_for(const BaseGraph& g, SolveMode mode, std::uint32_t greedy_size) {
    if (mode.is_pvc()) return std::min<std::size_t>(mode.k, g.num_vertices);
    return greedy_size;
}

// One node's reduce / prune / cover-check step, shared by both strategies.
// Returns true when the caller should branch on *branch_vertex.
bool process_node(SearchNode& node, const BaseGraph& g, SolveMode mode,
                  SharedSolverState& shared, WorkerMetrics& m, Vertex* branch_vertex) {
    reduce_to_fixpoint(node, g, mode, shared.best, &m);

    bool prune;
    {
        ScopedPhase sp(m, Phase::PruneCheck);
        prune = should_prune(node, mode, shared.best.load(std::memory_order_relaxed));
    }
    if (prune) return false;
    if (is_cover_found(node)) {
        shared.record_cover(node, mode.is_pvc());
        return false;
    }
    {
        ScopedPhase sp(m, Phase::MaxDegreeScan);
        *branch_vertex = *max_degree_vertex(node);
    }
    return true;
}

void hybrid_worker(const BaseGraph& g, SolveMode mode, const SchedulerConfig& config,
                   GlobalWorklist& wl, SharedSolverState& shared, WorkerMetrics& m,
                   std::size_t stack_bound) {
    auto t0 = std::chrono::steady_clock::now();
    LocalStack stack(stack_bound);
    SearchNode node;
    bool have_node = false;

    while (true) {
        if (shared.cancel.load(std::memory_order_relaxed)) break;
        if (!have_node) {
            bool popped = false;
            {
                ScopedPhase sp(m, Phase::StackOps);
                if (!stack.empty()) {
                    node = stack.pop();
                    popped = true;
                }
            }
            if (!popped) {
                ScopedPhase sp(m, Phase::WorklistRemove);
                if (wl.remove_or_done(node, shared.cancel, config.backoff) ==
                    GlobalWorklist::Outcome::Done)
                    break;
            }
            have_node = true;
        }

        ++m.nodes_visited;
        if (config.collect_visit_trace) m.visit_trace.push_back(node_fingerprint(node));
        if (shared.visit_and_check_limits()) break;

        Vertex v = 0;
        if (!process_node(node, g, mode, shared, m, &v)) {
            if (mode.is_pvc() && shared.found.load(std::memory_order_relaxed)) break;
            have_node = false;
            continue;
        }

        SearchNode deferred;
        {
            ScopedPhase sp(m, Phase::BranchRemoveNeighbors);
            deferred = node;
            remove_neighbors_into_cover(deferred, g, v);
        }
        bool donated = false;
        if (wl.size() < wl.threshold()) {
            ScopedPhase sp(m, Phase::WorklistAdd);
            donated = wl.try_add(deferred);
        }
        if (!donated) {
            ScopedPhase sp(m, Phase::StackOps);
            stack.push(std::move(deferred));
        }
        {
            ScopedPhase sp(m, Phase::BranchRemoveVertex);
            remove_vertex_into_cover(node, g, v);
        }
        // continue with the remove-v_max child
    }

    m.stack_high_water = stack.high_water();
    m.active_ns = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() -
                                                             t0)
            .count());
}

void stackonly_worker(const BaseGraph& g, SolveMode mode, const SchedulerConfig& config,
                      const SearchNode& root, std::atomic<std::uint64_t>& next_subtree,
                      SharedSolverState& shared, WorkerMetrics& m, std::size_t stack_bound) {
    auto t0 = std::chrono::steady_clock::now();
    LocalStack stack(stack_bound);
    const unsigned depth = config.stackonly_depth;
    const std::uint64_t num_subtrees = std::uint64_t{1} << depth;

    while (!shared.cancel.load(std::memory_order_relaxed)) {
        std::uint64_t t = next_subtree.fetch_add(1, std::memory_order_relaxed);
        if (t >= num_subtrees) break;

        // Replay the root-to-sub-tree path; branch bit j of t picks the
        // child at level j (0 = remove v_max, 1 = remove N(v_max)).
        SearchNode node = root;
        bool died = false;
        for (unsigned level = 0; level < depth; ++level) {
            if (shared.cancel.load(std::memory_order_relaxed)) {
                died = true;
                break;
            }
            ++m.nodes_visited;
            if (config.collect_visit_trace) m.visit_trace.push_back(node_fingerprint(node));
            if (shared.visit_and_check_limits()) {
                died = true;
                break;
            }
            Vertex v = 0;
            if (!process_node(node, g, mode, shared, m, &v)) {
                died = true;
                break;
            }
            if ((t >> level) & 1u) {
                ScopedPhase sp(m, Phase::BranchRemoveNeighbors);
                remove_neighbors_into_cover(node, g, v);
            } else {
                ScopedPhase sp(m, Phase::BranchRemoveVertex);
                remove_vertex_into_cover(node, g, v);
            }
        }
        if (died) continue;

        // Depth-first traversal of the residual sub-tree.
        bool have_node = true;
        while (true) {
            if (shared.cancel.load(std::memory_order_relaxed)) break;
            if (!have_node) {
                ScopedPhase sp(m, Phase::StackOps);
                if (stack.empty()) break;
                node = stack.pop();
                have_node = true;
            }
            ++m.nodes_visited;
            if (config.collect_visit_trace) m.visit_trace.push_back(node_fingerprint(node));
            if (shared.visit_and_check_limits()) break;

            Vertex v = 0;
            if (!process_node(node, g, mode, shared, m, &v)) {
                have_node = false;
                continue;
            }
            SearchNode deferred;
            {
                ScopedPhase sp(m, Phase::BranchRemoveNeighbors);
                deferred = node;
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
    }

    m.stack_high_water = stack.high_water();
    m.active_ns = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() -
                                                             t0)
            .count());
}

ParallelRun finish_run(const BaseGraph& g, SolveMode mode, SharedSolverState& shared,
                       std::vector<WorkerMetrics>&& metrics, GlobalWorklist::Stats wl_stats,
                       std::uint32_t greedy_size,
                       std::chrono::steady_clock::time_point t0) {
    ParallelRun run;
    run.workers = std::move(metrics);
    run.worklist = wl_stats;
    run.status = static_cast<RunStatus>(shared.status.load());
    run.greedy_size = greedy_size;

    std::lock_guard lk(shared.cover_mu);
    if (mode.is_pvc()) {
        run.solution.feasible = shared.pvc_found;
        run.solution.size = shared.pvc_found ? shared.best_cover_size : 0;
        if (shared.pvc_found)
            run.solution.cover = to_original_ids(shared.best_cover, g.id_base);
    } else {
        run.solution.feasible = true;
        run.solution.size = shared.best_cover_size;
        run.solution.cover = to_original_ids(shared.best_cover, g.id_base);
    }
    run.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                            t0)
                      .count();
    return run;
}

}  // namespace

ParallelRun run_hybrid(const BaseGraph& g, SolveMode mode, const SchedulerConfig& config) {
    validate_config(config);
    if (mode.is_pvc() && mode.k < 1) throw std::invalid_argument("pvc requires k >= 1");
    auto t0 = std::chrono::steady_clock::now();

    GreedyResult greedy = greedy_approx(g);
    SharedSolverState shared;
    shared.configure_limits(config.limits);
    shared.best.store(mode.is_pvc() ? mode.k : greedy.size);
    if (!mode.is_pvc()) {
        shared.best_cover = greedy.cover;
        shared.best_cover_size = greedy.size;
    }

    GlobalWorklist wl(config.worklist_capacity, worklist_threshold(config), config.num_workers);
    SearchNode root = init_root(g);
    wl.try_add(root);

    std::size_t bound = stack_bound_for(g, mode, greedy.size);
    std::vector<WorkerMetrics> metrics(config.num_workers);
    {
        std::vector<std::thread> threads;
        threads.reserve(config.num_workers);
        for (unsigned w = 0; w < config.num_workers; ++w) {
            threads.emplace_back(hybrid_worker, std::cref(g), mode, std::cref(config),
                                 std::ref(wl), std::ref(shared), std::ref(metrics[w]), bound);
        }
        for (auto& t : threads) t.join();
    }

    return finish_run(g, mode, shared, std::move(metrics), wl.stats(), greedy.size, t0);
}

ParallelRun run_stackonly(const BaseGraph& g, SolveMode mode, const SchedulerConfig& config) {
    validate_config(config);
    if (mode.is_pvc() && mode.k < 1) throw std::invalid_argument("pvc requires k >= 1");
    auto t0 = std::chrono::steady_clock::now();

    GreedyResult greedy = greedy_approx(g);
    SharedSolverState shared;
    shared.configure_limits(config.limits);
    shared.best.store(mode.is_pvc() ? mode.k : greedy.size);
    if (!mode.is_pvc()) {
        shared.best_cover = greedy.cover;
        shared.best_cover_size = greedy.size;
    }

    SearchNode root = init_root(g);
    std::atomic<std::uint64_t> next_subtree{0};
    std::size_t bound = stack_bound_for(g, mode, greedy.size);
    std::vector<WorkerMetrics> metrics(config.num_workers);
    {
        std::vector<std::thread> threads;
        threads.reserve(config.num_workers);
        for (unsigned w = 0; w < config.num_workers; ++w) {
            threads.emplace_back(stackonly_worker, std::cref(g), mode, std::cref(config),
                                 std::cref(root), std::ref(next_subtree), std::ref(shared),
                                 std::ref(metrics[w]), bound);
        }
        for (auto& t : threads) t.join();
    }

    return finish_run(g, mode, shared, std::move(metrics), GlobalWorklist::Stats{},
                      greedy.size, t0);
}

}  // namespace vcsolve
