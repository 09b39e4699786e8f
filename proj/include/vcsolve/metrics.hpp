#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace vcsolve {

/// Instrumented activity categories. Time not covered by any category is
/// reported as "other".
enum class Phase : int {
    WorklistRemove,
    WorklistAdd,
    StackOps,
    ReduceDegreeOne,
    ReduceDegreeTwoTriangle,
    ReduceHighDegree,
    MaxDegreeScan,
    BranchRemoveNeighbors,
    BranchRemoveVertex,
    PruneCheck,
};

inline constexpr std::size_t kNumPhases = 10;

const char* phase_key(Phase p);

/// Per-worker counters gathered during a run.
struct WorkerMetrics {
    std::uint64_t nodes_visited = 0;
    std::array<std::uint64_t, kNumPhases> phase_ns{};
    std::uint64_t active_ns = 0;  // total time inside the worker loop
    std::size_t stack_high_water = 0;
    std::vector<std::uint64_t> visit_trace;  // node fingerprints, when enabled

    void add_phase(Phase p, std::uint64_t ns) { phase_ns[static_cast<int>(p)] += ns; }
};

/// RAII scope that accrues elapsed time into one phase counter.
class ScopedPhase {
public:
    ScopedPhase(WorkerMetrics& m, Phase p)
        : metrics_(m), phase_(p), start_(std::chrono::steady_clock::now()) {}
    ~ScopedPhase() {
        auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(
                      std::chrono::steady_clock::now() - start_)
                      .count();
        metrics_.add_phase(phase_, static_cast<std::uint64_t>(ns));
    }
    ScopedPhase(const ScopedPhase&) = delete;
    ScopedPhase& operator=(const ScopedPhase&) = delete;

private:
    WorkerMetrics& metrics_;
    Phase phase_;
    std::chrono::steady_clock::time_point start_;
};

/// Load and phase summary across the workers of one run.
struct LoadReport {
    std::vector<std::uint64_t> worker_nodes;       // visited tree nodes per worker
    std::vector<double> load_ratios;               // count / mean (1.0 everywhere if mean is 0)
    std::map<std::string, double> phase_shares;    // mean per-worker share, plus "other"
    double max_load_ratio = 0.0;
    double min_load_ratio = 0.0;
};

LoadReport collect_metrics(std::span<const WorkerMetrics> workers);

}  // namespace vcsolve
