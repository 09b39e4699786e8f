#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <deque>
#include <mutex>

#include "vcsolve/search_node.hpp"

namespace vcsolve {

/// Bounded multi-producer/multi-consumer pool of SearchNodes with a fill
/// threshold and a termination detector, FIFO removal order.
///
/// Termination contract: a consumer is told "done" only when the pool is
/// empty and every worker in the run is simultaneously waiting inside
/// remove_or_done (or when `cancel` is set: PVC found flag, abort). Adds and
/// the empty-and-all-waiting check happen under the same lock, so a donation
/// racing the check can never produce a false done.
class GlobalWorklist {
public:
    enum class Outcome { Got, Done };

    struct Stats {
        std::uint64_t added = 0;
        std::uint64_t removed = 0;
        std::size_t max_size = 0;
        std::size_t current_size = 0;
    };

    GlobalWorklist(std::size_t capacity, std::size_t threshold, unsigned total_workers);

    /// Accepts the node unless the pool is at capacity. On accept the node is
    /// moved into the pool; on reject the caller keeps it (and stacks it
    /// locally). Callers gate on size() < threshold() first, but the add can
    /// still lose a capacity race.
    bool try_add(SearchNode& node);

    /// Loop: attempt removal; on success return Got with the node in `out`.
    /// On failure return Done if `cancel` is set or if the pool is empty with
    /// every worker waiting; otherwise sleep for `backoff` and retry.
    Outcome remove_or_done(SearchNode& out, const std::atomic<bool>& cancel,
                           std::chrono::microseconds backoff);

    std::size_t size() const { return size_.load(std::memory_order_relaxed); }
    std::size_t threshold() const { return threshold_; }
    std::size_t capacity() const { return capacity_; }

    Stats stats() const;

private:
    mutable std::mutex mu_;
    std::deque<SearchNode> entries_;
    std::atomic<std::size_t> size_{0};
    std::size_t capacity_;
    std::size_t threshold_;
    unsigned total_workers_;
    unsigned waiting_ = 0;
    bool done_ = false;
    std::uint64_t added_ = 0;
    std::uint64_t removed_ = 0;
    std::size_t max_size_ = 0;
};

}  // namespace vcsolve
