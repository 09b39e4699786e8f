#include "vcsolve/worklist.hpp"

#include <thread>

namespace vcsolve {

GlobalWorklist::GlobalWorklist(std::size_t capacity, std::size_t threshold,
                               unsigned total_workers)
    : capacity_(capacity), threshold_(threshold), total_workers_(total_workers) {}

bool GlobalWorklist::try_add(SearchNode& node) {
    std::lock_guard lk(mu_);
    if (entries_.size() >= capacity_) return false;
    entries_.push_back(std::move(node));
    ++added_;
    if (entries_.size() > max_size_) max_size_ = entries_.size();
    size_.store(entries_.size(), std::memory_order_relaxed);
    return true;
}

GlobalWorklist::Outcome GlobalWorklist::remove_or_done(SearchNode& out,
                                                       const std::atomic<bool>& cancel,
                                                       std::chrono::microseconds backoff) {
    bool registered = false;
    while (true) {
        {
            std::lock_guard lk(mu_);
            if (!entries_.empty()) {
                out = std::move(entries_.front());
                entries_.pop_front();
                ++removed_;
                size_.store(entries_.size(), std::memory_order_relaxed);
                if (registered) --waiting_;
                return Outcome::Got;
            }
            if (!registered) {
                registered = true;
                ++waiting_;
            }
            // Empty pool and every worker waiting here: nobody can donate
            // again, so the traversal is finished.
            if (waiting_ == total_workers_) done_ = true;
            if (done_) return Outcome::Done;
        }
        if (cancel.load(std::memory_order_relaxed)) return Outcome::Done;
        std::this_thread::sleep_for(backoff);
    }
}

GlobalWorklist::Stats GlobalWorklist::stats() const {
    std::lock_guard lk(mu_);
    return {added_, removed_, max_size_, entries_.size()};
}

}  // namespace vcsolve
