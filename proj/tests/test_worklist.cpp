#include <doctest.h>

#include <atomic>
#include <chrono>
#include <thread>
#include <vector>

#include "testutil.hpp"
#include "vcsolve/worklist.hpp"

using namespace vcsolve;
namespace tu = vcsolve::testutil;

namespace {

SearchNode tiny_node() {
    static BaseGraph g = tu::path_graph(3);
    return init_root(g);
}

constexpr std::chrono::microseconds kBackoff{20};

}  // namespace

TEST_CASE("add accepts below capacity and rejects at capacity") {
    GlobalWorklist wl(2, 4, 1);
    SearchNode a = tiny_node();
    SearchNode b = tiny_node();
    SearchNode c = tiny_node();
    CHECK(wl.try_add(a));
    CHECK(wl.try_add(b));
    CHECK(wl.size() == 2);
    CHECK_FALSE(wl.try_add(c));
    CHECK(c.degrees.size() == 3);  // rejected node stays with the caller
    CHECK(wl.size() == 2);
}

TEST_CASE("single worker on an empty worklist is done immediately") {
    GlobalWorklist wl(4, 2, 1);
    std::atomic<bool> cancel{false};
    SearchNode out;
    CHECK(wl.remove_or_done(out, cancel, kBackoff) == GlobalWorklist::Outcome::Done);
}

TEST_CASE("exactly one worker gets a single entry, the rest terminate") {
    constexpr unsigned kWorkers = 8;
    GlobalWorklist wl(16, 4, kWorkers);
    SearchNode root = tiny_node();
    REQUIRE(wl.try_add(root));

    std::atomic<bool> cancel{false};
    std::atomic<int> got{0};
    std::atomic<int> done{0};
    std::vector<std::thread> threads;
    for (unsigned i = 0; i < kWorkers; ++i) {
        threads.emplace_back([&] {
            SearchNode out;
            while (true) {
                auto outcome = wl.remove_or_done(out, cancel, kBackoff);
                if (outcome == GlobalWorklist::Outcome::Got) {
                    ++got;
                    continue;  // consumed the only node, now wait for done
                }
                ++done;
                return;
            }
        });
    }
    for (auto& t : threads) t.join();
    CHECK(got.load() == 1);
    CHECK(done.load() == kWorkers);
    CHECK(wl.stats().removed == 1);
}

TEST_CASE("cancel releases every waiting worker") {
    constexpr unsigned kWorkers = 4;
    // total_workers deliberately larger than the spawned waiters, so the
    // empty-and-all-waiting exit can never fire; only the flag can.
    GlobalWorklist wl(4, 2, kWorkers + 1);
    std::atomic<bool> cancel{false};
    std::atomic<int> done{0};
    std::vector<std::thread> threads;
    for (unsigned i = 0; i < kWorkers; ++i) {
        threads.emplace_back([&] {
            SearchNode out;
            if (wl.remove_or_done(out, cancel, kBackoff) == GlobalWorklist::Outcome::Done)
                ++done;
        });
    }
    std::this_thread::sleep_for(std::chrono::milliseconds(5));
    CHECK(done.load() == 0);
    cancel.store(true);
    for (auto& t : threads) t.join();
    CHECK(done.load() == kWorkers);
}

TEST_CASE("size never exceeds capacity under 16 concurrent producers") {
    constexpr std::size_t kCapacity = 8;
    GlobalWorklist wl(kCapacity, kCapacity, 16);
    std::atomic<int> accepted{0};
    std::vector<std::thread> threads;
    for (int i = 0; i < 16; ++i) {
        threads.emplace_back([&] {
            for (int j = 0; j < 64; ++j) {
                SearchNode n = tiny_node();
                if (wl.try_add(n)) ++accepted;
            }
        });
    }
    for (auto& t : threads) t.join();
    auto stats = wl.stats();
    CHECK(stats.max_size <= kCapacity);
    CHECK(stats.current_size == kCapacity);
    CHECK(accepted.load() == static_cast<int>(kCapacity));
}

TEST_CASE("concurrent adds at capacity-1 accept exactly one") {
    for (int round = 0; round < 50; ++round) {
        GlobalWorklist wl(4, 4, 16);
        for (int i = 0; i < 3; ++i) {
            SearchNode n = tiny_node();
            REQUIRE(wl.try_add(n));
        }
        std::atomic<int> accepted{0};
        std::vector<std::thread> threads;
        for (int i = 0; i < 16; ++i) {
            threads.emplace_back([&] {
                SearchNode n = tiny_node();
                if (wl.try_add(n)) ++accepted;
            });
        }
        for (auto& t : threads) t.join();
        CHECK(accepted.load() == 1);
        CHECK(wl.stats().max_size == 4);
    }
}

TEST_CASE("producers and consumers drain the pool with nothing lost") {
    constexpr unsigned kConsumers = 4;
    constexpr int kPerProducer = 200;
    GlobalWorklist wl(1024, 512, kConsumers);
    std::atomic<bool> cancel{false};
    std::atomic<int> consumed{0};

    std::vector<std::thread> producers;
    for (int p = 0; p < 3; ++p) {
        producers.emplace_back([&] {
            for (int i = 0; i < kPerProducer; ++i) {
                SearchNode n = tiny_node();
                while (!wl.try_add(n)) std::this_thread::yield();
            }
        });
    }
    for (auto& t : producers) t.join();

    std::vector<std::thread> consumers;
    for (unsigned c = 0; c < kConsumers; ++c) {
        consumers.emplace_back([&] {
            SearchNode out;
            while (wl.remove_or_done(out, cancel, kBackoff) == GlobalWorklist::Outcome::Got)
                ++consumed;
        });
    }
    for (auto& t : consumers) t.join();

    auto stats = wl.stats();
    CHECK(consumed.load() == 3 * kPerProducer);
    CHECK(stats.added == stats.removed);
    CHECK(stats.current_size == 0);
}
