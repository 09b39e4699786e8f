// Acceptance suite: runs every release criterion and prints one PASS/FAIL
// line per criterion. Exits nonzero if any criterion fails.

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "../testutil.hpp"
#include "vcsolve/bounds.hpp"
#include "vcsolve/graph.hpp"
#include "vcsolve/reductions.hpp"
#include "vcsolve/scheduler.hpp"
#include "vcsolve/solver_seq.hpp"
#include "vcsolve/worklist.hpp"

using namespace vcsolve;
namespace tu = vcsolve::testutil;

namespace {

// Seed for the hard desk-scale instance used by the load-balance and
// relative-performance criteria: the complement of G(150, 0.9).
constexpr std::uint64_t kHardInstanceSeed = 2;

int g_failures = 0;
std::uint64_t g_cover_checks = 0;
std::uint64_t g_cover_failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

void report(const std::string& name, bool pass, const std::string& detail) {
    std::cout << (pass ? "PASS" : "FAIL") << "  " << name << ": " << detail << std::endl;
    if (!pass) ++g_failures;
}

void report_skip(const std::string& name, const std::string& detail) {
    std::cout << "SKIP  " << name << ": " << detail << std::endl;
}

// Verifies a solution's certificate against the graph (original ids).
bool check_certificate(const BaseGraph& g, const Solution& sol) {
    ++g_cover_checks;
    if (!sol.feasible) return true;
    std::vector<Vertex> internal;
    internal.reserve(sol.cover.size());
    for (Vertex v : sol.cover) internal.push_back(v - g.id_base);
    bool ok = sol.cover.size() == sol.size && verify_cover(g, internal);
    if (!ok) ++g_cover_failures;
    return ok;
}

SchedulerConfig make_config(unsigned workers, std::size_t capacity, double fraction,
                            unsigned depth) {
    SchedulerConfig c;
    c.num_workers = workers;
    c.worklist_capacity = capacity;
    c.threshold_fraction = fraction;
    c.stackonly_depth = depth;
    c.backoff = std::chrono::microseconds(20);
    return c;
}

struct Corpus {
    std::vector<BaseGraph> graphs;
    std::vector<std::uint32_t> oracle_sizes;
};

Corpus build_corpus() {
    Corpus corpus;
    corpus.graphs = tu::named_corpus();
    auto random = tu::random_corpus(500, 42);
    corpus.graphs.insert(corpus.graphs.end(), random.begin(), random.end());
    corpus.oracle_sizes.reserve(corpus.graphs.size());
    for (const auto& g : corpus.graphs) {
        Solution oracle = brute_force_mvc(g);
        check_certificate(g, oracle);
        corpus.oracle_sizes.push_back(oracle.size);
    }
    return corpus;
}

void criterion_oracle_equivalence(const Corpus& corpus) {
    Timer timer;
    constexpr std::array<unsigned, 4> kWorkers{1, 2, 4, 8};
    constexpr std::array<double, 3> kFractions{0.25, 0.5, 1.0};
    constexpr std::array<std::size_t, 3> kCapacities{1, 8, 64};
    constexpr std::array<unsigned, 3> kDepths{1, 4, 8};

    std::uint64_t runs = 0;
    std::uint64_t mismatches = 0;
    for (std::size_t i = 0; i < corpus.graphs.size(); ++i) {
        const BaseGraph& g = corpus.graphs[i];
        std::uint32_t expected = corpus.oracle_sizes[i];

        SeqRun seq = solve_mvc_seq(g);
        ++runs;
        if (seq.solution.size != expected || !check_certificate(g, seq.solution)) ++mismatches;

        for (unsigned w : kWorkers) {
            SchedulerConfig hybrid_config = make_config(
                w, kCapacities[i % kCapacities.size()], kFractions[i % kFractions.size()], 1);
            ParallelRun hybrid = run_hybrid(g, SolveMode::mvc(), hybrid_config);
            ++runs;
            if (hybrid.solution.size != expected || !check_certificate(g, hybrid.solution))
                ++mismatches;

            SchedulerConfig stack_config =
                make_config(w, 64, 0.5, kDepths[i % kDepths.size()]);
            ParallelRun stackonly = run_stackonly(g, SolveMode::mvc(), stack_config);
            ++runs;
            if (stackonly.solution.size != expected || !check_certificate(g, stackonly.solution))
                ++mismatches;
        }
    }
    std::ostringstream detail;
    detail << corpus.graphs.size() << " graphs, " << runs << " runs, " << mismatches
           << " mismatches (" << timer.seconds() << " s)";
    report("oracle-equivalence", mismatches == 0, detail.str());
}

void criterion_pvc_triple(const Corpus& corpus) {
    Timer timer;
    constexpr std::array<unsigned, 4> kWorkers{1, 2, 4, 8};
    std::uint64_t runs = 0;
    std::uint64_t wrong = 0;
    for (std::size_t i = 0; i < corpus.graphs.size(); ++i) {
        const BaseGraph& g = corpus.graphs[i];
        std::uint32_t opt = corpus.oracle_sizes[i];
        for (std::int64_t delta = -1; delta <= 1; ++delta) {
            std::int64_t k64 = static_cast<std::int64_t>(opt) + delta;
            if (k64 < 1) continue;
            std::uint32_t k = static_cast<std::uint32_t>(k64);
            bool expect_feasible = k64 >= opt;
            SolveMode mode = SolveMode::pvc(k);

            auto judge = [&](const Solution& sol) {
                ++runs;
                bool ok = sol.feasible == expect_feasible && check_certificate(g, sol) &&
                          (!sol.feasible || sol.size <= k);
                if (!ok) ++wrong;
            };

            judge(solve_pvc_seq(g, k).solution);
            for (unsigned w : kWorkers) {
                judge(run_hybrid(g, mode, make_config(w, 64, 0.5, 1)).solution);
                judge(run_stackonly(g, mode, make_config(w, 64, 0.5, 4)).solution);
            }
        }
    }
    std::ostringstream detail;
    detail << runs << " runs across k in {min-1, min, min+1}, " << wrong << " wrong ("
           << timer.seconds() << " s)";
    report("pvc-triple", wrong == 0, detail.str());
}

void criterion_reduction_soundness(const Corpus& corpus) {
    Timer timer;
    std::uint64_t violations = 0;
    for (std::size_t i = 0; i < corpus.graphs.size(); ++i) {
        const BaseGraph& g = corpus.graphs[i];
        SearchNode node = init_root(g);
        reduce_degree_rules_to_fixpoint(node, g);
        std::vector<std::pair<Vertex, Vertex>> rest;
        for (Vertex v = 0; v < g.num_vertices; ++v) {
            if (!node.alive(v)) continue;
            for (Vertex u : g.neighbors_of(v))
                if (u > v && node.alive(u)) rest.emplace_back(v, u);
        }
        std::uint32_t reduced = brute_force_mvc_size(g.num_vertices, rest);
        if (corpus.oracle_sizes[i] != node.cover_count + reduced) ++violations;
    }
    std::ostringstream detail;
    detail << corpus.graphs.size() << " graphs, " << violations << " violations ("
           << timer.seconds() << " s)";
    report("reduction-soundness", violations == 0, detail.str());
}

void criterion_certificates() {
    std::ostringstream detail;
    detail << g_cover_checks << " covers verified, " << g_cover_failures << " invalid";
    report("certificate-validity", g_cover_failures == 0, detail.str());
}

void criterion_termination_liveness() {
    Timer timer;
    constexpr std::array<unsigned, 5> kWorkers{1, 2, 3, 4, 8};
    constexpr std::array<std::size_t, 5> kCapacities{1, 2, 3, 8, 64};
    constexpr std::array<double, 4> kFractions{0.25, 0.5, 0.75, 1.0};

    std::uint64_t failures = 0;
    for (std::uint64_t i = 0; i < 1000; ++i) {
        BaseGraph g = tu::random_gnp(6 + i % 9, 0.15 + 0.08 * static_cast<double>(i % 8),
                                     9000 + i);
        SchedulerConfig config =
            make_config(kWorkers[i % kWorkers.size()], kCapacities[i % kCapacities.size()],
                        kFractions[i % kFractions.size()], 1);
        if (i % 4 == 3) {
            std::uint32_t k = std::max<std::uint32_t>(1, greedy_approx(g).size);
            ParallelRun run = run_hybrid(g, SolveMode::pvc(k), config);
            bool ended_by_flag = run.solution.feasible;
            bool drained = run.worklist.added == run.worklist.removed;
            if (run.status != RunStatus::Complete || (!ended_by_flag && !drained)) ++failures;
            if (run.worklist.max_size > config.worklist_capacity) ++failures;
        } else {
            ParallelRun run = run_hybrid(g, SolveMode::mvc(), config);
            if (run.status != RunStatus::Complete) ++failures;
            if (run.worklist.added != run.worklist.removed || run.worklist.current_size != 0)
                ++failures;
            if (run.worklist.max_size > config.worklist_capacity) ++failures;
        }
    }

    // Found-flag injection: waiting consumers must all come back done.
    bool injection_ok = true;
    {
        GlobalWorklist wl(4, 2, 8);
        std::atomic<bool> cancel{false};
        std::atomic<unsigned> done{0};
        std::vector<std::thread> threads;
        for (int i = 0; i < 4; ++i) {
            threads.emplace_back([&] {
                SearchNode out;
                if (wl.remove_or_done(out, cancel, std::chrono::microseconds(20)) ==
                    GlobalWorklist::Outcome::Done)
                    ++done;
            });
        }
        std::this_thread::sleep_for(std::chrono::milliseconds(2));
        cancel.store(true);
        for (auto& t : threads) t.join();
        injection_ok = done.load() == 4;
    }

    std::ostringstream detail;
    detail << "1000 randomized hybrid runs, " << failures << " failures, found-flag injection "
           << (injection_ok ? "ok" : "stuck") << " (" << timer.seconds() << " s)";
    report("termination-liveness", failures == 0 && injection_ok, detail.str());
}

double median(std::vector<double> xs) {
    std::sort(xs.begin(), xs.end());
    return xs[xs.size() / 2];
}

struct HardInstanceResults {
    double hybrid8_max_ratio = 0.0;
    double stackonly_best_max_ratio = 0.0;
    unsigned stackonly_best_depth = 0;
    double hybrid8_wall = 0.0;
    double hybrid1_wall = 0.0;
    double stackonly_best_wall = 0.0;
    std::uint32_t size = 0;
    bool sizes_agree = true;
};

HardInstanceResults run_hard_instance() {
    HardInstanceResults results;
    BaseGraph g = complement(tu::random_gnp(150, 0.9, kHardInstanceSeed));

    constexpr int kRounds = 5;
    std::uint32_t expected = 0;
    bool have_expected = false;
    auto note_size = [&](const Solution& sol) {
        check_certificate(g, sol);
        if (!have_expected) {
            expected = sol.size;
            have_expected = true;
        } else if (sol.size != expected) {
            results.sizes_agree = false;
        }
    };

    std::vector<double> hybrid8_ratio, hybrid8_wall, hybrid1_wall;
    for (int r = 0; r < kRounds; ++r) {
        ParallelRun run = run_hybrid(g, SolveMode::mvc(), make_config(8, 4096, 0.5, 1));
        LoadReport load = collect_metrics(run.workers);
        hybrid8_ratio.push_back(load.max_load_ratio);
        hybrid8_wall.push_back(run.wall_ms);
        note_size(run.solution);
    }
    for (int r = 0; r < kRounds; ++r) {
        ParallelRun run = run_hybrid(g, SolveMode::mvc(), make_config(1, 4096, 0.5, 1));
        hybrid1_wall.push_back(run.wall_ms);
        note_size(run.solution);
    }

    results.hybrid8_max_ratio = median(hybrid8_ratio);
    results.hybrid8_wall = median(hybrid8_wall);
    results.hybrid1_wall = median(hybrid1_wall);

    double best_ratio = 0.0;
    double best_wall = 0.0;
    unsigned best_depth = 0;
    for (unsigned depth : {4u, 8u, 12u}) {
        std::vector<double> ratios, walls;
        for (int r = 0; r < kRounds; ++r) {
            ParallelRun run = run_stackonly(g, SolveMode::mvc(), make_config(8, 64, 0.5, depth));
            LoadReport load = collect_metrics(run.workers);
            ratios.push_back(load.max_load_ratio);
            walls.push_back(run.wall_ms);
            note_size(run.solution);
        }
        double med_ratio = median(ratios);
        double med_wall = median(walls);
        if (best_depth == 0 || med_ratio < best_ratio) {
            best_ratio = med_ratio;
            best_depth = depth;
        }
        if (best_wall == 0.0 || med_wall < best_wall) best_wall = med_wall;
    }
    results.stackonly_best_max_ratio = best_ratio;
    results.stackonly_best_depth = best_depth;
    results.stackonly_best_wall = best_wall;
    results.size = expected;
    return results;
}

void criterion_load_balance(const HardInstanceResults& hard) {
    std::ostringstream detail;
    detail << "hybrid8 max ratio " << hard.hybrid8_max_ratio << " vs stackonly(best depth "
           << hard.stackonly_best_depth << ") " << hard.stackonly_best_max_ratio
           << ", bound 2.0";
    bool pass = hard.hybrid8_max_ratio < hard.stackonly_best_max_ratio &&
                hard.hybrid8_max_ratio <= 2.0 && hard.sizes_agree;
    report("load-balance-direction", pass, detail.str());
}

void criterion_relative_performance(const HardInstanceResults& hard) {
    double vs_stackonly = hard.hybrid8_wall / hard.stackonly_best_wall;
    double scaling = hard.hybrid1_wall / hard.hybrid8_wall;
    std::ostringstream detail;
    detail << "hybrid8 " << hard.hybrid8_wall << " ms, stackonly8 " << hard.stackonly_best_wall
           << " ms (ratio " << vs_stackonly << " <= 1.1), hybrid1/hybrid8 " << scaling
           << "x (>= 2)";
    report("relative-performance", vs_stackonly <= 1.1 && scaling >= 2.0 && hard.sizes_agree,
           detail.str());
}

void criterion_stopping_vectors() {
    bool ok = true;

    SearchNode probe;
    probe.degrees = {0};
    probe.cover_count = 3;
    probe.alive_edge_count = 0;
    ok &= should_prune(probe, SolveMode::mvc(), 3);
    probe.cover_count = 2;
    probe.alive_edge_count = 5;
    ok &= should_prune(probe, SolveMode::mvc(), 5);
    probe.cover_count = 1;
    probe.alive_edge_count = 1;
    ok &= !should_prune(probe, SolveMode::pvc(2), 0);

    BaseGraph star = tu::star_graph(5);
    SearchNode node = init_root(star);
    ok &= apply_high_degree(node, star, SolveMode::mvc(), 2);
    ok &= node.degrees[0] == kRemoved && node.alive_edge_count == 0;

    BaseGraph c5 = tu::cycle_graph(5);
    SearchNode c5node = init_root(c5);
    ok &= !apply_high_degree(c5node, c5, SolveMode::mvc(), 3);

    BaseGraph p4 = tu::path_graph(4);
    SearchNode p4node = init_root(p4);
    ok &= !apply_high_degree(p4node, p4, SolveMode::mvc(), 4);  // limit 3 >= max degree

    report("stopping-condition-vectors", ok, "6 fixed evaluations");
}

void criterion_phat300() {
    std::vector<std::string> candidates;
    if (const char* env = std::getenv("VCSOLVE_PHAT300")) candidates.push_back(env);
    candidates.push_back("tests/data/p_hat300-1.clq");
    candidates.push_back("data/p_hat300-1.clq");
    candidates.push_back("p_hat300-1.clq");

    std::string found;
    for (const auto& path : candidates) {
        if (std::filesystem::exists(path)) {
            found = path;
            break;
        }
    }
    if (found.empty()) {
        report_skip("phat300-1", "instance file not available");
        return;
    }

    Timer timer;
    std::ifstream in(found);
    BaseGraph g = complement(parse_dimacs(in));
    bool shape_ok = g.num_vertices == 300 && g.num_edges == 33917;

    SolveLimits limits;
    limits.timeout_s = 600.0;
    SchedulerConfig hybrid_config = make_config(8, 4096, 0.5, 1);
    hybrid_config.limits = limits;
    SchedulerConfig stack_config = make_config(8, 64, 0.5, 8);
    stack_config.limits = limits;

    ParallelRun hybrid = run_hybrid(g, SolveMode::mvc(), hybrid_config);
    ParallelRun stackonly = run_stackonly(g, SolveMode::mvc(), stack_config);
    SeqRun seq = solve_mvc_seq(g, limits);

    bool complete = hybrid.status == RunStatus::Complete &&
                    stackonly.status == RunStatus::Complete && seq.status == RunStatus::Complete;
    bool agree = hybrid.solution.size == stackonly.solution.size &&
                 hybrid.solution.size == seq.solution.size;
    bool certs = check_certificate(g, hybrid.solution) &&
                 check_certificate(g, stackonly.solution) && check_certificate(g, seq.solution);

    std::ostringstream detail;
    detail << found << ": n=" << g.num_vertices << " m=" << g.num_edges << ", size "
           << hybrid.solution.size << " (" << timer.seconds() << " s)";
    report("phat300-1", shape_ok && complete && agree && certs, detail.str());
}

}  // namespace

int main() {
    Timer total;
    std::cout << "building corpus (named + 500 random graphs, oracle-sized)..." << std::endl;
    Corpus corpus = build_corpus();

    criterion_oracle_equivalence(corpus);
    criterion_pvc_triple(corpus);
    criterion_reduction_soundness(corpus);
    criterion_termination_liveness();

    std::cout << "running the hard instance (complement of G(150, 0.9))..." << std::endl;
    HardInstanceResults hard = run_hard_instance();
    criterion_load_balance(hard);
    criterion_relative_performance(hard);

    criterion_stopping_vectors();
    criterion_certificates();
    criterion_phat300();

    std::cout << (g_failures == 0 ? "ALL CRITERIA PASSED" : "CRITERIA FAILED") << " ("
              << total.seconds() << " s total)" << std::endl;
    return g_failures == 0 ? 0 : 1;
}
