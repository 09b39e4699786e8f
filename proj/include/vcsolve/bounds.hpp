#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "vcsolve/graph.hpp"
#include "vcsolve/search_node.hpp"

namespace vcsolve {

/// Which problem is being solved. PVC carries the parameter k (k >= 1).
struct SolveMode {
    enum class Kind { Mvc, Pvc };

    Kind kind = Kind::Mvc;
    std::uint32_t k = 0;

    static SolveMode mvc() { return {Kind::Mvc, 0}; }
    static SolveMode pvc(std::uint32_t k) { return {Kind::Pvc, k}; }
    bool is_pvc() const { return kind == Kind::Pvc; }
};

struct GreedyResult {
    std::uint32_t size = 0;
    std::vector<Vertex> cover;  // internal ids, ascending
};

/// Greedy upper bound: apply the degree-one and degree-two-triangle rules to
/// a fixpoint, remove the max-degree vertex into the cover, repeat until no
/// edges remain. Initializes the shared best and provisions stack depth.
GreedyResult greedy_approx(const BaseGraph& g);

/// True iff the branch can no longer contain an improving (MVC) or feasible
/// (PVC) solution:
///   MVC:  |S| >= best            or |E(G)| > (best - |S| - 1)^2
///   PVC:  |S| >  k (mode.k)      or |E(G)| > (k - |S|)^2
/// `best` is a snapshot; a stale (larger) value only prunes less.
bool should_prune(const SearchNode& node, SolveMode mode, std::uint32_t best);

inline bool is_cover_found(const SearchNode& node) { return node.alive_edge_count == 0; }

/// Every base edge has an endpoint in `cover` (internal ids).
bool verify_cover(const BaseGraph& g, std::span<const Vertex> cover);

}  // namespace vcsolve
