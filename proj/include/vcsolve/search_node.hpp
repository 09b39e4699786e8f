#pragma once

#include <cassert>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "vcsolve/graph.hpp"

namespace vcsolve {

/// Sentinel degree marking a vertex that has been deleted into the cover.
inline constexpr std::uint32_t kRemoved = std::numeric_limits<std::uint32_t>::max();

/// One search-tree node: the pair (G, S) encoded as a degree array plus
/// counters. Self-contained, so it can migrate between workers; combined
/// with the immutable BaseGraph it fully describes the intermediate graph
/// and the partial cover.
///
/// A SearchNode is owned by exactly one worker at a time; ownership moves
/// through a LocalStack (same worker) or the GlobalWorklist (between
/// workers). Copy construction is the clone operation.
struct SearchNode {
    std::vector<std::uint32_t> degrees;  // degree if alive, kRemoved if in S
    std::uint32_t cover_count = 0;       // |S|
    std::uint64_t alive_edge_count = 0;  // |E(G)|

    bool alive(Vertex v) const { return degrees[v] != kRemoved; }
    std::uint32_t num_vertices() const { return static_cast<std::uint32_t>(degrees.size()); }
};

SearchNode init_root(const BaseGraph& g);

/// G = G - {v}; S = S u {v}. Pre: v alive.
void remove_vertex_into_cover(SearchNode& node, const BaseGraph& g, Vertex v);

/// G = G - N(v); S = S u N(v). Every alive base-neighbor of v is removed
/// sequentially; v itself stays alive at degree 0. Pre: v alive.
void remove_neighbors_into_cover(SearchNode& node, const BaseGraph& g, Vertex v);

/// Smallest-id alive vertex of maximum degree; degree 0 is a valid answer
/// (it signals a found cover). nullopt only when no vertex is alive.
std::optional<Vertex> max_degree_vertex(const SearchNode& node);

/// The sentinel set S, ascending internal ids.
std::vector<Vertex> cover_vertices(const SearchNode& node);

/// Recomputes degrees, counters, and edge coverage from the BaseGraph and
/// checks them against the node. Test/debug aid.
bool consistent_with(const SearchNode& node, const BaseGraph& g);

/// FNV-1a over the degree array and counters; used for visit traces.
std::uint64_t node_fingerprint(const SearchNode& node);

/// Fixed-capacity per-worker stack of SearchNodes. The bound is the greedy
/// cover size (MVC) or k (PVC): no traversal path holds more deferred
/// branches than that, so the capacity is provisioned up front.
class LocalStack {
public:
    explicit LocalStack(std::size_t bound) : bound_(bound) { entries_.reserve(bound); }

    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }
    std::size_t bound() const { return bound_; }
    std::size_t high_water() const { return high_water_; }

    void push(SearchNode&& node) {
        assert(entries_.size() < bound_ && "local stack exceeded its provisioned depth");
        entries_.push_back(std::move(node));
        if (entries_.size() > high_water_) high_water_ = entries_.size();
    }

    SearchNode pop() {
        assert(!entries_.empty());
        SearchNode n = std::move(entries_.back());
        entries_.pop_back();
        return n;
    }

private:
    std::vector<SearchNode> entries_;
    std::size_t bound_;
    std::size_t high_water_ = 0;
};

}  // namespace vcsolve
