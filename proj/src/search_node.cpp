#include "vcsolve/search_node.hpp"

#include <algorithm>

namespace vcsolve {

SearchNode init_root(const BaseGraph& g) {
    SearchNode node;
    node.degrees.resize(g.num_vertices);
    for (Vertex v = 0; v < g.num_vertices; ++v) node.degrees[v] = g.degree(v);
    node.cover_count = 0;
    node.alive_edge_count = g.num_edges;
    return node;
}

void remove_vertex_into_cover(SearchNode& node, const BaseGraph& g, Vertex v) {
    assert(node.alive(v) && "vertex already removed");
    std::uint32_t former_degree = node.degrees[v];
    node.degrees[v] = kRemoved;
    ++node.cover_count;
    for (Vertex u : g.neighbors_of(v)) {
        if (node.degrees[u] != kRemoved) --node.degrees[u];
    }
    node.alive_edge_count -= former_degree;
}

void remove_neighbors_into_cover(SearchNode& node, const BaseGraph& g, Vertex v) {
    assert(node.alive(v) && "vertex already removed");
    for (Vertex u : g.neighbors_of(v)) {
        if (node.degrees[u] != kRemoved) remove_vertex_into_cover(node, g, u);
    }
}

std::optional<Vertex> max_degree_vertex(const SearchNode& node) {
    std::optional<Vertex> best;
    std::uint32_t best_degree = 0;
    for (Vertex v = 0; v < node.num_vertices(); ++v) {
        std::uint32_t d = node.degrees[v];
        if (d == kRemoved) continue;
        if (!best || d > best_degree) {
            best = v;
            best_degree = d;
        }
    }
    return best;
}

std::vector<Vertex> cover_vertices(const SearchNode& node) {
    std::vector<Vertex> cover;
    cover.reserve(node.cover_count);
    for (Vertex v = 0; v < node.num_vertices(); ++v) {
        if (node.degrees[v] == kRemoved) cover.push_back(v);
    }
    return cover;
}

bool consistent_with(const SearchNode& node, const BaseGraph& g) {
    if (node.num_vertices() != g.num_vertices) return false;
    std::uint32_t removed = 0;
    std::uint64_t degree_sum = 0;
    std::uint64_t alive_edges = 0;
    for (Vertex v = 0; v < g.num_vertices; ++v) {
        if (!node.alive(v)) {
            ++removed;
            continue;
        }
        std::uint32_t expected = 0;
        for (Vertex u : g.neighbors_of(v)) {
            if (node.alive(u)) {
                ++expected;
                if (u > v) ++alive_edges;
            }
        }
        if (node.degrees[v] != expected) return false;
        degree_sum += expected;
    }
    if (removed != node.cover_count) return false;
    if (alive_edges != node.alive_edge_count) return false;
    if (degree_sum != 2 * node.alive_edge_count) return false;
    // Coverage: every base edge has an endpoint in S or is counted alive.
    // The alive-edge recount above establishes exactly that partition.
    return true;
}

std::uint64_t node_fingerprint(const SearchNode& node) {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t x) {
        for (int i = 0; i < 8; ++i) {
            h ^= (x >> (8 * i)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    for (std::uint32_t d : node.degrees) mix(d);
    mix(node.cover_count);
    mix(node.alive_edge_count);
    return h;
}

}  // namespace vcsolve
