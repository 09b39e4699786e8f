#include "vcsolve/bounds.hpp"

#include "vcsolve/reductions.hpp"

namespace vcsolve {

GreedyResult greedy_approx(const BaseGraph& g) {
    SearchNode node = init_root(g);
    while (true) {
        reduce_degree_rules_to_fixpoint(node, g);
        if (node.alive_edge_count == 0) break;
        Vertex v = *max_degree_vertex(node);
        remove_vertex_into_cover(node, g, v);
    }
    GreedyResult result;
    result.cover = cover_vertices(node);
    result.size = node.cover_count;
    return result;
}

bool should_prune(const SearchNode& node, SolveMode mode, std::uint32_t best) {
    if (mode.is_pvc()) {
        if (node.cover_count > mode.k) return true;
        std::uint64_t slack = mode.k - node.cover_count;
        return node.alive_edge_count > slack * slack;
    }
    if (node.cover_count >= best) return true;
    std::uint64_t slack = best - node.cover_count - 1;
    return node.alive_edge_count > slack * slack;
}

bool verify_cover(const BaseGraph& g, std::span<const Vertex> cover) {
    std::vector<char> in_cover(g.num_vertices, 0);
    for (Vertex v : cover) {
        if (v >= g.num_vertices) return false;
        in_cover[v] = 1;
    }
    for (Vertex v = 0; v < g.num_vertices; ++v) {
        if (in_cover[v]) continue;
        for (Vertex u : g.neighbors_of(v)) {
            if (u > v && !in_cover[u]) return false;
        }
    }
    return true;
}

}  // namespace vcsolve
