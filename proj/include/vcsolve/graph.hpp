#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace vcsolve {

using Vertex = std::uint32_t;

/// Thrown by the parsers; carries the 1-based line number of the offending input.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t line)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Immutable compressed adjacency representation of the input graph.
/// Shared read-only by all workers after construction.
///
/// offsets[v]..offsets[v+1] delimits v's neighbor slice in `neighbors`;
/// every slice is sorted ascending and duplicate-free, with no self-loops,
/// and u appears in v's slice iff v appears in u's.
struct BaseGraph {
    std::uint32_t num_vertices = 0;
    std::uint64_t num_edges = 0;  // undirected edges counted once
    std::vector<std::uint64_t> offsets;
    std::vector<Vertex> neighbors;
    // Original id of internal vertex 0 (0 or 1, set by id autodetection).
    std::uint32_t id_base = 0;

    std::span<const Vertex> neighbors_of(Vertex v) const {
        return {neighbors.data() + offsets[v], neighbors.data() + offsets[v + 1]};
    }

    std::uint32_t degree(Vertex v) const {
        return static_cast<std::uint32_t>(offsets[v + 1] - offsets[v]);
    }

    bool has_edge(Vertex u, Vertex v) const;

    bool operator==(const BaseGraph&) const = default;
};

/// Builds a simple undirected graph from an edge list. Duplicate pairs and
/// self-loops are dropped rather than rejected; real datasets are dirty.
BaseGraph make_graph(std::uint32_t num_vertices,
                     std::span<const std::pair<Vertex, Vertex>> edges,
                     std::uint32_t id_base = 0);

/// Whitespace-separated "u v" pairs, one per line; '#' and '%' start comments.
/// 0- or 1-based ids autodetected by the minimum id seen. Isolated trailing
/// vertices up to the maximum id are retained.
BaseGraph parse_edge_list(std::istream& in);

/// DIMACS ascii clique format: "c" comments, one "p edge N M" line, "e u v"
/// lines with 1-based ids. Ids are shifted to 0-based internally.
BaseGraph parse_dimacs(std::istream& in);

/// Edge uv (u != v) present in the output iff absent in the input.
BaseGraph complement(const BaseGraph& g);

/// Writes one "u v" line per edge (u < v), in original ids.
void write_edge_list(const BaseGraph& g, std::ostream& out);

/// Recomputes all structural invariants from scratch. Test/debug aid.
bool check_graph_invariants(const BaseGraph& g);

}  // namespace vcsolve
