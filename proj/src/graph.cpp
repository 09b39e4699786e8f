#include "vcsolve/graph.hpp"

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <cstdlib>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace vcsolve {

bool BaseGraph::has_edge(Vertex u, Vertex v) const {
    if (u == v) return false;
    // Search the shorter slice.
    if (degree(u) > degree(v)) std::swap(u, v);
    auto slice = neighbors_of(u);
    return std::binary_search(slice.begin(), slice.end(), v);
}

BaseGraph make_graph(std::uint32_t num_vertices,
                     std::span<const std::pair<Vertex, Vertex>> edges,
                     std::uint32_t id_base) {
    std::vector<std::pair<Vertex, Vertex>> cleaned;
    cleaned.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u == v) continue;  // self-loop
        if (u > v) std::swap(u, v);
        cleaned.emplace_back(u, v);
    }
    std::sort(cleaned.begin(), cleaned.end());
    cleaned.erase(std::unique(cleaned.begin(), cleaned.end()), cleaned.end());

    BaseGraph g;
    g.num_vertices = num_vertices;
    g.num_edges = cleaned.size();
    g.id_base = id_base;
    g.offsets.assign(num_vertices + 1, 0);
    for (auto [u, v] : cleaned) {
        ++g.offsets[u + 1];
        ++g.offsets[v + 1];
    }
    for (std::uint32_t v = 0; v < num_vertices; ++v) g.offsets[v + 1] += g.offsets[v];
    g.neighbors.resize(2 * g.num_edges);
    std::vector<std::uint64_t> cursor(g.offsets.begin(), g.offsets.end() - 1);
    for (auto [u, v] : cleaned) {
        g.neighbors[cursor[u]++] = v;
        g.neighbors[cursor[v]++] = u;
    }
    // Slices are sorted already: cleaned is sorted by (u, v) so each u's
    // forward neighbors arrive ascending, and each v's back neighbors too.
    return g;
}

namespace {

bool is_comment_or_blank(const std::string& line) {
    for (char c : line) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '#' || c == '%';
    }
    return true;  // blank
}

std::uint64_t parse_id(const std::string& token, std::size_t line_no) {
    if (token.empty()) throw ParseError("empty vertex id", line_no);
    for (char c : token) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError("malformed vertex id '" + token + "'", line_no);
    }
    errno = 0;
    std::uint64_t value = std::strtoull(token.c_str(), nullptr, 10);
    if (errno != 0 || value > std::numeric_limits<std::uint32_t>::max() - 1)
        throw ParseError("vertex id out of range '" + token + "'", line_no);
    return value;
}

}  // namespace

BaseGraph parse_edge_list(std::istream& in) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::string line;
    std::size_t line_no = 0;
    std::uint64_t min_id = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t max_id = 0;
    bool any_id = false;

    while (std::getline(in, line)) {
        ++line_no;
        if (is_comment_or_blank(line)) continue;
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a >> b)) throw ParseError("expected 'u v' pair", line_no);
        if (ls >> extra) throw ParseError("trailing token '" + extra + "'", line_no);
        std::uint64_t u = parse_id(a, line_no);
        std::uint64_t v = parse_id(b, line_no);
        any_id = true;
        min_id = std::min(min_id, std::min(u, v));
        max_id = std::max(max_id, std::max(u, v));
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }

    if (!any_id) return make_graph(0, {}, 0);

    // 1-based iff no id 0 appears.
    std::uint32_t base = min_id >= 1 ? 1 : 0;
    for (auto& [u, v] : edges) {
        u -= base;
        v -= base;
    }
    std::uint32_t n = static_cast<std::uint32_t>(max_id - base + 1);
    return make_graph(n, edges, base);
}

BaseGraph parse_dimacs(std::istream& in) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::string line;
    std::size_t line_no = 0;
    bool have_problem = false;
    std::uint64_t n = 0;

    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;  // blank
        if (tag == "c") continue;
        if (tag == "p") {
            if (have_problem) throw ParseError("duplicate 'p' line", line_no);
            std::string format;
            std::uint64_t m = 0;
            if (!(ls >> format >> n >> m))
                throw ParseError("malformed 'p' line", line_no);
            if (format != "edge" && format != "edges" && format != "col")
                throw ParseError("unsupported format '" + format + "'", line_no);
            if (n > std::numeric_limits<std::uint32_t>::max() - 1)
                throw ParseError("vertex count out of range", line_no);
            have_problem = true;
            edges.reserve(m);
            continue;
        }
        if (tag == "e") {
            if (!have_problem) throw ParseError("'e' line before 'p' line", line_no);
            std::string a, b;
            if (!(ls >> a >> b)) throw ParseError("malformed 'e' line", line_no);
            std::uint64_t u = parse_id(a, line_no);
            std::uint64_t v = parse_id(b, line_no);
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError("edge endpoint outside 1.." + std::to_string(n), line_no);
            edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
            continue;
        }
        throw ParseError("unrecognized line type '" + tag + "'", line_no);
    }

    if (!have_problem) throw ParseError("missing 'p edge N M' line", line_no == 0 ? 1 : line_no);
    return make_graph(static_cast<std::uint32_t>(n), edges, 1);
}

BaseGraph complement(const BaseGraph& g) {
    BaseGraph out;
    out.num_vertices = g.num_vertices;
    out.id_base = g.id_base;
    std::uint64_t n = g.num_vertices;
    std::uint64_t total_pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
    out.num_edges = total_pairs - g.num_edges;
    out.offsets.assign(g.num_vertices + 1, 0);
    out.neighbors.resize(2 * out.num_edges);

    std::uint64_t pos = 0;
    for (Vertex v = 0; v < g.num_vertices; ++v) {
        out.offsets[v] = pos;
        auto slice = g.neighbors_of(v);
        std::size_t i = 0;
        for (Vertex u = 0; u < g.num_vertices; ++u) {
            if (u == v) continue;
            while (i < slice.size() && slice[i] < u) ++i;
            if (i < slice.size() && slice[i] == u) continue;
            out.neighbors[pos++] = u;
        }
    }
    out.offsets[g.num_vertices] = pos;
    return out;
}

void write_edge_list(const BaseGraph& g, std::ostream& out) {
    for (Vertex v = 0; v < g.num_vertices; ++v) {
        for (Vertex u : g.neighbors_of(v)) {
            if (v < u) out << (v + g.id_base) << ' ' << (u + g.id_base) << '\n';
        }
    }
}

bool check_graph_invariants(const BaseGraph& g) {
    if (g.offsets.size() != static_cast<std::size_t>(g.num_vertices) + 1) return false;
    if (g.offsets.front() != 0) return false;
    if (g.offsets.back() != 2 * g.num_edges) return false;
    if (g.neighbors.size() != 2 * g.num_edges) return false;
    for (Vertex v = 0; v < g.num_vertices; ++v) {
        if (g.offsets[v] > g.offsets[v + 1]) return false;
        auto slice = g.neighbors_of(v);
        for (std::size_t i = 0; i < slice.size(); ++i) {
            if (slice[i] >= g.num_vertices) return false;
            if (slice[i] == v) return false;               // self-loop
            if (i > 0 && slice[i - 1] >= slice[i]) return false;  // sorted, duplicate-free
            if (!g.has_edge(slice[i], v)) return false;    // symmetry
        }
    }
    return true;
}

}  // namespace vcsolve
