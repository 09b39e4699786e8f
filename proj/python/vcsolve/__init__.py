"""Exact Minimum Vertex Cover / Parameterized Vertex Cover solver.

Branch-and-reduce search over degree-array search nodes, with three
execution strategies: sequential, stack-only sub-tree distribution, and a
hybrid of per-worker stacks with a threshold-gated global worklist.
"""

from vcsolve._core import (
    BaseGraph,
    ParseError,
    brute_force_mvc,
    complement,
    greedy_approx,
    make_graph,
    parse_dimacs,
    parse_edge_list,
    solve_mvc,
    solve_pvc,
    write_edge_list,
)

__all__ = [
    "BaseGraph",
    "ParseError",
    "brute_force_mvc",
    "complement",
    "greedy_approx",
    "load_graph",
    "make_graph",
    "parse_dimacs",
    "parse_edge_list",
    "solve_mvc",
    "solve_pvc",
    "write_edge_list",
]


def load_graph(path, fmt=None, complement_input=False):
    """Load a graph file as a BaseGraph.

    ``fmt`` is "edgelist" or "dimacs"; when omitted it is sniffed from the
    extension (.clq/.col/.dimacs mean DIMACS). Set ``complement_input`` to
    solve on the edge complement, as is usual for DIMACS clique instances.
    """
    if fmt is None:
        lower = str(path).lower()
        fmt = "dimacs" if lower.endswith((".clq", ".col", ".dimacs")) else "edgelist"
    with open(path, "r", encoding="utf-8") as handle:
        text = handle.read()
    graph = parse_dimacs(text) if fmt == "dimacs" else parse_edge_list(text)
    return complement(graph) if complement_input else graph
