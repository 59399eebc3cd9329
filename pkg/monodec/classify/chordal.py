"""Complement chordality of edge ideals, an independent check of linear resolutions.

A squarefree ideal generated in degree 2 is the edge ideal of a graph G on the
variables; it has a linear resolution exactly when the complement of G is chordal.
"""

import logging

import networkx as nx

from monodec.core.ideal import MonomialIdeal, require_squarefree
from monodec.errors import DegreeError

LOGGER = logging.getLogger(__name__)


def edge_graph(ideal: MonomialIdeal) -> nx.Graph:
    """The graph on all variables whose edges are the generators of an edge ideal."""
    require_squarefree(ideal, "edge_graph")
    if ideal.degrees != (2,):
        raise DegreeError(f"An edge ideal is generated in degree 2, got degrees {ideal.degrees}")
    graph = nx.Graph()
    graph.add_nodes_from(range(ideal.n))
    graph.add_edges_from(tuple(sorted(g.support)) for g in ideal.gens)
    return graph


def lex_bfs(graph: nx.Graph) -> list:
    """Lexicographic breadth-first search by partition refinement.

    Ties are broken by node order, so the result is deterministic.
    """
    order = []
    partition = [sorted(graph.nodes)] if graph else []
    while partition:
        head = partition[0]
        v = head.pop(0)
        if not head:
            partition.pop(0)
        order.append(v)
        neighbours = set(graph[v])
        refined = []
        for part in partition:
            inside = [u for u in part if u in neighbours]
            outside = [u for u in part if u not in neighbours]
            refined.extend(p for p in (inside, outside) if p)
        partition = refined
    return order


def is_perfect_elimination_ordering(graph: nx.Graph, order: list) -> bool:
    """Each vertex's later neighbours form a clique.

    It is enough to check them against the earliest of them, the parent.
    """
    position = {v: i for i, v in enumerate(order)}
    for v in order:
        later = [u for u in graph[v] if position[u] > position[v]]
        if not later:
            continue
        parent = min(later, key=position.__getitem__)
        if any(u != parent and not graph.has_edge(parent, u) for u in later):
            return False
    return True


def is_chordal_graph(graph: nx.Graph) -> bool:
    """Chordal iff the reverse of a LexBFS order is a perfect elimination ordering."""
    return is_perfect_elimination_ordering(graph, list(reversed(lex_bfs(graph))))


def is_chordal_complement_oracle(ideal: MonomialIdeal) -> bool:
    complement = nx.complement(edge_graph(ideal))
    chordal = is_chordal_graph(complement)
    LOGGER.debug(f"Complement of the graph of {ideal} chordal: {chordal}")
    return chordal
