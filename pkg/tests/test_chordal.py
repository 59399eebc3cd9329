"""Tests for the complement-chordality oracle."""

import networkx as nx
import pytest

from monodec.classify import is_chordal_complement_oracle
from monodec.classify.chordal import (
    edge_graph,
    is_chordal_graph,
    is_perfect_elimination_ordering,
    lex_bfs,
)
from monodec.errors import DegreeError, NotSquarefreeError
from monodec.homology import has_linear_resolution
from tests.conftest import ideal_of

CYCLE_C5 = "x1*x2, x2*x3, x3*x4, x4*x5, x1*x5"


class TestLexBfs:
    """Tests for the search order and the elimination check."""

    def test_path_order(self):
        assert lex_bfs(nx.path_graph(4)) == [0, 1, 2, 3]

    def test_visits_every_node(self):
        graph = nx.petersen_graph()
        assert sorted(lex_bfs(graph)) == list(range(10))

    def test_perfect_elimination(self):
        graph = nx.path_graph(3)
        assert is_perfect_elimination_ordering(graph, [0, 2, 1])
        assert not is_perfect_elimination_ordering(graph, [1, 0, 2])

    def test_agrees_with_networkx(self):
        for graph in nx.graph_atlas_g()[1:120]:
            assert is_chordal_graph(graph) == nx.is_chordal(graph)


class TestOracle:
    """Tests for complement chordality of edge ideals."""

    def test_edge_graph(self, path_ideal):
        graph = edge_graph(path_ideal)
        assert sorted(graph.nodes) == [0, 1, 2, 3]
        assert sorted(graph.edges) == [(0, 1), (1, 2), (2, 3)]

    def test_isolated_variables_stay(self):
        assert edge_graph(ideal_of("x1*x2", 3)).number_of_nodes() == 3

    def test_rejects_other_degrees(self, cubic_ideal, square_path):
        with pytest.raises(DegreeError):
            edge_graph(cubic_ideal)
        with pytest.raises(NotSquarefreeError):
            edge_graph(square_path)

    def test_known_graphs(self, path_ideal, cycle_ideal, colon_ideal):
        assert is_chordal_complement_oracle(path_ideal)
        assert is_chordal_complement_oracle(cycle_ideal)
        assert is_chordal_complement_oracle(colon_ideal)
        assert not is_chordal_complement_oracle(ideal_of(CYCLE_C5))

    def test_matches_linear_resolution(self, path_ideal, cycle_ideal):
        c5 = ideal_of(CYCLE_C5)
        for ideal in (path_ideal, cycle_ideal, c5):
            assert is_chordal_complement_oracle(ideal) == has_linear_resolution(ideal)
