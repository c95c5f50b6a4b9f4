"""Serialization round trips, with networkx as the graph6 reference."""

import networkx as nx
import pytest
from hypothesis import given, settings

from indcomplex.complexes import SimplicialComplex, independence_complex
from indcomplex.formats import (FormatError, complex_from_facet_lines,
                                complex_to_facet_lines,
                                graph_from_adjacency_text, graph_from_graph6,
                                graph_to_adjacency_text, graph_to_graph6)
from indcomplex.graphs import Graph, cycle_graph

from conftest import graphs


def _nx_graph6(g: Graph) -> str:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return nx.to_graph6_bytes(h, header=False).decode().strip()


class TestGraph6:
    def test_known_encodings(self):
        assert graph_to_graph6(Graph(0)) == "?"
        assert graph_to_graph6(Graph(1)) == "@"
        assert graph_to_graph6(Graph(2, [(0, 1)])) == "A_"
        assert graph_to_graph6(cycle_graph(5)) == "Dhc"

    def test_known_decodings(self):
        assert graph_from_graph6("Dhc") == cycle_graph(5)
        assert graph_from_graph6("?").n == 0
        assert graph_from_graph6(">>graph6<<A_").edges() == [(0, 1)]

    @settings(max_examples=150, deadline=None)
    @given(graphs())
    def test_encoding_matches_networkx(self, g):
        assert graph_to_graph6(g) == _nx_graph6(g)

    @settings(max_examples=150, deadline=None)
    @given(graphs())
    def test_round_trip(self, g):
        assert graph_from_graph6(graph_to_graph6(g)) == g

    def test_errors(self):
        with pytest.raises(FormatError):
            graph_from_graph6("")
        with pytest.raises(FormatError):
            graph_from_graph6("D")  # truncated body
        with pytest.raises(FormatError):
            graph_from_graph6(chr(63 + 33))  # 33 vertices, over the cap
        err = None
        try:
            graph_from_graph6("Dhcc")
        except FormatError as exc:
            err = exc
        assert err is not None and err.column == 4


class TestAdjacencyText:
    def test_serialize(self):
        assert graph_to_adjacency_text(cycle_graph(3)) == "3; 0 1; 0 2; 1 2"
        assert graph_to_adjacency_text(Graph(2)) == "2"

    def test_parse(self):
        g = graph_from_adjacency_text("4; 0 1; 2 3")
        assert g.n == 4 and sorted(g.edges()) == [(0, 1), (2, 3)]
        assert graph_from_adjacency_text("0").n == 0

    @settings(max_examples=100, deadline=None)
    @given(graphs())
    def test_round_trip(self, g):
        assert graph_from_adjacency_text(graph_to_adjacency_text(g)) == g

    def test_error_positions(self):
        with pytest.raises(FormatError, match="vertex count"):
            graph_from_adjacency_text("x; 0 1")
        err = None
        try:
            graph_from_adjacency_text("3; 0 1; 9 9")
        except FormatError as exc:
            err = exc
        assert err is not None and err.column == 8  # start of the bad field
        with pytest.raises(FormatError, match="expected 'u v'"):
            graph_from_adjacency_text("3; 0 1 2")


class TestFacetLines:
    def test_serialize_two_disjoint_edges(self):
        k = independence_complex(cycle_graph(4))
        assert complex_to_facet_lines(k) == "facet: 0 2\nfacet: 1 3"

    def test_parse(self):
        k = complex_from_facet_lines("facet: 0 1\nfacet: 2\n")
        assert frozenset({0, 1}) in k
        assert k.dim == 1

    def test_round_trip(self):
        k = SimplicialComplex.from_facets([{0, 1, 2}, {2, 3}, {4}])
        assert complex_from_facet_lines(complex_to_facet_lines(k)) == k

    def test_empty_input_is_void(self):
        assert complex_from_facet_lines("").is_void

    def test_errors_carry_line_numbers(self):
        err = None
        try:
            complex_from_facet_lines("facet: 0\nnot a facet")
        except FormatError as exc:
            err = exc
        assert err is not None and err.line == 2
        with pytest.raises(FormatError, match="non-integer"):
            complex_from_facet_lines("facet: a b")
