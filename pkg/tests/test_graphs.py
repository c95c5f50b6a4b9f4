"""Graph structure, surgeries, cycle scans, and reduction-target dispatch."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from indcomplex.graphs import (ADJACENT_DEGREE_TWO_PAIR, BASE_CASE, CUT_VERTEX,
                               DISCONNECTED, DOMINATED_VERTEX, NO_TARGET,
                               Graph, GraphTooLargeError, PathWitness,
                               VertexError, bits, complete_bipartite,
                               complete_graph, cycle_graph,
                               find_dominated_pair, find_path_witness,
                               find_reduction_target, path_graph, popcount,
                               validate_path_witness)

from conftest import graphs


class TestBasics:
    def test_bits_and_popcount(self):
        assert list(bits(0b101001)) == [0, 3, 5]
        assert popcount(0b101001) == 3
        assert list(bits(0)) == []

    def test_construction_validates(self):
        with pytest.raises(VertexError):
            Graph(3, [(0, 3)])
        with pytest.raises(VertexError):
            Graph(3, [(1, 1)])
        with pytest.raises(GraphTooLargeError):
            Graph(33)

    def test_adjacency_masks_validated(self):
        with pytest.raises(VertexError):
            Graph.from_adjacency_masks((0b10, 0b000))  # not symmetric
        with pytest.raises(VertexError):
            Graph.from_adjacency_masks((0b01,))  # self loop
        g = Graph.from_adjacency_masks((0b10, 0b01))
        assert g.edges() == [(0, 1)]

    def test_immutability(self):
        g = path_graph(3)
        with pytest.raises(AttributeError):
            g.n = 5

    def test_neighborhoods(self):
        g = cycle_graph(5)
        assert g.neighborhood(0) == {1, 4}
        assert g.closed_neighborhood(0) == {0, 1, 4}
        assert g.degree(0) == 2
        assert g.has_edge(0, 4) and not g.has_edge(0, 2)

    def test_labels_default_to_vertex_numbers(self):
        g = path_graph(3)
        assert g.vertex_labels() == ("0", "1", "2")
        h = Graph(2, [(0, 1)], labels=("x", "y"))
        assert h.label(1) == "y"


class TestSurgeries:
    def test_induced_subgraph_renumbers_densely(self):
        g = cycle_graph(5)
        h = g.induced_subgraph(0b11010)  # vertices 1, 3, 4
        assert h.n == 3
        assert h.vertex_labels() == ("1", "3", "4")
        assert sorted(h.edges()) == [(1, 2)]  # only the edge 3-4 survives

    def test_delete_vertices(self):
        g = cycle_graph(4)
        h = g.delete_vertices({0})
        assert h.n == 3 and sorted(h.edges()) == [(0, 1), (1, 2)]
        assert g.delete_vertices(()) == g

    def test_delete_antipodal_pair_of_c6(self):
        h = cycle_graph(6).delete_vertices({0, 3})
        assert h.n == 4
        assert len(h.component_masks()) == 2

    def test_contract_path_on_c5_gives_edge(self):
        g = cycle_graph(5)
        w = PathWitness(0, 1, 2, 3, False)
        h = g.contract_path(w)
        assert h.n == 2 and h.edges() == [(0, 1)]
        assert h.vertex_labels() == ("4", "0+1+2+3")

    def test_contract_path_on_c7_gives_c4(self):
        h = cycle_graph(7).contract_path(PathWitness(0, 1, 2, 3, False))
        assert h.n == 4
        assert sorted(h.cycle_lengths()) == [4]

    def test_contract_rejects_adjacent_ends(self):
        g = cycle_graph(4)
        w = PathWitness(0, 1, 2, 3, True)
        with pytest.raises(ValueError):
            g.contract_path(w)

    def test_witness_validation(self):
        g = cycle_graph(5)
        with pytest.raises(ValueError):
            validate_path_witness(g, PathWitness(0, 1, 2, 4, False))  # 2-4 not an edge
        with pytest.raises(ValueError):
            validate_path_witness(g, PathWitness(0, 1, 2, 3, True))  # flag wrong
        extra = Graph(5, cycle_graph(5).edges() + [(1, 3)])
        with pytest.raises(ValueError):
            validate_path_witness(extra, PathWitness(0, 1, 2, 3, False))  # deg(1) = 3


class TestConnectivity:
    def test_components(self):
        g = Graph(4, [(0, 1), (2, 3)])
        comps = g.connected_components()
        assert len(comps) == 2
        assert all(c.n == 2 and c.edge_count() == 1 for c in comps)

    def test_empty_graph_is_not_connected(self):
        assert not Graph(0).is_connected()
        assert Graph(0).connected_components() == []
        assert Graph(1).is_connected()

    def test_cut_vertices(self, two_triangles_sharing_a_vertex):
        assert two_triangles_sharing_a_vertex.cut_vertices() == {2}
        assert cycle_graph(6).cut_vertices() == frozenset()
        assert path_graph(4).cut_vertices() == {1, 2}
        assert Graph(3, [(0, 1)]).cut_vertices() == frozenset()

    def test_two_connected(self):
        assert cycle_graph(4).is_two_connected()
        assert not path_graph(4).is_two_connected()
        assert not Graph(2, [(0, 1)]).is_two_connected()  # needs n >= 3
        assert not Graph(4, [(0, 1), (2, 3)]).is_two_connected()

    def test_split_at_cut_vertex(self, two_triangles_sharing_a_vertex):
        g = two_triangles_sharing_a_vertex
        g1, g2 = g.split_at_cut_vertex(2)
        assert g1.n + g2.n == g.n + 1
        assert g1.edge_count() + g2.edge_count() == g.edge_count()
        # the first part holds the component with the smallest vertex
        assert "0" in g1.vertex_labels()
        assert set(g1.vertex_labels()) & set(g2.vertex_labels()) == {"2"}

    def test_split_rejects_non_cut_vertex(self):
        with pytest.raises(VertexError):
            cycle_graph(4).split_at_cut_vertex(0)

    @settings(max_examples=60, deadline=None)
    @given(graphs(min_n=1, max_n=7), st.data())
    def test_split_partitions_edges(self, g, data):
        cuts = sorted(g.cut_vertices())
        if not cuts:
            return
        w = data.draw(st.sampled_from(cuts))
        g1, g2 = g.split_at_cut_vertex(w)
        assert g1.edge_count() + g2.edge_count() == g.edge_count()
        assert g1.n + g2.n == g.n + 1


class TestCycles:
    @pytest.mark.parametrize("length", range(3, 13))
    def test_cycle_graph_has_one_cycle(self, length):
        assert cycle_graph(length).cycle_lengths() == [length]

    def test_cycle_lengths_of_k4(self):
        assert complete_graph(4).cycle_lengths() == [3, 3, 3, 3, 4, 4, 4]

    def test_cycle_lengths_of_k33(self):
        lengths = complete_bipartite(3, 3).cycle_lengths()
        assert set(lengths) == {4, 6}
        assert lengths.count(4) == 9

    def test_has_cycle_div3(self):
        assert cycle_graph(6).has_cycle_div3()
        assert complete_graph(3).has_cycle_div3()
        assert not cycle_graph(5).has_cycle_div3()
        assert not path_graph(6).has_cycle_div3()
        assert complete_bipartite(3, 3).has_cycle_div3()

    def test_induced_cycles_ignore_chorded(self):
        chorded = Graph(6, cycle_graph(6).edges() + [(0, 3)])
        assert chorded.induced_cycle_lengths() == [4, 4]
        assert not chorded.has_induced_cycle_div3()
        assert chorded.has_cycle_div3()

    def test_induced_cycles_of_k33(self):
        g = complete_bipartite(3, 3)
        assert set(g.induced_cycle_lengths()) == {4}
        assert not g.has_induced_cycle_div3()

    def test_cycle_cap(self):
        with pytest.raises(GraphTooLargeError):
            cycle_graph(17).cycle_masks()

    @settings(max_examples=60, deadline=None)
    @given(graphs(max_n=7))
    def test_div3_flag_matches_enumeration(self, g):
        expected = any(length % 3 == 0 for length in g.cycle_lengths())
        assert g.has_cycle_div3() == expected


class TestReductionTargets:
    def test_base_case_below_three_vertices(self):
        for n in range(3):
            assert find_reduction_target(Graph(n)).kind == BASE_CASE

    def test_disconnected(self):
        assert find_reduction_target(Graph(4, [(0, 1), (2, 3)])).kind == DISCONNECTED

    def test_dominated_pair_on_c4(self):
        # opposite corners of a square are non-adjacent twins
        target = find_reduction_target(cycle_graph(4))
        assert target.kind == DOMINATED_VERTEX
        assert target.witness == (0, 2)

    def test_dominated_pair_on_k23(self):
        target = find_reduction_target(complete_bipartite(2, 3))
        assert target.kind == DOMINATED_VERTEX
        assert target.witness == (0, 1)

    def test_cut_vertex_target(self, two_triangles_sharing_a_vertex):
        target = find_reduction_target(two_triangles_sharing_a_vertex)
        assert target.kind == CUT_VERTEX
        assert target.witness == (2,)

    def test_path_target_on_c5(self):
        target = find_reduction_target(cycle_graph(5))
        assert target.kind == ADJACENT_DEGREE_TWO_PAIR
        assert target.path == PathWitness(4, 0, 1, 2, False)

    def test_no_target_on_k4(self):
        assert find_reduction_target(complete_graph(4)).kind == NO_TARGET

    def test_k3_has_no_target(self):
        # the smallest 2-connected graph with a cycle of length div 3
        assert find_reduction_target(complete_graph(3)).kind == NO_TARGET

    @settings(max_examples=100, deadline=None)
    @given(graphs(max_n=7))
    def test_dominated_pair_is_sound(self, g):
        pair = find_dominated_pair(g)
        if pair is None:
            return
        u, v = pair
        assert u != v and not g.has_edge(u, v)
        assert g.adj[u] & ~g.adj[v] == 0

    @settings(max_examples=100, deadline=None)
    @given(graphs(max_n=7))
    def test_path_witness_is_sound(self, g):
        w = find_path_witness(g)
        if w is not None:
            validate_path_witness(g, w)

    def test_structure_theorem_small(self):
        """Every 2-connected graph on <= 6 vertices with no cycle of length
        divisible by three admits some reduction rule."""
        from indcomplex.verify import enumerate_graphs

        for n in range(7):
            for g in enumerate_graphs(n):
                if not g.is_two_connected() or g.has_cycle_div3():
                    continue
                assert find_reduction_target(g).kind != NO_TARGET
