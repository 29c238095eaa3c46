"""Graph representation: construction, neighborhoods, subgraphs, recognizers."""

import pytest
from hypothesis import given
import hypothesis.strategies as st

from cliqueiso import (
    ExceptionKind,
    Graph,
    build_complete,
    build_cycle,
    build_path,
    classify_exception,
    closed_neighborhood,
    components,
    delete,
    induced,
    is_connected,
)
from cliqueiso.graph import bits, mask_of, require_k, set_of

from .support import connected_graphs, graphs, naive_components

C5_EDGES = [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]


class TestConstruction:
    def test_from_edges_round_trip(self):
        g = Graph.from_edges(5, C5_EDGES)
        assert g.n == 5
        assert g.edge_count == 5
        assert g.edges() == sorted(C5_EDGES)

    def test_vertex_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            Graph.from_edges(3, [(0, 3)])
        with pytest.raises(ValueError):
            Graph.from_edges(3, [(-1, 0)])

    def test_self_loop_rejected(self):
        with pytest.raises(ValueError):
            Graph.from_edges(3, [(1, 1)])

    def test_asymmetric_adjacency_rejected(self):
        with pytest.raises(ValueError):
            Graph(2, (0b10, 0b00))

    def test_negative_n_rejected(self):
        with pytest.raises(ValueError):
            Graph(-1, ())

    def test_empty_graph(self):
        g = Graph.from_edges(0, [])
        assert g.n == 0
        assert g.edges() == []
        assert g.full_mask == 0

    def test_duplicate_edges_collapse(self):
        g = Graph.from_edges(2, [(0, 1), (1, 0), (0, 1)])
        assert g.edge_count == 1

    def test_immutability(self):
        g = Graph.from_edges(2, [(0, 1)])
        with pytest.raises(AttributeError):
            g.n = 3

    def test_repr_lists_edges(self):
        assert repr(Graph.from_edges(2, [(0, 1)])) == "Graph(n=2, edges=[(0, 1)])"


class TestAccessors:
    def test_neighbors_and_degree(self):
        g = Graph.from_edges(4, [(0, 1), (0, 2), (2, 3)])
        assert g.neighbors(0) == frozenset({1, 2})
        assert g.degree(0) == 2
        assert g.degree(3) == 1
        assert g.has_edge(0, 2)
        assert not g.has_edge(1, 2)

    def test_vertex_set(self):
        assert Graph.from_edges(3, []).vertex_set() == frozenset({0, 1, 2})

    def test_out_of_range_access_rejected(self):
        g = Graph.from_edges(2, [(0, 1)])
        with pytest.raises(ValueError):
            g.neighbors(2)
        with pytest.raises(ValueError):
            g.has_edge(0, -1)


class TestMasks:
    def test_bits_iterates_ascending(self):
        assert list(bits(0b101101)) == [0, 2, 3, 5]
        assert list(bits(0)) == []

    def test_mask_set_round_trip(self):
        assert set_of(mask_of([4, 1], 5)) == frozenset({1, 4})
        assert mask_of([], 3) == 0

    def test_mask_of_validates_range(self):
        with pytest.raises(ValueError):
            mask_of([3], 3)


class TestNeighborhoodsAndSubgraphs:
    def test_closed_neighborhood(self):
        g = Graph.from_edges(5, C5_EDGES)
        assert closed_neighborhood(g, [0]) == frozenset({0, 1, 4})
        assert closed_neighborhood(g, [0, 2]) == frozenset({0, 1, 2, 3, 4})
        assert closed_neighborhood(g, []) == frozenset()

    def test_induced_keeps_internal_edges_only(self):
        g = Graph.from_edges(5, C5_EDGES)
        sub = induced(g, [1, 2, 4])
        assert sub.graph.n == 3
        assert sub.graph.edges() == [(0, 1)]
        assert sub.to_parent == (1, 2, 4)
        assert sub.lift(frozenset({0, 2})) == frozenset({1, 4})

    def test_delete_is_induced_complement(self):
        g = Graph.from_edges(5, C5_EDGES)
        assert delete(g, [0]).to_parent == induced(g, [1, 2, 3, 4]).to_parent

    def test_components_ordered_by_smallest_member(self):
        g = Graph.from_edges(6, [(3, 4), (0, 5)])
        assert components(g) == [
            frozenset({0, 5}),
            frozenset({1}),
            frozenset({2}),
            frozenset({3, 4}),
        ]

    @given(graphs(max_n=8))
    def test_components_partition_vertices(self, g):
        comps = components(g)
        assert sorted(u for c in comps for u in c) == list(range(g.n))
        assert {frozenset(c) for c in naive_components(g)} == set(comps)

    @given(graphs(min_n=1, max_n=8), st.data())
    def test_induced_edges_match_parent(self, g, data):
        keep = data.draw(st.sets(st.integers(min_value=0, max_value=g.n - 1)))
        sub = induced(g, keep)
        back = sub.to_parent
        for u, v in sub.graph.edges():
            assert g.has_edge(back[u], back[v])
        kept = sorted(keep)
        expected = sum(
            1 for i, a in enumerate(kept) for b in kept[i + 1 :] if g.has_edge(a, b)
        )
        assert sub.graph.edge_count == expected


class TestConnectivity:
    def test_empty_graph_not_connected(self):
        assert not is_connected(Graph.from_edges(0, []))

    def test_single_vertex_connected(self):
        assert is_connected(Graph.from_edges(1, []))

    def test_path_connected_union_not(self):
        assert is_connected(build_path(6))
        assert not is_connected(Graph.from_edges(4, [(0, 1), (2, 3)]))

    @given(connected_graphs(max_n=9))
    def test_tree_plus_extras_connected(self, g):
        assert is_connected(g)


class TestExceptionRecognizer:
    def test_complete_graph_matches_only_its_own_k(self):
        for k in range(1, 6):
            g = build_complete(k)
            assert classify_exception(g, k) is ExceptionKind.K_CLIQUE
            assert classify_exception(g, k + 1) is ExceptionKind.NONE
            if k > 1:
                assert classify_exception(g, k - 1) is ExceptionKind.NONE

    def test_five_cycle_only_at_k2(self):
        c5 = build_cycle(5)
        assert classify_exception(c5, 2) is ExceptionKind.FIVE_CYCLE_AT_K2
        assert classify_exception(c5, 1) is ExceptionKind.NONE
        assert classify_exception(c5, 3) is ExceptionKind.NONE

    def test_near_misses_are_not_exceptional(self):
        chorded = Graph.from_edges(5, C5_EDGES + [(0, 2)])
        assert classify_exception(chorded, 2) is ExceptionKind.NONE
        assert classify_exception(build_cycle(6), 2) is ExceptionKind.NONE
        missing_edge = Graph.from_edges(3, [(0, 1), (1, 2)])
        assert classify_exception(missing_edge, 3) is ExceptionKind.NONE

    def test_k2_means_single_edge(self):
        assert classify_exception(Graph.from_edges(2, [(0, 1)]), 2) is ExceptionKind.K_CLIQUE


class TestRequireK:
    @pytest.mark.parametrize("bad", [0, -1, 1.5, True, "2"])
    def test_rejects_non_positive_int(self, bad):
        with pytest.raises((TypeError, ValueError)):
            require_k(bad)

    def test_accepts_positive_int(self):
        require_k(1)
        require_k(10)
