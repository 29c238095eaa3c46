"""Constructive bounded isolating sets: exceptional handling, every recursion
branch (pinned by crafted configurations), and soundness sweeps."""

import random

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from cliqueiso import (
    BranchTag,
    ExceptionKind,
    ExceptionalGraphError,
    Graph,
    bounded_isolating_set,
    bounded_sets_per_component,
    build_complete,
    build_cycle,
    build_extremal,
    build_linkage,
    build_path,
    classify_exception,
    enumerate_connected,
    gen_random_connected,
    iota_oracle,
    is_connected,
    linked_to,
    verify_isolating,
)

from .support import connected_graphs, disjoint_union


def assert_sound(g: Graph, k: int, res) -> None:
    assert verify_isolating(g, k, res.set).valid
    assert len(res.set) <= res.bound == g.n // (k + 1)
    chosen = {u for step in res.trace for u in step.chosen}
    assert chosen == set(res.set)


class TestExceptionalInputs:
    @pytest.mark.parametrize("k", [1, 2, 3, 5])
    def test_complete_graph_refused_with_kind(self, k):
        with pytest.raises(ExceptionalGraphError) as info:
            bounded_isolating_set(build_complete(k), k)
        assert info.value.kind is ExceptionKind.K_CLIQUE

    def test_five_cycle_refused_at_k2_only(self):
        with pytest.raises(ExceptionalGraphError) as info:
            bounded_isolating_set(build_cycle(5), 2)
        assert info.value.kind is ExceptionKind.FIVE_CYCLE_AT_K2
        res = bounded_isolating_set(build_cycle(5), 3, check=True)
        assert res.set == frozenset()

    def test_disconnected_input_redirected(self):
        g = disjoint_union([build_path(2), build_path(2)])
        with pytest.raises(ValueError, match="component"):
            bounded_isolating_set(g, 2)


class TestPerComponent:
    def test_exceptional_components_get_forced_optima(self):
        g = disjoint_union([build_complete(2), build_cycle(5), build_path(4)])
        parts = bounded_sets_per_component(g, 2, check=True)
        by_kind = {p.exception: p for p in parts}
        k2 = by_kind[ExceptionKind.K_CLIQUE]
        assert k2.set == {min(k2.vertices)} and k2.result is None
        c5 = by_kind[ExceptionKind.FIVE_CYCLE_AT_K2]
        assert len(c5.set) == 2 and c5.result is None
        plain = by_kind[ExceptionKind.NONE]
        assert plain.result is not None and len(plain.set) <= len(plain.vertices) // 3
        union = frozenset().union(*(p.set for p in parts))
        assert verify_isolating(g, 2, union).valid

    def test_component_sets_live_inside_their_components(self):
        g = disjoint_union([build_path(5), build_complete(4)])
        for part in bounded_sets_per_component(g, 3, check=True):
            assert part.set <= part.vertices

    @given(st.lists(connected_graphs(max_n=6), min_size=1, max_size=3),
           st.integers(min_value=1, max_value=3))
    @settings(max_examples=50)
    def test_union_always_isolates(self, parts, k):
        g = disjoint_union(parts)
        results = bounded_sets_per_component(g, k, check=True)
        union = frozenset().union(*(p.set for p in results)) if results else frozenset()
        assert verify_isolating(g, k, union).valid


class TestLinkage:
    def test_residual_components_and_links(self):
        # Star of the pivot plus one pendant triangle reachable through vertex 1.
        g = Graph.from_edges(6, [(0, 1), (0, 2), (1, 3), (3, 4), (3, 5), (4, 5)])
        table = build_linkage(g, 3, 0)
        assert table.pivot == 0
        assert table.components == (frozenset({3, 4, 5}),)
        assert table.exceptional == (True,)
        assert table.links == (frozenset({1}),)
        assert table.exceptional_indices() == (0,)
        assert table.linked_only_to(1) == (0,)

    def test_dominating_pivot_rejected(self):
        with pytest.raises(ValueError):
            build_linkage(build_complete(4), 2, 0)

    def test_linked_to_rejects_inside_vertex(self):
        g = build_path(4)
        assert linked_to(g, [2, 3], 1)
        with pytest.raises(ValueError):
            linked_to(g, [2, 3], 3)


# Crafted configurations reaching each recursion branch, with the hand-traced
# output sets frozen in.  Each graph was cross-checked against the subset-scan
# oracle at build time; the checks below re-verify soundness on every run.
BRANCH_CASES = [
    # label, edges, n, k, tag that must appear, frozen output (or None)
    ("base_small_edge", [(0, 1)], 2, 1, BranchTag.BASE_SMALL, {0}),
    ("no_clique", [(0, 1), (1, 2), (0, 2)], 3, 4, BranchTag.NO_CLIQUE, set()),
    ("dominating_vertex", [(0, 1), (0, 2), (0, 3), (1, 2)], 4, 2,
     BranchTag.DOMINATING_VERTEX, {0}),
    ("no_exceptional", [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)], 6, 2,
     BranchTag.NO_EXCEPTIONAL, None),
    ("case2_clique_side", [(0, 1), (0, 2), (2, 3), (3, 4)], 5, 2,
     BranchTag.CASE2, {2}),
    ("case2_cycle_side", [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 5), (5, 6), (6, 7)],
     8, 2, BranchTag.CASE2, {2, 5}),
    ("case2_hanging_cycle", [(0, 1), (0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (3, 7)],
     8, 2, BranchTag.CASE2, {2, 5}),
    ("sub1_general_remainder", [(0, 3), (0, 4), (0, 7), (1, 2), (1, 3), (2, 4), (4, 5),
                                (5, 6), (6, 7), (5, 8)],
     9, 2, BranchTag.CASE1_SUB1, None),
    ("sub2_terminal_chord", [(0, 1), (0, 2), (1, 2), (1, 4), (2, 3), (3, 4)], 5, 2,
     BranchTag.CASE1_SUB2, {1}),
    ("sub2_terminal_wide_overlap", [(0, 1), (0, 2), (0, 3), (2, 3), (4, 5), (4, 6), (5, 6),
                                    (1, 4), (2, 5), (2, 6)],
     7, 3, BranchTag.CASE1_SUB2, {2}),
    ("sub2_terminal_tight_overlap", [(0, 1), (0, 2), (0, 3), (2, 3), (4, 5), (4, 6), (5, 6),
                                     (1, 4), (2, 5), (2, 6), (3, 5)],
     7, 3, BranchTag.CASE1_SUB2, {5}),
    ("sub2_terminal_cycle_block", [(0, 1), (0, 2), (1, 3), (2, 4), (2, 7), (3, 4), (3, 7),
                                   (4, 5), (5, 6), (6, 7)],
     8, 2, BranchTag.CASE1_SUB2, {3, 7}),
    ("sub2_recursive", [(0, 1), (0, 2), (1, 2), (1, 4), (2, 3), (3, 4), (1, 5)], 6, 2,
     BranchTag.CASE1_SUB2, None),
    ("sub3_terminal", [(0, 3), (0, 4), (0, 7), (1, 2), (1, 3), (2, 4), (4, 5), (5, 6),
                       (6, 7)],
     8, 2, BranchTag.CASE1_SUB3, {0, 4}),
    ("sub3_recursive", [(0, 3), (0, 4), (0, 7), (1, 2), (1, 3), (2, 4), (4, 5), (5, 6),
                        (6, 7), (3, 8)],
     9, 2, BranchTag.CASE1_SUB3, None),
]


class TestBranches:
    @pytest.mark.parametrize(
        "edges,n,k,tag,frozen",
        [case[1:] for case in BRANCH_CASES],
        ids=[case[0] for case in BRANCH_CASES],
    )
    def test_branch_fires_and_output_is_sound(self, edges, n, k, tag, frozen):
        g = Graph.from_edges(n, edges)
        res = bounded_isolating_set(g, k, check=True)
        assert tag in {step.tag for step in res.trace}
        assert_sound(g, k, res)
        assert iota_oracle(g, k).iota <= len(res.set)
        if frozen is not None:
            assert res.set == frozenset(frozen)

    def test_all_branches_are_pinned(self):
        covered = {case[4] for case in BRANCH_CASES}
        assert covered == set(BranchTag)

    def test_lone_vertex_is_exceptional_at_k1(self):
        # K_1 is the k = 1 complete graph, so the bound refuses it; at k = 2 it
        # holds vacuously with the empty set.
        with pytest.raises(ExceptionalGraphError):
            bounded_isolating_set(Graph.from_edges(1, []), 1)
        res = bounded_isolating_set(Graph.from_edges(1, []), 2, check=True)
        assert res.set == frozenset()


class TestSweeps:
    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_exhaustive_small_connected(self, k):
        for n in range(1, 6):
            for g in enumerate_connected(n, cap=5):
                if classify_exception(g, k) is not ExceptionKind.NONE:
                    continue
                res = bounded_isolating_set(g, k, check=True)
                assert_sound(g, k, res)

    @given(connected_graphs(min_n=1, max_n=9), st.integers(min_value=1, max_value=3))
    @settings(max_examples=80)
    def test_arbitrary_connected_instances(self, g, k):
        if classify_exception(g, k) is not ExceptionKind.NONE:
            return
        res = bounded_isolating_set(g, k, check=True)
        assert_sound(g, k, res)

    def test_random_graphs_stay_within_bound(self):
        rng = random.Random(1207)
        for _ in range(150):
            n = rng.randint(8, 13)
            g = gen_random_connected(n, rng.uniform(0.05, 0.6), rng.randrange(2**32))
            for k in (1, 2, 3):
                if classify_exception(g, k) is ExceptionKind.NONE:
                    assert_sound(g, k, bounded_isolating_set(g, k, check=True))

    def test_extremal_family_members(self):
        for k in (1, 2, 3):
            for n in range(3, 15):
                g = build_extremal(n, k)
                if not is_connected(g) or classify_exception(g, k) is not ExceptionKind.NONE:
                    continue
                assert_sound(g, k, bounded_isolating_set(g, k, check=True))
