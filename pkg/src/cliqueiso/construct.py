"""Constructive isolating sets of size at most floor(n/(k+1)).

For every connected graph other than the complete graph on k vertices (and, at
k = 2, the 5-cycle) an isolating set within that bound exists, and this module
builds one.  The recursion picks a pivot v inside the first k-clique that has a
neighbour outside it, removes N[v], classifies the residual components by shape
(general, complete-on-k, 5-cycle) and by which neighbours of v they attach to,
and dispatches:

* no k-clique at all, or a dominating pivot: immediate answers;
* no exceptional residual component: keep v, recurse on every component;
* some exceptional component attached to a single neighbour x: take x, finish
  the 5-cycles hanging off x with one far vertex each, recurse on the rest
  (tag Case2);
* every exceptional component attached to at least two neighbours: excise one
  exceptional component together with one attachment vertex x and split on the
  shape of the piece containing v (tags Case1_Sub1..3), where the complete and
  5-cycle shapes bottom out in small finite constructions that are verified
  before being returned.

Every choice (clique, pivot, attachment, cycle labeling) takes the smallest
index available, so the output is a pure function of the input.  The final set
is always verified; with ``check=True`` every recursive return is verified as
well, along with the structural facts each branch relies on.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .cliques import find_in_mask
from .graph import (
    ExceptionKind,
    Graph,
    Subgraph,
    VertexSet,
    bits,
    classify_exception,
    closed_mask,
    component_masks,
    components,
    induced,
    is_connected,
    mask_of,
    require_k,
    set_of,
)
from .isolation import verify_isolating


class BranchTag(Enum):
    """Which rule produced a step of the construction."""

    BASE_SMALL = "BaseSmall"
    NO_CLIQUE = "NoClique"
    DOMINATING_VERTEX = "DominatingVertex"
    NO_EXCEPTIONAL = "NoExceptional"
    CASE1_SUB1 = "Case1_Sub1"
    CASE1_SUB2 = "Case1_Sub2"
    CASE1_SUB3 = "Case1_Sub3"
    CASE2 = "Case2"


@dataclass(frozen=True)
class TraceStep:
    """One fired rule and the vertices it added to the set directly.

    The union of ``chosen`` over a result's whole trace equals the result set.
    """

    tag: BranchTag
    chosen: tuple[int, ...]


@dataclass(frozen=True)
class BoundResult:
    """A verified isolating set together with its size guarantee and trace."""

    set: VertexSet
    bound: int
    trace: tuple[TraceStep, ...]


@dataclass(frozen=True)
class ComponentResult:
    """Per-component outcome: a forced optimal set for the two exceptional
    shapes, or a constructed bounded set for everything else.  All labels are
    the host graph's."""

    vertices: VertexSet
    exception: ExceptionKind
    set: VertexSet
    result: BoundResult | None


class ExceptionalGraphError(ValueError):
    """The input is one of the two shapes the bound excludes."""

    def __init__(self, kind: ExceptionKind, message: str) -> None:
        super().__init__(message)
        self.kind = kind


@dataclass(frozen=True)
class LinkageTable:
    """How the components of G - N[pivot] attach to the pivot's neighbours.

    Component i is *linked* to x when some edge joins x to the component.
    ``exceptional[i]`` marks the complete-on-k shape and, at k = 2, the
    5-cycle.  Components are ordered by smallest member.
    """

    pivot: int
    components: tuple[VertexSet, ...]
    exceptional: tuple[bool, ...]
    links: tuple[VertexSet, ...]

    def exceptional_indices(self) -> tuple[int, ...]:
        return tuple(i for i, e in enumerate(self.exceptional) if e)

    def linked_only_to(self, x: int) -> tuple[int, ...]:
        return tuple(i for i, lk in enumerate(self.links) if lk == frozenset({x}))


def linked_to(g: Graph, component: Iterable[int], x: int) -> bool:
    """True iff some edge joins x to the given vertex set."""
    if not 0 <= x < g.n:
        raise ValueError(f"vertex {x} out of range for a graph on {g.n} vertices")
    cm = mask_of(component, g.n)
    if cm >> x & 1:
        raise ValueError(f"vertex {x} lies inside the component")
    return bool(g.adj[x] & cm)


def _is_clique_mask(adj: Sequence[int], mask: int, k: int) -> bool:
    return mask.bit_count() == k and all(
        (adj[v] & mask).bit_count() == k - 1 for v in bits(mask)
    )


def _is_c5_mask(adj: Sequence[int], mask: int) -> bool:
    # Only meaningful for masks already known to be connected (components).
    return mask.bit_count() == 5 and all(
        (adj[v] & mask).bit_count() == 2 for v in bits(mask)
    )


def _linkage(adj: Sequence[int], full: int, k: int, v: int) -> list[tuple[int, bool, int]]:
    """(component mask, exceptional?, link mask over N(v)) per residual component."""
    residual = full & ~(adj[v] | (1 << v))
    out = []
    for cm in component_masks(adj, residual):
        exceptional = _is_clique_mask(adj, cm, k) or (k == 2 and _is_c5_mask(adj, cm))
        links = 0
        for x in bits(adj[v]):
            if adj[x] & cm:
                links |= 1 << x
        out.append((cm, exceptional, links))
    return out


def build_linkage(g: Graph, k: int, v: int) -> LinkageTable:
    """Classify the components of G - N[v] and record their attachments."""
    require_k(k)
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range for a graph on {g.n} vertices")
    if (g.adj[v] | (1 << v)) == g.full_mask:
        raise ValueError("the pivot's closed neighbourhood covers the whole graph")
    entries = _linkage(g.adj, g.full_mask, k, v)
    return LinkageTable(
        pivot=v,
        components=tuple(set_of(cm) for cm, _, _ in entries),
        exceptional=tuple(exc for _, exc, _ in entries),
        links=tuple(set_of(lk) for _, _, lk in entries),
    )


def bounded_isolating_set(g: Graph, k: int, *, check: bool = False) -> BoundResult:
    """An isolating set of size at most floor(n/(k+1)) for a connected,
    non-exceptional graph.

    Raises ``ExceptionalGraphError`` (carrying the kind) for the two excluded
    shapes and ``ValueError`` for disconnected input.  The result is verified
    before it is returned; ``check=True`` additionally verifies every
    recursive intermediate, which is what the test suite runs with.
    """
    require_k(k)
    kind = classify_exception(g, k)
    if kind is not ExceptionKind.NONE:
        raise ExceptionalGraphError(
            kind, f"the bound excludes this input (shape: {kind.value})"
        )
    if not is_connected(g):
        raise ValueError(
            "input graph must be connected; use bounded_sets_per_component instead"
        )
    d_mask, trace = _construct(g, k, check)
    bound = g.n // (k + 1)
    chosen = set_of(d_mask)
    cert = verify_isolating(g, k, chosen)
    if not cert.valid or len(chosen) > bound:
        raise AssertionError("construction broke its own guarantee; this is a bug")
    return BoundResult(set=chosen, bound=bound, trace=tuple(trace))


def bounded_sets_per_component(g: Graph, k: int, *, check: bool = False) -> list[ComponentResult]:
    """Apply the construction to every component.

    The two exceptional shapes get their forced optimal sets instead: a single
    vertex for the complete graph on k vertices, two vertices at distance two
    for the 5-cycle at k = 2.
    """
    require_k(k)
    out = []
    for comp in components(g):
        sub = induced(g, comp)
        kind = classify_exception(sub.graph, k)
        if kind is ExceptionKind.K_CLIQUE:
            out.append(ComponentResult(comp, kind, frozenset({min(comp)}), None))
        elif kind is ExceptionKind.FIVE_CYCLE_AT_K2:
            far = sub.graph.full_mask & ~(sub.graph.adj[0] | 1)
            partner = (far & -far).bit_length() - 1
            out.append(ComponentResult(comp, kind, sub.lift((0, partner)), None))
        else:
            res = bounded_isolating_set(sub.graph, k, check=check)
            lifted = sub.lift(res.set)
            trace = tuple(
                TraceStep(st.tag, tuple(sub.to_parent[u] for u in st.chosen))
                for st in res.trace
            )
            out.append(
                ComponentResult(comp, kind, lifted, BoundResult(lifted, res.bound, trace))
            )
    return out


def _recurse(g: Graph, k: int, comp_mask: int, check: bool) -> tuple[int, list[TraceStep]]:
    """Run the construction on an induced piece and lift the outcome back."""
    sub = induced(g, set_of(comp_mask))
    if check:
        assert is_connected(sub.graph), "recursion needs a connected piece"
        assert classify_exception(sub.graph, k) is ExceptionKind.NONE, (
            "recursion needs a non-exceptional piece"
        )
    d_mask, trace = _construct(sub.graph, k, check)
    if check:
        cert = verify_isolating(sub.graph, k, set_of(d_mask))
        assert cert.valid, "recursive return must isolate its piece"
        assert d_mask.bit_count() <= sub.graph.n // (k + 1), "recursive return must respect the bound"
    lifted = 0
    for i in bits(d_mask):
        lifted |= 1 << sub.to_parent[i]
    lifted_trace = [
        TraceStep(st.tag, tuple(sub.to_parent[u] for u in st.chosen)) for st in trace
    ]
    return lifted, lifted_trace


def _construct(g: Graph, k: int, check: bool) -> tuple[int, list[TraceStep]]:
    n, adj, full = g.n, g.adj, g.full_mask

    if n <= 2:
        if find_in_mask(adj, full, k) is None:
            return 0, [TraceStep(BranchTag.BASE_SMALL, ())]
        # connected, non-exceptional, n <= 2 with a k-clique forces k = 1 on an edge
        assert k == 1 and n == 2
        return 1, [TraceStep(BranchTag.BASE_SMALL, (0,))]

    clique = find_in_mask(adj, full, k)
    if clique is None:
        return 0, [TraceStep(BranchTag.NO_CLIQUE, ())]

    pivot = -1
    for u in bits(clique):
        if adj[u] & ~clique:
            pivot = u
            break
    assert pivot >= 0, "a connected non-complete host has a clique vertex with an outside neighbour"
    vb = 1 << pivot
    nv_closed = adj[pivot] | vb

    if nv_closed == full:
        return vb, [TraceStep(BranchTag.DOMINATING_VERTEX, (pivot,))]

    entries = _linkage(adj, full, k, pivot)
    assert all(lk for _, _, lk in entries), "every residual component touches N(pivot) in a connected host"

    if not any(exc for _, exc, _ in entries):
        d = vb
        trace = [TraceStep(BranchTag.NO_EXCEPTIONAL, (pivot,))]
        for cm, _, _ in entries:
            dm, tr = _recurse(g, k, cm, check)
            d |= dm
            trace.extend(tr)
        return d, trace

    singles = [(cm, lk) for cm, exc, lk in entries if exc and lk.bit_count() == 1]
    if singles:
        return _case_single_link(g, k, pivot, entries, singles[0], check)
    exceptional = [(cm, lk) for cm, exc, lk in entries if exc]
    return _case_multi_link(g, k, pivot, entries, exceptional[0], check)


def _case_single_link(
    g: Graph,
    k: int,
    pivot: int,
    entries: list[tuple[int, bool, int]],
    picked: tuple[int, int],
    check: bool,
) -> tuple[int, list[TraceStep]]:
    """Some exceptional residual component hangs on a single neighbour x."""
    adj, full = g.adj, g.full_mask
    vb = 1 << pivot
    _, link = picked
    x = link.bit_length() - 1
    xb = 1 << x

    hang_exceptional = [cm for cm, exc, lk in entries if exc and lk == xb]
    hang_general = [cm for cm, exc, lk in entries if not exc and lk == xb]

    direct = xb
    for cm in hang_exceptional:
        if k == 2 and cm.bit_count() == 5:
            # finish a hanging 5-cycle: one vertex opposite its contact with x
            contact = adj[x] & cm
            y = (contact & -contact).bit_length() - 1
            far = cm & ~((adj[y] & cm) | (1 << y))
            direct |= far & -far

    excised = xb
    for cm in hang_exceptional:
        excised |= cm
    star_comps = component_masks(adj, full & ~excised)
    gv = next(cm for cm in star_comps if cm & vb)
    assert (adj[pivot] | vb) & ~xb & ~gv == 0, "N[pivot] minus x stays in one piece"
    rest = [cm for cm in star_comps if not cm & vb]
    assert sorted(rest) == sorted(hang_general), (
        "after the excision only the x-only general components remain apart"
    )

    tails: list[TraceStep] = []
    d = direct
    if _is_clique_mask(adj, gv, k):
        # x alone breaks it: the piece is exactly N[pivot] minus x
        assert gv == (adj[pivot] | vb) & ~xb
    elif k == 2 and _is_c5_mask(adj, gv):
        far = gv & ~((adj[pivot] & gv) | vb)
        pick = far & -far
        direct |= pick
        d |= pick
    else:
        dm, tr = _recurse(g, k, gv, check)
        d |= dm
        tails.extend(tr)
    for cm in hang_general:
        dm, tr = _recurse(g, k, cm, check)
        d |= dm
        tails.extend(tr)

    head = TraceStep(BranchTag.CASE2, tuple(bits(direct)))
    return d, [head] + tails


def _case_multi_link(
    g: Graph,
    k: int,
    pivot: int,
    entries: list[tuple[int, bool, int]],
    picked: tuple[int, int],
    check: bool,
) -> tuple[int, list[TraceStep]]:
    """Every exceptional residual component attaches to at least two
    neighbours of the pivot; excise the first one plus one attachment."""
    adj, full = g.adj, g.full_mask
    vb = 1 << pivot
    h_mask, h_links = picked
    assert h_links.bit_count() >= 2

    x = (h_links & -h_links).bit_length() - 1
    xb = 1 << x
    x_only = [cm for cm, exc, lk in entries if lk == xb]
    assert all(not exc for cm, exc, lk in entries if lk == xb), (
        "components hanging only on x are general here"
    )

    contact = adj[x] & h_mask
    assert contact, "x is linked to the excised component"
    y = (contact & -contact).bit_length() - 1
    h_is_clique = _is_clique_mask(adj, h_mask, k)
    if h_is_clique:
        d_prime = 1 << y
        y2b = 0
    else:
        assert k == 2 and h_mask.bit_count() == 5
        far = h_mask & ~((adj[y] & h_mask) | (1 << y))
        y2b = far & -far
        d_prime = (1 << y) | y2b

    star_comps = component_masks(adj, full & ~(xb | h_mask))
    gv = next(cm for cm in star_comps if cm & vb)
    assert (adj[pivot] | vb) & ~xb & ~gv == 0
    rest = [cm for cm in star_comps if not cm & vb]
    assert sorted(rest) == sorted(x_only)

    if not (_is_clique_mask(adj, gv, k) or (k == 2 and _is_c5_mask(adj, gv))):
        # Subcase 1: the pivot-side piece recurses as-is
        d = d_prime
        tails: list[TraceStep] = []
        dm, tr = _recurse(g, k, gv, check)
        d |= dm
        tails.extend(tr)
        for cm in x_only:
            dm, tr = _recurse(g, k, cm, check)
            d |= dm
            tails.extend(tr)
        head = TraceStep(BranchTag.CASE1_SUB1, tuple(bits(d_prime)))
        return d, [head] + tails

    if _is_clique_mask(adj, gv, k):
        return _pivot_side_clique(
            g, k, pivot, x, h_mask, h_is_clique, y, y2b, gv, x_only, check
        )
    return _pivot_side_cycle(g, k, pivot, x, h_mask, y, gv, x_only, check)


def _pivot_side_clique(
    g: Graph,
    k: int,
    pivot: int,
    x: int,
    h_mask: int,
    h_is_clique: bool,
    y: int,
    y2b: int,
    gv: int,
    x_only: list[int],
    check: bool,
) -> tuple[int, list[TraceStep]]:
    """The piece containing the pivot is itself a k-clique, so it equals
    N[pivot] minus x and the construction bottoms out in finite patterns."""
    adj, full, n = g.adj, g.full_mask, g.n
    vb = 1 << pivot
    xb = 1 << x
    assert gv == (adj[pivot] | vb) & ~xb

    if h_is_clique:
        shield = 1 << y
        d_pp = xb
    else:
        # k = 2, excised component is a 5-cycle: shield y, the chosen far
        # vertex and that vertex's two cycle neighbours
        shield = (1 << y) | y2b | (adj[(y2b.bit_length() - 1)] & h_mask)
        d_pp = xb | y2b

    leftover = ((xb | h_mask | gv) & ~(vb | xb | shield))
    c_y = find_in_mask(adj, leftover, k)

    if c_y is None:
        d = d_pp
        tails: list[TraceStep] = []
        for cm in x_only:
            dm, tr = _recurse(g, k, cm, check)
            d |= dm
            tails.extend(tr)
        head = TraceStep(BranchTag.CASE1_SUB2, tuple(bits(d_pp)))
        return d, [head] + tails

    cy_gv = c_y & gv
    cy_h = c_y & h_mask
    assert cy_gv and cy_h, "a clique inside the leftover must straddle both sides"
    zb = cy_gv & -cy_gv
    z = zb.bit_length() - 1
    zone = gv | c_y  # within N[z]: z sees all of gv and all of c_y

    if x_only:
        gz_mask = full & ~zone
        assert len(component_masks(adj, gz_mask)) == 1, "the remainder is connected"
        assert not _is_clique_mask(adj, gz_mask, k)
        assert not (k == 2 and _is_c5_mask(adj, gz_mask))
        dm, tr = _recurse(g, k, gz_mask, check)
        head = TraceStep(BranchTag.CASE1_SUB2, (z,))
        return zb | dm, [head] + tr

    # No x-only pieces: the whole graph is gv + x + the excised component.
    if h_is_clique:
        assert n == 2 * k + 1
        if zone.bit_count() >= k + 2:
            d = zb
        else:
            assert zone.bit_count() == k + 1 and cy_h.bit_count() == 1
            if k >= 3:
                d = cy_h
            else:
                # five vertices around a cycle with a chord somewhere
                w = -1
                for u in range(n):
                    if adj[u].bit_count() >= 3:
                        w = u
                        break
                assert w >= 0, "a non-cycle on five vertices has a degree-3 vertex"
                d = 1 << w
    else:
        assert k == 2 and n == 8
        assert cy_h.bit_count() == 1
        d = (1 << y) | cy_h

    assert find_in_mask(adj, full & ~closed_mask(adj, d), k) is None, (
        "terminal pattern must isolate"
    )
    return d, [TraceStep(BranchTag.CASE1_SUB2, tuple(bits(d)))]


def _pivot_side_cycle(
    g: Graph,
    k: int,
    pivot: int,
    x: int,
    h_mask: int,
    y: int,
    gv: int,
    x_only: list[int],
    check: bool,
) -> tuple[int, list[TraceStep]]:
    """k = 2 and the piece containing the pivot is a 5-cycle: cut out the
    three far cycle vertices and recurse on what is left, unless what is left
    is itself a 5-cycle, which bottoms out in a two-vertex pattern."""
    adj, full, n = g.adj, g.full_mask, g.n
    assert k == 2
    vb = 1 << pivot

    around = adj[pivot] & gv
    assert around.bit_count() == 2
    v1b = around & -around
    v1 = v1b.bit_length() - 1
    v2b = (adj[v1] & gv) & ~vb
    assert v2b.bit_count() == 1
    v2 = v2b.bit_length() - 1
    v3b = (adj[v2] & gv) & ~v1b
    assert v3b.bit_count() == 1
    v3 = v3b.bit_length() - 1
    v4b = around ^ v1b
    assert (adj[v3] & gv) == v2b | v4b, "the cycle closes"

    cut = v2b | v3b | v4b
    rest_mask = full & ~cut
    assert len(component_masks(adj, rest_mask)) == 1, "removing the far arc keeps one piece"

    if _is_c5_mask(adj, rest_mask):
        # Only possible when the excised component is a single edge and
        # nothing hangs on x, leaving eight vertices in total.
        assert n == 8 and h_mask.bit_count() == 2 and not x_only
        if adj[v3] >> y & 1:
            d = vb | v3b
        else:
            d = vb | v1b
        assert find_in_mask(adj, full & ~closed_mask(adj, d), k) is None, (
            "terminal pattern must isolate"
        )
        return d, [TraceStep(BranchTag.CASE1_SUB3, tuple(bits(d)))]

    dm, tr = _recurse(g, k, rest_mask, check)
    head = TraceStep(BranchTag.CASE1_SUB3, (v3,))
    return v3b | dm, [head] + tr
