"""Closed-form bounds on the global offensive k-alliance number.

The lower bound is exact-rational arithmetic throughout (never floats), so
equality checks against it are unambiguous.  The bipartite upper bound is
constructive: it returns both the bound value actually achieved and a
certified witness set.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .alliances import verify_goka
from .digraph import Digraph, VertexSet, degree_summary, underlying_two_coloring


@dataclass(frozen=True)
class BoundsReport:
    """All applicable bounds for one (digraph, k) pair.

    Absent bounds are None and carry a one-line reason in the matching
    ``*_reason`` field.  ``graph_degree_bound`` / ``graph_parity_bound``
    are populated only when the digraph is a complete biorientation, i.e.
    stands for a simple graph.
    """

    k: int
    n_below_k: int
    lower_bound: Fraction | None
    lower_bound_ceiling: int | None
    lower_bound_reason: str | None
    upper_bound: int | None
    upper_witness: VertexSet | None
    upper_bound_reason: str | None
    graph_degree_bound: int | None
    graph_parity_bound: int | None
    graph_bounds_reason: str | None


def degree_lower_bound(d: Digraph, k: int) -> Fraction | None:
    """(k + min_in) * n / (2*max_out + min_in + k), or None when the
    denominator is not positive (the bound is then inapplicable)."""
    s = degree_summary(d)
    denominator = 2 * s.max_out + s.min_in + k
    if denominator <= 0:
        return None
    return Fraction((k + s.min_in) * d.n, denominator)


def count_in_degree_below(d: Digraph, k: int) -> int:
    return sum(1 for v in range(d.n) if d.in_degree(v) < k)


def bipartite_upper_bound(d: Digraph, k: int) -> tuple[int, VertexSet] | None:
    """Constructive upper bound for bipartite digraphs: the complement of
    the larger partite side after dropping vertices of in-degree below
    max(k, 1) is a certified alliance.

    For k >= 1 the witness size is at most (n + n_below_k) / 2.  Dropping
    below-max(k, 1) rather than below-k also forces sources out of the kept
    side, which keeps the witness dominating when k <= 0.  Returns None on
    non-bipartite input.
    """
    coloring = underlying_two_coloring(d)
    if coloring is None:
        return None
    threshold = max(k, 1)
    keepable = [v for v in range(d.n) if d.in_degree(v) >= threshold]
    # Merge per-component bipartitions, always keeping the larger surviving
    # side (ties: the side of the component's lowest vertex id).
    component: list[int] = [-1] * d.n
    comp_count = 0
    adj: list[list[int]] = [[] for _ in range(d.n)]
    for u, v in d.underlying_edges():
        adj[u].append(v)
        adj[v].append(u)
    for start in range(d.n):
        if component[start] != -1:
            continue
        stack = [start]
        component[start] = comp_count
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if component[w] == -1:
                    component[w] = comp_count
                    stack.append(w)
        comp_count += 1
    kept: list[int] = []
    for c in range(comp_count):
        vertices = [v for v in range(d.n) if component[v] == c]
        anchor_color = coloring[vertices[0]]
        side_a = [v for v in vertices if coloring[v] == anchor_color and d.in_degree(v) >= threshold]
        side_b = [v for v in vertices if coloring[v] != anchor_color and d.in_degree(v) >= threshold]
        kept.extend(side_a if len(side_a) >= len(side_b) else side_b)
    removed = VertexSet(kept, d.n)
    witness = removed.complement()
    certificate = verify_goka(d, witness, k)
    if not certificate.is_goka:  # pragma: no cover - construction guarantees this
        raise RuntimeError("internal error: constructed bipartite witness failed certification")
    return len(witness), witness


def _graph_degrees(n: int, edge_list: Iterable[tuple[int, int]]) -> list[int]:
    degs = [0] * n
    seen = set()
    for u, v in edge_list:
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise ValueError(f"bad edge ({u}, {v}) for a simple graph on {n} vertices")
        e = (min(u, v), max(u, v))
        if e in seen:
            continue
        seen.add(e)
        degs[u] += 1
        degs[v] += 1
    return degs


def graph_degree_bound(n: int, edge_list: Iterable[tuple[int, int]], k: int) -> int:
    """ceil((k + min_deg) * n / (2*max_deg + min_deg + k)) for a simple graph."""
    if n == 0:
        return 0
    degs = _graph_degrees(n, edge_list)
    dmin, dmax = min(degs), max(degs)
    denominator = 2 * dmax + dmin + k
    if denominator <= 0:
        raise ValueError(f"bound undefined: non-positive denominator {denominator}")
    return math.ceil(Fraction((k + dmin) * n, denominator))


def graph_parity_bound(n: int, edge_list: Iterable[tuple[int, int]]) -> int:
    """Earlier k=1 lower bound that splits on the parity of the minimum degree.

    min_deg odd:  ceil((1 + min_deg) * n / (2*max_deg + min_deg + 1));
    min_deg even: ceil(n * min_deg / (2*max_deg + min_deg)), taken as 0 for
    edgeless-vertex graphs (min_deg = 0).
    """
    if n == 0:
        return 0
    degs = _graph_degrees(n, edge_list)
    dmin, dmax = min(degs), max(degs)
    if dmin % 2 == 1:
        return math.ceil(Fraction((1 + dmin) * n, 2 * dmax + dmin + 1))
    if dmin == 0:
        return 0
    return math.ceil(Fraction(n * dmin, 2 * dmax + dmin))


def bounds_report(d: Digraph, k: int) -> BoundsReport:
    lower = degree_lower_bound(d, k)
    lower_reason = None if lower is not None else "non-positive denominator in the degree bound"

    upper = bipartite_upper_bound(d, k)
    if upper is None:
        upper_value: int | None = None
        upper_witness: VertexSet | None = None
        upper_reason: str | None = "digraph is not bipartite"
    else:
        upper_value, upper_witness = upper
        upper_reason = None

    if d.is_symmetric():
        edges = d.underlying_edges()
        try:
            cor_value: int | None = graph_degree_bound(d.n, edges, k)
            graph_reason: str | None = None
        except ValueError as exc:
            cor_value = None
            graph_reason = str(exc)
        parity_value: int | None = graph_parity_bound(d.n, edges)
    else:
        cor_value = None
        parity_value = None
        graph_reason = "digraph is not a complete biorientation"

    return BoundsReport(
        k=k,
        n_below_k=count_in_degree_below(d, k),
        lower_bound=lower,
        lower_bound_ceiling=math.ceil(lower) if lower is not None else None,
        lower_bound_reason=lower_reason,
        upper_bound=upper_value,
        upper_witness=upper_witness,
        upper_bound_reason=upper_reason,
        graph_degree_bound=cor_value,
        graph_parity_bound=parity_value,
        graph_bounds_reason=graph_reason,
    )
