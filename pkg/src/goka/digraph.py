"""Immutable digraph core: degrees, conversions, classification, reachability.

Vertices are dense integer ids 0..n-1.  Arcs are ordered pairs (u, v) with
u != v; the pair (u, v) and its opposite (v, u) may coexist, but loops and
duplicate arcs may not.  Everything here is a pure function of its inputs,
so instances can be shared freely between concurrent workers.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator


class DigraphError(ValueError):
    """Invalid digraph construction input (bad endpoint, loop, ...)."""


class UniverseMismatchError(ValueError):
    """A vertex set was used against a digraph with a different vertex count."""


class VertexSet:
    """Sorted, duplicate-free collection of vertex ids tied to a universe size."""

    __slots__ = ("members", "universe_size", "_lookup")

    def __init__(self, members: Iterable[int], universe_size: int) -> None:
        if universe_size < 0:
            raise ValueError(f"universe size must be non-negative, got {universe_size}")
        uniq = sorted(set(members))
        if uniq and not (0 <= uniq[0] and uniq[-1] < universe_size):
            bad = uniq[0] if uniq[0] < 0 else uniq[-1]
            raise ValueError(f"vertex id {bad} outside universe [0, {universe_size})")
        self.members: tuple[int, ...] = tuple(uniq)
        self.universe_size: int = universe_size
        self._lookup = frozenset(uniq)

    @classmethod
    def empty(cls, universe_size: int) -> VertexSet:
        return cls((), universe_size)

    @classmethod
    def full(cls, universe_size: int) -> VertexSet:
        return cls(range(universe_size), universe_size)

    def complement(self) -> VertexSet:
        return VertexSet(
            (v for v in range(self.universe_size) if v not in self._lookup),
            self.universe_size,
        )

    def mask(self) -> int:
        """Bitmask with bit v set for every member v."""
        m = 0
        for v in self.members:
            m |= 1 << v
        return m

    def __contains__(self, v: object) -> bool:
        return v in self._lookup

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VertexSet):
            return NotImplemented
        return self.members == other.members and self.universe_size == other.universe_size

    def __hash__(self) -> int:
        return hash((self.members, self.universe_size))

    def __repr__(self) -> str:
        return f"VertexSet({list(self.members)}, universe_size={self.universe_size})"


class Digraph:
    """Immutable digraph with O(1) degree queries.

    Arcs are deduplicated on construction; adjacency lists are sorted.
    ``in_mask[v]`` / ``out_mask[v]`` hold the neighborhoods as bitmasks,
    which the solver and cut computations lean on.
    """

    __slots__ = ("n", "arcs", "out_adj", "in_adj", "out_mask", "in_mask")

    def __init__(self, n: int, arc_list: Iterable[tuple[int, int]]) -> None:
        if n < 0:
            raise DigraphError(f"vertex count must be non-negative, got {n}")
        arcs = set()
        for arc in arc_list:
            u, v = arc
            if not (0 <= u < n) or not (0 <= v < n):
                raise DigraphError(f"arc ({u}, {v}) has an endpoint outside [0, {n})")
            if u == v:
                raise DigraphError(f"arc ({u}, {v}) is a loop")
            arcs.add((u, v))
        self.n = n
        self.arcs: frozenset[tuple[int, int]] = frozenset(arcs)
        out: list[list[int]] = [[] for _ in range(n)]
        inn: list[list[int]] = [[] for _ in range(n)]
        for u, v in arcs:
            out[u].append(v)
            inn[v].append(u)
        self.out_adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in out)
        self.in_adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in inn)
        om = [0] * n
        im = [0] * n
        for u, v in arcs:
            om[u] |= 1 << v
            im[v] |= 1 << u
        self.out_mask: tuple[int, ...] = tuple(om)
        self.in_mask: tuple[int, ...] = tuple(im)

    # ---- queries -----------------------------------------------------------

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise ValueError(f"vertex id {v} outside [0, {self.n})")

    def out_degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self.out_adj[v])

    def in_degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self.in_adj[v])

    def out_neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return self.out_adj[v]

    def in_neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return self.in_adj[v]

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    def arc_count(self) -> int:
        return len(self.arcs)

    def is_symmetric(self) -> bool:
        """True when every arc is matched by its opposite (a complete biorientation)."""
        return all((v, u) in self.arcs for u, v in self.arcs)

    def underlying_edges(self) -> list[tuple[int, int]]:
        """Edges of the underlying simple graph; opposite arc pairs collapse."""
        return sorted({(min(u, v), max(u, v)) for u, v in self.arcs})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and self.arcs == other.arcs

    def __hash__(self) -> int:
        return hash((self.n, self.arcs))

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, m={len(self.arcs)})"


@dataclass(frozen=True)
class DegreeSummary:
    """Degree extremes plus the full per-vertex degree tables."""

    min_in: int
    max_in: int
    min_out: int
    max_out: int
    in_degrees: tuple[int, ...]
    out_degrees: tuple[int, ...]


@dataclass(frozen=True)
class ClassReport:
    """Structural classification of a digraph.

    ``bipartite`` refers to the underlying simple graph.  ``rooted_tree``
    implies ``directed_tree`` implies ``connected``; ``root`` is set only
    when ``rooted_tree`` holds.
    """

    connected: bool
    bipartite: bool
    functional: bool
    contrafunctional: bool
    rooted_tree: bool
    root: int | None
    directed_tree: bool
    source_count: int
    sink_count: int


def degree_summary(d: Digraph) -> DegreeSummary:
    ins = tuple(len(a) for a in d.in_adj)
    outs = tuple(len(a) for a in d.out_adj)
    if d.n == 0:
        return DegreeSummary(0, 0, 0, 0, (), ())
    return DegreeSummary(min(ins), max(ins), min(outs), max(outs), ins, outs)


def converse(d: Digraph) -> Digraph:
    """Digraph with every arc reversed; an involution."""
    return Digraph(d.n, ((v, u) for u, v in d.arcs))


def bidirect(n: int, edge_list: Iterable[tuple[int, int]]) -> Digraph:
    """Complete biorientation: each undirected edge becomes an opposite arc pair."""
    arcs = []
    for u, v in edge_list:
        arcs.append((u, v))
        arcs.append((v, u))
    return Digraph(n, arcs)


def _underlying_adjacency(d: Digraph) -> list[set[int]]:
    adj: list[set[int]] = [set() for _ in range(d.n)]
    for u, v in d.arcs:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def underlying_two_coloring(d: Digraph) -> list[int] | None:
    """2-coloring of the underlying graph, or None if an odd cycle exists.

    The lowest-id vertex of each component gets color 0.
    """
    adj = _underlying_adjacency(d)
    color: list[int] = [-1] * d.n
    for start in range(d.n):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    return color


def classify(d: Digraph) -> ClassReport:
    n = d.n
    adj = _underlying_adjacency(d)
    if n == 0:
        connected = False
    else:
        seen = {0}
        queue = deque([0])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        connected = len(seen) == n

    ins = [len(a) for a in d.in_adj]
    outs = [len(a) for a in d.out_adj]
    sources = [v for v in range(n) if ins[v] == 0]
    sinks = [v for v in range(n) if outs[v] == 0]

    rooted = (
        connected
        and len(sources) == 1
        and all(ins[v] == 1 for v in range(n) if v != sources[0])
    )
    return ClassReport(
        connected=connected,
        bipartite=underlying_two_coloring(d) is not None,
        functional=all(deg == 1 for deg in outs),
        contrafunctional=all(deg == 1 for deg in ins),
        rooted_tree=rooted,
        root=sources[0] if rooted else None,
        directed_tree=connected and len(d.underlying_edges()) == n - 1,
        source_count=len(sources),
        sink_count=len(sinks),
    )


def _closure(start: int, adj: tuple[tuple[int, ...], ...]) -> list[int]:
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return sorted(seen)


def reachability(d: Digraph, x: int) -> tuple[VertexSet, VertexSet]:
    """(vertices reachable from x, vertices from which x is reachable); both include x."""
    d._check_vertex(x)
    forward = VertexSet(_closure(x, d.out_adj), d.n)
    backward = VertexSet(_closure(x, d.in_adj), d.n)
    return forward, backward


def cut_size(d: Digraph, a: VertexSet, b: VertexSet) -> int:
    """Number of arcs leaving ``a`` and entering ``b``."""
    if a.universe_size != d.n or b.universe_size != d.n:
        raise UniverseMismatchError(
            f"vertex sets over universes {a.universe_size}/{b.universe_size} "
            f"used with a digraph on {d.n} vertices"
        )
    b_mask = b.mask()
    return sum((d.out_mask[u] & b_mask).bit_count() for u in a)
