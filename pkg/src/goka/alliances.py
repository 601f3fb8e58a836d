"""Verification of dominating sets and global offensive k-alliances.

A set S dominates a digraph when every vertex outside S has an in-neighbor
in S (equivalently, the closed out-neighborhood of S is the whole vertex
set).  S is a global offensive k-alliance (GOkA) when it dominates and
every outside vertex has at least k more in-neighbors inside S than
outside.  Verification returns a per-vertex audit certificate rather than
a bare flag, so failed checks double as debugging artifacts.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .digraph import Digraph, UniverseMismatchError, VertexSet, degree_summary

REASON_NOT_DOMINATED = "not-dominated"
REASON_MARGIN = "margin"


@dataclass(frozen=True)
class Violation:
    """One outside vertex failing a GOkA condition.

    ``in_from_set`` / ``in_from_outside`` are the vertex's in-degree from S
    and from its complement.  ``reason`` is ``not-dominated`` when the
    vertex has no in-neighbor in S at all, else ``margin``.
    """

    vertex: int
    in_from_set: int
    in_from_outside: int
    reason: str


@dataclass(frozen=True)
class AllianceCertificate:
    k: int
    vertex_set: VertexSet
    is_dominating: bool
    is_goka: bool
    violations: tuple[Violation, ...]
    k_in_paper_range: bool


def _check_universe(d: Digraph, s: VertexSet) -> None:
    if s.universe_size != d.n:
        raise UniverseMismatchError(
            f"vertex set over universe {s.universe_size} used with a digraph on {d.n} vertices"
        )


def is_dominating(d: Digraph, s: VertexSet) -> bool:
    """True iff every vertex outside ``s`` has an in-neighbor in ``s``."""
    _check_universe(d, s)
    s_mask = s.mask()
    return all(
        d.in_mask[v] & s_mask for v in range(d.n) if v not in s
    )


def verify_goka(d: Digraph, s: VertexSet, k: int) -> AllianceCertificate:
    """Audit ``s`` as a global offensive k-alliance in ``d``.

    Any integer k is accepted; ``k_in_paper_range`` records whether k lies
    in {2 - max_in_degree, ..., max_in_degree}, the interval where the
    parameter is usually studied.  The violation list is exhaustive.
    """
    _check_universe(d, s)
    s_mask = s.mask()
    violations: list[Violation] = []
    dominating = True
    for v in range(d.n):
        if v in s:
            continue
        inside = (d.in_mask[v] & s_mask).bit_count()
        outside = d.in_degree(v) - inside
        if inside == 0:
            dominating = False
            violations.append(Violation(v, inside, outside, REASON_NOT_DOMINATED))
        elif inside < outside + k:
            violations.append(Violation(v, inside, outside, REASON_MARGIN))
    max_in = degree_summary(d).max_in
    return AllianceCertificate(
        k=k,
        vertex_set=s,
        is_dominating=dominating,
        is_goka=not violations,
        violations=tuple(violations),
        k_in_paper_range=2 - max_in <= k <= max_in,
    )


def verify_goka_undirected(
    n: int, edge_list: Iterable[tuple[int, int]], members: Sequence[int], k: int
) -> bool:
    """Graph-side GOkA check on a simple undirected graph.

    Uses plain neighborhoods: every vertex outside the set needs a neighbor
    inside, and at least k more neighbors inside than outside.  Exists to
    cross-validate the digraph verifier on complete biorientations.
    """
    neighbors: list[set[int]] = [set() for _ in range(n)]
    for u, v in edge_list:
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise ValueError(f"bad edge ({u}, {v}) for a simple graph on {n} vertices")
        neighbors[u].add(v)
        neighbors[v].add(u)
    chosen = set(members)
    for v in range(n):
        if v in chosen:
            continue
        inside = len(neighbors[v] & chosen)
        outside = len(neighbors[v]) - inside
        if inside == 0 or inside < outside + k:
            return False
    return True
