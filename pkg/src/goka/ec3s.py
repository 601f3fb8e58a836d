"""Exact cover by 3-sets (regular form) and its alliance-number reduction.

A regular instance has n elements (n a positive multiple of 3) and exactly
n three-element subsets, with every element occurring in exactly three of
them.  The reduction builds a bipartite digraph whose minimum global
offensive k-alliance has size n/3 + n(2k+5) exactly when an exact cover of
size n/3 exists.

Vertex id layout of the reduced digraph, in order: element vertices
0..n-1, set vertices n..2n-1, then the pendant sources of each element
vertex grouped by owner (k+2 each), then the pendant sources of each set
vertex grouped by owner (k+3 each).

Text format: line 1 holds n; the next n lines hold 3 element ids each.
Blank lines and ``#`` comments are ignored.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from typing import Iterable, Sequence

from .alliances import verify_goka
from .digraph import Digraph, VertexSet
from .io import FormatError, _data_lines, _int_fields


@dataclass(frozen=True)
class Ec3sInstance:
    n_elements: int
    sets: tuple[tuple[int, int, int], ...]


def make_instance(n_elements: int, triples: Iterable[Sequence[int]]) -> Ec3sInstance:
    return Ec3sInstance(n_elements, tuple(tuple(t) for t in triples))


def ec3s_failures(inst: Ec3sInstance) -> list[str]:
    """All reasons the instance violates the regular form."""
    problems: list[str] = []
    n = inst.n_elements
    if n <= 0 or n % 3 != 0:
        problems.append(f"element count {n} is not a positive multiple of 3")
    if len(inst.sets) != n:
        problems.append(f"expected exactly {n} sets, got {len(inst.sets)}")
    occurrences = [0] * max(n, 0)
    for idx, triple in enumerate(inst.sets):
        if len(triple) != 3 or len(set(triple)) != 3:
            problems.append(f"set {idx} is not a 3-element subset: {tuple(triple)}")
            continue
        for e in triple:
            if not (0 <= e < n):
                problems.append(f"set {idx} has element {e} outside [0, {n})")
            else:
                occurrences[e] += 1
    if not problems:
        for e, count in enumerate(occurrences):
            if count != 3:
                problems.append(f"element {e} occurs in {count} sets, expected 3")
    return problems


def validate_ec3s(inst: Ec3sInstance) -> bool:
    return not ec3s_failures(inst)


def exact_cover_exists(inst: Ec3sInstance) -> bool:
    """Exhaustive search for an exact cover of size n/3 over set-id
    combinations; independent of the alliance machinery."""
    n = inst.n_elements
    want = n // 3
    universe = frozenset(range(n))
    for combo in combinations(range(len(inst.sets)), want):
        union: set[int] = set()
        total = 0
        for idx in combo:
            union.update(inst.sets[idx])
            total += 3
        if total == n and union == universe:
            return True
    return False


def find_no_cover_instance(n_elements: int) -> Ec3sInstance | None:
    """First regular instance (in enumeration order) with no exact cover of
    size n/3, or None if every regular instance on n_elements has one."""
    if n_elements <= 0 or n_elements % 3 != 0:
        raise ValueError(f"element count {n_elements} is not a positive multiple of 3")
    triples = list(combinations(range(n_elements), 3))
    for combo in combinations_with_replacement(triples, n_elements):
        counts = [0] * n_elements
        for triple in combo:
            for e in triple:
                counts[e] += 1
        if any(c != 3 for c in counts):
            continue
        inst = Ec3sInstance(n_elements, combo)
        if not exact_cover_exists(inst):
            return inst
    return None


@dataclass(frozen=True)
class ReductionOutput:
    """The reduced digraph plus the bookkeeping needed to map back.

    ``pendants`` is indexed by core vertex id (element vertices first,
    then set vertices) and lists that vertex's pendant source ids.
    ``target`` is the alliance size equivalent to cover existence.
    """

    digraph: Digraph
    v_vertices: VertexSet
    u_vertices: VertexSet
    pendants: tuple[tuple[int, ...], ...]
    k: int
    target: int


def reduce_instance(inst: Ec3sInstance, k: int) -> ReductionOutput:
    """Build the bipartite alliance digraph for a regular instance, k >= 0."""
    problems = ec3s_failures(inst)
    if problems:
        raise ValueError("invalid instance: " + "; ".join(problems))
    if k < 0:
        raise ValueError(f"the reduction is defined for k >= 0, got {k}")
    n = inst.n_elements
    total = 2 * n + n * (2 * k + 5)
    arcs: list[tuple[int, int]] = []
    for j, triple in enumerate(inst.sets):
        u_id = n + j
        for e in triple:
            arcs.append((e, u_id))
            arcs.append((u_id, e))
    pendants: list[tuple[int, ...]] = []
    next_id = 2 * n
    for v_id in range(n):
        ids = tuple(range(next_id, next_id + k + 2))
        next_id += k + 2
        pendants.append(ids)
        arcs.extend((p, v_id) for p in ids)
    for j in range(n):
        ids = tuple(range(next_id, next_id + k + 3))
        next_id += k + 3
        pendants.append(ids)
        arcs.extend((p, n + j) for p in ids)
    assert next_id == total
    return ReductionOutput(
        digraph=Digraph(total, arcs),
        v_vertices=VertexSet(range(n), total),
        u_vertices=VertexSet(range(n, 2 * n), total),
        pendants=tuple(pendants),
        k=k,
        target=n // 3 + n * (2 * k + 5),
    )


def cover_to_alliance(out: ReductionOutput, cover: Sequence[int]) -> VertexSet:
    """Alliance of size ``target`` from an exact cover of size n/3: the
    chosen set vertices plus every pendant source."""
    n = len(out.v_vertices)
    if len(set(cover)) != len(cover):
        raise ValueError("cover contains repeated set ids")
    if len(cover) != n // 3:
        raise ValueError(f"cover has {len(cover)} sets, expected {n // 3}")
    covered: set[int] = set()
    total = 0
    for idx in cover:
        if not (0 <= idx < n):
            raise ValueError(f"set id {idx} outside [0, {n})")
        u_id = out.u_vertices.members[idx]
        covered.update(v for v in out.digraph.out_neighbors(u_id) if v in out.v_vertices)
        total += 3
    if covered != set(out.v_vertices) or total != n:
        raise ValueError("given sets do not form an exact cover")
    members = [out.u_vertices.members[idx] for idx in cover]
    for group in out.pendants:
        members.extend(group)
    s = VertexSet(members, out.digraph.n)
    assert len(s) == out.target
    if not verify_goka(out.digraph, s, out.k).is_goka:  # pragma: no cover
        raise RuntimeError("internal error: cover image failed certification")
    return s


def alliance_to_cover(out: ReductionOutput, s: VertexSet) -> list[int]:
    """Exact cover of size n/3 read off a certified alliance of size
    exactly ``target``: its set-vertex members."""
    if s.universe_size != out.digraph.n:
        raise ValueError("vertex set universe does not match the reduced digraph")
    if len(s) != out.target:
        raise ValueError(f"alliance has size {len(s)}, expected the target {out.target}")
    if not verify_goka(out.digraph, s, out.k).is_goka:
        raise ValueError("set is not a global offensive k-alliance of the reduced digraph")
    base = out.u_vertices.members[0]
    cover = sorted(v - base for v in s if v in out.u_vertices)
    covered: set[int] = set()
    for idx in cover:
        covered.update(
            v for v in out.digraph.out_neighbors(out.u_vertices.members[idx]) if v in out.v_vertices
        )
    if len(cover) * 3 != len(out.v_vertices) or covered != set(out.v_vertices):  # pragma: no cover
        raise RuntimeError("internal error: certified alliance did not induce an exact cover")
    return cover


def parse_ec3s(text: str) -> Ec3sInstance:
    lines = _data_lines(text)
    try:
        header_no, header = next(lines)
    except StopIteration:
        raise FormatError(1, "missing element-count header") from None
    (n,) = _int_fields(header_no, header, 1, "element count")
    if n < 0:
        raise FormatError(header_no, f"negative element count {n}")
    triples: list[tuple[int, int, int]] = []
    last_no = header_no
    for _ in range(n):
        try:
            line_no, fields = next(lines)
        except StopIteration:
            raise FormatError(last_no + 1, f"expected {n} set lines, found {len(triples)}") from None
        a, b, c = _int_fields(line_no, fields, 3, "set of 3 element ids")
        triples.append((a, b, c))
        last_no = line_no
    for line_no, _ in lines:
        raise FormatError(line_no, "trailing data after the last set")
    return Ec3sInstance(n, tuple(triples))


def format_ec3s(inst: Ec3sInstance) -> str:
    lines = [str(inst.n_elements)]
    lines.extend(" ".join(str(e) for e in triple) for triple in inst.sets)
    return "\n".join(lines) + "\n"
