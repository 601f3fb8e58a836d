"""Structured digraph families and the constructive alliance algorithm for
connected functional digraphs.

The "tight" family collects the digraphs meeting the degree lower bound
with equality at k = 1: a base digraph on a v-part and a u-part (conditions
checked by :func:`tightness_failures`) completed by a regular bundle of
u-to-v arcs.  Membership is certified against a supplied decomposition
witness; searching for a witness is out of scope.
"""
from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass

from .alliances import verify_goka
from .digraph import Digraph, VertexSet, classify

TERMINAL_CYCLE = "cycle"
TERMINAL_HEIGHT_ONE_EMPTY = "height-one-empty"
TERMINAL_HEIGHT_ONE_PATHS = "height-one-paths"

FAMILY_KINDS = (
    "digraph",
    "rooted_tree",
    "contrafunctional",
    "functional_connected",
    "directed_tree",
    "bipartite",
)


@dataclass(frozen=True)
class TightnessWitness:
    """Decomposition data certifying membership in the tight family.

    ``base_digraph`` is the input digraph with every u-to-v arc deleted;
    ``r_prime`` is the common in-degree of the v-part within itself and
    ``r`` the number of arcs re-added from each u-vertex.
    """

    v_part: VertexSet
    u_part: VertexSet
    r_prime: int
    r: int
    base_digraph: Digraph


@dataclass(frozen=True)
class PeelStep:
    """One peeling round: a deepest source, its out-neighbor, and the
    closed in-neighborhood removed with that out-neighbor."""

    source: int
    target: int
    removed: VertexSet


@dataclass(frozen=True)
class FunctionalDecomposition:
    """Trace of the constructive algorithm on a connected functional digraph.

    ``cycle`` lists the unique cycle in arc order starting at its lowest
    id.  The sources, the peel removals and the terminal remainder
    partition the vertex set.  ``alliance`` is a certified global
    offensive 1-alliance of size at most floor((n + sources + 1) / 2).
    """

    cycle: tuple[int, ...]
    sources: VertexSet
    peel_steps: tuple[PeelStep, ...]
    terminal_case: str
    alliance: VertexSet


# ---- tight family ----------------------------------------------------------


def gen_tight_cycle(t: int) -> tuple[Digraph, TightnessWitness]:
    """Tight-family instance built on the bioriented t-cycle, t >= 5.

    Three extra vertices are out-joined to the whole cycle and receive
    arcs back from the first five cycle vertices.  The witness has
    parameters (n', p, r', r) = (t, 3, 2, t).
    """
    if t < 5:
        raise ValueError(f"cycle length must be at least 5, got {t}")
    n = t + 3
    u_ids = (t, t + 1, t + 2)
    arcs: list[tuple[int, int]] = []
    for j in range(t):
        arcs.append((j, (j + 1) % t))
        arcs.append(((j + 1) % t, j))
    for u in u_ids:
        for j in range(t):
            arcs.append((u, j))
    for j in range(5):
        for u in u_ids:
            arcs.append((j, u))
    d = Digraph(n, arcs)
    base = Digraph(n, [a for a in arcs if a[0] not in u_ids])
    witness = TightnessWitness(
        v_part=VertexSet(range(t), n),
        u_part=VertexSet(u_ids, n),
        r_prime=2,
        r=t,
        base_digraph=base,
    )
    return d, witness


def tightness_failures(d: Digraph, w: TightnessWitness) -> list[str]:
    """All reasons the witness fails to certify tight-family membership."""
    problems: list[str] = []
    if w.v_part.universe_size != d.n or w.u_part.universe_size != d.n:
        return [f"witness universe does not match digraph on {d.n} vertices"]
    if w.base_digraph.n != d.n:
        return [f"base digraph has {w.base_digraph.n} vertices, expected {d.n}"]
    v_set, u_set = set(w.v_part), set(w.u_part)
    if v_set & u_set:
        problems.append("v-part and u-part overlap")
    if len(v_set) + len(u_set) != d.n:
        problems.append("v-part and u-part do not partition the vertex set")
    if not v_set or not u_set:
        problems.append("both parts must be non-empty")
    if problems:
        return problems

    n_prime, p = len(v_set), len(u_set)
    bundle = {(u, v) for (u, v) in d.arcs if u in u_set and v in v_set}
    expected_base = d.arcs - bundle
    if w.base_digraph.arcs != expected_base:
        problems.append("base digraph is not the input minus the u-to-v arcs")
        return problems
    base = w.base_digraph

    if (w.r_prime + 1) * n_prime % p != 0:
        problems.append(f"(r'+1)*n' = {(w.r_prime + 1) * n_prime} is not divisible by p = {p}")
    elif w.r != (w.r_prime + 1) * n_prime // p:
        problems.append(f"r = {w.r} differs from (r'+1)*n'/p = {(w.r_prime + 1) * n_prime // p}")
    for v in w.v_part:
        if base.out_degree(v) > w.r:
            problems.append(f"v-vertex {v} has base out-degree {base.out_degree(v)} > r = {w.r}")
    for v in w.v_part:
        internal = sum(1 for x in base.in_neighbors(v) if x in v_set)
        if internal != w.r_prime:
            problems.append(
                f"v-vertex {v} has in-degree {internal} within the v-part, expected {w.r_prime}"
            )
    for u in w.u_part:
        if base.out_degree(u) != 0:
            problems.append(f"u-vertex {u} has base out-degree {base.out_degree(u)} != 0")
        if base.in_degree(u) < 2 * w.r_prime + 1:
            problems.append(
                f"u-vertex {u} has base in-degree {base.in_degree(u)} < 2r'+1 = {2 * w.r_prime + 1}"
            )
    for u in w.u_part:
        added = sum(1 for x in d.out_neighbors(u) if x in v_set)
        if added != w.r:
            problems.append(f"u-vertex {u} sends {added} arcs into the v-part, expected r = {w.r}")
    for v in w.v_part:
        received = sum(1 for x in d.in_neighbors(v) if x in u_set)
        if received != w.r_prime + 1:
            problems.append(
                f"v-vertex {v} receives {received} arcs from the u-part, expected r'+1 = {w.r_prime + 1}"
            )
    return problems


def certify_tightness(d: Digraph, w: TightnessWitness) -> bool:
    return not tightness_failures(d, w)


# ---- bipartite sharpness ---------------------------------------------------


def gen_bipartite_sharpness(k: int, p: int) -> Digraph:
    """Sharpness instance for the bipartite upper bound.

    The complete biorientation of the balanced complete bipartite graph on
    p + p vertices, minus the bidirected k-by-k block; requires
    k <= p <= 2k - 1 and k >= 1.  Exactly 2k vertices end with in-degree
    below k.
    """
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    if not (k <= p <= 2 * k - 1):
        raise ValueError(f"p must satisfy k <= p <= 2k-1, got k={k}, p={p}")
    arcs = []
    for i in range(p):
        for j in range(p):
            if i < k and j < k:
                continue
            arcs.append((i, p + j))
            arcs.append((p + j, i))
    return Digraph(2 * p, arcs)


# ---- functional digraphs ---------------------------------------------------


def gen_cycle_with_tails(cycle_len: int, tail_halflengths: list[int]) -> Digraph:
    """Directed cycle with one odd directed in-path per cycle vertex.

    Cycle vertex i receives a path of 2*tail_halflengths[i] + 1 vertices.
    The result is connected functional with exactly ``cycle_len`` sources
    and meets the functional alliance bound with equality.
    """
    if cycle_len < 2:
        raise ValueError("cycle length must be at least 2 (a 1-cycle would be a loop)")
    if len(tail_halflengths) != cycle_len:
        raise ValueError(f"need {cycle_len} tail lengths, got {len(tail_halflengths)}")
    if any(h < 0 for h in tail_halflengths):
        raise ValueError("tail half-lengths must be non-negative")
    arcs = [(i, (i + 1) % cycle_len) for i in range(cycle_len)]
    next_id = cycle_len
    for i, h in enumerate(tail_halflengths):
        length = 2 * h + 1
        path = list(range(next_id, next_id + length))
        next_id += length
        for a, b in zip(path, path[1:]):
            arcs.append((a, b))
        arcs.append((path[-1], i))
    return Digraph(next_id, arcs)


def gen_gap_cycle(b: int) -> Digraph:
    """Directed 2b-cycle with one pendant source per cycle vertex.

    The alliance number exceeds the domination number by exactly b.
    """
    if b < 1:
        raise ValueError(f"b must be positive, got {b}")
    arcs = [(i, (i + 1) % (2 * b)) for i in range(2 * b)]
    arcs.extend((2 * b + i, i) for i in range(2 * b))
    return Digraph(4 * b, arcs)


def gen_gap_tree(b: int) -> Digraph:
    """The gap cycle with the closing arc removed: a directed tree with the
    same alliance-minus-domination gap of b."""
    base = gen_gap_cycle(b)
    return Digraph(base.n, base.arcs - {(2 * b - 1, 0)})


def construct_go1a_functional(d: Digraph) -> FunctionalDecomposition:
    """Constructive global offensive 1-alliance for a connected functional
    digraph, of size at most floor((n + sources + 1) / 2).

    Walks the out-pointers to locate the unique cycle, removes the sources,
    then repeatedly picks a deepest source of the remainder (ties: lowest
    id), and deletes the closed in-neighborhood of its out-neighbor while
    collecting that out-neighbor.  The terminal remainder is the bare
    cycle or has height one; the alliance is completed accordingly with
    alternate cycle vertices, the whole cycle, or the pointed-at cycle
    vertices plus every second vertex of the leftover paths.
    """
    report = classify(d)
    if not (report.connected and report.functional):
        raise ValueError("construction requires a connected functional digraph")

    succ = [d.out_adj[v][0] for v in range(d.n)]
    order_index: dict[int, int] = {}
    walk: list[int] = []
    v = 0
    while v not in order_index:
        order_index[v] = len(walk)
        walk.append(v)
        v = succ[v]
    cycle_walk = walk[order_index[v]:]
    rot = cycle_walk.index(min(cycle_walk))
    cycle = tuple(cycle_walk[rot:] + cycle_walk[:rot])
    cycle_set = set(cycle)

    sources = [u for u in range(d.n) if d.in_degree(u) == 0]
    active = set(range(d.n)) - set(sources)

    depth = {c: 0 for c in cycle}
    queue = deque(cycle)
    while queue:
        u = queue.popleft()
        for w in d.in_neighbors(u):
            if w in active and w not in depth:
                depth[w] = depth[u] + 1
                queue.append(w)

    peel: list[PeelStep] = []
    members = set(sources)
    while True:
        height = max(depth[u] for u in active)
        if height <= 1:
            break
        deepest = min(u for u in active if depth[u] == height)
        target = succ[deepest]
        removed = sorted({target} | {w for w in d.in_neighbors(target) if w in active})
        active -= set(removed)
        peel.append(PeelStep(deepest, target, VertexSet(removed, d.n)))
        members.add(target)

    off_cycle = sorted(active - cycle_set)
    if not off_cycle:
        terminal = TERMINAL_CYCLE
        members.update(cycle[j] for j in range(0, len(cycle), 2))
    else:
        pointed = {succ[u] for u in off_cycle}
        leftover = [c for c in cycle if c not in pointed]
        if not leftover:
            terminal = TERMINAL_HEIGHT_ONE_EMPTY
            members.update(cycle_set)
        else:
            terminal = TERMINAL_HEIGHT_ONE_PATHS
            members.update(pointed)
            m = len(cycle)
            leftover_set = set(leftover)
            for j, c in enumerate(cycle):
                if c in leftover_set and cycle[(j - 1) % m] not in leftover_set:
                    run: list[int] = []
                    jj = j
                    while cycle[jj % m] in leftover_set:
                        run.append(cycle[jj % m])
                        jj += 1
                    members.update(run[1::2])

    alliance = VertexSet(members, d.n)
    if not verify_goka(d, alliance, 1).is_goka:  # pragma: no cover - construction guarantees this
        raise RuntimeError("internal error: constructed set failed certification")
    return FunctionalDecomposition(
        cycle=cycle,
        sources=VertexSet(sources, d.n),
        peel_steps=tuple(peel),
        terminal_case=terminal,
        alliance=alliance,
    )


# ---- seeded random corpus --------------------------------------------------


def random_family(kind: str, n: int, seed: int, density: float = 0.3) -> Digraph:
    """Seeded random instance of one structural class.

    ``kind`` is one of FAMILY_KINDS.  All randomness flows from ``seed``;
    identical arguments give identical digraphs.  ``density`` only affects
    the unconstrained kinds (digraph, bipartite).
    """
    if n < 1:
        raise ValueError(f"need at least one vertex, got n={n}")
    rng = random.Random(seed)

    if kind == "digraph":
        arcs = [
            (u, v)
            for u in range(n)
            for v in range(n)
            if u != v and rng.random() < density
        ]
        return Digraph(n, arcs)

    if kind == "rooted_tree":
        parents = [rng.randrange(i) for i in range(1, n)]
        perm = list(range(n))
        rng.shuffle(perm)
        return Digraph(n, [(perm[parents[i - 1]], perm[i]) for i in range(1, n)])

    if kind == "contrafunctional":
        if n < 2:
            raise ValueError("a loop-free contrafunctional digraph needs n >= 2")
        arcs = []
        for v in range(n):
            u = rng.randrange(n - 1)
            if u >= v:
                u += 1
            arcs.append((u, v))
        return Digraph(n, arcs)

    if kind == "functional_connected":
        if n < 2:
            raise ValueError("a loop-free functional digraph needs n >= 2")
        cycle_len = rng.randint(2, n)
        arcs = [(i, (i + 1) % cycle_len) for i in range(cycle_len)]
        arcs.extend((v, rng.randrange(v)) for v in range(cycle_len, n))
        perm = list(range(n))
        rng.shuffle(perm)
        return Digraph(n, [(perm[u], perm[v]) for u, v in arcs])

    if kind == "directed_tree":
        arcs = []
        for i in range(1, n):
            p = rng.randrange(i)
            arcs.append((p, i) if rng.random() < 0.5 else (i, p))
        perm = list(range(n))
        rng.shuffle(perm)
        return Digraph(n, [(perm[u], perm[v]) for u, v in arcs])

    if kind == "bipartite":
        if n == 1:
            return Digraph(1, [])
        left_size = rng.randint(1, n - 1)
        arcs = []
        for u in range(left_size):
            for v in range(left_size, n):
                if rng.random() < density:
                    arcs.append((u, v))
                if rng.random() < density:
                    arcs.append((v, u))
        perm = list(range(n))
        rng.shuffle(perm)
        return Digraph(n, [(perm[u], perm[v]) for u, v in arcs])

    raise ValueError(f"unknown family kind {kind!r}; expected one of {FAMILY_KINDS}")
