"""Exact and heuristic solvers for minimum alliances and dominating sets.

The exact engine is a branch-and-bound over vertex ids in ascending order,
exploring the in-branch before the out-branch and accepting only strict
improvements.  Same-cardinality solutions are therefore met in
lexicographic order of their sorted member lists, so the witness returned
is the lexicographically least optimum, deterministically.

Pruning:
  * vertices of in-degree 0, and (for alliances) of in-degree below k, are
    forced into the set up front;
  * a branch dies when some decided-out vertex can no longer be satisfied
    even if every undecided in-neighbor joins the set;
  * a branch dies when the set built so far plus a residual requirement
    count (disjoint-helper margin deficits, floored globally by the degree
    lower bound) cannot beat the incumbent.

The same engine solves the domination number by dropping the margin
condition.
"""
from __future__ import annotations

import math
import time
from dataclasses import dataclass

from .bounds import degree_lower_bound
from .digraph import Digraph, VertexSet

NAIVE_VERTEX_LIMIT = 24

METHOD_EXACT = "exact"
METHOD_NAIVE = "naive"
METHOD_GREEDY = "greedy"


@dataclass(frozen=True)
class SolveResult:
    """Outcome of one solve.

    ``value`` equals ``len(witness)``.  ``forced_prefix`` lists vertices
    proven to belong to every feasible set.  When ``optimal`` is False the
    value is an upper bound only (time limit hit, or greedy method) and
    ``lower_bound`` gives the best proven lower bound; when True the
    bracket collapses to [value, value].
    """

    value: int
    witness: VertexSet
    nodes_explored: int
    forced_prefix: VertexSet
    method: str
    optimal: bool
    lower_bound: int


class _Timeout(Exception):
    pass


def _forced_vertices(d: Digraph, k: int, require_margin: bool) -> list[int]:
    forced = []
    for v in range(d.n):
        deg = d.in_degree(v)
        if deg == 0 or (require_margin and deg < k):
            forced.append(v)
    return forced


def _mask_to_vertexset(mask: int, n: int) -> VertexSet:
    return VertexSet((v for v in range(n) if mask >> v & 1), n)


def _solve_exact(
    d: Digraph, k: int, require_margin: bool, time_limit: float | None
) -> tuple[int, int, int, list[int], bool, int]:
    """Returns (best_value, best_mask, nodes, forced, optimal, lower_bound)."""
    n = d.n
    in_mask = d.in_mask
    out_adj = d.out_adj
    in_deg = [len(a) for a in d.in_adj]

    forced = _forced_vertices(d, k, require_margin)
    forced_mask = 0
    for v in forced:
        forced_mask |= 1 << v
    branch = [v for v in range(n) if not (forced_mask >> v & 1)]

    root_lb = max(1, len(forced))
    if require_margin:
        frac = degree_lower_bound(d, k)
        if frac is not None:
            root_lb = max(root_lb, math.ceil(frac))

    # suffix_und[i] = bitmask of branch vertices not yet decided at depth i
    suffix_und = [0] * (len(branch) + 1)
    for i in range(len(branch) - 1, -1, -1):
        suffix_und[i] = suffix_und[i + 1] | (1 << branch[i])

    deadline = time.monotonic() + time_limit if time_limit is not None else None

    best_value = n + 1
    best_mask = 0
    have_incumbent = False
    nodes = 0

    def satisfiable(w: int, s_mask: int, o_mask: int, und: int) -> bool:
        iw = in_mask[w]
        a = (iw & s_mask).bit_count()
        u = (iw & und).bit_count()
        if a + u == 0:
            return False
        if require_margin:
            b = in_deg[w] - a - u
            if a + u < b + k:
                return False
        return True

    def residual_need(out_list: list[int], s_mask: int, o_mask: int, und: int) -> int:
        need = 0
        claimed = 0
        for w in out_list:
            iw = in_mask[w]
            a = (iw & s_mask).bit_count()
            helpers = iw & und
            deficit = 1 if a == 0 else 0
            if require_margin:
                u = helpers.bit_count()
                b = in_deg[w] - a - u
                deficit = max(deficit, (b + u + k - a + 1) // 2)
            if deficit > 0 and not (helpers & claimed):
                need += deficit
                claimed |= helpers
        return need

    def dfs(idx: int, s_mask: int, o_mask: int, out_list: list[int]) -> None:
        nonlocal best_value, best_mask, have_incumbent, nodes
        nodes += 1
        if deadline is not None and time.monotonic() > deadline:
            raise _Timeout
        if have_incumbent:
            und = suffix_und[idx]
            lb = max(s_mask.bit_count() + residual_need(out_list, s_mask, o_mask, und), root_lb)
            if lb >= best_value:
                return
        if idx == len(branch):
            size = s_mask.bit_count()
            if not have_incumbent or size < best_value:
                best_value = size
                best_mask = s_mask
                have_incumbent = True
            return
        v = branch[idx]
        dfs(idx + 1, s_mask | (1 << v), o_mask, out_list)
        new_o = o_mask | (1 << v)
        und = suffix_und[idx + 1]
        if not satisfiable(v, s_mask, new_o, und):
            return
        for w in out_adj[v]:
            if new_o >> w & 1 and not satisfiable(w, s_mask, new_o, und):
                return
        out_list.append(v)
        dfs(idx + 1, s_mask, new_o, out_list)
        out_list.pop()

    optimal = True
    try:
        dfs(0, forced_mask, 0, [])
    except _Timeout:
        optimal = False
        if not have_incumbent:
            # the full vertex set is always feasible
            best_value = n
            best_mask = (1 << n) - 1
            have_incumbent = True

    lower_bound = best_value if optimal else min(root_lb, best_value)
    return best_value, best_mask, nodes, forced, optimal, lower_bound


def min_goka_exact(d: Digraph, k: int, time_limit: float | None = None) -> SolveResult:
    """Minimum global offensive k-alliance, exactly.

    With a time limit, the incumbent found so far is returned with
    ``optimal=False`` instead of raising; the witness is still a valid
    alliance.
    """
    if d.n == 0:
        raise ValueError("solver requires at least one vertex")
    value, mask, nodes, forced, optimal, lb = _solve_exact(d, k, True, time_limit)
    return SolveResult(
        value=value,
        witness=_mask_to_vertexset(mask, d.n),
        nodes_explored=nodes,
        forced_prefix=VertexSet(forced, d.n),
        method=METHOD_EXACT,
        optimal=optimal,
        lower_bound=lb,
    )


def min_dominating_exact(d: Digraph, time_limit: float | None = None) -> SolveResult:
    """Minimum dominating set, exactly (same engine, margin dropped)."""
    if d.n == 0:
        raise ValueError("solver requires at least one vertex")
    value, mask, nodes, forced, optimal, lb = _solve_exact(d, 0, False, time_limit)
    return SolveResult(
        value=value,
        witness=_mask_to_vertexset(mask, d.n),
        nodes_explored=nodes,
        forced_prefix=VertexSet(forced, d.n),
        method=METHOD_EXACT,
        optimal=optimal,
        lower_bound=lb,
    )


def _qualifies(d: Digraph, s_mask: int, k: int, require_margin: bool) -> bool:
    for v in range(d.n):
        if s_mask >> v & 1:
            continue
        a = (d.in_mask[v] & s_mask).bit_count()
        if a == 0:
            return False
        if require_margin and a < d.in_degree(v) - a + k:
            return False
    return True


def min_goka_naive(d: Digraph, k: int) -> SolveResult:
    """Exhaustive oracle: scan all 2^n subsets in (cardinality, lex) order.

    Guarded to n <= 24; meant for cross-checking the pruned solver, not
    for production use.
    """
    from itertools import combinations

    if d.n == 0:
        raise ValueError("solver requires at least one vertex")
    if d.n > NAIVE_VERTEX_LIMIT:
        raise ValueError(f"refusing naive scan for n={d.n} > {NAIVE_VERTEX_LIMIT}")
    forced = _forced_vertices(d, k, True)
    examined = 0
    for r in range(d.n + 1):
        for combo in combinations(range(d.n), r):
            examined += 1
            mask = 0
            for v in combo:
                mask |= 1 << v
            if _qualifies(d, mask, k, True):
                return SolveResult(
                    value=r,
                    witness=VertexSet(combo, d.n),
                    nodes_explored=examined,
                    forced_prefix=VertexSet(forced, d.n),
                    method=METHOD_NAIVE,
                    optimal=True,
                    lower_bound=r,
                )
    raise AssertionError("unreachable: the full vertex set always qualifies")


def greedy_goka(d: Digraph, k: int) -> SolveResult:
    """Greedy upper-bound heuristic.

    Starts from the forced vertices, then repeatedly adds the vertex that
    fixes the most failing outside vertices (ties to the lowest id).
    Adding a vertex never breaks a satisfied one, so this terminates with
    a certified alliance; ``nodes_explored`` counts vertices added.
    """
    if d.n == 0:
        raise ValueError("solver requires at least one vertex")
    forced = _forced_vertices(d, k, True)
    s_mask = 0
    for v in forced:
        s_mask |= 1 << v

    def failing_count(mask: int) -> int:
        count = 0
        for v in range(d.n):
            if mask >> v & 1:
                continue
            a = (d.in_mask[v] & mask).bit_count()
            if a == 0 or a < d.in_degree(v) - a + k:
                count += 1
        return count

    additions = 0
    current = failing_count(s_mask)
    while current:
        best_u = -1
        best_gain = -1
        for u in range(d.n):
            if s_mask >> u & 1:
                continue
            gain = current - failing_count(s_mask | (1 << u))
            if gain > best_gain:
                best_gain = gain
                best_u = u
        s_mask |= 1 << best_u
        additions += 1
        current = failing_count(s_mask)

    witness = _mask_to_vertexset(s_mask, d.n)
    return SolveResult(
        value=len(witness),
        witness=witness,
        nodes_explored=additions,
        forced_prefix=VertexSet(forced, d.n),
        method=METHOD_GREEDY,
        optimal=False,
        lower_bound=max(1, len(forced)),
    )
