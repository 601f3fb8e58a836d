"""Scratch: exact-vs-naive stress + timing estimates for acceptance."""
import time

from goka import *
from goka.digraph import degree_summary
from goka.solver import min_goka_naive

t0 = time.monotonic()
mism = 0
for i in range(500):
    n = 1 + (i % 8)
    p = (0.2, 0.5, 0.8)[i % 3]
    d = random_family("digraph", n, 7000 + i, p)
    for k in (-1, 0, 1, 2):
        ex = min_goka_exact(d, k)
        na = min_goka_naive(d, k)
        if ex.value != na.value or ex.witness != na.witness:
            mism += 1
            print("MISMATCH", i, k, ex.value, na.value, list(ex.witness), list(na.witness))
print(f"oracle agreement 500x4: mismatches={mism} in {time.monotonic()-t0:.1f}s")

# sandwich timing: full paper range k solves
t0 = time.monotonic()
solves = 0
for i in range(500):
    n = 1 + (i % 8)
    p = (0.2, 0.5, 0.8)[i % 3]
    d = random_family("digraph", n, 7000 + i, p)
    ds = degree_summary(d)
    for k in range(2 - ds.max_in, ds.max_in + 1):
        r = min_goka_exact(d, k)
        solves += 1
        lb = degree_lower_bound(d, k)
        if lb is not None:
            import math
            assert math.ceil(lb) <= r.value, (i, k, lb, r.value)
        ub = bipartite_upper_bound(d, k)
        if ub is not None:
            assert r.value <= ub[0], (i, k, ub[0], r.value)
print(f"sandwich: {solves} solves in {time.monotonic()-t0:.1f}s")

# dominating vs goka1, trees
t0 = time.monotonic()
for i in range(100):
    n = 1 + (i % 10)
    d = random_family("rooted_tree", n, 8100 + i)
    g = min_dominating_exact(d)
    a = min_goka_exact(d, 1)
    assert g.value == a.value, (i, g.value, a.value)
for i in range(100):
    n = 2 + (i % 9)
    d = random_family("contrafunctional", n, 8200 + i)
    g = min_dominating_exact(d)
    a = min_goka_exact(d, 1)
    assert g.value == a.value, (i, g.value, a.value)
print(f"domination equality on trees+contrafunctional ok in {time.monotonic()-t0:.1f}s")

# functional construction corpus
t0 = time.monotonic()
for i in range(200):
    n = 2 + (i % 11)
    d = random_family("functional_connected", n, 8300 + i)
    rep = classify(d)
    assert rep.connected and rep.functional
    fd = construct_go1a_functional(d)
    assert verify_goka(d, fd.alliance, 1).is_goka
    bound = (d.n + rep.source_count + 1) // 2
    assert len(fd.alliance) <= bound, (i, len(fd.alliance), bound)
print(f"functional construction 200 ok in {time.monotonic()-t0:.1f}s")

# EC3S equivalence at n=6 incl. negative leg
t0 = time.monotonic()
neg = find_no_cover_instance(6)
print("no-cover instance:", neg, f"({time.monotonic()-t0:.1f}s search)")
if neg is not None:
    for k in (0, 1):
        out = reduce_instance(neg, k)
        r = min_goka_exact(out.digraph, k)
        print(f"  k={k}: gamma={r.value} target={out.target} (expect >)", r.value > out.target)

inst = Ec3sInstance(3, ((0, 1, 2),) * 3)
for k in (0, 1):
    out = reduce_instance(inst, k)
    t1 = time.monotonic()
    r = min_goka_exact(out.digraph, k)
    print(f"smallest k={k}: value={r.value} nodes={r.nodes_explored} {time.monotonic()-t1:.2f}s")
    print("  cover:", alliance_to_cover(out, r.witness))

# timeout path
big = random_family("digraph", 20, 99, 0.2)
r = min_goka_exact(big, 1, time_limit=0.0)
print("timeout path: optimal", r.optimal, "value", r.value, "certified",
      verify_goka(big, r.witness, 1).is_goka, "lb", r.lower_bound)

# greedy contracts
for i in range(50):
    n = 1 + (i % 8)
    d = random_family("digraph", n, 9000 + i, 0.5)
    for k in (0, 1, 2):
        g = greedy_goka(d, k)
        assert verify_goka(d, g.witness, k).is_goka
        assert g.value >= min_goka_exact(d, k).value
print("greedy ok")
p3 = Digraph(3, [(0, 1), (1, 2)])
print("greedy P3 k=1:", greedy_goka(p3, 1).value, list(greedy_goka(p3, 1).witness))
d, w = gen_tight_cycle(5)
print("greedy tight5:", greedy_goka(d, 1).value)
dd = gen_cycle_with_tails(4, [0, 0, 0, 0])
print("greedy tails:", greedy_goka(dd, 1).value)
