"""Scratch: derive expected values by brute force before freezing tests."""
from itertools import combinations

from goka import *
from goka.digraph import degree_summary
from goka.solver import min_goka_naive


def brute_min_dominating(d):
    for r in range(d.n + 1):
        for combo in combinations(range(d.n), r):
            s = VertexSet(combo, d.n)
            if is_dominating(d, s):
                return r, list(combo)
    raise AssertionError


def brute_min_goka(d, k):
    for r in range(d.n + 1):
        for combo in combinations(range(d.n), r):
            s = VertexSet(combo, d.n)
            if verify_goka(d, s, k).is_goka:
                return r, list(combo)
    raise AssertionError


p3 = Digraph(3, [(0, 1), (1, 2)])
print("P3 gamma1o:", brute_min_goka(p3, 1))
print("P3 gamma0o:", brute_min_goka(p3, 0))
print("P3 gamma:", brute_min_dominating(p3))

c4 = Digraph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
print("C4dir gamma:", brute_min_dominating(c4), " gamma1o:", brute_min_goka(c4, 1))

# tight-family example t=5,6,7
for t in (5, 6, 7):
    d, w = gen_tight_cycle(t)
    ds = degree_summary(d)
    print(f"tight t={t}: n={d.n} m={len(d.arcs)} min_in={ds.min_in} max_in={ds.max_in} "
          f"min_out={ds.min_out} max_out={ds.max_out}")
    print("   certify:", certify_tightness(d, w))
    print("   lower bound:", degree_lower_bound(d, 1))
    print("   gamma1o:", brute_min_goka(d, 1))

d5, w5 = gen_tight_cycle(5)
print("tight t=5 cut u->rest:", cut_size(d5, w5.u_part, w5.u_part.complement()))
print("tight t=5 verify u_part k=1:", verify_goka(d5, w5.u_part, 1).is_goka)

# converse degree swap check
conv = converse(d5)
ds, dsc = degree_summary(d5), degree_summary(conv)
print("converse swaps tables:", ds.in_degrees == dsc.out_degrees, ds.out_degrees == dsc.in_degrees)

# bipartite sharpness
for kk, pp in ((2, 3), (1, 1)):
    d = gen_bipartite_sharpness(kk, pp)
    ds = degree_summary(d)
    print(f"sharp k={kk} p={pp}: n={d.n} m={len(d.arcs)} min_in={ds.min_in} max_in={ds.max_in} "
          f"max_out={ds.max_out} n_below_k={sum(1 for v in range(d.n) if d.in_degree(v) < kk)}")
    print("   exact:", brute_min_goka(d, kk))
    print("   lower:", degree_lower_bound(d, kk), " upper:", bipartite_upper_bound(d, kk))

# cycle with tails
d = gen_cycle_with_tails(4, [0, 0, 0, 0])
rep = classify(d)
print("tails(4,0000): n", d.n, "q", rep.source_count, "functional", rep.functional,
      "contrafunctional", rep.contrafunctional)
print("   exact gamma1o:", brute_min_goka(d, 1))
fd = construct_go1a_functional(d)
print("   construct:", fd.terminal_case, list(fd.alliance), len(fd.alliance))
r, rinv = reachability(d, 0)
print("   reach(0):", list(r), list(rinv))

d = gen_cycle_with_tails(3, [1, 0, 0])
print("tails(3,[1,0,0]): n", d.n, "q", classify(d).source_count)

# gap families
for b in (1, 2, 3):
    dc = gen_gap_cycle(b)
    dt = gen_gap_tree(b)
    gc, gcw = brute_min_dominating(dc)
    ac, _ = brute_min_goka(dc, 1)
    gt, _ = brute_min_dominating(dt)
    at, _ = brute_min_goka(dt, 1)
    print(f"gap b={b}: cycle gamma={gc} w={gcw} gamma1o={ac}  tree gamma={gt} gamma1o={at}")
    print("   tree classify directed_tree:", classify(dt).directed_tree)

# C5 directed construct
c5 = Digraph(5, [(i, (i + 1) % 5) for i in range(5)])
fd = construct_go1a_functional(c5)
print("C5 construct:", fd.terminal_case, list(fd.alliance), "exact:", brute_min_goka(c5, 1))

# bounds cross-checks
print("P3 lower k=1:", degree_lower_bound(p3, 1), "upper:", bipartite_upper_bound(p3, 1))
k2 = bidirect(2, [(0, 1)])
print("biK2 lower k=1:", degree_lower_bound(k2, 1))
k33 = bidirect(6, [(i, 3 + j) for i in range(3) for j in range(3)])
print("biK33: m", len(k33.arcs), "bip", classify(k33).bipartite, "upper k=1:", bipartite_upper_bound(k33, 1))

c5g = [(i, (i + 1) % 5) for i in range(5)]
k4g = [(i, j) for i in range(4) for j in range(i + 1, 4)]
print("cor1 C5:", graph_degree_bound(5, c5g, 1), "K4:", graph_degree_bound(4, k4g, 1),
      "K2:", graph_degree_bound(2, [(0, 1)], 1))
print("parity C5:", graph_parity_bound(5, c5g), "K4:", graph_parity_bound(4, k4g),
      "K2:", graph_parity_bound(2, [(0, 1)]))
print("exact gamma1o(bidirect C5):", brute_min_goka(bidirect(5, c5g), 1))

rep = bounds_report(gen_bipartite_sharpness(2, 3), 2)
print("sharp(2,3) report: lower", rep.lower_bound, "ceil", rep.lower_bound_ceiling,
      "upper", rep.upper_bound, "n_below_k", rep.n_below_k)

# EC3S
inst = Ec3sInstance(3, ((0, 1, 2), (0, 1, 2), (0, 1, 2)))
print("smallest valid:", validate_ec3s(inst))
for kk in (0, 1):
    out = reduce_instance(inst, kk)
    print(f"reduce k={kk}: n={out.digraph.n} m={len(out.digraph.arcs)} target={out.target} "
          f"bipartite={classify(out.digraph).bipartite}")
    s = cover_to_alliance(out, [0])
    print("   cover->alliance size:", len(s), "roundtrip:", alliance_to_cover(out, s))

# naive vs brute on a few randoms
import random
rng = random.Random(1)
for i in range(30):
    n = rng.randint(1, 7)
    d = random_family("digraph", n, 100 + i, rng.choice([0.2, 0.5, 0.8]))
    for k in (-1, 0, 1, 2):
        nv = min_goka_naive(d, k)
        bv, _ = brute_min_goka(d, k)
        assert nv.value == bv, (i, k, nv.value, bv)
print("naive vs direct brute force: ok on 30 randoms x 4 k")

# Phi t=5: the unique optimal witness check
d5, w5 = gen_tight_cycle(5)
opts = [list(c) for c in combinations(range(8), 3) if verify_goka(d5, VertexSet(c, 8), 1).is_goka]
print("tight t=5 all 3-subsets that are GO1A:", opts)
