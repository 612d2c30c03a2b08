"""Scratch sanity checks (not part of the package)."""
import itertools
import math
import time

from tokenwidth.graphs import path_graph, star_graph, complete_graph, cartesian_product
from tokenwidth.tokens import token_graph
from tokenwidth.decompositions import (
    bag_size_formula, f2kn_path_decomposition, fkkn_lex_decomposition,
    max_bag, star_decomposition, upper_bound_tw_kn, validate, width,
)
from tokenwidth.oracles import (
    elimination_width, exact_treewidth, exact_treewidth_certificate,
    f2pn_ordering, jacobi_eigenvalues, lambda2, max_border, mmb_certificate,
    mmb_exhaustive,
)

t0 = time.time()

# token graph basics
tg = token_graph(path_graph(3), 2)
print("F_2(P_3):", tg.vertex_table, sorted(tg.graph.edges))
tg = token_graph(complete_graph(4), 2)
print("F_2(K_4) degrees:", [tg.graph.degree(u) for u in tg.graph.labels])

# brute-force bag membership for cross-check
def brute_bag(x, n, k):
    out = []
    for a in itertools.combinations(range(1, n + 1), k):
        if a[:k-1] <= tuple(x) <= a[1:]:
            out.append(a)
    return out

bad = 0
for n in range(3, 13):
    for k in (2, 3, 4):
        if not 2 <= k <= n - 1:
            continue
        for x in itertools.combinations(range(1, n), k - 1):
            if bag_size_formula(x, n, k) != len(brute_bag(x, n, k)):
                bad += 1
                print("MISMATCH bag size", n, k, x)
print("bag size formula mismatches:", bad)

# lex decomposition width vs upper bound, full range incl k близко n
bad = 0
for n in range(3, 13):
    for k in (2, 3, 4):
        if not 2 <= k <= n - 1:
            continue
        w = width(fkkn_lex_decomposition(n, k))
        ub = upper_bound_tw_kn(n, k)
        if w != ub:
            bad += 1
            print("WIDTH MISMATCH", n, k, w, ub)
print("width vs upper bound mismatches:", bad)
print("(6,3) width:", width(fkkn_lex_decomposition(6, 3)), " (7,3):", width(fkkn_lex_decomposition(7, 3)))
print("(5,4) width:", width(fkkn_lex_decomposition(5, 4)), "ub:", upper_bound_tw_kn(5, 4))

# exhaustive argmax vs lemma candidates
def exhaustive_max(n, k):
    best = -1
    arg = []
    for x in itertools.combinations(range(1, n), k - 1):
        s = len(brute_bag(x, n, k))
        if s > best:
            best, arg = s, [x]
        elif s == best:
            arg.append(x)
    return best, arg

bad = 0
for n in range(3, 13):
    for k in (2, 3, 4):
        if not 2 <= k <= n - 1:
            continue
        best, args = exhaustive_max(n, k)
        mx, msize = max_bag(n, k)
        if msize != best:
            print("MAXBAG MISMATCH", n, k, msize, best)
            bad += 1
        # lemma conformance of every argmax
        for x in args:
            x1 = x[0]
            if x1 not in {(n + 1) // k, -(-n // k)}:
                print("LEMMA x1 violation", n, k, x)
                bad += 1
            for i in range(2, k):
                anchor = n - (k - i) * x1
                if anchor + 1 >= x1 + i - 1:
                    ok = x[i - 1] in (anchor, anchor + 1)
                else:
                    ok = x[i - 1] == x1 + i - 1
                if not ok:
                    print("LEMMA tail violation", n, k, x, i)
                    bad += 1
print("maxbag/lemma issues:", bad)

# treewidth oracle spot checks
print("tw P_6:", exact_treewidth(path_graph(6)), "tw K_5:", exact_treewidth(complete_graph(5)),
      "tw S_5:", exact_treewidth(star_graph(5)))
for n in (4, 5):
    v, order = exact_treewidth_certificate(token_graph(complete_graph(n), 2).graph)
    w = elimination_width(token_graph(complete_graph(n), 2).graph, order)
    print(f"tw F_2(K_{n}) = {v} (order width {w})")
for n in (3, 4, 5):
    g = token_graph(star_graph(n), 2).graph
    v, order = exact_treewidth_certificate(g)
    print(f"tw F_2(S_{n}) = {v} (order width {elimination_width(g, order)}) expected {n-1}")
for n in (4, 5, 6):
    g = token_graph(path_graph(n), 2).graph
    print(f"tw F_2(P_{n}) = {exact_treewidth(g)} expected {n//2}")

# MMB
print("mmb P_4:", mmb_exhaustive(path_graph(4)))
g = token_graph(path_graph(4), 2).graph
print("mmb F_2(P_4):", mmb_exhaustive(g))
g = token_graph(complete_graph(4), 2).graph
v, ordr = mmb_certificate(g)
print("mmb F_2(K_4):", v, "witness MB:", max_border(g, ordr))

# f2pn ordering
for n in range(4, 9):
    g = token_graph(path_graph(n), 2).graph
    mb = max_border(g, f2pn_ordering(n))
    print(f"MB of diagonal ordering F_2(P_{n}): {mb} expected {n//2}")

# lambda2
import numpy as np
for gname, g, expect in [("S_4", star_graph(4), 1.0), ("K_5", complete_graph(5), 5.0), ("P_2", path_graph(2), 2.0)]:
    lam = lambda2(g)
    from tokenwidth.graphs import laplacian
    npv = sorted(np.linalg.eigvalsh(np.array(laplacian(g), dtype=float)))[1]
    print(f"lambda2({gname}) = {lam:.12f} numpy {npv:.12f} expect {expect}")

print("elapsed", round(time.time() - t0, 2), "s")
