"""Scratch round 2: ordering fix, argmax tie reading, heavy instances."""
import itertools
import random
import time

from tokenwidth.graphs import Graph, path_graph, star_graph, complete_graph
from tokenwidth.tokens import token_graph
from tokenwidth.decompositions import max_bag
from tokenwidth.oracles import (
    elimination_width, exact_treewidth, exact_treewidth_certificate,
    f2pn_ordering, lambda2, max_border, mmb_certificate, mmb_exhaustive,
)

# corrected ordering: MB for n = 4..10
for n in range(4, 11):
    g = token_graph(path_graph(n), 2).graph
    mb = max_border(g, f2pn_ordering(n))
    print(f"MB diag ordering F_2(P_{n}) = {mb} expected {n // 2} {'OK' if mb == n // 2 else 'FAIL'}")

# ordering prefix example at n=4 per spec
labels = tuple(range(1, 5))
pairs = sorted(itertools.combinations(labels, 2), key=lambda p: (p[0] + p[1], p[0] if p[0] + p[1] > 4 else -p[0]))
print("n=4 diag order:", pairs)

# smallest exhaustive argmax vs lemma constraints
def brute_sizes(n, k):
    sizes = {}
    for x in itertools.combinations(range(1, n), k - 1):
        c = 0
        for a in itertools.combinations(range(1, n + 1), k):
            if a[:k-1] <= x <= a[1:]:
                c += 1
        sizes[x] = c
    return sizes

bad = 0
for n in range(3, 13):
    for k in (2, 3, 4):
        if not 2 <= k <= n - 1:
            continue
        sizes = brute_sizes(n, k)
        best = max(sizes.values())
        smallest_arg = min(x for x, s in sizes.items() if s == best)
        x1 = smallest_arg[0]
        if x1 not in {(n + 1) // k, -(-n // k)}:
            print("x1 violation for smallest argmax", n, k, smallest_arg)
            bad += 1
        for i in range(2, k):
            anchor = n - (k - i) * x1
            if anchor + 1 >= x1 + i - 1:
                ok = smallest_arg[i - 1] in (anchor, anchor + 1)
            else:
                ok = smallest_arg[i - 1] == x1 + i - 1
            if not ok:
                print("tail violation for smallest argmax", n, k, smallest_arg, i)
                bad += 1
        mb_x, mb_size = max_bag(n, k)
        if mb_size != best:
            print("max_bag size mismatch", n, k, mb_size, best)
            bad += 1
print("smallest-argmax lemma violations:", bad)

# heavy treewidth instances with timing
t0 = time.time()
g = token_graph(star_graph(6), 2).graph
v, order = exact_treewidth_certificate(g)
print(f"tw F_2(S_6) = {v} (order width {elimination_width(g, order)}) expected 5, {time.time()-t0:.2f}s")

t0 = time.time()
g = token_graph(complete_graph(6), 2).graph
v, order = exact_treewidth_certificate(g)
print(f"tw F_2(K_6) = {v} (order width {elimination_width(g, order)}) expected 10, {time.time()-t0:.2f}s")

t0 = time.time()
g = token_graph(path_graph(7), 2).graph
print(f"tw F_2(P_7) = {exact_treewidth(g)} expected 3, {time.time()-t0:.2f}s")

# mmb == tw across random graphs (seeded), brute-force cross-check small
rng = random.Random(12345)
t0 = time.time()
mism = 0
for trial in range(200):
    n = 6 + trial % 2
    p = 0.25 + 0.5 * rng.random()
    edges = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if rng.random() < p]
    g = Graph(range(1, n + 1), edges)
    a = mmb_exhaustive(g)
    b = exact_treewidth(g)
    if a != b:
        mism += 1
        print("LUCENA MISMATCH", n, sorted(edges), a, b)
print(f"lucena mismatches over 200 random graphs: {mism}, {time.time()-t0:.2f}s")

# brute-force treewidth via all permutation fills for tiny graphs vs oracle
def brute_tw(g):
    best = None
    for perm in itertools.permutations(g.labels):
        w = elimination_width(g, list(perm))
        if best is None or w < best:
            best = w
    return best

rng = random.Random(7)
worst = 0
for trial in range(30):
    n = rng.randint(4, 6)
    p = 0.2 + 0.6 * rng.random()
    edges = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if rng.random() < p]
    g = Graph(range(1, n + 1), edges)
    bt = brute_tw(g)
    et = exact_treewidth(g)
    if bt != et:
        worst += 1
        print("TW BRUTE MISMATCH", n, sorted(edges), bt, et)
print("tw brute mismatches:", worst)

# lambda2 of token graphs vs base
for name, g in [("P_5", path_graph(5)), ("S_4", star_graph(4)), ("K_5", complete_graph(5))]:
    for k in (2, 3):
        tg = token_graph(g, k)
        d = abs(lambda2(tg.graph) - lambda2(g))
        print(f"|lambda2(F_{k}({name})) - lambda2({name})| = {d:.2e}")

# mmb witness sanity
g = token_graph(complete_graph(4), 2).graph
v, order = mmb_certificate(g)
assert max_border(g, order) == v
print("all scratch2 done")
