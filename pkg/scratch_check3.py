"""Scratch round 3: DP search stress, decomposition validity, brambles."""
import itertools
import random
import time

from tokenwidth.graphs import Graph, path_graph, star_graph, complete_graph, cartesian_product
from tokenwidth.tokens import token_graph, token_config_subgraph, grid_embedding, complement_isomorphism
from tokenwidth.decompositions import (
    f2kn_path_decomposition, fkkn_lex_decomposition, star_decomposition, validate, width,
)
from tokenwidth.brambles import kn_bramble, min_hitting_set, star_bramble, validate_bramble
from tokenwidth.oracles import (
    elimination_width, exact_treewidth, exact_treewidth_certificate,
    _minfill_order, _mmw_lower_bound,
)

def brute_tw(g):
    best = None
    for perm in itertools.permutations(g.labels):
        w = elimination_width(g, list(perm))
        if best is None or w < best:
            best = w
    return best

# dense-ish random graphs vs brute force, 7-8 vertices
rng = random.Random(99)
t0 = time.time()
mism = 0
searched = 0
for trial in range(25):
    n = 7 + trial % 2
    p = 0.35 + 0.45 * rng.random()
    edges = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if rng.random() < p]
    g = Graph(range(1, n + 1), edges)
    masks = g.adjacency_masks()
    ub, _ = _minfill_order(masks)
    lb = _mmw_lower_bound(masks)
    if lb < ub:
        searched += 1
    bt = brute_tw(g)
    et, order = exact_treewidth_certificate(g)
    ew = elimination_width(g, order)
    if bt != et or ew != et:
        mism += 1
        print("MISMATCH", n, sorted(edges), bt, et, ew)
print(f"dense brute mismatches: {mism} (instances where search ran: {searched}), {time.time()-t0:.1f}s")

# a known minfill-suboptimal-ish structure: cycle powers, hypercube Q4
def hypercube(d):
    verts = list(range(2 ** d))
    edges = [(u, u ^ (1 << i)) for u in verts for i in range(d) if u < (u ^ (1 << i))]
    return Graph(verts, edges)

t0 = time.time()
q4 = hypercube(4)
tw_q4, order = exact_treewidth_certificate(q4)
print(f"tw(Q4) = {tw_q4} expected 6 (order width {elimination_width(q4, order)}), {time.time()-t0:.1f}s")

t0 = time.time()
# C_10 squared: vertices 0..9, edges dist <= 2
c10sq = Graph(range(10), [(i, j) for i in range(10) for j in range(i + 1, 10)
                          if min((i - j) % 10, (j - i) % 10) <= 2])
print(f"tw(C10^2) = {exact_treewidth(c10sq)} expected 4, {time.time()-t0:.1f}s")

# 4x5 grid has treewidth 4
t0 = time.time()
grid = cartesian_product(path_graph(4), path_graph(5))
print(f"tw(P4xP5) = {exact_treewidth(grid)} expected 4, {time.time()-t0:.1f}s")

# 3x3x2 grid-ish: P3 x P3 x P2, tw = ?
t0 = time.time()
g332 = cartesian_product(cartesian_product(path_graph(3), path_graph(3)), path_graph(2))
v, order = exact_treewidth_certificate(g332)
print(f"tw(P3xP3xP2) = {v} (order width {elimination_width(g332, order)}), {time.time()-t0:.1f}s")

# decomposition validity + widths
for (n, k) in [(4, 2), (5, 2), (5, 3), (6, 2), (6, 3), (7, 3), (6, 5), (5, 4)]:
    if not 1 <= k <= n - 1:
        continue
    d = star_decomposition(n, k)
    tg = token_graph(star_graph(n), k)
    rep = validate(d, tg)
    print(f"star_decomposition({n},{k}): width {width(d)} valid={rep.ok}")

for n in range(2, 9):
    d = f2kn_path_decomposition(n)
    tg = token_graph(complete_graph(n), 2)
    rep = validate(d, tg)
    print(f"f2kn({n}): width {width(d)} valid={rep.ok}")

for (n, k) in [(4, 2), (4, 3), (5, 3), (5, 4), (6, 3), (6, 4), (7, 4)]:
    d = fkkn_lex_decomposition(n, k)
    tg = token_graph(complete_graph(n), k)
    rep = validate(d, tg)
    print(f"fkkn_lex({n},{k}): width {width(d)} valid={rep.ok}")

# brambles
for n in range(2, 7):
    b = star_bramble(n)
    rep = validate_bramble(b)
    size, witness = min_hitting_set(b)
    print(f"star_bramble({n}): {len(b.sets)} sets valid={rep.ok} hs={size}")

t0 = time.time()
for n in (4, 5, 6):
    b = kn_bramble(n)
    rep = validate_bramble(b)
    size, witness = min_hitting_set(b)
    print(f"kn_bramble({n}): {len(b.sets)} sets valid={rep.ok} hs={size} ({time.time()-t0:.1f}s)")

# config subgraph vs product
g = path_graph(5)
sub = token_config_subgraph(g, [{1, 2}, {4, 5}])
prod = cartesian_product(g.induced({1, 2}), g.induced({4, 5}))
print("config subgraph P5 ({1,2},{4,5}):", sub.n_vertices, sub.n_edges, "product:", prod.n_vertices, prod.n_edges,
      "edge sets equal:", sub.edges == prod.edges)
g = path_graph(7)
sub = token_config_subgraph(g, [{1, 2, 3}, {5, 6, 7}])
prod = cartesian_product(g.induced({1, 2, 3}), g.induced({5, 6, 7}))
print("config subgraph P7: ", sub.n_vertices, sub.n_edges, "equal:", sub.edges == prod.edges)

# grid embedding adjacency both ways, n<=7, k<=3
def check_grid(n, k):
    emb = grid_embedding(n, k)
    tg = token_graph(path_graph(n), k)
    for (i, a), (j, b) in itertools.combinations(enumerate(tg.vertex_table), 2):
        fa, fb = emb[a], emb[b]
        diff = sum(abs(x - y) for x, y in zip(fa, fb))
        coords = sum(1 for x, y in zip(fa, fb) if x != y)
        grid_adj = (coords == 1 and diff == 1)
        tok_adj = tg.graph.has_edge(i, j)
        if grid_adj != tok_adj:
            return False
    return True

ok = all(check_grid(n, k) for n in range(3, 8) for k in (1, 2, 3) if 1 <= k <= n - 1)
print("grid embedding adjacency equivalence:", ok)

# complement isomorphism edge preservation
for g, nn in [(path_graph(5), 5), (star_graph(4), 5), (complete_graph(5), 5)]:
    for k in (1, 2):
        cm = complement_isomorphism(nn, k, labels=g.labels)
        tg1 = token_graph(g, k)
        tg2 = token_graph(g, nn - k)
        mapped = {tuple(sorted((cm[tg1.vertex_table[u]], cm[tg1.vertex_table[v]]), ))
                  for u, v in []}
        ok = True
        for u, v in tg1.graph.edges:
            cu = tg2.index_of(cm[tg1.vertex_table[u]])
            cv = tg2.index_of(cm[tg1.vertex_table[v]])
            if not tg2.graph.has_edge(cu, cv):
                ok = False
        ok = ok and tg1.graph.n_edges == tg2.graph.n_edges
        print(f"complement iso {g!r} k={k}: edges preserved {ok}")

print("done")
