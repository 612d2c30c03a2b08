"""Independent ground-truth oracles.

Exact treewidth via elimination orderings (safe reduction rules, then a
memoized decision search over elimination prefixes), the border and
minimax-border apparatus with the explicit 2-token path ordering, and
spectral quantities (algebraic connectivity, degree-based treewidth
lower bound) computed with an in-repo Jacobi eigensolver.
"""

from __future__ import annotations

import itertools
import math
import warnings
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InvalidParameterError, ResourceLimitError
from .graphs import Graph, components, laplacian
from .tokens import TokenGraph, subset_lex_rank

DEFAULT_TW_CAP = 21
DEFAULT_MMB_CAP = 9
DEFAULT_EIG_CAP = 150

VertexOrdering = Sequence[int]


# -- bitmask helpers -------------------------------------------------------


def _components_with_borders(masks: Sequence[int], subset: int) -> list[tuple[int, int]]:
    """Connected components of the subgraph induced by the bitmask
    ``subset``, each paired with its outside neighborhood mask."""
    comps = []
    rem = subset
    while rem:
        comp = 0
        nb = 0
        frontier = rem & -rem
        while frontier:
            comp |= frontier
            fn = 0
            m = frontier
            while m:
                b = m & -m
                fn |= masks[b.bit_length() - 1]
                m ^= b
            nb |= fn
            frontier = fn & subset & ~comp
        comps.append((comp, nb & ~comp))
        rem &= ~comp
    return comps


def _eliminated_neighborhood(masks: Sequence[int], comps, subset: int, v: int) -> int:
    """Vertices outside ``subset`` + v reachable from v through ``subset``:
    the neighborhood v would have after eliminating ``subset`` first."""
    bit = 1 << v
    q = masks[v]
    for comp, nb in comps:
        if nb & bit:
            q |= nb
    return q & ~subset & ~bit


# -- exact treewidth -------------------------------------------------------


def _minfill_order(masks: list[int]) -> tuple[int, list[int]]:
    """Greedy min-fill elimination: an upper bound with its order."""
    n = len(masks)
    masks = list(masks)
    alive = (1 << n) - 1
    order = []
    best_width = 0
    while alive:
        pick = None
        m = alive
        while m:
            b = m & -m
            v = b.bit_length() - 1
            m ^= b
            nb = masks[v] & alive
            fill = 0
            mm = nb
            while mm:
                bb = mm & -mm
                w = bb.bit_length() - 1
                mm ^= bb
                fill += ((nb & ~bb) & ~masks[w]).bit_count()
            fill >>= 1
            if pick is None or fill < pick[0]:
                pick = (fill, v)
        v = pick[1]
        nb = masks[v] & alive
        best_width = max(best_width, nb.bit_count())
        mm = nb
        while mm:
            bb = mm & -mm
            masks[bb.bit_length() - 1] |= nb & ~bb
            mm ^= bb
        alive ^= 1 << v
        order.append(v)
    return best_width, order


def _mmw_lower_bound(masks: Sequence[int]) -> int:
    """Minor-min-width: repeatedly contract a minimum-degree vertex into
    the neighbor sharing fewest common neighbors; the largest minimum
    degree seen lower-bounds the treewidth."""
    n = len(masks)
    masks = list(masks)
    alive = (1 << n) - 1
    lb = 0
    while alive.bit_count() >= 2:
        pick = None
        m = alive
        while m:
            b = m & -m
            v = b.bit_length() - 1
            m ^= b
            d = (masks[v] & alive).bit_count()
            if pick is None or d < pick[0]:
                pick = (d, v)
        d, u = pick
        lb = max(lb, d)
        bu = 1 << u
        if d == 0:
            alive ^= bu
            continue
        partner = None
        mm = masks[u] & alive
        while mm:
            bb = mm & -mm
            w = bb.bit_length() - 1
            mm ^= bb
            c = (masks[u] & masks[w] & alive).bit_count()
            if partner is None or c < partner[0]:
                partner = (c, w)
        w = partner[1]
        bw = 1 << w
        merged = (masks[u] | masks[w]) & alive & ~bu & ~bw
        masks[w] = merged
        mm = masks[u] & alive & ~bw
        while mm:
            bb = mm & -mm
            x = bb.bit_length() - 1
            mm ^= bb
            masks[x] = (masks[x] & ~bu) | bw
        alive ^= bu
    return lb


def _decide_width(masks: Sequence[int], n: int, target: int) -> list[int] | None:
    """Find an elimination order of width at most ``target``, or None.

    Searches prefixes of elimination orders depth-first, memoizing the
    set of eliminated vertices (the width of a prefix depends only on the
    set). When some candidate's future neighborhood is already a clique
    in the filled graph, eliminating it first is always safe, so the
    branching collapses to that single move.
    """
    full = (1 << n) - 1
    visited = {0}
    order: list[int] = []

    def fill_clique(comps, q: int) -> bool:
        m = q
        while m:
            b = m & -m
            w = b.bit_length() - 1
            m ^= b
            cover = masks[w]
            for comp, nb in comps:
                if nb & b:
                    cover |= nb
            if (q & ~b) & ~cover:
                return False
        return True

    def expansions(subset: int):
        comps = _components_with_borders(masks, subset)
        out = []
        m = full & ~subset
        while m:
            b = m & -m
            v = b.bit_length() - 1
            m ^= b
            q = _eliminated_neighborhood(masks, comps, subset, v)
            qc = q.bit_count()
            if qc <= target:
                out.append((qc, v, q))
        for item in out:
            if fill_clique(comps, item[2]):
                return [item]
        out.sort()
        return out

    def dfs(subset: int) -> bool:
        if subset == full:
            return True
        for _, v, _q in expansions(subset):
            nxt = subset | (1 << v)
            if nxt in visited:
                continue
            visited.add(nxt)
            order.append(v)
            if dfs(nxt):
                return True
            order.pop()
        return False

    return order if dfs(0) else None


def _reduce_graph(masks: list[int], n: int) -> tuple[int, list[int], int]:
    """Apply exact reduction rules, returning (width so far, elimination
    order so far, mask of surviving vertices).

    A vertex whose remaining neighborhood is a clique (this covers
    isolated and pendant vertices) is always safe to eliminate at cost
    equal to its degree. Once no such vertex remains, every survivor has
    degree at least 2, so the graph has a cycle and its treewidth is at
    least 2; then a degree-2 vertex may be eliminated after connecting
    its neighbors, which is exactly the fill it causes. Both rules keep
    max(width so far, treewidth of the remainder) equal to the treewidth
    of the input.
    """
    alive = (1 << n) - 1
    base = 0
    order: list[int] = []
    while alive:
        progress = False
        m = alive
        while m:
            b = m & -m
            v = b.bit_length() - 1
            m ^= b
            nb = masks[v] & alive
            clique = True
            mm = nb
            while mm:
                bb = mm & -mm
                w = bb.bit_length() - 1
                mm ^= bb
                if (nb & ~bb) & ~masks[w]:
                    clique = False
                    break
            if clique:
                base = max(base, nb.bit_count())
                alive ^= b
                order.append(v)
                progress = True
        if progress:
            continue
        contracted = False
        m = alive
        while m:
            b = m & -m
            v = b.bit_length() - 1
            m ^= b
            nb = masks[v] & alive
            if nb.bit_count() == 2:
                w1 = nb & -nb
                w2 = nb ^ w1
                masks[w1.bit_length() - 1] |= w2
                masks[w2.bit_length() - 1] |= w1
                base = max(base, 2)
                alive ^= b
                order.append(v)
                contracted = True
                break
        if not contracted:
            break
    return base, order, alive


def _treewidth_engine(g: Graph) -> tuple[int, list[int]]:
    """Exact treewidth with an optimal elimination order, over positions."""
    n = g.n_vertices
    masks = g.adjacency_masks()
    base, order, alive = _reduce_graph(masks, n)
    survivors = [v for v in range(n) if alive >> v & 1]
    if not survivors:
        return base, order

    remap = {v: i for i, v in enumerate(survivors)}
    core = []
    for v in survivors:
        compact = 0
        mm = masks[v] & alive
        while mm:
            bb = mm & -mm
            compact |= 1 << remap[bb.bit_length() - 1]
            mm ^= bb
        core.append(compact)

    ub, ub_order = _minfill_order(core)
    if base >= ub:
        return base, order + [survivors[i] for i in ub_order]
    lb = _mmw_lower_bound(core)
    for t in range(max(lb, base), ub):
        found = _decide_width(core, len(core), t)
        if found is not None:
            return max(base, t), order + [survivors[i] for i in found]
    return max(base, ub), order + [survivors[i] for i in ub_order]


def exact_treewidth(g: Graph, cap: int = DEFAULT_TW_CAP) -> int:
    """Exact treewidth, by minimizing the maximum back-degree over
    elimination orderings. Refuses graphs above ``cap`` vertices."""
    return exact_treewidth_certificate(g, cap)[0]


def exact_treewidth_certificate(g: Graph, cap: int = DEFAULT_TW_CAP) -> tuple[int, list[int]]:
    """Exact treewidth with a witness elimination ordering (as labels)."""
    n = g.n_vertices
    if n == 0:
        raise InvalidParameterError("treewidth of the empty graph is undefined here")
    if n > cap:
        raise ResourceLimitError(f"{n} vertices exceed the exact-treewidth cap {cap}")
    value, positions = _treewidth_engine(g)
    return value, [g.labels[i] for i in positions]


def elimination_width(g: Graph, order: Sequence[int]) -> int:
    """Width of one elimination order: the maximum count of remaining
    neighbors at elimination time, completing each eliminated vertex's
    remaining neighborhood into a clique as elimination proceeds.

    Independent of the treewidth search; useful to audit certificates.
    """
    if sorted(order) != sorted(g.labels):
        raise InvalidParameterError("order must be a permutation of the vertex labels")
    n = g.n_vertices
    masks = g.adjacency_masks()
    alive = (1 << n) - 1
    width = 0
    for lab in order:
        v = g.index(lab)
        nb = masks[v] & alive & ~(1 << v)
        width = max(width, nb.bit_count())
        mm = nb
        while mm:
            bb = mm & -mm
            masks[bb.bit_length() - 1] |= nb & ~bb
            mm ^= bb
        alive &= ~(1 << v)
    return width


# -- borders and minimax borders -------------------------------------------


def border(g: Graph, subset: Iterable[int]) -> int:
    """Border of a vertex subset: the outside neighborhood size if the
    induced subgraph is connected, else the maximum border over its
    components. The empty set is rejected."""
    sub = set(subset)
    if not sub:
        raise InvalidParameterError("border of the empty set is undefined")
    comps = components(g, sub)
    best = 0
    for comp in comps:
        outside = set()
        for u in comp:
            outside.update(g.neighbors(u))
        best = max(best, len(outside - comp))
    return best


def max_border(g: Graph, ordering: VertexOrdering) -> int:
    """Maximum border over the prefixes of a vertex ordering."""
    if sorted(ordering) != sorted(g.labels):
        raise InvalidParameterError("ordering must be a permutation of the vertex labels")
    masks = g.adjacency_masks()
    prefix = 0
    best = 0
    for lab in ordering:
        prefix |= 1 << g.index(lab)
        for _comp, nb in _components_with_borders(masks, prefix):
            c = nb.bit_count()
            if c > best:
                best = c
    return best


def _mmb_tables(masks: Sequence[int]) -> tuple[list[int], list[int]]:
    """Subset dynamic program: best[S] is the minimum over orderings that
    eliminate exactly S first of the maximum prefix border."""
    n = len(masks)
    full = (1 << n) - 1
    beta = [0] * (full + 1)
    best = [0] * (full + 1)
    for s in range(1, full + 1):
        b = 0
        for _comp, nb in _components_with_borders(masks, s):
            c = nb.bit_count()
            if c > b:
                b = c
        beta[s] = b
        prev = None
        m = s
        while m:
            bb = m & -m
            m ^= bb
            cand = best[s ^ bb]
            if prev is None or cand < prev:
                prev = cand
        best[s] = b if b > prev else prev
    return best, beta


def mmb_exhaustive(g: Graph, cap: int = DEFAULT_MMB_CAP) -> int:
    """Minimax border size: the minimum over orderings of the maximum
    prefix border. Equals the treewidth; exact by subset DP."""
    return mmb_certificate(g, cap)[0]


def mmb_certificate(g: Graph, cap: int = DEFAULT_MMB_CAP) -> tuple[int, list[int]]:
    """Minimax border size with a witness ordering attaining it."""
    n = g.n_vertices
    if n == 0:
        raise InvalidParameterError("minimax border of the empty graph is undefined")
    if n > cap:
        raise ResourceLimitError(f"{n} vertices exceed the minimax-border cap {cap}")
    masks = g.adjacency_masks()
    best, _beta = _mmb_tables(masks)
    full = (1 << n) - 1
    order_rev = []
    s = full
    while s:
        pick = None
        m = s
        while m:
            bb = m & -m
            v = bb.bit_length() - 1
            m ^= bb
            cand = best[s ^ bb]
            if pick is None or cand < pick[0]:
                pick = (cand, v)
        order_rev.append(pick[1])
        s ^= 1 << pick[1]
    order = [g.labels[v] for v in reversed(order_rev)]
    return best[full], order


def f2pn_ordering(n: int) -> list[int]:
    """The diagonal ordering of the 2-token graph of the path 1..n.

    Pairs are sorted by member sum; each constant-sum level is traversed
    from the end whose forward neighborhood is a single pair, which keeps
    the running border at floor(n/2): ascending first member for sums
    above n, descending below (for sums above n the smallest first member
    sits on the x2=n boundary; below, the largest sits on the x1=x2-1
    diagonal). Returned as a permutation of token-vertex indices.
    """
    if n < 2:
        raise InvalidParameterError(f"need n >= 2, got {n}")
    labels = tuple(range(1, n + 1))
    pairs = sorted(
        itertools.combinations(labels, 2),
        key=lambda p: (p[0] + p[1], p[0] if p[0] + p[1] > n else -p[0]),
    )
    return [subset_lex_rank(p, labels) for p in pairs]


# -- spectral bounds -------------------------------------------------------


def jacobi_eigenvalues(matrix: Sequence[Sequence[float]], tol: float = 1e-13, max_sweeps: int = 100) -> list[float]:
    """Eigenvalues of a symmetric matrix by cyclic Jacobi rotations,
    ascending. Symmetry is enforced by averaging the two triangles."""
    n = len(matrix)
    if n == 0:
        return []
    a = [[0.5 * (matrix[i][j] + matrix[j][i]) for j in range(n)] for i in range(n)]
    if n == 1:
        return [a[0][0]]
    scale = max(max(abs(x) for x in row) for row in a)
    if scale == 0.0:
        return [0.0] * n
    stop = tol * scale
    for _sweep in range(max_sweeps):
        off = max(abs(a[i][j]) for i in range(n) for j in range(i + 1, n))
        if off <= stop:
            break
        skip = off * 1e-3
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p][q]
                if abs(apq) <= skip and abs(apq) <= stop:
                    continue
                app = a[p][p]
                aqq = a[q][q]
                theta = (aqq - app) / (2.0 * apq)
                t = (1.0 if theta >= 0 else -1.0) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                tau = s / (1.0 + c)
                a[p][p] = app - t * apq
                a[q][q] = aqq + t * apq
                a[p][q] = a[q][p] = 0.0
                for i in range(n):
                    if i != p and i != q:
                        aip = a[i][p]
                        aiq = a[i][q]
                        a[i][p] = a[p][i] = aip - s * (aiq + tau * aip)
                        a[i][q] = a[q][i] = aiq + s * (aip - tau * aiq)
    return sorted(a[i][i] for i in range(n))


def lambda2(g: Graph, cap: int = DEFAULT_EIG_CAP) -> float:
    """Algebraic connectivity: second smallest Laplacian eigenvalue.

    Disconnected graphs report 0.0 with a warning instead of failing.
    """
    n = g.n_vertices
    if n < 2:
        raise InvalidParameterError("algebraic connectivity needs at least 2 vertices")
    if n > cap:
        raise ResourceLimitError(f"{n} vertices exceed the eigensolver cap {cap}")
    if not g.is_connected():
        warnings.warn("graph is disconnected; algebraic connectivity is 0", stacklevel=2)
        return 0.0
    values = jacobi_eigenvalues([[float(x) for x in row] for row in laplacian(g)])
    return max(values[1], 0.0)


@dataclass(frozen=True)
class SpectralReport:
    """Algebraic-connectivity treewidth bound for a token graph.

    ``chandran_lower_bound`` is n/(12*max_degree) * lambda2 - 1 over the
    token graph's vertex count and degree; ``lambda2`` comes from the base
    graph (the token graph preserves it) and ``lambda2_token`` is the
    direct numerical confirmation when the token graph fits the solver.
    """

    lambda2: float
    max_degree: int
    n_vertices: int
    chandran_lower_bound: float
    lambda2_token: float | None = None


def spectral_lower_bound(tg: TokenGraph, eig_cap: int = DEFAULT_EIG_CAP) -> SpectralReport:
    """Chandran-style treewidth lower bound for a token graph."""
    delta = tg.graph.max_degree()
    if delta == 0:
        raise InvalidParameterError("token graph has no edges")
    lam = lambda2(tg.base, cap=eig_cap)
    nv = tg.n_vertices
    bound = nv / (12.0 * delta) * lam - 1.0
    lam_token = lambda2(tg.graph, cap=eig_cap) if nv <= eig_cap else None
    return SpectralReport(lam, delta, nv, bound, lam_token)
