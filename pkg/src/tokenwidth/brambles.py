"""Brambles on token graphs and exact minimum hitting sets.

A bramble is a family of pairwise touching connected vertex sets; the
least number of vertices meeting every set (its order) lower-bounds the
treewidth plus one. This module holds the bramble type, its validator,
an exact branch-and-bound hitting-set solver, and the two explicit
bramble families for 2-token graphs of stars and complete graphs.
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import InvalidParameterError, ResourceLimitError
from .graphs import complete_graph, star_graph
from .tokens import TokenGraph, token_graph, token_graph_from_json, token_graph_to_json

DEFAULT_BRAMBLE_SET_CAP = 50_000


class Bramble:
    """A family of token-vertex index sets over a host token graph.

    Sets are deduplicated and stored sorted for deterministic iteration.
    """

    __slots__ = ("host", "sets")

    def __init__(self, host: TokenGraph, sets: Iterable[Iterable[int]]):
        n = host.n_vertices
        dedup = {frozenset(int(i) for i in s) for s in sets}
        for s in dedup:
            for idx in s:
                if not 0 <= idx < n:
                    raise InvalidParameterError(f"bramble set references unknown token index {idx}")
        self.host = host
        self.sets: tuple[frozenset[int], ...] = tuple(sorted(dedup, key=sorted))

    def __repr__(self) -> str:
        return f"Bramble({len(self.sets)} sets on {self.host!r})"


@dataclass
class BrambleReport:
    """Validation outcome: connectivity per set, touching per pair."""

    disconnected: list[int] = field(default_factory=list)
    non_touching: list[tuple[int, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.disconnected and not self.non_touching

    def summary(self) -> str:
        if self.ok:
            return "valid bramble"
        parts = []
        if self.disconnected:
            parts.append(f"disconnected sets {self.disconnected}")
        if self.non_touching:
            parts.append(f"non-touching pairs {self.non_touching}")
        return "; ".join(parts)


def validate_bramble(b: Bramble) -> BrambleReport:
    """Check that every set induces a connected subgraph and that every
    pair of sets touches (shares a vertex or is joined by an edge)."""
    g = b.host.graph
    report = BrambleReport()
    neighborhoods = []
    for si, s in enumerate(b.sets):
        if not s:
            report.disconnected.append(si)
            neighborhoods.append(frozenset())
            continue
        start = min(s)
        seen = {start}
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if w in s and w not in seen:
                    seen.add(w)
                    queue.append(w)
        if seen != s:
            report.disconnected.append(si)
        neighborhoods.append(frozenset().union(*(g.neighbors(u) for u in s)))
    for i, j in itertools.combinations(range(len(b.sets)), 2):
        si, sj = b.sets[i], b.sets[j]
        if si & sj:
            continue
        if neighborhoods[i] & sj:
            continue
        report.non_touching.append((i, j))
    return report


def _greedy_hitting_set(sets: Sequence[frozenset[int]]) -> set[int]:
    unhit = list(sets)
    chosen: set[int] = set()
    while unhit:
        counts: dict[int, int] = {}
        for s in unhit:
            for e in s:
                counts[e] = counts.get(e, 0) + 1
        # max coverage, smallest element on ties, for determinism
        best = min(counts, key=lambda e: (-counts[e], e))
        chosen.add(best)
        unhit = [s for s in unhit if best not in s]
    return chosen


def _disjoint_lower_bound(sets: Sequence[frozenset[int]]) -> int:
    """Size of a greedily built pairwise disjoint subfamily; any hitting
    set needs one vertex per member."""
    used: set[int] = set()
    count = 0
    for s in sorted(sets, key=len):
        if not (s & used):
            count += 1
            used |= s
    return count


def min_hitting_set(b: Bramble, cap_sets: int = DEFAULT_BRAMBLE_SET_CAP) -> tuple[int, frozenset[int]]:
    """Exact minimum hitting set of the bramble, with a witness.

    Branch and bound: branch on the elements of a smallest unhit set,
    prune with the disjoint-subfamily lower bound, seeded with a greedy
    incumbent. The order of the bramble is the returned size; it certifies
    treewidth >= size - 1 on the host.
    """
    sets = b.sets
    if any(not s for s in sets):
        raise InvalidParameterError("bramble contains an empty set, which cannot be hit")
    if len(sets) > cap_sets:
        raise ResourceLimitError(f"{len(sets)} bramble sets exceed the solver cap {cap_sets}")
    if not sets:
        return 0, frozenset()

    best = _greedy_hitting_set(sets)

    def search(chosen: set[int], unhit: list[frozenset[int]]) -> None:
        nonlocal best
        if not unhit:
            if len(chosen) < len(best):
                best = set(chosen)
            return
        if len(chosen) + _disjoint_lower_bound(unhit) >= len(best):
            return
        target = min(unhit, key=lambda s: (len(s), sorted(s)))
        occurrence = {e: sum(1 for s in unhit if e in s) for e in target}
        for e in sorted(target, key=lambda e: (-occurrence[e], e)):
            chosen.add(e)
            search(chosen, [s for s in unhit if e not in s])
            chosen.remove(e)

    search(set(), list(sets))
    return len(best), frozenset(best)


# -- explicit families -----------------------------------------------------


def star_bramble(n: int) -> Bramble:
    """Bramble of the 2-token graph of the star with n leaves.

    Set i (1 <= i <= n) holds every pair {s, i} with s < i; the sets are
    pairwise disjoint yet touching, so the minimum hitting set has exactly
    n vertices, certifying treewidth >= n - 1.
    """
    if n < 2:
        raise InvalidParameterError(f"star bramble needs n >= 2, got {n}")
    tg = token_graph(star_graph(n), 2)
    sets = [[tg.index_of((s, i)) for s in range(0, i)] for i in range(1, n + 1)]
    return Bramble(tg, sets)


def _path_edge_sets(vertices: Sequence[int], m: int, tg: TokenGraph) -> list[list[int]]:
    """Edge sets of all simple m-vertex paths of the complete graph on the
    given vertices, as token-vertex indices; path reversals are one set."""
    out = []
    for seq in itertools.permutations(vertices, m):
        if seq[0] > seq[-1]:
            continue  # the reverse walk carries the same edge set
        out.append([tg.index_of((min(a, b), max(a, b))) for a, b in zip(seq, seq[1:])])
    return out


def kn_bramble(n: int, cap_sets: int = DEFAULT_BRAMBLE_SET_CAP) -> Bramble:
    """Bramble of the 2-token graph of the complete graph on 1..n.

    Odd n: the edge sets of every path of the base graph on (n+1)/2
    vertices. Even n: that construction inside the sub-complete-graph on
    1..n-1 (token vertices avoiding n), together with every (n/2)-subset
    of the pairs containing n.
    """
    if n < 4:
        raise InvalidParameterError(f"complete-graph bramble needs n >= 4, got {n}")
    tg = token_graph(complete_graph(n), 2)
    if n % 2 == 1:
        m = (n + 1) // 2
        count = 1
        for i in range(m):
            count *= n - i
        if count // 2 > cap_sets:
            raise ResourceLimitError(f"{count // 2} path sets exceed the cap {cap_sets}")
        sets = _path_edge_sets(range(1, n + 1), m, tg)
    else:
        m = n // 2
        count = 1
        for i in range(m):
            count *= n - 1 - i
        total = count // 2 + math.comb(n - 1, n // 2)
        if total > cap_sets:
            raise ResourceLimitError(f"{total} bramble sets exceed the cap {cap_sets}")
        sets = _path_edge_sets(range(1, n), m, tg)
        rim = [tg.index_of((a, n)) for a in range(1, n)]
        sets.extend(list(combo) for combo in itertools.combinations(rim, n // 2))
    return Bramble(tg, sets)


# -- JSON schema ---------------------------------------------------------


def bramble_to_json(b: Bramble) -> dict:
    return {
        "sets": [sorted(s) for s in b.sets],
        "token_graph": token_graph_to_json(b.host),
    }


def bramble_from_json(data: dict) -> Bramble:
    if "sets" not in data or "token_graph" not in data:
        raise InvalidParameterError("bramble JSON needs 'sets' and 'token_graph'")
    host = token_graph_from_json(data["token_graph"])
    return Bramble(host, data["sets"])
