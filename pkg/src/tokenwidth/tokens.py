"""k-token graphs and their structural maps.

The k-token graph of G has one vertex per k-subset of V(G), two subsets
being adjacent exactly when their symmetric difference is an edge of G.
Token vertices are strictly increasing label tuples, indexed canonically
by lexicographic rank so that decompositions, brambles and oracles agree
on numbering without sharing objects.
"""

from __future__ import annotations

import itertools
import math
from typing import Iterable, Sequence

from .errors import InvalidParameterError, ResourceLimitError
from .graphs import Graph, graph_from_json, graph_to_json

TokenVertex = tuple[int, ...]

DEFAULT_TOKEN_VERTEX_CAP = 200_000


def k_subsets(labels: Sequence[int], k: int) -> list[TokenVertex]:
    """All k-subsets of the given labels as sorted tuples, in lex order."""
    return list(itertools.combinations(sorted(labels), k))


def subset_lex_rank(members: Sequence[int], labels: Sequence[int]) -> int:
    """Lexicographic rank of a k-subset among all k-subsets of ``labels``.

    This is the index the subset receives in ``k_subsets(labels, k)``; it
    is the canonical token-vertex index used package-wide.
    """
    labels = sorted(labels)
    pos = {lab: i for i, lab in enumerate(labels)}
    n = len(labels)
    k = len(members)
    prev = -1
    rank = 0
    for i, m in enumerate(members):
        if m not in pos:
            raise InvalidParameterError(f"member {m} is not a base label")
        c = pos[m]
        if c <= prev:
            raise InvalidParameterError(f"token vertex {tuple(members)} is not strictly increasing")
        for j in range(prev + 1, c):
            rank += math.comb(n - 1 - j, k - 1 - i)
        prev = c
    return rank


class TokenGraph:
    """A constructed k-token graph.

    ``graph`` is a Graph over indices 0..C(n,k)-1; ``vertex_table[i]`` is
    the k-subset behind index i, enumerated in lexicographic order.
    """

    __slots__ = ("base", "k", "graph", "vertex_table", "_rank")

    def __init__(self, base: Graph, k: int, graph: Graph, vertex_table: Sequence[TokenVertex]):
        self.base = base
        self.k = k
        self.graph = graph
        self.vertex_table: tuple[TokenVertex, ...] = tuple(tuple(v) for v in vertex_table)
        self._rank = {v: i for i, v in enumerate(self.vertex_table)}

    @property
    def n_vertices(self) -> int:
        return len(self.vertex_table)

    def index_of(self, members: Iterable[int]) -> int:
        key = tuple(sorted(members))
        try:
            return self._rank[key]
        except KeyError:
            raise InvalidParameterError(f"{key} is not a token vertex of this graph") from None

    def members_of(self, index: int) -> TokenVertex:
        try:
            return self.vertex_table[index]
        except IndexError:
            raise InvalidParameterError(f"token index {index} out of range") from None

    def __repr__(self) -> str:
        return f"TokenGraph(k={self.k}, {self.n_vertices} vertices, {self.graph.n_edges} edges)"


def token_graph(g: Graph, k: int, cap: int = DEFAULT_TOKEN_VERTEX_CAP) -> TokenGraph:
    """Build the k-token graph of ``g``.

    Adjacency is found by trying every single-token slide per vertex
    (swap one member for a neighboring non-member) instead of testing all
    vertex pairs. Rejects k=0 and k=n; refuses instances above ``cap``
    token vertices.
    """
    n = g.n_vertices
    if not 1 <= k <= n - 1:
        raise InvalidParameterError(f"k must satisfy 1 <= k <= n-1, got k={k}, n={n}")
    size = math.comb(n, k)
    if size > cap:
        raise ResourceLimitError(f"token graph would have {size} vertices, cap is {cap}")
    verts = k_subsets(g.labels, k)
    rank = {v: i for i, v in enumerate(verts)}
    edges = []
    for i, members in enumerate(verts):
        inside = set(members)
        for a in members:
            for b in g.neighbors(a):
                if b not in inside:
                    target = tuple(sorted((inside - {a}) | {b}))
                    j = rank[target]
                    if j > i:
                        edges.append((i, j))
    return TokenGraph(g, k, Graph(range(len(verts)), edges), verts)


def complement_isomorphism(n: int, k: int, labels: Sequence[int] | None = None) -> dict[TokenVertex, TokenVertex]:
    """Map A -> V \\ A sending k-subsets to (n-k)-subsets.

    The ground set defaults to 1..n; pass ``labels`` for hosts whose
    vertex set is not 1-based (stars use 0..n). The map is an
    adjacency-preserving bijection between the k- and (n-k)-token graphs
    of any base graph on that ground set.
    """
    if labels is None:
        labels = range(1, n + 1)
    ground = tuple(sorted(labels))
    if len(ground) != n:
        raise InvalidParameterError(f"ground set has {len(ground)} labels, expected n={n}")
    if not 1 <= k <= n - 1:
        raise InvalidParameterError(f"k must satisfy 1 <= k <= n-1, got k={k}, n={n}")
    ground_set = set(ground)
    return {
        a: tuple(sorted(ground_set - set(a)))
        for a in itertools.combinations(ground, k)
    }


def grid_embedding(n: int, k: int) -> dict[TokenVertex, tuple[int, ...]]:
    """Coordinates of the k-token graph of the path 1..n inside a grid.

    Sends A = {x_1 < ... < x_k} to (x_i - (i-1)), an injective map onto
    the set of nondecreasing k-tuples over 1..n-k+1; it is an isomorphism
    onto the subgraph of the k-fold Cartesian power of the path on
    n-k+1 vertices induced by that image.
    """
    if not 1 <= k <= n - 1:
        raise InvalidParameterError(f"k must satisfy 1 <= k <= n-1, got k={k}, n={n}")
    return {
        a: tuple(x - i for i, x in enumerate(a))
        for a in itertools.combinations(range(1, n + 1), k)
    }


class ConfigSubgraph(Graph):
    """Token-configuration subgraph with its config table retained.

    ``configs[i]`` is the tuple (one member per part) behind label ``i``.
    """

    __slots__ = ("configs",)

    def __init__(self, labels, edges, configs):
        super().__init__(labels, edges)
        self.configs: tuple[tuple[int, ...], ...] = tuple(configs)


def token_config_subgraph(g: Graph, parts: Sequence[Iterable[int]]) -> ConfigSubgraph:
    """Subgraph of the token graph induced by configurations with exactly
    one token in each part.

    Parts must be pairwise disjoint nonempty subsets of V(g). A move is
    possible only within a part (sliding across parts would leave a part
    empty), so the result is isomorphic to the Cartesian product of the
    induced subgraphs g[part_1] x ... x g[part_k]. Vertices are labeled
    0..m-1 in lexicographic order of configurations; ``configs`` maps
    labels back to configurations.
    """
    sorted_parts = [tuple(sorted(set(p))) for p in parts]
    if not sorted_parts or any(not p for p in sorted_parts):
        raise InvalidParameterError("parts must be nonempty")
    label_set = set(g.labels)
    seen: set[int] = set()
    for p in sorted_parts:
        extra = set(p) - label_set
        if extra:
            raise InvalidParameterError(f"part uses unknown labels {sorted(extra)}")
        if seen & set(p):
            raise InvalidParameterError("parts must be pairwise disjoint")
        seen |= set(p)
    configs = list(itertools.product(*sorted_parts))
    index = {c: i for i, c in enumerate(configs)}
    part_sets = [set(p) for p in sorted_parts]
    edges = []
    for i, config in enumerate(configs):
        for coord, v in enumerate(config):
            for w in g.neighbors(v):
                if w in part_sets[coord]:
                    other = config[:coord] + (w,) + config[coord + 1:]
                    j = index[other]
                    if j > i:
                        edges.append((i, j))
    return ConfigSubgraph(range(len(configs)), edges, configs)


# -- JSON schema ---------------------------------------------------------


def token_graph_to_json(tg: TokenGraph) -> dict:
    """Graph JSON schema plus the vertex table mapping index -> k-subset."""
    data = graph_to_json(tg.graph)
    data["vertex_table"] = [list(v) for v in tg.vertex_table]
    return data


def token_graph_from_json(data: dict, base: Graph | None = None) -> TokenGraph:
    """Rebuild a token graph from its JSON form.

    The base graph is not part of the schema; if omitted, a placeholder
    base over the union of table labels with no edges is attached (the
    adjacency of the token graph itself is authoritative).
    """
    if "vertex_table" not in data:
        raise InvalidParameterError("token graph JSON needs 'vertex_table'")
    graph = graph_from_json(data)
    table = [tuple(v) for v in data["vertex_table"]]
    if not table:
        raise InvalidParameterError("empty vertex table")
    k = len(table[0])
    if any(len(v) != k for v in table):
        raise InvalidParameterError("vertex table rows must all have length k")
    if base is None:
        base_labels = sorted({x for v in table for x in v})
        base = Graph(base_labels, [])
    return TokenGraph(base, k, graph, table)
