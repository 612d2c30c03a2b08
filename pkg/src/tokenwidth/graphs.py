"""Undirected simple graphs over explicit integer labels.

Provides the base graph type, generators for paths, stars and complete
graphs, Cartesian products, induced-component queries and the Laplacian
matrix. Graphs are immutable after construction and safe to share.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence

from .errors import InvalidParameterError


class Graph:
    """Immutable undirected simple graph.

    Vertex labels are arbitrary integers carried explicitly (stars use 0
    for the center, other families use 1..n). Adjacency is kept as sorted
    neighbor tuples so every iteration order is deterministic.
    """

    __slots__ = ("labels", "edges", "_adj", "_pos")

    def __init__(self, labels: Iterable[int], edges: Iterable[tuple[int, int]]):
        labels = [int(x) for x in labels]
        if len(labels) != len(set(labels)):
            raise InvalidParameterError("duplicate vertex labels")
        self.labels: tuple[int, ...] = tuple(sorted(labels))
        label_set = set(self.labels)
        adj: dict[int, set[int]] = {u: set() for u in self.labels}
        norm: set[tuple[int, int]] = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise InvalidParameterError(f"self-loop at vertex {u}")
            if u not in label_set or v not in label_set:
                raise InvalidParameterError(f"edge ({u},{v}) uses an undeclared label")
            e = (u, v) if u < v else (v, u)
            norm.add(e)
            adj[e[0]].add(e[1])
            adj[e[1]].add(e[0])
        self.edges: frozenset[tuple[int, int]] = frozenset(norm)
        self._adj: dict[int, tuple[int, ...]] = {u: tuple(sorted(adj[u])) for u in self.labels}
        self._pos: dict[int, int] = {u: i for i, u in enumerate(self.labels)}

    # -- basic queries ---------------------------------------------------

    @property
    def n_vertices(self) -> int:
        return len(self.labels)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def neighbors(self, u: int) -> tuple[int, ...]:
        try:
            return self._adj[u]
        except KeyError:
            raise InvalidParameterError(f"unknown vertex label {u}") from None

    def degree(self, u: int) -> int:
        return len(self.neighbors(u))

    def max_degree(self) -> int:
        return max((len(v) for v in self._adj.values()), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        e = (u, v) if u < v else (v, u)
        return e in self.edges

    def index(self, u: int) -> int:
        """Position of label ``u`` in the sorted label order."""
        try:
            return self._pos[u]
        except KeyError:
            raise InvalidParameterError(f"unknown vertex label {u}") from None

    def adjacency_masks(self) -> list[int]:
        """Neighbor bitmask per vertex, indexed by sorted label position."""
        pos = self._pos
        masks = [0] * len(self.labels)
        for u, v in self.edges:
            masks[pos[u]] |= 1 << pos[v]
            masks[pos[v]] |= 1 << pos[u]
        return masks

    def induced(self, keep: Iterable[int]) -> "Graph":
        """Subgraph induced by the given labels (labels are preserved)."""
        keep_set = set(keep)
        unknown = keep_set - set(self.labels)
        if unknown:
            raise InvalidParameterError(f"unknown vertex labels {sorted(unknown)}")
        edges = [(u, v) for u, v in self.edges if u in keep_set and v in keep_set]
        return Graph(keep_set, edges)

    def is_connected(self) -> bool:
        if self.n_vertices <= 1:
            return True
        seen = {self.labels[0]}
        queue = deque(seen)
        while queue:
            u = queue.popleft()
            for w in self._adj[u]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == self.n_vertices

    def is_tree(self) -> bool:
        return self.n_vertices >= 1 and self.n_edges == self.n_vertices - 1 and self.is_connected()

    # -- dunder ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.labels == other.labels and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.labels, self.edges))

    def __repr__(self) -> str:
        return f"Graph({self.n_vertices} vertices, {self.n_edges} edges)"


class ProductGraph(Graph):
    """Cartesian product with the pair-label map retained.

    ``pairs[i]`` holds the (left, right) label pair flattened to integer
    label ``i``.
    """

    __slots__ = ("pairs",)

    def __init__(self, labels, edges, pairs):
        super().__init__(labels, edges)
        self.pairs: tuple[tuple[int, int], ...] = tuple(pairs)


# -- generators ----------------------------------------------------------


def path_graph(n: int) -> Graph:
    """Path with vertices 1..n and edges {i, i+1}."""
    if n < 1:
        raise InvalidParameterError(f"path needs n >= 1, got {n}")
    return Graph(range(1, n + 1), [(i, i + 1) for i in range(1, n)])


def star_graph(n: int) -> Graph:
    """Star with center 0 and leaves 1..n."""
    if n < 1:
        raise InvalidParameterError(f"star needs n >= 1 leaves, got {n}")
    return Graph(range(0, n + 1), [(0, i) for i in range(1, n + 1)])


def complete_graph(n: int) -> Graph:
    """Complete graph on vertices 1..n."""
    if n < 1:
        raise InvalidParameterError(f"complete graph needs n >= 1, got {n}")
    return Graph(range(1, n + 1), [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)])


FAMILIES = ("path", "star", "complete")


def generate(family: str, n: int) -> Graph:
    """Generate one of the three supported families by name."""
    if family == "path":
        return path_graph(n)
    if family == "star":
        return star_graph(n)
    if family == "complete":
        return complete_graph(n)
    raise InvalidParameterError(f"unknown family {family!r}, expected one of {FAMILIES}")


# -- graph algebra -------------------------------------------------------


def cartesian_product(g: Graph, h: Graph) -> ProductGraph:
    """Cartesian product: (a,b) ~ (a',b') iff equal in one coordinate and
    adjacent in the other. Vertices are flattened to fresh integer labels
    0..|V(g)|*|V(h)|-1 in lexicographic (a,b) order; the pair map is kept
    on the result as ``pairs``.
    """
    if g.n_vertices == 0 or h.n_vertices == 0:
        raise InvalidParameterError("cartesian product of an empty graph")
    nh = h.n_vertices
    pairs = [(a, b) for a in g.labels for b in h.labels]
    edges = []
    for i, (a, b) in enumerate(pairs):
        ia = g.index(a)
        ib = h.index(b)
        for b2 in h.neighbors(b):
            j = ia * nh + h.index(b2)
            if j > i:
                edges.append((i, j))
        for a2 in g.neighbors(a):
            j = g.index(a2) * nh + ib
            if j > i:
                edges.append((i, j))
    return ProductGraph(range(len(pairs)), edges, pairs)


def components(g: Graph, subset: Iterable[int]) -> list[set[int]]:
    """Connected components of the subgraph induced by ``subset``.

    Returns a partition of ``subset`` as a list of label sets, ordered by
    smallest member.
    """
    sub = set(subset)
    unknown = sub - set(g.labels)
    if unknown:
        raise InvalidParameterError(f"unknown vertex labels {sorted(unknown)}")
    out: list[set[int]] = []
    remaining = set(sub)
    while remaining:
        start = min(remaining)
        comp = {start}
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if w in sub and w not in comp:
                    comp.add(w)
                    queue.append(w)
        out.append(comp)
        remaining -= comp
    out.sort(key=min)
    return out


def laplacian(g: Graph) -> list[list[int]]:
    """Laplacian matrix (degree minus adjacency) over the sorted label order."""
    n = g.n_vertices
    mat = [[0] * n for _ in range(n)]
    for i, u in enumerate(g.labels):
        mat[i][i] = g.degree(u)
    for u, v in g.edges:
        i, j = g.index(u), g.index(v)
        mat[i][j] = -1
        mat[j][i] = -1
    return mat


# -- JSON schema ---------------------------------------------------------


def graph_to_json(g: Graph) -> dict:
    """Graph JSON schema: labels plus edges, smaller endpoint first, sorted."""
    return {
        "labels": list(g.labels),
        "edges": sorted([min(u, v), max(u, v)] for u, v in g.edges),
    }


def graph_from_json(data: dict) -> Graph:
    if "labels" not in data or "edges" not in data:
        raise InvalidParameterError("graph JSON needs 'labels' and 'edges'")
    return Graph(data["labels"], [tuple(e) for e in data["edges"]])
