"""Tree and path decompositions of token graphs.

Holds the decomposition data type with its three-condition validator,
the explicit constructions for stars, 2-token complete graphs and
general k-token complete graphs, and the closed-form bag-size machinery
for the lexicographic path decomposition.
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import InvalidParameterError, ResourceLimitError
from .graphs import Graph
from .tokens import DEFAULT_TOKEN_VERTEX_CAP, TokenGraph, k_subsets, subset_lex_rank

BagIndex = tuple[int, ...]


class TreeDecomposition:
    """A tree of bags over token-vertex indices.

    The tree must be connected and acyclic; bags map tree-node labels to
    sorted index tuples. ``is_path`` records that the tree is a path and
    the decomposition doubles as a path decomposition.
    """

    __slots__ = ("tree", "bags", "is_path")

    def __init__(self, tree: Graph, bags: Mapping[int, Iterable[int]], is_path: bool = False):
        if not tree.is_tree():
            raise InvalidParameterError("decomposition tree must be connected and acyclic")
        unknown = set(bags) - set(tree.labels)
        if unknown:
            raise InvalidParameterError(f"bags for unknown tree nodes {sorted(unknown)}")
        self.tree = tree
        self.bags: dict[int, tuple[int, ...]] = {
            node: tuple(sorted(set(bags.get(node, ())))) for node in tree.labels
        }
        self.is_path = bool(is_path)

    def __repr__(self) -> str:
        return f"TreeDecomposition({self.tree.n_vertices} bags, width {width(self)}, is_path={self.is_path})"


def width(d: TreeDecomposition) -> int:
    """Width of a decomposition: maximum bag size minus one."""
    if not d.bags or all(len(b) == 0 for b in d.bags.values()):
        raise InvalidParameterError("decomposition has no nonempty bag")
    return max(len(b) for b in d.bags.values()) - 1


@dataclass
class ConditionResult:
    name: str
    passed: bool
    witness: object = None


@dataclass
class ValidationReport:
    """Per-condition outcome of validating a decomposition.

    Conditions: every token vertex is in some bag; every token-graph edge
    lies inside some bag; the tree nodes holding any fixed token vertex
    induce a connected subtree.
    """

    conditions: list[ConditionResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.conditions)

    def summary(self) -> str:
        parts = [f"{c.name}: {'pass' if c.passed else f'FAIL ({c.witness})'}" for c in self.conditions]
        return "; ".join(parts)


def validate(d: TreeDecomposition, tg: TokenGraph) -> ValidationReport:
    """Check the three decomposition conditions against a token graph.

    Returns pass/fail per condition with a concrete witness on failure:
    an uncovered vertex index, an uncovered edge, or the token vertex
    whose bag trace is disconnected together with the split trace.
    """
    n = tg.n_vertices
    trace: dict[int, set[int]] = {}
    for node, bag in d.bags.items():
        for idx in bag:
            if not 0 <= idx < n:
                raise InvalidParameterError(f"bag at node {node} references unknown token index {idx}")
            trace.setdefault(idx, set()).add(node)

    report = ValidationReport()

    missing = [v for v in range(n) if v not in trace]
    report.conditions.append(
        ConditionResult("vertex-coverage", not missing, missing[0] if missing else None)
    )

    bad_edge = None
    for u, v in sorted(tg.graph.edges):
        if not (trace.get(u, set()) & trace.get(v, set())):
            bad_edge = (u, v)
            break
    report.conditions.append(ConditionResult("edge-coverage", bad_edge is None, bad_edge))

    # Connectedness of each trace, by BFS restricted to the trace nodes.
    bad_trace = None
    for idx in sorted(trace):
        nodes = trace[idx]
        start = next(iter(nodes))
        seen = {start}
        queue = deque([start])
        while queue:
            t = queue.popleft()
            for t2 in d.tree.neighbors(t):
                if t2 in nodes and t2 not in seen:
                    seen.add(t2)
                    queue.append(t2)
        if seen != nodes:
            bad_trace = (idx, sorted(seen), sorted(nodes - seen))
            break
    report.conditions.append(ConditionResult("connected-traces", bad_trace is None, bad_trace))
    return report


# -- star construction ---------------------------------------------------


def star_decomposition(n: int, k: int) -> TreeDecomposition:
    """Star-shaped tree decomposition of the k-token graph of the star
    with leaves 1..n and center 0.

    The center bag holds every token vertex containing 0; each k-subset A
    of the leaves gets a leaf bag {A} plus the k swaps (A minus a member,
    plus 0). Width is C(n, k-1) - 1 for k >= 2 (the center bag dominates);
    for k = 1 the leaf bags of size 2 dominate and the width is 1.
    """
    if not 1 <= k <= n - 1:
        raise InvalidParameterError(f"star decomposition needs 1 <= k <= n-1, got k={k}, n={n}")
    labels = tuple(range(0, n + 1))
    center_bag = [subset_lex_rank(tuple(sorted(a + (0,))), labels) for a in itertools.combinations(range(1, n + 1), k - 1)]
    leaf_subsets = list(itertools.combinations(range(1, n + 1), k))
    bags: dict[int, list[int]] = {0: center_bag}
    tree_edges = []
    for i, a in enumerate(leaf_subsets, start=1):
        bag = [subset_lex_rank(a, labels)]
        for drop in a:
            swapped = tuple(sorted((set(a) - {drop}) | {0}))
            bag.append(subset_lex_rank(swapped, labels))
        bags[i] = bag
        tree_edges.append((0, i))
    tree = Graph(range(0, len(leaf_subsets) + 1), tree_edges)
    return TreeDecomposition(tree, bags, is_path=False)


# -- 2-token complete graph ----------------------------------------------


def f2kn_path_decomposition(n: int) -> TreeDecomposition:
    """Path decomposition of the 2-token graph of the complete graph on
    1..n: bag l holds every pair {i, j} with i <= l <= j.

    Bag sizes follow (l-1)(n-l) + n - 1, maximized at l = floor((n+1)/2).
    The final bag is contained in its predecessor but is kept so nodes
    range over l = 1..n.
    """
    if n < 2:
        raise InvalidParameterError(f"need n >= 2, got {n}")
    labels = tuple(range(1, n + 1))
    pairs = k_subsets(labels, 2)
    bags = {
        l: [r for r, (i, j) in enumerate(pairs) if i <= l <= j]
        for l in range(1, n + 1)
    }
    tree = Graph(range(1, n + 1), [(l, l + 1) for l in range(1, n)])
    return TreeDecomposition(tree, bags, is_path=True)


# -- general k-token complete graph ---------------------------------------


def _check_nk(n: int, k: int) -> None:
    if not 2 <= k <= n - 1:
        raise InvalidParameterError(f"need 2 <= k <= n-1, got k={k}, n={n}")


def lex_leq(x: Sequence[int], y: Sequence[int]) -> bool:
    """Lexicographic comparison of equal-length sorted tuples.

    Shared by the bag construction, the closed-form size formula checks
    and the validator so a single definition of the order is in force.
    """
    return tuple(x) <= tuple(y)


def bag_members(x: BagIndex, n: int, k: int) -> list[tuple[int, ...]]:
    """All k-subsets A of 1..n with A_s <= X <= A_t, where A_s and A_t are
    the first and last (k-1)-subtuples of sorted A."""
    out = []
    for a in itertools.combinations(range(1, n + 1), k):
        if lex_leq(a[: k - 1], x) and lex_leq(x, a[1:]):
            out.append(a)
    return out


def fkkn_lex_decomposition(n: int, k: int, cap: int = DEFAULT_TOKEN_VERTEX_CAP) -> TreeDecomposition:
    """Path decomposition of the k-token graph of the complete graph.

    Path nodes are the (k-1)-subsets of 1..n avoiding n, consecutive in
    lexicographic order; the bag of X holds every k-subset A whose leading
    (k-1)-tuple is at most X and whose trailing (k-1)-tuple is at least X.
    """
    _check_nk(n, k)
    if math.comb(n, k) > cap:
        raise ResourceLimitError(f"token graph would have {math.comb(n, k)} vertices, cap is {cap}")
    labels = tuple(range(1, n + 1))
    nodes = list(itertools.combinations(range(1, n), k - 1))
    subsets = list(itertools.combinations(range(1, n + 1), k))
    ranks = {a: subset_lex_rank(a, labels) for a in subsets}
    bags: dict[int, list[int]] = {}
    for i, x in enumerate(nodes):
        bags[i] = [ranks[a] for a in subsets if lex_leq(a[: k - 1], x) and lex_leq(x, a[1:])]
    tree = Graph(range(len(nodes)), [(i, i + 1) for i in range(len(nodes) - 1)])
    return TreeDecomposition(tree, bags, is_path=True)


def _binom(a: int, b: int) -> int:
    """Binomial with C(a, b) = 0 outside 0 <= b <= a (degenerate tails
    of the bag-size sums rely on this)."""
    if b < 0 or a < 0 or b > a:
        return 0
    return math.comb(a, b)


def _validate_bag_index(x: Sequence[int], n: int, k: int) -> tuple[int, ...]:
    x = tuple(x)
    if len(x) != k - 1:
        raise InvalidParameterError(f"bag index needs k-1={k - 1} members, got {len(x)}")
    if any(x[i] >= x[i + 1] for i in range(len(x) - 1)):
        raise InvalidParameterError(f"bag index {x} must be strictly increasing")
    if x and (x[0] < 1 or x[-1] >= n):
        raise InvalidParameterError(f"bag index {x} must lie in 1..{n - 1}")
    return x


def bag_size_formula(x: Sequence[int], n: int, k: int) -> int:
    """Closed-form size of the lexicographic bag at X.

    With x_k taken to be n, the count of k-subsets A satisfying
    A_s <= X <= A_t equals
    x_1 * sum_i C(n - x_i, k - i)  -  sum_i C(n - x_{i+1} + 1, k - i).
    """
    _check_nk(n, k)
    x = _validate_bag_index(x, n, k)
    xs = x + (n,)
    total = xs[0] * sum(_binom(n - xs[i], k - 1 - i) for i in range(k))
    total -= sum(_binom(n - xs[i + 1] + 1, k - 1 - i) for i in range(k - 1))
    return total


def _candidate_bag_indices(n: int, k: int) -> list[BagIndex]:
    """Bag indices that can maximize the bag size.

    The leading member is floor((n+1)/k) or ceil(n/k); each later member
    is n - (k-i)*x_1 or that plus one when those values leave room above
    x_1 + i - 1, and is forced to x_1 + i - 1 otherwise. Combinations that
    fail to be strictly increasing inside 1..n-1 are discarded.
    """
    firsts = sorted({(n + 1) // k, -(-n // k)})
    out: set[BagIndex] = set()
    for x1 in firsts:
        options: list[tuple[int, ...]] = [(x1,)]
        for i in range(2, k):
            anchor = n - (k - i) * x1
            opts = (anchor, anchor + 1) if anchor + 1 >= x1 + i - 1 else (x1 + i - 1,)
            options = [prefix + (o,) for prefix in options for o in opts]
        for cand in options:
            if all(cand[j] < cand[j + 1] for j in range(len(cand) - 1)) and 1 <= cand[0] and cand[-1] <= n - 1:
                out.add(cand)
    return sorted(out)


def max_bag(n: int, k: int) -> tuple[BagIndex, int]:
    """A bag index maximizing the bag size, with that size.

    Evaluates the closed-form size over the candidate indices allowed by
    the maximizer constraints; ties break toward the lexicographically
    smaller index.
    """
    _check_nk(n, k)
    candidates = _candidate_bag_indices(n, k)
    if not candidates:
        raise InvalidParameterError(f"no valid bag index candidates for n={n}, k={k}")
    best_x = None
    best_size = -1
    for x in candidates:
        size = bag_size_formula(x, n, k)
        if size > best_size:
            best_x, best_size = x, size
    return best_x, best_size


def upper_bound_tw_kn(n: int, k: int) -> int:
    """Treewidth upper bound for the k-token graph of the complete graph:
    the maximum lexicographic bag size minus one, taken over both leading
    candidates with their constrained tails."""
    return max_bag(n, k)[1] - 1


# -- JSON schema ---------------------------------------------------------


def decomposition_to_json(d: TreeDecomposition, tg: TokenGraph | None = None) -> dict:
    """Decomposition JSON schema, optionally bundling the owning token graph."""
    data = {
        "is_path": d.is_path,
        "tree_edges": sorted([min(u, v), max(u, v)] for u, v in d.tree.edges),
        "bags": {str(node): list(bag) for node, bag in sorted(d.bags.items())},
    }
    if tg is not None:
        from .tokens import token_graph_to_json

        data["token_graph"] = token_graph_to_json(tg)
    return data


def decomposition_from_json(data: dict) -> TreeDecomposition:
    for key in ("is_path", "tree_edges", "bags"):
        if key not in data:
            raise InvalidParameterError(f"decomposition JSON needs {key!r}")
    bags = {int(node): bag for node, bag in data["bags"].items()}
    edges = [tuple(e) for e in data["tree_edges"]]
    nodes = set(bags) | {u for e in edges for u in e}
    tree = Graph(nodes, edges)
    return TreeDecomposition(tree, bags, is_path=bool(data["is_path"]))
