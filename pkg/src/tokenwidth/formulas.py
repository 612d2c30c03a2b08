"""Closed-form treewidth bounds for token graphs of the three families.

Every displayed numeric bound is a pure function of (n, k), suitable for
table generation and for cross-checking constructions and oracles.
Asymptotic order statements are reported as annotated text, never as
finite-n inequalities.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidParameterError
from .decompositions import upper_bound_tw_kn


@dataclass(frozen=True)
class BoundReport:
    """Collected bounds for one (family, n, k) instance.

    ``lower`` and ``upper`` are finite-n valid bounds (lower may be a
    vacuous negative real from the spectral route); ``exact`` is set only
    where the value is known exactly. ``sources`` names the argument
    behind each number.
    """

    family: str
    n: int
    k: int
    lower: float | None = None
    upper: int | None = None
    exact: int | None = None
    sources: tuple[str, ...] = ()

    def __post_init__(self):
        if self.lower is not None and self.exact is not None and self.lower > self.exact:
            raise InvalidParameterError("bound report violates lower <= exact")
        if self.exact is not None and self.upper is not None and self.exact > self.upper:
            raise InvalidParameterError("bound report violates exact <= upper")
        if self.lower is not None and self.upper is not None and self.lower > self.upper:
            raise InvalidParameterError("bound report violates lower <= upper")


def binom(a: int, b: int) -> int:
    """Binomial coefficient with C(a, b) = 0 outside 0 <= b <= a."""
    if b < 0 or a < 0 or b > a:
        return 0
    return math.comb(a, b)


# -- per-family closed forms ----------------------------------------------


def star_upper_width(n: int, k: int) -> int:
    """Width of the star-shaped decomposition of the k-token star graph:
    C(n, k-1) - 1 for k >= 2; for k = 1 the two-element leaf bags
    dominate the singleton center bag and the width is 1."""
    if not 1 <= k <= n - 1:
        raise InvalidParameterError(f"need 1 <= k <= n-1, got k={k}, n={n}")
    if k == 1:
        return 1
    return binom(n, k - 1) - 1


def star_spectral_lower(n: int, k: int) -> float:
    """Algebraic-connectivity lower bound for the k-token star graph:
    C(n+1, k) / (12 * max_degree) - 1 with unit connectivity."""
    if not 1 <= k <= n - 1:
        raise InvalidParameterError(f"need 1 <= k <= n-1, got k={k}, n={n}")
    max_degree = max(k, n - k + 1)
    return binom(n + 1, k) / (12.0 * max_degree) - 1.0


def path_exact_2token(n: int) -> int:
    """Exact treewidth of the 2-token path graph: floor(n/2)."""
    if n < 2:
        raise InvalidParameterError(f"need n >= 2, got {n}")
    return n // 2


def f2kn_exact(n: int) -> int:
    """Exact pathwidth and treewidth of the 2-token complete graph:
    n/2 (n/2 - 1) + n - 2 for even n, ((n-1)/2)^2 + n - 2 for odd."""
    if n < 2:
        raise InvalidParameterError(f"need n >= 2, got {n}")
    if n % 2 == 0:
        half = n // 2
        return half * (half - 1) + n - 2
    return ((n - 1) // 2) ** 2 + n - 2


def f2kn_bramble_order(n: int) -> int:
    """Certified bramble order of the 2-token complete graph (one more
    than the exact treewidth)."""
    return f2kn_exact(n) + 1


def f3kn_upper(n: int) -> int:
    """Treewidth upper bound for the 3-token complete graph:
    ceil(n/3) * C(n - ceil(n/3), 2) + ceil(n/3)(ceil(n/3) + 1)/2 - 2."""
    if n < 4:
        raise InvalidParameterError(f"need n >= 4, got {n}")
    t = -(-n // 3)
    return t * binom(n - t, 2) + t * (t + 1) // 2 - 2


def complete_spectral_lower(n: int, k: int) -> float:
    """Algebraic-connectivity lower bound for the k-token complete graph:
    n * C(n, k) / (12 k (n - k)) - 1."""
    if not 1 <= k <= n - 1:
        raise InvalidParameterError(f"need 1 <= k <= n-1, got k={k}, n={n}")
    return n * binom(n, k) / (12.0 * k * (n - k)) - 1.0


# -- report builders -------------------------------------------------------


def star_bounds(n: int, k: int) -> BoundReport:
    """Bounds for the k-token graph of the star with n leaves."""
    if not 1 <= k <= n - 1:
        raise InvalidParameterError(f"need 1 <= k <= n-1, got k={k}, n={n}")
    lower = star_spectral_lower(n, k)
    sources = ["algebraic-connectivity lower bound"]
    if k == 1:
        sources.append("k=1 token graph is the star itself (decomposition bound is outside its useful range)")
        return BoundReport("star", n, k, lower=lower, upper=1, exact=1, sources=tuple(sources))
    upper = star_upper_width(n, k)
    sources.append("star-shaped decomposition with all-swaps center bag")
    exact = None
    if k == 2:
        exact = n - 1
        lower = float(max(lower, exact))
        sources.append("disjoint pair-fan bramble certifies the 2-token value n-1")
    return BoundReport("star", n, k, lower=lower, upper=upper, exact=exact, sources=tuple(sources))


def path_bounds(n: int, k: int) -> BoundReport:
    """Bounds for the k-token graph of the path on n vertices."""
    if not 1 <= k <= n - 1:
        raise InvalidParameterError(f"need 1 <= k <= n-1, got k={k}, n={n}")
    if k == 1:
        return BoundReport("path", n, k, lower=1.0, upper=1, exact=1,
                           sources=("k=1 token graph is the path itself",))
    if k == 2:
        exact = path_exact_2token(n)
        return BoundReport(
            "path", n, k, lower=float(exact), upper=exact, exact=exact,
            sources=(
                "grid minor over two half-path token blocks",
                "diagonal ordering with maximum prefix border floor(n/2)",
            ),
        )
    low_order = (n // k) ** (k - 1)
    high_order = (n - k + 1) ** (k - 1)
    return BoundReport(
        "path", n, k,
        sources=(
            f"grid-minor lower order floor(n/k)^(k-1) = {low_order} (asymptotic order, not a finite-n inequality)",
            f"grid-embedding upper order (n-k+1)^(k-1) = {high_order} (asymptotic order, not a finite-n inequality)",
        ),
    )


def complete_bounds(n: int, k: int) -> BoundReport:
    """Bounds for the k-token graph of the complete graph on n vertices."""
    if not 2 <= k <= n - 1:
        raise InvalidParameterError(f"need 2 <= k <= n-1, got k={k}, n={n}")
    upper = upper_bound_tw_kn(n, k)
    lower = complete_spectral_lower(n, k)
    sources = ["algebraic-connectivity lower bound",
               "lexicographic path decomposition over (k-1)-subsets"]
    exact = None
    if k == 2 and n >= 4:
        exact = f2kn_exact(n)
        if upper != exact:
            raise AssertionError(f"2-token width {upper} disagrees with the exact branch {exact} at n={n}")
        lower = float(max(lower, exact))
        sources.append("path bramble certifies the 2-token value exactly")
    if k == 3:
        cor = f3kn_upper(n)
        if cor != upper:
            raise AssertionError(f"3-token closed form {cor} disagrees with the bag maximum {upper} at n={n}")
        sources.append("3-token closed form agrees with the bag maximum")
    return BoundReport("complete", n, k, lower=lower, upper=upper, exact=exact, sources=tuple(sources))


def bounds(family: str, n: int, k: int) -> BoundReport:
    if family == "star":
        return star_bounds(n, k)
    if family == "path":
        return path_bounds(n, k)
    if family == "complete":
        return complete_bounds(n, k)
    raise InvalidParameterError(f"unknown family {family!r}")
