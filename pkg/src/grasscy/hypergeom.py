"""The A-hypergeometric series of the degenerate Grassmannian, its
specialization at all auxiliary parameters = 1, and the factorial
modification that turns it into a complete-intersection period series.

The coefficient of q^m is a sum over a (k-1) x (n-k-1) grid of integers
0 <= s_{i,j} <= m with s_{i,j} read as m outside the grid; each grid cell
contributes binomial(s_{i+1,j}, s_{i,j}) * binomial(s_{i,j+1}, s_{i,j}),
and the whole sum is divided by (m!)^n.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial

from .series import MultiSeries, PowerSeries, Q

MAX_ORDER = 200  # resource bound; grid sums grow like m^(grid size)


@dataclass(frozen=True)
class ASeriesSpec:
    k: int
    n: int
    trunc: int
    keep_params: bool = False
    param_degree_bound: int | None = None

    def __post_init__(self):
        if not (1 <= self.k < self.n):
            raise ValueError("need 1 <= k < n")
        if self.trunc < 0:
            raise ValueError("truncation must be >= 0")
        if self.trunc > MAX_ORDER:
            raise ValueError(f"truncation {self.trunc} exceeds resource bound {MAX_ORDER}")


def _grid_positions(k: int, n: int) -> list[tuple[int, int]]:
    """Cells (i,j), 1<=i<=k-1, 1<=j<=n-k-1, ordered so that the neighbours
    (i+1,j) and (i,j+1) are assigned before (i,j)."""
    pos = [(i, j) for i in range(1, k) for j in range(1, n - k)]
    pos.sort(key=lambda ij: -(ij[0] + ij[1]))
    return pos


def _grid_sum(k: int, n: int, m: int, collect):
    """Iterate over all grid assignments with nonzero binomial weight.

    Cells are filled in decreasing i+j order; a cell is bounded by the
    already-assigned values at (i+1,j) and (i,j+1) (m outside the grid),
    which prunes everything the binomials would kill anyway.
    """
    pos = _grid_positions(k, n)
    values: dict[tuple[int, int], int] = {}

    def lookup(i: int, j: int) -> int:
        if i > k - 1 or j > n - k - 1:
            return m
        return values[(i, j)]

    def rec(idx: int, weight: int):
        if idx == len(pos):
            collect(weight, values)
            return
        i, j = pos[idx]
        up = lookup(i + 1, j)
        right = lookup(i, j + 1)
        for s in range(min(up, right) + 1):
            w = comb(up, s) * comb(right, s)
            if w:
                values[(i, j)] = s
                rec(idx + 1, weight * w)
        values.pop((i, j), None)

    rec(0, 1)


def a_series(spec: ASeriesSpec):
    """A-series of the toric degeneration; PowerSeries in q when
    keep_params is off, MultiSeries over the auxiliary variables otherwise."""
    k, n, N = spec.k, spec.n, spec.trunc
    grid = [(i, j) for i in range(1, k) for j in range(1, n - k)]
    if not spec.keep_params:
        coeffs = []
        for m in range(N + 1):
            total = 0

            def add(w, _values, _m=m):
                nonlocal total
                total += w

            _grid_sum(k, n, m, add)
            coeffs.append(Q(total, factorial(m) ** n))
        return PowerSeries("q", tuple(coeffs))

    bound = spec.param_degree_bound
    terms: dict = {}
    for m in range(N + 1):
        fm = factorial(m) ** n

        def add(w, values, _m=m, _fm=fm):
            s = tuple(values[(i, j)] for i, j in grid)
            if bound is not None and sum(s) > bound:
                return
            key = (_m, s)
            terms[key] = terms.get(key, Q(0)) + Q(w, _fm)

        _grid_sum(k, n, m, add)
    return MultiSeries(len(grid), N, terms)


def a_series_qspecialized(k: int, n: int, trunc: int) -> PowerSeries:
    return a_series(ASeriesSpec(k, n, trunc))


@dataclass(frozen=True)
class FactorialBundle:
    degrees: tuple[int, ...]

    def __post_init__(self):
        if any(d <= 0 for d in self.degrees):
            raise ValueError("degrees must be positive")


def factorial_trick(a: PowerSeries, bundle: FactorialBundle) -> PowerSeries:
    """Multiply the m-th coefficient by prod_i (l_i * m)!."""
    out = []
    for m, c in enumerate(a.coeffs):
        w = 1
        for l in bundle.degrees:
            w *= factorial(l * m)
        out.append(c * w)
    return PowerSeries(a.var, tuple(out))
