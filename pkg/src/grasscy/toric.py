"""Combinatorics of the toric degeneration of G(k,n): the polytope with
2(k-1)(n-k-1)+n vertices, the index-tuple poset, binomial equations,
nef-partition vertex sets, degrees, and the conifold/Hodge bookkeeping."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, gcd

from .linalg import rank, solve
from .series import Q

Label = tuple[str, int, int]  # ("u"|"v", i, j)


def _check_kn(k: int, n: int):
    if not (1 <= k < n):
        raise ValueError(f"need 1 <= k < n, got ({k},{n})")


def flat_index(k: int, n: int, i: int, j: int) -> int:
    """Position of basis vector f_{i,j} (1 <= i <= k, 1 <= j <= n-k)."""
    return (i - 1) * (n - k) + (j - 1)


def _basis_vec(k: int, n: int, i: int, j: int, sign: int = 1) -> list[int]:
    v = [0] * (k * (n - k))
    v[flat_index(k, n, i, j)] = sign
    return v


def vertex_vector(k: int, n: int, label: Label) -> tuple[int, ...]:
    kind, i, j = label
    dim = k * (n - k)
    v = [0] * dim
    if kind == "u":
        if (i, j) == (1, 0):
            v[flat_index(k, n, 1, 1)] = 1
        else:
            v[flat_index(k, n, i, j + 1)] = 1
            v[flat_index(k, n, i - 1, j + 1)] = -1
    elif kind == "v":
        if (i, j) == (k, n - k):
            v[flat_index(k, n, k, n - k)] = -1
        else:
            v[flat_index(k, n, i, j + 1)] = 1
            v[flat_index(k, n, i, j)] = -1
    else:
        raise ValueError(f"bad label {label}")
    return tuple(v)


def vertex_labels(k: int, n: int) -> list[Label]:
    """u's row-major, then v's, then the final v_{k,n-k}; byte-stable order."""
    labels: list[Label] = [("u", 1, 0)]
    for i in range(2, k + 1):
        for j in range(0, n - k):
            labels.append(("u", i, j))
    for i in range(1, k + 1):
        for j in range(1, n - k):
            labels.append(("v", i, j))
    labels.append(("v", k, n - k))
    return labels


@dataclass(frozen=True)
class DeltaKN:
    k: int
    n: int
    labels: tuple[Label, ...]
    vertices: tuple[tuple[int, ...], ...]

    @property
    def dim(self) -> int:
        return self.k * (self.n - self.k)


def build_delta(k: int, n: int) -> DeltaKN:
    _check_kn(k, n)
    labels = tuple(vertex_labels(k, n))
    verts = tuple(vertex_vector(k, n, lab) for lab in labels)
    assert len(verts) == 2 * (k - 1) * (n - k - 1) + n
    return DeltaKN(k, n, labels, verts)


def facets_and_reflexivity(delta: DeltaKN, dim_cap: int = 10):
    """Enumerate facet inequalities and test reflexivity.

    Every facet misses the origin (it is interior), so a facet hyperplane can
    be written a.x = 1 with a rational; it is found by solving through each
    affinely spanning dim-subset of vertices.  Returns (facets, reflexive)
    where facets is a list of (m, c) with <m, x> >= -c over the polytope, m a
    primitive integer vector.
    """
    d = delta.dim
    if d > dim_cap:
        raise ValueError(f"dimension {d} exceeds hull cap {dim_cap}")
    verts = delta.vertices
    facets: dict[tuple, Fraction] = {}
    for subset in itertools.combinations(range(len(verts)), d):
        rows = [[Q(x) for x in verts[s]] for s in subset]
        a = solve(rows, [Q(1)] * d)
        if a is None:
            continue
        vals = [sum(ai * x for ai, x in zip(a, v)) for v in verts]
        if any(val > 1 for val in vals):
            continue
        # the contact set must affinely span the hyperplane, else this is a
        # supporting hyperplane of a lower-dimensional face
        contact = [[Q(x) for x in v] + [Q(1)] for v, val in zip(verts, vals) if val == 1]
        if rank(contact) < d:
            continue
        # primitive integer normal, inequality <m, x> >= -c
        den = 1
        for x in a:
            den = den * x.denominator // gcd(den, x.denominator)
        ints = [int(x * den) for x in a]
        g = 0
        for x in ints:
            g = gcd(g, x)
        ints = [x // g for x in ints]
        m = tuple(-x for x in ints)
        c = Fraction(den, g)
        facets[m] = c
    reflexive = all(c == 1 for c in facets.values())
    return sorted(facets.items()), reflexive


def origin_interior(delta: DeltaKN) -> bool:
    facets, _ = facets_and_reflexivity(delta)
    return all(c > 0 for _, c in facets)


# ---------------------------------------------------------------------------
# The poset of strictly increasing k-tuples in {1..n}.


def poset_aknn(k: int, n: int) -> list[tuple[int, ...]]:
    _check_kn(k, n)
    return list(itertools.combinations(range(1, n + 1), k))


def tuple_leq(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def tuple_meet(a, b) -> tuple[int, ...]:
    return tuple(min(x, y) for x, y in zip(a, b))


def tuple_join(a, b) -> tuple[int, ...]:
    return tuple(max(x, y) for x, y in zip(a, b))


def binomial_equations(k: int, n: int) -> list[dict]:
    """One record per unordered incomparable pair: z_a z_a' = z_min z_max."""
    tuples = poset_aknn(k, n)
    out = []
    for a, b in itertools.combinations(tuples, 2):
        if tuple_leq(a, b) or tuple_leq(b, a):
            continue
        out.append({"a": a, "b": b, "min": tuple_meet(a, b), "max": tuple_join(a, b)})
    return out


def nef_partition_sets(k: int, n: int) -> list[list[Label]]:
    _check_kn(k, n)
    sets: list[list[Label]] = [[("u", 1, 0)]]
    for i in range(2, k + 1):
        sets.append([("u", i, j) for j in range(0, n - k)])
    for j in range(1, n - k):
        sets.append([("v", i, j) for i in range(1, k + 1)])
    sets.append([("v", k, n - k)])
    assert len(sets) == n
    return sets


def degree_grassmannian(k: int, n: int) -> int:
    """Degree of the Pluecker embedding: (k(n-k))! prod_i i!/(n-k+i)!."""
    _check_kn(k, n)
    num = factorial(k * (n - k))
    frac = Fraction(1)
    for i in range(k):
        frac *= Fraction(factorial(i), factorial(n - k + i))
    result = num * frac
    assert result.denominator == 1
    return int(result)


# ---------------------------------------------------------------------------
# Calabi-Yau case bookkeeping.


@dataclass(frozen=True)
class CYCase:
    name: str
    k: int
    n: int
    degrees: tuple[int, ...]
    strata_degrees: tuple[int, ...]
    h11: int
    h21: int
    instantons: tuple[int, ...] | None = None  # n_1..n_5 when published
    notes: str = ""

    def __post_init__(self):
        if sum(self.degrees) != self.n:
            raise ValueError(f"{self.name}: degrees must sum to n")
        if tuple(sorted(self.degrees)) != tuple(self.degrees):
            raise ValueError(f"{self.name}: degrees must be weakly increasing")
        if len(self.strata_degrees) != self.alpha:
            raise ValueError(f"{self.name}: expected {self.alpha} strata degrees")

    @property
    def alpha(self) -> int:
        return (self.k - 1) * (self.n - self.k - 1)

    @property
    def chi(self) -> int:
        return 2 * (self.h11 - self.h21)

    @property
    def n0(self) -> int:
        prod = 1
        for d in self.degrees:
            prod *= d
        return prod * degree_grassmannian(self.k, self.n)


def node_count(case: CYCase) -> int:
    if not case.strata_degrees:
        raise ValueError("strata degrees not populated")
    prod = 1
    for d in case.degrees:
        prod *= d
    return prod * sum(case.strata_degrees)


def hodge_after_transition(case: CYCase) -> tuple[int, int, int]:
    """(h11, h21, chi) of the small resolution after the conifold transition."""
    p = node_count(case)
    h11 = case.h11 + case.alpha
    h21 = case.h21 + case.alpha - p
    return h11, h21, 2 * (h11 - h21)
