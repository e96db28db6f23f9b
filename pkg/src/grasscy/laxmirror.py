"""Laurent-polynomial side of the mirror construction: Lax operators of
G(r,s), the complete-intersection mirror equation system, and constant-term
period series used as an independent oracle for the hypergeometric side.

Tracked parameters are carried as extra trailing coordinates of the
exponent vectors, with non-negative exponents; the constant term is taken
over the leading (torus) coordinates only.
"""

from __future__ import annotations

from dataclasses import dataclass

from .laurent import LaurentPoly, _mul_pruned
from .linalg import solve
from .series import PowerSeries, Q
from .toric import flat_index, nef_partition_sets, vertex_vector

ZERO = Q(0)


def lax_operator(r: int, s: int, q=None, track_q: bool = True) -> LaurentPoly:
    """The Laurent polynomial X_[1,1] + sum X_[a,b]^{-1}(X_[a+1,b] + X_[a,b+1])
    + q X_[s-r,r]^{-1}, with out-of-range factors dropped.

    Variables X_[a,b] (1<=a<=s-r, 1<=b<=r) are identified with the lattice
    basis f_{b,a} of the degeneration polytope, so the support is exactly
    its vertex set.  With track_q the exponent vectors get one extra
    coordinate recording the power of q; otherwise q must be a rational.
    """
    if not (1 <= r < s):
        raise ValueError(f"need 1 <= r < s, got ({r},{s})")
    nv = r * (s - r)
    width = nv + (1 if track_q else 0)

    def fvec(b: int, a: int, sign: int = 1) -> list[int]:
        v = [0] * width
        v[flat_index(r, s, b, a)] = sign
        return v

    terms: dict = {}

    def add(exp: list[int], c):
        terms[tuple(exp)] = terms.get(tuple(exp), ZERO) + Q(c)

    add(fvec(1, 1), 1)
    for a in range(1, s - r + 1):
        for b in range(1, r + 1):
            if a + 1 <= s - r:
                e = fvec(b, a + 1)
                e[flat_index(r, s, b, a)] -= 1
                add(e, 1)
            if b + 1 <= r:
                e = fvec(b + 1, a)
                e[flat_index(r, s, b, a)] -= 1
                add(e, 1)
    qexp = fvec(r, s - r, -1)
    if track_q:
        qexp[nv] = 1
        add(qexp, 1)
    else:
        add(qexp, Q(q if q is not None else 1))
    return LaurentPoly(width, terms)


class UnboundedPeriod(ValueError):
    """No grading makes the per-parameter-degree contributions finite."""


def _grading(g: LaurentPoly, nparams: int):
    """Weights (w, mu) with w.e + mu.t = 1 on every monomial of g."""
    nv = g.nvars - nparams
    rows = [[Q(x) for x in e] for e in g.terms]
    sol = solve(rows, [Q(1)] * len(rows))
    if sol is None:
        raise UnboundedPeriod("monomials do not lie on an affine hyperplane at height 1")
    w, mu = sol[:nv], sol[nv:]
    if any(m < 0 for m in mu):
        raise UnboundedPeriod(f"parameter weights {mu} must be non-negative")
    return w, mu


def period_ct(g: LaurentPoly, nparams: int, order: int) -> PowerSeries | dict:
    """Period series sum_m CT(g^m) collected by tracked-parameter degree.

    The grading pins down which power m feeds each parameter degree:
    m = mu . d.  Returns a PowerSeries for one parameter, otherwise a dict
    from exponent tuples (total degree <= order) to coefficients.
    """
    if not g.terms:
        if nparams == 1:
            return PowerSeries("q", (Q(1),) + (ZERO,) * order)
        return {(0,) * nparams: Q(1)}
    nv = g.nvars - nparams
    if nv <= 0:
        raise ValueError("no torus coordinates left after the tracked parameters")
    if any(any(x < 0 for x in e[nv:]) for e in g.terms):
        raise ValueError("tracked parameter exponents must be non-negative")
    _, mu = _grading(g, nparams)

    def ct_at(m: int) -> dict:
        """Parameter-degree -> CT over the torus coordinates of g^m."""
        reach = g.max_reach()
        acc = {(0,) * g.nvars: Q(1)}
        for t in range(m):
            remaining = m - t - 1
            bound = tuple(remaining * x for x in reach[:nv]) + (order,) * nparams
            acc = _mul_pruned(acc, g, bound)
        out: dict = {}
        for e, c in acc.items():
            if all(x == 0 for x in e[:nv]):
                out[e[nv:]] = out.get(e[nv:], ZERO) + c
        return out

    if nparams == 1:
        coeffs = [ZERO] * (order + 1)
        coeffs[0] = Q(1)
        for d in range(1, order + 1):
            m = mu[0] * d
            if m.denominator != 1:
                continue
            coeffs[d] = ct_at(int(m)).get((d,), ZERO)
        return PowerSeries("q", tuple(coeffs))

    result: dict = {(0,) * nparams: Q(1)}
    seen_m: set[int] = set()
    import itertools

    for dvec in itertools.product(range(order + 1), repeat=nparams):
        if 0 < sum(dvec) <= order:
            m = sum(mi * di for mi, di in zip(mu, dvec))
            if m.denominator == 1 and int(m) not in seen_m:
                seen_m.add(int(m))
                for dd, c in ct_at(int(m)).items():
                    if sum(dd) <= order and any(dd):
                        result[dd] = c
    return result


@dataclass(frozen=True)
class MirrorSystem:
    k: int
    n: int
    partition: tuple[tuple[int, ...], ...]  # J_1..J_r, labels 1..n
    polys: tuple[LaurentPoly, ...]  # p_1..p_n over the torus coordinates
    equations: tuple[LaurentPoly, ...]  # 1 - sum_{j in J_i} p_j


class ConstraintViolation(ValueError):
    pass


def _coeff(coeffs: dict, key) -> Q:
    if key not in coeffs:
        raise KeyError(f"missing coefficient {key}")
    return Q(coeffs[key])


def mirror_system(k: int, n: int, degrees, partition, a_coeffs: dict, b_coeffs: dict) -> MirrorSystem:
    """Build the n vertex polynomials p_i and the r mirror equations.

    a_coeffs maps (i,j) for the u-vertices, b_coeffs maps (l,m) for the
    v-vertices.  The (k-1)(n-k-1) compatibility constraints
    a_{k+1-i,j-1} b_{k+1-i,j} = a_{k+1-i,j} b_{k-i,j} are enforced.
    """
    degrees = tuple(degrees)
    if sum(degrees) != n:
        raise ValueError("degrees must sum to n")
    partition = tuple(tuple(sorted(J)) for J in partition)
    if len(partition) != len(degrees) or any(len(J) != d for J, d in zip(partition, degrees)):
        raise ValueError("partition block sizes must match the degrees")
    covered = sorted(x for J in partition for x in J)
    if covered != list(range(1, n + 1)):
        raise ValueError("partition must cover {1..n} exactly once")

    for i in range(1, k):
        for j in range(1, n - k):
            lhs = _coeff(a_coeffs, (k + 1 - i, j - 1)) * _coeff(b_coeffs, (k + 1 - i, j))
            rhs = _coeff(a_coeffs, (k + 1 - i, j)) * _coeff(b_coeffs, (k - i, j))
            if lhs != rhs:
                raise ConstraintViolation(
                    f"a[{k+1-i},{j-1}] b[{k+1-i},{j}] != a[{k+1-i},{j}] b[{k-i},{j}]"
                )

    nv = k * (n - k)
    sets = nef_partition_sets(k, n)
    polys = []
    for idx, labels in enumerate(sets, start=1):
        terms: dict = {}
        for kind, i, j in labels:
            c = _coeff(a_coeffs if kind == "u" else b_coeffs, (i, j))
            terms[vertex_vector(k, n, (kind, i, j))] = c
        polys.append(LaurentPoly(nv, terms))

    equations = []
    for J in partition:
        acc = LaurentPoly.constant(nv, 1)
        for j in J:
            acc = acc - polys[j - 1]
        equations.append(acc)
    return MirrorSystem(k, n, partition, tuple(polys), tuple(equations))


def canonical_gauge_coeffs(k: int, n: int, q=1) -> tuple[dict, dict]:
    """All a's = 1 and the constraints solved for the b's (all 1), leaving
    the single coefficient b_{k,n-k} = q free."""
    a = {(1, 0): Q(1)}
    for i in range(2, k + 1):
        for j in range(0, n - k):
            a[(i, j)] = Q(1)
    b = {}
    for i in range(1, k + 1):
        for j in range(1, n - k):
            b[(i, j)] = Q(1)
    b[(k, n - k)] = Q(q)
    return a, b
