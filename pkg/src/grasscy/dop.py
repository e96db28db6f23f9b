"""Differential operators P = sum c_{i,j} z^i D^j with D = z d/dz.

The same class doubles as an operator in q (for the quantum differential
system): only the name of the variable differs.  Canonical form clears
denominators to primitive integer coefficients with a positive leading
term, where "leading" means highest D-degree, then lowest z-degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd

from .linalg import nullspace
from .series import LogSeries, PowerSeries, Q, qparse, qstr

ZERO = Q(0)


class NoAnnihilator(ValueError):
    """pf_fit found no operator within the given bounds."""


class AmbiguousAnnihilator(ValueError):
    """Nullspace dimension > 1 at the minimal bounds."""


@dataclass(frozen=True)
class DOp:
    terms: dict  # (i, j) -> Fraction, z-degree i, D-degree j

    def __post_init__(self):
        clean = {}
        for (i, j), c in self.terms.items():
            c = Q(c)
            if c != 0:
                if i < 0 or j < 0:
                    raise ValueError("negative degrees not allowed")
                clean[(int(i), int(j))] = c
        object.__setattr__(self, "terms", clean)

    @property
    def order(self) -> int:
        return max((j for _, j in self.terms), default=0)

    @property
    def zdeg(self) -> int:
        return max((i for i, _ in self.terms), default=0)

    def is_zero(self) -> bool:
        return not self.terms

    # -- algebra ------------------------------------------------------------

    @classmethod
    def zero(cls) -> "DOp":
        return cls({})

    @classmethod
    def const(cls, c) -> "DOp":
        return cls({(0, 0): Q(c)})

    @classmethod
    def D(cls, power: int = 1) -> "DOp":
        return cls({(0, power): Q(1)})

    @classmethod
    def z(cls, power: int = 1) -> "DOp":
        return cls({(power, 0): Q(1)})

    def __add__(self, other):
        if not isinstance(other, DOp):
            other = DOp.const(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, ZERO) + c
        return DOp(out)

    __radd__ = __add__

    def __neg__(self):
        return DOp({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, DOp):
            other = DOp.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        """Operator composition; D^j z^i = z^i (D + i)^j."""
        if not isinstance(other, DOp):
            return DOp({k: Q(other) * c for k, c in self.terms.items()})
        out: dict = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                for t in range(j1 + 1):
                    c = c1 * c2 * comb(j1, t) * Fraction(i2) ** (j1 - t)
                    if c != 0:
                        k = (i1 + i2, t + j2)
                        out[k] = out.get(k, ZERO) + c
        return DOp(out)

    def __rmul__(self, other):
        return DOp({k: Q(other) * c for k, c in self.terms.items()})

    def __pow__(self, n: int):
        out = DOp.const(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        return isinstance(other, DOp) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- normal form ---------------------------------------------------------

    def canonical(self) -> "DOp":
        """Primitive integer coefficients, leading term positive."""
        if not self.terms:
            return self
        num = 0
        den = 1
        for c in self.terms.values():
            num = gcd(num, c.numerator)
            den = den * c.denominator // gcd(den, c.denominator)
        scale = Q(den, num)
        lead = min(self.terms, key=lambda k: (-k[1], k[0]))
        if self.terms[lead] < 0:
            scale = -scale
        return DOp({k: c * scale for k, c in self.terms.items()})

    # -- action ---------------------------------------------------------------

    def indicial(self, m) -> Q:
        """z^0 part evaluated at D = m."""
        return sum((c * Fraction(m) ** j for (i, j), c in self.terms.items() if i == 0), ZERO)

    def coeff_poly(self, i: int) -> list[Q]:
        """Coefficients of the polynomial p_i(x) = sum_j c_{i,j} x^j."""
        out = [ZERO] * (self.order + 1)
        for (ii, j), c in self.terms.items():
            if ii == i:
                out[j] = c
        return out

    def apply(self, f):
        """Apply to a PowerSeries or LogSeries; output truncation = f.trunc."""
        if isinstance(f, LogSeries):
            return self._apply_log(f)
        n = f.trunc
        out = [ZERO] * (n + 1)
        for (i, j), c in self.terms.items():
            for m in range(i, n + 1):
                fm = f.coeffs[m - i]
                if fm:
                    out[m] += c * Fraction(m - i) ** j * fm
        return PowerSeries(f.var, tuple(out))

    def _apply_log(self, f: LogSeries) -> LogSeries:
        by_j: dict[int, dict] = {}
        for (i, j), c in self.terms.items():
            by_j.setdefault(j, {})[i] = c
        acc = None
        power = f  # D^j f, computed incrementally
        for j in range(self.order + 1):
            if j > 0:
                power = power.theta()
            if j in by_j:
                for i, c in by_j[j].items():
                    piece = power.shift(i) * c
                    acc = piece if acc is None else acc + piece
        assert acc is not None
        return acc

    def d_derivative(self) -> "DOp":
        """Formal derivative with respect to D: c z^i D^j -> c j z^i D^{j-1}."""
        out: dict = {}
        for (i, j), c in self.terms.items():
            if j > 0:
                out[(i, j - 1)] = out.get((i, j - 1), ZERO) + c * j
        return DOp(out)


# Stirling numbers of the second kind, for D^j = sum_t S(j,t) z^t (d/dz)^t


def stirling2(j: int, t: int) -> int:
    if t == 0:
        return 1 if j == 0 else 0
    return sum((-1) ** (t - i) * comb(t, i) * i**j for i in range(t + 1)) // _fact(t)


def _fact(n: int) -> int:
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def to_ddz_form(P: DOp) -> list[list[Q]]:
    """Coefficients b_t(z) of P = sum_t b_t(z) (d/dz)^t, each as a dense
    coefficient list in z."""
    r = P.order
    d = P.zdeg
    out = [[ZERO] * (d + r + 1) for _ in range(r + 1)]
    for (i, j), c in P.terms.items():
        for t in range(j + 1):
            s = stirling2(j, t)
            if s:
                out[t][i + t] += c * s
    for t in range(r + 1):
        while len(out[t]) > 1 and out[t][-1] == 0:
            out[t].pop()
    return out


def from_ddz_form(b: list[list[Q]]) -> DOp:
    """Inverse of to_ddz_form: z^t (d/dz)^t = D(D-1)...(D-t+1)."""
    out = DOp.zero()
    for t, poly in enumerate(b):
        falling = DOp.const(1)
        for s in range(t):
            falling = falling * (DOp.D() - s)
        for i, c in enumerate(poly):
            if c:
                if i < t:
                    raise ValueError("b_t(z) must be divisible by z^t for a D-form operator")
                out = out + DOp({(i - t, 0): c}) * falling
    return out


def pf_fit(f: PowerSeries, max_order: int, max_zdeg: int, guard: int = 10) -> DOp:
    """Smallest operator (graded by order+zdeg, then order) annihilating f.

    Sets up sum_{i,j} c_{i,j} (m-i)^j b_{m-i} = 0 for every m <= f.trunc and
    takes the first candidate (r, d) whose exact nullspace is nonzero; the
    rows beyond (r+1)(d+1) act as the certificate.
    """
    if f.trunc < (max_order + 1) * (max_zdeg + 1) + guard:
        raise ValueError(
            f"series truncation {f.trunc} too small for bounds "
            f"({max_order},{max_zdeg}) with guard {guard}"
        )
    candidates = []
    for r in range(1, max_order + 1):
        for d in range(0, max_zdeg + 1):
            candidates.append((r, d))
    candidates.sort(key=lambda rd: (rd[0] + rd[1], rd[0]))
    for r, d in candidates:
        if f.trunc < (r + 1) * (d + 1) + guard:
            continue
        cols = [(i, j) for i in range(d + 1) for j in range(r + 1)]
        rows = []
        for m in range(f.trunc + 1):
            row = []
            for i, j in cols:
                if m - i < 0:
                    row.append(ZERO)
                else:
                    row.append(Fraction(m - i) ** j * f.coeffs[m - i])
            rows.append(row)
        basis = nullspace(rows)
        basis = [v for v in basis if any(x != 0 for x in v)]
        if not basis:
            continue
        if len(basis) > 1:
            raise AmbiguousAnnihilator(
                f"nullspace dimension {len(basis)} at minimal bounds ({r},{d})"
            )
        v = basis[0]
        op = DOp({col: x for col, x in zip(cols, v) if x != 0})
        return op.canonical()
    raise NoAnnihilator(f"no annihilator within bounds ({max_order},{max_zdeg})")


def dop_to_json(P: DOp, varname: str = "z") -> dict:
    items = sorted(P.terms.items(), key=lambda kv: (-kv[0][1], kv[0][0]))
    return {
        "order": P.order,
        "var": varname,
        "terms": [{"qdeg": i, "ddeg": j, "coeff": qstr(c)} for (i, j), c in items],
    }


def dop_from_json(d: dict) -> DOp:
    return DOp({(t["qdeg"], t["ddeg"]): qparse(t["coeff"]) for t in d["terms"]})
