"""Exact truncated power series over Q, with log-extended companions.

Every series carries an explicit truncation order: coefficients are known
for degrees 0..trunc and nothing beyond.  Arithmetic returns the minimum
truncation of its operands; asking for a coefficient past the truncation
raises instead of silently returning zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

Q = Fraction

ZERO = Q(0)
ONE = Q(1)


class VariableMismatch(ValueError):
    """Binary operation on series in different variables."""


class TruncationError(ValueError):
    """Coefficient requested beyond the known truncation order."""


def _coerce(values: Iterable) -> tuple[Q, ...]:
    return tuple(Q(v) for v in values)


def qstr(x: Q) -> str:
    """Encode a rational as "p/q", or "p" when the denominator is 1."""
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def qparse(s: str) -> Q:
    return Q(s)


@dataclass(frozen=True)
class PowerSeries:
    var: str
    coeffs: tuple[Q, ...]  # length trunc + 1

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _coerce(self.coeffs))
        if len(self.coeffs) == 0:
            raise ValueError("series needs at least the constant coefficient")

    @property
    def trunc(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def zero(cls, var: str, trunc: int) -> "PowerSeries":
        return cls(var, (ZERO,) * (trunc + 1))

    @classmethod
    def one(cls, var: str, trunc: int) -> "PowerSeries":
        return cls(var, (ONE,) + (ZERO,) * trunc)

    @classmethod
    def gen(cls, var: str, trunc: int) -> "PowerSeries":
        if trunc < 1:
            raise ValueError("trunc must be >= 1 for the generator")
        return cls(var, (ZERO, ONE) + (ZERO,) * (trunc - 1))

    def __getitem__(self, m: int) -> Q:
        if m < 0:
            raise IndexError("negative degree")
        if m > self.trunc:
            raise TruncationError(f"coefficient of degree {m} beyond truncation {self.trunc}")
        return self.coeffs[m]

    def truncate(self, n: int) -> "PowerSeries":
        if n > self.trunc:
            raise TruncationError(f"cannot extend truncation {self.trunc} to {n}")
        return PowerSeries(self.var, self.coeffs[: n + 1])

    def _check(self, other: "PowerSeries"):
        if self.var != other.var:
            raise VariableMismatch(f"{self.var!r} vs {other.var!r}")

    def __add__(self, other):
        if isinstance(other, PowerSeries):
            self._check(other)
            n = min(self.trunc, other.trunc)
            return PowerSeries(self.var, tuple(self.coeffs[m] + other.coeffs[m] for m in range(n + 1)))
        c = Q(other)
        return PowerSeries(self.var, (self.coeffs[0] + c,) + self.coeffs[1:])

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries(self.var, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other if isinstance(other, PowerSeries) else -Q(other))

    def __rsub__(self, other):
        return (-self) + Q(other)

    def __mul__(self, other):
        if isinstance(other, PowerSeries):
            self._check(other)
            n = min(self.trunc, other.trunc)
            out = [ZERO] * (n + 1)
            for i, a in enumerate(self.coeffs[: n + 1]):
                if a == 0:
                    continue
                for j in range(n + 1 - i):
                    b = other.coeffs[j]
                    if b:
                        out[i + j] += a * b
            return PowerSeries(self.var, tuple(out))
        c = Q(other)
        return PowerSeries(self.var, tuple(c * a for a in self.coeffs))

    __rmul__ = __mul__

    def __eq__(self, other):
        return (
            isinstance(other, PowerSeries)
            and self.var == other.var
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.var, self.coeffs))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def shift(self, i: int) -> "PowerSeries":
        """Multiply by var**i, keeping the same truncation."""
        if i < 0:
            raise ValueError("negative shift")
        n = self.trunc
        out = (ZERO,) * min(i, n + 1) + self.coeffs[: max(0, n + 1 - i)]
        return PowerSeries(self.var, out)

    def deriv(self) -> "PowerSeries":
        """d/dvar; the result is only known to trunc - 1."""
        if self.trunc == 0:
            raise TruncationError("cannot differentiate a constant-only series")
        return PowerSeries(self.var, tuple(Q(m) * self.coeffs[m] for m in range(1, self.trunc + 1)))

    def theta(self) -> "PowerSeries":
        """The Euler operator var * d/dvar, truncation preserved."""
        return PowerSeries(self.var, tuple(Q(m) * c for m, c in enumerate(self.coeffs)))

    def integrate0(self) -> "PowerSeries":
        """Termwise integral from 0; the result is known one order further."""
        out = [ZERO] * (self.trunc + 2)
        for m, c in enumerate(self.coeffs):
            out[m + 1] = c / (m + 1)
        return PowerSeries(self.var, tuple(out))

    def reciprocal(self) -> "PowerSeries":
        if self.coeffs[0] == 0:
            raise ValueError("reciprocal needs a nonzero constant term")
        n = self.trunc
        inv = [ONE / self.coeffs[0]]
        for m in range(1, n + 1):
            acc = ZERO
            for j in range(1, m + 1):
                acc += self.coeffs[j] * inv[m - j]
            inv.append(-acc / self.coeffs[0])
        return PowerSeries(self.var, tuple(inv))

    def __truediv__(self, other):
        if isinstance(other, PowerSeries):
            return self * other.reciprocal()
        return self * (ONE / Q(other))


def series_mul(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    return a * b


def series_exp(a: PowerSeries) -> PowerSeries:
    """Formal exponential; requires a(0) = 0."""
    if a.coeffs[0] != 0:
        raise ValueError("exp needs constant term 0")
    n = a.trunc
    out = [ONE] + [ZERO] * n
    # m * E_m = sum_{j=1..m} j * a_j * E_{m-j}
    for m in range(1, n + 1):
        acc = ZERO
        for j in range(1, m + 1):
            if a.coeffs[j]:
                acc += Q(j) * a.coeffs[j] * out[m - j]
        out[m] = acc / m
    return PowerSeries(a.var, tuple(out))


def series_log(a: PowerSeries) -> PowerSeries:
    """Formal logarithm; requires a(0) = 1."""
    if a.coeffs[0] != 1:
        raise ValueError("log needs constant term 1")
    n = a.trunc
    out = [ZERO] * (n + 1)
    # m * L_m = m * a_m - sum_{j=1..m-1} j * L_j * a_{m-j}
    for m in range(1, n + 1):
        acc = Q(m) * a.coeffs[m]
        for j in range(1, m):
            if out[j] and a.coeffs[m - j]:
                acc -= Q(j) * out[j] * a.coeffs[m - j]
        out[m] = acc / m
    return PowerSeries(a.var, tuple(out))


def series_exp_log(a: PowerSeries, mode: str) -> PowerSeries:
    if mode == "exp":
        return series_exp(a)
    if mode == "log":
        return series_log(a)
    raise ValueError(f"mode must be 'exp' or 'log', got {mode!r}")


def series_compose(f: PowerSeries, g: PowerSeries) -> PowerSeries:
    """f(g) for g with zero constant term; result in g's variable."""
    if g.coeffs[0] != 0:
        raise ValueError("composition needs inner constant term 0")
    n = min(f.trunc, g.trunc)
    gg = g.truncate(n)
    out = PowerSeries.zero(g.var, n) + f.coeffs[n]
    for m in range(n - 1, -1, -1):  # Horner
        out = out * gg + f.coeffs[m]
    return out


def series_revert(a: PowerSeries) -> PowerSeries:
    """Compositional inverse g with a(g(t)) = t to truncation.

    Requires a(0) = 0 and a'(0) != 0.  Solved degree by degree.
    """
    if a.coeffs[0] != 0:
        raise ValueError("revert needs constant term 0")
    if a.trunc < 1 or a.coeffs[1] == 0:
        raise ValueError("revert needs a nonzero linear coefficient")
    n = a.trunc
    g = [ZERO, ONE / a.coeffs[1]] + [ZERO] * (n - 1)
    for m in range(2, n + 1):
        comp = series_compose(a.truncate(m), PowerSeries(a.var, tuple(g[: m + 1])))
        g[m] = -comp.coeffs[m] / a.coeffs[1]
    return PowerSeries(a.var, tuple(g))


# ---------------------------------------------------------------------------
# Log-extended series: F = sum_j f_j(z) * (log z)^j / j!


@dataclass(frozen=True)
class LogSeries:
    components: tuple[PowerSeries, ...]

    def __post_init__(self):
        comps = tuple(self.components)
        if not comps:
            raise ValueError("log series needs at least one component")
        var, tr = comps[0].var, comps[0].trunc
        for c in comps:
            if c.var != var or c.trunc != tr:
                raise ValueError("all components must share variable and truncation")
        while len(comps) > 1 and comps[-1].is_zero():
            comps = comps[:-1]
        object.__setattr__(self, "components", comps)

    @property
    def var(self) -> str:
        return self.components[0].var

    @property
    def trunc(self) -> int:
        return self.components[0].trunc

    @property
    def log_degree(self) -> int:
        return len(self.components) - 1

    def component(self, j: int) -> PowerSeries:
        if j < len(self.components):
            return self.components[j]
        return PowerSeries.zero(self.var, self.trunc)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    def theta(self) -> "LogSeries":
        """z d/dz, using D(f L^j/j!) = (Df) L^j/j! + f L^{j-1}/(j-1)!."""
        out = [self.component(j).theta() + self.component(j + 1) for j in range(len(self.components))]
        return LogSeries(tuple(out))

    def shift(self, i: int) -> "LogSeries":
        return LogSeries(tuple(c.shift(i) for c in self.components))

    def __add__(self, other: "LogSeries") -> "LogSeries":
        n = max(len(self.components), len(other.components))
        tr = min(self.trunc, other.trunc)
        return LogSeries(tuple(
            self.component(j).truncate(tr) + other.component(j).truncate(tr) for j in range(n)
        ))

    def __neg__(self):
        return LogSeries(tuple(-c for c in self.components))

    def __sub__(self, other):
        return self + (-other)

    def mul_series(self, s: PowerSeries) -> "LogSeries":
        return LogSeries(tuple(c * s for c in self.components))

    def __mul__(self, other):
        if isinstance(other, PowerSeries):
            return self.mul_series(other)
        if not isinstance(other, LogSeries):
            return self.mul_series(PowerSeries.zero(self.var, self.trunc) + Q(other))
        # (L^a/a!)(L^b/b!) = C(a+b,a) L^{a+b}/(a+b)!
        from math import comb

        tr = min(self.trunc, other.trunc)
        top = self.log_degree + other.log_degree
        out = [PowerSeries.zero(self.var, tr) for _ in range(top + 1)]
        for a, fa in enumerate(self.components):
            for b, fb in enumerate(other.components):
                out[a + b] = out[a + b] + Q(comb(a + b, a)) * (fa.truncate(tr) * fb.truncate(tr))
        return LogSeries(tuple(out))

    def compose_inner(self, zq: PowerSeries, log_corr: PowerSeries) -> "LogSeries":
        """Substitute z = zq(t) where zq = t * u(t), u(0) != 0.

        log z becomes log t + log_corr with log_corr = log u(t), so the
        result is a LogSeries in the new variable t.
        """
        from math import comb, factorial

        tr = min(self.trunc, zq.trunc, log_corr.trunc)
        top = self.log_degree
        out = [PowerSeries.zero(zq.var, tr) for _ in range(top + 1)]
        c_pows = [PowerSeries.one(zq.var, tr)]
        for _ in range(top):
            c_pows.append(c_pows[-1] * log_corr.truncate(tr))
        for j, fj in enumerate(self.components):
            fj_t = series_compose(fj.truncate(tr), zq.truncate(tr))
            # L^j/j! = sum_{i<=j} (log t)^i/i! * c^{j-i}/(j-i)!
            for i in range(j + 1):
                out[i] = out[i] + fj_t * (c_pows[j - i] * Q(1, factorial(j - i)))
        return LogSeries(tuple(out))


# ---------------------------------------------------------------------------
# Multi-parameter series: principal variable q plus auxiliary q~ exponents.


@dataclass(frozen=True)
class MultiSeries:
    nparams: int
    trunc: int
    terms: dict  # (m, tuple of aux exponents) -> Fraction

    def __post_init__(self):
        clean = {}
        for (m, s), c in self.terms.items():
            s = tuple(int(e) for e in s)
            if len(s) != self.nparams:
                raise ValueError("auxiliary exponent length mismatch")
            if m > self.trunc or m < 0:
                raise ValueError("principal exponent out of range")
            if any(e < 0 for e in s):
                raise ValueError("auxiliary exponents must be non-negative")
            c = Q(c)
            if c != 0:
                clean[(m, s)] = c
        object.__setattr__(self, "terms", clean)

    def specialize_ones(self, var: str = "q") -> PowerSeries:
        """Set every auxiliary variable to 1."""
        out = [ZERO] * (self.trunc + 1)
        for (m, _s), c in self.terms.items():
            out[m] += c
        return PowerSeries(var, tuple(out))


def series_to_json(f: PowerSeries) -> dict:
    return {"var": f.var, "trunc": f.trunc, "coeffs": [qstr(c) for c in f.coeffs]}


def series_from_json(d: dict) -> PowerSeries:
    f = PowerSeries(d["var"], tuple(qparse(c) for c in d["coeffs"]))
    if f.trunc != d["trunc"]:
        raise ValueError("trunc field disagrees with coefficient count")
    return f
