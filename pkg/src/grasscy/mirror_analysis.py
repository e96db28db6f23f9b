"""From a maximally unipotent order-4 operator and its holomorphic solution
to instanton numbers: Frobenius logarithmic companions, the mirror map,
the Yukawa coupling in both coordinates, and the Lambert-series extraction."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .dop import DOp, to_ddz_form
from .series import (
    LogSeries,
    PowerSeries,
    Q,
    series_compose,
    series_exp,
    series_log,
    series_revert,
)

ZERO = Q(0)


class NotMUM(ValueError):
    """Operator is not maximally unipotent at the origin (z^0 part must be a
    constant times D^order)."""


class NonIntegralInstanton(ArithmeticError):
    def __init__(self, index: int, value: Fraction):
        super().__init__(f"instanton number n_{index} = {value} is not an integer")
        self.index = index
        self.value = value


def _check_mum(P: DOp):
    for (i, j), _ in P.terms.items():
        if i == 0 and j != P.order:
            raise NotMUM(f"z^0 part contains D^{j}, expected only D^{P.order}")
    if (0, P.order) not in P.terms:
        raise NotMUM("z^0 part is missing entirely")


# -- epsilon-jet arithmetic (truncated at length = operator order) ----------


def _jet_mul(a, b, L):
    out = [ZERO] * L
    for i, x in enumerate(a):
        if x:
            for j in range(L - i):
                y = b[j]
                if y:
                    out[i + j] += x * y
    return out


def _jet_inv(a, L):
    if a[0] == 0:
        raise ZeroDivisionError("jet with zero constant term")
    inv = [1 / a[0]] + [ZERO] * (L - 1)
    for m in range(1, L):
        acc = ZERO
        for j in range(1, m + 1):
            acc += a[j] * inv[m - j]
        inv[m] = -acc / a[0]
    return inv


def _poly_at_jet(coeffs, base, L):
    """Evaluate sum_j coeffs[j] x^j at x = base + eps as a jet."""
    x = [Q(base), Q(1)] + [ZERO] * max(0, L - 2)
    x = x[:L]
    acc = [ZERO] * L
    for c in reversed(coeffs):
        acc = _jet_mul(acc, x, L)
        acc[0] += c
    return acc


def frobenius_basis(P: DOp, order_n: int) -> list[LogSeries]:
    """All `order` Frobenius solutions at the MUM point, log degree 0..order-1.

    Works with the deformed recurrence in eps (A_m as jets modulo
    eps^order); the j-th solution collects the eps^j coefficient of
    z^eps * sum A_m(eps) z^m.
    """
    _check_mum(P)
    L = P.order
    zd = P.zdeg
    pi = [P.coeff_poly(i) for i in range(zd + 1)]
    jets = [[Q(1)] + [ZERO] * (L - 1)]  # A_0 = 1
    for m in range(1, order_n + 1):
        rhs = [ZERO] * L
        for i in range(1, min(m, zd) + 1):
            term = _jet_mul(_poly_at_jet(pi[i], m - i, L), jets[m - i], L)
            rhs = [a + b for a, b in zip(rhs, term)]
        inv0 = _jet_inv(_poly_at_jet(pi[0], m, L), L)
        jets.append([-x for x in _jet_mul(rhs, inv0, L)])

    sols = []
    for j in range(L):
        comps = []
        for i in range(j + 1):
            comps.append(PowerSeries("z", tuple(jet[j - i] for jet in jets)))
        sols.append(LogSeries(tuple(comps)))
    return sols


@dataclass(frozen=True)
class FrobeniusPair:
    phi0: PowerSeries  # holomorphic solution, phi0(0) = 1
    psi: PowerSeries  # log companion Phi_1 = phi0 log z + psi, psi(0) = 0


def frobenius(P: DOp, order_n: int) -> FrobeniusPair:
    basis = frobenius_basis(P, order_n)
    if len(basis) < 2:
        raise NotMUM("operator order must be >= 2")
    phi0 = basis[0].component(0)
    psi = basis[1].component(0)
    assert basis[1].component(1) == phi0
    return FrobeniusPair(phi0, psi)


@dataclass(frozen=True)
class MirrorMap:
    q_of_z: PowerSeries  # in z, q = z exp(psi/phi0)
    z_of_q: PowerSeries  # in q, compositional inverse


def mirror_map(fp: FrobeniusPair) -> MirrorMap:
    u = series_exp(fp.psi / fp.phi0)  # q/z
    qz = PowerSeries("z", (ZERO,) + u.coeffs)  # z * u, known one order further
    zq = series_revert(qz)
    return MirrorMap(qz, PowerSeries("q", zq.coeffs))


def yukawa_z(P: DOp, n0: int, order_n: int) -> PowerSeries:
    """Series expansion of the z-coordinate Yukawa coupling, normalized so
    that its value at z = 0 is n0.

    With P = sum b_t(z) (d/dz)^t of order 4 and MUM, the coupling solves
    W'/W = -(1/2)(b3/b4 - 6/z); the 6/z pole always cancels here because
    the subleading part of b3/b4 has residue 6 at a MUM point.
    """
    if P.order != 4:
        raise ValueError("Yukawa normalization requires an order-4 operator")
    _check_mum(P)
    b = to_ddz_form(P)
    b3, b4 = b[3], b[4]
    if any(c != 0 for c in b3[:3]) or any(c != 0 for c in b4[:4]):
        raise NotMUM("b3, b4 must vanish to orders 3, 4 at z = 0")
    B3 = b3[3:]
    B4 = b4[4:]
    pad = order_n + 1
    B3s = PowerSeries("z", tuple(B3) + (ZERO,) * max(0, pad - len(B3)))
    B4s = PowerSeries("z", tuple(B4) + (ZERO,) * max(0, pad - len(B4)))
    num = B3s - 6 * B4s
    if num.coeffs[0] != 0:
        raise NotMUM("residue of b3/b4 at 0 is not 6")
    num_over_z = PowerSeries("z", num.coeffs[1:])
    r = num_over_z / B4s.truncate(num_over_z.trunc)
    w_log = (r.integrate0()) * Q(-1, 2)
    return (series_exp(w_log) * n0).truncate(order_n)


def yukawa_q(kz3: PowerSeries, fp: FrobeniusPair, maps: MirrorMap) -> PowerSeries:
    """Push the coupling to the flat coordinate:
    K_q(q) = [K_z / phi0^2](z(q)) * (q z'(q)/z(q))^3."""
    n = min(kz3.trunc, fp.phi0.trunc, maps.z_of_q.trunc)
    base = kz3.truncate(n) / (fp.phi0.truncate(n) * fp.phi0.truncate(n))
    zq = maps.z_of_q.truncate(n)
    in_q = series_compose(base, zq)
    # q z'(q) / z(q): both numerator and denominator are divisible by q
    num = PowerSeries("q", tuple(Q(m) * c for m, c in enumerate(zq.coeffs))[1:])
    den = PowerSeries("q", zq.coeffs[1:])
    factor = num / den
    return in_q * factor * factor * factor


def extract_instantons(kq3: PowerSeries, count: int) -> list[int]:
    """Invert K_q = n0 + sum n_m m^3 q^m/(1-q^m); every n_m must be integral."""
    if kq3.trunc < count:
        raise ValueError(f"need {count} coefficients, series has {kq3.trunc}")
    ns: dict[int, int] = {}
    for m in range(1, count + 1):
        c = kq3.coeffs[m]
        for d in range(1, m):
            if m % d == 0:
                c -= ns[d] * d**3
        nm = c / m**3
        if nm.denominator != 1:
            raise NonIntegralInstanton(m, nm)
        ns[m] = int(nm)
    return [ns[m] for m in range(1, count + 1)]


def normal_form_check(P: DOp, kq3: PowerSeries, order_n: int) -> bool:
    """Check the D^2 (1/K) D^2 normal form: each Frobenius solution, divided
    by the holomorphic one and pushed to the flat coordinate, is annihilated
    by D^2 (1/K_q) D^2 to the given order."""
    basis = frobenius_basis(P, max(order_n, kq3.trunc))
    phi0 = basis[0].component(0)
    fp = FrobeniusPair(phi0, basis[1].component(0))
    maps = mirror_map(fp)
    n = min(phi0.trunc, maps.z_of_q.trunc, kq3.trunc)
    zq = maps.z_of_q.truncate(n)
    log_corr = series_log(PowerSeries("q", zq.coeffs[1:]))  # log(z(q)/q)
    inv_k = kq3.truncate(n).reciprocal()
    phi0_q = series_compose(phi0.truncate(n), zq)
    inv_phi0_q = phi0_q.reciprocal()
    for sol in basis:
        t = sol.compose_inner(zq, log_corr).mul_series(inv_phi0_q)
        w = t.theta().theta().mul_series(inv_k.truncate(t.trunc)).theta().theta()
        tr = min(w.trunc, order_n)
        for comp in w.components:
            if any(c != 0 for c in comp.coeffs[: tr + 1]):
                return False
    return True
