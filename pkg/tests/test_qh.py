from math import comb

import pytest

from grasscy.dop import DOp
from grasscy.qh import (
    build_qh_matrix,
    partitions_in_box,
    quantum_pieri_sigma1,
    scalar_operator,
    verify_conjecture,
)
from grasscy.upoly import PZERO, padd, pmul

D = DOp.D()
q = DOp.z()


def test_partitions_in_box_count_and_order():
    basis = partitions_in_box(2, 4)
    assert len(basis) == comb(4, 2)
    assert basis[0] == (0, 0)
    assert basis[-1] == (2, 2)
    sizes = [sum(p) for p in basis]
    assert sizes == sorted(sizes)


def test_pieri_classical():
    assert quantum_pieri_sigma1((0, 0), 2, 4) == [((1, 0), 0)]
    assert set(quantum_pieri_sigma1((1, 1), 2, 4)) == {((2, 1), 0)}
    assert set(quantum_pieri_sigma1((1, 0), 2, 4)) == {((2, 0), 0), ((1, 1), 0)}


def test_pieri_quantum_term():
    # top class sigma_(2,2) in G(2,4): sigma_1 * sigma_(2,2) = q sigma_(1,0)
    assert quantum_pieri_sigma1((2, 2), 2, 4) == [((1, 0), 1)]
    # sigma_(2,1): classical (2,2) plus quantum q sigma_(0,0)
    assert set(quantum_pieri_sigma1((2, 1), 2, 4)) == {((2, 2), 0), ((0, 0), 1)}


def test_pieri_rejects_bad_partition():
    with pytest.raises(ValueError):
        quantum_pieri_sigma1((3, 0), 2, 4)
    with pytest.raises(ValueError):
        quantum_pieri_sigma1((0, 1), 2, 4)


def _matmul(A, B, dim):
    return tuple(
        tuple(
            _psum(pmul(A[i][t], B[t][j]) for t in range(dim)) for j in range(dim)
        )
        for i in range(dim)
    )


def _psum(polys):
    acc = PZERO
    for p in polys:
        acc = padd(acc, p)
    return acc


@pytest.mark.parametrize("k,n", [(2, 4), (2, 5), (3, 6)])
def test_grading(k, n):
    """Multiplication by sigma_1 raises degree by 1 with q of degree n."""
    M = build_qh_matrix(k, n)
    for col, lam in enumerate(M.basis):
        for row, mu in enumerate(M.basis):
            p = M.entries[row][col]
            for qpow, c in enumerate(p):
                if c:
                    assert sum(mu) + qpow * n == sum(lam) + 1


@pytest.mark.parametrize("k,n", [(2, 4), (2, 5), (3, 6)])
def test_associativity_of_iterated_multiplication(k, n):
    """(sigma_1^a) * (sigma_1^b sigma_lam) == sigma_1^(a+b) sigma_lam as
    matrix identities M^a M^b = M^(a+b)."""
    M = build_qh_matrix(k, n)
    dim = M.dim
    E = M.entries
    M2 = _matmul(E, E, dim)
    M3a = _matmul(M2, E, dim)
    M3b = _matmul(E, M2, dim)
    assert M3a == M3b
    M4 = _matmul(M2, M2, dim)
    assert M4 == _matmul(M3a, E, dim)


def test_scalar_operator_g24():
    assert scalar_operator(2, 4) == (D**5 - 2 * q * (2 * D + 1)).canonical()


def test_scalar_operator_g25():
    exp = (D**7 * (D - 1) ** 3 - q * D**3 * (11 * D * D + 11 * D + 3) - q * q).canonical()
    assert scalar_operator(2, 5) == exp


def test_scalar_operator_g26():
    exp = (
        D**9 * (D - 1) ** 5
        - q * D**5 * (2 * D + 1) * (13 * D * D + 13 * D + 4)
        - 3 * q * q * (3 * D + 4) * (3 * D + 2)
    ).canonical()
    assert scalar_operator(2, 6) == exp


def test_scalar_operator_g36():
    exp = (
        D**10 * (D - 1) ** 4
        - q * D**4 * (65 * D**4 + 130 * D**3 + 105 * D**2 + 40 * D + 6)
        + 4 * q * q * (4 * D + 3) * (4 * D + 5)
    ).canonical()
    assert scalar_operator(3, 6) == exp


def test_scalar_operator_g27_order_bounded_by_dim():
    op = scalar_operator(2, 7, guard=15)
    assert op.order == comb(7, 2)


def test_verify_conjecture_reports():
    rep = verify_conjecture(2, 4, 15)
    assert rep.passed and rep.indicial_unique
    # a wrong operator must fail
    bad = D**5 - 3 * q * (2 * D + 1)
    rep = verify_conjecture(2, 4, 15, operator=bad)
    assert not rep.passed
