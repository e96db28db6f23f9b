from math import comb

import pytest

from grasscy.toric import (
    CYCase,
    binomial_equations,
    build_delta,
    degree_grassmannian,
    facets_and_reflexivity,
    hodge_after_transition,
    nef_partition_sets,
    node_count,
    origin_interior,
    poset_aknn,
    tuple_join,
    tuple_leq,
    tuple_meet,
    vertex_labels,
)


def test_vertex_counts_all_small_kn():
    for n in range(2, 9):
        for k in range(2, n):
            delta = build_delta(k, n)
            assert len(delta.vertices) == 2 * (k - 1) * (n - k - 1) + n


def test_vertices_distinct_and_primitive():
    delta = build_delta(3, 6)
    assert len(set(delta.vertices)) == len(delta.vertices)
    from math import gcd

    for v in delta.vertices:
        g = 0
        for x in v:
            g = gcd(g, x)
        assert g == 1


def test_vertex_label_order_is_stable():
    assert vertex_labels(2, 4) == [
        ("u", 1, 0),
        ("u", 2, 0),
        ("u", 2, 1),
        ("v", 1, 1),
        ("v", 2, 1),
        ("v", 2, 2),
    ]


@pytest.mark.parametrize("k,n", [(2, 4), (2, 5)])
def test_facets_and_reflexivity(k, n):
    delta = build_delta(k, n)
    facets, reflexive = facets_and_reflexivity(delta)
    assert len(facets) == comb(n, k)
    assert reflexive
    assert origin_interior(delta)


def test_facet_cap():
    with pytest.raises(ValueError):
        facets_and_reflexivity(build_delta(3, 7))


def test_binomial_equation_counts():
    for n in range(4, 9):
        assert len(binomial_equations(2, n)) == comb(n, 4)


def test_binomial_equation_record():
    eqs = binomial_equations(2, 4)
    assert eqs == [
        {"a": (1, 4), "b": (2, 3), "min": (1, 3), "max": (2, 4)}
    ]


def test_poset_lattice_ops():
    tuples = poset_aknn(2, 5)
    assert len(tuples) == comb(5, 2)
    for a in tuples:
        for b in tuples:
            m, j = tuple_meet(a, b), tuple_join(a, b)
            assert tuple_leq(m, a) and tuple_leq(m, b)
            assert tuple_leq(a, j) and tuple_leq(b, j)


def test_nef_partition_sets_cover_vertices():
    for k, n in [(2, 4), (2, 5), (3, 6)]:
        sets = nef_partition_sets(k, n)
        assert len(sets) == n
        flat = [lab for s in sets for lab in s]
        assert sorted(flat) == sorted(vertex_labels(k, n))


def test_degree_grassmannian():
    assert degree_grassmannian(2, 4) == 2
    assert degree_grassmannian(2, 5) == 5
    assert degree_grassmannian(2, 6) == 14
    assert degree_grassmannian(2, 7) == 42
    assert degree_grassmannian(3, 6) == 42
    assert degree_grassmannian(1, 4) == 1  # projective space


def test_cy_case_validation():
    with pytest.raises(ValueError):
        CYCase("bad", 2, 5, (1, 1, 2), (1, 1), 1, 1)  # degrees sum != n
    with pytest.raises(ValueError):
        CYCase("bad", 2, 5, (3, 1, 1), (1, 1), 1, 1)  # not sorted
    with pytest.raises(ValueError):
        CYCase("bad", 2, 5, (1, 1, 3), (1,), 1, 1)  # wrong strata count


def test_hodge_after_transition():
    case = CYCase("X113", 2, 5, (1, 1, 3), (1, 1), 1, 76)
    assert case.alpha == 2
    assert node_count(case) == 6
    assert hodge_after_transition(case) == (3, 72, -138)
    assert case.n0 == 15
