from fractions import Fraction as F
import math

import pytest

from adfourier import index_sets as ix
from adfourier.lattice import ValidationError, orbit_size
from adfourier.oracle import brute_congruence_class, brute_enum_Hn, brute_enum_Hn_star, brute_enum_Lambda_interior


def test_small_sets():
    assert ix.enum_Hn(1, 1) == [(1, -1), (0, 0)]
    assert len(ix.enum_Hn(2, 1)) == 3
    assert len(ix.enum_Hn(2, 2)) == 12
    star = ix.enum_Hn_star(2, 1)
    assert set(star) == {(0, 0, 0), (2, -1, -1), (-1, 2, -1), (-1, -1, 2), (1, 1, -2), (1, -2, 1), (-2, 1, 1)}
    assert len(ix.enum_Hn_star(2, 4)) == 61
    assert len(ix.enum_Hn_star(3, 2)) == 65
    assert ix.enum_Lambda_n(2, 1) == [(2, -1, -1), (1, 1, -2), (0, 0, 0)]
    assert len(ix.enum_Lambda_n(2, 4)) == 15
    assert len(ix.enum_Lambda_n(3, 2)) == 10
    assert ix.enum_Lambda_interior(2, 3) == [(3, 0, -3)]
    assert ix.enum_Lambda_interior(2, 2) == []
    assert len(ix.enum_Lambda_interior(2, 5)) == 6


def test_order_validation():
    with pytest.raises(ValidationError):
        ix.enum_Hn(2, 0)
    with pytest.raises(ValidationError):
        ix.enum_Hn(0, 1)


@pytest.mark.parametrize("d,n", [(1, 3), (2, 3), (3, 2), (4, 1)])
def test_matches_box_scan(d, n):
    assert ix.enum_Hn(d, n) == brute_enum_Hn(d, n)
    assert ix.enum_Hn_star(d, n) == brute_enum_Hn_star(d, n)
    assert ix.enum_Lambda_interior(d, n + 3) == brute_enum_Lambda_interior(d, n + 3)


def test_interior_is_previous_closed_set():
    for d in (2, 3):
        for n in (1, 2, 3):
            inner = [k for k in ix.enum_Hn_star(d, n) if ix.classify(k, n).interior]
            assert sorted(inner) == sorted(ix.enum_Hn_star(d, n - 1))
            assert len(inner) == n ** (d + 1) - (n - 1) ** (d + 1)


def test_classify_and_c():
    assert ix.classify((0, 0, 0), 1).interior
    b = ix.classify((2, -1, -1), 1)
    assert (b.interior, b.a, b.b) == (False, 1, 2)
    assert ix.c_weight((2, 2, -2, -2), 1) == F(1, 6)
    assert ix.c_weight((3, -1, -1, -1), 1) == F(1, 4)
    assert ix.c_weight((0, 0, 0), 3) == 1
    # d=2 strata: edge 1/2, vertex 1/3
    assert ix.c_weight((3, 0, -3), 2) == F(1, 2)
    assert ix.c_weight((4, -2, -2), 2) == F(1, 3)
    with pytest.raises(ValidationError):
        ix.classify((6, 0, -6), 1)


@pytest.mark.parametrize("d,n", [(2, 1), (2, 4), (3, 3), (4, 2)])
def test_weights_normalise(d, n):
    total = sum(ix.c_weight(k, n) for k in ix.enum_Hn_star(d, n))
    assert total == (d + 1) * n**d
    assert sum(ix.lambda_weight(k, n) for k in ix.enum_Lambda_n(d, n)) == (d + 1) * n**d
    assert all(ix.c_weight(k, n) > 0 for k in ix.enum_Hn_star(d, n))


@pytest.mark.parametrize("d,n", [(2, 3), (3, 3), (4, 2)])
def test_stratum_counts(d, n):
    counts = {}
    for k in ix.enum_Hn_star(d, n):
        c = ix.classify(k, n)
        if not c.interior:
            counts[(c.a, c.b)] = counts.get((c.a, c.b), 0) + 1
    for (a, b), m in counts.items():
        assert m == ix.stratum_count(d, n, a, b)
    assert all(ix.stratum_count(d, n, a, b) == counts.get((a, b), 0) for a in range(1, d + 1) for b in range(1, d + 2 - a))


def test_compositions_and_lambda():
    assert ix.composition_of((0, 0, 0)) == (3,)
    assert ix.composition_of((2, -1, -1)) == (1, 2)
    assert ix.composition_of((3, 0, -3)) == (1, 1, 1)
    with pytest.raises(ValidationError):
        ix.composition_of((-1, 2, -1))
    assert ix.lambda_weight((2, -1, -1), 1) == 1
    assert {ix.lambda_weight(k, 4) for k in ix.enum_Lambda_n(2, 4)} == {6, 3, 1}
    assert {ix.lambda_weight(k, 4) for k in ix.enum_Lambda_n(3, 4)} == {24, 12, 6, 4, 1}
    for d, n in [(2, 3), (3, 2)]:
        for k in ix.enum_Lambda_n(d, n):
            assert ix.lambda_weight(k, n) == ix.c_weight(k, n) * orbit_size(k)


def test_congruence_classes_partition_boundary():
    assert ix.congruence_class((0, 0, 0), 2) == [(0, 0, 0)]
    assert len(ix.congruence_class((2, -1, -1), 1)) == 3
    assert len(ix.congruence_class((2, 2, -2, -2), 1)) == 6
    for d, n in [(2, 2), (3, 2)]:
        star = ix.enum_Hn_star(d, n)
        boundary = {k for k in star if not ix.classify(k, n).interior}
        seen = set()
        for j in sorted(boundary):
            cls = set(ix.congruence_class(j, n))
            assert cls == set(brute_congruence_class(j, n))
            c = ix.classify(j, n)
            assert len(cls) == math.comb(c.a + c.b, c.a)
            assert cls <= boundary
            assert j in cls
            assert cls.isdisjoint(seen) or j in seen
            seen |= cls
        assert seen == boundary
