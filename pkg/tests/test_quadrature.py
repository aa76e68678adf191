from fractions import Fraction as F

import numpy as np
import pytest

from adfourier.index_sets import enum_Hn, enum_Hn_star, enum_Lambda_interior, enum_Lambda_n, lambda_weight
from adfourier.oracle import dft_identity_check, reference_integral
from adfourier.quadrature import (
    cubature_omega,
    cubature_simplex,
    inner_product_n,
    inner_product_simplex,
    inner_product_simplex_interior,
    inner_product_sym,
    integrate,
)
from adfourier.trig import phi, tc, ts

one = lambda t: np.ones(len(t))


def test_unit_norms():
    for d, n in [(2, 3), (3, 2)]:
        assert inner_product_n(one, one, d, n) == pytest.approx(1)
        assert inner_product_sym(one, one, d, n) == pytest.approx(1)
        assert inner_product_simplex(one, one, d, n) == pytest.approx(1)


def test_exponentials_orthonormal():
    d, n = 2, 3
    ks = enum_Hn(d, n)
    for k in ks[::4]:
        for j in ks[::5]:
            fk = lambda t, k=k: phi(k, t)
            fj = lambda t, j=j: phi(j, t)
            expect = 1.0 if k == j else 0.0
            assert abs(inner_product_n(fk, fj, d, n) - expect) < 1e-12
            assert abs(inner_product_sym(fk, fj, d, n) - expect) < 1e-12
    for k in enum_Hn_star(d, n):
        fk = lambda t, k=k: phi(k, t)
        assert abs(inner_product_sym(fk, fk, d, n) - 1) < 1e-12


def test_rules_are_normalised():
    for d, n in [(2, 1), (2, 4), (3, 3)]:
        r = cubature_omega(d, n)
        assert sum(r.weights) == 1 and len(r) == (n + 1) ** (d + 1) - n ** (d + 1)
        s = cubature_simplex(d, n)
        assert sum(s.weights) == 1
        assert all(w > 0 for w in r.weights + s.weights)
        assert r.nodes[0] == tuple(F(x, (d + 1) * n) for x in r.indices[0])


@pytest.mark.parametrize("d", [2, 3])
@pytest.mark.parametrize("n", [2, 3])
def test_omega_exactness(d, n):
    rule = cubature_omega(d, n)
    for k in enum_Hn_star(d, 2 * n - 1):
        val = integrate(rule, lambda t: phi(k, t))
        assert abs(val - (1.0 if not any(k) else 0.0)) < 1e-12


@pytest.mark.parametrize("d", [2, 3])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_simplex_exactness(d, n):
    rule = cubature_simplex(d, n)
    for k in enum_Lambda_n(d, 2 * n - 1):
        val = integrate(rule, lambda t: tc(k, t))
        assert abs(val - (1.0 if not any(k) else 0.0)) < 1e-12


def test_tc_gram_matches_lambda():
    d, n = 2, 3
    ks = enum_Lambda_n(d, n)
    for k in ks:
        for j in ks:
            val = inner_product_simplex(lambda t: tc(k, t), lambda t: tc(j, t), d, n)
            expect = 1 / float(lambda_weight(k, n)) if k == j else 0.0
            assert abs(val - expect) < 1e-12


def test_ts_gram_interior():
    d, n = 2, 5
    ks = enum_Lambda_interior(d, n)
    for k in ks:
        for j in ks:
            val = inner_product_simplex_interior(lambda t: ts(k, t), lambda t: ts(j, t), d, n)
            assert abs(val - (1 / 6 if k == j else 0)) < 1e-12


def test_symmetric_reduction():
    # a permutation-invariant f gives the same sum on the full domain and on the simplex
    f = lambda t: tc((5, -1, -4), t) * np.conj(tc((3, 3, -6), t)) + tc((4, 1, -5), t)
    for n in (2, 3, 4):
        assert abs(inner_product_sym(f, one, 2, n) - inner_product_simplex(f, one, 2, n)) < 1e-13


def test_continuous_values_match_reference():
    d = 2
    for k in [(3, 0, -3), (4, 1, -5)]:
        # continuous norms: 1/|orbit| for TC, 1/(d+1)! for TS
        ref = reference_integral(lambda t: np.abs(tc(k, t)) ** 2, 4, d)
        assert ref == pytest.approx(1 / 6)
        ref = reference_integral(lambda t: np.abs(ts(k, t)) ** 2, 4, d)
        assert ref == pytest.approx(1 / 6)
    assert abs(reference_integral(lambda t: phi((5, -1, -4), t), 3, d, "omega")) < 1e-13
    assert reference_integral(one, 0, d, "omega") == pytest.approx(1)


def test_dft_identities():
    for d, n in [(2, 1), (2, 2), (2, 4), (3, 2)]:
        report = dft_identity_check(d, n)
        assert report.max_abs_error < 1e-12, report.line()
