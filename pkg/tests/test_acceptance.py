"""Acceptance criteria 1-10, each reported as one PASS/FAIL line."""
import math
import time

import numpy as np
import pytest

from adfourier import chebyshev as cheb
from adfourier import index_sets as ix
from adfourier.interpolation import Interpolant, fundamental, lebesgue_estimate, node_indices, sample
from adfourier.oracle import direct_kernel_sum, oracle_reports, reference_integral
from adfourier.quadrature import cubature_omega, cubature_simplex, inner_product_n, inner_product_sym, integrate
from adfourier.trig import dirichlet, phi, phi_star_kernel, tc, ts

from conftest import random_points


def test_criterion_01_cardinalities(acceptance):
    start, bad = time.perf_counter(), []
    for d in range(1, 6):
        for n in range(1, 7):
            got = (
                len(ix.enum_Hn_star(d, n)),
                len(ix.enum_Lambda_n(d, n)),
                len(ix.enum_Lambda_interior(d, n)),
                len(ix.enum_Hn(d, n)),
            )
            want = ((n + 1) ** (d + 1) - n ** (d + 1), math.comb(n + d, d), math.comb(n - 1, d), (d + 1) * n**d)
            if got != want:
                bad.append((d, n, got, want))
    dt = time.perf_counter() - start
    acceptance(1, not bad and dt < 5, f"30 (d,n) cases, mismatches={bad[:2]}, {dt:.2f}s")


def test_criterion_02_kernel_compactness(acceptance):
    start, worst = time.perf_counter(), 0.0
    for d in (2, 3):
        for n in range(1, 7):
            t = random_points(d, 200, seed=10 * d + n)
            worst = max(worst, np.abs(dirichlet(n, t) - direct_kernel_sum("dirichlet", n, t)).max())
            worst = max(worst, np.abs(phi_star_kernel(n, t) - direct_kernel_sum("phi_star", n, t)).max())
    dt = time.perf_counter() - start
    acceptance(2, worst < 1e-10 and dt < 30, f"max |compact - direct| = {worst:.2e}, {dt:.2f}s")


def _gram(product, d, n):
    ks = ix.enum_Hn(d, n)
    G = np.empty((len(ks), len(ks)), dtype=complex)
    for a, k in enumerate(ks):
        for b, j in enumerate(ks):
            G[a, b] = product(lambda t, k=k: phi(k, t), lambda t, j=j: phi(j, t), d, n)
    return np.abs(G - np.eye(len(ks))).max()


def test_criterion_03_discrete_orthogonality(acceptance):
    worst = 0.0
    for d, nmax in ((2, 4), (3, 2)):
        for n in range(1, nmax + 1):
            worst = max(worst, _gram(inner_product_n, d, n), _gram(inner_product_sym, d, n))
    acceptance(3, worst < 1e-12, f"max |Gram - I| = {worst:.2e} over both discrete products")


def test_criterion_04_cubature_exactness(acceptance):
    worst, witness_gap = 0.0, np.inf
    for d in (2, 3):
        for n in (1, 2, 3):
            om, sx = cubature_omega(d, n), cubature_simplex(d, n)
            for k in ix.enum_Hn_star(d, 2 * n - 1):
                worst = max(worst, abs(integrate(om, lambda t, k=k: phi(k, t)) - (0 if any(k) else 1)))
            for k in ix.enum_Lambda_n(d, 2 * n - 1):
                worst = max(worst, abs(integrate(sx, lambda t, k=k: tc(k, t)) - (0 if any(k) else 1)))
            w = ((d + 1) * n, -(d + 1) * n) + (0,) * (d - 1)
            ws = tuple(sorted(w, reverse=True))
            witness_gap = min(
                witness_gap,
                abs(integrate(om, lambda t: phi(w, t))),
                abs(integrate(sx, lambda t: tc(ws, t))),
            )
    ok = worst < 1e-12 and witness_gap > 1e-3
    acceptance(4, ok, f"max basis error {worst:.2e}; degree-2n witness error >= {witness_gap:.3f}")


def test_criterion_05_interpolation(acceptance):
    delta_err, repro_err = 0.0, 0.0
    rng = np.random.default_rng(5)
    for d, nmax in ((2, 8), (3, 4)):
        t = random_points(d, 100, seed=d)
        for n in range(1, nmax + 1):
            kinds = ["In", "LnStar"] + (["Ln"] if n >= d + 1 else [])
            for kind in kinds:
                ks = node_indices(kind, d, n)
                pts = np.asarray(ks, dtype=float) / ((d + 1) * n)
                M = np.stack([fundamental(kind, j, n, pts) for j in ks], axis=1)
                delta_err = max(delta_err, np.abs(M - np.eye(len(ks))).max())
                if kind == "In":
                    coef = {k: rng.normal() + 1j * rng.normal() for k in ks}
                    basis = phi
                elif kind == "LnStar":
                    coef = {k: rng.normal() for k in ks}
                    basis = tc
                else:
                    coef = {k: rng.normal() for k in ks}
                    basis = ts
                g = lambda p, coef=coef, basis=basis: sum(c * basis(k, p) for k, c in coef.items())
                I = Interpolant(kind, d, n, sample(kind, d, n, g))
                repro_err = max(repro_err, np.abs(I(t) - g(t)).max())
    ok = delta_err < 1e-10 and repro_err < 1e-9
    acceptance(5, ok, f"delta error {delta_err:.2e}; reproduction error {repro_err:.2e}")


@pytest.mark.slow
def test_criterion_06_lebesgue_growth(acceptance):
    start = time.perf_counter()
    ns = (2, 4, 8, 16, 32)
    est = [lebesgue_estimate("LnStar", 2, n) for n in ns]
    ratios = [e / math.log(n) ** 2 for e, n in zip(est, ns)]
    dt = time.perf_counter() - start
    monotone = all(a < b for a, b in zip(est, est[1:]))
    ok = monotone and all(0.05 < r < 50 for r in ratios) and dt < 300
    table = ", ".join(f"n={n}: {e:.3f} ({r:.2f})" for n, e, r in zip(ns, est, ratios))
    acceptance(6, ok, f"estimate (ratio to log^2 n): {table}; {dt:.0f}s")


def test_criterion_07_chebyshev_recurrence(acceptance):
    worst = 0.0
    for d, cap in ((2, 5), (3, 4)):
        t = random_points(d, 100, seed=70 + d)
        z = cheb.z_map(t)
        for k in ix.enum_Lambda_n(d, cap):
            a = cheb.alpha_of(k)
            worst = max(worst, np.abs(cheb.t_poly(a).evaluate(z) - cheb.t_eval(a, t)).max())
            worst = max(worst, np.abs(cheb.u_poly(a).evaluate(z) - cheb.u_eval(a, t)).max())
    acceptance(7, worst < 1e-10, f"max |expansion - trig| = {worst:.2e}")


def test_criterion_08_gauss_cubature(acceptance):
    count_ok, zero_err, exact_err = True, 0.0, 0.0
    for d, nmax in ((2, 4), (3, 2)):
        for n in range(1, nmax + 1):
            r = cheb.gauss_rule(d, n)
            count_ok &= len(r) == math.comb(n + d - 1, d) and bool(np.all(r.weights > 0))
            z = cheb.z_from_x(r.nodes)
            for k in ix.enum_Lambda_n(d, n):
                a = cheb.alpha_of(k)
                if sum(a) == n:
                    zero_err = max(zero_err, np.abs(cheb.u_poly(a).evaluate(z)).max())
            for beta in np.ndindex(*([2 * n] * d)):
                if sum(beta) <= 2 * n - 1:
                    f = cheb.monomial(beta)
                    ref = reference_integral(f, 2 * n - 1, d, "gauss")
                    exact_err = max(exact_err, abs(integrate(r, f) - ref))
    one = cheb.gauss_rule(2, 1)
    # "exactly" read as agreement to within a few units in the last place
    node_dev, weight_dev = float(np.abs(one.nodes).max()), abs(float(one.weights[0]) - 1)
    single_ok = len(one) == 1 and node_dev <= 4 * np.finfo(float).eps and weight_dev <= 4 * np.finfo(float).eps
    ok = count_ok and zero_err < 1e-10 and exact_err < 1e-10 and single_ok
    acceptance(
        8,
        ok,
        f"counts ok={count_ok}; U zeros {zero_err:.2e}; monomial error {exact_err:.2e}; "
        f"d=2,n=1 node dev {node_dev:.1e}, weight dev {weight_dev:.1e}",
    )


def test_criterion_09_quasi_orthogonal_ideal(acceptance):
    d, vanish, orth, count = 2, 0.0, 0.0, 0
    for n in (2, 3):
        nodes = cheb.lobatto_rule(d, n).nodes
        z = cheb.z_from_x(nodes)
        for k in ix.enum_Lambda_n(d, n + 1):
            a = cheb.alpha_of(k)
            if sum(a) != n + 1:
                continue
            a, astar = cheb.ideal_generator(a)
            P = cheb.t_poly(a) - cheb.t_poly(astar)
            count += 1
            vanish = max(vanish, np.abs(P.evaluate(z)).max())
            for beta in np.ndindex(*([n - 1] * d)):
                if sum(beta) <= n - 2:
                    m = cheb.monomial(beta)
                    g = lambda x, m=m: P.evaluate(cheb.z_from_x(x)) * m(x)
                    orth = max(orth, abs(reference_integral(g, 2 * n, d, "lobatto")))
    ok = vanish < 1e-10 and orth < 1e-10
    acceptance(9, ok, f"{count} generators; max on Y_n {vanish:.2e}; max inner product with Pi_(n-2) {orth:.2e}")


def test_criterion_10_oracle_suite(acceptance):
    reports = oracle_reports()
    bad = [r.line() for r in reports if not r.passed()]
    worst = max(r.max_abs_error for r in reports)
    acceptance(10, not bad, f"{len(reports)} fast/brute pairs, worst error {worst:.2e}, failures={bad[:1]}")
