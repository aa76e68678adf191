"""Brute-force references for the fast routines.

Everything here is deliberately literal: index sets come from scanning an
integer box, kernels from summing exponentials term by term, integrals
from tensor Gauss-Legendre quadrature on the collapsed simplex.  Scans and
sums are budgeted and raise :class:`BudgetError` instead of truncating.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

import numpy as np

from . import chebyshev as cheb
from . import index_sets as ix
from .lattice import (
    BudgetError,
    ValidationError,
    as_float_points,
    check_dimension,
    fold_into_domain,
    in_fundamental_domain,
    is_index,
    max_cells,
    orbit_size,
    permutations_with_parity,
)
from .quadrature import cubature_simplex, integrate
from .trig import dirichlet, phi_star_kernel, tc, ts

MAX_KERNEL_TERMS = 10**5
MAX_REFERENCE_DEGREE = 40


@dataclass(frozen=True)
class OracleReport:
    name: str
    max_abs_error: float
    cases_checked: int
    worst_case: str

    def __post_init__(self):
        if self.cases_checked <= 0:
            raise ValueError("an oracle report must cover at least one case")

    def passed(self, tol: float = 1e-10) -> bool:
        return self.max_abs_error < tol

    def line(self, tol: float = 1e-10) -> str:
        status = "PASS" if self.passed(tol) else "FAIL"
        return (
            f"{status} {self.name}: max_abs_error={self.max_abs_error:.3e} "
            f"cases={self.cases_checked} worst={self.worst_case}"
        )


# ------------------------------------------------------------ enumeration

def _scan_box(d: int, n: int) -> Iterable[tuple[int, ...]]:
    R = (d + 1) * n
    count = (2 * R + 1) ** d
    if count > max_cells():
        raise BudgetError(f"box scan of {count} candidates exceeds budget {max_cells()}")
    for head in itertools.product(range(-R, R + 1), repeat=d):
        k = head + (-sum(head),)
        if is_index(k):
            yield k


def _pairs_ok(k, lo_strict: bool, R: int) -> bool:
    for i, j in itertools.combinations(range(len(k)), 2):
        diff = k[i] - k[j]
        if diff > R:
            return False
        if lo_strict and diff <= -R:
            return False
        if not lo_strict and diff < -R:
            return False
    return True


def brute_enum_Hn_star(d: int, n: int) -> list[tuple[int, ...]]:
    d = check_dimension(d)
    R = (d + 1) * n
    return sorted((k for k in _scan_box(d, n) if _pairs_ok(k, False, R)), reverse=True)


def brute_enum_Hn(d: int, n: int) -> list[tuple[int, ...]]:
    d = check_dimension(d)
    R = (d + 1) * n
    return sorted((k for k in _scan_box(d, n) if _pairs_ok(k, True, R)), reverse=True)


def brute_enum_Lambda_n(d: int, n: int) -> list[tuple[int, ...]]:
    return [k for k in brute_enum_Hn_star(d, n) if all(k[i] >= k[i + 1] for i in range(d))]


def brute_enum_Lambda_interior(d: int, n: int) -> list[tuple[int, ...]]:
    R = (d + 1) * n
    return [
        k
        for k in brute_enum_Hn_star(d, n)
        if all(k[i] > k[i + 1] for i in range(d)) and k[0] - k[-1] < R
    ]


def brute_congruence_class(j: Sequence[int], n: int) -> list[tuple[int, ...]]:
    d = len(j) - 1
    R = (d + 1) * n
    return [
        k
        for k in brute_enum_Hn_star(d, n)
        if all((a - b) % R == 0 for a, b in zip(k, j))
    ]


def brute_fold(t: Sequence[Fraction], reach: int = 3) -> tuple[Fraction, ...]:
    """Search integer shifts in a box around t for the representative in the domain."""
    d = len(t) - 1
    center = [round(x) for x in t[:d]]
    hits = []
    for off in itertools.product(range(-reach, reach + 1), repeat=d):
        head = tuple(c + o for c, o in zip(center, off))
        m = head + (-sum(head),)
        s = tuple(a - b for a, b in zip(t, m))
        if in_fundamental_domain(s):
            hits.append(s)
    if len(hits) != 1:
        raise ArithmeticError(f"expected one representative, found {len(hits)}")
    return hits[0]


# ---------------------------------------------------------------- kernels

def _brute_c(k, n) -> float:
    # 1/binom(a+b, a) on the outer boundary, from the definition
    d = len(k) - 1
    hi, lo = max(k), min(k)
    if hi - lo < (d + 1) * n:
        return 1.0
    a, b = k.count(hi), k.count(lo)
    return 1.0 / math.comb(a + b, a)


def direct_kernel_sum(kind: str, n: int, t) -> np.ndarray:
    """Literal exponential sum for ``"dirichlet"`` or ``"phi_star"``."""
    t = as_float_points(t)
    d = t.shape[-1] - 1
    size = (n + 1) ** (d + 1) - n ** (d + 1)
    if size > MAX_KERNEL_TERMS:
        raise BudgetError(f"{size} kernel terms exceed the budget {MAX_KERNEL_TERMS}")
    ks = brute_enum_Hn_star(d, n)
    E = np.exp((2j * np.pi / (d + 1)) * (t @ np.asarray(ks, dtype=float).T))
    if kind == "dirichlet":
        return E.sum(axis=1)
    if kind == "phi_star":
        c = np.array([_brute_c(k, n) for k in ks])
        return E @ c / ((d + 1) * n**d)
    raise ValidationError(f"unknown kernel kind {kind!r}")


def literal_ts(k: Sequence[int], t) -> np.ndarray:
    """Generalized sine as the signed (d+1)!-term permutation sum."""
    t = as_float_points(t)
    d1 = t.shape[-1]
    k = np.asarray(k, dtype=float)
    acc = np.zeros(t.shape[0], dtype=complex)
    for perm, sign in permutations_with_parity(d1):
        acc += sign * np.exp((2j * np.pi / d1) * (t[:, perm] @ k))
    return acc / math.factorial(d1)


def jacobi_trudi_u(alpha: Sequence[int]) -> cheb.ZPolynomial:
    """U_alpha as a Schur polynomial via the dual Jacobi-Trudi determinant.

    The partition is the offset vector of k(alpha); its conjugate indexes
    elementary symmetric functions e_m = binom(d+1, m) z_m with e_0 = e_{d+1} = 1.
    """
    d = len(alpha)
    lam = [sum(alpha[i:]) for i in range(d)]
    width = lam[0] if lam else 0
    conj = [sum(1 for x in lam if x > i) for i in range(width)]

    def e(m: int) -> cheb.ZPolynomial:
        if m == 0 or m == d + 1:
            return cheb.ZPolynomial.constant(d)
        if 1 <= m <= d:
            return cheb.ZPolynomial.variable(d, m).scale(math.comb(d + 1, m))
        return cheb.ZPolynomial(d)

    L = len(conj)
    if L == 0:
        return cheb.ZPolynomial.constant(d)
    M = [[e(conj[i] - i + j) for j in range(L)] for i in range(L)]
    return _poly_det(M, d)


def _poly_det(M, d: int) -> cheb.ZPolynomial:
    # Laplace expansion along the first row; matrices here are small
    if len(M) == 1:
        return M[0][0]
    total = cheb.ZPolynomial(d)
    for j, entry in enumerate(M[0]):
        if entry.is_zero():
            continue
        minor = [row[:j] + row[j + 1 :] for row in M[1:]]
        term = entry * _poly_det(minor, d)
        total = total + (term if j % 2 == 0 else term.scale(-1))
    return total


# -------------------------------------------------------------- integrals

def _duffy_simplex(d: int, m: int) -> tuple[np.ndarray, np.ndarray]:
    """Tensor Gauss-Legendre nodes and normalised weights on the fundamental simplex."""
    x, w = np.polynomial.legendre.leggauss(m)
    x = (x + 1) / 2
    w = w / 2
    grids = np.meshgrid(*([x] * d), indexing="ij")
    wgrids = np.meshgrid(*([w] * d), indexing="ij")
    u = np.stack([g.ravel() for g in grids], axis=1)
    weight = np.prod(np.stack([g.ravel() for g in wgrids], axis=1), axis=1)
    # collapsed coordinates: s_1 = u_1, s_k = (1-u_1)...(1-u_{k-1}) u_k
    s = np.empty_like(u)
    rest = np.ones(u.shape[0])
    for k in range(d):
        s[:, k] = rest * u[:, k]
        rest = rest * (1 - u[:, k])
    jac = np.ones(u.shape[0])
    for k in range(d - 1):
        jac = jac * (1 - u[:, k]) ** (d - 1 - k)
    weight = weight * jac
    weight = weight / weight.sum()
    verts = np.asarray([cheb.k_of(tuple(int(i == j) for i in range(d))) for j in range(d)], dtype=float)
    verts = verts / (d + 1)
    return s @ verts, weight


def simplex_average(g: Callable, d: int, m: int) -> complex:
    """Average of a vectorised g(t) over the simplex by collapsed tensor quadrature."""
    if m ** d > max_cells():
        raise BudgetError(f"{m ** d} quadrature points exceed budget {max_cells()}")
    pts, w = _duffy_simplex(d, m)
    return complex(np.sum(w * np.asarray(g(pts))))


def _tensor_points(degree_bound: int, d: int) -> int:
    # trig polynomials of degree D oscillate at most D periods across the simplex
    return 2 * degree_bound + 16


def reference_integral(f: Callable, degree_bound: int, d: int, weight: str = "simplex") -> complex:
    """Normalised integral of a polynomial integrand, independent of the lattice rules.

    ``weight`` selects the measure and how ``f`` is read:

    ``"simplex"``  f(t) trigonometric, average over the simplex
    ``"omega"``    f(t) trigonometric, average over the fundamental domain
    ``"lobatto"``  f(x) algebraic, c_{-1/2} w^{-1/2} dx
    ``"gauss"``    f(x) algebraic, c_{1/2} w^{1/2} dx
    """
    d = check_dimension(d)
    if degree_bound > MAX_REFERENCE_DEGREE:
        raise ValidationError(f"degree bound {degree_bound} exceeds {MAX_REFERENCE_DEGREE}")
    if weight == "simplex":
        return simplex_average(f, d, _tensor_points(degree_bound, d))
    if weight == "omega":
        perms = [p for p, _ in permutations_with_parity(d + 1)]
        m = _tensor_points(degree_bound, d)
        return sum(simplex_average(lambda t, p=p: f(t[:, p]), d, m) for p in perms) / len(perms)
    if weight == "lobatto":
        return simplex_average(lambda t: f(cheb.x_map(cheb.z_map(t))), d, _tensor_points(degree_bound, d))
    if weight == "gauss":
        D = d * (d + 1) // 2
        scale = 4.0**D / math.factorial(d + 1)
        g = lambda t: f(cheb.x_map(cheb.z_map(t))) * cheb.weight_w(t)
        return scale * simplex_average(g, d, _tensor_points(degree_bound + 2 * d, d))
    raise ValidationError(f"unknown weight {weight!r}")


# ------------------------------------------------------------ DFT identity

def _phase_sum(m_vec, nodes, den: int) -> complex:
    # exact rational phase m.k/den reduced mod 1 before exponentiation
    acc = 0j
    for k in nodes:
        num = sum(a * b for a, b in zip(m_vec, k)) % den
        acc += complex(math.cos(2 * math.pi * num / den), math.sin(2 * math.pi * num / den))
    return acc


def dft_identity_check(d: int, n: int) -> OracleReport:
    """Finite check of the discrete Fourier orthogonality relations at scale n.

    Forward: (1/|H_n|) sum_{k in H_n} exp(2 pi i m.k/((d+1)^2 n)) is 1 when
    m/(d+1) lies in n times the lattice, else 0.  Backward: the same sum
    with the roles of node and frequency swapped.  Frequencies range over
    H*_{3n}, three cells around the origin.
    """
    d = check_dimension(d)
    nodes = ix.enum_Hn(d, n)
    size = len(nodes)
    den = (d + 1) ** 2 * n
    worst, where, count = 0.0, "none", 0
    for m in ix.enum_Hn_star(d, 3 * n):
        val = _phase_sum(m, nodes, den) / size
        # m/(d+1) in n Z_H  <=>  every m_i divisible by (d+1)n
        expect = 1.0 if all(x % ((d + 1) * n) == 0 for x in m) else 0.0
        err = abs(val - expect)
        count += 1
        if err > worst:
            worst, where = err, f"forward m={m}"
        valb = _phase_sum([-x for x in m], nodes, den) / size
        err = abs(valb - expect)
        count += 1
        if err > worst:
            worst, where = err, f"backward m={m}"
    return OracleReport(f"dft_identity d={d} n={n}", worst, count, where)


# ---------------------------------------------------------------- registry

def _set_report(name: str, fast, brute) -> OracleReport:
    # error counts mismatched members, plus one if the fast order is not descending
    a, b = set(fast), set(brute)
    diff = sorted(a ^ b, reverse=True)
    worst = f"{diff[0]}" if diff else "none"
    unordered = 0.0 if list(fast) == sorted(fast, reverse=True) else 1.0
    return OracleReport(name, float(len(diff)) + unordered, len(a | b), worst)


def _max_report(name: str, pairs) -> OracleReport:
    worst, where, count = 0.0, "none", 0
    for label, err in pairs:
        count += 1
        if err > worst:
            worst, where = err, label
    return OracleReport(name, worst, count, where)


def _random_points(d: int, m: int, seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    t = rng.uniform(-1, 1, size=(m, d + 1))
    return t - t.mean(axis=1, keepdims=True)


def oracle_reports(cases: Sequence[tuple[int, int]] = ((2, 5), (3, 3))) -> list[OracleReport]:
    """Run every fast/brute pair for d and all n up to the given maximum."""
    reports = []
    for d, nmax in cases:
        ns = range(1, nmax + 1)
        for n in ns:
            reports.append(_set_report(f"enum_Hn d={d} n={n}", ix.enum_Hn(d, n), brute_enum_Hn(d, n)))
            reports.append(_set_report(f"enum_Hn_star d={d} n={n}", ix.enum_Hn_star(d, n), brute_enum_Hn_star(d, n)))
            reports.append(_set_report(f"enum_Lambda_n d={d} n={n}", ix.enum_Lambda_n(d, n), brute_enum_Lambda_n(d, n)))
            reports.append(
                _set_report(
                    f"enum_Lambda_interior d={d} n={n}",
                    ix.enum_Lambda_interior(d, n) or [()],
                    brute_enum_Lambda_interior(d, n) or [()],
                )
            )
            star = brute_enum_Hn_star(d, n)
            boundary = [k for k in star if max(k) - min(k) == (d + 1) * n]
            errs = []
            for j in boundary[:: max(1, len(boundary) // 12)]:
                errs.append((f"j={j}", float(set(ix.congruence_class(j, n)) != set(brute_congruence_class(j, n)))))
            reports.append(_max_report(f"congruence_class d={d} n={n}", errs))
            reports.append(
                _max_report(
                    f"weights d={d} n={n}",
                    [(f"k={k}", abs(float(ix.c_weight(k, n)) - _brute_c(k, n))) for k in star]
                    + [
                        (f"k={k}", float(ix.lambda_weight(k, n) != ix.c_weight(k, n) * orbit_size(k)))
                        for k in ix.enum_Lambda_n(d, n)
                    ],
                )
            )
            t = _random_points(d, 200, seed=100 * d + n)
            reports.append(
                _max_report(
                    f"dirichlet d={d} n={n}",
                    [("random t", float(np.abs(dirichlet(n, t) - direct_kernel_sum("dirichlet", n, t)).max()))],
                )
            )
            reports.append(
                _max_report(
                    f"phi_star_kernel d={d} n={n}",
                    [("random t", float(np.abs(phi_star_kernel(n, t) - direct_kernel_sum("phi_star", n, t)).max()))],
                )
            )
            if n <= 4 and d <= 3:
                reports.append(dft_identity_check(d, n))
        # generalized sine: determinant against the literal signed sum
        t = _random_points(d, 50, seed=7 + d)
        reports.append(
            _max_report(
                f"ts determinant d={d}",
                [(f"k={k}", float(np.abs(ts(k, t) - literal_ts(k, t)).max())) for k in ix.enum_Lambda_n(d, 3)],
            )
        )
        # Chebyshev expansions against Schur determinants and trigonometric values
        z = cheb.z_map(t)
        alphas = [cheb.alpha_of(k) for k in ix.enum_Lambda_n(d, nmax)]
        reports.append(
            _max_report(
                f"u_poly vs Jacobi-Trudi d={d}",
                [(f"alpha={a}", float(cheb.u_poly(a) != jacobi_trudi_u(a))) for a in alphas],
            )
        )
        reports.append(
            _max_report(
                f"t_poly vs trig d={d}",
                [(f"alpha={a}", float(np.abs(cheb.t_poly(a).evaluate(z) - cheb.t_eval(a, t)).max())) for a in alphas],
            )
        )
        # folding against a shift search
        rng = np.random.default_rng(11 + d)
        errs = []
        for _ in range(200):
            head = [Fraction(int(rng.integers(-40, 41)), int(rng.integers(1, 13))) for _ in range(d)]
            pt = tuple(head + [-sum(head)])
            errs.append((f"t={pt}", float(fold_into_domain(pt) != brute_fold(pt))))
        reports.append(_max_report(f"fold_into_domain d={d}", errs))
        # simplex rule against tensor quadrature on products of cosines
        rule_n = 3
        rule = cubature_simplex(d, rule_n)
        ks = ix.enum_Lambda_n(d, 2)
        errs = []
        for a, b in itertools.combinations_with_replacement(ks, 2):
            f = lambda tt, a=a, b=b: tc(a, tt) * np.conj(tc(b, tt))
            errs.append((f"TC{a}*TC{b}", abs(integrate(rule, f) - reference_integral(f, 4, d))))
        reports.append(_max_report(f"cubature_simplex vs tensor d={d}", errs))
        # Gaussian rule against the tensor reference for w^{1/2}
        errs = []
        for n in (1, 2):
            g = cheb.gauss_rule(d, n)
            for beta in itertools.product(range(2 * n), repeat=d):
                if sum(beta) <= 2 * n - 1:
                    f = cheb.monomial(beta)
                    errs.append((f"n={n} beta={beta}", abs(integrate(g, f) - reference_integral(f, 2 * n - 1, d, "gauss"))))
        reports.append(_max_report(f"gauss_rule vs tensor d={d}", errs))
    return reports
