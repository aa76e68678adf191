"""Generalized Chebyshev polynomials on the deltoid-type region and their cubature.

The map t -> z sends a point of the simplex to the averaged elementary
symmetric functions of exp(2 pi i t_j); t -> x takes real and imaginary
parts.  Generalized cosines become polynomials T_alpha(z) and sine
quotients become polynomials U_alpha(z).

Normalisation
-------------
Both weights are normalised to unit mass with respect to Lebesgue measure
dx on R^d.  The Jacobian of t -> x is taken with respect to the free
coordinates (t_1, ..., t_d), and the simplex has volume 1/(d+1)! in those
coordinates.  This gives::

    c_{1/2}  = 2^{d^2/2}            prod_k binom(d+1, k) / pi
    c_{-1/2} = (d+1)! 2^{-d(d+2)/2} prod_k binom(d+1, k) / pi

The rules below are normalised directly (weights sum to one) and do not
depend on these constants.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

import numpy as np

from .index_sets import enum_Lambda_interior, enum_Lambda_n, lambda_weight
from .lattice import (
    ValidationError,
    as_float_points,
    check_dimension,
    orbit,
    permutations_with_parity,
)
from .quadrature import node_of
from .trig import tc, ts

DEFAULT_DEGREE_CAP = 12
U_DENOM_EPS = 1e-3


# ---------------------------------------------------------------- coordinates

def z_map(t) -> np.ndarray:
    """z_k = binom(d+1,k)^{-1} e_k(exp(2 pi i t_1), ..., exp(2 pi i t_{d+1})), k = 1..d."""
    t = as_float_points(t)
    d = t.shape[-1] - 1
    x = np.exp(2j * np.pi * t)
    e = np.zeros((t.shape[0], d + 2), dtype=complex)
    e[:, 0] = 1.0
    for i in range(d + 1):
        e[:, 1:] = e[:, 1:] + e[:, :-1] * x[:, i : i + 1]
    binom = np.array([math.comb(d + 1, k) for k in range(1, d + 1)], dtype=float)
    return e[:, 1 : d + 1] / binom


def x_map(z) -> np.ndarray:
    """Real coordinates: x_k = (z_k + z_{d+1-k})/2, x_{d+1-k} = (z_k - z_{d+1-k})/(2i).

    For odd d the middle coordinate is z_{(d+1)/2}/sqrt(2).
    """
    z = np.asarray(z, dtype=complex)
    single = z.ndim == 1
    if single:
        z = z[None, :]
    d = z.shape[-1]
    mirror = z[:, ::-1]
    if np.abs(np.conj(z) - mirror).max(initial=0.0) > 1e-9:
        raise ValidationError("z violates conj(z_k) = z_{d+1-k}; not the image of a real point")
    x = np.empty(z.shape, dtype=complex)
    for k in range(1, d // 2 + 1):
        a, b = z[:, k - 1], z[:, d - k]
        x[:, k - 1] = (a + b) / 2
        x[:, d - k] = (a - b) / 2j
    if d % 2 == 1:
        m = (d + 1) // 2
        x[:, m - 1] = z[:, m - 1] / math.sqrt(2)
    out = x.real
    return out[0] if single else out


def z_from_x(x) -> np.ndarray:
    """Inverse of :func:`x_map`."""
    x = np.asarray(x, dtype=float)
    single = x.ndim == 1
    if single:
        x = x[None, :]
    d = x.shape[-1]
    z = np.empty(x.shape, dtype=complex)
    for k in range(1, d // 2 + 1):
        z[:, k - 1] = x[:, k - 1] + 1j * x[:, d - k]
        z[:, d - k] = x[:, k - 1] - 1j * x[:, d - k]
    if d % 2 == 1:
        m = (d + 1) // 2
        z[:, m - 1] = math.sqrt(2) * x[:, m - 1]
    return z[0] if single else z


def alpha_of(k: Sequence[int]) -> tuple[int, ...]:
    """alpha_i = (k_i - k_{i+1})/(d+1) for a non-increasing index k."""
    k = tuple(k)
    d1 = len(k)
    if any(k[i] < k[i + 1] for i in range(d1 - 1)):
        raise ValidationError(f"{k} is not non-increasing")
    return tuple((k[i] - k[i + 1]) // d1 for i in range(d1 - 1))


def k_of(alpha: Sequence[int]) -> tuple[int, ...]:
    """Inverse of :func:`alpha_of`."""
    d = len(alpha)
    total = sum(sum(alpha[:m + 1]) for m in range(d))
    return tuple(total - (d + 1) * sum(alpha[:i]) for i in range(d + 1))


def v_circ(d: int) -> tuple[int, ...]:
    """Index whose generalized sine is a product of sines (offsets d, d-1, ..., 0)."""
    return k_of((1,) * d)


def _sorted_alpha(k: Sequence[int]) -> tuple[int, ...]:
    return alpha_of(sorted(k, reverse=True))


# ------------------------------------------------------------------ evaluation

def t_eval(alpha: Sequence[int], t) -> np.ndarray:
    """First-kind polynomial T_alpha(z(t)) = TC_k(t)."""
    return tc(k_of(alpha), t)


def u_eval(alpha: Sequence[int], t) -> np.ndarray:
    """Second-kind polynomial U_alpha(z(t)) = TS_{k+v}(t)/TS_v(t).

    The quotient loses accuracy near zeros of the denominator, so where
    |TS_v| < U_DENOM_EPS the value is taken from the equivalent Schur
    determinant in the elementary symmetric values of e^{2 pi i t_j}.
    """
    t = as_float_points(t)
    d = t.shape[-1] - 1
    v = v_circ(d)
    k = k_of(alpha)
    den = ts(v, t)
    small = np.abs(den) < U_DENOM_EPS
    out = np.empty(t.shape[0], dtype=complex)
    ok = ~small
    if ok.any():
        num = ts(tuple(a + b for a, b in zip(k, v)), t[ok])
        out[ok] = num / den[ok]
    if small.any():
        out[small] = schur_values(alpha, t[small])
    return out


def schur_values(alpha: Sequence[int], t) -> np.ndarray:
    """U_alpha(z(t)) from the dual Jacobi-Trudi determinant, evaluated numerically."""
    t = as_float_points(t)
    d = t.shape[-1] - 1
    lam = [sum(alpha[i:]) for i in range(d)]
    width = lam[0] if lam else 0
    conj = [sum(1 for x in lam if x > i) for i in range(width)]
    if not conj:
        return np.ones(t.shape[0], dtype=complex)
    z = z_map(t)
    e = np.zeros((t.shape[0], d + 2), dtype=complex)
    e[:, 0] = 1
    e[:, d + 1] = 1
    for m in range(1, d + 1):
        e[:, m] = math.comb(d + 1, m) * z[:, m - 1]
    L = len(conj)
    M = np.zeros((t.shape[0], L, L), dtype=complex)
    for i in range(L):
        for j in range(L):
            m = conj[i] - i + j
            if 0 <= m <= d + 1:
                M[:, i, j] = e[:, m]
    return np.linalg.det(M)


# ----------------------------------------------------------------- polynomials

class ZPolynomial:
    """Polynomial in z_1..z_d with exact rational coefficients.

    Coefficients are real rationals: the generalized cosines are symmetric
    polynomials with integer coefficients in exp(2 pi i t_j), hence
    rational polynomials in the elementary symmetric functions.
    """

    __slots__ = ("d", "coeffs")

    def __init__(self, d: int, coeffs: Mapping[tuple[int, ...], Fraction] | None = None):
        self.d = d
        self.coeffs = {}
        for e, c in (coeffs or {}).items():
            c = Fraction(c)
            if c != 0:
                self.coeffs[tuple(e)] = c

    @classmethod
    def constant(cls, d: int, c=1) -> "ZPolynomial":
        return cls(d, {(0,) * d: Fraction(c)})

    @classmethod
    def variable(cls, d: int, i: int) -> "ZPolynomial":
        """z_i, 1-based."""
        e = [0] * d
        e[i - 1] = 1
        return cls(d, {tuple(e): Fraction(1)})

    @property
    def degree(self) -> int:
        return max((sum(e) for e in self.coeffs), default=0)

    def __add__(self, other: "ZPolynomial") -> "ZPolynomial":
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return ZPolynomial(self.d, out)

    def __sub__(self, other: "ZPolynomial") -> "ZPolynomial":
        return self + other.scale(-1)

    def scale(self, c) -> "ZPolynomial":
        c = Fraction(c)
        return ZPolynomial(self.d, {e: c * v for e, v in self.coeffs.items()})

    def __mul__(self, other: "ZPolynomial") -> "ZPolynomial":
        out: dict = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return ZPolynomial(self.d, out)

    def times_var(self, i: int) -> "ZPolynomial":
        out = {}
        for e, c in self.coeffs.items():
            e2 = list(e)
            e2[i - 1] += 1
            out[tuple(e2)] = c
        return ZPolynomial(self.d, out)

    def __eq__(self, other) -> bool:
        return isinstance(other, ZPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def is_zero(self) -> bool:
        return not self.coeffs

    def terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        """Terms in graded lexicographic order (highest first)."""
        return sorted(self.coeffs.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=True)

    def evaluate(self, z) -> np.ndarray:
        z = np.asarray(z, dtype=complex)
        if z.ndim == 1:
            z = z[None, :]
        out = np.zeros(z.shape[0], dtype=complex)
        for e, c in self.coeffs.items():
            out += float(c) * np.prod(z ** np.asarray(e), axis=1)
        return out

    def to_json(self) -> list:
        return [[list(e), f"{c.numerator}/{c.denominator}"] for e, c in self.terms()]

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        out = ""
        for e, c in self.terms():
            mono = "*".join(f"z{i + 1}^{p}" if p > 1 else f"z{i + 1}" for i, p in enumerate(e) if p)
            term = f"{abs(c)}*{mono}" if mono and abs(c) != 1 else (mono or f"{abs(c)}")
            if not out:
                out = term if c > 0 else f"-{term}"
            else:
                out += f" + {term}" if c > 0 else f" - {term}"
        return out


def _solve_layer(rows: list[tuple[dict[int, Fraction], ZPolynomial]], ncols: int, d: int):
    """Exact Gaussian elimination for A X = R with polynomial right-hand sides."""
    A = [dict(a) for a, _ in rows]
    R = [r for _, r in rows]
    pivots = []
    r0 = 0
    for col in range(ncols):
        piv = next((i for i in range(r0, len(A)) if A[i].get(col, 0) != 0), None)
        if piv is None:
            raise ArithmeticError(f"recurrence layer is rank deficient at column {col}")
        A[r0], A[piv] = A[piv], A[r0]
        R[r0], R[piv] = R[piv], R[r0]
        p = A[r0][col]
        A[r0] = {c: v / p for c, v in A[r0].items()}
        R[r0] = R[r0].scale(1 / p)
        for i in range(len(A)):
            if i != r0 and A[i].get(col, 0) != 0:
                f = A[i][col]
                for c, v in A[r0].items():
                    nv = A[i].get(c, 0) - f * v
                    if nv == 0:
                        A[i].pop(c, None)
                    else:
                        A[i][c] = nv
                R[i] = R[i] - R[r0].scale(f)
        pivots.append(r0)
        r0 += 1
    for i in range(r0, len(A)):
        if not R[i].is_zero():
            raise ArithmeticError("recurrence layer is inconsistent")
    return R[:ncols]


def _alphas_of_degree(d: int, m: int):
    for cut in itertools.combinations(range(m + d - 1), d - 1):
        # stars and bars
        bounds = (-1,) + cut + (m + d - 1,)
        yield tuple(bounds[i + 1] - bounds[i] - 1 for i in range(d))


class _ChebyshevFamily:
    """Layer-by-layer exact expansion of T_alpha or U_alpha for one dimension.

    The product z_i P_alpha expands into P over alpha shifted by the
    index increments of the orbit of v^i.  Collecting these relations for
    all |alpha| = m and i = 1..d gives a consistent linear system whose
    unique solution is the layer |alpha| = m + 1.
    """

    def __init__(self, kind: str, d: int):
        self.kind = kind
        self.d = d
        self.layers: list[dict[tuple[int, ...], ZPolynomial]] = [
            {(0,) * d: ZPolynomial.constant(d)}
        ]
        # orbit of v^i as offset vectors b in {0,1}^{d+1}
        self.shifts = {
            i: [tuple(1 if x > 0 else 0 for x in j) for j in orbit(k_of(tuple(int(a == i) for a in range(1, d + 1))))]
            for i in range(1, d + 1)
        }

    def _resolve(self, alpha, b) -> tuple[int, tuple[int, ...]] | None:
        d = self.d
        step = tuple(b[m] - b[m + 1] for m in range(d))
        if self.kind == "U":
            new = tuple(a + s for a, s in zip(alpha, step))
            if any(x < 0 for x in new):
                return None
            return 1, new
        k = k_of(alpha)
        shifted = [x + (d + 1) * y for x, y in zip(k, b)]
        return 1, _sorted_alpha(shifted)

    def _grow(self) -> None:
        d = self.d
        m = len(self.layers) - 1
        unknown = list(_alphas_of_degree(d, m + 1))
        col = {a: i for i, a in enumerate(unknown)}
        rows = []
        for alpha, poly in self.layers[m].items():
            for i in range(1, d + 1):
                lhs = poly.times_var(i).scale(math.comb(d + 1, i))
                coeffs: dict[int, Fraction] = {}
                for b in self.shifts[i]:
                    res = self._resolve(alpha, b)
                    if res is None:
                        continue
                    c, beta = res
                    deg = sum(beta)
                    if deg == m + 1:
                        coeffs[col[beta]] = coeffs.get(col[beta], 0) + Fraction(c)
                    else:
                        lhs = lhs - self.layers[deg][beta].scale(c)
                rows.append((coeffs, lhs))
        sol = _solve_layer(rows, len(unknown), d)
        self.layers.append(dict(zip(unknown, sol)))

    def get(self, alpha: Sequence[int], cap: int) -> ZPolynomial:
        alpha = tuple(int(a) for a in alpha)
        if len(alpha) != self.d or any(a < 0 for a in alpha):
            raise ValidationError(f"invalid Chebyshev index {alpha} for d={self.d}")
        m = sum(alpha)
        if m > cap:
            raise ValidationError(f"|alpha| = {m} exceeds the degree cap {cap}")
        while len(self.layers) <= m:
            self._grow()
        return self.layers[m][alpha]


_FAMILIES: dict[tuple[str, int], _ChebyshevFamily] = {}


def _family(kind: str, d: int) -> _ChebyshevFamily:
    key = (kind, check_dimension(d))
    if key not in _FAMILIES:
        _FAMILIES[key] = _ChebyshevFamily(kind, d)
    return _FAMILIES[key]


def t_poly(alpha: Sequence[int], degree_cap: int = DEFAULT_DEGREE_CAP) -> ZPolynomial:
    """Exact expansion of T_alpha in z."""
    return _family("T", len(alpha)).get(alpha, degree_cap)


def u_poly(alpha: Sequence[int], degree_cap: int = DEFAULT_DEGREE_CAP) -> ZPolynomial:
    """Exact expansion of U_alpha in z."""
    return _family("U", len(alpha)).get(alpha, degree_cap)


# ---------------------------------------------------------------------- weights

def weight_w(t) -> np.ndarray:
    """w = prod_{mu<nu} sin^2 pi (t_mu - t_nu)."""
    t = as_float_points(t)
    out = np.ones(t.shape[0])
    for a, b in itertools.combinations(range(t.shape[-1]), 2):
        out *= np.sin(np.pi * (t[:, a] - t[:, b])) ** 2
    return out


def weight_poly(d: int) -> ZPolynomial:
    """w as a polynomial in z of degree 2d.

    From w = (-1/4)^{d(d+1)/2} ((d+1)!)^2 TS_v^2 and the product rule
    TS_k TS_j = (1/(d+1)!) sum_sigma sign(sigma) TC_{k + j sigma}.
    """
    d = check_dimension(d)
    v = v_circ(d)
    D = d * (d + 1) // 2
    total = ZPolynomial(d)
    for perm, sign in permutations_with_parity(d + 1):
        k = [v[i] + v[perm[i]] for i in range(d + 1)]
        total = total + t_poly(_sorted_alpha(k)).scale(sign)
    return total.scale(Fraction(-1, 4) ** D * math.factorial(d + 1))


def jacobian_constant(d: int) -> float:
    """|det dx/d(t_1..t_d)| = jacobian_constant(d) * sqrt(w)."""
    return 2 ** (d * (d + 2) / 2) * math.prod(math.pi / math.comb(d + 1, k) for k in range(1, d + 1))


def c_half(d: int) -> float:
    """1 / integral of w^{1/2} dx over the image region."""
    return 2 ** (d * d / 2) * math.prod(math.comb(d + 1, k) / math.pi for k in range(1, d + 1))


def c_minus_half(d: int) -> float:
    """1 / integral of w^{-1/2} dx over the image region."""
    return math.factorial(d + 1) / jacobian_constant(d)


# ------------------------------------------------------------------------ rules

@dataclass(frozen=True)
class GaussRule:
    """Cubature rule in the real Chebyshev coordinates x.

    ``kind`` is ``"gauss"`` (weight w^{1/2}) or ``"lobatto"`` (weight
    w^{-1/2}).  Nodes carry their exact simplex preimages.
    """

    kind: str
    d: int
    n: int
    degree: int
    nodes: np.ndarray
    weights: np.ndarray
    t_preimages: tuple[tuple[Fraction, ...], ...]
    exact_weights: tuple[Fraction, ...] | None = None

    def nodes_float(self) -> np.ndarray:
        return self.nodes

    def weights_float(self) -> np.ndarray:
        return self.weights

    def __len__(self) -> int:
        return len(self.t_preimages)


def gauss_rule(d: int, n: int) -> GaussRule:
    """Gaussian cubature for c_{1/2} w^{1/2} dx, exact on polynomials of degree 2n-1.

    Nodes are the images of the interior simplex nodes at scale n+d, one for
    each polynomial of degree below n.
    """
    d = check_dimension(d)
    if n < 1:
        raise ValidationError("n must be >= 1")
    m = n + d
    ks = enum_Lambda_interior(d, m)
    t = np.asarray(ks, dtype=float) / ((d + 1) * m)
    weights = 2.0 ** (d * (d + 1)) / ((d + 1) * m**d) * weight_w(t)
    nodes = x_map(z_map(t))
    pre = tuple(node_of(k, m) for k in ks)
    return GaussRule("gauss", d, n, 2 * n - 1, nodes, weights, pre)


def lobatto_rule(d: int, n: int) -> GaussRule:
    """Gauss-Lobatto-type cubature for c_{-1/2} w^{-1/2} dx, exact to degree 2n-1."""
    d = check_dimension(d)
    if n < 1:
        raise ValidationError("n must be >= 1")
    ks = enum_Lambda_n(d, n)
    t = np.asarray(ks, dtype=float) / ((d + 1) * n)
    exact = tuple(lambda_weight(k, n) / ((d + 1) * n**d) for k in ks)
    weights = np.array([float(w) for w in exact])
    nodes = x_map(z_map(t))
    pre = tuple(node_of(k, n) for k in ks)
    return GaussRule("lobatto", d, n, 2 * n - 1, nodes, weights, pre, exact)


def ideal_generator(alpha: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(alpha, alpha*) with alpha* from shifting k by -(d+1, 0, ..., 0, -(d+1)) and re-sorting.

    For |alpha| = n+1 the difference T_alpha - T_alpha* vanishes on the
    Lobatto nodes of order n.
    """
    alpha = tuple(int(a) for a in alpha)
    if any(a < 0 for a in alpha):
        raise ValidationError(f"invalid Chebyshev index {alpha}")
    d = len(alpha)
    k = list(k_of(alpha))
    k[0] -= d + 1
    k[-1] += d + 1
    return alpha, _sorted_alpha(k)


def monomial(beta: Sequence[int]):
    """Callable x -> prod x_i^beta_i on arrays of shape (N, d)."""
    beta = np.asarray(beta)

    def f(x):
        return np.prod(np.asarray(x) ** beta, axis=1)

    return f
