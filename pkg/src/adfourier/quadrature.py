"""Discrete inner products and cubature rules on the hexagonal domain and the simplex.

Functions passed to the inner products and to :func:`integrate` are
vectorised callables: they receive a float array of shape (N, d+1) and
return N values.

Exactness degrees are recorded in the trigonometric scale, where phi_k has
degree (max k - min k)/(d+1).  Under the change of variables to the
Chebyshev coordinates this degree equals the total algebraic degree.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np

from .index_sets import (
    c_weight,
    enum_Hn,
    enum_Hn_star,
    enum_Lambda_interior,
    enum_Lambda_n,
    lambda_weight,
)
from .lattice import ValidationError, check_dimension

Func = Callable[[np.ndarray], np.ndarray]


def node_of(k, n: int) -> tuple[Fraction, ...]:
    """Exact node k/((d+1)n)."""
    den = len(k) * n
    return tuple(Fraction(x, den) for x in k)


def _nodes_float(ks, n: int) -> np.ndarray:
    ks = np.asarray(ks, dtype=float)
    return ks / (ks.shape[-1] * n)


def _values(f: Func, pts: np.ndarray) -> np.ndarray:
    vals = np.asarray(f(pts))
    if vals.shape == ():
        vals = np.full(pts.shape[0], vals)
    return vals


def _weighted(f: Func, g: Func | None, pts: np.ndarray, w: np.ndarray) -> complex:
    fv = _values(f, pts)
    if g is not None:
        fv = fv * np.conj(_values(g, pts))
    return complex(np.sum(w * fv))


def inner_product_n(f: Func, g: Func, d: int, n: int) -> complex:
    """Discrete product over the half-open node set H_n with equal weights."""
    d = check_dimension(d)
    ks = enum_Hn(d, n)
    w = np.full(len(ks), 1.0 / ((d + 1) * n**d))
    return _weighted(f, g, _nodes_float(ks, n), w)


def inner_product_sym(f: Func, g: Func, d: int, n: int) -> complex:
    """Symmetric discrete product over H*_n with boundary weights c_k."""
    d = check_dimension(d)
    rule = cubature_omega(d, n)
    return _weighted(f, g, rule.nodes_float(), rule.weights_float())


def inner_product_simplex(f: Func, g: Func, d: int, n: int) -> complex:
    """Discrete simplex product over Lambda_n with weights lambda_k."""
    d = check_dimension(d)
    rule = cubature_simplex(d, n)
    return _weighted(f, g, rule.nodes_float(), rule.weights_float())


def inner_product_simplex_interior(f: Func, g: Func, d: int, n: int) -> complex:
    """Product over the interior nodes Lambda_n^o with the equal weight d!/n^d.

    Under it the generalized sines satisfy <TS_k, TS_j> = delta/(d+1)!.
    """
    d = check_dimension(d)
    ks = enum_Lambda_interior(d, n)
    if not ks:
        raise ValidationError(f"no interior nodes for d={d}, n={n}")
    w = np.full(len(ks), math.factorial(d) / n**d)
    return _weighted(f, g, _nodes_float(ks, n), w)


@dataclass(frozen=True)
class CubatureRule:
    """Exact-rational cubature rule; ``domain`` is ``"omega"`` or ``"simplex"``."""

    domain: str
    d: int
    n: int
    indices: tuple[tuple[int, ...], ...]
    weights: tuple[Fraction, ...]
    exactness_degree: int

    @property
    def nodes(self) -> tuple[tuple[Fraction, ...], ...]:
        return tuple(node_of(k, self.n) for k in self.indices)

    def nodes_float(self) -> np.ndarray:
        return _nodes_float(self.indices, self.n)

    def weights_float(self) -> np.ndarray:
        return np.array([float(w) for w in self.weights])

    def __len__(self) -> int:
        return len(self.indices)


def cubature_omega(d: int, n: int) -> CubatureRule:
    """Rule on the fundamental domain, exact for phi_k of degree <= 2n-1."""
    d = check_dimension(d)
    if n < 1:
        raise ValidationError("n must be >= 1")
    ks = enum_Hn_star(d, n)
    scale = Fraction(1, (d + 1) * n**d)
    weights = tuple(c_weight(k, n) * scale for k in ks)
    return CubatureRule("omega", d, n, tuple(ks), weights, 2 * n - 1)


def cubature_simplex(d: int, n: int) -> CubatureRule:
    """Rule on the simplex, exact for symmetric functions TC_k of degree <= 2n-1."""
    d = check_dimension(d)
    if n < 1:
        raise ValidationError("n must be >= 1")
    ks = enum_Lambda_n(d, n)
    scale = Fraction(1, (d + 1) * n**d)
    weights = tuple(lambda_weight(k, n) * scale for k in ks)
    return CubatureRule("simplex", d, n, tuple(ks), weights, 2 * n - 1)


def integrate(rule, f: Func) -> complex:
    """Apply a rule (trigonometric or Chebyshev) to a vectorised callable."""
    return _weighted(f, None, rule.nodes_float(), rule.weights_float())
