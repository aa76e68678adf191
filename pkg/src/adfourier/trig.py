"""Exponentials, generalized cosines and sines, and the lattice kernels.

Every evaluator takes points as an array of shape (N, d+1) (a single point
is promoted) and returns an array of shape (N,).
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np

from .lattice import ValidationError, as_float_points, check_index, orbit

SING_EPS = 1e-9


def _phase_matrix(ks: np.ndarray, t: np.ndarray) -> np.ndarray:
    d1 = t.shape[-1]
    return np.exp((2j * np.pi / d1) * (t @ ks.T))


def phi(k: Sequence[int], t) -> np.ndarray:
    """exp(2 pi i k.t / (d+1)) for k in H."""
    t = as_float_points(t)
    k = np.asarray(check_index(k), dtype=float)
    return np.exp((2j * np.pi / t.shape[-1]) * (t @ k))


def tc(k: Sequence[int], t) -> np.ndarray:
    """Generalized cosine: average of phi over the distinct orbit of k."""
    t = as_float_points(t)
    ks = np.asarray(orbit(k), dtype=float)
    return _phase_matrix(ks, t).mean(axis=1)


def ts(k: Sequence[int], t) -> np.ndarray:
    """Generalized sine: signed average of phi_k(t sigma) over all permutations.

    The signed sum is the determinant of [phi_{k_i}(t_j)]_{i,j}, computed
    here by LU factorisation instead of the (d+1)!-term expansion.
    """
    t = as_float_points(t)
    d1 = t.shape[-1]
    k = np.asarray(k, dtype=float)
    mats = np.exp((2j * np.pi / d1) * k[None, :, None] * t[:, None, :])
    return np.linalg.det(mats) / math.factorial(d1)


def sine_ratio(n: int, t) -> np.ndarray:
    """sin(pi n t) / sin(pi t) with the removable singularities filled in.

    The argument is first reduced by its nearest integer m, so the ratio is
    (-1)^{m(n-1)} sin(pi n r)/sin(pi r) with |r| <= 1/2.
    """
    t = np.asarray(t, dtype=float)
    m = np.rint(t)
    r = t - m
    sign = np.where((m.astype(np.int64) * (n - 1)) % 2 == 0, 1.0, -1.0)
    den = np.sin(np.pi * r)
    small = np.abs(den) < SING_EPS
    safe = np.where(small, 1.0, den)
    ratio = np.where(small, float(n), np.sin(np.pi * n * r) / safe)
    return sign * ratio


def theta(n: int, t) -> np.ndarray:
    """Product kernel prod_j sin(pi n t_j)/sin(pi t_j)."""
    if n < 0:
        raise ValidationError("n must be non-negative")
    t = as_float_points(t)
    return np.prod(sine_ratio(n, t), axis=-1)


def dirichlet(n: int, t) -> np.ndarray:
    """Sum of phi_k over H*_n, in the closed form theta_{n+1} - theta_n."""
    return theta(n + 1, t) - theta(n, t)


def _subset_weights(d: int) -> list[tuple[tuple[int, ...], float]]:
    return [
        (sub, math.factorial(len(sub)) * math.factorial(d - len(sub)) / math.factorial(d + 1))
        for r in range(d + 1)
        for sub in itertools.combinations(range(d), r)
    ]


def phi_star_kernel(n: int, t) -> np.ndarray:
    """Symmetric interpolation kernel (1/((d+1)n^d)) sum_{H*_n} c_k phi_k, compact form.

    For each coordinate j the product of sine ratios over the other
    coordinates is multiplied by cos(pi n t_j) and by a weighted sum over
    subsets I of the other coordinates of cos(pi (t_j + 2 sum_I t_i)).
    """
    if n < 1:
        raise ValidationError("n must be >= 1")
    t = as_float_points(t)
    d = t.shape[-1] - 1
    ratios = sine_ratio(n, t)
    weights = _subset_weights(d)
    total = np.zeros(t.shape[0])
    for j in range(d + 1):
        others = [i for i in range(d + 1) if i != j]
        prod = np.prod(ratios[:, others], axis=-1)
        inner = np.zeros(t.shape[0])
        for sub, w in weights:
            arg = t[:, j] + 2 * t[:, [others[s] for s in sub]].sum(axis=-1)
            inner += w * np.cos(np.pi * arg)
        total += prod * np.cos(np.pi * n * t[:, j]) * inner
    return total / ((d + 1) * n**d)


def _spread_degree(k: Sequence[int]) -> int:
    return (max(k) - min(k)) // len(k)


@dataclass
class TrigPoly:
    """A finite expansion in one of the bases exp, cos (TC) or sin (TS)."""

    basis: str
    coeffs: Mapping[tuple[int, ...], complex] = field(default_factory=dict)

    def __post_init__(self):
        if self.basis not in ("exp", "cos", "sin"):
            raise ValidationError(f"unknown basis {self.basis!r}")
        clean = {}
        for k, c in self.coeffs.items():
            k = check_index(k)
            if self.basis in ("cos", "sin") and list(k) != sorted(k, reverse=True):
                raise ValidationError(f"{self.basis} keys must be non-increasing, got {k}")
            if self.basis == "sin" and len(set(k)) != len(k):
                raise ValidationError(f"sin keys must be strictly decreasing, got {k}")
            clean[k] = complex(c)
        self.coeffs = clean

    @property
    def degree(self) -> int:
        return max((_spread_degree(k) for k in self.coeffs), default=0)

    def __call__(self, t) -> np.ndarray:
        t = as_float_points(t)
        out = np.zeros(t.shape[0], dtype=complex)
        fn = {"exp": phi, "cos": tc, "sin": ts}[self.basis]
        for k, c in self.coeffs.items():
            out += c * fn(k, t)
        return out


def partial_sum(coeffs: Mapping[tuple[int, ...], complex], n: int, t) -> np.ndarray:
    """Evaluate sum_k coeffs[k] phi_k(t) for keys restricted to H*_n."""
    for k in coeffs:
        k = check_index(k)
        if max(k) - min(k) > len(k) * n:
            raise ValidationError(f"key {k} lies outside H*_{n}")
    return TrigPoly("exp", coeffs)(t)
