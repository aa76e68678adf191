"""Lattice interpolation on the fundamental domain and on the simplex.

Four operators are provided, each keyed by its node set:

========  ==============  ============================================
kind      nodes           fundamental function at node j/N, N=(d+1)n
========  ==============  ============================================
In        H_n             Phi_n(t - j/N), equal-weight exponential sum
InStar    H*_n            Phi*_n(t - j/N), the compact symmetric kernel
Ln        Lambda_n^o      antisymmetrised Dirichlet-kernel difference
LnStar    Lambda_n        symmetrised Phi*_n, scaled by lambda_j
========  ==============  ============================================

Samples are dictionaries keyed by the integer index j.
"""
from __future__ import annotations

import math
from typing import Mapping, Sequence

import numpy as np

from .index_sets import (
    c_weight,
    enum_Hn,
    enum_Hn_star,
    enum_Lambda_interior,
    enum_Lambda_n,
    lambda_weight,
)
from .lattice import ValidationError, as_float_points, check_dimension, orbit, permutations_with_parity
from .trig import phi_star_kernel, tc, theta

KINDS = ("In", "InStar", "Ln", "LnStar")


def node_indices(kind: str, d: int, n: int) -> list[tuple[int, ...]]:
    d = check_dimension(d)
    if kind == "In":
        return enum_Hn(d, n)
    if kind == "InStar":
        return enum_Hn_star(d, n)
    if kind == "Ln":
        return enum_Lambda_interior(d, n)
    if kind == "LnStar":
        return enum_Lambda_n(d, n)
    raise ValidationError(f"unknown interpolation kind {kind!r}; expected one of {KINDS}")


def half_open_kernel(n: int, t) -> np.ndarray:
    """Phi_n(t) = (1/((d+1)n^d)) sum over H_n of phi_k(t); complex in general."""
    t = as_float_points(t)
    d = t.shape[-1] - 1
    ks = np.asarray(enum_Hn(d, n), dtype=float)
    return np.exp((2j * np.pi / (d + 1)) * (t @ ks.T)).sum(axis=1) / ((d + 1) * n**d)


def fundamental(kind: str, j: Sequence[int], n: int, t) -> np.ndarray:
    """Value at t of the fundamental (Lagrange) function attached to node j."""
    t = as_float_points(t)
    d = t.shape[-1] - 1
    j = tuple(j)
    N = (d + 1) * n
    node = np.asarray(j, dtype=float) / N
    if kind == "In":
        return half_open_kernel(n, t - node)
    if kind == "InStar":
        return phi_star_kernel(n, t - node)
    if kind == "LnStar":
        # lambda_j P+ Phi*_n(t - node) = c_j * sum over the orbit of the node
        acc = np.zeros(t.shape[0])
        for jj in orbit(j):
            acc += phi_star_kernel(n, t - np.asarray(jj, dtype=float) / N)
        return float(c_weight(j, n)) * acc
    if kind == "Ln":
        acc = np.zeros(t.shape[0])
        for perm, sign in permutations_with_parity(d + 1):
            shifted = t[:, perm] - node
            acc += sign * (theta(n, shifted) - theta(n - 1, shifted))
        return acc * math.factorial(d) / (math.factorial(d + 1) * n**d)
    raise ValidationError(f"unknown interpolation kind {kind!r}")


def fundamental_lnstar_basis(j: Sequence[int], n: int, t) -> np.ndarray:
    """Fundamental function of LnStar written as a generalized-cosine sum."""
    t = as_float_points(t)
    d = t.shape[-1] - 1
    node = np.asarray(j, dtype=float)[None, :] / ((d + 1) * n)
    acc = np.zeros(t.shape[0], dtype=complex)
    for k in enum_Lambda_n(d, n):
        acc += float(lambda_weight(k, n)) * tc(k, t) * np.conj(tc(k, node))
    return float(lambda_weight(j, n)) / ((d + 1) * n**d) * acc


class Interpolant:
    """Interpolant of given kind built from samples on its node set."""

    def __init__(self, kind: str, d: int, n: int, samples: Mapping[Sequence[int], complex]):
        if kind == "Ln" and n < d + 1:
            raise ValidationError(f"Ln needs n >= d+1 = {d + 1}; the node set is empty for n={n}")
        self.kind = kind
        self.d = check_dimension(d)
        self.n = n
        expected = node_indices(kind, d, n)
        given = {tuple(int(x) for x in k): complex(v) for k, v in samples.items()}
        check_sample_keys(expected, given)
        self.indices = expected
        self.samples = given

    def __call__(self, t) -> np.ndarray:
        t = as_float_points(t)
        out = np.zeros(t.shape[0], dtype=complex)
        for j in self.indices:
            v = self.samples[j]
            if v != 0:
                out += v * fundamental(self.kind, j, self.n, t)
        return out


def check_sample_keys(expected, given) -> None:
    exp_set = set(expected)
    missing = [k for k in expected if k not in given]
    extra = sorted((k for k in given if k not in exp_set), reverse=True)
    if missing or extra:
        parts = []
        if missing:
            parts.append(f"missing sample for node {missing[0]} ({len(missing)} missing)")
        if extra:
            parts.append(f"unexpected sample key {extra[0]} ({len(extra)} extra)")
        raise ValidationError("; ".join(parts))


def sample(kind: str, d: int, n: int, f) -> dict[tuple[int, ...], complex]:
    """Sample a vectorised callable on the node set of ``kind``."""
    ks = node_indices(kind, d, n)
    pts = np.asarray(ks, dtype=float) / ((d + 1) * n)
    vals = np.asarray(f(pts))
    return {k: complex(v) for k, v in zip(ks, vals)}


def interp_In(samples, d: int, n: int, t) -> np.ndarray:
    return Interpolant("In", d, n, samples)(t)


def interp_In_star(samples, d: int, n: int, t) -> np.ndarray:
    return Interpolant("InStar", d, n, samples)(t)


def interp_Ln(samples, d: int, n: int, t) -> np.ndarray:
    return Interpolant("Ln", d, n, samples)(t)


def interp_Ln_star(samples, d: int, n: int, t) -> np.ndarray:
    return Interpolant("LnStar", d, n, samples)(t)


def simplex_grid(d: int, G: int) -> np.ndarray:
    """Points j/((d+1)G), j in Lambda_G: a uniform barycentric grid of the simplex."""
    ks = np.asarray(enum_Lambda_n(d, G), dtype=float)
    return ks / ((d + 1) * G)


def lebesgue_grid(d: int, n: int, grid_resolution: int | None = None) -> np.ndarray:
    """Evaluation grid for Lebesgue constants on the simplex.

    A uniform grid of the given resolution (default 8n) together with the
    midpoints between adjacent nodes, which form the grid of resolution 2n.
    """
    G = 8 * n if grid_resolution is None else grid_resolution
    if G < 4 * n:
        raise ValidationError(f"grid_resolution must be >= 4n = {4 * n}, got {G}")
    pts = np.vstack([simplex_grid(d, G), simplex_grid(d, 2 * n)])
    return np.unique(np.round(pts, 15), axis=0)


def _fundamental_matrix(kind: str, d: int, n: int, pts: np.ndarray) -> np.ndarray:
    cols = [fundamental(kind, j, n, pts) for j in node_indices(kind, d, n)]
    return np.stack(cols, axis=1)


def lebesgue_function(kind: str, d: int, n: int, pts, chunk: int = 4096) -> np.ndarray:
    """sum_j |l_j(t)| at each point."""
    pts = as_float_points(pts)
    out = np.empty(pts.shape[0])
    for s in range(0, pts.shape[0], chunk):
        block = pts[s : s + chunk]
        out[s : s + chunk] = np.abs(_fundamental_matrix(kind, d, n, block)).sum(axis=1)
    return out


def _expand_orbits(pts: np.ndarray) -> np.ndarray:
    d1 = pts.shape[-1]
    perms = [p for p, _ in permutations_with_parity(d1)]
    return np.unique(np.round(np.vstack([pts[:, p] for p in perms]), 15), axis=0)


def lebesgue_estimate(kind: str, d: int, n: int, grid_resolution: int | None = None) -> float:
    """Grid maximum of the Lebesgue function, a lower bound for the operator norm.

    InStar, Ln and LnStar have permutation-invariant Lebesgue functions, so
    the simplex grid suffices; for In the grid is spread over all
    permuted copies of the simplex, which cover the fundamental domain.
    """
    d = check_dimension(d)
    if kind not in KINDS:
        raise ValidationError(f"unknown interpolation kind {kind!r}; expected one of {KINDS}")
    if kind == "Ln" and n < d + 1:
        raise ValidationError(f"Ln needs n >= d+1 = {d + 1}")
    pts = lebesgue_grid(d, n, grid_resolution)
    if kind == "In":
        pts = _expand_orbits(pts)
    return float(lebesgue_function(kind, d, n, pts).max())
