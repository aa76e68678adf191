"""Homogeneous coordinates for the A_d lattice.

Points of R^d are represented as (d+1)-vectors with zero coordinate sum.
Exact points are tuples of :class:`fractions.Fraction`; float points are
numpy arrays whose last axis has length d+1.  Integer index vectors
(members of the dual set H) are plain tuples of ints.
"""
from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

import numpy as np

MAX_DIMENSION = 8
DEFAULT_MAX_CELLS = 10**7


class ValidationError(ValueError):
    """Invalid dimension, order, point or index."""


class BudgetError(RuntimeError):
    """An enumeration or summation would exceed its configured budget."""


def max_cells() -> int:
    """Enumeration budget, overridable through ``ADF_MAX_CELLS``."""
    raw = os.environ.get("ADF_MAX_CELLS")
    if raw is None:
        return DEFAULT_MAX_CELLS
    try:
        value = int(raw)
    except ValueError as exc:
        raise ValidationError(f"ADF_MAX_CELLS must be an integer, got {raw!r}") from exc
    if value <= 0:
        raise ValidationError("ADF_MAX_CELLS must be positive")
    return value


def check_dimension(d: int, max_d: int | None = None) -> int:
    max_d = MAX_DIMENSION if max_d is None else max_d
    if isinstance(d, bool) or not isinstance(d, (int, np.integer)):
        raise ValidationError(f"dimension must be an integer, got {d!r}")
    if not 1 <= d <= max_d:
        raise ValidationError(f"dimension must satisfy 1 <= d <= {max_d}, got {d}")
    return int(d)


def _is_exact(x) -> bool:
    return isinstance(x, (int, Fraction, np.integer)) and not isinstance(x, bool)


def exact_point(coords: Sequence) -> tuple[Fraction, ...]:
    """Validate and return an exact homogeneous point."""
    if len(coords) < 2:
        raise ValidationError("a homogeneous point needs at least 2 coordinates")
    if not all(_is_exact(c) for c in coords):
        raise TypeError("exact arithmetic requires int or Fraction coordinates")
    pt = tuple(Fraction(c) for c in coords)
    if sum(pt) != 0:
        raise ValidationError(f"coordinates must sum to zero, got {pt}")
    return pt


def is_index(k: Sequence[int]) -> bool:
    """True if ``k`` lies in H: zero sum and all entries congruent mod d+1."""
    m = len(k)
    if m < 2 or sum(k) != 0:
        return False
    r = k[0] % m
    return all(x % m == r for x in k)


def check_index(k: Sequence[int]) -> tuple[int, ...]:
    k = tuple(int(x) for x in k)
    if not is_index(k):
        raise ValidationError(f"{k} is not in H (zero sum, entries congruent mod d+1)")
    return k


def as_float_points(t) -> np.ndarray:
    """Convert one point or a stack of points to a float array of shape (N, d+1)."""
    arr = np.asarray(t, dtype=float)
    if arr.ndim == 1:
        arr = arr[None, :]
    return arr


def project_to_homogeneous(t: Sequence) -> tuple:
    """Embed a point of R^d into the zero-sum hyperplane of R^{d+1}.

    Exact input (ints and Fractions) stays exact; anything else becomes float.
    """
    if len(t) < 1:
        raise ValidationError("need at least one coordinate")
    if all(_is_exact(c) for c in t):
        pt = [Fraction(c) for c in t]
        return tuple(pt + [-sum(pt)])
    vals = [float(c) for c in t]
    if not all(math.isfinite(v) for v in vals):
        raise ValidationError(f"non-finite coordinate in {t}")
    return tuple(vals + [-math.fsum(vals)])


@dataclass(frozen=True)
class Permutation:
    """A permutation of {0..m-1}; ``mapping[i]`` is the image of i.

    Acting on a vector p, entry i of the result is ``p[mapping[i]]``.
    """

    mapping: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.mapping) != list(range(len(self.mapping))):
            raise ValidationError(f"not a permutation: {self.mapping}")

    @property
    def size(self) -> int:
        return len(self.mapping)

    @property
    def parity(self) -> int:
        """+1 for even, -1 for odd (inversion count mod 2)."""
        inv = sum(
            1
            for i, j in itertools.combinations(range(self.size), 2)
            if self.mapping[i] > self.mapping[j]
        )
        return -1 if inv % 2 else 1

    def __mul__(self, other: "Permutation") -> "Permutation":
        # (sigma * tau)(i) = sigma(tau(i)), so acting by sigma then tau equals acting by sigma*tau
        if self.size != other.size:
            raise ValidationError("permutation sizes differ")
        return Permutation(tuple(self.mapping[other.mapping[i]] for i in range(self.size)))

    def inverse(self) -> "Permutation":
        inv = [0] * self.size
        for i, m in enumerate(self.mapping):
            inv[m] = i
        return Permutation(tuple(inv))

    @classmethod
    def identity(cls, m: int) -> "Permutation":
        return cls(tuple(range(m)))

    @classmethod
    def transposition(cls, m: int, i: int, j: int) -> "Permutation":
        """Swap of positions i and j (1-based, as in the usual notation)."""
        mp = list(range(m))
        mp[i - 1], mp[j - 1] = mp[j - 1], mp[i - 1]
        return cls(tuple(mp))


def permutations_with_parity(m: int) -> Iterator[tuple[tuple[int, ...], int]]:
    """All permutations of range(m) in lexicographic order, with their signs."""
    for p in itertools.permutations(range(m)):
        inv = sum(1 for i, j in itertools.combinations(range(m), 2) if p[i] > p[j])
        yield p, (-1 if inv % 2 else 1)


def apply_perm(p: Sequence, sigma: Permutation):
    """Return p sigma, whose entry i is ``p[sigma(i)]``."""
    if len(p) != sigma.size:
        raise ValidationError(f"size mismatch: point has {len(p)} entries, permutation {sigma.size}")
    out = [p[sigma.mapping[i]] for i in range(sigma.size)]
    if isinstance(p, np.ndarray):
        return np.asarray(out)
    return tuple(out)


def in_fundamental_domain(t: Sequence) -> bool:
    """Half-open hexagon-type domain: -1 < t_i - t_j <= 1 for all i < j."""
    for i, j in itertools.combinations(range(len(t)), 2):
        diff = t[i] - t[j]
        if not (-1 < diff <= 1):
            return False
    return True


def in_simplex(t: Sequence) -> bool:
    """Closed fundamental simplex: 0 <= t_i - t_j <= 1 for all i < j."""
    for i, j in itertools.combinations(range(len(t)), 2):
        diff = t[i] - t[j]
        if not (0 <= diff <= 1):
            return False
    return True


def partition_index(t: Sequence) -> int:
    """Which of the d+1 congruent parts of the domain contains ``t`` (1-based).

    Part j is characterised by ``0 < t_i - t_j <= 1`` for i < j and
    ``0 <= t_l - t_j < 1`` for l > j; it is selected by the first index at
    which the minimum coordinate is attained.
    """
    if not in_fundamental_domain(t):
        raise ValidationError(f"{tuple(t)} is outside the fundamental domain")
    m = min(t)
    return next(i for i, x in enumerate(t) if x == m) + 1


def congruent_mod_lattice(s: Sequence, t: Sequence) -> bool:
    """True iff s - t has integer entries (exact points only)."""
    s = exact_point(s)
    t = exact_point(t)
    if len(s) != len(t):
        raise ValidationError("size mismatch")
    return all((a - b).denominator == 1 for a, b in zip(s, t))


def fold_into_domain(t: Sequence) -> tuple[Fraction, ...]:
    """The unique representative of ``t`` modulo the lattice inside the domain.

    Writes t = floor(t) + f with fractional parts f in [0, 1).  Their sum r is
    an integer, and subtracting 1 from the r largest fractional parts (ties
    go to the larger index) lands in the half-open domain.
    """
    t = exact_point(t)
    frac = [x - math.floor(x) for x in t]
    r = int(sum(frac))
    order = sorted(range(len(t)), key=lambda i: (frac[i], i), reverse=True)
    shift = set(order[:r])
    return tuple(f - 1 if i in shift else f for i, f in enumerate(frac))


def multiset_permutations(k: Sequence[int]) -> list[tuple[int, ...]]:
    """Distinct rearrangements of ``k`` in descending lexicographic order."""
    items = sorted(k, reverse=True)
    out = []
    m = len(items)
    while True:
        out.append(tuple(items))
        # next permutation in descending lexicographic order
        i = m - 2
        while i >= 0 and items[i] <= items[i + 1]:
            i -= 1
        if i < 0:
            return out
        j = m - 1
        while items[j] >= items[i]:
            j -= 1
        items[i], items[j] = items[j], items[i]
        items[i + 1 :] = reversed(items[i + 1 :])


def orbit(k: Sequence[int]) -> list[tuple[int, ...]]:
    """The orbit of ``k`` under coordinate permutations, without repeats."""
    return multiset_permutations(k)


def run_lengths(k: Sequence) -> tuple[int, ...]:
    """Lengths of maximal runs of equal values in sorted order."""
    return tuple(len(list(g)) for _, g in itertools.groupby(sorted(k, reverse=True)))


def stabilizer_size(k: Sequence) -> int:
    return math.prod(math.factorial(p) for p in run_lengths(k))


def orbit_size(k: Sequence) -> int:
    return math.factorial(len(k)) // stabilizer_size(k)
