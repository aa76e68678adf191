"""Index sets of the lattice Fourier analysis and their cubature weights.

``H_n`` is the half-open index set of size (d+1) n^d, ``H*_n`` its closed
symmetric hull, ``Lambda_n`` the sorted orbit representatives inside
``H*_n`` and ``Lambda_n^o`` the strictly decreasing ones in the interior.
All enumerators return tuples of ints in descending lexicographic order.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .lattice import (
    BudgetError,
    ValidationError,
    check_dimension,
    check_index,
    max_cells,
    run_lengths,
)


@dataclass(frozen=True)
class BoundaryClass:
    """Stratum of an index in H*_n.

    ``a`` counts the maximal entries and ``b`` the minimal ones; both are
    zero for interior points.
    """

    interior: bool
    a: int = 0
    b: int = 0

    def __str__(self) -> str:
        return "interior" if self.interior else f"boundary({self.a},{self.b})"


def _check_order(n: int, minimum: int) -> int:
    if isinstance(n, bool) or not isinstance(n, int):
        raise ValidationError(f"order must be an integer, got {n!r}")
    if n < minimum:
        raise ValidationError(f"order must be >= {minimum}, got {n}")
    return n


def _budget(count: int) -> None:
    if count > max_cells():
        raise BudgetError(
            f"enumeration of {count} points exceeds the budget of {max_cells()} "
            "(raise ADF_MAX_CELLS to allow it)"
        )


def _from_offsets(b: Sequence[int], d: int) -> tuple[int, ...]:
    # k_i = (d+1) b_i - sum(b) is the unique element of H with k_i - k_j = (d+1)(b_i - b_j)
    s = sum(b)
    return tuple((d + 1) * x - s for x in b)


def _sorted_desc(ks) -> list[tuple[int, ...]]:
    return sorted(ks, reverse=True)


def enum_Hn(d: int, n: int) -> list[tuple[int, ...]]:
    """Half-open set: -(d+1)n < k_i - k_j <= (d+1)n for i < j.

    Generated part by part: in part j the offsets b = (k - k_j)/(d+1) satisfy
    1 <= b_i <= n before position j and 0 <= b_l <= n-1 after it.
    """
    d = check_dimension(d)
    _check_order(n, 1)
    _budget((d + 1) * n**d)
    out = []
    for j in range(d + 1):
        ranges = [range(1, n + 1)] * j + [range(0, 1)] + [range(0, n)] * (d - j)
        out.extend(_from_offsets(b, d) for b in itertools.product(*ranges))
    return _sorted_desc(out)


def enum_Hn_star(d: int, n: int) -> list[tuple[int, ...]]:
    """Closed set: |k_i - k_j| <= (d+1)n for all i, j.

    Each member corresponds to exactly one offset vector b in {0..n}^{d+1}
    with minimum 0; splitting on the first zero makes the generation exact.
    """
    d = check_dimension(d)
    _check_order(n, 0)
    _budget((n + 1) ** (d + 1) - n ** (d + 1))
    out = []
    for j in range(d + 1):
        ranges = [range(1, n + 1)] * j + [range(0, 1)] + [range(0, n + 1)] * (d - j)
        out.extend(_from_offsets(b, d) for b in itertools.product(*ranges))
    return _sorted_desc(out)


def enum_Hn_interior(d: int, n: int) -> list[tuple[int, ...]]:
    """Interior points of H*_n (spread strictly below (d+1)n); equals H*_{n-1}."""
    _check_order(n, 1)
    return enum_Hn_star(d, n - 1)


def classify(k: Sequence[int], n: int) -> BoundaryClass:
    k = check_index(k)
    d = len(k) - 1
    hi, lo = max(k), min(k)
    spread = hi - lo
    if spread > (d + 1) * n:
        raise ValidationError(f"{k} is outside H*_{n}")
    if spread < (d + 1) * n:
        return BoundaryClass(True)
    return BoundaryClass(False, k.count(hi), k.count(lo))


def c_weight(k: Sequence[int], n: int) -> Fraction:
    """Weight of k in the symmetric discrete inner product."""
    cls = classify(k, n)
    if cls.interior:
        return Fraction(1)
    return Fraction(1, math.comb(cls.a + cls.b, cls.a))


def _from_alpha(alpha: Sequence[int]) -> tuple[int, ...]:
    # offsets b_i = alpha_i + ... + alpha_d, b_{d+1} = 0
    d = len(alpha)
    b = [sum(alpha[i:]) for i in range(d)] + [0]
    return _from_offsets(b, d)


def _compositions_bounded(d: int, total_max: int, minimum: int):
    """alpha in Z^d with alpha_i >= minimum and sum(alpha) <= total_max."""
    def rec(prefix, remaining, slots):
        if slots == 0:
            yield tuple(prefix)
            return
        for a in range(minimum, remaining - minimum * (slots - 1) + 1):
            yield from rec(prefix + [a], remaining - a, slots - 1)

    if total_max < minimum * d:
        return
    yield from rec([], total_max, d)


def enum_Lambda_n(d: int, n: int) -> list[tuple[int, ...]]:
    """Sorted representatives: k_1 >= ... >= k_{d+1}, k_1 - k_{d+1} <= (d+1)n."""
    d = check_dimension(d)
    _check_order(n, 0)
    _budget(math.comb(n + d, d))
    return _sorted_desc(_from_alpha(a) for a in _compositions_bounded(d, n, 0))


def enum_Lambda_interior(d: int, n: int) -> list[tuple[int, ...]]:
    """Strictly decreasing representatives with k_1 - k_{d+1} < (d+1)n."""
    d = check_dimension(d)
    _check_order(n, 0)
    if n < 1:
        return []
    _budget(math.comb(n - 1, d))
    return _sorted_desc(_from_alpha(a) for a in _compositions_bounded(d, n - 1, 1))


def composition_of(k: Sequence[int]) -> tuple[int, ...]:
    """Run-lengths of a non-increasing index."""
    if any(k[i] < k[i + 1] for i in range(len(k) - 1)):
        raise ValidationError(f"{tuple(k)} is not non-increasing")
    return run_lengths(k)


def in_Lambda(k: Sequence[int], n: int) -> bool:
    k = tuple(k)
    d = len(k) - 1
    try:
        check_index(k)
    except ValidationError:
        return False
    sorted_ok = all(k[i] >= k[i + 1] for i in range(d))
    return sorted_ok and k[0] - k[-1] <= (d + 1) * n


def lambda_weight(k: Sequence[int], n: int) -> Fraction:
    """Weight of k in the discrete simplex inner product.

    Equals c_k times the orbit size of k.  On the outer face the first and
    last runs of the composition merge because they are congruent modulo
    the scaled lattice.
    """
    k = check_index(k)
    if not in_Lambda(k, n):
        raise ValidationError(f"{k} is not in Lambda_{n}")
    d = len(k) - 1
    p = composition_of(k)
    fact = math.factorial
    if k[0] - k[-1] < (d + 1) * n:
        return Fraction(fact(d + 1), math.prod(fact(x) for x in p))
    middle = math.prod(fact(x) for x in p[1:-1])
    return Fraction(fact(d + 1), fact(p[0] + p[-1]) * middle)


def congruence_class(j: Sequence[int], n: int) -> list[tuple[int, ...]]:
    """Members of H*_n congruent to j modulo (d+1)n times the lattice.

    For a boundary index the maximal and minimal values may be redistributed
    over the positions that carry them, keeping their counts.
    """
    cls = classify(j, n)
    j = tuple(j)
    if cls.interior:
        return [j]
    hi, lo = max(j), min(j)
    extreme = [i for i, x in enumerate(j) if x in (hi, lo)]
    out = []
    for tops in itertools.combinations(extreme, cls.a):
        k = list(j)
        for i in extreme:
            k[i] = hi if i in tops else lo
        out.append(tuple(k))
    return _sorted_desc(out)


def stratum_count(d: int, n: int, a: int, b: int) -> int:
    """Closed-form size of the boundary stratum with a maximal and b minimal entries."""
    fact = math.factorial
    return fact(d + 1) // (fact(a) * fact(b) * fact(d + 1 - a - b)) * (n - 1) ** (d + 1 - a - b)
