"""Cubature on the regular hexagon (d = 2).

Builds the symmetric lattice rule of order n on the hexagonal fundamental
domain, prints its nodes grouped by boundary stratum, and shows that it
integrates every exponential of degree 2n-1 exactly while failing at degree 2n.
"""
from collections import Counter

import numpy as np

from adfourier import cubature_omega, enum_Hn_star, integrate, phi
from adfourier.index_sets import classify

d, n = 2, 3
rule = cubature_omega(d, n)
print(f"hexagon rule, n={n}: {len(rule)} nodes, weights sum to {sum(rule.weights)}")
print("nodes per stratum:", dict(Counter(str(classify(k, n)) for k in rule.indices)))

worst = max(
    abs(integrate(rule, lambda t, k=k: phi(k, t)) - (0 if any(k) else 1)) for k in enum_Hn_star(d, 2 * n - 1)
)
print(f"max error over all exponentials of degree <= {2 * n - 1}: {worst:.2e}")

witness = ((d + 1) * n, -(d + 1) * n, 0)
print(f"degree-{2 * n} exponential {witness}: rule gives {integrate(rule, lambda t: phi(witness, t)).real:.3f}, true 0")

# a smooth non-polynomial integrand: convergence as n grows
f = lambda t: np.exp(np.cos(2 * np.pi * (t[:, 0] - t[:, 1])))
for m in (2, 4, 8, 16):
    print(f"n={m:2d}: average of exp(cos 2pi(t1-t2)) ~ {integrate(cubature_omega(d, m), f).real:.15f}")
