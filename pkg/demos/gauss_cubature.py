"""Gaussian cubature on the deltoid for the weight w^{1/2}.

For each n the rule has exactly dim Pi_{n-1} nodes, the minimum possible
for a rule of degree 2n-1.  The script prints node counts, checks that the
nodes are common zeros of the second-kind polynomials of degree n, and
compares a monomial integral with an independent tensor-product reference.
"""
import math

import numpy as np

from adfourier import chebyshev as cheb
from adfourier.index_sets import enum_Lambda_n
from adfourier.oracle import reference_integral
from adfourier.quadrature import integrate

d = 2
for n in range(1, 6):
    r = cheb.gauss_rule(d, n)
    z = cheb.z_from_x(r.nodes)
    zeros = max(
        np.abs(cheb.u_poly(cheb.alpha_of(k)).evaluate(z)).max()
        for k in enum_Lambda_n(d, n)
        if sum(cheb.alpha_of(k)) == n
    )
    f = cheb.monomial((n - 1, n))
    err = abs(integrate(r, f) - reference_integral(f, 2 * n - 1, d, "gauss"))
    print(
        f"n={n}: {len(r):2d} nodes (dim Pi_{n - 1} = {math.comb(n + d - 1, d):2d}), "
        f"max |U| at nodes {zeros:.1e}, x1^{n - 1} x2^{n} error {err:.1e}"
    )

one = cheb.gauss_rule(2, 1)
print("single-node rule:", one.nodes[0], one.weights[0])
