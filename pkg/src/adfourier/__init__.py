"""Discrete Fourier analysis on the A_d lattice.

Index sets, kernels, cubature and interpolation on the fundamental domain
and simplex of the A_d lattice, plus the generalized Chebyshev polynomials
and their Gaussian cubature.
"""
from .chebyshev import (
    GaussRule,
    ZPolynomial,
    alpha_of,
    gauss_rule,
    ideal_generator,
    k_of,
    lobatto_rule,
    t_eval,
    t_poly,
    u_eval,
    u_poly,
    weight_w,
    x_map,
    z_map,
)
from .index_sets import (
    c_weight,
    classify,
    congruence_class,
    enum_Hn,
    enum_Hn_star,
    enum_Lambda_interior,
    enum_Lambda_n,
    lambda_weight,
)
from .interpolation import Interpolant, lebesgue_estimate
from .lattice import BudgetError, Permutation, ValidationError, fold_into_domain, orbit
from .quadrature import CubatureRule, cubature_omega, cubature_simplex, integrate
from .trig import dirichlet, phi, phi_star_kernel, tc, theta, ts

__version__ = "0.1.0"
