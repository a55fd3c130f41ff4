"""Exact dimensions of weight 3 Jacobi cusp form eigenspaces via the theta
decomposition.

A Jacobi form of weight k and index t is a vector (h_mu) of weight k - 1/2
for the dual Weil representation of the lattice <2t>.  The operators W_d
permute the components by mu -> xi_d * mu and commute with that
representation, so each eigenspace J^eps is the space of vector valued cusp
forms for the representation restricted to the eps-isotypic subspace.  For
weight above 2 its dimension is given by the usual Riemann-Roch expression

    dim = d + d*k/12 - alpha(e(k/4) S) - alpha((e(k/6) ST)^-1) - alpha(T) - #{T-fixed}

where alpha sums the arguments (in [0, 1)) of the eigenvalues.  The traces of
S and ST on the subspace are quadratic Gauss sums, evaluated in closed form
with sympy radicals, so everything stays exact.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

import sympy

from .numtheory import kronecker_symbol, unitary_divisors, xi_element

KAPPA = Fraction(5, 2)   # weight 3 minus 1/2


def gauss_sum(a: int, n: int):
    """sum_{x mod n} e(a x^2 / n) as an exact sympy number."""
    if n < 1:
        raise ValueError("modulus must be positive")
    g = gcd(a, n)
    if g > 1:
        return g * gauss_sum(a // g, n // g)
    a %= n
    if n == 1:
        return sympy.Integer(1)
    if n % 2:
        unit = 1 if n % 4 == 1 else sympy.I
        return kronecker_symbol(a, n) * unit * sympy.sqrt(n)
    if n % 4 == 2:
        return sympy.Integer(0)
    return (1 + sympy.I ** a) * kronecker_symbol(n, a) * sympy.sqrt(n)


def _root_of_unity(x: Fraction):
    return sympy.exp(2 * sympy.pi * sympy.I * sympy.Rational(x.numerator, x.denominator))


def _rational(x, what: str) -> Fraction:
    x = sympy.nsimplify(sympy.expand(x))
    if not x.is_Rational:
        raise ArithmeticError(f"{what} = {x} should be rational")
    return Fraction(int(x.p), int(x.q))


@lru_cache(maxsize=None)
def _weil_traces(t: int):
    """Per d: (#fixed mu, T-spectrum of fixed mu, tr(W_d S), tr(W_d ST))."""
    n = 2 * t
    c = (1 + sympy.I) / sympy.sqrt(2)
    norm = sympy.sqrt(n)
    out = {}
    for d in unitary_divisors(t):
        xi = xi_element(t, d).value
        fixed = [mu for mu in range(n) if (xi * mu - mu) % n == 0]
        spectrum = [Fraction(-mu * mu, 4 * t) % 1 for mu in fixed]
        tr_s = c * gauss_sum(xi, n) / norm
        # sum over mu mod 2t of e((2 xi - 1) mu^2 / 4t) is half the full Gauss sum
        tr_st = c * gauss_sum(2 * xi - 1, 2 * n) / (2 * norm)
        out[d] = (len(fixed), spectrum, tr_s, tr_st)
    return out


@lru_cache(maxsize=None)
def eigenspace_dimension(t: int, signs: tuple) -> int:
    """dim J^eps_{3,t} for eps given as ((d, eps(xi_d)) for every d || t)."""
    eps = dict(signs)
    if eps.get(t, 1) == 1:
        # h_{-mu} = -h_mu for odd weight, so eps(xi_t) = +1 leaves nothing
        return 0
    data = _weil_traces(t)
    size = len(data)
    dim_v = Fraction(sum(eps[d] * data[d][0] for d in data), size)
    t_mult: dict = {}
    for d, (_, spectrum, _, _) in data.items():
        for lam in spectrum:
            t_mult[lam] = t_mult.get(lam, 0) + Fraction(eps[d], size)
    alpha_t = sum(lam * m for lam, m in t_mult.items())
    t_fixed = t_mult.get(Fraction(0), Fraction(0))

    # e(k/4) S squares to 1 on the subspace
    tr_a = _rational(_root_of_unity(KAPPA / 4)
                     * sum(eps[d] * data[d][2] for d in data) / size, "tr(e(k/4)S)")
    minus_one = (dim_v - tr_a) / 2
    alpha_a = minus_one / 2

    # M = e(k/6) ST cubes to 1; (e(k/6) ST)^-1 has the conjugate spectrum
    tau = sympy.expand(_root_of_unity(KAPPA / 6)
                       * sum(eps[d] * data[d][3] for d in data) / size)
    re = _rational(sympy.re(tau), "Re tr(e(k/6)ST)")
    im = _rational(sympy.im(tau) * 2 / sympy.sqrt(3), "Im tr(e(k/6)ST)")
    n1_plus_n2 = Fraction(2, 3) * (dim_v - re)
    n1 = (n1_plus_n2 + im) / 2
    n2 = (n1_plus_n2 - im) / 2
    alpha_b = n2 / 3 + 2 * n1 / 3

    value = dim_v + dim_v * KAPPA / 12 - alpha_a - alpha_b - alpha_t - t_fixed
    if value.denominator != 1 or value < 0:
        raise ArithmeticError(f"dimension {value} at t={t} is not a nonnegative integer")
    return int(value)
