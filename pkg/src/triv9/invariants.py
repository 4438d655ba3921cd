"""Conjugacy-invariant comparison of semisimple representatives.

For a semisimple degree-1 element x the eigenvalues of ad x form 6-element
orbits (+- zeta^k lambda per root hexad), so the characteristic polynomial
of (ad x)^3 restricted to the degree-1 block is R(s^2) with

    R(u) = u^(2+z) * prod_over_nonvanishing_hexads (u - lambda_j^6),

an SL(9,C)-conjugation invariant.  For elements of the Cartan subspace the
polynomial comes directly from the restricted-root values; for arbitrary
rational semisimple elements it is computed as a certified characteristic
polynomial (CRT over enough primes to beat the coefficient bound).
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence

import numpy as np

from . import e8
from .cartan import _ad_apply, build_cartan
from .e8 import g1_iso
from .linalg import charpoly_via_hessenberg_exactsmall, poly_mul, poly_trim
from .scalar import Cyc, ONE, ZERO
from .trivector import Trivector


def hexad_polynomial(x: Trivector) -> List[Fraction]:
    """R(u) for a rational semisimple trivector, exact."""
    rs, alg = e8.build()
    X = g1_iso(alg, x)
    g1 = alg.g1_indices
    pos = {u: t for t, u in enumerate(g1)}
    B = [[Fraction(0)] * 84 for _ in range(84)]
    for col, u in enumerate(g1):
        v = {u: Fraction(1)}
        for _ in range(3):
            v = _ad_apply(alg, X, v)
        for r, val in v.items():
            B[pos[r]][col] = val
    cp = charpoly_via_hessenberg_exactsmall(B)
    # cp(s) must be even: R(s^2) = cp(s)
    R = []
    for k, c in enumerate(cp):
        if k % 2 == 1:
            if c != 0:
                raise ArithmeticError("degree-1 block char poly is not even; "
                                      "element is not semisimple in a Cartan subspace")
        else:
            R.append(c)
    return poly_trim(R)


def cartan_point_polynomial(coords: Sequence) -> List[Fraction]:
    """R(u) for a point of the Cartan subspace, from the hexad eigen-data
    (beta(q)^6 per root hexad, at the true eigenvalue scale)."""
    data = build_cartan()
    cs = [c if isinstance(c, Cyc) else Cyc.rational(c) for c in coords]
    poly_c = [ONE]  # polynomial over Q(zeta12), coefficients low->high
    zeros = 0
    for hexad in data.hexads:
        mu = hexad.mu_at(cs)
        if mu.is_zero():
            zeros += 1
            continue
        # multiply poly_c by (u - mu)
        new = [ZERO] * (len(poly_c) + 1)
        for k, c in enumerate(poly_c):
            new[k + 1] = new[k + 1] + c
            new[k] = new[k] - c * mu
        poly_c = new
    # u^(2+zeros) prefactor
    out: List[Fraction] = []
    for c in poly_c:
        if not c.is_rational():
            raise ArithmeticError("hexad polynomial has irrational coefficients")
        out.append(c.rational_value())
    return poly_trim([Fraction(0)] * (2 + zeros) + out)
