"""Independent dense linear-algebra oracles built on sympy."""
from fractions import Fraction

import sympy as sp

from koornwinder.exactring import LaurentPoly
from koornwinder.heckeops import rep
from koornwinder.rootsys import downset
from koornwinder.spectrum import gamma


def _rat(c: Fraction) -> sp.Rational:
    return sp.Rational(c.numerator, c.denominator)


def joint_kernel(lam, p):
    """Basis of the joint eigenspace of Y_1..Y_n at gamma_lam on the downset of lam.

    Builds the stacked matrix of (Y_i - gamma_i) densely and hands it to sympy's
    exact nullspace, with no use of triangularity.
    """
    n = len(lam)
    R = rep(n, p)
    basis = sorted(downset(tuple(lam)))
    index = {mu: k for k, mu in enumerate(basis)}
    g = gamma(tuple(lam), p)
    blocks = []
    for i in range(1, n + 1):
        M = sp.zeros(len(basis), len(basis))
        for col, mu in enumerate(basis):
            image = R.Y(i, LaurentPoly.monomial(mu)) - LaurentPoly.monomial(mu, g[i - 1])
            for nu, c in image.items():
                M[index[nu], col] = _rat(c)
        blocks.append(M)
    kernel = sp.Matrix.vstack(*blocks).nullspace()
    return basis, kernel


def kernel_polynomial(lam, p) -> tuple[LaurentPoly, int]:
    basis, kernel = joint_kernel(lam, p)
    v = kernel[0]
    lead = v[basis.index(tuple(lam))]
    terms = {mu: Fraction(int(sp.numer(c)), int(sp.denom(c))) for mu, c in zip(basis, v / lead)}
    return LaurentPoly(len(lam), terms), len(kernel)
