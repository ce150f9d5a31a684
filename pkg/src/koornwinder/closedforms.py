"""Closed-form products: ``v_beta`` values, the constant ``K``, evaluation
formulas, quadratic-norm ratios, Gustafson's constant term and the norm
relations between symmetric and anti-symmetric polynomials.

Everything here is exact except the infinite q-Pochhammer products, which
are evaluated in floating point with a fixed truncation.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .params import ParamSet
from .rootsys import (
    AffineRoot,
    AffineWeylElement,
    MultiplicityData,
    dominant,
    inversion_set_finite,
    inversion_set_translation,
    is_dominant,
    is_regular_dominant,
    kappa,
    orbit,
    positive_roots,
    reduced_word,
    w_lambda,
    weyl_group,
)
from .spectrum import gamma, inverse_point, v_eval, x0

__all__ = [
    "qpoch",
    "qpoch_inf",
    "v_eval",
    "C_eval",
    "K_const",
    "eval_formula_ns",
    "eval_formula_sym",
    "eval_sym_pochhammer",
    "norm_ratio_sym",
    "norm_ratio_ns",
    "gustafson_ct",
    "norm_relation_check",
    "xi_eta_at",
]


def qpoch(y, q, k: int):
    """``(y; q)_k`` for ``k >= 0``; exact for Fractions, floating for floats."""
    if k < 0:
        raise ValueError("negative Pochhammer length")
    out = 1.0 if isinstance(y, (float, complex)) or isinstance(q, (float, complex)) else Fraction(1)
    for j in range(k):
        out *= 1 - y * q**j
    return out


def qpoch_many(ys: Sequence, q, k: int):
    out = Fraction(1)
    for y in ys:
        out *= qpoch(y, q, k)
    return out


def qpoch_inf(y: complex, q: float, M: int) -> complex:
    """``(y; q)_inf`` truncated after ``M`` factors."""
    if not abs(q) < 1:
        raise ValueError("infinite q-Pochhammer needs |q| < 1")
    out = 1.0 + 0j
    power = 1.0
    for _ in range(M):
        out *= 1 - y * power
        power *= q
    return out


# ---------------------------------------------------------------- C and K


def C_eval(point: Sequence[Fraction], mult: MultiplicityData, p: ParamSet) -> Fraction:
    """Product of ``v_alpha(point)`` over the negative finite roots."""
    out = Fraction(1)
    for alpha in positive_roots(len(point)):
        out *= v_eval(AffineRoot(tuple(-a for a in alpha)), point, mult, p)
    return out


def K_const(p: ParamSet, n: int) -> Fraction:
    return C_eval(inverse_point(x0(p, n)), p.mult, p)


def K_orbit_sum(lam: Sequence[int], p: ParamSet) -> Fraction:
    """``sum over minimal coset representatives w of C(x_{w lam}^-1)``."""
    dual = p.dual()
    return sum(
        (C_eval(inverse_point(gamma(mu, dual)), p.mult, p) for mu in orbit(tuple(lam))),
        Fraction(0),
    )


def weyl_average_C(y: Sequence[Fraction], p: ParamSet) -> Fraction:
    """``sum_w (w C)(y)``, which is the constant ``K`` for every ``y``."""
    total = Fraction(0)
    for w in weyl_group(len(y)):
        winv = w.inverse()
        # (w C)(y) = C(w^-1 y) with w acting on coordinates through the signed permutation
        image = [None] * len(y)
        for i, (pos, s) in enumerate(zip(winv.perm, winv.signs)):
            image[pos] = y[i] ** s
        total += C_eval(tuple(image), p.mult, p)
    return total


# ---------------------------------------------------------------- norm ratios


def norm_ratio_sym(lam: Sequence[int], p: ParamSet) -> Fraction:
    """``<E+, E+>_+ / <1, 1>_+`` as an explicit product."""
    lam = tuple(lam)
    if not is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")
    n = len(lam)
    a, b, c, d = p.abcd
    q, t = p.q, p.t
    abcd = a * b * c * d
    out = Fraction(1)
    for i in range(1, n + 1):
        k = lam[i - 1]
        s2 = t ** (2 * (n - i))
        s4 = t ** (4 * (n - i))
        out *= qpoch(abcd * s4 / q, q, 2 * k) * (c * c * s4) ** k / qpoch(abcd * s4, q, 2 * k)
        out *= qpoch_many((q * s2, a * b * s2, a * d * s2, b * d * s2), q, k)
        out /= qpoch_many((a * c * s2, b * c * s2, c * d * s2, abcd * s2 / q), q, k)
    for i, j in combinations(range(1, n + 1), 2):
        plus = lam[i - 1] + lam[j - 1]
        minus = lam[i - 1] - lam[j - 1]
        out *= qpoch(abcd * t ** (2 * (2 * n - i - j - 1)), q, plus)
        out *= qpoch(abcd * t ** (2 * (2 * n - i - j)) / q, q, plus)
        out /= qpoch(abcd * t ** (2 * (2 * n - i - j)), q, plus)
        out /= qpoch(abcd * t ** (2 * (2 * n - i - j + 1)) / q, q, plus)
        out *= qpoch(q * t ** (2 * (j - i - 1)), q, minus) * qpoch(t ** (2 * (j - i)), q, minus)
        out /= qpoch(q * t ** (2 * (j - i)), q, minus) * qpoch(t ** (2 * (j - i + 1)), q, minus)
    return out


def norm_ratio_ns(lam: Sequence[int], p: ParamSet) -> Fraction:
    """``<E, E'>/<1, 1>``: ratio of discrete weights at ``gamma_0^-1`` and ``gamma_lam^-1``."""
    lam = tuple(lam)
    n = len(lam)
    dual = p.mult.dual()
    origin = C_eval(inverse_point(gamma((0,) * n, p)), dual, p)
    here = C_eval(inverse_point(gamma(lam, p)), dual, p)
    return origin / here * norm_ratio_sym(dominant(lam), p)


# ---------------------------------------------------------------- evaluation formulas


def t_affine(u: AffineWeylElement, mult: MultiplicityData) -> Fraction:
    out = Fraction(1)
    for i in reduced_word(u):
        out *= mult.simple(u.n, i)
    return out


def translation_product(lam_plus: Sequence[int], p: ParamSet, exclude=frozenset()) -> Fraction:
    """``t~_{tau(-lam)}^-1 * prod v~_beta(gamma_lam^-1)`` over the translation inversion set."""
    lam_plus = tuple(lam_plus)
    dual = p.mult.dual()
    point = inverse_point(gamma(lam_plus, p))
    out = 1 / t_affine(AffineWeylElement.translation(tuple(-a for a in lam_plus)), dual)
    for beta in inversion_set_translation(lam_plus):
        if beta not in exclude:
            out *= v_eval(beta, point, dual, p)
    return out


def eval_formula_ns(lam: Sequence[int], p: ParamSet) -> Fraction:
    """Predicted value of ``P_lam`` at ``x0^-1``."""
    lam = tuple(lam)
    w = w_lambda(lam)
    dual = p.mult.dual()
    tw = Fraction(1)
    for beta in inversion_set_finite(w):
        tw *= dual.of_root(beta)
    product = translation_product(dominant(lam), p, exclude=frozenset(inversion_set_finite(w)))
    return tw**2 * product / norm_ratio_ns(lam, p)


def eval_sym_roots(lam: Sequence[int], p: ParamSet) -> Fraction:
    """Symmetric evaluation at ``x0`` from the root-product form."""
    return translation_product(tuple(lam), p) / norm_ratio_sym(lam, p)


def eval_sym_pochhammer(lam: Sequence[int], p: ParamSet) -> Fraction:
    """Symmetric evaluation at ``x0`` from the explicit q-Pochhammer product."""
    lam = tuple(lam)
    n = len(lam)
    a, b, c, d = p.abcd
    q, t = p.q, p.t
    abcd = a * b * c * d
    out = Fraction(1)
    for i in range(1, n + 1):
        k = lam[i - 1]
        s2 = t ** (2 * (n - i))
        out *= qpoch_many((a * c * s2, b * c * s2, c * d * s2, abcd * s2 / q), q, k)
        out /= qpoch(abcd * t ** (4 * (n - i)) / q, q, 2 * k) * (c * s2) ** k
    for i, j in combinations(range(1, n + 1), 2):
        plus = lam[i - 1] + lam[j - 1]
        minus = lam[i - 1] - lam[j - 1]
        out *= qpoch(abcd * t ** (2 * (2 * n - i - j + 1)) / q, q, plus)
        out *= qpoch(t ** (2 * (j - i + 1)), q, minus)
        out /= qpoch(abcd * t ** (2 * (2 * n - i - j)) / q, q, plus)
        out /= qpoch(t ** (2 * (j - i)), q, minus)
    return out


def eval_formula_sym(lam: Sequence[int], p: ParamSet) -> Fraction:
    """Symmetric evaluation at ``x0``; both closed forms must agree."""
    lam = tuple(lam)
    if not is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")
    first = eval_sym_roots(lam, p)
    second = eval_sym_pochhammer(lam, p)
    if first != second:
        raise AssertionError(f"symmetric evaluation routes disagree at {lam}: {first} vs {second}")
    return first


# ---------------------------------------------------------------- Hecke coefficients


def xi_eta_at(i: int, point: Sequence[Fraction], lam_pairing_sign: int, p: ParamSet) -> tuple[Fraction, Fraction]:
    """``(xi_i, eta_i)`` at a spectral point; ``lam_pairing_sign`` is the sign of ``<lam, a_i>``."""
    from .rootsys import simple_root

    n = len(point)
    dual = p.mult.dual()
    a = simple_root(n, i)
    ti = dual.simple(n, i)
    xi = ti - v_eval(-a, point, dual, p) / ti
    if lam_pairing_sign < 0:
        return xi, ti
    return xi, v_eval(a, point, dual, p) * v_eval(-a, point, dual, p) / ti**3


# ---------------------------------------------------------------- constant term


def gustafson_ct(p: ParamSet, n: int, M: int = 40) -> float:
    """``<1, 1>_+ / |W|`` from Gustafson's product, truncated at ``M`` factors."""
    a, b, c, d = (float(v) for v in p.abcd)
    q, t = float(p.q), float(p.t)
    if not (abs(q) < 1 and abs(t) < 1 and max(abs(a), abs(b), abs(c), abs(d)) < 1):
        raise ValueError("constant term product needs |q|, |t|, |a|, |b|, |c|, |d| < 1")
    out = 1.0
    for j in range(1, n + 1):
        s = t ** (2 * (n - j))
        num = [t * t, t ** (2 * (2 * n - j - 1)) * a * b * c * d]
        den = [q, t ** (2 * (n - j + 1))] + [s * x * y for x, y in combinations((a, b, c, d), 2)]
        for y in num:
            out *= qpoch_inf(y, q, M).real
        for y in den:
            out /= qpoch_inf(y, q, M).real
    return out


def t_sigma(p: ParamSet, n: int) -> Fraction:
    return p.t ** (n * (n - 1)) * p.tn**n


def norm_relation_sides(lam: Sequence[int], p: ParamSet, M: int = 40) -> dict:
    """Both sides of the norm relation between degree ``lam`` and ``lam - kappa``."""
    lam = tuple(lam)
    if not is_regular_dominant(lam):
        raise ValueError(f"{lam} is not regular dominant")
    n = len(lam)
    shifted = p.qshift()
    lower = tuple(a - k for a, k in zip(lam, kappa(n)))
    size = 2**n * math.factorial(n)
    norm_here = size * gustafson_ct(p, n, M) * float(norm_ratio_sym(lam, p) * eval_formula_sym(lam, p) ** 2)
    norm_there = size * gustafson_ct(shifted, n, M) * float(
        norm_ratio_sym(lower, shifted) * eval_formula_sym(lower, shifted) ** 2
    )
    left = float(t_sigma(p, n) ** 2) * norm_here / norm_there
    dual = p.mult.dual()
    g = gamma(lam, p)
    right = Fraction(1)
    for alpha in positive_roots(n):
        beta = AffineRoot(alpha)
        right *= v_eval(beta, inverse_point(g), dual, p) / v_eval(beta, g, dual, p)
    return {"left": left, "right": right, "norm": norm_here, "shifted_norm": norm_there}


@dataclass
class NormRelation:
    lam: tuple
    left: float
    right: Fraction
    rel_error: float
    passed: bool
    detail: dict = field(default_factory=dict)


def norm_relation_check(lam: Sequence[int], p: ParamSet, tol_rel: float = 1e-6, M: int = 40) -> NormRelation:
    sides = norm_relation_sides(lam, p, M)
    right = float(sides["right"])
    err = abs(sides["left"] - right) / abs(right)
    return NormRelation(tuple(lam), sides["left"], sides["right"], err, err < tol_rel)
