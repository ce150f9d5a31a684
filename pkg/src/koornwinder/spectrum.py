"""Spectral points and the rational functions ``v_beta`` evaluated at them."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .params import ParamSet
from .rootsys import AffineRoot, MultiplicityData, halved, rho_vectors

Point = tuple[Fraction, ...]


class GenericityError(ArithmeticError):
    """The chosen parameters hit an exceptional (non-generic) configuration."""


def gamma(lam: Sequence[int], p: ParamSet) -> Point:
    """Joint eigenvalues of ``Y_1, ..., Y_n`` on the polynomial of degree ``lam``."""
    rho_m, rho_l = rho_vectors(tuple(lam))
    base = p.t0 * p.tn
    return tuple(base**rl * p.t**rm * p.q**k for rm, rl, k in zip(rho_m, rho_l, lam))


def x0(p: ParamSet, n: int) -> Point:
    """``gamma_0`` at the dual multiplicities."""
    return gamma((0,) * n, p.dual())


def inverse_point(point: Sequence[Fraction]) -> Point:
    return tuple(1 / v for v in point)


def point_power(point: Sequence[Fraction], e: Sequence[int]) -> Fraction:
    out = Fraction(1)
    for v, k in zip(point, e):
        if k:
            out *= v**k
    return out


def v_eval(beta: AffineRoot, point: Sequence[Fraction], mult: MultiplicityData, p: ParamSet) -> Fraction:
    """``v_beta(point)`` for the multiplicities ``mult`` (``q`` taken from ``p``)."""
    t_beta = mult.of_root(beta)
    half = halved(beta)
    denom = 1 - beta.value(point, p.qh)
    if denom == 0:
        raise GenericityError(f"v_{beta} has a pole at {tuple(str(v) for v in point)}")
    if half is None:
        return (1 - t_beta**2 * beta.value(point, p.qh)) / denom
    t_half = mult.of_root(half)
    xh = half.value(point, p.qh)
    return (1 - t_beta * t_half * xh) * (1 + t_beta / t_half * xh) / denom
