"""Numerical integration on the torus ``|x_i| = 1``.

The weights are products of truncated q-Pochhammer symbols.  Each is stored
as a list of :class:`Factor` records ``(coef * x^e; q)_M ** power`` and
evaluated with numpy on a whole grid at once.  Pairings use the trapezoid
rule on the ``N^n`` grid of roots of unity, which converges geometrically
because every pole of the integrand stays off an annulus around the torus.
Discrete weights are iterated residues, computed as nested trapezoid
integrals over small circles.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Iterable, Sequence

import numpy as np

from .closedforms import K_const, gustafson_ct, norm_ratio_ns, norm_ratio_sym
from .exactring import LaurentPoly
from .heckeops import random_poly, rep
from .params import ParamSet
from .polynomials import Check, normalize_E, normalize_Eplus
from .rootsys import dominant, is_dominant, positive_roots, w_lambda, weights_with_plus_sum, weyl_group
from .spectrum import GenericityError, gamma, inverse_point

POLE_TOL = 1e-13


@dataclass(frozen=True)
class GridSpec:
    """``N`` points per circle, ``M`` factors per infinite product."""

    N: int = 64
    M: int = 40

    def __post_init__(self):
        if self.N < 16 or self.N & (self.N - 1):
            raise ValueError("N must be a power of two, at least 16")
        if self.M < 20:
            raise ValueError("M must be at least 20")


def pole_modulus(p: ParamSet) -> float:
    """Largest modulus among the weight's poles inside the unit disc."""
    return max(max(abs(float(v)) for v in p.abcd), float(p.t) ** 2, float(p.q))


def auto_grid(p: ParamSet, target: float = 1e-12, M: int = 40, floor: int = 64) -> GridSpec:
    """Smallest power-of-two grid whose geometric trapezoid error is below ``target``."""
    rho = pole_modulus(p)
    if not rho < 1:
        raise ValueError("weight has poles on the torus")
    N = floor
    while rho**N > target:
        N *= 2
    return GridSpec(N, M)


@dataclass(frozen=True)
class Factor:
    coef: complex
    exponent: tuple[int, ...]
    power: int


def _unit(n: int, i: int, s: int = 1) -> tuple[int, ...]:
    e = [0] * n
    e[i] = s
    return tuple(e)


def _add(*vs: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(map(sum, zip(*vs)))


def delta_plus_factors(p: ParamSet, n: int) -> list[Factor]:
    """The W-invariant weight as a factor list."""
    a, b, c, d = (complex(v) for v in p.abcd)
    t2 = complex(p.t**2)
    out: list[Factor] = []
    for i, j in combinations(range(n), 2):
        for si, sj in product((1, -1), repeat=2):
            e = _add(_unit(n, i, si), _unit(n, j, sj))
            out += [Factor(1, e, 1), Factor(t2, e, -1)]
    for i in range(n):
        out += [Factor(1, _unit(n, i, 2), 1), Factor(1, _unit(n, i, -2), 1)]
        for s in (1, -1):
            out += [Factor(v, _unit(n, i, s), -1) for v in (a, b, c, d)]
    return out


def delta_factors(p: ParamSet, n: int) -> list[Factor]:
    """The non-symmetric weight, written without removable singularities."""
    a, b, c, d = (complex(v) for v in p.abcd)
    q = complex(p.q)
    t2 = complex(p.t**2)
    out: list[Factor] = []
    for i, j in combinations(range(n), 2):
        ei, ej = _unit(n, i), _unit(n, j)
        mi, mj = _unit(n, i, -1), _unit(n, j, -1)
        for coef, e in ((1, _add(ei, ej)), (1, _add(ei, mj)), (q, _add(mi, mj)), (q, _add(mi, ej))):
            out += [Factor(coef, e, 1), Factor(coef * t2, e, -1)]
    for i in range(n):
        out += [Factor(1, _unit(n, i, 2), 1), Factor(q, _unit(n, i, -2), 1)]
        out += [Factor(v, _unit(n, i), -1) for v in (a, b, c, d)]
        out += [Factor(v, _unit(n, i, -1), -1) for v in (a, b, q * c, q * d)]
    return out


def weight_factors(p: ParamSet, n: int, symmetric: bool) -> list[Factor]:
    return delta_plus_factors(p, n) if symmetric else delta_factors(p, n)


def eval_factors(factors: Sequence[Factor], points: np.ndarray, q: float, M: int) -> np.ndarray:
    """Evaluate a factor list at ``points`` of shape ``(P, n)``."""
    points = np.atleast_2d(np.asarray(points, dtype=complex))
    qpow = q ** np.arange(M)
    logs = np.log(points)
    out = np.ones(points.shape[0], dtype=complex)
    for f in factors:
        z = f.coef * np.exp(logs @ np.asarray(f.exponent, dtype=float))
        terms = 1 - z[:, None] * qpow[None, :]
        if f.power < 0 and np.min(np.abs(terms)) < POLE_TOL:
            raise GenericityError("weight evaluated on a pole")
        prod_ = np.prod(terms, axis=1)
        out = out * (prod_ if f.power > 0 else 1 / prod_)
    return out


def delta_plus(points, p: ParamSet, M: int = 40) -> np.ndarray:
    points = np.atleast_2d(np.asarray(points, dtype=complex))
    return eval_factors(delta_plus_factors(p, points.shape[1]), points, float(p.q), M)


def delta(points, p: ParamSet, M: int = 40) -> np.ndarray:
    points = np.atleast_2d(np.asarray(points, dtype=complex))
    return eval_factors(delta_factors(p, points.shape[1]), points, float(p.q), M)


def c_function(points, p: ParamSet) -> np.ndarray:
    """Product of ``v_alpha(x)`` over the negative finite roots, in floating point."""
    points = np.atleast_2d(np.asarray(points, dtype=complex))
    n = points.shape[1]
    t2, c, d = complex(p.t**2), complex(p.abcd[2]), complex(p.abcd[3])
    out = np.ones(points.shape[0], dtype=complex)
    for alpha in positive_roots(n):
        neg = -np.asarray(alpha, dtype=float)
        xa = np.prod(points**neg, axis=1)
        if max(abs(a) for a in alpha) == 2:
            xh = np.prod(points ** (neg / 2), axis=1)
            out *= (1 - c * xh) * (1 - d * xh) / (1 - xa)
        else:
            out *= (1 - t2 * xa) / (1 - xa)
    return out


def torus_grid(n: int, N: int) -> np.ndarray:
    theta = 2 * np.pi * np.arange(N) / N
    circle = np.exp(1j * theta)
    mesh = np.meshgrid(*([circle] * n), indexing="ij")
    return np.stack([m.ravel() for m in mesh], axis=1)


# ---------------------------------------------------------------- pairings


class Pairing:
    """Trapezoid-rule bilinear form ``mean f(x) g(1/x) weight(x)`` on a fixed grid."""

    def __init__(self, p: ParamSet, n: int, grid: GridSpec = GridSpec(), symmetric: bool = False):
        p.check_quadrature()
        self.p, self.n, self.grid, self.symmetric = p, n, grid, symmetric
        self.points = torus_grid(n, grid.N)
        self.weight = eval_factors(weight_factors(p, n, symmetric), self.points, float(p.q), grid.M)
        self._values: dict = {}

    def values(self, f: LaurentPoly, inverted: bool = False) -> np.ndarray:
        key = (f, inverted)
        if key not in self._values:
            pts = 1 / self.points if inverted else self.points
            self._values[key] = f.eval_numeric(pts)
        return self._values[key]

    def __call__(self, f: LaurentPoly, g: LaurentPoly) -> complex:
        return complex(np.mean(self.values(f) * self.values(g, inverted=True) * self.weight))


_PAIRINGS: dict = {}


def pairing_for(p: ParamSet, n: int, grid: GridSpec, symmetric: bool) -> Pairing:
    key = (p, n, grid, symmetric)
    if key not in _PAIRINGS:
        _PAIRINGS[key] = Pairing(p, n, grid, symmetric)
    return _PAIRINGS[key]


def pairing(f: LaurentPoly, g: LaurentPoly, p: ParamSet, grid: GridSpec = GridSpec(), symmetric: bool = False) -> complex:
    return pairing_for(p, f.n, grid, symmetric)(f, g)


def _rel(observed: complex, expected: complex) -> float:
    return abs(observed - expected) / abs(expected)


def as_json_number(z: complex) -> float | list[float]:
    z = complex(z)
    return z.real if abs(z.imag) < 1e-300 else [z.real, z.imag]


# ---------------------------------------------------------------- checks


def biorthogonality_check(
    lams: Sequence[Sequence[int]],
    p: ParamSet,
    grid: GridSpec = GridSpec(),
    tol_abs: float = 1e-8,
    tol_rel: float = 1e-6,
) -> list[Check]:
    """Off-diagonal vanishing and diagonal norms for the non-symmetric pairing."""
    lams = [tuple(l) for l in lams]
    n = len(lams[0])
    form = pairing_for(p, n, grid, symmetric=False)
    one = LaurentPoly.const(n, 1)
    unit = form(one, one)
    inv = p.inverse()
    E = {lam: normalize_E(lam, p).poly for lam in lams}
    Ep = {lam: normalize_E(lam, inv).poly for lam in lams}
    checks = []
    worst = 0.0
    for lam in lams:
        for mu in lams:
            value = form(E[lam], Ep[mu])
            if lam != mu:
                worst = max(worst, abs(value) / abs(unit))
                continue
            expected = norm_ratio_ns(lam, p)
            err = _rel(value / unit, float(expected))
            checks.append(Check(f"nonsymmetric norm {lam}", err < tol_rel,
                                {"observed": as_json_number(value / unit), "expected": float(expected),
                                 "rel_error": err, "tol": tol_rel}))
    checks.insert(0, Check("bi-orthogonality off-diagonal", worst < tol_abs,
                           {"max_scaled_abs": worst, "tol": tol_abs, "weights": [list(l) for l in lams]}))
    return checks


def orthogonality_check(
    lams: Sequence[Sequence[int]],
    p: ParamSet,
    grid: GridSpec = GridSpec(),
    tol_abs: float = 1e-8,
    tol_rel: float = 1e-6,
) -> list[Check]:
    """The symmetric analogue over the dominant weights in ``lams``."""
    lams = sorted({dominant(l) for l in lams})
    n = len(lams[0])
    form = pairing_for(p, n, grid, symmetric=True)
    one = LaurentPoly.const(n, 1)
    unit = form(one, one)
    E = {lam: normalize_Eplus(lam, p).poly for lam in lams}
    checks = []
    worst = 0.0
    for lam, mu in product(lams, repeat=2):
        value = form(E[lam], E[mu])
        if lam != mu:
            worst = max(worst, abs(value) / abs(unit))
            continue
        expected = norm_ratio_sym(lam, p)
        err = _rel(value / unit, float(expected))
        checks.append(Check(f"symmetric norm {lam}", err < tol_rel,
                            {"observed": as_json_number(value / unit), "expected": float(expected),
                             "rel_error": err, "tol": tol_rel}))
    checks.insert(0, Check("orthogonality off-diagonal", worst < tol_abs,
                           {"max_scaled_abs": worst, "tol": tol_abs, "weights": [list(l) for l in lams]}))
    return checks


def constant_term_check(p: ParamSet, n: int, grid: GridSpec = GridSpec(), tol_rel: float = 1e-8) -> Check:
    one = LaurentPoly.const(n, 1)
    size = len(weyl_group(n))
    observed = pairing(one, one, p, grid, symmetric=True) / size
    expected = gustafson_ct(p, n, grid.M)
    err = _rel(observed, expected)
    return Check("constant term", err < tol_rel,
                 {"observed": as_json_number(observed), "expected": expected, "rel_error": err, "tol": tol_rel,
                  "N": grid.N, "M": grid.M})


def _random_invariant(n: int, rng: random.Random) -> LaurentPoly:
    from .polynomials import monomial_symmetric

    out = LaurentPoly.zero(n)
    for lam in weights_with_plus_sum(n, 2):
        if is_dominant(lam) and rng.random() < 0.6:
            out = out + monomial_symmetric(lam).scale(Fraction(rng.randint(-3, 3), rng.randint(1, 3)))
    return out + LaurentPoly.const(n, 1)


def symmetric_reduction_check(
    p: ParamSet, n: int, grid: GridSpec = GridSpec(), trials: int = 5, seed: int = 0, tol_rel: float = 1e-8
) -> list[Check]:
    """``<f, g> = (K/|W|) <f, g>_+`` for invariant ``f, g``, and the value of ``K``."""
    rng = random.Random(seed)
    K = float(K_const(p, n))
    size = len(weyl_group(n))
    full = pairing_for(p, n, grid, symmetric=False)
    plus = pairing_for(p, n, grid, symmetric=True)
    one = LaurentPoly.const(n, 1)
    ratio = full(one, one) * size / plus(one, one)
    k_err = _rel(ratio, K)
    checks = [Check("symmetric reduction constant", k_err < 1e-10,
                    {"observed": as_json_number(ratio), "expected": K, "rel_error": k_err, "tol": 1e-10})]
    worst = 0.0
    for _ in range(trials):
        f, g = _random_invariant(n, rng), _random_invariant(n, rng)
        lhs = full(f, g)
        rhs = K / size * plus(f, g)
        worst = max(worst, abs(lhs - rhs) / max(abs(rhs), abs(full(one, one))))
    checks.append(Check("symmetric reduction on invariants", worst < tol_rel,
                        {"max_rel_error": worst, "tol": tol_rel, "trials": trials}))
    return checks


def weight_identity_check(p: ParamSet, n: int, samples: int = 20, seed: int = 0, M: int = 40) -> list[Check]:
    """Pointwise factorisation of the weight and the Weyl sum of the c-function."""
    rng = np.random.default_rng(seed)
    pts = np.exp(2j * np.pi * rng.random((8 * samples, n)))
    # keep away from the walls x^alpha = 1 where the c-function is singular
    wall = np.min([np.abs(1 - np.prod(pts ** np.asarray(a, dtype=float), axis=1)) for a in positive_roots(n)], axis=0)
    pts = pts[wall > 0.3][:samples]
    lhs = delta(pts, p, M)
    rhs = c_function(pts, p) * delta_plus(pts, p, M)
    factor_err = float(np.max(np.abs(lhs - rhs) / np.abs(rhs)))
    K = float(K_const(p, n))
    total = np.zeros(samples, dtype=complex)
    for w in weyl_group(n):
        winv = w.inverse()
        image = np.empty_like(pts)
        for i, (pos, s) in enumerate(zip(winv.perm, winv.signs)):
            image[:, pos] = pts[:, i] ** s
        total += c_function(image, p)
    sum_err = float(np.max(np.abs(total - K)))
    return [
        Check("weight factorisation", factor_err < 1e-12, {"max_rel_error": factor_err, "tol": 1e-12}),
        Check("Weyl sum of c-function", sum_err < 1e-12, {"max_abs_error": sum_err, "tol": 1e-12, "K": K}),
    ]


def adjoint_check(
    i: int, p: ParamSet, n: int, grid: GridSpec = GridSpec(), trials: int = 3, seed: int = 0, tol_abs: float = 1e-8
) -> Check:
    """``<T_i f, g> = <f, (T_i')^-1 g>`` with ``T_i'`` at inverse parameters."""
    rng = random.Random(seed * 97 + i)
    R, Rp = rep(n, p), rep(n, p.inverse())
    form = pairing_for(p, n, grid, symmetric=False)
    one = LaurentPoly.const(n, 1)
    unit = abs(form(one, one))
    worst = 0.0
    for _ in range(trials):
        f = random_poly(n, rng, degree=2, terms=4)
        g = random_poly(n, rng, degree=2, terms=4)
        diff = form(R.T(i, f), g) - form(f, Rp.Tinv(i, g))
        worst = max(worst, abs(diff) / unit)
    return Check(f"adjointness T_{i}", worst < tol_abs, {"max_scaled_abs": worst, "tol": tol_abs, "trials": trials})


def convergence_check(p: ParamSet, n: int, lams: Sequence[Sequence[int]], grid: GridSpec = GridSpec(),
                      tol_rel: float = 1e-9) -> Check:
    """Change of diagonal pairings from ``N`` to ``2N``."""
    fine = GridSpec(2 * grid.N, grid.M)
    inv = p.inverse()
    worst = 0.0
    for lam in lams:
        lam = tuple(lam)
        E, Ep = normalize_E(lam, p).poly, normalize_E(lam, inv).poly
        a = pairing(E, Ep, p, grid)
        b = pairing(E, Ep, p, fine)
        worst = max(worst, _rel(a, b))
    return Check("grid refinement", worst < tol_rel, {"max_rel_change": worst, "tol": tol_rel,
                                                       "N": [grid.N, fine.N]})


# ---------------------------------------------------------------- residues


def _candidate_singularities(factors: Sequence[Factor], k: int, point: Sequence[complex], q: float, M: int):
    """Zeros of every factor as a function of ``x_k`` with the other coordinates at ``point``."""
    for f in factors:
        ek = f.exponent[k]
        if ek == 0:
            continue
        rest = f.coef
        for l, e in enumerate(f.exponent):
            if l != k and e:
                rest *= point[l] ** e
        for j in range(M):
            target = 1 / (rest * q**j)
            root = target ** (1 / ek)
            for r in range(abs(ek)):
                yield root * np.exp(2j * np.pi * r / abs(ek))


def residue_radii(factors, pole: Sequence[complex], order: Sequence[int], q: float, M: int) -> list[float]:
    """Circle radii for the nested contours, outermost variable first in ``order``.

    Each circle is half the distance to the nearest other singularity; an
    inner circle is also at most half as wide, relative to its centre, as the
    one around it, so poles that move with outer variables stay outside.
    """
    radii = [0.0] * len(pole)
    previous = math.inf
    for k in order:
        centre = pole[k]
        gaps = [abs(z - centre) for z in _candidate_singularities(factors, k, pole, q, M)]
        gaps = [g for g in gaps if g > 1e-10 * abs(centre)]
        if not gaps:
            raise GenericityError("no isolating circle found")
        relative = min(0.5 * min(gaps) / abs(centre), 0.5 * previous)
        if relative * abs(centre) < POLE_TOL:
            raise GenericityError(f"residue contour around x_{k + 1} = {centre} would hit a pole")
        radii[k] = relative * abs(centre)
        previous = relative
    return radii


def iterated_residue(factors, pole: Sequence[complex], order: Sequence[int], p: ParamSet, grid: GridSpec) -> complex:
    """Iterated residue of ``weight(x) / (x_1 ... x_n)`` at ``pole`` (outermost first in ``order``)."""
    n = len(pole)
    q = float(p.q)
    radii = residue_radii(factors, pole, order, q, grid.M)
    circle = np.exp(2j * np.pi * np.arange(grid.N) / grid.N)
    axes = [pole[k] + radii[k] * circle for k in range(n)]
    mesh = np.meshgrid(*axes, indexing="ij")
    pts = np.stack([m.ravel() for m in mesh], axis=1)
    values = eval_factors(factors, pts, q, grid.M) / np.prod(pts, axis=1)
    offsets = np.prod(pts - np.asarray(pole)[None, :], axis=1)
    return complex(np.mean(values * offsets))


def residue_weight(lam: Sequence[int], p: ParamSet, grid: GridSpec = GridSpec(), symmetric: bool = False) -> complex:
    """Discrete weight at ``gamma_lam^-1`` from multiple residues of the dual weight.

    With ``symmetric`` the weight is the invariant one and ``lam`` must be
    dominant; otherwise the residues are taken in the order given by the
    permutation part of the shortest ``w`` with ``w(lam+) = lam`` and signed
    by the number of negative entries of ``lam``.
    """
    lam = tuple(lam)
    n = len(lam)
    dual = p.dual()
    pole = [complex(v) for v in inverse_point(gamma(lam, p))]
    if symmetric:
        if not is_dominant(lam):
            raise ValueError(f"{lam} is not dominant")
        return iterated_residue(delta_plus_factors(dual, n), pole, range(n), p, grid)
    order = w_lambda(lam).perm
    sign = (-1) ** sum(1 for a in lam if a < 0)
    return sign * iterated_residue(delta_factors(dual, n), pole, order, p, grid)


def residue_check(lams: Iterable[Sequence[int]], p: ParamSet, grid: GridSpec = GridSpec(), tol_rel: float = 1e-6) -> list[Check]:
    """Numeric residues against the explicit products."""
    from .closedforms import C_eval

    lams = [tuple(l) for l in lams]
    n = len(lams[0])
    zero = (0,) * n
    w0_plus = residue_weight(zero, p, grid, symmetric=True)
    w0 = residue_weight(zero, p, grid)
    checks = []
    plus = {}
    for lp in sorted({dominant(l) for l in lams}):
        plus[lp] = wp = residue_weight(lp, p, grid, symmetric=True)
        expected = float(norm_ratio_sym(lp, p))
        err = _rel(w0_plus / wp, expected)
        checks.append(Check(f"symmetric residue ratio {lp}", err < tol_rel,
                            {"observed": as_json_number(w0_plus / wp), "expected": expected, "rel_error": err, "tol": tol_rel}))
    for lam in lams:
        wp = plus[dominant(lam)]
        w = residue_weight(lam, p, grid)
        expected = float(C_eval(inverse_point(gamma(lam, p)), p.mult.dual(), p))
        err = _rel(w / wp, expected)
        checks.append(Check(f"non-symmetric over symmetric residue {lam}", err < tol_rel,
                            {"observed": as_json_number(w / wp), "expected": expected, "rel_error": err, "tol": tol_rel}))
        expected = float(norm_ratio_ns(lam, p))
        err = _rel(w0 / w, expected)
        checks.append(Check(f"non-symmetric residue ratio {lam}", err < tol_rel,
                            {"observed": as_json_number(w0 / w), "expected": expected, "rel_error": err, "tol": tol_rel}))
    return checks


def shifted_residue_check(p: ParamSet, n: int, grid: GridSpec = GridSpec(), tol_rel: float = 1e-6) -> Check:
    """Moving the first residue of the origin from ``gamma^-e1`` to ``q gamma^e1``.

    The result, with its sign reversed, must be the weight at ``s_0.0``,
    here computed from the invariant weight and the c-function instead.
    """
    from .closedforms import C_eval

    zero = (0,) * n
    lam = (-1,) + (0,) * (n - 1)  # s_0 . 0
    dual = p.dual()
    base = [complex(v) for v in inverse_point(gamma(zero, p))]
    shifted = [complex(p.q) / base[0]] + base[1:]
    route_shift = -iterated_residue(delta_factors(dual, n), shifted, w_lambda(zero).perm, p, grid)
    c_value = float(C_eval(inverse_point(gamma(lam, p)), p.mult.dual(), p))
    route_plus = c_value * residue_weight(dominant(lam), p, grid, symmetric=True)
    err = _rel(route_shift, route_plus)
    return Check("shifted residue contour", err < tol_rel,
                 {"observed": as_json_number(route_shift), "expected": as_json_number(route_plus), "rel_error": err, "tol": tol_rel})


# ---------------------------------------------------------------- transform


def transform_roundtrip(
    lams: Sequence[Sequence[int]], p: ParamSet, grid: GridSpec = GridSpec(), tol_rel: float = 1e-6
) -> list[Check]:
    """Apply the discrete inverse transform to the torus transform of each ``E_lam``.

    The support of the discrete sum is ``lams``; the result must be
    ``k E_lam`` coefficientwise, where ``k`` is cross-checked against the
    symmetric constant term and the symmetric residue at the origin.
    """
    lams = [tuple(l) for l in lams]
    n = len(lams[0])
    size = len(weyl_group(n))
    one = LaurentPoly.const(n, 1)
    unit = pairing(one, one, p, grid)
    unit_plus = pairing(one, one, p, grid, symmetric=True)
    zero = (0,) * n
    k = residue_weight(zero, p, grid) * unit
    k_chain = (float(K_const(p, n) * K_const(p.dual(), n)) / size) * unit_plus * residue_weight(zero, p, grid, symmetric=True)
    k_err = _rel(k, k_chain)
    checks = [Check("transform constant", k_err < tol_rel,
                    {"observed": as_json_number(k), "expected": as_json_number(k_chain), "rel_error": k_err, "tol": tol_rel})]
    inv = p.inverse()
    E = {mu: normalize_E(mu, p).poly for mu in lams}
    Ep = {mu: normalize_E(mu, inv).poly for mu in lams}
    weights = {mu: residue_weight(mu, p, grid) for mu in lams}
    for lam in lams:
        acc: dict = {}
        for mu in lams:
            coef = pairing(E[lam], Ep[mu], p, grid) * weights[mu]
            for e, c in E[mu].items():
                acc[e] = acc.get(e, 0) + coef * float(c)
        target = {e: k * float(c) for e, c in E[lam].items()}
        scale = max(abs(v) for v in target.values())
        err = max(abs(acc.get(e, 0) - target.get(e, 0)) for e in set(acc) | set(target)) / scale
        checks.append(Check(f"roundtrip {lam}", err < tol_rel, {"max_rel_coeff_error": err, "tol": tol_rel}))
    return checks


def roundtrip_support(n: int, top: Sequence[int]) -> list[tuple[int, ...]]:
    """All weights whose dominant representative lies at or below ``top``."""
    from .rootsys import leq

    top = tuple(top)
    return [lam for lam in weights_with_plus_sum(n, sum(top)) if leq(dominant(lam), top)]
