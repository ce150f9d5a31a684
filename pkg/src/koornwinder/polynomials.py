"""Non-symmetric, symmetric and anti-symmetric Koornwinder polynomials,
obtained as exact eigenvectors of triangular operators, and the identity
checks relating them (Hecke action, duality, character formula).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .exactring import LaurentPoly, poly_sum
from .heckeops import NoumiRep, rep, tv_factor
from .params import ParamSet
from .rootsys import (
    AffineRoot,
    AffineWeylElement,
    SignedPermutation,
    dominant,
    dominant_below,
    downset,
    is_dominant,
    is_positive_grad,
    is_regular_dominant,
    kappa,
    orbit,
    pairing,
    positive_roots,
    preceq,
    simple_root,
    w_lambda,
)
from .spectrum import GenericityError, gamma, inverse_point, v_eval, x0

__all__ = [
    "GenericityError",
    "KoornPoly",
    "gamma",
    "x0",
    "compute_ns",
    "compute_sym",
    "compute_antisym",
    "normalize_E",
    "normalize_Eplus",
]


@dataclass(frozen=True)
class KoornPoly:
    degree: tuple[int, ...]
    kind: str
    poly: LaurentPoly
    params: ParamSet
    info: dict = field(default_factory=dict, compare=False)

    def to_json_obj(self) -> dict:
        return {
            "degree": list(self.degree),
            "kind": self.kind,
            "params": self.params.to_json_obj(),
            "poly": str(self.poly),
            "terms": self.poly.to_json_obj()["terms"],
            **self.info,
        }


def _fmt(point) -> str:
    return "(" + ", ".join(str(v) for v in point) + ")"


def monomial_symmetric(mu: Sequence[int]) -> LaurentPoly:
    n = len(mu)
    return LaurentPoly(n, {nu: 1 for nu in orbit(tuple(mu))})


# ---------------------------------------------------------------- non-symmetric


def y_matrix_columns(R: NoumiRep, basis: Sequence[tuple[int, ...]], i: int) -> list[LaurentPoly]:
    return [R.Y(i, LaurentPoly.monomial(mu)) for mu in basis]


@lru_cache(maxsize=None)
def compute_ns(lam: tuple[int, ...], p: ParamSet) -> KoornPoly:
    """Monic joint eigenfunction of ``Y_1..Y_n`` supported on the downset of ``lam``.

    Each ``Y_i`` is upper triangular on the downset in linear-extension
    order, so the stacked kernel is found by back substitution starting from
    ``c_lam = 1``.  Every row other than ``lam`` has some ``i`` whose diagonal
    entry differs from the target eigenvalue, which pins the kernel to
    dimension one; the candidate is then checked against all ``n`` operators.
    """
    lam = tuple(lam)
    n = len(lam)
    R = rep(n, p)
    basis = downset(lam)
    index = {mu: k for k, mu in enumerate(basis)}
    target = gamma(lam, p)
    spectra = [gamma(mu, p) for mu in basis]
    seen: dict = {}
    for mu, g in zip(basis, spectra):
        if g in seen:
            raise GenericityError(f"spectral collision: gamma{seen[g]} = gamma{mu} = {_fmt(g)}")
        seen[g] = mu

    columns = [y_matrix_columns(R, basis, i) for i in range(1, n + 1)]
    for i, cols in enumerate(columns):
        for mu, col in zip(basis, cols):
            for nu in col.terms:
                if nu not in index or index[nu] > index[mu]:
                    raise AssertionError(f"Y_{i + 1} x^{mu} is not triangular (term x^{nu})")
            if col.coeff(mu) != spectra[index[mu]][i]:
                raise AssertionError(f"diagonal of Y_{i + 1} at {mu} differs from gamma")

    # rows[i][nu] = list of (mu, entry) with mu above nu
    rows = [dict() for _ in range(n)]
    for i, cols in enumerate(columns):
        for mu, col in zip(basis, cols):
            for nu, c in col.items():
                if nu != mu:
                    rows[i].setdefault(nu, []).append((mu, c))

    coeffs: dict[tuple[int, ...], Fraction] = {lam: Fraction(1)}
    for k in range(len(basis) - 2, -1, -1):
        nu = basis[k]
        g = spectra[k]
        i = next(j for j in range(n) if g[j] != target[j])
        rhs = sum((c * coeffs.get(mu, 0) for mu, c in rows[i].get(nu, ())), Fraction(0))
        value = rhs / (target[i] - g[i])
        if value:
            coeffs[nu] = value
    poly = LaurentPoly.from_dict(n, coeffs)
    for i in range(1, n + 1):
        if R.Y(i, poly) != poly.scale(target[i - 1]):
            raise GenericityError(f"joint kernel for {lam} is trivial: Y_{i} residual is nonzero")
    return KoornPoly(lam, "nonsym", poly, p, {"kernel_dim": 1, "basis_size": len(basis)})


def check_eigen(kp: KoornPoly) -> bool:
    R = rep(len(kp.degree), kp.params)
    g = gamma(kp.degree, kp.params)
    return all(R.Y(i, kp.poly) == kp.poly.scale(g[i - 1]) for i in range(1, len(g) + 1))


# ---------------------------------------------------------------- symmetric


@lru_cache(maxsize=None)
def compute_sym(lam: tuple[int, ...], p: ParamSet, cross_check: bool = False) -> KoornPoly:
    """Symmetric eigenfunction of ``L``, monic in the monomial symmetric basis."""
    lam = tuple(lam)
    if not is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")
    n = len(lam)
    R = rep(n, p)
    g0 = gamma((0,) * n, p)
    base = R.m_eps1(g0)
    basis = dominant_below(lam)
    energies = {mu: R.m_eps1(gamma(mu, p)) - base for mu in basis}
    target = energies[lam]
    for mu in basis:
        if mu != lam and energies[mu] == target:
            raise GenericityError(f"eigenvalue collision between {mu} and {lam} for L")
    images = {mu: R.L_sym(monomial_symmetric(mu), g0) for mu in basis}
    coeffs = {lam: Fraction(1)}
    order = sorted(basis, key=lambda mu: (sum(mu), mu), reverse=True)
    for nu in order:
        if nu == lam:
            continue
        rhs = sum((images[mu].coeff(nu) * c for mu, c in coeffs.items()), Fraction(0))
        value = rhs / (target - energies[nu])
        if value:
            coeffs[nu] = value
    poly = poly_sum((monomial_symmetric(mu).scale(c) for mu, c in coeffs.items()), n)
    if R.L_sym(poly, g0) != poly.scale(target):
        raise AssertionError(f"symmetric solve for {lam} failed its eigen-check")
    info = {"eigenvalue": str(target)}
    if cross_check:
        projected = R.C(1, compute_ns(lam, p).poly)
        lead = projected.coeff(lam)
        if lead == 0 or projected.scale(1 / lead) != poly:
            raise AssertionError(f"C+ P_{lam} is not proportional to the symmetric polynomial")
        info["idempotent_route"] = "agrees"
    return KoornPoly(lam, "sym", poly, p, info)


# ---------------------------------------------------------------- expansions over P_mu


def t_finite(w: SignedPermutation, p: ParamSet) -> Fraction:
    """``t_w`` for finite ``w`` as the product over its inversion set."""
    out = Fraction(1)
    for alpha in positive_roots(w.n):
        if not is_positive_grad(w.apply(alpha)):
            out *= p.mult.of_root(AffineRoot(alpha))
    return out


def expansion_coefficient(lam, mu, sign: int, p: ParamSet, route: int = 1) -> Fraction:
    """Coefficient of ``P_mu`` in the (anti-)symmetric polynomial of degree ``lam``.

    ``route=1`` uses the product over roots negative on ``mu`` at ``gamma_mu``;
    ``route=2`` the inversion set of ``w_mu`` at ``gamma_lam^-1``.
    """
    dual = p.mult.dual()
    w = w_lambda(tuple(mu))
    out = Fraction(sign) ** w.length() / t_finite(w, p) ** 2
    if route == 1:
        point = gamma(mu, p)
        for alpha in positive_roots(len(mu)):
            if pairing(mu, alpha) < 0:
                grad = alpha if sign > 0 else tuple(-a for a in alpha)
                out *= v_eval(AffineRoot(grad), point, dual, p)
    else:
        point = inverse_point(gamma(lam, p))
        for alpha in positive_roots(len(mu)):
            if not is_positive_grad(w.apply(alpha)):
                grad = alpha if sign > 0 else tuple(-a for a in alpha)
                out *= v_eval(AffineRoot(grad), point, dual, p)
    return out


def expansion(lam, sign: int, p: ParamSet) -> LaurentPoly:
    n = len(lam)
    return poly_sum(
        (compute_ns(mu, p).poly.scale(expansion_coefficient(lam, mu, sign, p)) for mu in orbit(tuple(lam))), n
    )


# ---------------------------------------------------------------- anti-symmetric


@lru_cache(maxsize=None)
def compute_antisym(lam: tuple[int, ...], p: ParamSet) -> KoornPoly:
    """Monic anti-symmetric polynomial, from ``C_-`` applied to ``P_{-lam}``."""
    lam = tuple(lam)
    if not is_regular_dominant(lam):
        raise ValueError(f"{lam} is not regular dominant; the alternating part of its module is zero")
    n = len(lam)
    R = rep(n, p)
    projected = R.C(-1, compute_ns(tuple(-a for a in lam), p).poly)
    lead = projected.coeff(lam)
    if lead == 0:
        raise GenericityError(f"C- P_{tuple(-a for a in lam)} has no x^{lam} term")
    poly = projected.scale(1 / lead)
    if expansion(lam, -1, p) != poly:
        raise AssertionError(f"the two anti-symmetric routes disagree at {lam}")
    return KoornPoly(lam, "antisym", poly, p, {"expansion_route": "agrees"})


# ---------------------------------------------------------------- normalisations


def normalize_E(lam, p: ParamSet) -> KoornPoly:
    lam = tuple(lam)
    P = compute_ns(lam, p).poly
    value = P.eval_at(inverse_point(x0(p, len(lam))))
    if value == 0:
        raise GenericityError(f"P_{lam} vanishes at x0^-1")
    return KoornPoly(lam, "E", P.scale(1 / value), p, {"normaliser": str(value)})


def normalize_Eplus(lam, p: ParamSet) -> KoornPoly:
    lam = tuple(lam)
    P = compute_sym(lam, p).poly
    value = P.eval_at(x0(p, len(lam)))
    if value == 0:
        raise GenericityError(f"P+_{lam} vanishes at x0")
    return KoornPoly(lam, "Eplus", P.scale(1 / value), p, {"normaliser": str(value)})


# ---------------------------------------------------------------- identity checks


@dataclass
class Check:
    name: str
    passed: bool
    detail: dict = field(default_factory=dict)

    def to_json_obj(self) -> dict:
        return {"check": self.name, "pass": self.passed, **self.detail}


def xi_eta(i: int, lam: Sequence[int], p: ParamSet) -> tuple[Fraction, Fraction]:
    """Coefficients of ``P_lam`` and ``P_{s_i lam}`` in ``T_i P_lam``."""
    n = len(lam)
    dual = p.mult.dual()
    g = gamma(lam, p)
    a = simple_root(n, i)
    ti = dual.simple(n, i)
    xi = ti - v_eval(-a, g, dual, p) / ti
    if pairing(lam, a.grad) < 0:
        eta = ti
    else:
        eta = v_eval(a, g, dual, p) * v_eval(-a, g, dual, p) / ti**3
    return xi, eta


def reflect(i: int, lam: Sequence[int]) -> tuple[int, ...]:
    return AffineWeylElement.simple(len(lam), i).dot(lam)


def check_Ti_action(lam, i: int, p: ParamSet) -> Check:
    lam = tuple(lam)
    R = rep(len(lam), p)
    P = compute_ns(lam, p).poly
    xi, eta = xi_eta(i, lam, p)
    mirrored = reflect(i, lam)
    lhs = R.T(i, P)
    if mirrored == lam:
        ok = lhs == P.scale(R.t[i]) and xi + eta == R.t[i]
    else:
        ok = lhs == P.scale(xi) + compute_ns(mirrored, p).poly.scale(eta)
    return Check(f"T{i} on P{lam}", ok, {"xi": str(xi), "eta": str(eta)})


def check_intertwiner(lam, i: int, p: ParamSet) -> Check:
    lam = tuple(lam)
    n = len(lam)
    R = rep(n, p)
    mirrored = reflect(i, lam)
    a = simple_root(n, i)
    _, eta = xi_eta(i, lam, p)
    factor = (a.value(gamma(lam, p), p.qh) - a.value(gamma(mirrored, p), p.qh)) * eta
    ok = R.S(i, compute_ns(lam, p).poly) == compute_ns(mirrored, p).poly.scale(factor)
    return Check(f"S{i} on P{lam}", ok, {"factor": str(factor)})


def check_duality(lam, mu, p: ParamSet) -> Check:
    lam, mu = tuple(lam), tuple(mu)
    dual = p.dual()
    left = normalize_E(lam, p).poly.eval_at(inverse_point(gamma(mu, dual)))
    right = normalize_E(mu, dual).poly.eval_at(inverse_point(gamma(lam, p)))
    return Check(f"duality E{lam} at x{mu}", left == right, {"left": str(left), "right": str(right)})


def check_duality_sym(lam, mu, p: ParamSet) -> Check:
    lam, mu = tuple(lam), tuple(mu)
    dual = p.dual()
    left = normalize_Eplus(lam, p).poly.eval_at(gamma(mu, dual))
    right = normalize_Eplus(mu, dual).poly.eval_at(gamma(lam, p))
    return Check(f"symmetric duality E+{lam} at x{mu}", left == right, {"left": str(left), "right": str(right)})


def check_spectral_action(lam, i: int, p: ParamSet) -> Check:
    """Hecke generators acting on the spectral parameter of ``E(gamma_lam; .)``.

    ``i = 0`` uses ``U_n``; the other indices use ``T_i``.
    """
    lam = tuple(lam)
    n = len(lam)
    R = rep(n, p)
    dual = p.mult.dual()
    E = normalize_E(lam, p).poly
    moved = reflect(i, lam)
    ti = dual.simple(n, i)
    lhs = R.U(E) if i == 0 else R.T(i, E)
    rhs = E.scale(ti)
    if moved != lam:
        v = v_eval(simple_root(n, i), inverse_point(gamma(lam, p)), dual, p)
        rhs = rhs + (normalize_E(moved, p).poly - E).scale(v / ti)
    name = "U_n" if i == 0 else f"T{i}"
    return Check(f"{name} on E{lam} via spectral parameter", lhs == rhs, {"moved_to": list(moved)})


def check_central_character(lam, p: ParamSet) -> Check:
    lam_plus = dominant(lam)
    R = rep(len(lam), p)
    value = R.m_eps1(gamma(lam_plus, p))
    P = compute_ns(tuple(lam), p).poly
    image = poly_sum((R.Y(i, P) + R.Y(i, P, inverse=True) for i in range(1, len(lam) + 1)), len(lam))
    return Check(f"central character on P{tuple(lam)}", image == P.scale(value))


def weyl_character_factor(n: int, p: ParamSet) -> LaurentPoly:
    """``x^kappa * prod_{alpha < 0} (1 - x^alpha) v_alpha(x)`` at inverted parameters."""
    inv = p.inverse()
    out = LaurentPoly.monomial(kappa(n))
    for alpha in positive_roots(n):
        neg = AffineRoot(tuple(-a for a in alpha))
        out = out * tv_factor(neg, inv.mult, inv.qh, n)
    return out


def check_gwcf(lam, p: ParamSet) -> Check:
    lam = tuple(lam)
    n = len(lam)
    chi = weyl_character_factor(n, p)
    shifted = compute_sym(lam, p.qshift()).poly
    target = compute_antisym(tuple(a + k for a, k in zip(lam, kappa(n))), p).poly
    return Check(f"character formula at {lam}", chi * shifted == target)


def check_expansions(lam, p: ParamSet) -> list[Check]:
    """(Anti-)symmetric polynomials as combinations of ``P_mu`` over the orbit, both coefficient routes."""
    lam = tuple(lam)
    out = []
    routes = all(
        expansion_coefficient(lam, mu, s, p, 1) == expansion_coefficient(lam, mu, s, p, 2)
        for mu in orbit(lam)
        for s in (1, -1)
    )
    out.append(Check(f"expansion coefficient routes at {lam}", routes))
    out.append(Check(f"symmetric expansion at {lam}", expansion(lam, 1, p) == compute_sym(lam, p).poly))
    if is_regular_dominant(lam):
        out.append(Check(f"anti-symmetric expansion at {lam}", expansion(lam, -1, p) == compute_antisym(lam, p).poly))
    return out


def check_idempotents(f: LaurentPoly, p: ParamSet) -> list[Check]:
    R = rep(f.n, p)
    plus, minus = R.C(1, f), R.C(-1, f)
    checks = [
        Check("C+ idempotent", R.C(1, plus) == plus),
        Check("C- idempotent", R.C(-1, minus) == minus),
        Check("C+ C- = 0", R.C(1, minus).is_zero()),
        Check("C- C+ = 0", R.C(-1, plus).is_zero()),
    ]
    for i in range(1, f.n + 1):
        checks.append(Check(f"T{i} C+ = t{i} C+", R.T(i, plus) == plus.scale(R.t[i])))
        checks.append(Check(f"T{i} C- = -t{i}^-1 C-", R.T(i, minus) == minus.scale(-1 / R.t[i])))
    return checks


def in_downset(poly: LaurentPoly, lam) -> bool:
    return all(preceq(mu, lam) for mu in poly.terms)
