"""Difference-reflection operators of the Noumi representation and the
operators built from them (Y, intertwiners, idempotents, U_n, L), plus an
exact checker for the defining relations of the double affine Hecke algebra.
"""
from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

from .exactring import LaurentPoly, poly_sum
from .params import ParamSet
from .spectrum import gamma
from .rootsys import (
    AffineRoot,
    SignedPermutation,
    halved,
    simple_root,
    unit,
    weyl_group,
)

Op = Callable[[LaurentPoly], LaurentPoly]


def tv_factor(beta: AffineRoot, mult, qh, n: int) -> LaurentPoly:
    """Numerator ``(1 - t_b t_{b/2} x^{b/2})(1 + t_b t_{b/2}^-1 x^{b/2})`` of ``v_beta``."""
    t_beta = mult.of_root(beta)
    half = halved(beta)
    if half is None:
        return LaurentPoly.const(n) - LaurentPoly.monomial(beta.grad, t_beta**2 * Fraction(qh) ** beta.half_delta)
    t_half = mult.of_root(half)
    mono = LaurentPoly.monomial(half.grad, Fraction(qh) ** half.half_delta)
    one = LaurentPoly.const(n)
    return (one - mono.scale(t_beta * t_half)) * (one + mono.scale(t_beta / t_half))


def divided_difference(beta: AffineRoot, f: LaurentPoly, params: ParamSet) -> LaurentPoly:
    return f.divided_difference(beta, params.qh)


def random_poly(n: int, rng: random.Random, degree: int = 3, terms: int = 6) -> LaurentPoly:
    """A random Laurent polynomial with exponents in ``[-degree, degree]``."""
    data = {}
    for _ in range(terms):
        e = tuple(rng.randint(-degree, degree) for _ in range(n))
        data[e] = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
    return LaurentPoly(n, data)


class NoumiRep:
    """The Noumi representation on Laurent polynomials in ``n`` variables.

    Images of monomials under ``Y_i`` and ``Y_i^-1`` are cached, so repeated
    applications on a fixed support (as in the eigenvalue solver) are cheap.
    """

    def __init__(self, n: int, params: ParamSet):
        if n < 1:
            raise ValueError("n must be positive")
        self.n = n
        self.params = params
        self.qh = params.qh
        self.roots = [simple_root(n, i) for i in range(n + 1)]
        self.t = [params.simple(n, i) for i in range(n + 1)]
        self.tv = [tv_factor(r, params.mult, params.qh, n) for r in self.roots]
        self._y_cache: dict[tuple[int, bool], dict] = {}
        self._words = None

    # ------------------------------------------------------------ basic operators
    def s(self, i: int, f: LaurentPoly) -> LaurentPoly:
        if i == 0:
            return f.act_s0(self.params.q)
        return f.act_weyl(SignedPermutation.simple(self.n, i))

    def D(self, i: int, f: LaurentPoly) -> LaurentPoly:
        return f.divided_difference(self.roots[i], self.qh)

    def T(self, i: int, f: LaurentPoly) -> LaurentPoly:
        ti = self.t[i]
        return f.scale(ti) - (self.tv[i] * self.D(i, f)).scale(1 / ti)

    def Tinv(self, i: int, f: LaurentPoly) -> LaurentPoly:
        ti = self.t[i]
        return self.T(i, f) - f.scale(ti - 1 / ti)

    def word(self, letters: Sequence[tuple[int, bool]], f: LaurentPoly) -> LaurentPoly:
        """Apply ``T_{i1}^{+-1} ... T_{ir}^{+-1}`` (rightmost letter first)."""
        for i, inverse in reversed(letters):
            f = self.Tinv(i, f) if inverse else self.T(i, f)
        return f

    def T_w(self, word: Sequence[int], f: LaurentPoly) -> LaurentPoly:
        return self.word([(i, False) for i in word], f)

    # ------------------------------------------------------------ Y operators
    def y_word(self, i: int, inverse: bool = False) -> list[tuple[int, bool]]:
        """Letters of ``Y_i`` (1-based ``i``) or of its inverse."""
        n = self.n
        letters = [(j, False) for j in range(i, n)] + [(n, False)]
        letters += [(j, False) for j in range(n - 1, 0, -1)] + [(0, False)]
        letters += [(j, True) for j in range(1, i)]
        if inverse:
            letters = [(j, not inv) for j, inv in reversed(letters)]
        return letters

    def _y_mono(self, i: int, inverse: bool, e) -> LaurentPoly:
        cache = self._y_cache.setdefault((i, inverse), {})
        out = cache.get(e)
        if out is None:
            out = self.word(self.y_word(i, inverse), LaurentPoly.monomial(e))
            cache[e] = out
        return out

    def Y(self, i: int, f: LaurentPoly, inverse: bool = False) -> LaurentPoly:
        acc: dict = {}
        for e, c in f.items():
            for k, v in self._y_mono(i, inverse, e).items():
                acc[k] = acc.get(k, 0) + c * v
        return LaurentPoly.from_dict(self.n, acc)

    def Y_weight(self, lam: Sequence[int], f: LaurentPoly) -> LaurentPoly:
        """``Y^lam f`` as the product of coordinate powers (the factors commute)."""
        for i, k in enumerate(lam, start=1):
            for _ in range(abs(k)):
                f = self.Y(i, f, inverse=k < 0)
        return f

    def Y_poly(self, g: LaurentPoly, f: LaurentPoly) -> LaurentPoly:
        """``g(Y) f``."""
        return poly_sum((self.Y_weight(e, f).scale(c) for e, c in g.items()), self.n)

    def Y_root(self, i: int, f: LaurentPoly) -> LaurentPoly:
        """``Y^{a_i}`` for ``1 <= i <= n``."""
        if i == self.n:
            return self.Y(i, self.Y(i, f))
        return self.Y(i, self.Y(i + 1, f, inverse=True))

    def S(self, i: int, f: LaurentPoly) -> LaurentPoly:
        """Intertwiner ``[T_i, Y^{a_i}]``."""
        return self.T(i, self.Y_root(i, f)) - self.Y_root(i, self.T(i, f))

    # ------------------------------------------------------------ dual generators
    def T0_dual(self, f: LaurentPoly) -> LaurentPoly:
        """``q^{-1/2} T_0^{-1} z_1``."""
        return self.Tinv(0, f.shift(unit(self.n, 0))).scale(1 / self.qh)

    def T0_dual_inv(self, f: LaurentPoly) -> LaurentPoly:
        return self.T(0, f).shift(unit(self.n, 0, -1)).scale(self.qh)

    def Tn_dual(self, f: LaurentPoly) -> LaurentPoly:
        """``z_n^{-1} T_n^{-1}``."""
        return self.Tinv(self.n, f).shift(unit(self.n, self.n - 1, -1))

    def Tn_dual_inv(self, f: LaurentPoly) -> LaurentPoly:
        return self.T(self.n, f.shift(unit(self.n, self.n - 1)))

    def U(self, f: LaurentPoly) -> LaurentPoly:
        """``T_1 ... T_{n-1} T_n^dual T_{n-1}^-1 ... T_1^-1``."""
        n = self.n
        for j in range(1, n):
            f = self.Tinv(j, f)
        f = self.Tn_dual(f)
        for j in range(n - 1, 0, -1):
            f = self.T(j, f)
        return f

    # ------------------------------------------------------------ idempotents
    def finite_words(self) -> tuple[tuple[SignedPermutation, tuple[int, ...]], ...]:
        """Every ``w`` in W with a reduced word, found breadth-first from the identity."""
        if self._words is not None:
            return self._words
        n = self.n
        start = SignedPermutation.identity(n)
        seen = {start: ()}
        queue = deque([start])
        while queue:
            w = queue.popleft()
            for i in range(1, n + 1):
                v = SignedPermutation.simple(n, i) * w
                if v not in seen and v.length() == w.length() + 1:
                    seen[v] = (i,) + seen[w]
                    queue.append(v)
        assert len(seen) == len(weyl_group(n))
        self._words = tuple(seen.items())
        return self._words

    def C(self, sign: int, f: LaurentPoly) -> LaurentPoly:
        """Trivial (``sign=+1``) or alternating (``sign=-1``) idempotent of the finite Hecke algebra."""
        images = {(): f}
        total = LaurentPoly.zero(self.n)
        norm = Fraction(0)
        for w, word in self.finite_words():
            if word not in images:
                images[word] = self.T(word[0], images[word[1:]])
            tw = Fraction(1)
            for i in word:
                tw *= self.t[i]
            weight = tw if sign > 0 else (-1) ** len(word) / tw
            norm += tw ** (2 * sign)
            total = total + images[word].scale(weight)
        return total.scale(1 / norm)

    # ------------------------------------------------------------ Koornwinder's operator
    def m_eps1(self, point: Sequence[Fraction]) -> Fraction:
        return sum((v + 1 / v for v in point), Fraction(0))

    def L_sym(self, f: LaurentPoly, gamma0: Sequence[Fraction]) -> LaurentPoly:
        if not is_invariant(f):
            raise ValueError("L is only defined here on W-invariant polynomials")
        out = f.scale(-self.m_eps1(gamma0))
        for i in range(1, self.n + 1):
            out = out + self.Y(i, f) + self.Y(i, f, inverse=True)
        return out


def is_invariant(f: LaurentPoly) -> bool:
    n = f.n
    return all(f.act_weyl(SignedPermutation.simple(n, i)) == f for i in range(1, n + 1))


@lru_cache(maxsize=64)
def rep(n: int, params: ParamSet) -> NoumiRep:
    return NoumiRep(n, params)


# ------------------------------------------------------------ functional API


def apply_Ti(i: int, f: LaurentPoly, p: ParamSet) -> LaurentPoly:
    return rep(f.n, p).T(i, f)


def apply_Ti_inv(i: int, f: LaurentPoly, p: ParamSet) -> LaurentPoly:
    return rep(f.n, p).Tinv(i, f)


def apply_Y(lam: Sequence[int], f: LaurentPoly, p: ParamSet) -> LaurentPoly:
    return rep(f.n, p).Y_weight(lam, f)


def apply_Si(i: int, f: LaurentPoly, p: ParamSet) -> LaurentPoly:
    return rep(f.n, p).S(i, f)


def apply_Un(f: LaurentPoly, p: ParamSet) -> LaurentPoly:
    return rep(f.n, p).U(f)


def apply_C(sign: int, f: LaurentPoly, p: ParamSet) -> LaurentPoly:
    return rep(f.n, p).C(sign, f)


def apply_L_sym(f: LaurentPoly, p: ParamSet) -> LaurentPoly:
    return rep(f.n, p).L_sym(f, gamma((0,) * f.n, p))


# ------------------------------------------------------------ relation checker


@dataclass
class RelationResult:
    relation: str
    passed: bool
    witness: LaurentPoly | None = None

    def to_json_obj(self) -> dict:
        out = {"relation": self.relation, "pass": self.passed}
        if self.witness is not None:
            out["witness"] = self.witness.to_json_obj()
        return out


def multiplication_numerator(rep_: NoumiRep, i: int) -> LaurentPoly:
    """``(t_a - t_a^-1) + (t_{a/2} - t_{a/2}^-1) x^{a/2}`` for ``a = a_i``."""
    n = rep_.n
    mult = rep_.params.mult
    beta = rep_.roots[i]
    t_beta = mult.of_root(beta)
    out = LaurentPoly.const(n, t_beta - 1 / t_beta)
    half = halved(beta)
    if half is not None:
        t_half = mult.of_root(half)
        out = out + LaurentPoly.monomial(half.grad, (t_half - 1 / t_half) * rep_.qh**half.half_delta)
    return out


def spectral_numerator(rep_: NoumiRep, i: int) -> LaurentPoly:
    """Dual-parameter numerator in the commutation of ``T_i`` with ``f(Y)``, as a polynomial in ``Y``."""
    n = rep_.n
    dual = rep_.params.mult.dual()
    if i < n:
        return LaurentPoly.const(n, dual.t - 1 / dual.t)
    return LaurentPoly.const(n, dual.tn - 1 / dual.tn) + LaurentPoly.monomial(
        unit(n, n - 1, -1), dual.tnv - 1 / dual.tnv
    )


def _quadratic(op: Op, ti: Fraction, f: LaurentPoly) -> LaurentPoly:
    g = op(f) + f.scale(1 / ti)
    return op(g) - g.scale(ti)


def check_relations(p: ParamSet, n: int = 2, trials: int = 20, seed: int = 0, degree: int = 3) -> list[RelationResult]:
    """Verify the defining relations exactly on random Laurent polynomials."""
    rng = random.Random(seed)
    R = rep(n, p)
    samples = [random_poly(n, rng, degree) for _ in range(trials)]
    results: list[RelationResult] = []

    def record(name: str, residual: Callable[[LaurentPoly], LaurentPoly]):
        for f in samples:
            r = residual(f)
            if not r.is_zero():
                results.append(RelationResult(name, False, f))
                return
        results.append(RelationResult(name, True))

    for i in range(n + 1):
        record(f"quadratic T{i}", lambda f, i=i: _quadratic(lambda g: R.T(i, g), R.t[i], f))
        record(f"inverse T{i}", lambda f, i=i: R.Tinv(i, R.T(i, f)) - f)

    def braid(ops: list[Op], name_prefix: str):
        m = len(ops) - 1
        for i in range(m):
            for j in range(i + 1, m + 1):
                a, b = ops[i], ops[j]
                if j - i >= 2:
                    reps = 2
                else:
                    reps = 4 if i == 0 or j == m else 3

                def residual(f, a=a, b=b, reps=reps):
                    left, right = f, f
                    for k in range(reps):
                        left = (b if k % 2 == 0 else a)(left)
                        right = (a if k % 2 == 0 else b)(right)
                    return left - right

                record(f"{name_prefix} braid ({i},{j}) order {reps}", residual)

    T_ops: list[Op] = [lambda f, i=i: R.T(i, f) for i in range(n + 1)]
    braid(T_ops, "affine")

    dual_ops: list[Op] = [R.T0_dual] + [lambda f, i=i: R.T(i, f) for i in range(1, n)] + [R.Tn_dual]
    braid(dual_ops, "dual affine")
    record("quadratic T0 dual", lambda f: _quadratic(R.T0_dual, p.t0v, f))
    record("quadratic Tn dual", lambda f: _quadratic(R.Tn_dual, p.tnv, f))

    def compatibility(f):
        g = f
        for j in range(n - 1, 0, -1):
            g = R.T(j, g)
        g = R.T0_dual(g)
        g = R.T(0, g)
        for j in range(1, n + 1):
            g = R.T(j, g)
        g = R.Tn_dual(g)
        return g - f.scale(1 / p.qh)

    record("compatibility walk", compatibility)
    record("[T0, Tn dual] = 0", lambda f: R.T(0, R.Tn_dual(f)) - R.Tn_dual(R.T(0, f)))
    record("[T0 dual, Tn] = 0", lambda f: R.T0_dual(R.T(n, f)) - R.T(n, R.T0_dual(f)))

    # multiplication-operator commutation with f = x_1
    x1 = LaurentPoly.variable(n, 0)
    for i in range(n + 1):
        num = multiplication_numerator(R, i)
        rhs_mult = num * x1.divided_difference(R.roots[i], p.qh)
        sx1 = R.s(i, x1)
        record(
            f"multiplication commutation T{i}",
            lambda g, i=i, rhs_mult=rhs_mult, sx1=sx1: x1 * R.T(i, g) - R.T(i, sx1 * g) - rhs_mult * g,
        )

    # commutation of T_i with f(Y), f = Y_1
    for i in range(1, n + 1):
        h = spectral_numerator(R, i) * x1.divided_difference(-R.roots[i], p.qh)
        sx1 = R.s(i, x1)
        record(
            f"Y commutation T{i}",
            lambda g, i=i, h=h, sx1=sx1: R.T(i, R.Y_poly(x1, g)) - R.Y_poly(sx1, R.T(i, g)) - R.Y_poly(h, g),
        )

    record(
        "Y commutativity",
        lambda f: poly_sum(
            (R.Y(i, R.Y(j, f)) - R.Y(j, R.Y(i, f)) for i in range(1, n + 1) for j in range(i + 1, n + 1)), n
        ),
    )
    return results
