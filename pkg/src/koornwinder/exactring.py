"""Exact multivariate Laurent polynomials over the rationals.

Elements are immutable maps from integer exponent vectors to
:class:`fractions.Fraction` coefficients.  Equality is structural: two
polynomials are equal iff their (zero-free) term maps agree.
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

Exponent = tuple[int, ...]


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and "num/den" strings to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, float):
        raise TypeError("floating-point coefficients are not allowed in exact arithmetic")
    return Fraction(value)


def rational_str(c: Fraction) -> str:
    return f"{c.numerator}/{c.denominator}" if c.denominator != 1 else str(c.numerator)


class DimensionError(ValueError):
    pass


class LaurentPoly:
    """A Laurent polynomial in ``n`` variables with rational coefficients."""

    __slots__ = ("n", "_terms", "_hash")

    def __init__(self, n: int, terms: Mapping[Exponent, object] | None = None, *, _trusted: bool = False):
        self.n = n
        if _trusted:
            self._terms = terms  # caller guarantees Fraction values, no zeros
        else:
            clean: dict[Exponent, Fraction] = {}
            for e, c in (terms or {}).items():
                e = tuple(int(v) for v in e)
                if len(e) != n:
                    raise DimensionError(f"exponent {e} has length {len(e)}, expected {n}")
                c = as_rational(c)
                if c:
                    clean[e] = clean.get(e, Fraction(0)) + c
                    if not clean[e]:
                        del clean[e]
            self._terms = clean
        self._hash = None

    # construction helpers
    @classmethod
    def zero(cls, n: int) -> "LaurentPoly":
        return cls(n, {}, _trusted=True)

    @classmethod
    def const(cls, n: int, c=1) -> "LaurentPoly":
        c = as_rational(c)
        return cls(n, {(0,) * n: c} if c else {}, _trusted=True)

    @classmethod
    def monomial(cls, e: Sequence[int], c=1) -> "LaurentPoly":
        e = tuple(int(v) for v in e)
        c = as_rational(c)
        return cls(len(e), {e: c} if c else {}, _trusted=True)

    @classmethod
    def variable(cls, n: int, i: int, power: int = 1) -> "LaurentPoly":
        e = [0] * n
        e[i] = power
        return cls.monomial(e)

    @classmethod
    def from_dict(cls, n: int, terms: dict) -> "LaurentPoly":
        """Wrap an already-clean ``{exponent: Fraction}`` dict without copying."""
        return cls(n, {e: c for e, c in terms.items() if c}, _trusted=True)

    # container protocol
    @property
    def terms(self) -> Mapping[Exponent, Fraction]:
        return self._terms

    def items(self):
        return self._terms.items()

    def coeff(self, e: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(e), Fraction(0))

    def support(self) -> set[Exponent]:
        return set(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self.n == other.n and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == LaurentPoly.const(self.n, other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self._terms.items())))
        return self._hash

    # arithmetic
    def _check(self, other: "LaurentPoly") -> None:
        if other.n != self.n:
            raise DimensionError(f"dimension mismatch: {self.n} vs {other.n}")

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            self._check(other)
            return other
        return LaurentPoly.const(self.n, other)

    def __add__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                v += c
                if v:
                    out[e] = v
                else:
                    del out[e]
        return LaurentPoly(self.n, out, _trusted=True)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.n, {e: -c for e, c in self._terms.items()}, _trusted=True)

    def __sub__(self, other) -> "LaurentPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "LaurentPoly":
        return self._coerce(other) - self

    def scale(self, c) -> "LaurentPoly":
        c = as_rational(c)
        if not c:
            return LaurentPoly.zero(self.n)
        return LaurentPoly(self.n, {e: v * c for e, v in self._terms.items()}, _trusted=True)

    def __mul__(self, other) -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return self.scale(other)
        self._check(other)
        out: dict[Exponent, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(self.n, {e: c for e, c in out.items() if c}, _trusted=True)

    def __rmul__(self, other) -> "LaurentPoly":
        return self.scale(other)

    def __truediv__(self, c) -> "LaurentPoly":
        return self.scale(1 / as_rational(c))

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            if len(self._terms) != 1:
                raise ValueError("negative powers only exist for monomials")
            (e, c), = self._terms.items()
            return LaurentPoly(self.n, {tuple(k * a for a in e): c**k}, _trusted=True)
        out = LaurentPoly.const(self.n)
        for _ in range(k):
            out = out * self
        return out

    def shift(self, e: Sequence[int], c=1) -> "LaurentPoly":
        """Multiply by the monomial ``c * x^e``."""
        c = as_rational(c)
        return LaurentPoly(
            self.n,
            {tuple(a + b for a, b in zip(k, e)): v * c for k, v in self._terms.items()},
            _trusted=True,
        )

    # evaluation and substitutions
    def eval_at(self, y: Sequence) -> Fraction:
        """Exact value at a point with nonzero rational coordinates."""
        if len(y) != self.n:
            raise DimensionError(f"point has {len(y)} coordinates, expected {self.n}")
        y = [as_rational(v) for v in y]
        if any(v == 0 for v in y):
            raise ZeroDivisionError("Laurent polynomials cannot be evaluated at a zero coordinate")
        total = Fraction(0)
        for e, c in self._terms.items():
            term = c
            for v, k in zip(y, e):
                if k:
                    term *= v**k
            total += term
        return total

    def __call__(self, y: Sequence) -> Fraction:
        return self.eval_at(y)

    def eval_numeric(self, points):
        """Evaluate at an array of complex points of shape ``(..., n)`` (numpy)."""
        import numpy as np

        points = np.asarray(points, dtype=complex)
        out = np.zeros(points.shape[:-1], dtype=complex)
        for e, c in self._terms.items():
            term = np.full(points.shape[:-1], complex(float(c)), dtype=complex)
            for i, k in enumerate(e):
                if k:
                    term = term * points[..., i] ** k
            out += term
        return out

    def map_exponents(self, f) -> "LaurentPoly":
        out: dict[Exponent, Fraction] = {}
        for e, c in self._terms.items():
            k = f(e)
            out[k] = out.get(k, 0) + c
        return LaurentPoly(self.n, {e: c for e, c in out.items() if c}, _trusted=True)

    def act_weyl(self, w) -> "LaurentPoly":
        """Apply a signed permutation ``w`` (x^e -> x^{w e})."""
        return self.map_exponents(w.apply)

    def sigma(self) -> "LaurentPoly":
        """Invert every variable, i.e. the action of the longest Weyl group element."""
        return LaurentPoly(self.n, {tuple(-k for k in e): c for e, c in self._terms.items()}, _trusted=True)

    def act_s0(self, q) -> "LaurentPoly":
        """``f(x) -> f(q / x_1, x_2, ..., x_n)``."""
        q = as_rational(q)
        if not q:
            raise ZeroDivisionError("q must be nonzero")
        out: dict[Exponent, Fraction] = {}
        for e, c in self._terms.items():
            k = e[0]
            out[(-k,) + e[1:]] = c * q**k
        return LaurentPoly(self.n, out, _trusted=True)

    def q_shift(self, j: int, factor) -> "LaurentPoly":
        """``f(x) -> f(x_1, ..., factor * x_j, ..., x_n)``."""
        factor = as_rational(factor)
        return LaurentPoly(self.n, {e: c * factor ** e[j] for e, c in self._terms.items()}, _trusted=True)

    def divided_difference(self, beta, qh) -> "LaurentPoly":
        """``(f - s_beta f) / (1 - x^beta)`` for an affine root ``beta`` of the reduced system.

        ``beta`` is a :class:`~koornwinder.rootsys.AffineRoot`; its delta
        offset enters through ``x^beta = qh^k x^alpha``.  The quotient is
        expanded termwise as a finite geometric sum, so no division happens.
        """
        if not beta.in_R():
            raise ValueError(f"{beta} is not a root of the reduced system")
        step = as_rational(qh) ** (-beta.half_delta)
        alpha = beta.grad
        norm = sum(a * a for a in alpha)
        out: dict[Exponent, Fraction] = {}
        for e, c in self._terms.items():
            pairing = 2 * sum(a * b for a, b in zip(e, alpha)) // norm
            if pairing > 0:
                fac, cur = -c, e
                for _ in range(pairing):
                    cur = tuple(a - b for a, b in zip(cur, alpha))
                    fac = fac * step
                    out[cur] = out.get(cur, 0) + fac
            elif pairing < 0:
                fac, cur = c, e
                for _ in range(-pairing):
                    out[cur] = out.get(cur, 0) + fac
                    cur = tuple(a + b for a, b in zip(cur, alpha))
                    fac = fac / step
        return LaurentPoly(self.n, {e: c for e, c in out.items() if c}, _trusted=True)

    # presentation
    def sorted_terms(self) -> list[tuple[Exponent, Fraction]]:
        return sorted(self._terms.items())

    def leading_exponent(self, key) -> Exponent:
        return max(self._terms, key=key)

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "terms": [{"e": list(e), "c": rational_str(c)} for e, c in self.sorted_terms()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj: dict) -> "LaurentPoly":
        n = int(obj["n"])
        return cls(n, {tuple(t["e"]): Fraction(t["c"]) for t in obj["terms"]})

    @classmethod
    def from_json(cls, text: str) -> "LaurentPoly":
        return cls.from_json_obj(json.loads(text))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self._terms.items(), reverse=True):
            mono = "*".join(
                f"x{i + 1}" if k == 1 else f"x{i + 1}^{k}" for i, k in enumerate(e) if k
            )
            if not mono:
                parts.append(rational_str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{rational_str(c)}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"LaurentPoly(n={self.n}, {self})"


def poly_sum(polys: Iterable[LaurentPoly], n: int) -> LaurentPoly:
    out: dict[Exponent, Fraction] = {}
    for p in polys:
        for e, c in p.items():
            out[e] = out.get(e, 0) + c
    return LaurentPoly(n, {e: c for e, c in out.items() if c}, _trusted=True)
