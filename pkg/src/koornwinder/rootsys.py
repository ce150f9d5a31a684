"""Affine root system of type C-dual-C_n, the Weyl groups acting on it, and
the weight-lattice combinatorics (orders, downsets, inversion sets).

Weights are integer tuples.  Affine roots carry their delta offset in
half units so that the short roots ``eps_i + delta/2`` stay integral.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from .exactring import as_rational

Weight = tuple[int, ...]

ORBITS = ("a0v", "a0", "mid", "anv", "an")


def pairing(x: Sequence[int], y: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(x, y))


def unit(n: int, i: int, scale: int = 1) -> Weight:
    v = [0] * n
    v[i] = scale
    return tuple(v)


def gradient_kind(grad: Sequence[int]) -> str | None:
    """'short' for +-eps_i, 'long' for +-2eps_i, 'mid' for +-eps_i+-eps_j, else None."""
    nz = [a for a in grad if a]
    if len(nz) == 1 and abs(nz[0]) == 1:
        return "short"
    if len(nz) == 1 and abs(nz[0]) == 2:
        return "long"
    if len(nz) == 2 and all(abs(a) == 1 for a in nz):
        return "mid"
    return None


@dataclass(frozen=True, order=True)
class AffineRoot:
    """The affine function ``grad + (half_delta / 2) * delta``."""

    grad: Weight
    half_delta: int = 0

    def __post_init__(self):
        object.__setattr__(self, "grad", tuple(int(a) for a in self.grad))

    @property
    def n(self) -> int:
        return len(self.grad)

    @property
    def kind(self) -> str | None:
        return gradient_kind(self.grad)

    def in_S(self) -> bool:
        kind = self.kind
        if kind is None:
            return False
        return kind == "short" or self.half_delta % 2 == 0

    def in_R(self) -> bool:
        return self.kind in ("long", "mid") and self.half_delta % 2 == 0

    @property
    def m(self) -> Fraction:
        return Fraction(self.half_delta, 2)

    def __neg__(self) -> "AffineRoot":
        return AffineRoot(tuple(-a for a in self.grad), -self.half_delta)

    def coroot_pairing(self, lam: Sequence[int]) -> int:
        """``<lam, grad^vee>`` for the gradient."""
        norm = pairing(self.grad, self.grad)
        return 2 * pairing(lam, self.grad) // norm

    def is_positive(self) -> bool:
        if self.half_delta != 0:
            return self.half_delta > 0
        first = next(a for a in self.grad if a)
        return first > 0

    def value(self, point: Sequence, qh) -> Fraction:
        """``point^beta = qh^k * prod point_i^grad_i``."""
        out = as_rational(qh) ** self.half_delta
        for v, a in zip(point, self.grad):
            if a:
                out *= as_rational(v) ** a
        return out

    def __str__(self) -> str:
        parts = []
        for i, a in enumerate(self.grad):
            if a:
                parts.append(("+" if a > 0 else "-") + (f"{abs(a)}" if abs(a) != 1 else "") + f"e{i + 1}")
        s = "".join(parts).lstrip("+") or "0"
        if self.half_delta:
            s += f"{'+' if self.half_delta > 0 else '-'}{Fraction(abs(self.half_delta), 2)}d"
        return s


def classify_orbit(beta: AffineRoot) -> str:
    """Name of the affine Weyl group orbit containing ``beta``."""
    if not beta.in_S():
        raise ValueError(f"{beta} is not an affine root")
    kind = beta.kind
    if kind == "mid":
        return "mid"
    if kind == "short":
        return "a0v" if beta.half_delta % 2 else "anv"
    return "a0" if (beta.half_delta // 2) % 2 else "an"


def halved(beta: AffineRoot) -> AffineRoot | None:
    """``beta / 2`` when it is again an affine root (only for long gradients)."""
    if beta.kind != "long":
        return None
    # (2 eps_i + m delta) / 2 = eps_i + (m/2) delta; in half units the offset k -> k/2
    return AffineRoot(tuple(a // 2 for a in beta.grad), beta.half_delta // 2)


def simple_root(n: int, i: int) -> AffineRoot:
    if i == 0:
        return AffineRoot(unit(n, 0, -2), 2)
    if i == n:
        return AffineRoot(unit(n, n - 1, 2), 0)
    g = [0] * n
    g[i - 1], g[i] = 1, -1
    return AffineRoot(tuple(g), 0)


@lru_cache(maxsize=None)
def positive_roots(n: int) -> tuple[Weight, ...]:
    """Positive finite roots of the reduced system (middle then long)."""
    roots = []
    for i, j in itertools.combinations(range(n), 2):
        a = [0] * n
        a[i], a[j] = 1, -1
        roots.append(tuple(a))
        a[j] = 1
        roots.append(tuple(a))
    roots.extend(unit(n, i, 2) for i in range(n))
    return tuple(roots)


def is_positive_grad(alpha: Sequence[int]) -> bool:
    return next(a for a in alpha if a) > 0


# ---------------------------------------------------------------- finite Weyl group


@dataclass(frozen=True)
class SignedPermutation:
    """Signed permutation acting by ``(w lam)[perm[i]] = signs[i] * lam[i]``."""

    perm: tuple[int, ...]
    signs: tuple[int, ...]

    @classmethod
    def identity(cls, n: int) -> "SignedPermutation":
        return cls(tuple(range(n)), (1,) * n)

    @classmethod
    def simple(cls, n: int, i: int) -> "SignedPermutation":
        """``s_i`` for ``1 <= i <= n`` (``s_n`` flips the last sign)."""
        if i == n:
            return cls(tuple(range(n)), (1,) * (n - 1) + (-1,))
        if not 1 <= i < n:
            raise ValueError(f"finite simple reflection index {i} out of range")
        perm = list(range(n))
        perm[i - 1], perm[i] = perm[i], perm[i - 1]
        return cls(tuple(perm), (1,) * n)

    @classmethod
    def sign_flip(cls, n: int, i: int) -> "SignedPermutation":
        signs = [1] * n
        signs[i] = -1
        return cls(tuple(range(n)), tuple(signs))

    @classmethod
    def longest(cls, n: int) -> "SignedPermutation":
        return cls(tuple(range(n)), (-1,) * n)

    @property
    def n(self) -> int:
        return len(self.perm)

    def apply(self, lam: Sequence[int]) -> Weight:
        out = [0] * len(lam)
        for i, (p, s) in enumerate(zip(self.perm, self.signs)):
            out[p] = s * lam[i]
        return tuple(out)

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        perm = tuple(self.perm[other.perm[i]] for i in range(self.n))
        signs = tuple(other.signs[i] * self.signs[other.perm[i]] for i in range(self.n))
        return SignedPermutation(perm, signs)

    def inverse(self) -> "SignedPermutation":
        perm = [0] * self.n
        signs = [0] * self.n
        for i, (p, s) in enumerate(zip(self.perm, self.signs)):
            perm[p] = i
            signs[p] = s
        return SignedPermutation(tuple(perm), tuple(signs))

    def is_identity(self) -> bool:
        return self.perm == tuple(range(self.n)) and all(s == 1 for s in self.signs)

    def length(self) -> int:
        return sum(1 for a in positive_roots(self.n) if not is_positive_grad(self.apply(a)))

    def __repr__(self) -> str:
        return f"SignedPermutation(perm={self.perm}, signs={self.signs})"


@lru_cache(maxsize=None)
def weyl_group(n: int) -> tuple[SignedPermutation, ...]:
    out = []
    for perm in itertools.permutations(range(n)):
        for signs in itertools.product((1, -1), repeat=n):
            out.append(SignedPermutation(perm, signs))
    return tuple(out)


def inversion_set_finite(w: SignedPermutation) -> set[AffineRoot]:
    """Positive roots sent to negative roots by ``w``."""
    return {AffineRoot(a) for a in positive_roots(w.n) if not is_positive_grad(w.apply(a))}


def dominant(lam: Sequence[int]) -> Weight:
    return tuple(sorted((abs(a) for a in lam), reverse=True))


def is_dominant(lam: Sequence[int]) -> bool:
    return all(lam[i] >= lam[i + 1] for i in range(len(lam) - 1)) and lam[-1] >= 0


def is_regular_dominant(lam: Sequence[int]) -> bool:
    return all(lam[i] > lam[i + 1] for i in range(len(lam) - 1)) and lam[-1] > 0


def kappa(n: int) -> Weight:
    return tuple(range(n, 0, -1))


@lru_cache(maxsize=None)
def w_lambda(lam: Weight) -> SignedPermutation:
    """The shortest ``w`` with ``w(lam^+) = lam``."""
    lam = tuple(lam)
    plus = dominant(lam)
    best = None
    for w in weyl_group(len(lam)):
        if w.apply(plus) == lam:
            if best is None or w.length() < best.length():
                best = w
    return best


def orbit(lam: Sequence[int]) -> list[Weight]:
    return sorted({w.apply(lam) for w in weyl_group(len(lam))})


def _sign(k: int) -> int:
    return 1 if k >= 0 else -1


def rho_vectors(lam: Sequence[int]) -> tuple[Weight, Weight]:
    """``(rho_m(lam), rho_l(lam))``: sign-weighted sums of positive coroots.

    The middle and long parts are computed from the pairing signs and
    cross-checked against ``w_lam`` applied to the dominant vectors.
    """
    n = len(lam)
    rho_m = [0] * n
    rho_l = [0] * n
    for alpha in positive_roots(n):
        s = _sign(pairing(lam, alpha))
        if gradient_kind(alpha) == "long":
            for i, a in enumerate(alpha):
                rho_l[i] += s * a // 2
        else:
            for i, a in enumerate(alpha):
                rho_m[i] += s * a
    w = w_lambda(tuple(lam))
    base_m = tuple(2 * (n - 1 - i) for i in range(n))
    base_l = (1,) * n
    if tuple(rho_m) != w.apply(base_m) or tuple(rho_l) != w.apply(base_l):
        raise AssertionError(f"rho vectors for {tuple(lam)} disagree with w_lambda rho")
    return tuple(rho_m), tuple(rho_l)


# ---------------------------------------------------------------- orders and downsets


def leq(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """``mu - lam`` lies in the positive cone of the coroot lattice."""
    total = 0
    for a, b in zip(lam, mu):
        total += b - a
        if total < 0:
            return False
    return True


def preceq(lam: Sequence[int], mu: Sequence[int]) -> bool:
    lp, mp = dominant(lam), dominant(mu)
    if lp == mp:
        return leq(lam, mu)
    return leq(lp, mp)


def height(lam: Sequence[int]) -> int:
    """Sum of partial sums; strictly increasing along ``<``."""
    total = acc = 0
    for a in lam:
        acc += a
        total += acc
    return total


def order_key(lam: Sequence[int]):
    """Sort key giving a linear extension of ``preceq``."""
    return (height(dominant(lam)), height(lam), tuple(lam))


@lru_cache(maxsize=None)
def dominant_below(lam_plus: Weight) -> tuple[Weight, ...]:
    """Dominant weights ``mu <= lam_plus``."""
    n = len(lam_plus)
    bound = lam_plus[0] if lam_plus else 0
    out = []
    for mu in itertools.product(range(bound, -1, -1), repeat=n):
        if is_dominant(mu) and leq(mu, lam_plus):
            out.append(tuple(mu))
    return tuple(out)


@lru_cache(maxsize=None)
def downset(lam: Weight) -> tuple[Weight, ...]:
    """All ``mu`` with ``mu preceq lam`` in increasing linear-extension order."""
    lam = tuple(lam)
    out = []
    for mu_plus in dominant_below(dominant(lam)):
        for mu in orbit(mu_plus):
            if preceq(mu, lam):
                out.append(mu)
    return tuple(sorted(out, key=order_key))


def box(n: int, radius: int) -> list[Weight]:
    return [tuple(v) for v in itertools.product(range(-radius, radius + 1), repeat=n)]


def weights_with_plus_sum(n: int, max_sum: int) -> list[Weight]:
    """All weights whose dominant representative has coordinate sum at most ``max_sum``."""
    return sorted((lam for lam in box(n, max_sum) if sum(dominant(lam)) <= max_sum), key=order_key)


# ---------------------------------------------------------------- affine Weyl group


@dataclass(frozen=True)
class AffineWeylElement:
    """``tau(trans) * w``; acts on weights by ``x -> w x + trans`` (dot action)."""

    w: SignedPermutation
    trans: Weight = field(default=())

    def __post_init__(self):
        if not self.trans:
            object.__setattr__(self, "trans", (0,) * self.w.n)
        object.__setattr__(self, "trans", tuple(self.trans))

    @classmethod
    def identity(cls, n: int) -> "AffineWeylElement":
        return cls(SignedPermutation.identity(n))

    @classmethod
    def translation(cls, lam: Sequence[int]) -> "AffineWeylElement":
        return cls(SignedPermutation.identity(len(lam)), tuple(lam))

    @classmethod
    def simple(cls, n: int, i: int) -> "AffineWeylElement":
        if i == 0:
            return cls(SignedPermutation.sign_flip(n, 0), unit(n, 0, -1))
        return cls(SignedPermutation.simple(n, i))

    @property
    def n(self) -> int:
        return self.w.n

    def __mul__(self, other: "AffineWeylElement") -> "AffineWeylElement":
        shifted = self.w.apply(other.trans)
        return AffineWeylElement(self.w * other.w, tuple(a + b for a, b in zip(self.trans, shifted)))

    def inverse(self) -> "AffineWeylElement":
        winv = self.w.inverse()
        return AffineWeylElement(winv, tuple(-a for a in winv.apply(self.trans)))

    def dot(self, x: Sequence) -> tuple:
        wx = self.w.apply(x)
        return tuple(a + b for a, b in zip(wx, self.trans))

    def act_root(self, beta: AffineRoot) -> AffineRoot:
        image = self.w.apply(beta.grad)
        return AffineRoot(image, beta.half_delta + 2 * pairing(self.trans, image))

    def is_identity(self) -> bool:
        return self.w.is_identity() and not any(self.trans)

    def length(self) -> int:
        total = 0
        for alpha in positive_roots(self.n):
            image = self.w.apply(alpha)
            chi = 0 if is_positive_grad(image) else 1
            total += abs(-pairing(self.trans, image) + chi)
        return total

    def __repr__(self) -> str:
        return f"AffineWeylElement(w={self.w!r}, trans={self.trans})"


def reduced_word(u: AffineWeylElement) -> list[int]:
    """Indices ``[i1, ..., ir]`` with ``u = s_i1 ... s_ir`` and ``r = length(u)``."""
    n = u.n
    word = []
    current = u
    length = current.length()
    while length:
        for i in range(n + 1):
            candidate = AffineWeylElement.simple(n, i) * current
            cand_len = candidate.length()
            if cand_len < length:
                word.append(i)
                current, length = candidate, cand_len
                break
        else:
            raise AssertionError(f"no descent found for {u}")
    return word


def word_to_element(n: int, word: Sequence[int]) -> AffineWeylElement:
    out = AffineWeylElement.identity(n)
    for i in word:
        out = out * AffineWeylElement.simple(n, i)
    return out


def finite_reduced_word(w: SignedPermutation) -> list[int]:
    return reduced_word(AffineWeylElement(w))


def inversion_set_translation(lam: Sequence[int]) -> set[AffineRoot]:
    """Positive affine roots of the reduced system made negative by ``tau(-lam)``."""
    lam = tuple(lam)
    if not is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")
    out = set()
    for alpha in positive_roots(len(lam)):
        for grad in (alpha, tuple(-a for a in alpha)):
            bound = pairing(lam, grad)
            positive = is_positive_grad(grad)
            for m in range(0 if positive else 1, max(bound, 0) + 1):
                if m < bound or (m == bound and not positive):
                    out.add(AffineRoot(grad, 2 * m))
    return out


def affine_inversion_set(u: AffineWeylElement, max_offset: int | None = None) -> set[AffineRoot]:
    """Brute-force ``R+ intersect u^-1 R-`` (used to cross-check lengths)."""
    if max_offset is None:
        max_offset = 2 * sum(abs(a) for a in u.trans) + 2
    out = set()
    for alpha in positive_roots(u.n):
        for grad in (alpha, tuple(-a for a in alpha)):
            for m in range(0, max_offset + 1):
                beta = AffineRoot(grad, 2 * m)
                if beta.is_positive() and not u.act_root(beta).is_positive():
                    out.add(beta)
    return out


# ---------------------------------------------------------------- multiplicities


@dataclass(frozen=True)
class MultiplicityData:
    """Values of the multiplicity function on the five orbits."""

    t0: Fraction
    t0v: Fraction
    t: Fraction
    tn: Fraction
    tnv: Fraction

    def __post_init__(self):
        for name in ("t0", "t0v", "t", "tn", "tnv"):
            value = as_rational(getattr(self, name))
            if value == 0:
                raise ValueError(f"multiplicity {name} must be nonzero")
            object.__setattr__(self, name, value)

    def orbit_value(self, orbit_id: str) -> Fraction:
        return {"a0v": self.t0v, "a0": self.t0, "mid": self.t, "anv": self.tnv, "an": self.tn}[orbit_id]

    def of_root(self, beta: AffineRoot) -> Fraction:
        return self.orbit_value(classify_orbit(beta))

    def of_half(self, beta: AffineRoot) -> Fraction:
        """``t_{beta/2}``, equal to 1 when ``beta/2`` is not a root."""
        half = halved(beta)
        return self.of_root(half) if half is not None else Fraction(1)

    def simple(self, n: int, i: int) -> Fraction:
        if i == 0:
            return self.t0
        if i == n:
            return self.tn
        return self.t

    def dual(self) -> "MultiplicityData":
        return MultiplicityData(self.tnv, self.t0v, self.t, self.tn, self.t0)

    def inverse(self) -> "MultiplicityData":
        return MultiplicityData(1 / self.t0, 1 / self.t0v, 1 / self.t, 1 / self.tn, 1 / self.tnv)

    def qshift(self, qh) -> "MultiplicityData":
        qh = as_rational(qh)
        return MultiplicityData(self.t0, self.t0v, self.t * qh, self.tn * qh * qh, self.tnv)

    def as_tuple(self) -> tuple[Fraction, ...]:
        return (self.t0, self.t0v, self.t, self.tn, self.tnv)


def t_w(u: AffineWeylElement, mult: MultiplicityData) -> Fraction:
    """Product of simple multiplicities along a reduced word of ``u``."""
    out = Fraction(1)
    for i in reduced_word(u):
        out *= mult.simple(u.n, i)
    return out


def iter_words(n: int, max_len: int) -> Iterator[list[int]]:
    for length in range(max_len + 1):
        yield from (list(w) for w in itertools.product(range(n + 1), repeat=length))
