"""Parameter sets: ``q^(1/2)`` together with the five orbit multiplicities."""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .exactring import as_rational, rational_str
from .rootsys import MultiplicityData


class ParameterError(ValueError):
    pass


@dataclass(frozen=True)
class ParamSet:
    qh: Fraction
    mult: MultiplicityData

    def __post_init__(self):
        qh = as_rational(self.qh)
        if qh in (0, 1, -1):
            raise ParameterError("qh must differ from 0 and +-1")
        object.__setattr__(self, "qh", qh)

    @classmethod
    def make(cls, qh, t0, t0v, t, tn, tnv) -> "ParamSet":
        return cls(as_rational(qh), MultiplicityData(*(as_rational(v) for v in (t0, t0v, t, tn, tnv))))

    @property
    def q(self) -> Fraction:
        return self.qh * self.qh

    @property
    def t0(self) -> Fraction:
        return self.mult.t0

    @property
    def t0v(self) -> Fraction:
        return self.mult.t0v

    @property
    def t(self) -> Fraction:
        return self.mult.t

    @property
    def tn(self) -> Fraction:
        return self.mult.tn

    @property
    def tnv(self) -> Fraction:
        return self.mult.tnv

    @property
    def abcd(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        m = self.mult
        return (
            m.t0 * m.t0v * self.qh,
            -m.t0 / m.t0v * self.qh,
            m.tn * m.tnv,
            -m.tn / m.tnv,
        )

    def simple(self, n: int, i: int) -> Fraction:
        return self.mult.simple(n, i)

    def dual(self) -> "ParamSet":
        return ParamSet(self.qh, self.mult.dual())

    def inverse(self) -> "ParamSet":
        """Reciprocal multiplicities and ``q -> 1/q``."""
        return ParamSet(1 / self.qh, self.mult.inverse())

    def qshift(self) -> "ParamSet":
        return ParamSet(self.qh, self.mult.qshift(self.qh))

    def with_mult(self, mult: MultiplicityData) -> "ParamSet":
        return ParamSet(self.qh, mult)

    def check_quadrature(self) -> None:
        """The torus pairing needs ``0 < q, t < 1`` and ``|a|, |b|, |c|, |d| < 1``."""
        problems = []
        if not 0 < self.q < 1:
            problems.append(f"q = {self.q}")
        if not 0 < self.t < 1:
            problems.append(f"t = {self.t}")
        for name, v in zip("abcd", self.abcd):
            if abs(v) >= 1:
                problems.append(f"{name} = {v}")
        if problems:
            raise ParameterError("parameters unsuitable for quadrature: " + ", ".join(problems))

    def to_json_obj(self) -> dict:
        return {
            "qh": rational_str(self.qh),
            **{k: rational_str(v) for k, v in zip(("t0", "t0v", "t", "tn", "tnv"), self.mult.as_tuple())},
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "ParamSet":
        try:
            return cls.make(*(obj[k] for k in ("qh", "t0", "t0v", "t", "tn", "tnv")))
        except KeyError as exc:
            raise ParameterError(f"parameter file is missing {exc.args[0]!r}") from None
        except (ValueError, ZeroDivisionError) as exc:
            raise ParameterError(str(exc)) from None

    @classmethod
    def load(cls, path: str | Path) -> "ParamSet":
        return cls.from_json_obj(json.loads(Path(path).read_text()))

    def __str__(self) -> str:
        return json.dumps(self.to_json_obj())


DEFAULT = ParamSet.make("1/2", "3/5", "2/3", "1/2", "5/7", "4/5")

# extra independent specializations for identity suites
SPECIALIZATIONS = (
    DEFAULT,
    ParamSet.make("2/3", "5/4", "3/7", "3/5", "7/9", "6/5"),
    ParamSet.make("3/5", "4/11", "5/3", "2/7", "8/5", "3/10"),
)

# every pole of the weight lies well inside/outside the unit circle, so the
# trapezoid rule converges fast enough for N = 64
QUADRATURE = ParamSet.make("1/2", "3/5", "5/4", "2/3", "2/5", "6/5")
