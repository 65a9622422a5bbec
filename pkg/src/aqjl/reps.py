"""Rank-one building blocks on either side of the archimedean transfer.

``D(u, l)`` is the discrete series D(l) of GL_2(R) twisted by |det|^{-u/2};
``F(u, l)`` is Sym^{l-1} C^2 of GL_1(H) twisted by det'^{-u/2};
``SgnDet(eps, s)`` is sgn^eps |det|^s on GL_2(R) and ``DetPrime(s)`` is det'^s
on GL_1(H).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union


def fmt_rational(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class D:
    u: Fraction
    l: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "u", Fraction(self.u))
        if self.l < 1:
            raise ValueError(f"l must be >= 1, got {self.l}")

    def __str__(self) -> str:
        return f"D({fmt_rational(self.u)},{self.l})"


@dataclass(frozen=True)
class F:
    u: Fraction
    l: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "u", Fraction(self.u))
        if self.l < 1:
            raise ValueError(f"l must be >= 1, got {self.l}")

    def __str__(self) -> str:
        return f"F({fmt_rational(self.u)},{self.l})"


@dataclass(frozen=True)
class SgnDet:
    eps: int
    s: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "s", Fraction(self.s))
        if self.eps not in (0, 1):
            raise ValueError(f"eps must be 0 or 1, got {self.eps}")

    def __str__(self) -> str:
        return f"sgn^{self.eps}|det|^{fmt_rational(self.s)}"


@dataclass(frozen=True)
class DetPrime:
    s: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "s", Fraction(self.s))

    def __str__(self) -> str:
        return f"det'^{fmt_rational(self.s)}"


BasicRep = Union[D, F, SgnDet, DetPrime]


def normalize_quaternionic(rep: BasicRep) -> BasicRep:
    """Write a one-dimensional GL_1(H) character as F(u, 1)."""
    if isinstance(rep, DetPrime):
        return F(-2 * rep.s, 1)
    return rep
