"""Langlands parameters restricted to C^* and the algebraic/regular/purity tests.

A parameter is stored as the multiset of characters z^p zbar^q, unnormalized.
The (1-n)/2 shift of the algebraicity condition is applied inside the
predicates only.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .aq_catalog import AqModule, langlands_data
from .errors import AqjlError, NotAlgebraic
from .reps import D, SgnDet

Pair = tuple[Fraction, Fraction]


def _half_integer(x) -> Fraction:
    x = Fraction(x)
    if 2 % x.denominator:
        raise AqjlError(f"exponent {x} is not in (1/2)Z")
    return x


@dataclass(frozen=True)
class WeilParameter:
    exponents: tuple[Pair, ...]
    n: int

    def __post_init__(self) -> None:
        pairs = tuple(sorted((_half_integer(p), _half_integer(q)) for p, q in self.exponents))
        object.__setattr__(self, "exponents", pairs)
        if len(pairs) != self.n:
            raise AqjlError(f"parameter has {len(pairs)} characters but n={self.n}")

    @classmethod
    def of(cls, pairs: Iterable[Sequence]) -> "WeilParameter":
        pairs = [tuple(x) for x in pairs]
        return cls(tuple(pairs), len(pairs))

    @property
    def p_values(self) -> list[Fraction]:
        return [p for p, _ in self.exponents]

    def swapped(self) -> "WeilParameter":
        return WeilParameter(tuple((q, p) for p, q in self.exponents), self.n)

    def twisted(self, s) -> "WeilParameter":
        s = Fraction(s)
        return WeilParameter(tuple((p + s, q + s) for p, q in self.exponents), self.n)

    def to_json(self) -> list[list[int]]:
        return [[p.numerator, p.denominator, q.numerator, q.denominator] for p, q in self.exponents]

    @classmethod
    def from_json(cls, data: Sequence[Sequence[int]]) -> "WeilParameter":
        try:
            pairs = [(Fraction(a, b), Fraction(c, d)) for a, b, c, d in data]
        except (TypeError, ValueError, ZeroDivisionError) as exc:
            raise AqjlError(f"bad parameter quadruples: {data!r}") from exc
        return cls(tuple(pairs), len(pairs))

    def __str__(self) -> str:
        body = ", ".join(f"({p},{q})" for p, q in self.exponents)
        return "{" + body + "}"


def block_pairs(rep) -> list[Pair]:
    """Characters of C^* attached to a split-side rank-one piece."""
    if isinstance(rep, D):
        a = Fraction(rep.l - rep.u, 2)
        b = Fraction(-rep.l - rep.u, 2)
        return [(a, b), (b, a)]
    if isinstance(rep, SgnDet):
        raise AqjlError("use the GL_1(R) exponents, not the paired SgnDet form")
    raise AqjlError(f"{rep} is not a split-side block")


def parameter_of(m: AqModule, extra_twist=0) -> WeilParameter:
    if not m.kind.is_split:
        raise AqjlError("parameters are read off the GL_n(R) side; transfer first")
    datum = langlands_data(m)
    pairs: list[Pair] = []
    for b in datum.complex_blocks:
        pairs += block_pairs(D(b.u, b.l))
    pairs += [(t, t) for t in datum.anisotropic_exponents]
    return WeilParameter(tuple(pairs), m.kind.n).twisted(extra_twist)


def is_algebraic(t: WeilParameter) -> bool:
    shift = Fraction(t.n - 1, 2)
    return all((x - shift).denominator == 1 for pair in t.exponents for x in pair)


def is_regular(t: WeilParameter) -> bool:
    if not is_algebraic(t):
        raise NotAlgebraic(f"{t} is not algebraic")
    ps = t.p_values
    return len(set(ps)) == len(ps)


def purity_weight(
    params: Sequence[WeilParameter], *, normalize: bool = False, strict: bool = True
) -> Optional[int]:
    """Common value of p + q over every character of every parameter.

    By default the raw sum is returned, so a single J(w, l) gives -w.
    ``normalize=True`` adds the 1 - n coming from |.|_C^{(1-n)/2}.
    ``strict=False`` skips the algebraicity precondition.
    """
    if not params:
        raise AqjlError("purity needs at least one parameter")
    sums = set()
    for t in params:
        if strict and not is_algebraic(t):
            raise NotAlgebraic(f"{t} is not algebraic")
        shift = 1 - t.n if normalize else 0
        sums.update(p + q + shift for p, q in t.exponents)
    if len(sums) != 1:
        return None
    (s,) = sums
    return int(s) if s.denominator == 1 else None


def example_nontempered_parameter(k: int) -> WeilParameter:
    """Parameter of J(D(-1, k+2) (x) D(1, k+2)) on GL_4(R), any k >= 0."""
    if k < 0:
        raise AqjlError("k must be >= 0")
    return WeilParameter.of(block_pairs(D(-1, k + 2)) + block_pairs(D(1, k + 2)))
