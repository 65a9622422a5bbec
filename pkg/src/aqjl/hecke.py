"""Satake parameters, Hecke eigenvalues and local rationality fields.

Satake parameters are taken already normalized by |varpi|^{(n-1)/2}; the
eigenvalue of T_j = diag(varpi, ..., varpi, 1, ..., 1) (j copies of varpi)
is then the j-th elementary symmetric function of the alphas.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

from .cyclotomic import (
    CyclotomicNumber,
    CyclotomicSubfield,
    common_conductor,
    compositum,
    generated_field,
)
from .errors import AqjlError


@dataclass(frozen=True)
class SatakeParams:
    alphas: tuple[CyclotomicNumber, ...]

    def __post_init__(self) -> None:
        alphas = tuple(
            a if isinstance(a, CyclotomicNumber) else CyclotomicNumber.rational(a) for a in self.alphas
        )
        if not alphas:
            raise AqjlError("Satake parameters need n >= 1 entries")
        object.__setattr__(self, "alphas", alphas)

    @property
    def n(self) -> int:
        return len(self.alphas)

    @property
    def conductor(self) -> int:
        return common_conductor(self.alphas)

    def lifted(self, N: Optional[int] = None) -> tuple[CyclotomicNumber, ...]:
        N = N or self.conductor
        return tuple(a.lift(N) for a in self.alphas)

    def multiset_key(self, N: Optional[int] = None) -> Counter:
        return Counter(a.coords for a in self.lifted(N))

    def same_multiset(self, other: "SatakeParams") -> bool:
        N = common_conductor(self.alphas + other.alphas)
        return self.multiset_key(N) == other.multiset_key(N)

    def to_json(self) -> list[dict]:
        return [a.to_json() for a in self.alphas]

    @classmethod
    def from_json(cls, data: Sequence[Mapping]) -> "SatakeParams":
        return cls(tuple(CyclotomicNumber.from_json(x) for x in data))


def hecke_eigenvalues(s: SatakeParams) -> list[CyclotomicNumber]:
    """(f_1(alpha), ..., f_n(alpha))."""
    N = s.conductor
    e = [CyclotomicNumber.rational(1, N)] + [CyclotomicNumber.rational(0, N)] * s.n
    for a in s.lifted(N):
        for j in range(s.n, 0, -1):
            e[j] = e[j] + e[j - 1] * a
    return e[1:]


def local_rationality_field(s: SatakeParams) -> CyclotomicSubfield:
    return generated_field(hecke_eigenvalues(s))


def sigma_twist_satake(s: SatakeParams, sigma: int, N: Optional[int] = None) -> SatakeParams:
    """Apply sigma_a (zeta_N -> zeta_N^a) to every alpha.

    ``N`` defaults to the common conductor of the alphas; it must be a
    multiple of it.
    """
    N = N or s.conductor
    if N % s.conductor:
        raise AqjlError(f"conductor {N} does not contain the alphas (need a multiple of {s.conductor})")
    return SatakeParams(tuple(a.galois(sigma) for a in s.lifted(N)))


def is_sigma_invariant(s: SatakeParams, sigma: int, N: Optional[int] = None) -> bool:
    return sigma_twist_satake(s, sigma, N).same_multiset(s)


def rationality_compositum(params: Sequence[SatakeParams]) -> CyclotomicSubfield:
    return compositum([local_rationality_field(s) for s in params])
