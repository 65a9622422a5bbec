"""Exact arithmetic in cyclotomic fields Q(zeta_N) and their subfields.

Elements are stored in the power basis 1, zeta, ..., zeta^(phi(N)-1) modulo
the N-th cyclotomic polynomial. Subfields are fixed fields of subgroups of
(Z/N)^*, acting by sigma_a(zeta) = zeta^a.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Mapping, Sequence, Union

from .errors import AqjlError
from .polynomial import IntPolynomial

Rational = Union[int, Fraction]


def lcm(*values: int) -> int:
    out = 1
    for v in values:
        out = out * v // gcd(out, v)
    return out


def units(N: int) -> tuple[int, ...]:
    """Representatives of (Z/N)^*; for N = 1 this is (0,)."""
    return tuple(a for a in range(N) if gcd(a, N) == 1)


def euler_phi(N: int) -> int:
    return len(units(N))


def _divisors(N: int) -> list[int]:
    return [d for d in range(1, N + 1) if N % d == 0]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(N: int) -> IntPolynomial:
    if N < 1:
        raise AqjlError(f"conductor must be positive, got {N}")
    poly = IntPolynomial({N: 1, 0: -1})
    for d in _divisors(N)[:-1]:
        poly = poly.exact_div(cyclotomic_polynomial(d))
    return poly


@lru_cache(maxsize=None)
def _power_table(N: int) -> tuple[tuple[int, ...], ...]:
    """Row e holds the coordinates of zeta_N^e, 0 <= e < N."""
    phi = euler_phi(N)
    cyc = cyclotomic_polynomial(N).coefficients
    rows = []
    vec = [1] + [0] * (phi - 1)
    for _ in range(N):
        rows.append(tuple(vec))
        # multiply by zeta and reduce zeta^phi = -sum_{i<phi} c_i zeta^i
        top = vec[-1]
        vec = [0] + vec[:-1]
        if top:
            for i in range(phi):
                vec[i] -= top * cyc.get(i, 0)
    return tuple(rows)


def _mobius(n: int) -> int:
    out, p, m = 1, 2, n
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            out = -out
        p += 1
    return -out if m > 1 else out


class CyclotomicNumber:
    __slots__ = ("N", "coords")

    def __init__(self, N: int, coords: Sequence[Rational]):
        phi = euler_phi(N)
        if len(coords) != phi:
            raise AqjlError(f"Q(zeta_{N}) has degree {phi}, got {len(coords)} coordinates")
        self.N = N
        self.coords = tuple(Fraction(c) for c in coords)

    # constructors
    @classmethod
    def rational(cls, x: Rational, N: int = 1) -> "CyclotomicNumber":
        return cls(N, [Fraction(x)] + [Fraction(0)] * (euler_phi(N) - 1))

    @classmethod
    def zeta(cls, N: int, e: int = 1) -> "CyclotomicNumber":
        return cls(N, _power_table(N)[e % N])

    @classmethod
    def from_powers(cls, N: int, powers: Mapping[int, Rational]) -> "CyclotomicNumber":
        """Sum of c * zeta_N^e over ``powers`` = {e: c}; any exponents allowed."""
        table = _power_table(N)
        acc = [Fraction(0)] * euler_phi(N)
        for e, c in powers.items():
            c = Fraction(c)
            for i, v in enumerate(table[e % N]):
                if v:
                    acc[i] += c * v
        return cls(N, acc)

    # conductor changes
    def lift(self, M: int) -> "CyclotomicNumber":
        if M % self.N:
            raise AqjlError(f"cannot lift from conductor {self.N} to {M}")
        if M == self.N:
            return self
        step = M // self.N
        return CyclotomicNumber.from_powers(M, {i * step: c for i, c in enumerate(self.coords) if c})

    def _common(self, other) -> tuple["CyclotomicNumber", "CyclotomicNumber"]:
        if not isinstance(other, CyclotomicNumber):
            other = CyclotomicNumber.rational(Fraction(other), self.N)
        M = lcm(self.N, other.N)
        return self.lift(M), other.lift(M)

    # arithmetic
    def __add__(self, other) -> "CyclotomicNumber":
        a, b = self._common(other)
        return CyclotomicNumber(a.N, [x + y for x, y in zip(a.coords, b.coords)])

    __radd__ = __add__

    def __neg__(self) -> "CyclotomicNumber":
        return CyclotomicNumber(self.N, [-x for x in self.coords])

    def __sub__(self, other) -> "CyclotomicNumber":
        return self + (-other)

    def __rsub__(self, other) -> "CyclotomicNumber":
        return (-self) + other

    def __mul__(self, other) -> "CyclotomicNumber":
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber(self.N, [x * other for x in self.coords])
        a, b = self._common(other)
        table = _power_table(a.N)
        acc = [Fraction(0)] * len(a.coords)
        for i, x in enumerate(a.coords):
            if not x:
                continue
            for j, y in enumerate(b.coords):
                if not y:
                    continue
                xy = x * y
                for t, v in enumerate(table[(i + j) % a.N]):
                    if v:
                        acc[t] += xy * v
        return CyclotomicNumber(a.N, acc)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "CyclotomicNumber":
        if e < 0:
            raise AqjlError("negative powers are not supported")
        out = CyclotomicNumber.rational(1, self.N)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def galois(self, a: int) -> "CyclotomicNumber":
        """sigma_a: zeta_N -> zeta_N^a, for a prime to N."""
        if gcd(a, self.N) != 1:
            raise AqjlError(f"{a} is not a unit mod {self.N}")
        return CyclotomicNumber.from_powers(
            self.N, {(a * i) % self.N: c for i, c in enumerate(self.coords) if c}
        )

    # predicates
    def is_zero(self) -> bool:
        return not any(self.coords)

    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def normalized_trace(self) -> Fraction:
        """Tr(x) / phi(N); does not depend on the conductor used."""
        total = Fraction(0)
        for i, c in enumerate(self.coords):
            if c:
                g = self.N // gcd(i, self.N)
                total += c * Fraction(_mobius(g), euler_phi(g))
        return total

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = CyclotomicNumber.rational(other, self.N)
        if not isinstance(other, CyclotomicNumber):
            return NotImplemented
        a, b = self._common(other)
        return a.coords == b.coords

    def __hash__(self) -> int:
        return hash(self.normalized_trace())

    # serialization
    def to_json(self) -> dict:
        return {
            "N": self.N,
            "coords": {str(i): str(c) for i, c in enumerate(self.coords) if c},
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "CyclotomicNumber":
        try:
            N = int(data["N"])
            raw = data.get("coords", {})
            powers = {int(i): Fraction(str(c)) for i, c in raw.items()}
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise AqjlError(f"bad cyclotomic number: {data!r}") from exc
        if N < 1:
            raise AqjlError(f"conductor must be positive, got {N}")
        # coordinates outside the basis range are read as powers of zeta
        return cls.from_powers(N, powers)

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coords):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mono = f"z{self.N}" if i == 1 else f"z{self.N}^{i}"
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(terms) if terms else "0"

    def __repr__(self) -> str:
        return f"CyclotomicNumber({self.N}, {[str(c) for c in self.coords]})"


def zeta(N: int, e: int = 1) -> CyclotomicNumber:
    return CyclotomicNumber.zeta(N, e)


def common_conductor(values: Iterable[CyclotomicNumber]) -> int:
    return lcm(*(v.N for v in values))


def subgroup_closure(N: int, gens: Iterable[int]) -> frozenset[int]:
    group = {1 % N}
    frontier = list(group)
    gens = [g % N for g in gens]
    for g in gens:
        if gcd(g, N) != 1:
            raise AqjlError(f"{g} is not a unit mod {N}")
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = x * g % N
            if y not in group:
                group.add(y)
                frontier.append(y)
    return frozenset(group)


class CyclotomicSubfield:
    """The fixed field Q(zeta_N)^H."""

    __slots__ = ("N", "H")

    def __init__(self, N: int, H: Iterable[int]):
        H = frozenset(h % N for h in H)
        if N < 1:
            raise AqjlError(f"conductor must be positive, got {N}")
        if not H or subgroup_closure(N, H) != H:
            raise AqjlError(f"{sorted(H)} is not a subgroup of (Z/{N})^*")
        self.N = N
        self.H = H

    @classmethod
    def from_gens(cls, N: int, gens: Iterable[int]) -> "CyclotomicSubfield":
        return cls(N, subgroup_closure(N, gens))

    @classmethod
    def rationals(cls) -> "CyclotomicSubfield":
        return cls(1, (0,))

    @classmethod
    def full(cls, N: int) -> "CyclotomicSubfield":
        return cls(N, (1 % N,))

    @property
    def degree(self) -> int:
        return euler_phi(self.N) // len(self.H)

    def is_rationals(self) -> bool:
        return self.degree == 1

    def gens(self) -> list[int]:
        """Greedy generating set: smallest elements not yet generated."""
        out: list[int] = []
        have = subgroup_closure(self.N, [])
        for h in sorted(self.H):
            if h not in have:
                out.append(h)
                have = subgroup_closure(self.N, out)
        return out

    def lift(self, M: int) -> "CyclotomicSubfield":
        if M % self.N:
            raise AqjlError(f"cannot lift from conductor {self.N} to {M}")
        return CyclotomicSubfield(M, (a for a in units(M) if a % self.N in self.H))

    def reduced(self) -> "CyclotomicSubfield":
        """The same field over its smallest conductor."""
        U = units(self.N)
        for d in _divisors(self.N):
            kernel = [a for a in U if a % d == 1 % d]
            if all(a in self.H for a in kernel):
                return CyclotomicSubfield(d, {h % d for h in self.H} if d > 1 else (0,))
        return self

    def contains(self, x: CyclotomicNumber) -> bool:
        M = lcm(self.N, x.N)
        big = self.lift(M)
        y = x.lift(M)
        return all(y.galois(h) == y for h in big.H)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CyclotomicSubfield):
            return NotImplemented
        M = lcm(self.N, other.N)
        return self.lift(M).H == other.lift(M).H

    def __hash__(self) -> int:
        return hash(self.degree)

    def to_json(self) -> dict:
        return {"N": self.N, "gens": self.gens()}

    @classmethod
    def from_json(cls, data: Mapping) -> "CyclotomicSubfield":
        try:
            return cls.from_gens(int(data["N"]), [int(g) for g in data.get("gens", [])])
        except (KeyError, TypeError, ValueError) as exc:
            raise AqjlError(f"bad subfield: {data!r}") from exc

    def __str__(self) -> str:
        if self.is_rationals():
            return "Q"
        if len(self.H) == 1:
            return f"Q(zeta_{self.N})"
        return f"Q(zeta_{self.N})^<{','.join(map(str, self.gens()))}>"

    def __repr__(self) -> str:
        return f"CyclotomicSubfield(N={self.N}, gens={self.gens()})"


def generated_field(values: Sequence[Union[CyclotomicNumber, Rational]]) -> CyclotomicSubfield:
    """Q(values): fixed field of the common stabilizer."""
    if not values:
        return CyclotomicSubfield.rationals()
    values = [v if isinstance(v, CyclotomicNumber) else CyclotomicNumber.rational(v) for v in values]
    N = common_conductor(values)
    lifted = [v.lift(N) for v in values]
    H = [a for a in units(N) if all(v.galois(a) == v for v in lifted)]
    return CyclotomicSubfield(N, H).reduced()


def compositum(fields: Sequence[CyclotomicSubfield]) -> CyclotomicSubfield:
    if not fields:
        return CyclotomicSubfield.rationals()
    M = lcm(*(f.N for f in fields))
    H = frozenset(units(M))
    for f in fields:
        H &= f.lift(M).H
    return CyclotomicSubfield(M, H).reduced()
