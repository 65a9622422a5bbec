"""Exact integer polynomials in one variable X."""

from __future__ import annotations

from typing import Iterable, Mapping

from .errors import InexactDivision


class IntPolynomial:
    """Sparse integer polynomial, stored as ``{degree: coefficient}`` without zeros."""

    __slots__ = ("_c",)

    def __init__(self, coefficients: Mapping[int, int] | None = None):
        c = {}
        for deg, coef in (coefficients or {}).items():
            if deg < 0:
                raise ValueError(f"negative degree {deg}")
            coef = int(coef)
            if coef:
                c[int(deg)] = coef
        self._c = c

    @classmethod
    def from_list(cls, coefficients: Iterable[int]) -> "IntPolynomial":
        """Dense coefficients, constant term first."""
        return cls(dict(enumerate(coefficients)))

    @classmethod
    def monomial(cls, degree: int, coef: int = 1) -> "IntPolynomial":
        return cls({degree: coef})

    @classmethod
    def one(cls) -> "IntPolynomial":
        return cls({0: 1})

    @property
    def coefficients(self) -> dict[int, int]:
        return dict(sorted(self._c.items()))

    def is_zero(self) -> bool:
        return not self._c

    def degree(self) -> int:
        if not self._c:
            return -1
        return max(self._c)

    def min_degree(self) -> int:
        if not self._c:
            return -1
        return min(self._c)

    def __getitem__(self, deg: int) -> int:
        return self._c.get(deg, 0)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = IntPolynomial({0: other})
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(frozenset(self._c.items()))

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        c = dict(self._c)
        for d, v in other._c.items():
            c[d] = c.get(d, 0) + v
        return IntPolynomial(c)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial({d: -v for d, v in self._c.items()})

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other) -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial({d: v * other for d, v in self._c.items()})
        c: dict[int, int] = {}
        for d1, v1 in self._c.items():
            for d2, v2 in other._c.items():
                c[d1 + d2] = c.get(d1 + d2, 0) + v1 * v2
        return IntPolynomial(c)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "IntPolynomial":
        out = IntPolynomial.one()
        for _ in range(e):
            out = out * self
        return out

    def divmod(self, divisor: "IntPolynomial") -> tuple["IntPolynomial", "IntPolynomial"]:
        """Long division; the leading coefficient of ``divisor`` must be +-1."""
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        lead_deg = divisor.degree()
        lead = divisor[lead_deg]
        if lead not in (1, -1):
            raise ValueError("divisor must be monic up to sign")
        rem = dict(self._c)
        quot: dict[int, int] = {}
        while rem and max(rem) >= lead_deg:
            top = max(rem)
            q = rem[top] * lead
            shift = top - lead_deg
            quot[shift] = q
            for d, v in divisor._c.items():
                rem[d + shift] = rem.get(d + shift, 0) - q * v
                if rem[d + shift] == 0:
                    del rem[d + shift]
        return IntPolynomial(quot), IntPolynomial(rem)

    def exact_div(self, divisor: "IntPolynomial") -> "IntPolynomial":
        q, r = self.divmod(divisor)
        if not r.is_zero():
            raise InexactDivision(f"({self}) / ({divisor}) leaves remainder {r}")
        return q

    def __call__(self, x):
        return sum(v * x**d for d, v in self._c.items())

    def to_json(self) -> dict[str, int]:
        return {str(d): v for d, v in sorted(self._c.items())}

    @classmethod
    def from_json(cls, data: Mapping[str, int]) -> "IntPolynomial":
        return cls({int(d): int(v) for d, v in data.items()})

    def __str__(self) -> str:
        if not self._c:
            return "0"
        out = []
        for d, v in sorted(self._c.items()):
            mag = abs(v)
            if d == 0:
                body = str(mag)
            else:
                mono = "X" if d == 1 else f"X^{d}"
                body = mono if mag == 1 else f"{mag}{mono}"
            if not out:
                out.append(body if v > 0 else "-" + body)
            else:
                out.append(("+ " if v > 0 else "- ") + body)
        return " ".join(out)

    def __repr__(self) -> str:
        return f"IntPolynomial({self.coefficients})"


X = IntPolynomial.monomial(1)
ONE = IntPolynomial.one()
