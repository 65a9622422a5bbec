"""Highest weights, essential self-duality, block weights and sigma-twists."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Hashable, Mapping, Optional, Sequence, Union

from .errors import AqjlError, NotSelfDual
from .partitions import OrderedPartition, block_assignment
from .roots import Quaternionic, u_roots


@dataclass(frozen=True)
class HighestWeight:
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        entries = tuple(int(x) for x in self.entries)
        object.__setattr__(self, "entries", entries)
        if not entries:
            raise AqjlError("empty highest weight")
        if any(a < b for a, b in zip(entries, entries[1:])):
            raise AqjlError(f"highest weight must be non-increasing: {list(entries)}")

    @property
    def n(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def to_json(self) -> list[int]:
        return list(self.entries)


@dataclass(frozen=True)
class ComplexWeight:
    """A pair (mu_iota, mu_iotabar) at a complex place."""

    iota: HighestWeight
    iota_bar: HighestWeight

    def to_json(self) -> list[list[int]]:
        return [self.iota.to_json(), self.iota_bar.to_json()]


WeightLike = Union[HighestWeight, Sequence[int]]


def as_weight(mu: WeightLike) -> HighestWeight:
    return mu if isinstance(mu, HighestWeight) else HighestWeight(tuple(mu))


@dataclass(frozen=True)
class SelfDualData:
    """Block weight lambda_j = mu_j - mu_{n+1-j} together with the twist w."""

    w: int
    lam: tuple[int, ...]

    def __post_init__(self) -> None:
        lam = tuple(int(x) for x in self.lam)
        object.__setattr__(self, "lam", lam)
        if any(a < b for a, b in zip(lam, lam[1:])) or (lam and lam[-1] < 0):
            raise AqjlError(f"lambda must be non-increasing and >= 0: {list(lam)}")
        if any((x - self.w) % 2 for x in lam):
            raise AqjlError(f"lambda entries must have the parity of w={self.w}: {list(lam)}")

    @property
    def k(self) -> int:
        return len(self.lam)

    def highest_weight(self) -> HighestWeight:
        """The unique mu with this (w, lambda)."""
        top = [(self.w + x) // 2 for x in self.lam]
        bottom = [(self.w - x) // 2 for x in reversed(self.lam)]
        return HighestWeight(tuple(top + bottom))

    @classmethod
    def zero(cls, k: int) -> "SelfDualData":
        return cls(0, (0,) * k)


def essentially_selfdual(mu: WeightLike) -> Optional[int]:
    e = as_weight(mu).entries
    n = len(e)
    sums = {e[i] + e[n - 1 - i] for i in range(n)}
    return sums.pop() if len(sums) == 1 else None


def is_regular(mu: WeightLike) -> bool:
    e = as_weight(mu).entries
    return all(a > b for a, b in zip(e, e[1:]))


def selfdual_data(mu: WeightLike) -> SelfDualData:
    mu = as_weight(mu)
    w = essentially_selfdual(mu)
    if w is None:
        raise NotSelfDual(f"{list(mu)} is not essentially self-dual")
    if mu.n % 2:
        raise NotSelfDual(f"n = {mu.n} is odd")
    k = mu.n // 2
    return SelfDualData(w, tuple(mu[j] - mu[mu.n - 1 - j] for j in range(k)))


def is_admissible(data: SelfDualData, p: OrderedPartition) -> bool:
    """lambda is constant on each block of ``p`` and vanishes on the zero block."""
    if p.total != data.k:
        raise AqjlError(f"partition {p} does not match lambda of length {data.k}")
    b = block_assignment(p).values
    seen: dict[int, int] = {}
    for label, x in zip(b, data.lam):
        if seen.setdefault(label, x) != x:
            return False
    if seen.get(0, 0) != 0:
        return False
    # positivity on u follows from dominance; guard against convention drift
    assert all(
        sum(c * x for c, x in zip(r.e_coeffs, data.lam)) >= 0
        for r in u_roots(p, Quaternionic(data.k))
    ), (data, p)
    return True


def ell_vector(mu: WeightLike) -> tuple[int, tuple[int, ...]]:
    mu = as_weight(mu)
    data = selfdual_data(mu)
    n = mu.n
    ell = tuple(mu[i] - mu[n - 1 - i] + (n - 2 * i - 1) for i in range(data.k))
    assert all(a > b for a, b in zip(ell, ell[1:])) and ell[-1] >= 1, ell
    return data.w, ell


Place = Hashable


def sigma_twist_weight(
    mu_tuple: Mapping[Place, object], sigma: Mapping[Place, Place]
) -> dict[Place, object]:
    """Component at v of the result is the input component at sigma^{-1}(v)."""
    if set(sigma) != set(mu_tuple) or set(sigma.values()) != set(mu_tuple):
        raise AqjlError("sigma must be a bijection of the place set")
    return {sigma[v]: mu_tuple[v] for v in mu_tuple}


def twist_stabilizer(mu_tuple: Mapping[Place, object]) -> list[dict[Place, Place]]:
    """All place permutations fixing ``mu_tuple`` (brute force)."""
    places = list(mu_tuple)
    out = []
    for image in permutations(places):
        sigma = dict(zip(places, image))
        if sigma_twist_weight(mu_tuple, sigma) == dict(mu_tuple):
            out.append(sigma)
    return out


def parse_weight(text: str, n: Optional[int] = None) -> HighestWeight:
    """Comma-separated integers; a bare ``0`` means the zero weight of length n."""
    text = text.strip().strip("[]")
    try:
        entries = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError as exc:
        raise AqjlError(f"not a weight: {text!r}") from exc
    if entries == [0] and n is not None and n > 1:
        entries = [0] * n
    if n is not None and len(entries) != n:
        raise AqjlError(f"weight {entries} should have {n} entries")
    return HighestWeight(tuple(entries))
