"""Ordered partitions [k_0, k_1, ..., k_r] indexing theta-stable parabolics.

Coordinates are indexed by e_1, ..., e_k. The block label vector is
non-increasing in that index: e_1 sits in the top block r and the final
k_0 coordinates sit in the zero block.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Optional

from .errors import InvalidPartition, OddPart


@dataclass(frozen=True, order=True)
class OrderedPartition:
    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if not parts:
            raise InvalidPartition("a partition needs at least the k_0 entry")
        if parts[0] < 0:
            raise InvalidPartition(f"k_0 must be >= 0, got {parts[0]}")
        if any(p <= 0 for p in parts[1:]):
            raise InvalidPartition(f"k_i must be > 0 for i >= 1, got {list(parts)}")
        if sum(parts) == 0:
            raise InvalidPartition("partition of zero")

    @classmethod
    def of(cls, parts: Iterable[int]) -> "OrderedPartition":
        return cls(tuple(parts))

    @property
    def total(self) -> int:
        return sum(self.parts)

    @property
    def r(self) -> int:
        return len(self.parts) - 1

    @property
    def zero_block(self) -> int:
        return self.parts[0]

    def doubled(self) -> "OrderedPartition":
        return OrderedPartition(tuple(2 * p for p in self.parts))

    def halved(self) -> "OrderedPartition":
        odd = [p for p in self.parts if p % 2]
        if odd:
            raise OddPart(f"cannot halve {self}: odd parts {odd}")
        return OrderedPartition(tuple(p // 2 for p in self.parts))

    def to_json(self) -> list[int]:
        return list(self.parts)

    def __str__(self) -> str:
        return "[" + ",".join(str(p) for p in self.parts) + "]"


@dataclass(frozen=True)
class BlockAssignment:
    values: tuple[int, ...]

    def sizes(self) -> tuple[int, ...]:
        """Recover [k_0, ..., k_r] from the label vector."""
        r = max(self.values, default=0)
        return tuple(self.values.count(i) for i in range(r + 1))


def enumerate_partitions(k: int) -> list[OrderedPartition]:
    """All ordered partitions of ``k`` in lexicographic order of parts.

    There are 2^k of them: choose k_0, then a composition of k - k_0.
    """
    if k < 1:
        raise InvalidPartition(f"k must be >= 1, got {k}")
    out = []
    for k0 in range(k + 1):
        rest = k - k0
        if rest == 0:
            out.append(OrderedPartition((k0,)))
            continue
        # compositions of rest <-> subsets of the rest-1 cut points
        for cuts in product((False, True), repeat=rest - 1):
            comp, run = [], 1
            for cut in cuts:
                if cut:
                    comp.append(run)
                    run = 1
                else:
                    run += 1
            comp.append(run)
            out.append(OrderedPartition((k0, *comp)))
    out.sort()
    return out


def block_assignment(p: OrderedPartition) -> BlockAssignment:
    values: list[int] = []
    for label in range(p.r, -1, -1):
        values.extend([label] * p.parts[label])
    return BlockAssignment(tuple(values))


def equivalent_partition(p: OrderedPartition) -> Optional[OrderedPartition]:
    """Partner of ``p`` under [0,1,k_2,...,k_r] ~ [1,k_2,...,k_r], if any.

    Only meaningful on the quaternionic side; for GL_n(R) the relation is
    equality.
    """
    parts = p.parts
    if len(parts) >= 2 and parts[0] == 0 and parts[1] == 1:
        return OrderedPartition((1, *parts[2:]))
    if parts[0] == 1:
        return OrderedPartition((0, 1, *parts[1:]))
    return None


def canonical_representative(p: OrderedPartition) -> OrderedPartition:
    partner = equivalent_partition(p)
    if partner is not None and p.parts[0] == 1:
        return partner
    return p


def parse_partition(text: str) -> OrderedPartition:
    """Parse ``"0,1,1"`` or ``"[0,1,1]"``."""
    stripped = text.strip().strip("[]")
    try:
        parts = tuple(int(tok) for tok in stripped.split(",") if tok.strip())
    except ValueError as exc:
        raise InvalidPartition(f"not a partition: {text!r}") from exc
    return OrderedPartition(parts)
