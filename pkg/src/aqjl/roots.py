"""Root data of gl_2k(C) relative to the theta-stable Cartan, split by k/p.

Both real forms GL_n(R) (n = 2k) and GL_k(H) share the root set
{+-e_i +- e_j +- (f_i - f_j)} u {+-2e_i}. They differ in which roots are
noncompact. Multiplicity convention used for counting weights in p:

* e_i +- e_j (i < j) occurs twice (the two f-variants); one copy is put in
  p and one in k, for both groups.
* 2e_i lies in p for GL_n(R) and in k for GL_k(H).

The f-parts never enter any downstream quantity except these counts.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .errors import AqjlError
from .partitions import OrderedPartition, block_assignment


@dataclass(frozen=True)
class GroupKind:
    """``tag`` is "R" for GL_n(R) or "H" for GL_k(H); ``size`` is n or k."""

    tag: str
    size: int

    def __post_init__(self) -> None:
        if self.tag not in ("R", "H"):
            raise AqjlError(f"unknown group kind {self.tag!r}")
        if self.size < 1:
            raise AqjlError(f"group size must be positive, got {self.size}")

    @classmethod
    def split_real(cls, n: int) -> "GroupKind":
        return cls("R", n)

    @classmethod
    def quaternionic(cls, k: int) -> "GroupKind":
        return cls("H", k)

    @property
    def is_split(self) -> bool:
        return self.tag == "R"

    @property
    def k(self) -> int:
        if self.is_split:
            if self.size % 2:
                raise AqjlError(f"GL_{self.size}(R) has odd n; no quaternionic partner")
            return self.size // 2
        return self.size

    @property
    def n(self) -> int:
        return self.size if self.is_split else 2 * self.size

    def __str__(self) -> str:
        return f"GL_{self.size}(R)" if self.is_split else f"GL_{self.size}(H)"


SplitReal = GroupKind.split_real
Quaternionic = GroupKind.quaternionic


@dataclass(frozen=True)
class Root:
    e_coeffs: tuple[int, ...]
    f_part: int  # sign of the (f_i - f_j) term, 0 for +-2e_i

    @property
    def is_long(self) -> bool:
        return self.f_part == 0


def all_roots(k: int) -> list[Root]:
    out = []
    for i, j in combinations(range(k), 2):
        for si in (1, -1):
            for sj in (1, -1):
                e = [0] * k
                e[i], e[j] = si, sj
                for sf in (1, -1):
                    out.append(Root(tuple(e), sf))
    for i in range(k):
        for s in (2, -2):
            e = [0] * k
            e[i] = s
            out.append(Root(tuple(e), 0))
    return out


def k_partition(p: OrderedPartition, kind: GroupKind) -> OrderedPartition:
    """Bring ``p`` to a partition of k.

    On the split side a partition of n = 2k is halved; a partition that
    already sums to k is accepted as is.
    """
    k = kind.k
    if p.total == k:
        return p
    if kind.is_split and p.total == kind.n:
        return p.halved()
    raise AqjlError(f"{p} is not a partition for {kind}")


def in_p(root: Root, kind: GroupKind) -> bool:
    if root.is_long:
        return kind.is_split
    return root.f_part == 1


@lru_cache(maxsize=None)
def _u_roots(parts: tuple[int, ...]) -> tuple[Root, ...]:
    p = OrderedPartition(parts)
    b = block_assignment(p).values
    return tuple(r for r in all_roots(p.total) if sum(c * x for c, x in zip(r.e_coeffs, b)) > 0)


def u_roots(p: OrderedPartition, kind: GroupKind) -> list[Root]:
    """Roots alpha with alpha(x) > 0, x the block label vector of ``p``."""
    return list(_u_roots(k_partition(p, kind).parts))


def dim_u_cap_p(p: OrderedPartition, kind: GroupKind) -> int:
    return sum(1 for r in u_roots(p, kind) if in_p(r, kind))


def rho_u(p: OrderedPartition, kind: GroupKind) -> tuple[Fraction, ...]:
    """e-coordinates of half the sum of the roots in u, with multiplicity."""
    kp = k_partition(p, kind)
    total = [0] * kp.total
    for r in _u_roots(kp.parts):
        for i, c in enumerate(r.e_coeffs):
            total[i] += c
    return tuple(Fraction(t, 2) for t in total)
