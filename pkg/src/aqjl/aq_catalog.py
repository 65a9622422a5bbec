"""Cohomological unitary duals of GL_k(H) and GL_n(R) as A_q(lambda)-modules.

An :class:`AqModule` stands for A_q(lambda) (x) sgn^eps (x) |det|^{-w/2}, the
twist w being carried by its :class:`SelfDualData`.
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Mapping, Optional

from .errors import AqjlError, UnsupportedSplitPartition
from .partitions import (
    OrderedPartition,
    block_assignment,
    canonical_representative,
    enumerate_partitions,
)
from .polynomial import ONE, X, IntPolynomial
from .reps import BasicRep, D, DetPrime, F, SgnDet, fmt_rational
from .roots import GroupKind, Quaternionic, dim_u_cap_p, k_partition, rho_u
from .weights import SelfDualData, WeightLike, as_weight, is_admissible, selfdual_data

log = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class AqModule:
    kind: GroupKind
    partition: OrderedPartition
    lam: SelfDualData
    eps: int = 0

    def __post_init__(self) -> None:
        if self.partition.total != self.kind.size:
            raise AqjlError(f"partition {self.partition} does not sum to {self.kind.size}")
        if self.eps not in (0, 1):
            raise AqjlError(f"eps must be 0 or 1, got {self.eps}")
        if not self.kind.is_split and self.eps:
            raise AqjlError("GL_k(H) modules carry no sign twist")
        kp = k_partition(self.partition, self.kind)  # OddPart on the split side
        if self.lam.k != kp.total:
            raise AqjlError(f"lambda has length {self.lam.k}, expected {kp.total}")
        if not is_admissible(self.lam, kp):
            raise AqjlError(f"lambda={list(self.lam.lam)} is not admissible for {self.partition}")
        # A_q(lambda) (x) sgn = A_q(lambda) exactly when n_0 = 0
        if self.kind.is_split and self.partition.zero_block == 0:
            object.__setattr__(self, "eps", 0)

    @property
    def k_partition(self) -> OrderedPartition:
        return k_partition(self.partition, self.kind)

    @property
    def w(self) -> int:
        return self.lam.w

    def canonical(self) -> "AqModule":
        if self.kind.is_split:
            return self
        return AqModule(self.kind, canonical_representative(self.partition), self.lam, 0)

    def _key(self):
        part = self.partition if self.kind.is_split else canonical_representative(self.partition)
        return (self.kind, part, self.lam, self.eps)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AqModule):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        eps = f", eps={self.eps}" if self.kind.is_split else ""
        return f"AqModule({self.kind}, {self.partition}, lam={list(self.lam.lam)}, w={self.w}{eps})"


@dataclass(frozen=True)
class ComplexBlock:
    l: int
    u: Fraction


@dataclass(frozen=True)
class InductionDatum:
    """Langlands data of an A_q(lambda)-module.

    ``complex_blocks`` lists one (l, u) per coordinate outside the zero block,
    top block first; ``block_sizes`` records how they group into GL_{k_i}(C)
    factors. The anisotropic part is given by its exponents: det'-exponents
    (one per GL_1(H)) on the quaternionic side, |.|-exponents (one per
    GL_1(R)) on the split side. The twist -w/2 is already folded in.
    """

    kind: GroupKind
    complex_blocks: tuple[ComplexBlock, ...]
    block_sizes: tuple[int, ...]
    anisotropic_size: int
    anisotropic_exponents: tuple[Fraction, ...]
    sign: int
    twist: Fraction

    def basic_reps(self) -> tuple[BasicRep, ...]:
        """Rank-one pieces: one per GL_2(R) resp. GL_1(H) factor of the minimal Levi."""
        if self.kind.is_split:
            out: list[BasicRep] = [D(b.u, b.l) for b in self.complex_blocks]
            t = self.anisotropic_exponents
            out += [SgnDet(self.sign, (t[i] + t[i + 1]) / 2) for i in range(0, len(t), 2)]
        else:
            out = [F(b.u, b.l) for b in self.complex_blocks]
            out += [DetPrime(s) for s in self.anisotropic_exponents]
        return tuple(out)

    def label(self) -> str:
        """Induced-representation label in the style of the k=2 tables."""
        pieces = [str(D(b.u, b.l) if self.kind.is_split else F(b.u, b.l)) for b in self.complex_blocks]
        if self.anisotropic_size:
            pieces.append(self._anisotropic_label())
        if not self.complex_blocks:
            return pieces[0]
        body = "⊗".join(pieces)
        if any(s > 1 for s in self.block_sizes):
            return f"J({body})"
        return f"Ind[{body}]"

    def _anisotropic_label(self) -> str:
        m = self.anisotropic_size
        if self.kind.is_split:
            base = "sgn" if self.sign else f"1_GL{m}(R)"
            twist = f"|det|^{fmt_rational(self.twist)}"
        else:
            base = f"1_GL{m}(H)"
            twist = f"det'^{fmt_rational(self.twist)}"
        return base if self.twist == 0 else base + twist

    def to_json(self) -> dict[str, Any]:
        data: dict[str, Any] = {
            "blocks": [{"l": b.l, "u": _num(b.u)} for b in self.complex_blocks],
            "block_sizes": list(self.block_sizes),
        }
        if self.anisotropic_size:
            data["anisotropic"] = {
                "size": self.anisotropic_size,
                "exponents": [_num(x) for x in self.anisotropic_exponents],
                "sign": self.sign,
            }
        return data


def _num(x: Fraction):
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else fmt_rational(x)


def catalog_order(p: OrderedPartition) -> tuple:
    """Row order of the tables: tempered first, trivial last."""
    return (-dim_u_cap_p(p, Quaternionic(p.total)), p.parts)


def enumerate_coh(
    kind: GroupKind,
    mu: WeightLike,
    *,
    canonical: bool = True,
    workers: Optional[int] = None,
) -> list[AqModule]:
    """The cohomological unitary dual Coh_mu of ``kind``.

    With ``canonical=False`` the quaternionic list keeps one row per
    admissible partition, so that [1, ...] and its partner [0, 1, ...] both
    appear (they are the same module).
    """
    mu = as_weight(mu)
    if mu.n != kind.n:
        raise AqjlError(f"weight of length {mu.n} does not fit {kind}")
    try:
        data = selfdual_data(mu)
    except AqjlError:
        log.info("mu=%s is not essentially self-dual; Coh_mu(%s) is empty", list(mu), kind)
        return []

    candidates = enumerate_partitions(kind.k)
    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            flags = list(pool.map(lambda q: is_admissible(data, q), candidates))
    else:
        flags = [is_admissible(data, q) for q in candidates]
    admissible = sorted((q for q, ok in zip(candidates, flags) if ok), key=catalog_order)

    out = []
    for q in admissible:
        if kind.is_split:
            part = q.doubled()
            for eps in ((0, 1) if part.zero_block else (0,)):
                out.append(AqModule(kind, part, data, eps))
        else:
            if canonical and canonical_representative(q) != q:
                continue
            out.append(AqModule(kind, q, data, 0))
    return out


def is_tempered(m: AqModule) -> bool:
    parts = m.partition.parts
    one = 2 if m.kind.is_split else 1
    return parts[0] == 0 and all(x == one for x in parts[1:])


def _levi_product(q: OrderedPartition) -> IntPolynomial:
    out = ONE
    for ki in q.parts[1:]:
        for j in range(1, ki + 1):
            out = out * (ONE + X ** (2 * j - 1))
    return out


def poincare(m: AqModule) -> IntPolynomial:
    q = m.k_partition
    shift = X ** dim_u_cap_p(m.partition, m.kind)
    if m.kind.is_split:
        if q.zero_block:
            raise UnsupportedSplitPartition(
                f"no closed Poincare polynomial for {m.partition} on {m.kind} (n_0 > 0)"
            )
        poly = (shift * _levi_product(q)).exact_div(ONE + X)
        return poly * 2 if is_tempered(m) else poly
    anis = ONE
    for j in range(1, q.zero_block + 1):
        anis = anis * (ONE + X ** (4 * j - 3))
    return (shift * _levi_product(q) * anis).exact_div(ONE + X)


def cohomology_dims(m: AqModule, mu: WeightLike) -> dict[int, int]:
    if selfdual_data(mu) != m.lam:
        raise AqjlError(f"mu={list(as_weight(mu))} does not match the module's lambda")
    return poincare(m).coefficients


def langlands_data(m: AqModule) -> InductionDatum:
    q = m.k_partition
    b = block_assignment(q).values
    rho = rho_u(q, Quaternionic(q.total))
    w = Fraction(m.w)
    blocks: list[ComplexBlock] = []
    sizes: list[int] = []
    j = 0
    for label in range(q.r, 0, -1):
        size = q.parts[label]
        sizes.append(size)
        for i in range(size):
            assert b[j] == label
            l_j = m.lam.lam[j] + rho[j]
            assert l_j.denominator == 1 and l_j >= 1, (m, j, l_j)
            # nu-shift (size-1)/2 - i of rho_{gl_size(C)} becomes u = -2 * shift
            blocks.append(ComplexBlock(int(l_j), w - (size - 1) + 2 * i))
            j += 1
    k0 = q.zero_block
    if m.kind.is_split:
        n0 = 2 * k0
        exps = tuple(Fraction(n0 + 1 - 2 * i, 2) - w / 2 for i in range(1, n0 + 1))
        size0 = n0
    else:
        exps = tuple(Fraction(k0 + 1 - 2 * i) - w / 2 for i in range(1, k0 + 1))
        size0 = k0
    return InductionDatum(
        kind=m.kind,
        complex_blocks=tuple(blocks),
        block_sizes=tuple(sizes),
        anisotropic_size=size0,
        anisotropic_exponents=exps,
        sign=m.eps if m.kind.is_split else 0,
        twist=-w / 2,
    )


def module_to_row(m: AqModule) -> dict[str, Any]:
    try:
        poly: Optional[dict[str, int]] = poincare(m).to_json()
    except UnsupportedSplitPartition:
        poly = None
    datum = langlands_data(m)
    row: dict[str, Any] = {
        "kind": m.kind.tag,
        "partition": m.partition.to_json(),
        "lambda": list(m.lam.lam),
        "w": m.w,
        "eps": m.eps,
        "tempered": is_tempered(m),
        "poincare": poly,
        "langlands": [{"l": b.l, "u": _num(b.u)} for b in datum.complex_blocks],
    }
    if datum.anisotropic_size:
        row["anisotropic"] = datum.to_json()["anisotropic"]
    return row


def module_from_row(row: Mapping[str, Any]) -> AqModule:
    """Inverse of :func:`module_to_row`; ``mu`` may replace ``lambda``/``w``."""
    try:
        part = OrderedPartition(tuple(row["partition"]))
        if "mu" in row:
            lam = selfdual_data(row["mu"])
        else:
            lam = SelfDualData(int(row.get("w", 0)), tuple(row["lambda"]))
        kind = GroupKind(row["kind"], part.total)
        return AqModule(kind, part, lam, int(row.get("eps", 0)))
    except KeyError as exc:
        raise AqjlError(f"catalog row is missing {exc}") from exc
    except TypeError as exc:
        raise AqjlError(f"malformed catalog row: {exc}") from exc
