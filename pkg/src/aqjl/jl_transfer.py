"""Archimedean Jacquet-Langlands transfer |LJ| on cohomological modules."""

from __future__ import annotations

from .aq_catalog import AqModule, enumerate_coh
from .errors import AqjlError, InvalidDirection
from .reps import D, DetPrime, F, SgnDet, BasicRep
from .roots import Quaternionic, SplitReal
from .weights import WeightLike


def lj_basic(r: BasicRep) -> BasicRep:
    if isinstance(r, D):
        return F(r.u, r.l)
    if isinstance(r, SgnDet):
        return DetPrime(r.s)
    if isinstance(r, (F, DetPrime)):
        raise InvalidDirection(f"{r} already lives on GL_1(H)")
    raise TypeError(f"not a basic representation: {r!r}")


def transfer(m: AqModule) -> AqModule:
    """Halve the partition, keep lambda and w, forget the sign."""
    if not m.kind.is_split:
        raise InvalidDirection("transfer goes from GL_n(R) to GL_k(H)")
    half = m.partition.halved()
    return AqModule(Quaternionic(half.total), half, m.lam, 0).canonical()


def fiber(m: AqModule, mu: WeightLike) -> list[AqModule]:
    """All split modules in Coh_mu(GL_2k(R)) mapping to ``m``."""
    if m.kind.is_split:
        raise InvalidDirection("fibers are taken over GL_k(H) modules")
    target = m.canonical()
    split = enumerate_coh(SplitReal(m.kind.n), mu)
    out = [s for s in split if transfer(s) == target]
    if not out and target in enumerate_coh(m.kind, mu):
        raise AqjlError(f"empty fiber over {m}; surjectivity violated")
    return out

