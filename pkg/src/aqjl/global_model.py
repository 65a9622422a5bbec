"""Bookkeeping model of an inner form G' = GL_m(D) and its split form GL_n.

A descriptor records, place by place, whatever the model knows about an
automorphic representation: an A_q(lambda)-module or a raw parameter at each
archimedean place, normalized Satake parameters at split unramified finite
places, and an opaque tag elsewhere. Cuspidality of the global transfer is an
assertion carried on the descriptor.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Any, Mapping, Optional, Sequence, Union

from .aq_catalog import AqModule, is_tempered, module_from_row, module_to_row, poincare
from .cyclotomic import CyclotomicSubfield, compositum
from .errors import (
    AqjlError,
    ComplexPlaceUnsupported,
    NoUnramifiedPlaces,
    NonTemperedNonsplitComponent,
    TransferNotCuspidal,
)
from .hecke import SatakeParams, local_rationality_field, sigma_twist_satake
from .jl_transfer import fiber
from .langlands_params import WeilParameter, is_algebraic, is_regular, parameter_of, purity_weight
from .polynomial import ONE, IntPolynomial
from .roots import Quaternionic, SplitReal

ARCH_KINDS = ("real-split", "real-nonsplit", "complex")


@dataclass(frozen=True)
class ArchPlace:
    label: str
    kind: str

    def __post_init__(self) -> None:
        if self.kind not in ARCH_KINDS:
            raise AqjlError(f"archimedean place {self.label!r}: unknown kind {self.kind!r}")


@dataclass(frozen=True)
class FinitePlace:
    label: str
    split: bool = True
    ramified: bool = False

    @property
    def unramified_split(self) -> bool:
        return self.split and not self.ramified


@dataclass(frozen=True)
class PlacesModel:
    d: int
    m: int
    archimedean: tuple[ArchPlace, ...]
    finite: tuple[FinitePlace, ...] = ()

    def __post_init__(self) -> None:
        if self.d < 1 or self.m < 1:
            raise AqjlError("d and m must be positive")
        labels = [p.label for p in self.archimedean] + [p.label for p in self.finite]
        if len(set(labels)) != len(labels):
            raise AqjlError(f"duplicate place labels in {labels}")
        nonsplit = [p.label for p in self.archimedean if p.kind == "real-nonsplit"]
        if nonsplit and self.d % 2:
            raise AqjlError(f"real non-split places {nonsplit} need an even index d, got d={self.d}")
        if self.d == 1 and any(not p.split for p in self.finite):
            raise AqjlError("with d = 1 every finite place is split")

    @property
    def n(self) -> int:
        return self.d * self.m

    def arch(self, label: str) -> ArchPlace:
        for p in self.archimedean:
            if p.label == label:
                return p
        raise AqjlError(f"no archimedean place {label!r}")

    def split_model(self) -> "PlacesModel":
        """Places of GL_n: everything splits; former non-split data stays opaque."""
        return PlacesModel(
            1,
            self.n,
            tuple(ArchPlace(p.label, "real-split" if p.kind == "real-nonsplit" else p.kind) for p in self.archimedean),
            tuple(FinitePlace(p.label, True, p.ramified or not p.split) for p in self.finite),
        )

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "m": self.m,
            "archimedean": [{"label": p.label, "kind": p.kind} for p in self.archimedean],
            "finite": [{"label": p.label, "split": p.split, "ramified": p.ramified} for p in self.finite],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "PlacesModel":
        try:
            return cls(
                int(data["d"]),
                int(data["m"]),
                tuple(ArchPlace(str(p["label"]), str(p["kind"])) for p in data.get("archimedean", [])),
                tuple(
                    FinitePlace(str(p["label"]), bool(p.get("split", True)), bool(p.get("ramified", False)))
                    for p in data.get("finite", [])
                ),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise AqjlError(f"bad places section: {exc}") from exc


@dataclass(frozen=True)
class Opaque:
    tag: str = "ramified"


ArchComponent = Union[AqModule, WeilParameter]
FiniteComponent = Union[SatakeParams, Opaque]


@dataclass(frozen=True)
class GlobalRepDescriptor:
    side: str  # "inner" for G', "split" for GL_n
    places: PlacesModel
    archimedean: Mapping[str, ArchComponent]
    finite: Mapping[str, FiniteComponent] = field(default_factory=dict)
    jl_cuspidal: bool = True

    def __post_init__(self) -> None:
        if self.side not in ("inner", "split"):
            raise AqjlError(f"side must be 'inner' or 'split', got {self.side!r}")
        n = self.places.n
        arch_labels = {p.label for p in self.places.archimedean}
        if set(self.archimedean) != arch_labels:
            raise AqjlError(f"archimedean components {sorted(self.archimedean)} != places {sorted(arch_labels)}")
        for p in self.places.archimedean:
            comp = self.archimedean[p.label]
            if isinstance(comp, WeilParameter):
                if comp.n != n:
                    raise AqjlError(f"parameter at {p.label} has dimension {comp.n}, expected {n}")
                continue
            if p.kind == "complex":
                raise AqjlError(f"complex place {p.label} takes a parameter, not a module")
            want = Quaternionic(n // 2) if (p.kind == "real-nonsplit" and self.side == "inner") else SplitReal(n)
            if comp.kind != want:
                raise AqjlError(f"component at {p.label} lives on {comp.kind}, expected {want}")
        fin_labels = {p.label for p in self.places.finite}
        if set(self.finite) != fin_labels:
            raise AqjlError(f"finite components {sorted(self.finite)} != places {sorted(fin_labels)}")
        for p in self.places.finite:
            comp = self.finite[p.label]
            if p.unramified_split:
                if not isinstance(comp, SatakeParams):
                    raise AqjlError(f"split unramified place {p.label} needs Satake parameters")
                if comp.n != n:
                    raise AqjlError(f"Satake parameters at {p.label} have {comp.n} entries, expected {n}")
            elif not isinstance(comp, Opaque):
                raise AqjlError(f"place {p.label} is ramified or non-split; only an opaque tag is allowed")

    # serialization
    def to_json(self) -> dict:
        arch: dict[str, Any] = {}
        for label, comp in self.archimedean.items():
            arch[label] = {"parameter": comp.to_json()} if isinstance(comp, WeilParameter) else module_to_row(comp)
        fin: dict[str, Any] = {}
        for label, comp in self.finite.items():
            fin[label] = {"satake": comp.to_json()} if isinstance(comp, SatakeParams) else {"opaque": comp.tag}
        return {
            "side": self.side,
            "jl_cuspidal": self.jl_cuspidal,
            "places": self.places.to_json(),
            "archimedean": arch,
            "finite": fin,
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "GlobalRepDescriptor":
        try:
            places = PlacesModel.from_json(data["places"])
            arch: dict[str, ArchComponent] = {}
            for label, comp in data.get("archimedean", {}).items():
                if "parameter" in comp:
                    arch[label] = WeilParameter.from_json(comp["parameter"])
                else:
                    arch[label] = module_from_row(comp)
            fin: dict[str, FiniteComponent] = {}
            for label, comp in data.get("finite", {}).items():
                if "satake" in comp:
                    fin[label] = SatakeParams.from_json(comp["satake"])
                else:
                    fin[label] = Opaque(str(comp.get("opaque", "ramified")))
            return cls(str(data.get("side", "inner")), places, arch, fin, bool(data.get("jl_cuspidal", True)))
        except KeyError as exc:
            raise AqjlError(f"descriptor is missing {exc}") from exc
        except (AttributeError, TypeError) as exc:
            raise AqjlError(f"malformed descriptor: {exc}") from exc

    @classmethod
    def load(cls, path: str) -> "GlobalRepDescriptor":
        try:
            with open(path, encoding="utf-8") as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise AqjlError(f"cannot read descriptor {path}: {exc}") from exc
        return cls.from_json(data)


def kunneth_poincare(locals_: Sequence[Union[IntPolynomial, WeilParameter]]) -> IntPolynomial:
    out = ONE
    for poly in locals_:
        if not isinstance(poly, IntPolynomial):
            raise ComplexPlaceUnsupported("cohomology at complex places is not modeled")
        out = out * poly
    return out


def descriptor_poincare(desc: GlobalRepDescriptor) -> IntPolynomial:
    comps = []
    for p in desc.places.archimedean:
        comp = desc.archimedean[p.label]
        if p.kind == "complex" or isinstance(comp, WeilParameter):
            raise ComplexPlaceUnsupported(f"place {p.label} carries only a parameter")
        comps.append(poincare(comp))
    return kunneth_poincare(comps)


def _lift_tempered(m: AqModule) -> AqModule:
    """J'(w, l) -> J(w, l): double the partition of the tempered module."""
    if not is_tempered(m):
        raise NonTemperedNonsplitComponent(
            f"{m} is not tempered; its preimage under |LJ| is not pinned down"
        )
    return AqModule(SplitReal(m.kind.n), m.partition.doubled(), m.lam, 0)


def global_jl(desc: GlobalRepDescriptor) -> GlobalRepDescriptor:
    if desc.side == "split":
        return desc
    if not desc.jl_cuspidal:
        raise TransferNotCuspidal("the descriptor does not assert that JL(Pi') is cuspidal")
    arch: dict[str, ArchComponent] = {}
    for p in desc.places.archimedean:
        comp = desc.archimedean[p.label]
        if p.kind == "real-nonsplit" and isinstance(comp, AqModule):
            arch[p.label] = _lift_tempered(comp)
        else:
            arch[p.label] = comp
    # finite data is shared verbatim; non-split places stay opaque
    return GlobalRepDescriptor("split", desc.places.split_model(), arch, dict(desc.finite), True)


def archimedean_parameter(desc: GlobalRepDescriptor, label: str) -> WeilParameter:
    """tau of the split-side component at ``label``.

    A non-tempered module at a non-split place is accepted only when every
    element of its |LJ|-fiber has the same parameter.
    """
    comp = desc.archimedean[label]
    if isinstance(comp, WeilParameter):
        return comp
    if comp.kind.is_split:
        return parameter_of(comp)
    if is_tempered(comp):
        return parameter_of(_lift_tempered(comp))
    candidates = {parameter_of(s) for s in fiber(comp, comp.lam.highest_weight())}
    if len(candidates) != 1:
        raise NonTemperedNonsplitComponent(
            f"the fiber over {comp} at {label} has {len(candidates)} distinct parameters"
        )
    return candidates.pop()


def global_purity(desc: GlobalRepDescriptor, *, normalize: bool = False) -> Optional[int]:
    params = [archimedean_parameter(desc, p.label) for p in desc.places.archimedean]
    return purity_weight(params, normalize=normalize)


def regular_algebraic_report(desc: GlobalRepDescriptor) -> dict[str, Any]:
    """Per-place algebraicity/regularity of the split-side parameters."""
    places = {}
    for p in desc.places.archimedean:
        t = archimedean_parameter(desc, p.label)
        alg = is_algebraic(t)
        places[p.label] = {"algebraic": alg, "regular": bool(alg and is_regular(t))}
    ok = all(v["algebraic"] and v["regular"] for v in places.values())
    return {"regular_algebraic": ok, "places": places}


def global_rationality_field(
    desc: GlobalRepDescriptor, *, workers: Optional[int] = None
) -> CyclotomicSubfield:
    local = [
        desc.finite[p.label]
        for p in desc.places.finite
        if p.unramified_split and isinstance(desc.finite[p.label], SatakeParams)
    ]
    if not local:
        raise NoUnramifiedPlaces("no split unramified finite place carries Satake parameters")
    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            fields = list(pool.map(local_rationality_field, local))
    else:
        fields = [local_rationality_field(s) for s in local]
    return compositum(fields)


def jl_field_equality_check(desc: GlobalRepDescriptor) -> bool:
    inner = global_rationality_field(desc)
    outer = global_rationality_field(global_jl(desc))
    if inner != outer:
        raise AssertionError(f"rationality fields differ across JL: {inner} vs {outer}")
    return True


def with_finite_place(
    desc: GlobalRepDescriptor, place: FinitePlace, comp: FiniteComponent
) -> GlobalRepDescriptor:
    """Add (or replace) one finite place."""
    finite = tuple(p for p in desc.places.finite if p.label != place.label) + (place,)
    places = replace(desc.places, finite=finite)
    fin = dict(desc.finite)
    fin[place.label] = comp
    return replace(desc, places=places, finite=fin)


def without_finite_place(desc: GlobalRepDescriptor, label: str) -> GlobalRepDescriptor:
    places = replace(desc.places, finite=tuple(p for p in desc.places.finite if p.label != label))
    fin = {k: v for k, v in desc.finite.items() if k != label}
    return replace(desc, places=places, finite=fin)


def twist_finite_place(desc: GlobalRepDescriptor, label: str, sigma: int, N: Optional[int] = None) -> GlobalRepDescriptor:
    comp = desc.finite[label]
    if not isinstance(comp, SatakeParams):
        raise AqjlError(f"place {label} has no Satake parameters to twist")
    fin = dict(desc.finite)
    fin[label] = sigma_twist_satake(comp, sigma, N)
    return replace(desc, finite=fin)

