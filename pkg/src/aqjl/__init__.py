"""Cohomological unitary duals of GL_n(R) and GL_k(H), their archimedean
Jacquet-Langlands transfer, Langlands parameters and rationality fields."""

from .aq_catalog import (
    AqModule,
    InductionDatum,
    cohomology_dims,
    enumerate_coh,
    is_tempered,
    langlands_data,
    poincare,
)
from .cyclotomic import CyclotomicNumber, CyclotomicSubfield, compositum, zeta
from .errors import AqjlError
from .hecke import SatakeParams, hecke_eigenvalues, local_rationality_field, sigma_twist_satake
from .jl_transfer import fiber, lj_basic, transfer
from .langlands_params import WeilParameter, is_algebraic, is_regular, parameter_of, purity_weight
from .partitions import OrderedPartition, block_assignment, enumerate_partitions, equivalent_partition
from .polynomial import IntPolynomial
from .roots import Quaternionic, SplitReal, dim_u_cap_p, rho_u, u_roots
from .weights import HighestWeight, SelfDualData, ell_vector, selfdual_data

__version__ = "0.1.0"

__all__ = [
    "AqjlError",
    "AqModule",
    "block_assignment",
    "cohomology_dims",
    "compositum",
    "CyclotomicNumber",
    "CyclotomicSubfield",
    "dim_u_cap_p",
    "ell_vector",
    "enumerate_coh",
    "enumerate_partitions",
    "equivalent_partition",
    "fiber",
    "hecke_eigenvalues",
    "HighestWeight",
    "InductionDatum",
    "IntPolynomial",
    "is_algebraic",
    "is_regular",
    "is_tempered",
    "langlands_data",
    "lj_basic",
    "local_rationality_field",
    "OrderedPartition",
    "parameter_of",
    "poincare",
    "purity_weight",
    "Quaternionic",
    "rho_u",
    "SatakeParams",
    "selfdual_data",
    "SelfDualData",
    "sigma_twist_satake",
    "SplitReal",
    "transfer",
    "u_roots",
    "WeilParameter",
    "zeta",
]

