"""Combinatorics of unitary simple modules for cyclotomic quiver Hecke and Cherednik algebras."""

from .abacus import (
    UnitaryAbacus,
    abacus_from_partition,
    core_and_weight,
    enumerate_po,
    hd,
    hd_of_partition,
    is_unitary,
    tau_from_partition,
)
from .alcove import embed, good_nodes, in_fundamental_alcove, path_degree, rho
from .bgg import BGGComplex, SignInconsistencyError, build_complex
from .comm_alg import arrangement_invariants, betti_table, resolution, resolution_summary
from .kernels import available_backends, use_backend
from .partitions import (
    ChargeContext,
    DomainError,
    Multipartition,
    ParseError,
    Partition,
    parse_multipartition,
    parse_partition,
)
from .simple_modules import branching_graph, generator_matrices, mullineux
from .tableaux import StandardTableau, enumerate_std_e

__all__ = [
    "BGGComplex",
    "ChargeContext",
    "DomainError",
    "Multipartition",
    "ParseError",
    "Partition",
    "SignInconsistencyError",
    "StandardTableau",
    "UnitaryAbacus",
    "abacus_from_partition",
    "arrangement_invariants",
    "available_backends",
    "betti_table",
    "branching_graph",
    "build_complex",
    "core_and_weight",
    "embed",
    "enumerate_po",
    "enumerate_std_e",
    "generator_matrices",
    "good_nodes",
    "hd",
    "hd_of_partition",
    "in_fundamental_alcove",
    "is_unitary",
    "mullineux",
    "parse_multipartition",
    "parse_partition",
    "path_degree",
    "resolution",
    "resolution_summary",
    "rho",
    "tau_from_partition",
    "use_backend",
]
