"""Bit-encoded fermionic many-particle states, reduced density matrices and
Coulomb integral bookkeeping."""

from .errors import DomainError
from .scalars import ExactScalar, SQRT3, conj
from .fock import (
    FermiOp,
    FermiState,
    OrbitalConfig,
    enumerate_basis,
    inner,
    load_state,
    merge_states,
    outer,
    rank,
    scale,
    state_from_dict,
    state_to_dict,
    unrank,
)
from .ops import KetBra, annihilate, expectation, p2n, rdm, slater_rdm, tensor_op
from .spintrace import (
    CoulombSymbol,
    SymbolTable,
    canonical_symbol,
    spin_orbital_layout,
    spin_trace_coulomb,
)

__all__ = [
    "DomainError",
    "ExactScalar",
    "SQRT3",
    "conj",
    "FermiOp",
    "FermiState",
    "OrbitalConfig",
    "enumerate_basis",
    "inner",
    "load_state",
    "merge_states",
    "outer",
    "rank",
    "scale",
    "state_from_dict",
    "state_to_dict",
    "unrank",
    "KetBra",
    "annihilate",
    "expectation",
    "p2n",
    "rdm",
    "slater_rdm",
    "tensor_op",
    "CoulombSymbol",
    "SymbolTable",
    "canonical_symbol",
    "spin_orbital_layout",
    "spin_trace_coulomb",
]

__version__ = "0.1.0"
