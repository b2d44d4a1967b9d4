"""Basis enumeration, ranking and the FermiState / FermiOp value types.

Determinant bases are ordered lexicographically as integers within each
orbital group, group 1 varying fastest.  Coefficient vectors are dense
numpy arrays, dtype complex128 for the float path or dtype object for
exact scalars.
"""

from __future__ import annotations

import functools
import json
import math
from dataclasses import dataclass

from typing import Optional

import numpy as np

from . import bitops
from .errors import DomainError
from .scalars import ExactScalar, conj, parse_number, parse_rational

@dataclass(frozen=True)
class OrbitalConfig:
    """Subdivision of the orbitals into groups with fixed particle counts."""

    group_sizes: tuple[int, ...]
    group_particles: tuple[int, ...]
    orbital_names: Optional[tuple[str, ...]] = None

    def __post_init__(self):
        object.__setattr__(self, "group_sizes", tuple(self.group_sizes))
        object.__setattr__(self, "group_particles", tuple(self.group_particles))
        if self.orbital_names is not None:
            object.__setattr__(self, "orbital_names", tuple(self.orbital_names))
        if len(self.group_sizes) != len(self.group_particles):
            raise DomainError("group_sizes and group_particles must have equal length")
        if not self.group_sizes:
            raise DomainError("need at least one orbital group")
        if any(o < 1 for o in self.group_sizes):
            raise DomainError("group sizes must be positive")
        for n, o in zip(self.group_particles, self.group_sizes):
            if not 0 <= n <= o:
                raise DomainError(f"particle count {n} invalid for group of {o} orbitals")
        if self.total_orbitals > bitops.WORD_BITS:
            raise DomainError(
                f"{self.total_orbitals} orbitals exceed the {bitops.WORD_BITS}-bit word")
        if self.orbital_names is not None and len(self.orbital_names) != self.total_orbitals:
            raise DomainError("orbital_names length must equal the total orbital count")

    @property
    def total_orbitals(self) -> int:
        return sum(self.group_sizes)

    @property
    def total_particles(self) -> int:
        return sum(self.group_particles)

    @property
    def dim(self) -> int:
        d = 1
        for o, n in zip(self.group_sizes, self.group_particles):
            d *= math.comb(o, n)
        return d

    @property
    def group_offsets(self) -> tuple[int, ...]:
        offs = [0]
        for o in self.group_sizes[:-1]:
            offs.append(offs[-1] + o)
        return tuple(offs)

    def first_pattern(self) -> int:
        s = 0
        for off, n in zip(self.group_offsets, self.group_particles):
            s |= ((1 << n) - 1) << off
        return s

    def is_admissible(self, s: int) -> bool:
        if s >> self.total_orbitals:
            return False
        for off, o, n in zip(self.group_offsets, self.group_sizes, self.group_particles):
            if bitops.popcount((s >> off) & ((1 << o) - 1)) != n:
                return False
        return True

    def full(self) -> "OrbitalConfig":
        """Single-group configuration over the same orbitals and particles."""
        return OrbitalConfig((self.total_orbitals,), (self.total_particles,),
                             self.orbital_names)

@functools.lru_cache(maxsize=256)
def _enumerate_basis_cached(group_sizes, group_particles) -> tuple[int, ...]:
    return tuple(_enumerate_basis(OrbitalConfig(group_sizes, group_particles)))

def enumerate_basis(config: OrbitalConfig) -> list[int]:
    """All admissible determinants of a configuration in enumeration order."""
    return list(_enumerate_basis_cached(config.group_sizes, config.group_particles))

def _enumerate_basis(config: OrbitalConfig) -> list[int]:
    if config.dim == 0:
        return []
    dets = []
    s: Optional[int] = config.first_pattern()
    while s is not None:
        dets.append(s)
        s = bitops.next_fermi_config(s, config.group_sizes)
    assert len(dets) == config.dim
    return dets

def _rank_pattern(s: int) -> int:
    """Position of a bit pattern among equal-popcount integers, ascending."""
    r = 0
    for i, pos in enumerate(fermi_bit_positions(s), start=1):
        r += math.comb(pos, i)
    return r

def _unrank_pattern(r: int, n: int) -> int:
    """Inverse of _rank_pattern for popcount n."""
    s = 0
    for i in range(n, 0, -1):
        pos = i - 1
        while math.comb(pos + 1, i) <= r:
            pos += 1
        r -= math.comb(pos, i)
        s |= 1 << pos
    return s

def fermi_bit_positions(s: int) -> list[int]:
    """0-based positions of the set bits of s, ascending."""
    return [i - 1 for i in bitops.fermi_to_coords(s)]

def rank(s: int, config: OrbitalConfig) -> int:
    """Index of determinant s in enumerate_basis(config)."""
    if not config.is_admissible(s):
        raise DomainError(f"determinant {s:#b} not admissible for the configuration")
    r = 0
    weight = 1
    for off, o, n in zip(config.group_offsets, config.group_sizes, config.group_particles):
        part = (s >> off) & ((1 << o) - 1)
        r += _rank_pattern(part) * weight
        weight *= math.comb(o, n)
    return r

def unrank(index: int, config: OrbitalConfig) -> int:
    """Inverse of rank."""
    if not 0 <= index < config.dim:
        raise DomainError(f"index {index} out of range for dimension {config.dim}")
    s = 0
    for off, o, n in zip(config.group_offsets, config.group_sizes, config.group_particles):
        d = math.comb(o, n)
        index, r = divmod(index, d)
        s |= _unrank_pattern(r, n) << off
    return s

def _zeros(dim: int, exact: bool):
    return np.zeros(dim, dtype=object if exact else complex)

@dataclass
class FermiState:
    """Dense coefficient vector over the Slater basis of a configuration."""

    config: OrbitalConfig
    coeffs: np.ndarray

    def __post_init__(self):
        self.coeffs = np.asarray(self.coeffs)
        if self.coeffs.shape != (self.config.dim,):
            raise DomainError(
                f"coefficient vector has length {self.coeffs.shape}, expected {self.config.dim}")

    @classmethod
    def zero(cls, config: OrbitalConfig, exact: bool = False) -> "FermiState":
        return cls(config, _zeros(config.dim, exact))

    @classmethod
    def from_determinants(cls, config: OrbitalConfig, terms: dict[int, object],
                          exact: bool = False) -> "FermiState":
        coeffs = _zeros(config.dim, exact)
        for s, c in terms.items():
            coeffs[rank(s, config)] += c
        return cls(config, coeffs)

    @property
    def is_exact(self) -> bool:
        return self.coeffs.dtype == object

    def norm_sq(self):
        total = 0
        for c in self.coeffs:
            total = total + conj(c) * c
        return total

    def nonzero_terms(self) -> list[tuple[int, object]]:
        """(determinant, coefficient) pairs with nonzero coefficient."""
        dets = enumerate_basis(self.config)
        return [(s, c) for s, c in zip(dets, self.coeffs) if c != 0]

@dataclass
class FermiOp:
    """Dense matrix between the Slater bases of two configurations."""

    from_config: OrbitalConfig
    to_config: OrbitalConfig
    matrix: np.ndarray

    def __post_init__(self):
        self.matrix = np.asarray(self.matrix)
        expected = (self.to_config.dim, self.from_config.dim)
        if self.matrix.shape != expected:
            raise DomainError(f"matrix shape {self.matrix.shape}, expected {expected}")

    @property
    def is_exact(self) -> bool:
        return self.matrix.dtype == object

    def adjoint(self) -> "FermiOp":
        if self.is_exact:
            m = np.empty((self.from_config.dim, self.to_config.dim), dtype=object)
            for i in range(self.from_config.dim):
                for j in range(self.to_config.dim):
                    m[i, j] = conj(self.matrix[j, i])
        else:
            m = np.conj(self.matrix.T)
        return FermiOp(self.to_config, self.from_config, m)

    def apply(self, psi: FermiState) -> FermiState:
        if psi.config != self.from_config:
            raise DomainError("operator domain does not match the state configuration")
        return FermiState(self.to_config, np.dot(self.matrix, psi.coeffs))

    def trace(self):
        if self.from_config.dim != self.to_config.dim:
            raise DomainError("trace requires a square operator")
        total = 0
        for i in range(self.from_config.dim):
            total = total + self.matrix[i, i]
        return total

def merge_states(psi: FermiState, phi: FermiState) -> FermiState:
    """Sum of two states over compatible configurations.

    Identical configurations add coefficient-wise; otherwise both states
    are embedded into the full single-group configuration first.
    """
    same_totals = (psi.config.total_orbitals == phi.config.total_orbitals
                   and psi.config.total_particles == phi.config.total_particles)
    if not same_totals:
        raise DomainError("configurations are incompatible (orbital or particle totals differ)")
    if psi.config == phi.config:
        return FermiState(psi.config, psi.coeffs + phi.coeffs)
    full = OrbitalConfig((psi.config.total_orbitals,), (psi.config.total_particles,))
    exact = psi.is_exact or phi.is_exact
    coeffs = _zeros(full.dim, exact)
    for state in (psi, phi):
        for s, c in state.nonzero_terms():
            coeffs[rank(s, full)] += c
    return FermiState(full, coeffs)

def to_full(psi: FermiState) -> FermiState:
    """Embed a configured state into the full single-group configuration."""
    full = psi.config.full()
    if psi.config == full:
        return psi
    coeffs = _zeros(full.dim, psi.is_exact)
    for s, c in psi.nonzero_terms():
        coeffs[rank(s, full)] += c
    return FermiState(full, coeffs)

def inner(psi: FermiState, phi: FermiState):
    """<psi|phi>, conjugate-linear in the first argument."""
    if psi.config != phi.config:
        raise DomainError("inner: configurations differ (merge first)")
    total = 0
    for a, b in zip(psi.coeffs, phi.coeffs):
        total = total + conj(a) * b
    return total

def scale(psi: FermiState, c) -> FermiState:
    return FermiState(psi.config, np.array([c * x for x in psi.coeffs],
                                           dtype=psi.coeffs.dtype))

def outer(psi: FermiState, phi: FermiState) -> FermiOp:
    """Rank-one operator |psi><phi| over a common configuration."""
    if psi.config != phi.config:
        raise DomainError("outer: configurations differ (merge first)")
    exact = psi.is_exact or phi.is_exact
    dim = psi.config.dim
    m = np.empty((dim, dim), dtype=object if exact else complex)
    for i in range(dim):
        for j in range(dim):
            m[i, j] = psi.coeffs[i] * conj(phi.coeffs[j])
    return FermiOp(psi.config, psi.config, m)

# -- state file format --------------------------------------------------------

_STATE_FIELDS = {"orbs", "N", "orbnames", "terms"}
_TERM_FIELDS = {"orbitals", "re", "im"}

def state_from_dict(data: dict, exact: bool = False) -> FermiState:
    """Build a FermiState from the JSON state-file structure."""
    if not isinstance(data, dict):
        raise DomainError("state file must contain a JSON object")
    unknown = set(data) - _STATE_FIELDS
    if unknown:
        raise DomainError(f"unknown state file fields: {sorted(unknown)}")
    for req in ("orbs", "N", "terms"):
        if req not in data:
            raise DomainError(f"state file missing field {req!r}")
    names = tuple(data["orbnames"]) if "orbnames" in data else None
    config = OrbitalConfig(tuple(data["orbs"]), tuple(data["N"]), names)
    coeffs = _zeros(config.dim, exact)
    for term in data["terms"]:
        unknown = set(term) - _TERM_FIELDS
        if unknown:
            raise DomainError(f"unknown term fields: {sorted(unknown)}")
        orbitals = term["orbitals"]
        if sorted(orbitals) != list(orbitals):
            raise DomainError(f"term orbitals {orbitals} not sorted")
        s = bitops.coords_to_fermi(orbitals)
        if exact:
            c = ExactScalar(parse_rational(term.get("re", 0)),
                            parse_rational(term.get("im", 0)))
        else:
            c = complex(parse_number(term.get("re", 0)), parse_number(term.get("im", 0)))
        coeffs[rank(s, config)] += c
    return FermiState(config, coeffs)

def load_state(path, exact: bool = False) -> FermiState:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise DomainError(f"cannot parse state file {path}: {exc}") from exc
    return state_from_dict(data, exact=exact)

def state_to_dict(psi: FermiState) -> dict:
    data: dict = {"orbs": list(psi.config.group_sizes),
                  "N": list(psi.config.group_particles)}
    if psi.config.orbital_names is not None:
        data["orbnames"] = list(psi.config.orbital_names)
    terms = []
    for s, c in psi.nonzero_terms():
        if isinstance(c, ExactScalar):
            if not c.is_rational:
                raise DomainError("cannot serialize sqrt-3 components as p/q strings")
            re: object = str(c.ra)
            im: object = str(c.ia)
        else:
            z = complex(c)
            re, im = z.real, z.imag
        terms.append({"orbitals": bitops.fermi_to_coords(s), "re": re, "im": im})
    data["terms"] = terms
    return data
