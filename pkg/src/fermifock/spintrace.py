"""Trace the spin degree of freedom out of a 2-body RDM.

Spin-orbitals alternate: spin-orbital 2k-1 is spatial orbital k with spin
up, 2k the same orbital with spin down.  Each 2-RDM entry contributes a
direct and an exchange Coulomb integral symbol <ab|cd>; spin overlaps act
as Kronecker deltas.  The result is a coefficient table of canonicalized
symbols whose pairing with any symmetric integral valuation reproduces the
Coulomb expectation value.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from . import bitops, fock
from .errors import DomainError
from .fock import FermiOp


@dataclass(frozen=True, order=True)
class CoulombSymbol:
    """Canonicalized quadruple of spatial orbitals naming the integral <ab|cd>."""

    a: int
    b: int
    c: int
    d: int

    @property
    def bra(self) -> tuple[int, int]:
        return (self.a, self.b)

    @property
    def ket(self) -> tuple[int, int]:
        return (self.c, self.d)

    def boson_key(self, spatial_count: int) -> tuple[int, int]:
        """Multiset encodings of the (a,b) and (c,d) pairs, used as sort key."""
        return (_pair_boson(self.a, self.b, spatial_count),
                _pair_boson(self.c, self.d, spatial_count))


def _pair_boson(x: int, y: int, m: int) -> int:
    occ = [0] * m
    occ[x - 1] += 1
    occ[y - 1] += 1
    return bitops.boson_encode(occ)


def canonical_symbol(a: int, b: int, c: int, d: int,
                     real_orbitals: bool = False) -> CoulombSymbol:
    """Apply the exchange symmetry <ab|cd> = <cd|ab> (pair-of-pairs sort).

    With real_orbitals=True the within-pair swaps (a,b) <-> (b,a) and
    (c,d) <-> (d,c) are additionally identified.
    """
    if min(a, b, c, d) < 1:
        raise DomainError("spatial orbital indices are 1-based")
    if real_orbitals:
        pairs = [(a, b), (b, a)], [(c, d), (d, c)]
        candidates = [tuple(sorted((p, q))) for p in pairs[0] for q in pairs[1]]
        (p, q) = min(candidates)
    else:
        p, q = sorted(((a, b), (c, d)))
    return CoulombSymbol(p[0], p[1], q[0], q[1])


class SymbolTable:
    """Accumulating map from canonical Coulomb symbols to scalar coefficients."""

    def __init__(self, spatial_count: int):
        self.spatial_count = spatial_count
        self._coeffs: dict[CoulombSymbol, object] = {}

    def add(self, symbol: CoulombSymbol, weight) -> None:
        self._coeffs[symbol] = self._coeffs.get(symbol, 0) + weight

    def items(self) -> Iterator[tuple[CoulombSymbol, object]]:
        """Nonzero entries sorted by the bosonic multiset key."""
        entries = [(s, c) for s, c in self._coeffs.items() if c != 0]
        entries.sort(key=lambda e: (e[0].boson_key(self.spatial_count),
                                    (e[0].a, e[0].b, e[0].c, e[0].d)))
        return iter(entries)

    def __len__(self) -> int:
        return sum(1 for _ in self.items())

    def coefficient(self, a: int, b: int, c: int, d: int,
                    real_orbitals: bool = False):
        return self._coeffs.get(canonical_symbol(a, b, c, d, real_orbitals), 0)

    def pair_valuation(self, valuation) -> object:
        """Sum of coefficient * valuation(a, b, c, d) over the table."""
        total = 0
        for sym, coeff in self.items():
            total = total + coeff * valuation(sym.a, sym.b, sym.c, sym.d)
        return total

    def to_jsonable(self) -> list[dict]:
        out = []
        for sym, coeff in self.items():
            z = coeff if isinstance(coeff, complex) else complex(coeff)
            out.append({"bra": [sym.a, sym.b], "ket": [sym.c, sym.d],
                        "re": z.real, "im": z.imag})
        return out


def spin_orbital_layout(spatial_count: int) -> list[tuple[int, int]]:
    """(spatial orbital, spin) of each spin-orbital; spin +1 is up, -1 down."""
    if spatial_count < 1:
        raise DomainError("need at least one spatial orbital")
    layout = []
    for k in range(1, spatial_count + 1):
        layout.append((k, +1))
        layout.append((k, -1))
    return layout


def spatial_and_spin(spin_orbital: int) -> tuple[int, int]:
    """Spatial index and spin (+1 up / -1 down) of a 1-based spin-orbital."""
    k, r = divmod(spin_orbital - 1, 2)
    return k + 1, +1 if r == 0 else -1


def spin_trace_coulomb(gamma2: FermiOp, real_orbitals: bool = False) -> SymbolTable:
    """Convert a 2-body RDM over alternating spin-orbitals into Coulomb symbols.

    For every entry w = <t1| gamma |t2> the direct and exchange symbols of
    the pair matrix element <t2-pair| 1/r12 |t1-pair> are accumulated with
    weights +w and -w, so that the table paired with any symmetric
    valuation V equals trace(V * gamma).
    """
    orbs = gamma2.from_config.total_orbitals
    if orbs != gamma2.to_config.total_orbitals:
        raise DomainError("spin_trace_coulomb: mismatched orbital counts")
    if orbs % 2:
        raise DomainError("spin_trace_coulomb: spin-orbital count must be even")
    if gamma2.from_config.total_particles != 2 or gamma2.to_config.total_particles != 2:
        raise DomainError("spin_trace_coulomb: operator must act on 2-particle sectors")
    table = SymbolTable(orbs // 2)
    row_basis = fock.enumerate_basis(gamma2.to_config.full())
    col_basis = fock.enumerate_basis(gamma2.from_config.full())
    for r, t1 in enumerate(row_basis):
        i, j = bitops.fermi_to_coords(t1)
        for c, t2 in enumerate(col_basis):
            w = gamma2.matrix[r, c]
            if w == 0:
                continue
            k, l = bitops.fermi_to_coords(t2)
            _accumulate_pair(table, w, (k, l), (i, j), real_orbitals)
    return table


def _accumulate_pair(table: SymbolTable, w, bra_pair, ket_pair, real_orbitals):
    """Direct minus exchange contribution of <chi_k chi_l | V | chi_i chi_j>."""
    (k, l), (i, j) = bra_pair, ket_pair
    pk, sk = spatial_and_spin(k)
    pl, sl = spatial_and_spin(l)
    pi, si = spatial_and_spin(i)
    pj, sj = spatial_and_spin(j)
    if sk == si and sl == sj:
        table.add(canonical_symbol(pk, pi, pl, pj, real_orbitals), w)
    if sk == sj and sl == si:
        table.add(canonical_symbol(pk, pj, pl, pi, real_orbitals), -w)
