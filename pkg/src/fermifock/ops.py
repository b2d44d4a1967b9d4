"""Annihilation with exact sign factors, reduced density matrices and operator lifts."""

from __future__ import annotations

from typing import NamedTuple, Optional

import numpy as np

from . import bitops, fock
from .bitops import annihil_sign_mask, bit_distribute, next_fermi, popcount, rev_sign
from .errors import DomainError
from .fock import FermiOp, FermiState, OrbitalConfig, conj


class KetBra(NamedTuple):
    """Sign-weighted determinant pair |ket><bra|."""

    sign: int
    ket: int
    bra: int


def annihilate(s: int, t: int) -> Optional[tuple[int, int]]:
    """Remove determinant t from determinant s.

    Returns (sign, s - t), or None when some orbital of t is unoccupied in s.
    The sign combines the reverse-permutation sign of the removed orbitals
    with the parity of occupied orbitals below each removed one.
    """
    if t & s != t:
        return None
    a_mask = (annihil_sign_mask(s) << 1) & bitops.WORD_MASK
    zeta = rev_sign(popcount(t)) * (-1) ** popcount(a_mask & t)
    return zeta, s - t


def slater_rdm(s1: int, s2: int, p1: int) -> list[KetBra]:
    """All nonzero terms <a_t2 s2 | a_t1 s1> as sign-weighted |t1><t2| pairs.

    Orbitals occupied in exactly one of s1, s2 must be annihilated
    ("force"); orbitals occupied in both are selected freely ("choice").
    """
    if p1 < 0:
        raise DomainError("slater_rdm: p1 must be non-negative")
    f_mask = s1 ^ s2
    s_force = (f_mask & s1, f_mask & s2)
    n_choice1 = p1 - popcount(s_force[0])
    if n_choice1 < 0:
        return []
    p2 = popcount(s2) - popcount(s1) + p1
    if p2 < 0:
        return []
    a_mask = tuple((annihil_sign_mask(sk) << 1) & bitops.WORD_MASK for sk in (s1, s2))
    zeta = 1
    for p, am, sf in zip((p1, p2), a_mask, s_force):
        zeta *= rev_sign(p) * (-1) ** popcount(am & sf)
    if n_choice1 == 0:
        return [KetBra(zeta, s_force[0], s_force[1])]
    c_mask = s1 & s2
    k_choice = popcount(c_mask)
    result = []
    t = (1 << n_choice1) - 1
    while (t >> k_choice) == 0:
        s_choice = bit_distribute(t, c_mask)
        sign = zeta
        for am in a_mask:
            sign *= (-1) ** popcount(am & s_choice)
        result.append(KetBra(sign, s_force[0] + s_choice, s_force[1] + s_choice))
        t = next_fermi(t)
    return result


def rdm(psi1: FermiState, psi2: Optional[FermiState] = None, p: int = 1) -> FermiOp:
    """p-body reduced density matrix of |psi1><psi2| (psi2 defaults to psi1).

    Output maps the full single-group p2-particle space to the full
    p1-particle space (p1 = p), regardless of the input configurations.
    Entry (rank(t1), rank(t2)) carries the weight of |t1><t2|.
    """
    if psi2 is None:
        psi2 = psi1
    orbs = psi1.config.total_orbitals
    if psi2.config.total_orbitals != orbs:
        raise DomainError("rdm: states live over different orbital counts")
    n1 = psi1.config.total_particles
    n2 = psi2.config.total_particles
    p2 = n2 - n1 + p
    if not 0 <= p <= n1 or not 0 <= p2 <= n2:
        raise DomainError(f"rdm: order p={p} out of range for particle numbers {n1}, {n2}")
    row_config = OrbitalConfig((orbs,), (p,))
    col_config = OrbitalConfig((orbs,), (p2,))
    exact = psi1.is_exact or psi2.is_exact
    out = np.zeros((row_config.dim, col_config.dim), dtype=object if exact else complex)
    terms2 = psi2.nonzero_terms()
    for s1, c1 in psi1.nonzero_terms():
        for s2, c2 in terms2:
            w = c1 * conj(c2)
            for sign, t1, t2 in slater_rdm(s1, s2, p):
                out[fock.rank(t1, row_config), fock.rank(t2, col_config)] += sign * w
    return FermiOp(col_config, row_config, out)


def p2n(b: FermiOp, n1: int) -> FermiOp:
    """Lift a p1 -> p2 particle operator to the n1 -> n2 particle sectors.

    The lifted operator is the coefficient-weighted sum of creation-
    annihilation pairs over the basis determinants of the two p-sectors;
    each matrix element is accumulated by double annihilation matching.
    """
    orbs = b.from_config.total_orbitals
    if b.to_config.total_orbitals != orbs:
        raise DomainError("p2n: operator sectors live over different orbital counts")
    p1 = b.from_config.total_particles
    p2 = b.to_config.total_particles
    n2 = n1 - p1 + p2
    if not (p1 <= n1 <= orbs and 0 <= n2 <= orbs):
        raise DomainError(f"p2n: invalid target particle numbers n1={n1}, n2={n2}")
    from_config = OrbitalConfig((orbs,), (n1,))
    to_config = OrbitalConfig((orbs,), (n2,))
    basis_p1 = fock.enumerate_basis(b.from_config.full())
    basis_p2 = fock.enumerate_basis(b.to_config.full())
    if b.from_config.dim != len(basis_p1) or b.to_config.dim != len(basis_p2):
        raise DomainError("p2n: operator must be given over full p-particle sectors")
    out = np.zeros((to_config.dim, from_config.dim),
                   dtype=object if b.is_exact else complex)
    for v_idx, v in enumerate(fock.enumerate_basis(from_config)):
        for j, t1 in enumerate(basis_p1):
            ann1 = annihilate(v, t1)
            if ann1 is None:
                continue
            zeta1, rem = ann1
            for i, t2 in enumerate(basis_p2):
                if rem & t2:
                    continue
                u = rem | t2
                ann2 = annihilate(u, t2)
                assert ann2 is not None and ann2[1] == rem
                out[fock.rank(u, to_config), v_idx] += b.matrix[i, j] * (zeta1 * ann2[0])
    return FermiOp(from_config, to_config, out)


def det_exact(m: np.ndarray):
    """Determinant by cofactor expansion; exact for object-dtype matrices."""
    n = m.shape[0]
    if n == 0:
        return 1
    if n == 1:
        return m[0, 0]
    total = 0
    sub = m[1:]
    for j in range(n):
        if m[0, j] == 0:
            continue
        minor = sub[:, [k for k in range(n) if k != j]]
        term = m[0, j] * det_exact(minor)
        total = total + (term if j % 2 == 0 else -term)
    return total


def tensor_op(a: np.ndarray, n: int) -> FermiOp:
    """N-fold antisymmetric tensor power of a one-particle operator.

    Entry (u, v) is the determinant of the minor of `a` with rows the
    occupied orbitals of u and columns the occupied orbitals of v.
    """
    a = np.asarray(a)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DomainError("tensor_op: operator must be a square matrix")
    orbs = a.shape[0]
    if not 0 <= n <= orbs:
        raise DomainError(f"tensor_op: particle number {n} out of range 0..{orbs}")
    exact = a.dtype == object
    config = OrbitalConfig((orbs,), (n,))
    basis = fock.enumerate_basis(config)
    rows = [fock.fermi_bit_positions(s) for s in basis]
    out = np.empty((config.dim, config.dim), dtype=object if exact else complex)
    for ui, upos in enumerate(rows):
        for vi, vpos in enumerate(rows):
            minor = a[np.ix_(upos, vpos)]
            out[ui, vi] = det_exact(minor) if exact else (
                np.linalg.det(minor) if n > 0 else 1.0)
    return FermiOp(config, config, out)


def expectation(b: FermiOp, psi1: FermiState, psi2: Optional[FermiState] = None):
    """<psi2| lift(b) |psi1> computed through the RDM, i.e. trace(b * rdm)."""
    p1 = b.from_config.total_particles
    gamma = rdm(psi1, psi2, p1)
    if b.to_config.dim != gamma.from_config.dim or b.from_config.dim != gamma.to_config.dim:
        raise DomainError("expectation: operator and RDM dimensions do not match")
    total = 0
    for i in range(b.to_config.dim):
        for j in range(b.from_config.dim):
            total = total + b.matrix[i, j] * gamma.matrix[j, i]
    return total
