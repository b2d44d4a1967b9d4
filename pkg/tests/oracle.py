"""Dense brute-force reference implementations, used only by tests.

Everything here works with explicit orbital-coordinate tuples and
permutation signs; no bit-level sign machinery is used, so agreement with
the library is a genuine cross-check.  All arithmetic is exact
(object-dtype matrices holding ints / Fractions / ExactScalars).
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations, permutations

import numpy as np

from fermifock.scalars import conj


def coord_basis(orbs: int, n: int) -> list[tuple[int, ...]]:
    """n-particle determinants as sorted coordinate tuples, ordered to match
    the library's enumeration (ascending when read as reversed tuples)."""
    return sorted(combinations(range(1, orbs + 1), n), key=lambda t: t[::-1])


def perm_sign(seq) -> int:
    inv = 0
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                inv += 1
    return -1 if inv % 2 else 1


def single_annihilator(i: int, orbs: int, n: int) -> np.ndarray:
    """Matrix of a_{|i>} from the defining sign rule (-1)^(k-1)."""
    rows = coord_basis(orbs, n - 1)
    cols = coord_basis(orbs, n)
    row_index = {t: r for r, t in enumerate(rows)}
    m = np.zeros((len(rows), len(cols)), dtype=object)
    for c, det in enumerate(cols):
        if i in det:
            k = det.index(i) + 1
            rest = tuple(x for x in det if x != i)
            m[row_index[rest], c] += (-1) ** (k - 1)
    return m


def dense_annihilator(t: tuple[int, ...], orbs: int, n: int) -> np.ndarray:
    """Matrix of a_{|t>} on the n-particle sector, composed in the order
    a_{i_p} ... a_{i_2} a_{i_1} for t = (i_1 < ... < i_p)."""
    p = len(t)
    assert p <= n
    m = np.identity(math.comb(orbs, n), dtype=object)
    for step, i in enumerate(t):
        m = np.dot(single_annihilator(i, orbs, n - step), m)
    return m


def dense_rdm(coeffs1, coeffs2, orbs: int, n1: int, n2: int, p1: int) -> np.ndarray:
    """RDM entries <a_{t2} psi2 | a_{t1} psi1> from the definition."""
    p2 = n2 - n1 + p1
    rows = coord_basis(orbs, p1)
    cols = coord_basis(orbs, p2)
    out = np.zeros((len(rows), len(cols)), dtype=object)
    vecs1 = [np.dot(dense_annihilator(t, orbs, n1), coeffs1) for t in rows]
    vecs2 = [np.dot(dense_annihilator(t, orbs, n2), coeffs2) for t in cols]
    for j, v1 in enumerate(vecs1):
        for i, v2 in enumerate(vecs2):
            acc = 0
            for a, b in zip(v2, v1):
                acc = acc + conj(a) * b
            out[j, i] = acc
    return out


def dense_lift(b: np.ndarray, orbs: int, p1: int, p2: int, n1: int) -> np.ndarray:
    """Sum of b_ij a+_{t2i} a_{t1j} on the n1-particle sector, via explicit
    annihilator matrices and their conjugate transposes."""
    n2 = n1 - p1 + p2
    basis_p1 = coord_basis(orbs, p1)
    basis_p2 = coord_basis(orbs, p2)
    out = np.zeros((math.comb(orbs, n2), math.comb(orbs, n1)), dtype=object)
    for i, t2 in enumerate(basis_p2):
        a2 = dense_annihilator(t2, orbs, n2)
        a2_dag = np.array([[conj(a2[r, c]) for r in range(a2.shape[0])]
                           for c in range(a2.shape[1])], dtype=object)
        for j, t1 in enumerate(basis_p1):
            if b[i, j] == 0:
                continue
            a1 = dense_annihilator(t1, orbs, n1)
            out = out + np.dot(a2_dag, a1) * b[i, j]
    return out


def dense_tensor_power(a: np.ndarray, n: int) -> np.ndarray:
    """A x ... x A restricted to the antisymmetric subspace, via the explicit
    (unnormalized) antisymmetric embedding; exact for rational entries."""
    a = np.asarray(a)
    d = a.shape[0]
    basis = coord_basis(d, n)
    if n == 0:
        return np.array([[1]], dtype=object)
    # columns of e: unnormalized antisymmetrized product states in H^(x n)
    e = np.zeros((d ** n, len(basis)), dtype=object)
    for c, det in enumerate(basis):
        for sigma in permutations(range(n)):
            idx = 0
            for k in range(n):
                idx = idx * d + (det[sigma[k]] - 1)
            e[idx, c] += perm_sign([det[s] for s in sigma])
    big = np.array([[1]], dtype=object)
    for _ in range(n):
        big = np.kron(big, a)
    out = np.dot(e.T, np.dot(big, e))
    scale = Fraction(1, math.factorial(n))
    return np.array([[out[i, j] * scale for j in range(out.shape[1])]
                     for i in range(out.shape[0])], dtype=object)


def coulomb_pair_element(valuation, bra: tuple[int, int], ket: tuple[int, int]):
    """<chi_k chi_l | 1/r12 | chi_i chi_j> from the spatial/spin factorization,
    with alternating up/down spin-orbitals (odd = up, even = down)."""
    k, l = bra
    i, j = ket

    def spatial(x):
        return (x - 1) // 2 + 1

    def spin(x):
        return (x - 1) % 2

    total = 0
    if spin(k) == spin(i) and spin(l) == spin(j):
        total = total + valuation(spatial(k), spatial(i), spatial(l), spatial(j))
    if spin(k) == spin(j) and spin(l) == spin(i):
        total = total - valuation(spatial(k), spatial(j), spatial(l), spatial(i))
    return total


def dense_coulomb_pairing(gamma_matrix, orbs: int, valuation):
    """trace(V gamma) for the valuation-built two-electron matrix: the direct
    spin-orbital contraction the symbol table must reproduce."""
    rows = coord_basis(orbs, 2)
    cols = coord_basis(orbs, 2)
    total = 0
    for r, t1 in enumerate(rows):
        for c, t2 in enumerate(cols):
            w = gamma_matrix[r, c]
            if w == 0:
                continue
            total = total + w * coulomb_pair_element(valuation, t2, t1)
    return total
