import math
import random
from fractions import Fraction

import numpy as np
import pytest

import oracle
from fermifock import (
    DomainError,
    ExactScalar,
    FermiOp,
    FermiState,
    OrbitalConfig,
    annihilate,
    conj,
    expectation,
    inner,
    outer,
    p2n,
    rdm,
    slater_rdm,
    tensor_op,
)
from fermifock.bitops import coords_to_fermi, fermi_to_coords, popcount
from fermifock.ops import det_exact


def random_exact(rng):
    return ExactScalar(Fraction(rng.randint(-3, 3), rng.randint(1, 3)),
                       Fraction(rng.randint(-3, 3), rng.randint(1, 3)))


def random_exact_state(config, rng):
    coeffs = np.array([random_exact(rng) for _ in range(config.dim)], dtype=object)
    return FermiState(config, coeffs)


def random_exact_matrix(rows, cols, rng):
    return np.array([[random_exact(rng) for _ in range(cols)] for _ in range(rows)],
                    dtype=object)


class TestAnnihilate:
    def test_single_orbital_flip_sign(self):
        sign, rest = annihilate(coords_to_fermi([2, 4, 5, 6, 8]), coords_to_fermi([6]))
        assert sign == -1 and fermi_to_coords(rest) == [2, 4, 5, 8]

    def test_three_orbital_removal(self):
        sign, rest = annihilate(coords_to_fermi([2, 4, 5, 6, 8]), coords_to_fermi([4, 5, 8]))
        assert sign == 1 and fermi_to_coords(rest) == [2, 6]

    def test_self_annihilation_is_positive(self):
        for s in range(1, 2**8):
            assert annihilate(s, s) == (1, 0)

    def test_missing_orbital_gives_zero(self):
        assert annihilate(coords_to_fermi([1, 2]), coords_to_fermi([3])) is None

    @pytest.mark.parametrize("orbs,n", [(6, 3), (8, 4)])
    def test_matches_dense_definition(self, orbs, n):
        basis_n = oracle.coord_basis(orbs, n)
        for p in range(1, n + 1):
            basis_rest = oracle.coord_basis(orbs, n - p)
            for t in oracle.coord_basis(orbs, p):
                dense = oracle.dense_annihilator(t, orbs, n)
                for c, det in enumerate(basis_n):
                    res = annihilate(coords_to_fermi(det), coords_to_fermi(t))
                    col = dense[:, c]
                    if res is None:
                        assert not any(col)
                    else:
                        sign, rest = res
                        r = basis_rest.index(tuple(fermi_to_coords(rest)))
                        assert col[r] == sign
                        assert sum(1 for x in col if x) == 1


class TestSlaterRdm:
    def test_three_term_example(self):
        terms = slater_rdm(coords_to_fermi([5, 6, 7, 9]),
                           coords_to_fermi([1, 2, 4, 5, 6, 9]), 3)
        got = {(t.sign, tuple(fermi_to_coords(t.ket)), tuple(fermi_to_coords(t.bra)))
               for t in terms}
        assert got == {
            (1, (5, 6, 7), (1, 2, 4, 5, 6)),
            (-1, (5, 7, 9), (1, 2, 4, 5, 9)),
            (-1, (6, 7, 9), (1, 2, 4, 6, 9)),
        }

    def test_full_annihilation_single_term(self):
        for s in (0b1011, 0b110101, 0b1):
            assert slater_rdm(s, s, popcount(s)) == [(1, s, s)]

    def test_force_excess_returns_empty(self):
        assert slater_rdm(coords_to_fermi([1, 2]), coords_to_fermi([3, 4]), 1) == []


class TestRdm:
    def test_single_determinant_occupations(self):
        psi = FermiState.from_determinants(OrbitalConfig((6,), (4,)),
                                           {coords_to_fermi([1, 2, 3, 4]): 1.0})
        g = rdm(psi, p=1)
        assert np.allclose(g.matrix, np.diag([1, 1, 1, 1, 0, 0]))

    def test_trace_normalization(self):
        rng = np.random.default_rng(3)
        config = OrbitalConfig((6,), (4,))
        coeffs = rng.normal(size=15) + 1j * rng.normal(size=15)
        coeffs /= np.linalg.norm(coeffs)
        psi = FermiState(config, coeffs)
        for p in range(5):
            assert rdm(psi, p=p).trace() == pytest.approx(math.comb(4, p))

    def test_matches_projector_at_full_order(self):
        rng = np.random.default_rng(5)
        config = OrbitalConfig((5,), (3,))
        psi = FermiState(config, rng.normal(size=10) + 1j * rng.normal(size=10))
        g = rdm(psi, p=3)
        assert np.allclose(g.matrix, outer(psi, psi).matrix)

    def test_configured_input_full_output(self):
        psi = FermiState.from_determinants(OrbitalConfig((5, 4), (2, 1)),
                                           {coords_to_fermi([1, 2, 6]): 1.0})
        g = rdm(psi, p=1)
        assert g.to_config == OrbitalConfig((9,), (1,))
        assert np.allclose(np.diag(g.matrix), [1, 1, 0, 0, 0, 1, 0, 0, 0])

    def test_exact_matches_oracle(self):
        rng = random.Random(11)
        for orbs, n1, n2, p in [(4, 2, 2, 1), (5, 3, 3, 2), (5, 2, 3, 1), (6, 4, 4, 2)]:
            c1 = OrbitalConfig((orbs,), (n1,))
            c2 = OrbitalConfig((orbs,), (n2,))
            psi1 = random_exact_state(c1, rng)
            psi2 = random_exact_state(c2, rng)
            g = rdm(psi1, psi2, p)
            dense = oracle.dense_rdm(psi1.coeffs, psi2.coeffs, orbs, n1, n2, p)
            assert np.array_equal(g.matrix, dense)

    def test_order_zero_inner_product(self):
        rng = random.Random(2)
        config = OrbitalConfig((4,), (2,))
        psi1 = random_exact_state(config, rng)
        psi2 = random_exact_state(config, rng)
        g = rdm(psi1, psi2, 0)
        assert g.matrix.shape == (1, 1)
        assert g.matrix[0, 0] == inner(psi2, psi1)

    def test_out_of_range_order(self):
        psi = FermiState.zero(OrbitalConfig((4,), (2,)))
        with pytest.raises(DomainError):
            rdm(psi, p=3)


class TestP2N:
    def test_top_sector_identity_lift(self):
        # p1 = p2 = N: lifting is the identity on coefficients
        rng = random.Random(23)
        for orbs, n in [(4, 2), (5, 3)]:
            sector = OrbitalConfig((orbs,), (n,))
            b = FermiOp(sector, sector, random_exact_matrix(sector.dim, sector.dim, rng))
            lifted = p2n(b, n)
            assert np.array_equal(lifted.matrix, b.matrix)

    def test_particle_number_operator(self):
        for orbs in (4, 5):
            one = OrbitalConfig((orbs,), (1,))
            b = FermiOp(one, one, np.identity(orbs, dtype=complex))
            for n in range(1, orbs + 1):
                lifted = p2n(b, n)
                assert np.allclose(lifted.matrix, n * np.identity(math.comb(orbs, n)))

    def test_matches_oracle(self):
        rng = random.Random(31)
        for orbs, p1, p2, n1 in [(4, 1, 1, 2), (5, 2, 2, 3), (4, 1, 2, 2)]:
            from_c = OrbitalConfig((orbs,), (p1,))
            to_c = OrbitalConfig((orbs,), (p2,))
            b = FermiOp(from_c, to_c, random_exact_matrix(to_c.dim, from_c.dim, rng))
            lifted = p2n(b, n1)
            dense = oracle.dense_lift(b.matrix, orbs, p1, p2, n1)
            assert np.array_equal(lifted.matrix, dense)

    def test_duality_with_rdm(self):
        rng = random.Random(47)
        orbs, n, p = 4, 2, 1
        sector = OrbitalConfig((orbs,), (p,))
        config = OrbitalConfig((orbs,), (n,))
        for _ in range(10):
            b = FermiOp(sector, sector, random_exact_matrix(sector.dim, sector.dim, rng))
            psi1 = random_exact_state(config, rng)
            psi2 = random_exact_state(config, rng)
            lhs = inner(psi2, p2n(b, n).apply(psi1))
            assert lhs == expectation(b, psi1, psi2)


class TestTensorOp:
    def test_identity(self):
        for d, n in [(4, 2), (5, 3)]:
            t = tensor_op(np.identity(d, dtype=complex), n)
            assert np.allclose(t.matrix, np.identity(math.comb(d, n)))

    def test_full_determinant(self):
        a = np.array([[1.0, 2.0], [3.0, 4.0]], dtype=complex)
        t = tensor_op(a, 2)
        assert t.matrix.shape == (1, 1)
        assert t.matrix[0, 0] == pytest.approx(np.linalg.det(a))

    def test_matches_oracle(self):
        rng = random.Random(13)
        for d, n in [(3, 2), (4, 2), (4, 3)]:
            a = random_exact_matrix(d, d, rng)
            t = tensor_op(a, n)
            dense = oracle.dense_tensor_power(a, n)
            assert np.array_equal(t.matrix, dense)

    def test_multiplicative(self):
        rng = random.Random(17)
        for d, n in [(3, 2), (4, 2), (5, 2)]:
            a = random_exact_matrix(d, d, rng)
            b = random_exact_matrix(d, d, rng)
            lhs = tensor_op(np.dot(a, b), n).matrix
            rhs = np.dot(tensor_op(a, n).matrix, tensor_op(b, n).matrix)
            assert np.array_equal(lhs, rhs)

    def test_order_zero(self):
        t = tensor_op(np.identity(3, dtype=complex), 0)
        assert t.matrix.shape == (1, 1) and t.matrix[0, 0] == 1.0


class TestCanonicalAnticommutation:
    @pytest.mark.parametrize("orbs", [3, 4, 5])
    def test_p1_car(self, orbs):
        for n in range(orbs + 1):
            dim_n = math.comb(orbs, n)
            dim_lo = math.comb(orbs, n - 1) if n >= 1 else 0
            dim_hi = math.comb(orbs, n + 1) if n < orbs else 0
            for i in range(1, orbs + 1):
                for j in range(1, orbs + 1):
                    acc = np.zeros((dim_n, dim_n), dtype=complex)
                    a_i = _annihilator_matrix(i, orbs, n)
                    a_j_dag_lo = _annihilator_matrix(j, orbs, n).conj().T
                    if dim_lo:
                        acc += a_j_dag_lo @ a_i
                    if dim_hi:
                        a_i_hi = _annihilator_matrix(i, orbs, n + 1)
                        a_j_dag_hi = _annihilator_matrix(j, orbs, n + 1).conj().T
                        acc += a_i_hi @ a_j_dag_hi
                    expected = (1.0 if i == j else 0.0) * np.identity(dim_n)
                    assert np.allclose(acc, expected)


def _annihilator_matrix(i, orbs, n):
    """a_{|i>} on the n-particle sector, built from the bit-level kernel."""
    from fermifock import enumerate_basis
    rows = enumerate_basis(OrbitalConfig((orbs,), (n - 1,))) if n >= 1 else []
    cols = enumerate_basis(OrbitalConfig((orbs,), (n,)))
    index = {s: r for r, s in enumerate(rows)}
    m = np.zeros((len(rows), len(cols)), dtype=complex)
    t = coords_to_fermi([i])
    for c, s in enumerate(cols):
        res = annihilate(s, t)
        if res is not None:
            m[index[res[1]], c] = res[0]
    return m


class TestDetExact:
    def test_known_value(self):
        m = np.array([[Fraction(1), Fraction(2)], [Fraction(3), Fraction(4)]], dtype=object)
        assert det_exact(m) == Fraction(-2)

    def test_matches_numpy(self):
        rng = np.random.default_rng(29)
        for d in (2, 3, 4):
            a = rng.normal(size=(d, d))
            assert det_exact(a.astype(object)) == pytest.approx(np.linalg.det(a))
