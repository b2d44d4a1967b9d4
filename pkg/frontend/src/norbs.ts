import { bind_fermistate, bind_rdm, bind_tensor_op, FermiStateHandle } from "./index";
import { adjoint, matVec, offDiagonalNorm } from "./complex";
import { hermitianEig } from "./eig";

/**
 * Transform a state to its natural-orbital basis and report the off-diagonal
 * Frobenius norm of the resulting one-body reduced density matrix (zero up to
 * rounding when the transformation is exact).
 */
export function naturalOrbitalOffdiag(handle: FermiStateHandle): number {
  const gamma = bind_rdm(handle, 1);
  const { vectors: u } = hermitianEig(gamma);
  const particles = handle.n.reduce((a, b) => a + b, 0);
  const lifted = bind_tensor_op(u, particles);
  const transformed = matVec(adjoint(lifted), [...handle.coeffs]);
  const rotated = bind_fermistate(handle.orbs, handle.n, transformed);
  return offDiagonalNorm(bind_rdm(rotated, 1));
}
