import { runCli, runCliWithFiles, FermifockError } from "./cli";
import { Complex, Matrix, c } from "./complex";

export { FermifockError } from "./cli";
export type { Complex, Matrix } from "./complex";
export { naturalOrbitalOffdiag } from "./norbs";

/** Immutable handle to a many-particle state, ready to be fed to the CLI. */
export interface FermiStateHandle {
  readonly orbs: readonly number[];
  readonly n: readonly number[];
  readonly basis: readonly (readonly number[])[];
  readonly coeffs: readonly Complex[];
  /** State-file payload, the CLI's native exchange format. */
  readonly payload: StatePayload;
}

export interface StatePayload {
  orbs: number[];
  N: number[];
  terms: { orbitals: number[]; re: number; im: number }[];
}

export interface CoulombTerm {
  bra: [number, number];
  ket: [number, number];
  coeff: Complex;
}

interface MatrixJson {
  rows: number;
  cols: number;
  row_kets: number[][];
  col_kets: number[][];
  entries: [number, number][];
}

function parseMatrixJson(text: string): Matrix {
  const data = JSON.parse(text) as MatrixJson;
  const out: Matrix = [];
  for (let i = 0; i < data.rows; i++) {
    const row: Complex[] = [];
    for (let j = 0; j < data.cols; j++) {
      const [re, im] = data.entries[i * data.cols + j]!;
      row.push(c(re, im));
    }
    out.push(row);
  }
  return out;
}

function operatorPayload(matrix: Matrix): { dim: number; entries: [number, number][] } {
  const dim = matrix.length;
  const entries: [number, number][] = [];
  for (const row of matrix) {
    if (row.length !== dim) throw new FermifockError("operator matrix must be square");
    for (const z of row) entries.push([z.re, z.im]);
  }
  return { dim, entries };
}

/** Basis determinants of a configuration, in the CLI's enumeration order. */
export function enumerateBasis(orbs: readonly number[], n: readonly number[]): number[][] {
  const header = runCli([
    "enumerate",
    "--orbs", orbs.join(","),
    "--n", n.join(","),
    "--limit", "0",
  ]);
  const dim = Number(/dim (\d+)/.exec(header)?.[1]);
  const listing = runCli([
    "enumerate",
    "--orbs", orbs.join(","),
    "--n", n.join(","),
    "--limit", String(dim),
  ]);
  const basis: number[][] = [];
  for (const line of listing.split("\n")) {
    const match = /^\|([\d ]*)>$/.exec(line.trim());
    if (match) {
      const body = match[1]!.trim();
      basis.push(body === "" ? [] : body.split(/\s+/).map(Number));
    }
  }
  if (basis.length !== dim) {
    throw new FermifockError(`basis enumeration returned ${basis.length} kets, expected ${dim}`);
  }
  return basis;
}

/**
 * Build a state handle from per-group orbital counts, particle counts, and
 * coefficients in basis-enumeration order. Validation happens in the core:
 * the assembled state file is parsed by the CLI before the handle is returned.
 */
export function bind_fermistate(
  orbs: readonly number[],
  n: readonly number[],
  coeffs: readonly (Complex | number)[],
): FermiStateHandle {
  const basis = enumerateBasis(orbs, n);
  if (coeffs.length !== basis.length) {
    throw new FermifockError(
      `coefficient count ${coeffs.length} does not match dimension ${basis.length}`,
    );
  }
  const normalized = coeffs.map((z) => (typeof z === "number" ? c(z) : c(z.re, z.im)));
  const payload: StatePayload = {
    orbs: [...orbs],
    N: [...n],
    terms: basis.flatMap((ket, i) => {
      const z = normalized[i]!;
      return z.re === 0 && z.im === 0 ? [] : [{ orbitals: [...ket], re: z.re, im: z.im }];
    }),
  };
  runCliWithFiles({ "state.json": payload }, (p) => [
    "rdm", p["state.json"]!, "--p", "0", "--format", "json",
  ]);
  return { orbs: [...orbs], n: [...n], basis, coeffs: normalized, payload };
}

/** p-body reduced density matrix of |psi1><psi2| (psi2 defaults to psi1). */
export function bind_rdm(
  handle: FermiStateHandle,
  p: number,
  handle2?: FermiStateHandle,
): Matrix {
  const files: Record<string, unknown> = { "psi1.json": handle.payload };
  if (handle2) files["psi2.json"] = handle2.payload;
  const out = runCliWithFiles(files, (paths) => [
    "rdm",
    paths["psi1.json"]!,
    ...(handle2 ? [paths["psi2.json"]!] : []),
    "--p", String(p),
    "--format", "json",
  ]);
  return parseMatrixJson(out);
}

/** Antisymmetric n-fold tensor power of a one-particle operator. */
export function bind_tensor_op(matrix: Matrix, n: number): Matrix {
  const out = runCliWithFiles({ "op.json": operatorPayload(matrix) }, (paths) => [
    "tensor-op", paths["op.json"]!, "--n", String(n), "--format", "json",
  ]);
  return parseMatrixJson(out);
}

/**
 * Lift a p-body operator to the n-particle sector. The orbital count is
 * inferred from the operator dimension C(orbs, p), which is strictly
 * increasing in orbs.
 */
export function bind_p2n(matrix: Matrix, p: number, n: number): Matrix {
  const dim = matrix.length;
  let orbs = p;
  const binom = (m: number, k: number): number => {
    let r = 1;
    for (let i = 0; i < k; i++) r = (r * (m - i)) / (i + 1);
    return Math.round(r);
  };
  while (binom(orbs, p) < dim) orbs++;
  if (binom(orbs, p) !== dim) {
    throw new FermifockError(`operator dimension ${dim} is not C(orbs, ${p}) for any orbs`);
  }
  const out = runCliWithFiles({ "op.json": operatorPayload(matrix) }, (paths) => [
    "p2n", paths["op.json"]!,
    "--p", String(p), "--n", String(n), "--orbs", String(orbs),
    "--format", "json",
  ]);
  return parseMatrixJson(out);
}

/** Coulomb integral symbol table of the 2-RDM of a state (pair). */
export function bind_spintrace(
  handle: FermiStateHandle,
  handle2?: FermiStateHandle,
): CoulombTerm[] {
  const files: Record<string, unknown> = { "psi1.json": handle.payload };
  if (handle2) files["psi2.json"] = handle2.payload;
  const out = runCliWithFiles(files, (paths) => [
    "spintrace",
    paths["psi1.json"]!,
    ...(handle2 ? [paths["psi2.json"]!] : []),
  ]);
  const raw = JSON.parse(out) as { bra: [number, number]; ket: [number, number]; re: number; im: number }[];
  return raw.map((t) => ({ bra: t.bra, ket: t.ket, coeff: c(t.re, t.im) }));
}
