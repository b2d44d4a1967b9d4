import { Complex, Matrix, c, cabs, cconj, cmul, cscale, cadd } from "./complex";

/**
 * Eigendecomposition of a complex Hermitian matrix by cyclic Jacobi rotations.
 * Returns the unitary whose columns are eigenvectors (eigenvalues ascending).
 */
export function hermitianEig(input: Matrix): { values: number[]; vectors: Matrix } {
  const n = input.length;
  const a: Matrix = input.map((row) => row.map((z) => c(z.re, z.im)));
  const u: Matrix = Array.from({ length: n }, (_, i) =>
    Array.from({ length: n }, (_, j) => c(i === j ? 1 : 0)),
  );

  const offNorm = () => {
    let s = 0;
    for (let i = 0; i < n; i++)
      for (let j = 0; j < n; j++) if (i !== j) s += cabs(a[i]![j]!) ** 2;
    return Math.sqrt(s);
  };
  let scale = 0;
  for (const row of a) for (const z of row) scale += z.re ** 2 + z.im ** 2;
  scale = Math.sqrt(scale);

  for (let sweep = 0; sweep < 100 && offNorm() > 1e-15 * (1 + scale); sweep++) {
    for (let p = 0; p < n - 1; p++) {
      for (let q = p + 1; q < n; q++) {
        const g = a[p]![q]!;
        const mag = cabs(g);
        if (mag < 1e-300) continue;
        // phase d makes the pivot real, then a real rotation annihilates it
        const d = cscale(cconj(g), 1 / mag);
        const tau = (a[q]![q]!.re - a[p]![p]!.re) / (2 * mag);
        const t = tau >= 0 ? 1 / (tau + Math.hypot(1, tau)) : -1 / (-tau + Math.hypot(1, tau));
        const co = 1 / Math.hypot(1, t);
        const si = t * co;

        const colRotate = (m: Matrix) => {
          for (let i = 0; i < m.length; i++) {
            const vp = m[i]![p]!;
            const vq = cmul(d, m[i]![q]!);
            m[i]![p] = cadd(cscale(vp, co), cscale(vq, -si));
            m[i]![q] = cadd(cscale(vp, si), cscale(vq, co));
          }
        };
        colRotate(a);
        colRotate(u);
        const dc = cconj(d);
        for (let j = 0; j < n; j++) {
          const rp = a[p]![j]!;
          const rq = cmul(dc, a[q]![j]!);
          a[p]![j] = cadd(cscale(rp, co), cscale(rq, -si));
          a[q]![j] = cadd(cscale(rp, si), cscale(rq, co));
        }
      }
    }
  }

  const order = Array.from({ length: n }, (_, i) => i).sort(
    (i, j) => a[i]![i]!.re - a[j]![j]!.re,
  );
  const values = order.map((i) => a[i]![i]!.re);
  const vectors: Matrix = Array.from({ length: n }, (_, i) =>
    order.map((j) => u[i]![j]!),
  );
  return { values, vectors };
}
