/** Complex numbers and dense complex matrices as plain data. */

export interface Complex {
  re: number;
  im: number;
}

export type Matrix = Complex[][];

export const c = (re: number, im = 0): Complex => ({ re, im });

export const cadd = (a: Complex, b: Complex): Complex => c(a.re + b.re, a.im + b.im);
export const csub = (a: Complex, b: Complex): Complex => c(a.re - b.re, a.im - b.im);
export const cmul = (a: Complex, b: Complex): Complex =>
  c(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
export const cconj = (a: Complex): Complex => c(a.re, -a.im);
export const cscale = (a: Complex, s: number): Complex => c(a.re * s, a.im * s);
export const cabs = (a: Complex): number => Math.hypot(a.re, a.im);

export function zeros(rows: number, cols: number): Matrix {
  return Array.from({ length: rows }, () => Array.from({ length: cols }, () => c(0)));
}

export function identity(n: number): Matrix {
  const m = zeros(n, n);
  for (let i = 0; i < n; i++) m[i]![i] = c(1);
  return m;
}

export function adjoint(a: Matrix): Matrix {
  const rows = a.length;
  const cols = a[0]?.length ?? 0;
  const out = zeros(cols, rows);
  for (let i = 0; i < rows; i++) {
    for (let j = 0; j < cols; j++) out[j]![i] = cconj(a[i]![j]!);
  }
  return out;
}

export function matVec(a: Matrix, x: Complex[]): Complex[] {
  return a.map((row) => {
    let acc = c(0);
    for (let j = 0; j < x.length; j++) acc = cadd(acc, cmul(row[j]!, x[j]!));
    return acc;
  });
}

/** Frobenius norm of the off-diagonal part. */
export function offDiagonalNorm(a: Matrix): number {
  let sum = 0;
  for (let i = 0; i < a.length; i++) {
    for (let j = 0; j < a[i]!.length; j++) {
      if (i !== j) sum += a[i]![j]!.re ** 2 + a[i]![j]!.im ** 2;
    }
  }
  return Math.sqrt(sum);
}
