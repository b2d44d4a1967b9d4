"""Command-line front end: basis enumeration, RDMs, operator lifts and
Coulomb symbol tables over JSON state/operator files."""

from __future__ import annotations

import json
import math
from typing import Optional

import click
import numpy as np

from . import fock, ops, spintrace
from .errors import DomainError
from .fock import FermiOp, FermiState, OrbitalConfig
from .scalars import parse_number


def _fmt_float(x: float) -> str:
    return f"{x:.15g}"


def _fmt_complex(z) -> str:
    z = complex(z)
    re, im = _fmt_float(z.real), _fmt_float(z.imag)
    if z.imag == 0:
        return re
    if z.real == 0:
        return f"{im}i"
    sign = "+" if z.imag > 0 else "-"
    return f"{re}{sign}{_fmt_float(abs(z.imag))}i"


def _fmt_scalar(x) -> str:
    if hasattr(x, "is_rational"):  # ExactScalar
        return repr(x)
    from fractions import Fraction
    if isinstance(x, (int, Fraction)):
        return str(x)
    return _fmt_complex(x)


def _ket_label(s: int, names) -> str:
    coords = fock.bitops.fermi_to_coords(s)
    if names:
        return "|" + " ".join(names[i - 1] for i in coords) + ">"
    return "|" + " ".join(str(i) for i in coords) + ">"


def _parse_int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise click.UsageError(f"expected a comma-separated integer list, got {text!r}")


def _emit_matrix(op: FermiOp, fmt: str, out: Optional[str], names=None) -> None:
    rows = fock.enumerate_basis(op.to_config)
    cols = fock.enumerate_basis(op.from_config)
    if fmt == "json":
        entries = []
        for i in range(len(rows)):
            for j in range(len(cols)):
                z = complex(op.matrix[i, j])
                entries.append([z.real, z.imag])
        payload = {
            "rows": len(rows),
            "cols": len(cols),
            "row_kets": [fock.bitops.fermi_to_coords(s) for s in rows],
            "col_kets": [fock.bitops.fermi_to_coords(s) for s in cols],
            "entries": entries,
        }
        text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    else:
        col_labels = [_ket_label(s, names) for s in cols]
        row_labels = [_ket_label(s, names) for s in rows]
        cells = [[_fmt_scalar(op.matrix[i, j]) for j in range(len(cols))]
                 for i in range(len(rows))]
        widths = [max([len(col_labels[j])] + [len(cells[i][j]) for i in range(len(rows))])
                  for j in range(len(cols))]
        lines = [" " * (max((len(r) for r in row_labels), default=0) + 2)
                 + "  ".join(l.rjust(w) for l, w in zip(col_labels, widths))]
        rw = max((len(r) for r in row_labels), default=0)
        for i in range(len(rows)):
            lines.append(row_labels[i].rjust(rw) + "  "
                         + "  ".join(cells[i][j].rjust(widths[j]) for j in range(len(cols))))
        text = "\n".join(lines) + "\n"
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


def _load_state(path: str, exact: bool) -> FermiState:
    try:
        return fock.load_state(path, exact=exact)
    except FileNotFoundError:
        raise click.UsageError(f"state file not found: {path}")
    except DomainError as exc:
        raise click.UsageError(str(exc))


def _load_operator(path: str, p: Optional[int] = None,
                   orbs: Optional[int] = None) -> np.ndarray:
    """Dense square matrix from the operator file format {dim, entries}."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except FileNotFoundError:
        raise click.UsageError(f"operator file not found: {path}")
    except json.JSONDecodeError as exc:
        raise click.UsageError(f"cannot parse operator file {path}: {exc}")
    if not isinstance(data, dict) or set(data) - {"dim", "entries"}:
        raise click.UsageError("operator file must be a JSON object with fields dim, entries")
    dim = data.get("dim")
    entries = data.get("entries")
    if not isinstance(dim, int) or dim < 1:
        raise click.UsageError("operator file: dim must be a positive integer")
    if not isinstance(entries, list) or len(entries) != dim * dim:
        raise click.UsageError("operator file: entries must hold dim*dim [re, im] pairs")
    m = np.empty((dim, dim), dtype=complex)
    for idx, pair in enumerate(entries):
        if not isinstance(pair, list) or len(pair) != 2:
            raise click.UsageError("operator file: each entry must be an [re, im] pair")
        try:
            m[idx // dim, idx % dim] = complex(parse_number(pair[0]), parse_number(pair[1]))
        except DomainError as exc:
            raise click.UsageError(str(exc))
    return m


@click.group()
def main() -> None:
    """Fermionic many-particle toolbox."""


@main.command("enumerate")
@click.option("--orbs", required=True, help="comma-separated orbital group sizes")
@click.option("--n", "particles", required=True, help="comma-separated particle counts")
@click.option("--limit", default=20, show_default=True, help="number of kets to print")
def cmd_enumerate(orbs: str, particles: str, limit: int) -> None:
    """Print the dimension and first basis determinants of a configuration."""
    try:
        config = OrbitalConfig(_parse_int_list(orbs), _parse_int_list(particles))
    except DomainError as exc:
        raise click.UsageError(str(exc))
    basis = fock.enumerate_basis(config)
    click.echo(f"dim {config.dim}")
    for s in basis[:limit]:
        click.echo(_ket_label(s, config.orbital_names))


@main.command("rdm")
@click.argument("state_file")
@click.argument("state_file_2", required=False)
@click.option("--p", "p", type=int, required=True, help="RDM order")
@click.option("--exact", is_flag=True, help="use exact rational arithmetic")
@click.option("--out", default=None, help="write output to a file")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
def cmd_rdm(state_file, state_file_2, p, exact, out, fmt) -> None:
    """p-body reduced density matrix of one state or a state pair."""
    psi1 = _load_state(state_file, exact)
    psi2 = _load_state(state_file_2, exact) if state_file_2 else None
    try:
        gamma = ops.rdm(psi1, psi2, p)
    except DomainError as exc:
        raise click.UsageError(str(exc))
    _emit_matrix(gamma, fmt, out, names=psi1.config.orbital_names)


@main.command("expect")
@click.argument("state_file")
@click.argument("op_file")
@click.option("--p", "p", type=int, required=True, help="particle order of the operator")
@click.option("--via-lift", is_flag=True,
              help="cross-check through the lifted operator instead of the RDM")
def cmd_expect(state_file, op_file, p, via_lift) -> None:
    """Expectation value trace(b * rdm) of a p-body operator."""
    psi = _load_state(state_file, exact=False)
    orbs = psi.config.total_orbitals
    m = _load_operator(op_file)
    if m.shape[0] != math.comb(orbs, p):
        raise click.UsageError(
            f"operator dimension {m.shape[0]} does not match C({orbs},{p})")
    sector = OrbitalConfig((orbs,), (p,))
    b = FermiOp(sector, sector, m)
    try:
        if via_lift:
            n = psi.config.total_particles
            lifted = ops.p2n(b, n)
            full = fock.to_full(psi)
            value = fock.inner(full, lifted.apply(full))
        else:
            value = ops.expectation(b, psi)
    except DomainError as exc:
        raise click.UsageError(str(exc))
    click.echo(_fmt_complex(value))


@main.command("tensor-op")
@click.argument("matrix_file")
@click.option("--n", "n", type=int, required=True, help="particle number of the lift")
@click.option("--out", default=None)
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
def cmd_tensor_op(matrix_file, n, out, fmt) -> None:
    """Antisymmetric N-fold tensor power of a one-particle operator."""
    m = _load_operator(matrix_file)
    try:
        lifted = ops.tensor_op(m, n)
    except DomainError as exc:
        raise click.UsageError(str(exc))
    _emit_matrix(lifted, fmt, out)


@main.command("p2n")
@click.argument("op_file")
@click.option("--p", "p", type=int, required=True, help="particle order of the operator")
@click.option("--n", "n", type=int, required=True, help="target particle number")
@click.option("--orbs", "orbs", type=int, required=True, help="total orbital count")
@click.option("--out", default=None)
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
def cmd_p2n(op_file, p, n, orbs, out, fmt) -> None:
    """Lift a p-body operator to the N-particle sector."""
    m = _load_operator(op_file)
    if not 0 <= p <= orbs:
        raise click.UsageError(f"invalid order p={p} for {orbs} orbitals")
    if m.shape[0] != math.comb(orbs, p):
        raise click.UsageError(
            f"operator dimension {m.shape[0]} does not match C({orbs},{p})")
    sector = OrbitalConfig((orbs,), (p,))
    try:
        lifted = ops.p2n(FermiOp(sector, sector, m), n)
    except DomainError as exc:
        raise click.UsageError(str(exc))
    _emit_matrix(lifted, fmt, out)


@main.command("spintrace")
@click.argument("state_file")
@click.argument("state_file_2", required=False)
@click.option("--real-orbitals", is_flag=True,
              help="also identify within-pair symbol swaps (real orbitals only)")
@click.option("--out", default=None)
def cmd_spintrace(state_file, state_file_2, real_orbitals, out) -> None:
    """Coulomb integral symbol table of the 2-RDM of a state (pair)."""
    psi1 = _load_state(state_file, exact=False)
    psi2 = _load_state(state_file_2, exact=False) if state_file_2 else None
    try:
        gamma = ops.rdm(psi1, psi2, 2)
        table = spintrace.spin_trace_coulomb(gamma, real_orbitals=real_orbitals)
    except DomainError as exc:
        raise click.UsageError(str(exc))
    text = json.dumps(table.to_jsonable(), indent=2) + "\n"
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


@main.command("norbs")
@click.argument("state_file")
def cmd_norbs(state_file) -> None:
    """Transform a state to its natural orbitals and report the residual
    off-diagonal norm of the transformed 1-RDM."""
    psi = _load_state(state_file, exact=False)
    try:
        value = natural_orbital_offdiag(psi)
    except DomainError as exc:
        raise click.UsageError(str(exc))
    click.echo(f"offdiag {_fmt_float(value)}")


def natural_orbital_offdiag(psi: FermiState) -> float:
    """Off-diagonal Frobenius norm of the 1-RDM after the natural-orbital
    base change on the N-particle space."""
    gamma1 = ops.rdm(psi, p=1)
    _, u = np.linalg.eigh(gamma1.matrix.astype(complex))
    n = psi.config.total_particles
    transformed = ops.tensor_op(u, n).adjoint().apply(fock.to_full(psi))
    g = ops.rdm(transformed, p=1).matrix.astype(complex)
    return float(np.linalg.norm(g - np.diag(np.diag(g))))


if __name__ == "__main__":
    main()
