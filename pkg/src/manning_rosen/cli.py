"""Command-line front end: spectra, reference-table audit, wavefunction dumps,
oracle comparisons, and degeneracy listings.

Exit codes are stable: 0 success, 2 usage error, 3 unbound state,
4 solver failure.  Identical flags produce byte-identical output.
"""

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass

from .errors import ConvergenceError, DomainError, LabelError, UnboundStateError
from .model import CentrifugalMode, PotentialParams, QuantumState
from .oracle import RadialGrid, approximation_audit, default_grid, solve_radial
from .reference import audit_reference_table
from .spectrum import (critical_coupling, degenerate_partners, energy,
                       epsilon_parameter, parse_spectroscopic, shape_parameter,
                       state_label)
from .wavefun import normalization_quadrature, radial_wavefunction

__all__ = ["main"]

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_UNBOUND = 3
EXIT_SOLVER = 4


class UsageError(Exception):
    """Bad flag combination or value; maps to exit code 2."""


@dataclass(frozen=True)
class RunConfig:
    """Resolved run-wide settings."""

    params: PotentialParams
    D: int
    output_format: str
    precision: int
    out_path: str | None


# ---------------------------------------------------------------------------
# argument plumbing
# ---------------------------------------------------------------------------

def _add_physics_flags(sub: argparse.ArgumentParser, with_dim: bool = True) -> None:
    sub.add_argument("--A", type=float, default=None, help="dimensionless coupling A")
    sub.add_argument("--A-over-b", dest="a_over_b", type=float, default=None,
                     help="coupling as the ratio A/b (pairs with --inv-b)")
    sub.add_argument("--b", type=float, default=None, help="screening length b")
    sub.add_argument("--inv-b", dest="inv_b", type=float, default=None,
                     help="screening 1/b (alternative to --b)")
    sub.add_argument("--alpha", type=float, default=None, help="shape parameter alpha")
    sub.add_argument("--mu", type=float, default=None, help="reduced mass (default 1, atomic units)")
    sub.add_argument("--hbar", type=float, default=None, help="hbar (default 1, atomic units)")
    if with_dim:
        sub.add_argument("--dim", type=int, default=None, help="spatial dimension D >= 2")


def _add_output_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--format", dest="output_format", default=None,
                     choices=("text", "csv", "json"), help="output format (default text)")
    sub.add_argument("--precision", type=int, default=None,
                     help="decimal digits in text/csv output (1..17, default 9)")
    sub.add_argument("--out", default=None, help="write output to this path instead of stdout")
    sub.add_argument("--config", default=None,
                     help="optional key=value config file; flags override it")


def _add_state_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--states", default=None,
                     help='comma-separated spectroscopic labels, e.g. "2p,3d,4f"')
    sub.add_argument("--n", dest="n_range", default=None,
                     help='radial quantum number or range, e.g. "0" or "0:3"')
    sub.add_argument("--l", dest="l_range", default=None,
                     help='orbital quantum number or range, e.g. "1" or "0:2"')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="manning-rosen",
        description="Bound states of the D-dimensional Manning-Rosen potential.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("spectrum", help="closed-form bound-state energies")
    _add_physics_flags(sp)
    _add_state_flags(sp)
    _add_output_flags(sp)

    tb = sub.add_parser("table", help="recompute the published reference table and audit it")
    _add_output_flags(tb)

    wf = sub.add_parser("wavefunction", help="sample a normalized radial wavefunction")
    _add_physics_flags(wf)
    _add_state_flags(wf)
    wf.add_argument("--samples", type=int, default=1000, help="number of radial samples")
    _add_output_flags(wf)

    orc = sub.add_parser("oracle", help="finite-difference eigensolver vs closed form")
    _add_physics_flags(orc)
    _add_state_flags(orc)
    orc.add_argument("--mode", choices=("exact", "approx", "both"), default="both",
                     help="centrifugal mode(s) of the solver")
    orc.add_argument("--r-min", dest="r_min", type=float, default=None)
    orc.add_argument("--r-max", dest="r_max", type=float, default=None)
    orc.add_argument("--n-points", dest="n_points", type=int, default=None)
    _add_output_flags(orc)

    dg = sub.add_parser("degeneracy", help="interdimensional degenerate partners")
    _add_physics_flags(dg)
    dg.add_argument("--n", type=int, required=True)
    dg.add_argument("--l", type=int, required=True)
    dg.add_argument("--dmin", type=int, required=True)
    dg.add_argument("--dmax", type=int, required=True)
    _add_output_flags(dg)

    cc = sub.add_parser("critical-coupling", help="coupling at which a state unbinds")
    cc.add_argument("--n", type=int, required=True)
    cc.add_argument("--l", type=int, required=True)
    cc.add_argument("--dim", type=int, required=True)
    cc.add_argument("--alpha", type=float, required=True)
    _add_output_flags(cc)

    return parser


def _load_config(path: str | None) -> dict[str, str]:
    if path is None:
        return {}
    values: dict[str, str] = {}
    try:
        with open(path, encoding="utf-8") as handle:
            for line in handle:
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                if "=" not in line:
                    raise UsageError(f"bad config line (want key=value): {line!r}")
                key, _, value = line.partition("=")
                values[key.strip().replace("-", "_").lower()] = value.strip()
    except OSError as exc:
        raise UsageError(f"cannot read config file: {exc}") from exc
    return values


def _pick(args, config: dict[str, str], key: str, cast, fallback=None):
    value = getattr(args, key, None)
    if value is not None:
        return value
    config_key = key.lower()
    if config_key in config:
        try:
            return cast(config[config_key])
        except ValueError as exc:
            raise UsageError(f"bad config value for {key}: {config[config_key]!r}") from exc
    return fallback


def _resolve_run(args, need_dim: bool = True) -> RunConfig:
    config = _load_config(getattr(args, "config", None))
    mu = _pick(args, config, "mu", float, 1.0)
    hbar = _pick(args, config, "hbar", float, 1.0)
    b_flag = _pick(args, config, "b", float)
    inv_b = _pick(args, config, "inv_b", float)
    if b_flag is not None and inv_b is not None:
        raise UsageError("give either --b or --inv-b, not both")
    if b_flag is not None:
        b = b_flag
    elif inv_b is not None:
        if inv_b <= 0.0:
            raise UsageError("--inv-b must be positive")
        b = 1.0 / inv_b
    else:
        raise UsageError("screening length required: give --b or --inv-b")
    a_flag = _pick(args, config, "A", float)
    a_over_b = _pick(args, config, "a_over_b", float)
    if a_flag is not None and a_over_b is not None:
        raise UsageError("give either --A or --A-over-b, not both")
    if a_flag is not None:
        a_value = a_flag
    elif a_over_b is not None:
        a_value = a_over_b * b
    else:
        raise UsageError("coupling required: give --A or --A-over-b")
    alpha = _pick(args, config, "alpha", float)
    if alpha is None:
        raise UsageError("--alpha is required")
    dim = _pick(args, config, "dim", int) if need_dim else 3
    if need_dim:
        if dim is None:
            raise UsageError("--dim is required")
        if dim < 2:
            raise UsageError("--dim must be >= 2")
    precision = _pick(args, config, "precision", int, 9)
    if not 1 <= precision <= 17:
        raise UsageError("--precision must lie in 1..17")
    output_format = _pick(args, config, "output_format", str, "text")
    try:
        params = PotentialParams(A=a_value, alpha=alpha, b=b, mu=mu, hbar=hbar)
    except DomainError as exc:
        raise UsageError(str(exc)) from exc
    return RunConfig(params=params, D=dim, output_format=output_format,
                     precision=precision, out_path=getattr(args, "out", None))


def _parse_range(text: str, name: str) -> list[int]:
    try:
        if ":" in text:
            lo_text, _, hi_text = text.partition(":")
            lo, hi = int(lo_text), int(hi_text)
        else:
            lo = hi = int(text)
    except ValueError as exc:
        raise UsageError(f"bad {name} range {text!r} (want 'k' or 'lo:hi')") from exc
    if lo < 0 or hi < lo:
        raise UsageError(f"bad {name} range {text!r}")
    return list(range(lo, hi + 1))


def _resolve_states(args) -> list[tuple[int, int]]:
    """(n, l) pairs from --states labels or --n/--l ranges, sorted by (l, n)."""
    pairs: set[tuple[int, int]] = set()
    if args.states:
        for label in args.states.split(","):
            label = label.strip()
            if not label:
                continue
            try:
                pairs.add(parse_spectroscopic(label))
            except LabelError as exc:
                raise UsageError(str(exc)) from exc
    elif args.n_range is not None and args.l_range is not None:
        for n in _parse_range(args.n_range, "--n"):
            for l in _parse_range(args.l_range, "--l"):
                pairs.add((n, l))
    else:
        raise UsageError("give --states, or both --n and --l")
    if not pairs:
        raise UsageError("no states requested")
    return sorted(pairs, key=lambda pair: (pair[1], pair[0]))


def _emit(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)


def _format_table(header: list[str], rows: list[list[str]]) -> str:
    widths = [max(len(h), *(len(row[i]) for row in rows)) if rows else len(h)
              for i, h in enumerate(header)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip()]
    for row in rows:
        lines.append("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
    return "\n".join(lines) + "\n"


def _format_csv(header: list[str], rows: list[list[str]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def _format_json(payload) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _fmt(value: float, precision: int) -> str:
    return f"{value:.{precision}f}"


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _cmd_spectrum(args) -> int:
    run = _resolve_run(args)
    states = _resolve_states(args)
    rows: list[list[str]] = []
    records = []
    bound_count = 0
    for n, l in states:
        state = QuantumState(n=n, l=l, D=run.D)
        label = state_label(n, l)
        record = {"label": label, "n": n, "l": l, "D": run.D}
        try:
            entry = energy(run.params, state)
            bound_count += 1
            record.update(status="bound", energy=entry.energy,
                          epsilon=entry.epsilon, eta=entry.eta)
            rows.append([label, str(n), str(l), str(run.D),
                         _fmt(entry.energy, run.precision),
                         _fmt(entry.epsilon, run.precision),
                         _fmt(entry.eta, run.precision), "bound"])
        except UnboundStateError as exc:
            eta = 0.5 * (shape_parameter(run.params, state) - 1.0)
            record.update(status="unbound", energy=None, epsilon=exc.epsilon, eta=eta)
            rows.append([label, str(n), str(l), str(run.D), "-",
                         _fmt(exc.epsilon, run.precision),
                         _fmt(eta, run.precision), "unbound"])
        records.append(record)
    header = ["label", "n", "l", "D", "energy", "epsilon", "eta", "status"]
    if run.output_format == "json":
        text = _format_json(records)
    elif run.output_format == "csv":
        text = _format_csv(header, rows)
    else:
        text = _format_table(header, rows)
        if bound_count == 0:
            text += "note: no bound states for these parameters\n"
    _emit(text, run.out_path)
    return EXIT_OK


def _cmd_table(args) -> int:
    config = _load_config(getattr(args, "config", None))
    precision = _pick(args, config, "precision", int, 9)
    if not 1 <= precision <= 17:
        raise UsageError("--precision must lie in 1..17")
    output_format = _pick(args, config, "output_format", str, "text")
    audit = audit_reference_table()
    header = ["state", "inv_b", "D", "alpha", "reference", "computed", "deviation", "flag"]
    rows = []
    payload = {}
    for item in audit:
        cell = item.cell
        flag = "SUSPECT" if item.suspect else "ok"
        rows.append([cell.label, f"{cell.inv_b:.3f}", str(cell.D), cell.alpha_label,
                     _fmt(cell.reference_energy, precision),
                     _fmt(item.computed_energy, precision),
                     f"{item.deviation:.3e}", flag])
        key = f"{cell.label},{cell.inv_b:.3f},{cell.alpha_label},{cell.D}"
        payload[key] = {
            "reference": cell.reference_energy,
            "computed": item.computed_energy,
            "deviation": item.deviation,
            "suspect": item.suspect,
        }
    suspects = [item for item in audit if item.suspect]
    if output_format == "json":
        text = _format_json(payload)
    elif output_format == "csv":
        text = _format_csv(header, rows)
    else:
        text = _format_table(header, rows)
        text += f"\nsuspected erratum cells: {len(suspects)}\n"
        for item in suspects:
            cell = item.cell
            text += (f"  {cell.label} D={cell.D} alpha={cell.alpha_label} "
                     f"1/b={cell.inv_b:.3f}: published {_fmt(cell.reference_energy, precision)}, "
                     f"recomputed {_fmt(item.computed_energy, precision)}\n")
    _emit(text, getattr(args, "out", None))
    return EXIT_OK


def _cmd_wavefunction(args) -> int:
    run = _resolve_run(args)
    states = _resolve_states(args)
    if len(states) != 1:
        raise UsageError("wavefunction wants exactly one state")
    if args.samples < 1:
        raise UsageError("--samples must be >= 1")
    n, l = states[0]
    state = QuantumState(n=n, l=l, D=run.D)
    try:
        solution = radial_wavefunction(run.params, state)
    except UnboundStateError as exc:
        sys.stderr.write(f"unbound state: {exc}\n")
        return EXIT_UNBOUND
    quad_norm = normalization_quadrature(run.params, solution.entry)
    # ratio of closed-form to quadrature normalization, squared: unit norm check
    norm_check = (solution.norm_constant / quad_norm) ** 2
    table = solution.sample(args.samples)
    label = state_label(n, l)
    if run.output_format == "json":
        payload = {
            "label": label, "n": n, "l": l, "D": run.D,
            "energy": solution.entry.energy,
            "epsilon": solution.entry.epsilon,
            "node_count": solution.node_count,
            "norm": norm_check,
            "columns": ["r", "z", "g", "g_squared"],
            "samples": [list(map(float, row)) for row in table],
        }
        text = _format_json(payload)
    else:
        header = ["r", "z", "g", "g_squared"]
        rows = [[_fmt(v, run.precision) for v in row] for row in table]
        text = _format_csv(header, rows)
        text += f"# norm={norm_check:.12f}\n# node_count={solution.node_count}\n"
    _emit(text, run.out_path)
    if run.out_path is not None:
        sys.stdout.write(
            f"{label}: wrote {args.samples} samples to {run.out_path} "
            f"(norm={norm_check:.12f}, nodes={solution.node_count})\n"
        )
    return EXIT_OK


def _cmd_oracle(args) -> int:
    run = _resolve_run(args)
    states = _resolve_states(args)
    grid_override = None
    if args.r_min is not None or args.r_max is not None or args.n_points is not None:
        if args.r_max is None or args.n_points is None:
            raise UsageError("grid override needs --r-max and --n-points (and optional --r-min)")
        try:
            grid_override = RadialGrid(
                r_min=args.r_min if args.r_min is not None else 1e-12 * run.params.b,
                r_max=args.r_max, n_points=args.n_points)
        except DomainError as exc:
            raise UsageError(str(exc)) from exc

    both = args.mode == "both"
    header = ["label", "n", "l", "D", "closed"]
    if both:
        header += ["exact", "approx", "rel_err_approx", "rel_err_exact"]
    else:
        header += [args.mode, "rel_err"]
    rows = []
    records = []
    try:
        for n, l in states:
            state = QuantumState(n=n, l=l, D=run.D)
            label = state_label(n, l)
            if epsilon_parameter(run.params, state) <= 0.0:
                rows.append([label, str(n), str(l), str(run.D), "-"]
                            + ["unbound"] * (len(header) - 5))
                records.append({"label": label, "n": n, "l": l, "D": run.D,
                                "status": "unbound"})
                continue
            if both:
                audit = approximation_audit(run.params, state, grid=grid_override)
                rows.append([label, str(n), str(l), str(run.D),
                             _fmt(audit.e_closed, run.precision),
                             _fmt(audit.e_exact, run.precision),
                             _fmt(audit.e_approx, run.precision),
                             f"{audit.rel_errors[0]:.3e}", f"{audit.rel_errors[1]:.3e}"])
                records.append({"label": label, "n": n, "l": l, "D": run.D,
                                "status": "ok", "closed": audit.e_closed,
                                "exact": audit.e_exact, "approx": audit.e_approx,
                                "rel_err_approx": audit.rel_errors[0],
                                "rel_err_exact": audit.rel_errors[1]})
            else:
                mode = (CentrifugalMode.EXACT if args.mode == "exact"
                        else CentrifugalMode.APPROXIMATED)
                grid = grid_override or default_grid(run.params, run.D, l, k=n + 1)
                result = solve_radial(run.params, run.D, l, mode=mode, grid=grid,
                                      k=n + 1, richardson=True)
                if len(result.eigenvalues) <= n:
                    raise ConvergenceError(
                        f"oracle found only {len(result.eigenvalues)} bound levels "
                        f"for {label}; grid {grid}")
                e_closed = energy(run.params, state).energy
                e_oracle = result.best(n)
                rel = abs(e_closed - e_oracle) / abs(e_oracle)
                rows.append([label, str(n), str(l), str(run.D),
                             _fmt(e_closed, run.precision),
                             _fmt(e_oracle, run.precision), f"{rel:.3e}"])
                records.append({"label": label, "n": n, "l": l, "D": run.D,
                                "status": "ok", "closed": e_closed,
                                args.mode: e_oracle, "rel_err": rel})
    except ConvergenceError as exc:
        sys.stderr.write(f"solver failure: {exc}\n")
        return EXIT_SOLVER
    if run.output_format == "json":
        text = _format_json(records)
    elif run.output_format == "csv":
        text = _format_csv(header, rows)
    else:
        text = _format_table(header, rows)
    _emit(text, run.out_path)
    return EXIT_OK


def _cmd_degeneracy(args) -> int:
    run = _resolve_run(args, need_dim=True)
    if args.dmin < 2 or args.dmax < args.dmin:
        raise UsageError("need 2 <= dmin <= dmax")
    state = QuantumState(n=args.n, l=args.l, D=run.D)
    partners = degenerate_partners(state, args.dmin, args.dmax)
    shared_energy = None
    rows = []
    records = []
    for partner in partners:
        try:
            entry = energy(run.params, partner)
            shared_energy = entry.energy
            status = "bound"
        except UnboundStateError:
            status = "unbound"
        except DomainError:
            status = "undefined"  # q = 0 with |1 - 2 alpha| < 1: no real solution
        rows.append([state_label(partner.n, partner.l), str(partner.n),
                     str(partner.l), str(partner.D), status])
        records.append({"label": state_label(partner.n, partner.l), "n": partner.n,
                        "l": partner.l, "D": partner.D, "status": status})
    header = ["label", "n", "l", "D", "status"]
    if run.output_format == "json":
        text = _format_json({"partners": records, "energy": shared_energy})
    elif run.output_format == "csv":
        text = _format_csv(header, rows)
    else:
        text = _format_table(header, rows)
        if shared_energy is not None:
            text += f"shared energy: {_fmt(shared_energy, run.precision)}\n"
        else:
            text += "shared energy: unbound for these parameters\n"
    _emit(text, run.out_path)
    return EXIT_OK


def _cmd_critical_coupling(args) -> int:
    config = _load_config(getattr(args, "config", None))
    precision = _pick(args, config, "precision", int, 9)
    if not 1 <= precision <= 17:
        raise UsageError("--precision must lie in 1..17")
    output_format = _pick(args, config, "output_format", str, "text")
    if args.dim < 2:
        raise UsageError("--dim must be >= 2")
    state = QuantumState(n=args.n, l=args.l, D=args.dim)
    try:
        a_critical = critical_coupling(state, args.alpha)
    except DomainError as exc:
        raise UsageError(str(exc)) from exc
    if output_format == "json":
        text = _format_json({"n": args.n, "l": args.l, "D": args.dim,
                             "alpha": args.alpha, "A_c": a_critical})
    else:
        text = f"A_c = {a_critical:.{precision}f}\n"
    _emit(text, getattr(args, "out", None))
    return EXIT_OK


_COMMANDS = {
    "spectrum": _cmd_spectrum,
    "table": _cmd_table,
    "wavefunction": _cmd_wavefunction,
    "oracle": _cmd_oracle,
    "degeneracy": _cmd_degeneracy,
    "critical-coupling": _cmd_critical_coupling,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage problems; keep that contract
        return int(exc.code) if exc.code is not None else EXIT_USAGE
    try:
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except (DomainError, LabelError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except ConvergenceError as exc:
        sys.stderr.write(f"solver failure: {exc}\n")
        return EXIT_SOLVER


if __name__ == "__main__":
    sys.exit(main())
