"""Command-line interface.

Subcommands: ``evolve``, ``boost``, ``amplitude``, ``invariance-scan`` and
``selftest``. Every subcommand accepts ``--format json|csv|pretty``.

Exit codes: 0 success, 1 a checked claim failed, 2 usage error, 3 physics
domain error (singular kinematics, off-shell input).

Configuration precedence: command-line flags, then the config file named by
``--config`` or ``$SPINOR_EPR_CONFIG``, then built-in defaults. The config
file holds ``key = value`` lines; ``#`` starts a comment. Known keys:
``alpha``, ``mass``, ``r``, ``format``, ``seed``.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from dataclasses import dataclass, field

import numpy as np

from . import checks, entanglement, lorentz, qed_amplitude, qed_reduction, spin_dynamics
from .errors import PhysicsDomainError, SpinorEPRError

CONFIG_ENV = "SPINOR_EPR_CONFIG"
DEFAULTS = {"alpha": spin_dynamics.FINE_STRUCTURE, "mass": 1.0, "r": 1.0, "format": "pretty", "seed": 0}
JSON_DIGITS = 12
PRETTY_DIGITS = 6


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    alpha: float = DEFAULTS["alpha"]
    mass: float = DEFAULTS["mass"]
    r: float = DEFAULTS["r"]
    format: str = DEFAULTS["format"]
    seed: int = DEFAULTS["seed"]

    @property
    def e(self) -> float:
        return math.sqrt(4.0 * math.pi * self.alpha)


@dataclass
class Report:
    command: str
    config: RunConfig
    results: list[dict] = field(default_factory=list)
    checks: list[checks.Check] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)


# --- config -----------------------------------------------------------------

def read_config_file(path: str) -> dict:
    values: dict = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise UsageError(f"{path}:{lineno}: expected 'key = value'")
            key, value = (s.strip() for s in line.split("=", 1))
            if key not in DEFAULTS:
                raise UsageError(f"{path}:{lineno}: unknown key {key!r}")
            values[key] = value
    return values


def resolve_config(args: argparse.Namespace) -> RunConfig:
    merged = dict(DEFAULTS)
    path = args.config or os.environ.get(CONFIG_ENV)
    if path:
        merged.update(read_config_file(path))
    for key in DEFAULTS:
        flag = getattr(args, key, None)
        if flag is not None:
            merged[key] = flag
    try:
        cfg = RunConfig(
            alpha=float(merged["alpha"]),
            mass=float(merged["mass"]),
            r=float(merged["r"]),
            format=str(merged["format"]),
            seed=int(merged["seed"]),
        )
    except ValueError as exc:
        raise UsageError(f"bad configuration value: {exc}") from None
    if min(cfg.alpha, cfg.mass, cfg.r) <= 0:
        raise UsageError("alpha, mass and r must be positive")
    if cfg.format not in ("json", "csv", "pretty"):
        raise UsageError(f"unknown format {cfg.format!r}")
    return cfg


# --- number formatting ------------------------------------------------------

def _round(x: float, digits: int) -> float:
    if not math.isfinite(x):
        return x
    y = float(f"{x:.{digits}g}")
    return 0.0 if y == 0 else y


def to_plain(value, digits: int = JSON_DIGITS):
    """Convert numpy scalars/arrays and complex numbers into JSON-ready values.

    Complex numbers become ``[re, im]``.
    """
    if isinstance(value, dict):
        return {k: to_plain(v, digits) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_plain(v, digits) for v in value]
    if isinstance(value, np.ndarray):
        return [to_plain(v, digits) for v in value.tolist()]
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (complex, np.complexfloating)):
        return [_round(float(value.real), digits), _round(float(value.imag), digits)]
    if isinstance(value, (float, np.floating)):
        return _round(float(value), digits)
    return value


def flatten(row: dict, digits: int = JSON_DIGITS) -> dict:
    """One level of scalars for CSV: lists become ``key_0, key_1, ...``, complex ``key_re/key_im``."""
    out: dict = {}

    def put(key, value):
        if isinstance(value, dict):
            for k, v in value.items():
                put(f"{key}_{k}", v)
        elif isinstance(value, (list, tuple, np.ndarray)):
            for i, v in enumerate(list(value)):
                put(f"{key}_{i}", v)
        elif isinstance(value, (complex, np.complexfloating)):
            out[f"{key}_re"] = _round(float(value.real), digits)
            out[f"{key}_im"] = _round(float(value.imag), digits)
        else:
            out[key] = to_plain(value, digits)

    for k, v in row.items():
        put(k, v)
    return out


def render(report: Report) -> str:
    cfg = report.config
    if cfg.format == "json":
        payload = {
            "command": report.command,
            "config": to_plain({"alpha": cfg.alpha, "mass": cfg.mass, "r": cfg.r}),
            "results": to_plain(report.results),
            "checks": to_plain([c.as_dict() for c in report.checks]),
        }
        return json.dumps(payload, indent=2) + "\n"
    if cfg.format == "csv":
        rows = [flatten(r) for r in report.results]
        header: list[str] = []
        for r in rows:
            header += [k for k in r if k not in header]
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=header, lineterminator="\n")
        writer.writeheader()
        for r in rows:
            writer.writerow({k: "" if v is None else v for k, v in r.items()})
        return buf.getvalue()
    return render_pretty(report)


def _fmt(value) -> str:
    if isinstance(value, dict):
        return "{" + ", ".join(f"{k}: {_fmt(v)}" for k, v in value.items()) + "}"
    if isinstance(value, np.ndarray):
        value = value.tolist()
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_fmt(v) for v in value) + "]"
    if isinstance(value, (complex, np.complexfloating)):
        re, im = to_plain(value, PRETTY_DIGITS)
        return f"{re:g}{im:+g}i"
    if isinstance(value, (bool, np.bool_)):
        return str(bool(value))
    if isinstance(value, (float, np.floating)):
        return f"{to_plain(value, PRETTY_DIGITS):g}"
    return "-" if value is None else str(value)


def _is_tabular(rows: list[dict]) -> bool:
    if len(rows) < 2 or any(list(r) != list(rows[0]) for r in rows):
        return False
    return all(not isinstance(v, (dict, list, tuple, np.ndarray)) for r in rows for v in r.values())


def render_pretty(report: Report) -> str:
    cfg = report.config
    lines = [f"{report.command}  (alpha={cfg.alpha:.9g}, mass={cfg.mass:g}, r={cfg.r:g})"]
    groups: list[list[dict]] = []
    for row in report.results:
        if groups and list(groups[-1][0]) == list(row):
            groups[-1].append(row)
        else:
            groups.append([row])
    for rows in groups:
        if _is_tabular(rows):
            keys = list(rows[0])
            cells = [[_fmt(r[k]) for k in keys] for r in rows]
            widths = [max(len(k), *(len(c[i]) for c in cells)) for i, k in enumerate(keys)]
            lines.append("  " + "  ".join(k.ljust(w) for k, w in zip(keys, widths)))
            for c in cells:
                lines.append("  " + "  ".join(x.ljust(w) for x, w in zip(c, widths)))
        else:
            for row in rows:
                for k, v in row.items():
                    lines.append(f"  {k}: {_fmt(v)}")
    for note in report.notes:
        lines.append(f"  note: {note}")
    if report.checks:
        lines.append("checks:")
        width = max(len(c.name) for c in report.checks)
        for c in report.checks:
            status = "PASS" if c.passed else "FAIL"
            lines.append(
                f"  [{status}] {c.name:<{width}}  dev={c.deviation:.3e}  tol={c.tolerance:.1e}  ({c.paper_ref})"
            )
    return "\n".join(lines) + "\n"


# --- subcommands --------------------------------------------------------------

def _spin_pair(text: str) -> tuple[str, str]:
    parts = [p.strip().lower() for p in text.split(",")]
    if len(parts) != 2 or any(p not in ("up", "down") for p in parts):
        raise argparse.ArgumentTypeError(f"expected two of up/down separated by a comma, got {text!r}")
    return parts[0], parts[1]


def _axis(text: str):
    if text.lower() in lorentz.AXES:
        return text.lower()
    try:
        v = np.array([float(x) for x in text.split(",")])
    except ValueError:
        raise argparse.ArgumentTypeError(f"axis must be x, y, z or 'nx,ny,nz', got {text!r}") from None
    if v.shape != (3,) or not np.linalg.norm(v) > 0:
        raise argparse.ArgumentTypeError(f"axis must be a non-zero 3-vector, got {text!r}")
    return tuple(v / np.linalg.norm(v))


def _float_list(text: str) -> list[float]:
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


def _spin_amplitude_row(c) -> dict:
    return {label: c[i] for i, label in enumerate(spin_dynamics.BASIS_LABELS)}


def cmd_evolve(args, cfg: RunConfig) -> Report:
    if args.J is not None:
        J = args.J
        if J == 0:
            raise UsageError("--J must be non-zero")
    else:
        J = spin_dynamics.coupling_J(cfg.r, cfg.mass, cfg.alpha).J
    if args.t is not None:
        if args.J is None:
            raise UsageError("--t needs an explicit --J; use --jt for the dimensionless 2Jt")
        t = args.t
    else:
        t = args.jt / (2.0 * J)
    start = spin_dynamics.product_state("down", "up", cfg.mass)
    state = spin_dynamics.evolve(start, J, t)
    c = state.spin_amplitudes()
    rep = entanglement.analyze(state)
    phase = 2.0 * J * t
    row = {
        "J": J,
        "t": t,
        "two_J_t": phase,
        "amp_down_up": c[spin_dynamics.IDX_DU],
        "amp_up_down": c[spin_dynamics.IDX_UD],
        "spin_amplitudes": _spin_amplitude_row(c),
        "spinor_norm": state.normalization,
        "entropy_bits": rep.entropy_bits,
        "max_entanglement_time": np.pi / (8.0 * abs(J)),
    }
    expected = np.array([np.cos(phase), -1j * np.sin(phase)])
    got = np.array([c[spin_dynamics.IDX_DU], c[spin_dynamics.IDX_UD]])
    report = Report("evolve", cfg, [row])
    report.checks.append(
        checks.make_check("amplitudes (cos 2Jt, -i sin 2Jt)", "entangling evolution", float(np.max(np.abs(got - expected))), 1e-12)
    )
    report.checks.append(
        checks.make_check("spin-space norm 1", "entangling evolution", abs(float(np.linalg.norm(c)) - 1.0), 1e-12)
    )
    return report


def cmd_boost(args, cfg: RunConfig) -> Report:
    if args.beta is not None:
        if not -1.0 < args.beta < 1.0:
            raise UsageError("--beta must satisfy |beta| < 1")
        t = lorentz.boost_from_beta(args.axis, args.beta)
    else:
        t = lorentz.boost(args.axis, args.rapidity)
    if args.state == "epr":
        psi = spin_dynamics.epr_state(cfg.mass)
    else:
        psi = spin_dynamics.product_state("down", "up", cfg.mass)
    moved = lorentz.transform_two_particle(t, psi)
    rest_rep = entanglement.analyze(psi)
    rep = entanglement.analyze(moved)
    row = {
        "state": args.state,
        "axis": list(lorentz.unit_axis(args.axis)),
        "rapidity": t.rapidity,
        "p1": moved.p1,
        "p2": moved.p2,
        "amplitudes": moved.amplitudes,
        "norm_ratio": moved.normalization / psi.normalization,
        "schmidt_spectrum": rep.schmidt_spectrum,
        "spin_schmidt_spectrum": rep.spin_schmidt_spectrum,
        "entropy_bits": rep.entropy_bits,
        "concurrence": rep.concurrence,
    }
    report = Report("boost", cfg, [row])
    report.checks.append(
        checks.make_check(
            "entropy equals rest-frame entropy", "entanglement in a moving frame",
            abs(rep.entropy_bits - rest_rep.entropy_bits), 1e-9,
        )
    )
    report.checks.append(
        checks.make_check(
            "S^dagger S proportional to identity on spin subspace", "entanglement in a moving frame",
            entanglement.spin_subspace_isometry_deviation(t, psi.p1, cfg.mass), 1e-10,
        )
    )
    return report


def cmd_amplitude(args, cfg: RunConfig) -> Report:
    k = qed_amplitude.elastic_kinematics(
        args.pmag * cfg.mass, args.angle, args.spins_in, args.spins_out, mass=cfg.mass, e=cfg.e
    )
    amp = qed_amplitude.tree_amplitude(k)
    swapped = qed_amplitude.tree_amplitude(k.swap_outgoing())
    row = {
        "row": "amplitude",
        "pmag": args.pmag * cfg.mass,
        "angle": args.angle,
        "spins_in": ",".join(args.spins_in),
        "spins_out": ",".join(args.spins_out),
        "q": k.momentum_transfer,
        "direct": amp.direct_term,
        "exchange": amp.exchange_term,
        "total": amp.value,
        "total_swapped": swapped.value,
    }
    report = Report("amplitude", cfg, [row])
    report.checks.append(
        checks.make_check(
            "swapping outgoing particles negates iM", "two-diagram amplitude, fermion statistics",
            abs(amp.value + swapped.value) / abs(amp.value), 1e-10,
        )
    )
    if args.nr_check:
        try:
            kernel = qed_reduction.extract_spin_potential(k)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        target = qed_reduction.dipole_momentum_kernel(kernel.q, cfg.mass, cfg.e)
        scale = float(np.max(np.abs(target)))
        labels = spin_dynamics.BASIS_LABELS
        for a in range(4):
            for b in range(4):
                report.results.append(
                    {
                        "row": "nr-check",
                        "out": labels[a],
                        "in": labels[b],
                        "extracted": kernel.matrix[a, b],
                        "dipole_kernel": target[a, b],
                        "relative_deviation": abs(kernel.matrix[a, b] - target[a, b]) / scale,
                    }
                )
        report.checks.append(
            checks.make_check(
                "extracted spin-spin kernel matches dipole kernel", "dipole-dipole interaction matrix",
                qed_reduction.kernel_deviation(kernel, cfg.mass, cfg.e), 0.05,
            )
        )
    return report


def cmd_invariance_scan(args, cfg: RunConfig) -> Report:
    psi = spin_dynamics.epr_state(cfg.mass) if args.state == "epr" else spin_dynamics.product_state("down", "up", cfg.mass)
    grid = entanglement.default_grid(args.rapidities, args.angles, args.axes)
    rows = entanglement.invariance_scan(psi, grid, include_negative_control=args.include_negative_control)
    report = Report("invariance-scan", cfg)
    worst = 0.0
    for row in rows:
        desc = row.transform
        within = row.max_deviation <= args.tol
        if not row.negative_control:
            worst = max(worst, row.max_deviation)
        report.results.append(
            {
                "kind": desc["kind"],
                "label": desc["label"],
                "axis": "" if desc["axis"] is None else ",".join(f"{c:g}" for c in desc["axis"]),
                "parameter": desc["rapidity"] if desc["rapidity"] is not None else desc["angle"],
                "rapidity": desc["rapidity"],
                "angle": desc["angle"],
                "entropy_bits": row.entropy_bits,
                "entropy_deviation": row.entropy_deviation,
                "spectrum_deviation": row.spectrum_deviation,
                "spin_spectrum_deviation": row.spin_spectrum_deviation,
                "negative_control": row.negative_control,
                "pass": within,
            }
        )
    report.checks.append(
        checks.make_check("entanglement invariant over grid", "entanglement in a moving frame", worst, args.tol)
    )
    if args.include_negative_control:
        report.notes.append("negative-control rows use a map outside the physical model; they are excluded from the exit status")
    return report


def cmd_selftest(args, cfg: RunConfig) -> Report:
    report = Report("selftest", cfg)
    report.checks.extend(checks.run_all(cfg.seed, cfg.alpha))
    if cfg.format == "csv":
        report.results.extend(c.as_dict() for c in report.checks)
    return report


# --- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help=f"key = value config file (default: ${CONFIG_ENV})")
    common.add_argument("--alpha", type=float, help="fine-structure constant (default 1/137.035999)")
    common.add_argument("--mass", type=float, help="particle mass, natural units (default 1)")
    common.add_argument("--r", type=float, help="separation of the two particles (default 1)")
    common.add_argument("--format", choices=("json", "csv", "pretty"), help="output format (default pretty)")
    common.add_argument("--seed", type=int, help="seed for randomized checks (default 0)")
    common.add_argument("--out", help="write output to this file instead of stdout")

    parser = argparse.ArgumentParser(prog="spinor-epr", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "evolve", parents=[common],
        help="spin-exchange evolution from |down, up>",
        description="Evolve |down, up> under V = J sigma1.sigma2. --jt is the dimensionless product 2Jt; "
        "J comes from alpha, mass and r unless --J is given.",
    )
    g = p.add_mutually_exclusive_group()
    g.add_argument("--jt", type=float, default=math.pi / 4, help="the product 2Jt (default pi/4, the EPR point)")
    g.add_argument("--t", type=float, help="raw time; requires --J")
    p.add_argument("--J", type=float, help="explicit coupling constant")
    p.set_defaults(func=cmd_evolve)

    p = sub.add_parser("boost", parents=[common], help="boost a two-particle state and analyze it")
    p.add_argument("--axis", type=_axis, default="x", help="x, y, z or nx,ny,nz")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--rapidity", type=float, default=1.0)
    g.add_argument("--beta", type=float, help="velocity, converted to rapidity artanh(beta)")
    p.add_argument("--state", choices=("epr", "product"), default="epr")
    p.set_defaults(func=cmd_boost)

    p = sub.add_parser("amplitude", parents=[common], help="tree-level amplitude for CM elastic kinematics")
    p.add_argument("--pmag", type=float, default=0.1, help="|p| in units of the mass")
    p.add_argument("--angle", type=float, default=math.pi / 2, help="scattering angle, radians")
    p.add_argument("--spins-in", type=_spin_pair, default=("up", "down"))
    p.add_argument("--spins-out", type=_spin_pair, default=("up", "down"))
    p.add_argument("--nr-check", action="store_true", help="compare the extracted spin-spin kernel with the dipole kernel")
    p.set_defaults(func=cmd_amplitude)

    p = sub.add_parser("invariance-scan", parents=[common], help="entanglement over a grid of Lorentz transforms")
    p.add_argument("--state", choices=("epr", "product"), default="epr")
    p.add_argument("--axes", type=lambda s: tuple(_axis(a) for a in s.split(",")), default=("x", "y", "z"),
                   help="comma-separated axis names")
    p.add_argument("--rapidities", type=_float_list, default=list(entanglement.DEFAULT_RAPIDITIES))
    p.add_argument("--angles", type=_float_list, default=list(entanglement.DEFAULT_ANGLES))
    p.add_argument("--tol", type=float, default=1e-9, help="maximum allowed deviation (default 1e-9)")
    p.add_argument("--include-negative-control", action="store_true")
    p.set_defaults(func=cmd_invariance_scan)

    p = sub.add_parser("selftest", parents=[common], help="run the property checks")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on bad usage and 0 after --help
        return int(exc.code or 0)
    try:
        cfg = resolve_config(args)
        report = args.func(args, cfg)
    except UsageError as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except PhysicsDomainError as exc:
        print(f"{parser.prog} {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3
    except SpinorEPRError as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return 2
    text = render(report)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if report.all_passed else 1


if __name__ == "__main__":
    sys.exit(main())
