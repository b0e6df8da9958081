"""Command-line interface: `deco {compute|scan|table1|materials|oracle}`.

Exit codes: 0 success, 2 name resolution failure, 3 domain/computation error,
4 output I/O failure.  Human-readable tables use 3 significant digits; machine
outputs (CSV, JSON) use 9.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import tempfile
from dataclasses import replace

from .channels import EmissionModel
from .combine import DecoherenceSummary, evaluate
from .errors import GravdecoError, ResolutionError
from .heat_capacity import HeatCapacityModel
from .matter import (
    Catalog,
    Environment,
    SystemSpec,
    builtin_catalog,
    load_catalog_file,
)
from .quantities import pressure_to_si
from .scan import GridSpec, ScanResult, refine_contour, sweep, table_one
from .verify import oracle_report

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_RESOLUTION = 2
EXIT_DOMAIN = 3
EXIT_IO = 4


def _fmt(x: float, digits: int = 3) -> str:
    if math.isinf(x):
        return "inf"
    if math.isnan(x):
        return "nan"
    return format(x, f".{digits}g")


def _fmt9(x: float) -> str:
    return _fmt(x, 9)


def _parse_pressure(text: str) -> float:
    """Parse a pressure with an optional 'Pa' or 'mbar' suffix (default Pa)."""
    s = text.strip()
    unit = "Pa"
    for suffix in ("mbar", "Pa", "pa"):
        if s.endswith(suffix):
            unit = "mbar" if suffix == "mbar" else "Pa"
            s = s[: -len(suffix)].strip()
            break
    return pressure_to_si(float(s), unit)


def _parse_range(text: str) -> tuple[float, float]:
    lo, _, hi = text.partition(":")
    if not _:
        raise argparse.ArgumentTypeError(f"expected lo:hi, got {text!r}")
    return float(lo), float(hi)


def _parse_grid(text: str) -> tuple[int, int]:
    t, _, d = text.lower().partition("x")
    if not _:
        raise argparse.ArgumentTypeError(f"expected TxD (e.g. 200x200), got {text!r}")
    return int(t), int(d)


def _atomic_write(path: str, data: str) -> None:
    directory = os.path.dirname(os.path.abspath(path)) or "."
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-deco-")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _json_default(obj):
    if isinstance(obj, float):
        return obj
    raise TypeError(f"not JSON serializable: {obj!r}")


def _json_float(x: float):
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    if math.isnan(x):
        return "nan"
    return float(format(x, ".9g"))


# ---------------------------------------------------------------------------
# Argument plumbing

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="deco",
        description="Gravitational vs thermal/collisional decoherence times "
        "for a spherical crystal in superposition.",
    )
    parser.add_argument("--catalog", help="TOML file extending/overriding the built-in catalog")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_physics_flags(p, with_preset=True):
        if with_preset:
            p.add_argument("--preset", help="benchmark experiment preset")
        p.add_argument("--material", help="material name from the catalog")
        p.add_argument("--radius", type=float, help="sphere radius, m")
        p.add_argument("--temp", type=float, help="single temperature for system, photons and gas, K")
        p.add_argument("--temp-int", type=float, help="internal (system) temperature, K")
        p.add_argument("--temp-env", type=float, help="photon-bath temperature, K")
        p.add_argument("--temp-gas", type=float, help="residual-gas temperature, K")
        p.add_argument("--dx", type=float, help="superposition separation, m")
        p.add_argument("--pressure", type=_parse_pressure, metavar="P[Pa|mbar]",
                       help="residual-gas pressure; 1 mbar = 100 Pa exactly")
        p.add_argument("--gas", help="gas or mixture name (default: air)")
        p.add_argument("--cv-model", choices=[m.value for m in HeatCapacityModel],
                       default="auto", help="heat-capacity model")
        p.add_argument("--em-model", type=int, choices=[1, 2], default=1,
                       help="emission model")

    p = sub.add_parser("compute", help="evaluate one configuration")
    add_physics_flags(p)
    p.add_argument("--json", action="store_true", help="emit JSON instead of the table")
    p.add_argument("--out", help="write the output to this path instead of stdout")

    p = sub.add_parser("scan", help="sweep the (T, dx) grid and write CSV + JSON sidecar")
    add_physics_flags(p, with_preset=False)
    p.add_argument("--grid", type=_parse_grid, default=(200, 200), metavar="TxD",
                   help="grid resolution (default 200x200)")
    p.add_argument("--t-range", type=_parse_range, default=(1e-3, 1e2), metavar="lo:hi",
                   help="temperature range, K (default 1e-3:1e2)")
    p.add_argument("--dx-range", type=_parse_range, default=(1e-18, 1.0), metavar="lo:hi",
                   help="separation range, m (default 1e-18:1)")
    p.add_argument("--out", required=True, help="CSV output path; JSON sidecar gets .json")
    p.add_argument("--workers", type=int, default=1, help="parallel worker processes")
    p.add_argument("--contour-tol", type=float, default=1e-3,
                   help="contour refinement tolerance on |log(tau_g/tau_tc)|")

    p = sub.add_parser("table1", help="recompute the benchmark-experiment table")
    p.add_argument("--cv-model", choices=[m.value for m in HeatCapacityModel], default="auto")
    p.add_argument("--json", action="store_true")
    p.add_argument("--out")

    p = sub.add_parser("materials", help="list the catalog or show one entry")
    p.add_argument("action", nargs="?", default="list", choices=["list", "show"])
    p.add_argument("name", nargs="?")

    p = sub.add_parser("oracle", help="oracle verification")
    p.add_argument("action", choices=["verify"])
    p.add_argument("--out", help="write the JSON report to this path")

    return parser


def _resolve_config(args, catalog: Catalog) -> tuple[SystemSpec, Environment]:
    """Build the system/environment, starting from a preset when given and
    applying explicit flag overrides on top."""
    preset = catalog.preset(args.preset) if getattr(args, "preset", None) else None
    if preset is None and not args.material:
        raise ResolutionError("material", "(none given: use --material or --preset)")
    material = catalog.material(args.material) if args.material else preset.system.material

    t_all = args.temp
    if preset is not None:
        system, env = preset.system, preset.environment
    else:
        if args.radius is None or args.dx is None:
            raise GravdecoError("compute needs --radius and --dx (or --preset)")
        if t_all is None and args.temp_int is None:
            raise GravdecoError("compute needs --temp or --temp-int")
        system = SystemSpec(args.radius, material, 0.0, args.dx)
        env = Environment(0.0, 0.0, catalog.mixture("air"), 0.0)

    def pick(explicit, shared, current):
        if explicit is not None:
            return explicit
        if shared is not None:
            return shared
        return current

    system = replace(
        system,
        material=material,
        radius=args.radius if args.radius is not None else system.radius,
        separation=args.dx if args.dx is not None else system.separation,
        internal_temperature=pick(args.temp_int, t_all, system.internal_temperature),
    )
    env = replace(
        env,
        photon_temperature=pick(args.temp_env, t_all, env.photon_temperature),
        gas_temperature=pick(args.temp_gas, t_all, env.gas_temperature),
        pressure=args.pressure if args.pressure is not None else env.pressure,
        gas=catalog.mixture(args.gas) if args.gas else env.gas,
    )
    return system, env


# ---------------------------------------------------------------------------
# Output shaping

def _summary_json(summary: DecoherenceSummary) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "tau_g_s": _json_float(summary.tau_g),
        "tau_tc_s": _json_float(summary.tau_tc),
        "cv_model": summary.cv_model.value,
        "cv_used_J_per_K": _json_float(summary.cv_used),
        "n_molecules": _json_float(summary.n_molecules),
        "dominant": summary.dominant,
        "channels": [
            {
                "label": ch.rates.label,
                "lambda_per_m2_s": _json_float(ch.rates.lam),
                "gamma_per_s": _json_float(ch.rates.gamma),
                "tau_s": _json_float(ch.tau),
                "regime": ch.regime,
            }
            for ch in summary.channels
        ],
        "discrepancy_flags": list(summary.discrepancy_flags),
    }


def _summary_table(summary: DecoherenceSummary) -> str:
    lines = [
        f"tau_G  ({summary.cv_model.value:>10s})  {_fmt(summary.tau_g)} s",
        f"tau_TC             {_fmt(summary.tau_tc)} s",
        f"N_molecules        {_fmt(summary.n_molecules)}",
        f"C_V                {_fmt(summary.cv_used)} J/K",
        "",
        f"{'channel':<12} {'Lambda [1/m^2 s]':>18} {'gamma [1/s]':>14} {'tau [s]':>10}  regime",
    ]
    for ch in summary.channels:
        lines.append(
            f"{ch.rates.label:<12} {_fmt(ch.rates.lam):>18} "
            f"{_fmt(ch.rates.gamma):>14} {_fmt(ch.tau):>10}  {ch.regime}"
        )
    lines.append("")
    verdict = "GRAVITATIONAL" if summary.dominant else "thermal/collisional"
    lines.append(f"dominant mechanism: {verdict}")
    for flag in summary.discrepancy_flags:
        lines.append(f"note: {flag}")
    return "\n".join(lines) + "\n"


def scan_csv(result: ScanResult) -> str:
    rows = ["T_K,dx_m,tau_g_s,tau_tc_s,ratio,dominant"]
    for c in result.cells:
        rows.append(
            f"{_fmt9(c.T)},{_fmt9(c.dx)},{_fmt9(c.tau_g)},{_fmt9(c.tau_tc)},"
            f"{_fmt9(c.ratio)},{1 if c.dominant else 0}"
        )
    return "\n".join(rows) + "\n"


def scan_sidecar(result: ScanResult) -> dict:
    g = result.grid
    return {
        "schema_version": SCHEMA_VERSION,
        "grid": {
            "t_min_K": g.t_min, "t_max_K": g.t_max, "t_count": g.t_count,
            "dx_min_m": g.dx_min, "dx_max_m": g.dx_max, "dx_count": g.dx_count,
            "spacing": "log",
        },
        "metadata": result.metadata,
        "region_count": result.region_count,
        "markers": result.markers,
        "contour_tolerance": result.contour_tolerance,
        "contours": [
            [[_json_float(t), _json_float(dx)] for t, dx in poly]
            for poly in result.contours
        ],
    }


def _table1_text(report) -> str:
    lines = [
        f"{'experiment':<16} {'tau_G^D [s]':>12} {'tau_G^E [s]':>12} "
        f"{'tau_TC [s]':>12}  match",
    ]
    for row in report.rows:
        ok = all(row.matches.values())
        lines.append(
            f"{row.preset.name:<16} {_fmt(row.tau_g_debye):>12} "
            f"{_fmt(row.tau_g_einstein):>12} {_fmt(row.tau_tc):>12}  "
            f"{'yes' if ok else 'FLAGGED'}"
        )
        if row.alt_tau_g is not None:
            lines.append(
                f"{'':<16} alt molecule-count convention: "
                f"tau_G = {_fmt(row.alt_tau_g)} s"
            )
        for flag in row.flags:
            lines.append(f"{'':<16} flag {flag}")
    return "\n".join(lines) + "\n"


def _table1_json(report) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "rows": [
            {
                "name": row.preset.name,
                "tau_g_s": _json_float(row.tau_g),
                "tau_g_debye_s": _json_float(row.tau_g_debye),
                "tau_g_einstein_s": _json_float(row.tau_g_einstein),
                "tau_tc_s": _json_float(row.tau_tc),
                "alt_tau_g_s": None if row.alt_tau_g is None else _json_float(row.alt_tau_g),
                "computed_decades": {k: _json_float(v) for k, v in row.computed_decades.items()},
                "reference_decades": dict(row.preset.reference_decades),
                "matches": row.matches,
                "flags": list(row.flags),
            }
            for row in report.rows
        ],
    }


# ---------------------------------------------------------------------------
# Subcommands

def _emit(text: str, out: str | None) -> None:
    if out:
        _atomic_write(out, text)
    else:
        sys.stdout.write(text)


def cmd_compute(args, catalog: Catalog) -> int:
    system, env = _resolve_config(args, catalog)
    summary = evaluate(
        system, env, HeatCapacityModel(args.cv_model), EmissionModel(args.em_model)
    )
    if args.json:
        _emit(json.dumps(_summary_json(summary), indent=2) + "\n", args.out)
    else:
        _emit(_summary_table(summary), args.out)
    return EXIT_OK


def cmd_scan(args, catalog: Catalog) -> int:
    if not args.material:
        raise ResolutionError("material", "(none given: scan requires --material)")
    material = catalog.material(args.material)
    if args.radius is None:
        raise GravdecoError("scan requires --radius")
    grid = GridSpec(
        args.t_range[0], args.t_range[1], args.grid[0],
        args.dx_range[0], args.dx_range[1], args.grid[1],
    )
    # placeholder T/dx; the sweep substitutes grid values cell by cell
    system = SystemSpec(args.radius, material, 1.0, 1.0)
    pressure = args.pressure if args.pressure is not None else 1e-15
    gas = catalog.mixture(args.gas) if args.gas else catalog.mixture("air")
    env = Environment(
        args.temp_env if args.temp_env is not None else 1.0,
        pressure,
        gas,
        args.temp_gas if args.temp_gas is not None else 1.0,
    )
    result = sweep(
        system, env, grid,
        HeatCapacityModel(args.cv_model), EmissionModel(args.em_model),
        workers=args.workers,
        track_photon_temperature=args.temp_env is None,
        track_gas_temperature=args.temp_gas is None,
    )
    result = refine_contour(result, tol=args.contour_tol)
    _atomic_write(args.out, scan_csv(result))
    sidecar_path = os.path.splitext(args.out)[0] + ".json"
    _atomic_write(sidecar_path, json.dumps(scan_sidecar(result), indent=2) + "\n")
    invalid = result.metadata["invalid_cells"]
    sys.stdout.write(
        f"scan complete: {len(result.cells)} cells ({invalid} invalid), "
        f"{result.region_count} dominance region(s)\n"
        f"wrote {args.out} and {sidecar_path}\n"
    )
    return EXIT_OK


def cmd_table1(args, catalog: Catalog) -> int:
    report = table_one(HeatCapacityModel(args.cv_model))
    if args.json:
        _emit(json.dumps(_table1_json(report), indent=2) + "\n", args.out)
    else:
        _emit(_table1_text(report), args.out)
    return EXIT_OK


def cmd_materials(args, catalog: Catalog) -> int:
    if args.action == "list" and args.name is None:
        for name in sorted(catalog.materials):
            m = catalog.materials[name]
            sys.stdout.write(
                f"{name:<12} rho={_fmt(m.mass_density)} kg/m^3  "
                f"T_D={_fmt(m.debye_temperature)} K  "
                f"eps={_fmt(m.permittivity.re)}+{_fmt(m.permittivity.im)}i  "
                f"M={_fmt(m.molar_mass)} kg/mol\n"
            )
        sys.stdout.write("gases: " + ", ".join(sorted(catalog.mixtures)) + "\n")
        sys.stdout.write("presets: " + ", ".join(sorted(catalog.presets)) + "\n")
        return EXIT_OK
    name = args.name if args.name is not None else args.action
    m = catalog.material(name)
    sys.stdout.write(
        f"name             {m.name}\n"
        f"mass density     {_fmt(m.mass_density)} kg/m^3\n"
        f"Debye temp       {_fmt(m.debye_temperature)} K\n"
        f"permittivity     {_fmt(m.permittivity.re)} + {_fmt(m.permittivity.im)}i\n"
        f"molar mass       {_fmt(m.molar_mass)} kg/mol\n"
    )
    return EXIT_OK


def cmd_oracle(args, catalog: Catalog) -> int:
    report = oracle_report()
    text = json.dumps(report, indent=2) + "\n"
    if args.out:
        _atomic_write(args.out, text)
        sys.stdout.write(
            f"oracle report written to {args.out}: "
            f"infrastructure {'PASS' if report['all_pass'] else 'FAIL'}, "
            f"{report['model2_discrepancy_count']} recorded model-2 discrepancies\n"
        )
    else:
        sys.stdout.write(text)
    return EXIT_OK if report["all_pass"] else EXIT_DOMAIN


_COMMANDS = {
    "compute": cmd_compute,
    "scan": cmd_scan,
    "table1": cmd_table1,
    "materials": cmd_materials,
    "oracle": cmd_oracle,
}


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        catalog = load_catalog_file(args.catalog) if args.catalog else builtin_catalog()
        return _COMMANDS[args.command](args, catalog)
    except ResolutionError as exc:
        sys.stderr.write(f"error: unknown {exc.kind} {exc.name!r}\n")
        return EXIT_RESOLUTION
    except OSError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_IO
    except GravdecoError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
