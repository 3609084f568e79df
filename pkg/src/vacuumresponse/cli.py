"""Command-line front end.

Subcommands: estimate | sweep | species | check-dimensions | constants.
Exit codes: 0 success, 1 runtime or model error, 2 usage error.  Warnings
and advisory notes go to stderr; CSV/JSON/SVG payloads stay clean.
"""

from __future__ import annotations

import argparse
import math
import sys
import warnings
from pathlib import Path

from .checks import render_report, run_dimension_checks
from .constants import (
    ConstantRegistry,
    MalformedLineError,
    MissingConstantError,
    default_registry,
    load_constants,
)
from .dimensions import (
    ELECTRIC_FIELD,
    Quantity,
    QuantityKind,
    UnitSystem,
    convert_system,
)
from .model import (
    FieldProbe,
    OscillatorParams,
    fine_structure_form,
    induced_dipole_moment,
    maxwell_closure,
    oscillator_displacement,
    vacuum_polarization,
)
from .report import (
    CONVENTION_TOKENS,
    ReportRow,
    SweepConfig,
    build_row,
    format_float,
    rows_to_csv,
    rows_to_json,
    sweep_rows,
    to_gaussian,
)
from .species import (
    SpeciesModel,
    bundled_species_path,
    charge_weighted_sum,
    gap_for_exact_match,
    load_species,
    required_species_count,
    total_permittivity,
)
from .svgchart import Series, sweep_chart
from .units import UnitParseError, format_dimension, parse_unit

GAUSSIAN_NOTE = (
    "note: gaussian output selected; permittivity-like values are dimensionless "
    "in this convention (the measured vacuum permittivity maps to 1/(4*pi)), "
    "and lengths are in cm"
)

DEVIATION_NOTE = (
    "note: the cubic-model deviation factor is 0.0917 per unit gap ratio: "
    "about one-tenth at gap ratio 1, but 0.1834 at gap ratio 2"
)

COUNT_NOTE = (
    "note: a charge-weighted species count near ten corresponds to gap ratio 1 "
    "(10.905); at gap ratio 2 the simple model needs 5.452"
)


def _positive_float(parser: argparse.ArgumentParser, flag: str, value: float) -> float:
    if not (value > 0 and math.isfinite(value)):
        parser.error(f"{flag} must be > 0")
    return value


def _parse_quantity_flag(parser: argparse.ArgumentParser, flag: str, text: str) -> Quantity:
    parts = text.strip().split(None, 1)
    if len(parts) != 2:
        parser.error(f"{flag} expects '<magnitude> <unit-expression>'")
    try:
        magnitude = float(parts[0])
    except ValueError:
        parser.error(f"{flag}: bad magnitude {parts[0]!r}")
    try:
        scale, dimension = parse_unit(parts[1])
    except UnitParseError as exc:
        parser.error(f"{flag}: {exc}")
    return Quantity(magnitude * scale, dimension)


def _write_output(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _qty_text(q: Quantity) -> str:
    unit = format_dimension(q.dimension)
    if unit == "1":
        return format_float(q.magnitude)
    return f"{format_float(q.magnitude)} {unit}"


def _print_row_text(row: ReportRow, extra: list[tuple[str, str]]) -> None:
    pairs: list[tuple[str, str]] = [
        ("kappa", f"{row.kappa:g}"),
        ("convention", row.convention),
        ("g", f"{row.g:g}"),
        ("eps_tilde", _qty_text(row.eps_tilde)),
        ("mu_tilde", _qty_text(row.mu_tilde)),
        ("radius", _qty_text(row.radius)),
        ("eps_ratio", format_float(row.eps_ratio)),
        ("mu_ratio", format_float(row.mu_ratio)),
        ("count_simple", format_float(row.count_simple)),
        ("count_sphere", format_float(row.count_sphere)),
    ]
    pairs.extend(extra)
    width = max(len(name) for name, _ in pairs)
    for name, value in pairs:
        print(f"{name:<{width}}  {value}")


def cmd_estimate(
    args: argparse.Namespace, parser: argparse.ArgumentParser, registry: ConstantRegistry
) -> int:
    kappa = _positive_float(parser, "--gap-ratio", args.gap_ratio)
    g = _positive_float(parser, "--g-factor", args.g_factor)
    convention = args.convention

    row = build_row(kappa, convention, g, registry)
    params = OscillatorParams.for_electron(kappa, g, CONVENTION_TOKENS[convention], registry)
    response = maxwell_closure(params, registry)

    extra: list[tuple[str, str]] = [
        ("implied_light_speed", _qty_text(response.implied_light_speed))
    ]
    if convention == "cube" and g == 2.0:
        _, deviation = fine_structure_form(params, registry)
        extra.append(("deviation_factor", format_float(deviation)))

    if args.probe_field is not None:
        field = _parse_quantity_flag(parser, "--probe-field", args.probe_field)
        if field.dimension != ELECTRIC_FIELD:
            parser.error("--probe-field must be an electric field (V/m)")
        if field.magnitude < 0:
            parser.error("--probe-field must be non-negative")
        probe = FieldProbe(electric_field=field)
        responses = [
            ("probe_field", probe.electric_field, QuantityKind.ELECTRIC_FIELD),
            (
                "probe_displacement",
                oscillator_displacement(params, probe.electric_field, registry=registry),
                QuantityKind.LENGTH,
            ),
            (
                "probe_dipole_moment",
                induced_dipole_moment(params, probe.electric_field, registry=registry),
                QuantityKind.ELECTRIC_DIPOLE_MOMENT,
            ),
            (
                "probe_polarization",
                vacuum_polarization(params, probe.electric_field, registry=registry),
                QuantityKind.POLARIZATION,
            ),
        ]
        for name, value, kind in responses:
            if args.units == "gaussian":
                value = convert_system(value, kind, UnitSystem.GAUSSIAN)
            extra.append((name, _qty_text(value)))

    if args.units == "gaussian":
        row = to_gaussian(row)
        print(GAUSSIAN_NOTE, file=sys.stderr)
    print(DEVIATION_NOTE, file=sys.stderr)
    print(COUNT_NOTE, file=sys.stderr)

    if args.format == "text":
        _print_row_text(row, extra)
    elif args.format == "csv":
        _write_output(rows_to_csv([row]), args.out)
        return 0
    else:
        _write_output(rows_to_json([row]), args.out)
        return 0
    if args.out is not None:
        parser.error("--out requires --format csv or json for estimate")
    return 0


def cmd_sweep(
    args: argparse.Namespace, parser: argparse.ArgumentParser, registry: ConstantRegistry
) -> int:
    conventions = tuple(t for t in (s.strip() for s in args.conventions.split(",")) if t)
    g_factors = []
    for piece in args.g_factors.split(","):
        piece = piece.strip()
        if not piece:
            continue
        try:
            g_factors.append(float(piece))
        except ValueError:
            parser.error(f"--g-factors: bad value {piece!r}")
    try:
        config = SweepConfig(
            kappa_min=args.kappa_min,
            kappa_max=args.kappa_max,
            points=args.points,
            conventions=conventions,
            g_factors=tuple(g_factors),
        )
    except ValueError as exc:
        parser.error(str(exc))

    rows = sweep_rows(config, registry)
    if args.units == "gaussian":
        rows = [to_gaussian(row) for row in rows]
        print(GAUSSIAN_NOTE, file=sys.stderr)

    if args.format == "svg":
        series = []
        for convention in config.conventions:
            for g in config.g_factors:
                label = convention if len(config.g_factors) == 1 else f"{convention} g={g:g}"
                points = [
                    (row.kappa, row.eps_ratio)
                    for row in rows
                    if row.convention == convention and row.g == g
                ]
                series.append(Series(label, points))
        payload = sweep_chart(
            series,
            x_label="gap ratio",
            y_label="permittivity estimate / measured value",
            reference_y=1.0,
            reference_label="measured",
        )
    elif args.format == "json":
        payload = rows_to_json(rows)
    else:
        payload = rows_to_csv(rows)
    _write_output(payload, args.out)
    return 0


def cmd_species(
    args: argparse.Namespace, parser: argparse.ArgumentParser, registry: ConstantRegistry
) -> int:
    kappa = _positive_float(parser, "--gap-ratio", args.gap_ratio)
    path = args.species or bundled_species_path()
    table = load_species(path, registry)
    weight = charge_weighted_sum(table)

    if weight == 0:
        print("warning: NoSpecies: the table contains no charged species", file=sys.stderr)
    print(COUNT_NOTE, file=sys.stderr)

    lines: list[str] = []
    lines.append(f"species_file        {table.path}")
    lines.append(f"sha256              {table.sha256}")
    lines.append(f"rows                {len(table)}")
    lines.append(f"charge_weighted_sum {weight} ({format_float(float(weight))})")
    total = total_permittivity(table, kappa, registry)
    if args.units == "gaussian":
        total = convert_system(total, QuantityKind.PERMITTIVITY, UnitSystem.GAUSSIAN)
        print(GAUSSIAN_NOTE, file=sys.stderr)
    lines.append(f"gap_ratio           {kappa:g}")
    lines.append(f"total_permittivity  {_qty_text(total)}")
    lines.append(
        f"count_simple        {format_float(required_species_count(kappa, SpeciesModel.SIMPLE, registry))}"
    )
    lines.append(
        f"count_sphere        {format_float(required_species_count(kappa, SpeciesModel.SPHERE, registry))}"
    )
    if weight != 0:
        for model in (SpeciesModel.SIMPLE, SpeciesModel.SPHERE):
            match = gap_for_exact_match(table, model, registry)
            lines.append(
                f"match_gap_{model.value:<9} ratio {format_float(match.gap_ratio)}  "
                f"energy {_qty_text(match.gap_energy)}"
            )
    print("\n".join(lines))
    return 0


def cmd_check_dimensions(
    args: argparse.Namespace, parser: argparse.ArgumentParser, registry: ConstantRegistry
) -> int:
    results = run_dimension_checks(registry)
    print(render_report(results))
    return 0 if all(r.ok for r in results) else 1


def cmd_constants(
    args: argparse.Namespace, parser: argparse.ArgumentParser, registry: ConstantRegistry
) -> int:
    release = registry.codata_release or "unspecified"
    print(f"# codata release: {release}", file=sys.stderr)
    for record in registry.records():
        if record.source == "derived" and not args.derived:
            continue
        line = f"{record.key}\t{format_float(record.magnitude)}\t{record.unit_text}\t{record.source}"
        if record.definition:
            line += f"\t{record.definition}"
        print(line)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vacuumresponse",
        description=(
            "Estimate the vacuum's linear electromagnetic response from a "
            "semi-classical virtual-pair oscillator model."
        ),
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--constants", metavar="PATH", help="constants file (default: bundled)")
    common.add_argument("--species", metavar="PATH", help="species table (default: bundled)")
    common.add_argument(
        "--units", choices=("si", "gaussian"), default="si", help="output unit system"
    )
    common.add_argument("--out", metavar="PATH", help="output path (default: stdout)")

    sub = parser.add_subparsers(dest="command", required=True)

    p_est = sub.add_parser("estimate", parents=[common], help="single-point model estimate")
    p_est.add_argument("--gap-ratio", type=float, default=2.0, help="transition energy / rest energy")
    p_est.add_argument(
        "--convention", choices=tuple(CONVENTION_TOKENS), default="cube", help="volume convention"
    )
    p_est.add_argument("--g-factor", type=float, default=2.0, help="gyromagnetic response factor")
    p_est.add_argument(
        "--probe-field",
        metavar="'MAG UNIT'",
        help="weak probe field, e.g. '1 V/m'; reports the induced response",
    )
    p_est.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p_est.set_defaults(func=cmd_estimate)

    p_sweep = sub.add_parser("sweep", parents=[common], help="parameter sweep over the gap ratio")
    p_sweep.add_argument("--kappa-min", type=float, default=0.5)
    p_sweep.add_argument("--kappa-max", type=float, default=4.0)
    p_sweep.add_argument("--points", type=int, default=64)
    p_sweep.add_argument(
        "--conventions", default="cube", help="comma-separated volume conventions"
    )
    p_sweep.add_argument("--g-factors", default="2", help="comma-separated g-factors")
    p_sweep.add_argument("--format", choices=("csv", "json", "svg"), default="csv")
    p_sweep.set_defaults(func=cmd_sweep)

    p_sp = sub.add_parser("species", parents=[common], help="charge-weighted species analysis")
    p_sp.add_argument("--gap-ratio", type=float, default=2.0)
    p_sp.add_argument("--format", choices=("text",), default="text")
    p_sp.set_defaults(func=cmd_species)

    p_chk = sub.add_parser(
        "check-dimensions", parents=[common], help="dimension-check every model relation"
    )
    p_chk.set_defaults(func=cmd_check_dimensions)

    p_const = sub.add_parser("constants", parents=[common], help="list the loaded constants")
    p_const.add_argument("--derived", action="store_true", help="include derived records")
    p_const.set_defaults(func=cmd_constants)

    return parser


def main(argv: list[str] | None = None) -> int:
    warnings.simplefilter("always")
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        registry = load_constants(args.constants) if args.constants else default_registry()
    except (OSError, MalformedLineError, MissingConstantError, UnitParseError) as exc:
        target = args.constants or "bundled constants"
        print(f"error: cannot load constants from {target}: {exc}", file=sys.stderr)
        return 1

    try:
        return args.func(args, parser, registry)
    except OSError as exc:
        path = getattr(exc, "filename", None) or args.out or ""
        print(f"error: {exc} ({path})", file=sys.stderr)
        return 1
    except (ValueError, MissingConstantError) as exc:
        # Every model and table error derives from ValueError (field too
        # strong, convention mismatch, malformed rows, unit parse failures).
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
