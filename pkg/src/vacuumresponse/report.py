"""Report rows, sweep grids, and deterministic CSV/JSON serialization.

Output is byte-reproducible: floats are always rendered in scientific
notation with 12 significant digits, rows are ordered gap-ratio major then
convention then g-factor, and nothing in the payload depends on wall-clock
or environment state.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from io import StringIO
import csv

from .constants import ConstantRegistry, default_registry
from .dimensions import Quantity, QuantityKind, UnitSystem, convert_system
from .model import (
    OscillatorParams,
    RadiusRule,
    VolumeConvention,
    effective_radius,
    permeability_estimate,
    permittivity_estimate,
)
from .species import SpeciesModel, required_species_count

# CLI-facing convention tokens.  "cube" and "sphere" use the radius closed on
# the light-speed constraint; the remaining cubes pin the radius length scale.
CONVENTION_TOKENS: dict[str, VolumeConvention] = {
    "cube": VolumeConvention.cube(RadiusRule.MAXWELL_CONSISTENT),
    "cube-compton": VolumeConvention.cube(RadiusRule.COMPTON),
    "cube-half-compton": VolumeConvention.cube(RadiusRule.HALF_COMPTON),
    "sphere": VolumeConvention.sphere(),
}

CSV_HEADER = (
    "kappa",
    "convention",
    "g",
    "eps_tilde",
    "mu_tilde",
    "radius_m",
    "eps_ratio",
    "mu_ratio",
    "count_simple",
    "count_sphere",
)


@dataclass(frozen=True)
class ReportRow:
    kappa: float
    convention: str
    g: float
    eps_tilde: Quantity
    mu_tilde: Quantity
    radius: Quantity
    eps_ratio: float
    mu_ratio: float
    count_simple: float
    count_sphere: float
    species_sum: Fraction | None = None
    warnings: tuple[str, ...] = ()


@dataclass(frozen=True)
class SweepConfig:
    kappa_min: float = 0.5
    kappa_max: float = 4.0
    points: int = 64
    conventions: tuple[str, ...] = ("cube",)
    g_factors: tuple[float, ...] = (2.0,)

    def __post_init__(self) -> None:
        if self.kappa_min <= 0:
            raise ValueError("kappa_min must be > 0")
        if self.kappa_max < self.kappa_min:
            raise ValueError("kappa_max must be >= kappa_min")
        if self.points < 2:
            raise ValueError("a sweep needs at least 2 points")
        if not self.conventions:
            raise ValueError("at least one convention is required")
        for token in self.conventions:
            if token not in CONVENTION_TOKENS:
                raise ValueError(
                    f"unknown convention {token!r}; choose from {', '.join(CONVENTION_TOKENS)}"
                )
        if not self.g_factors:
            raise ValueError("at least one g-factor is required")

    def kappas(self) -> list[float]:
        span = self.kappa_max - self.kappa_min
        step = span / (self.points - 1)
        return [self.kappa_min + i * step for i in range(self.points)]


def build_row(
    kappa: float,
    convention: str,
    g: float,
    registry: ConstantRegistry | None = None,
) -> ReportRow:
    """Compute one grid point with electron-scale oscillator parameters."""
    reg = registry or default_registry()
    conv = CONVENTION_TOKENS[convention]
    params = OscillatorParams.for_electron(kappa, g, conv, reg)
    eps = permittivity_estimate(params, reg)
    mu = permeability_estimate(params, reg)
    radius = effective_radius(params, reg)
    return ReportRow(
        kappa=kappa,
        convention=convention,
        g=g,
        eps_tilde=eps,
        mu_tilde=mu,
        radius=radius,
        eps_ratio=(eps / reg.quantity("eps0")).magnitude,
        mu_ratio=(mu / reg.quantity("mu0")).magnitude,
        count_simple=required_species_count(kappa, SpeciesModel.SIMPLE, reg),
        count_sphere=required_species_count(kappa, SpeciesModel.SPHERE, reg),
    )


def sweep_rows(config: SweepConfig, registry: ConstantRegistry | None = None) -> list[ReportRow]:
    """Evaluate the full grid in deterministic row order.

    Grid points are independent pure computations; the sequential evaluation
    below is the reference order any parallel evaluation must reproduce.
    """
    reg = registry or default_registry()
    rows = []
    for kappa in config.kappas():
        for convention in config.conventions:
            for g in config.g_factors:
                rows.append(build_row(kappa, convention, g, reg))
    return rows


def to_gaussian(row: ReportRow) -> ReportRow:
    """Re-express the dimensioned cells in Gaussian-system values."""
    return replace(
        row,
        eps_tilde=convert_system(row.eps_tilde, QuantityKind.PERMITTIVITY, UnitSystem.GAUSSIAN),
        mu_tilde=convert_system(row.mu_tilde, QuantityKind.PERMEABILITY, UnitSystem.GAUSSIAN),
        radius=convert_system(row.radius, QuantityKind.LENGTH, UnitSystem.GAUSSIAN),
    )


def format_float(value: float) -> str:
    """Scientific notation with 12 significant digits; the one float format."""
    return f"{value:.11e}"


def _format_g(g: float) -> str:
    return f"{g:g}"


def _row_cells(row: ReportRow) -> list[str]:
    return [
        format_float(row.kappa),
        row.convention,
        _format_g(row.g),
        format_float(row.eps_tilde.magnitude),
        format_float(row.mu_tilde.magnitude),
        format_float(row.radius.magnitude),
        format_float(row.eps_ratio),
        format_float(row.mu_ratio),
        format_float(row.count_simple),
        format_float(row.count_sphere),
    ]


def rows_to_csv(rows: list[ReportRow]) -> str:
    buffer = StringIO()
    writer = csv.writer(buffer, lineterminator="\r\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow(_row_cells(row))
    return buffer.getvalue()


def rows_to_json(rows: list[ReportRow]) -> str:
    # Assembled by hand so numeric cells keep the fixed 12-digit rendering.
    lines = ["["]
    for index, row in enumerate(rows):
        cells = _row_cells(row)
        pairs = []
        for name, cell in zip(CSV_HEADER, cells):
            if name == "convention":
                pairs.append(f'"{name}": "{cell}"')
            else:
                pairs.append(f'"{name}": {cell}')
        comma = "," if index < len(rows) - 1 else ""
        lines.append("  {" + ", ".join(pairs) + "}" + comma)
    lines.append("]")
    return "\n".join(lines) + "\n"
