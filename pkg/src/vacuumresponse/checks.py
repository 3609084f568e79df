"""Mechanical dimension checking of every model equation.

Each check evaluates both sides of one implemented relation through the
quantity algebra, pulling real values from the loaded constant registry, and
compares the resulting dimensions.  Because the registry quantities carry
the dimensions parsed from the data file, a constant recorded with a wrong
unit makes every relation it enters fail its check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .constants import ConstantRegistry, default_registry
from .dimensions import Dimension, Quantity
from .model import (
    OscillatorParams,
    VolumeConvention,
    angular_momentum_kick,
    effective_radius,
    effective_volume,
    induced_dipole_moment,
    induced_vortex_field,
    mean_square_orbit_radius,
    oscillator_displacement,
    pair_magnetic_moment,
    permeability_estimate,
    permittivity_estimate,
    vacuum_polarization,
)
from .species import default_species_table, total_permittivity
from .units import format_dimension, parse_unit


@dataclass(frozen=True)
class CheckResult:
    name: str
    description: str
    lhs: Dimension
    rhs: Dimension

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs


def _dim(unit: str) -> Dimension:
    return parse_unit(unit)[1]


def run_dimension_checks(registry: ConstantRegistry | None = None) -> list[CheckResult]:
    """Evaluate every implemented relation and compare left/right dimensions."""
    reg = registry or default_registry()
    c = reg.quantity("c")
    hbar = reg.quantity("hbar")
    e = reg.quantity("e")
    m = reg.quantity("m_e")
    eps0 = reg.quantity("eps0")
    mu0 = reg.quantity("mu0")
    alpha = reg.quantity("alpha")

    cube = OscillatorParams.for_electron(2.0, 2.0, VolumeConvention.cube(), reg)
    sphere = OscillatorParams.for_electron(2.0, 2.0, VolumeConvention.sphere(), reg)
    w0 = cube.omega0(reg)
    gap = cube.energy_gap
    kappa = Quantity(cube.gap_ratio(reg))

    E = Quantity(1.0, _dim("V/m"))
    B = Quantity(1.0, _dim("T"))
    Bdot = Quantity(1.0, _dim("T/s"))

    r = effective_radius(cube, reg)
    volume = effective_volume(cube, reg)
    dipole = induced_dipole_moment(cube, E, registry=reg)
    pol = vacuum_polarization(cube, E, registry=reg)
    eps_t = permittivity_estimate(cube, reg)
    mu_t = permeability_estimate(cube, reg)
    kick = angular_momentum_kick(cube, B, reg)
    moment = pair_magnetic_moment(cube, B, reg)
    magnetization = moment / volume

    one = Quantity(1.0).dimension

    checks = [
        CheckResult(
            "polarization-density",
            "dipole moment per effective volume is a polarization",
            (dipole / volume).dimension,
            _dim("C/m^2"),
        ),
        CheckResult(
            "electric-displacement",
            "eps0 E and P share the displacement dimension",
            (eps0 * E).dimension,
            pol.dimension,
        ),
        CheckResult(
            "oscillator-force-balance",
            "restoring force m w0^2 x balances the drive q E",
            (m * w0**2 * oscillator_displacement(cube, E, registry=reg)).dimension,
            (e * E).dimension,
        ),
        CheckResult(
            "induced-dipole-moment",
            "q^2 E / (m w0^2) is an electric dipole moment",
            (e**2 * E / (m * w0**2)).dimension,
            _dim("C m"),
        ),
        CheckResult(
            "vacuum-polarization",
            "q^2 E / (m w0^2 V) is a polarization",
            pol.dimension,
            _dim("C/m^2"),
        ),
        CheckResult(
            "permittivity-estimate",
            "q^2 / (m w0^2 V) carries the permittivity dimension",
            eps_t.dimension,
            _dim("A s / (V m)"),
        ),
        CheckResult(
            "magnetic-h-field",
            "B/mu0 and M share the H-field dimension",
            (B / mu0).dimension,
            magnetization.dimension,
        ),
        CheckResult(
            "magnetization-density",
            "magnetic moment per effective volume is a magnetization",
            magnetization.dimension,
            _dim("A/m"),
        ),
        CheckResult(
            "induced-vortex-field",
            "(r/2) dB/dt is an electric field",
            induced_vortex_field(r, Bdot).dimension,
            _dim("V/m"),
        ),
        CheckResult(
            "angular-momentum-kick",
            "q r^2 B / 2 is an angular momentum",
            kick.dimension,
            _dim("J s"),
        ),
        CheckResult(
            "gyromagnetic-relation",
            "(g q / 2m) J is a magnetic moment",
            ((e / m) * kick).dimension,
            _dim("A m^2"),
        ),
        CheckResult(
            "pair-magnetic-moment",
            "q^2 r^2 B / m is a magnetic moment",
            moment.dimension,
            _dim("A m^2"),
        ),
        CheckResult(
            "permeability-estimate",
            "m r / q^2 carries the permeability dimension",
            mu_t.dimension,
            _dim("V s / (A m)"),
        ),
        CheckResult(
            "light-speed-closure",
            "1/(eps mu) is a squared speed",
            (eps_t * mu_t).dimension,
            (c**-2).dimension,
        ),
        CheckResult(
            "consistency-radius",
            "c / w0 is a length",
            (c / w0).dimension,
            _dim("m"),
        ),
        CheckResult(
            "gap-scaled-permittivity",
            "kappa q^2 / (hbar c) matches the permittivity estimate",
            (kappa * e**2 / (hbar * c)).dimension,
            eps_t.dimension,
        ),
        CheckResult(
            "fine-structure-form",
            "4 pi alpha kappa eps0 matches the measured-permittivity dimension",
            (4 * math.pi * alpha * kappa * eps0).dimension,
            eps0.dimension,
        ),
        CheckResult(
            "charge-weighted-total",
            "the summed species estimate matches the oscillator permittivity",
            total_permittivity(default_species_table(), 2.0, reg).dimension,
            eps_t.dimension,
        ),
        CheckResult(
            "species-count-inversion",
            "(1/4 pi alpha)(m c^2 / gap) is dimensionless",
            ((m * c**2 / gap) / alpha).dimension,
            one,
        ),
        CheckResult(
            "orbit-mean-square-radius",
            "2/5 R^2 is an area",
            mean_square_orbit_radius(r).dimension,
            _dim("m^2"),
        ),
        CheckResult(
            "sphere-consistency-radius",
            "sqrt(5/2) hbar c / gap is a length",
            (hbar * c / gap).dimension,
            _dim("m"),
        ),
        CheckResult(
            "refined-permittivity",
            "3 alpha (2/5)^(3/2) kappa eps0 keeps the permittivity dimension",
            (3 * alpha * kappa * eps0 * Quantity(0.4) ** Fraction(3, 2)).dimension,
            permittivity_estimate(sphere, reg).dimension,
        ),
        CheckResult(
            "refined-species-count",
            "(1/3 alpha)(5/2)^(3/2)(1/kappa) is dimensionless",
            (Quantity(2.5) ** Fraction(3, 2) / (3 * alpha * kappa)).dimension,
            one,
        ),
        CheckResult(
            "critical-field",
            "m^2 c^3 / (q hbar) is an electric field",
            (m**2 * c**3 / (e * hbar)).dimension,
            _dim("V/m"),
        ),
    ]
    return checks


# Stable identifiers of every checked relation, in report order.
EQUATION_NAMES = (
    "polarization-density",
    "electric-displacement",
    "oscillator-force-balance",
    "induced-dipole-moment",
    "vacuum-polarization",
    "permittivity-estimate",
    "magnetic-h-field",
    "magnetization-density",
    "induced-vortex-field",
    "angular-momentum-kick",
    "gyromagnetic-relation",
    "pair-magnetic-moment",
    "permeability-estimate",
    "light-speed-closure",
    "consistency-radius",
    "gap-scaled-permittivity",
    "fine-structure-form",
    "charge-weighted-total",
    "species-count-inversion",
    "orbit-mean-square-radius",
    "sphere-consistency-radius",
    "refined-permittivity",
    "refined-species-count",
    "critical-field",
)


def render_report(results: list[CheckResult]) -> str:
    lines = []
    for result in results:
        verdict = "ok" if result.ok else "FAIL"
        lines.append(f"{verdict:4s} {result.name}: {result.description}")
        if not result.ok:
            lines.append(
                f"     left [{format_dimension(result.lhs)}] != right [{format_dimension(result.rhs)}]"
            )
    passed = sum(1 for r in results if r.ok)
    lines.append(f"{passed}/{len(results)} dimension checks passed")
    return "\n".join(lines)
