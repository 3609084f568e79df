"""Semi-classical virtual-pair model of the vacuum's linear response.

A virtual charged pair is treated as a driven harmonic oscillator whose
resonance is set by the transition energy to the real bound pair.  In the
quasi-static, weak-field limit its induced electric dipole per effective
volume gives a vacuum permittivity estimate, and the gyromagnetic response
of the same pair gives a permeability estimate.  Requiring the product of
the two estimates to reproduce the measured light speed fixes the pair's
effective radius, which collapses both estimates onto a single dimensionless
deviation factor (4 pi alpha times the gap ratio for the cubic volume).

Two volume conventions are supported: a cube of side r (with a selectable
radius rule) and a uniformly charged solid sphere, for which the orbital
mean-square radius 2/5 R^2 replaces r^2 in the magnetic chain and the
volume is 4/3 pi R^3.

All estimator outputs are reported as positive magnitudes; only the induced
vortex field keeps its sign convention (it opposes the driving change).
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction

from .constants import ConstantRegistry, default_registry
from .dimensions import (
    CHARGE,
    ELECTRIC_FIELD,
    ENERGY,
    FREQUENCY,
    LENGTH,
    MAGNETIC_FIELD,
    MASS,
    TIME,
    DimensionMismatchError,
    Quantity,
)

# The paired antiparticle responds with the same sign as the particle, so the
# magnetic moment of the pair is twice the single-particle one.
PAIR_FACTOR = 2.0

# Guard thresholds for the weak-field and quasi-static preconditions.  The
# model itself only states the inequalities; these concrete factors are the
# documented cutoffs at which we warn and at which we refuse.
WEAK_FIELD_WARN_FRACTION = 1e-2
QUASI_STATIC_WARN_FRACTION = 1e-1


class FieldTooStrongError(ValueError):
    """Probe field at or above the critical field strength."""


class NotQuasiStaticError(ValueError):
    """Probe frequency at or above the oscillator resonance."""


class ConventionMismatchError(ValueError):
    """Operation called with a volume convention it is not defined for."""


class WeakFieldWarning(UserWarning):
    """Probe field within two decades of the critical field."""


class QuasiStaticWarning(UserWarning):
    """Probe frequency within one decade of the resonance."""


class Shape(Enum):
    CUBE = "cube"
    SPHERE = "sphere"


class RadiusRule(Enum):
    COMPTON = "compton"
    HALF_COMPTON = "half-compton"
    MAXWELL_CONSISTENT = "maxwell-consistent"
    CUSTOM = "custom"


@dataclass(frozen=True)
class VolumeConvention:
    """Rule assigning an effective volume (and orbit radius) to a pair."""

    shape: Shape = Shape.CUBE
    radius_rule: RadiusRule = RadiusRule.MAXWELL_CONSISTENT
    custom_radius: Quantity | None = None

    def __post_init__(self) -> None:
        if self.radius_rule is RadiusRule.CUSTOM:
            r = self.custom_radius
            if r is None or r.dimension != LENGTH or r.magnitude <= 0:
                raise ValueError("custom radius must be a positive length")
        elif self.custom_radius is not None:
            raise ValueError("custom_radius is only valid with the custom radius rule")
        if self.shape is Shape.SPHERE and self.radius_rule is not RadiusRule.MAXWELL_CONSISTENT:
            raise ConventionMismatchError("the uniform sphere only supports the consistent radius")

    @classmethod
    def cube(cls, rule: RadiusRule = RadiusRule.MAXWELL_CONSISTENT) -> VolumeConvention:
        return cls(Shape.CUBE, rule)

    @classmethod
    def cube_custom(cls, radius: Quantity) -> VolumeConvention:
        return cls(Shape.CUBE, RadiusRule.CUSTOM, radius)

    @classmethod
    def sphere(cls) -> VolumeConvention:
        return cls(Shape.SPHERE, RadiusRule.MAXWELL_CONSISTENT)


@dataclass(frozen=True)
class OscillatorParams:
    """Inputs of the virtual-pair oscillator.

    ``energy_gap`` is the transition energy to the real pair state; the
    resonance frequency follows as gap/hbar.  ``g_factor`` selects the
    gyromagnetic response (1 orbital, 2 spin; 2 is the default).
    """

    mass: Quantity
    charge: Quantity
    energy_gap: Quantity
    g_factor: float = 2.0
    volume_convention: VolumeConvention = VolumeConvention()

    def __post_init__(self) -> None:
        if self.mass.dimension != MASS or self.mass.magnitude <= 0:
            raise ValueError("mass must be a positive mass quantity")
        if self.charge.dimension != CHARGE or self.charge.magnitude == 0:
            raise ValueError("charge must be a nonzero charge quantity")
        if self.energy_gap.dimension != ENERGY or self.energy_gap.magnitude <= 0:
            raise ValueError("energy gap must be a positive energy")
        if not (self.g_factor > 0 and math.isfinite(self.g_factor)):
            raise ValueError("g-factor must be positive and finite")

    def omega0(self, registry: ConstantRegistry | None = None) -> Quantity:
        reg = registry or default_registry()
        return self.energy_gap / reg.quantity("hbar")

    def gap_ratio(self, registry: ConstantRegistry | None = None) -> float:
        """Gap energy in units of the particle's rest energy."""
        reg = registry or default_registry()
        rest = self.mass * reg.quantity("c") ** 2
        return (self.energy_gap / rest).magnitude

    @classmethod
    def from_gap_ratio(
        cls,
        gap_ratio: float,
        mass: Quantity,
        charge: Quantity,
        g_factor: float = 2.0,
        volume_convention: VolumeConvention = VolumeConvention(),
        registry: ConstantRegistry | None = None,
    ) -> OscillatorParams:
        reg = registry or default_registry()
        gap = gap_ratio * mass * reg.quantity("c") ** 2
        return cls(mass, charge, gap, g_factor, volume_convention)

    @classmethod
    def for_electron(
        cls,
        gap_ratio: float = 2.0,
        g_factor: float = 2.0,
        volume_convention: VolumeConvention = VolumeConvention(),
        registry: ConstantRegistry | None = None,
    ) -> OscillatorParams:
        reg = registry or default_registry()
        return cls.from_gap_ratio(
            gap_ratio, reg.quantity("m_e"), reg.quantity("e"), g_factor, volume_convention, reg
        )


@dataclass(frozen=True)
class FieldProbe:
    """A weak classical probe: field amplitudes and drive frequency."""

    electric_field: Quantity | None = None
    magnetic_field: Quantity | None = None
    drive_frequency: Quantity | None = None

    def __post_init__(self) -> None:
        if self.electric_field is not None:
            if self.electric_field.dimension != ELECTRIC_FIELD or self.electric_field.magnitude < 0:
                raise ValueError("electric field must be a non-negative field amplitude")
        if self.magnetic_field is not None:
            if self.magnetic_field.dimension != MAGNETIC_FIELD or self.magnetic_field.magnitude < 0:
                raise ValueError("magnetic field must be a non-negative field amplitude")
        if self.drive_frequency is not None:
            if self.drive_frequency.dimension != FREQUENCY or self.drive_frequency.magnitude < 0:
                raise ValueError("drive frequency must be non-negative")


@dataclass(frozen=True)
class VacuumResponse:
    """Closed-model outputs: both estimates, the radius, and deviation ratios."""

    eps_tilde: Quantity
    mu_tilde: Quantity
    radius: Quantity
    implied_light_speed: Quantity
    eps_ratio: float
    mu_ratio: float

    def __post_init__(self) -> None:
        for name in ("eps_tilde", "mu_tilde", "radius", "implied_light_speed"):
            q: Quantity = getattr(self, name)
            if q.magnitude <= 0:
                raise ValueError(f"{name} must be positive")
        if self.eps_ratio <= 0 or self.mu_ratio <= 0:
            raise ValueError("deviation ratios must be positive")


def critical_field(p: OscillatorParams, registry: ConstantRegistry | None = None) -> Quantity:
    """Critical field m^2 c^3 / (|q| hbar) for the params' own species."""
    reg = registry or default_registry()
    return p.mass**2 * reg.quantity("c") ** 3 / (abs(p.charge) * reg.quantity("hbar"))


def _guard_probe(
    p: OscillatorParams,
    field: Quantity,
    omega: Quantity | None,
    registry: ConstantRegistry,
) -> None:
    if field.dimension != ELECTRIC_FIELD:
        raise DimensionMismatchError(
            f"probe field must have electric-field dimension, got [{field.dimension}]"
        )
    if field.magnitude < 0:
        raise ValueError("probe field amplitude must be non-negative")
    e_crit = critical_field(p, registry).magnitude
    if field.magnitude >= e_crit:
        raise FieldTooStrongError(
            f"field {field.magnitude:.3e} V/m is at or above the critical field "
            f"{e_crit:.3e} V/m; the linear weak-field model does not apply"
        )
    if field.magnitude > WEAK_FIELD_WARN_FRACTION * e_crit:
        warnings.warn(
            f"field {field.magnitude:.3e} V/m exceeds {WEAK_FIELD_WARN_FRACTION:g} of the "
            "critical field; linear response is marginal",
            WeakFieldWarning,
            stacklevel=3,
        )
    if omega is not None:
        if omega.dimension != FREQUENCY or omega.magnitude < 0:
            raise ValueError("drive frequency must be a non-negative frequency")
        w0 = p.omega0(registry).magnitude
        if omega.magnitude >= w0:
            raise NotQuasiStaticError(
                f"drive frequency {omega.magnitude:.3e} rad/s is at or above the "
                f"resonance {w0:.3e} rad/s; the quasi-static response does not apply"
            )
        if omega.magnitude > QUASI_STATIC_WARN_FRACTION * w0:
            warnings.warn(
                f"drive frequency {omega.magnitude:.3e} rad/s is within a decade of the "
                "resonance; the zero-frequency response is approximate",
                QuasiStaticWarning,
                stacklevel=3,
            )


def oscillator_displacement(
    p: OscillatorParams,
    field: Quantity,
    omega: Quantity | None = None,
    registry: ConstantRegistry | None = None,
) -> Quantity:
    """Static displacement x = q E / (m w0^2) of the bound charge."""
    reg = registry or default_registry()
    _guard_probe(p, field, omega, reg)
    return abs(p.charge) * field / (p.mass * p.omega0(reg) ** 2)


def induced_dipole_moment(
    p: OscillatorParams,
    field: Quantity,
    omega: Quantity | None = None,
    registry: ConstantRegistry | None = None,
) -> Quantity:
    """Induced dipole moment q^2 E / (m w0^2); exactly charge times displacement."""
    return abs(p.charge) * oscillator_displacement(p, field, omega, registry)


def effective_radius(p: OscillatorParams, registry: ConstantRegistry | None = None) -> Quantity:
    """Radius selected by the volume convention.

    The consistent rule solves the light-speed closure for the radius:
    sqrt(2/g) c/w0 for the cube and sqrt(5/g) c/w0 for the sphere, which
    reduce to c/w0 and sqrt(5/2) c/w0 at the default spin response g = 2.
    """
    reg = registry or default_registry()
    conv = p.volume_convention
    if conv.shape is Shape.SPHERE:
        return math.sqrt(5.0 / p.g_factor) * reg.quantity("c") / p.omega0(reg)
    rule = conv.radius_rule
    if rule is RadiusRule.CUSTOM:
        assert conv.custom_radius is not None
        return conv.custom_radius
    if rule is RadiusRule.COMPTON:
        return reg.quantity("hbar") / (p.mass * reg.quantity("c"))
    if rule is RadiusRule.HALF_COMPTON:
        return reg.quantity("hbar") / (2 * p.mass * reg.quantity("c"))
    return math.sqrt(2.0 / p.g_factor) * reg.quantity("c") / p.omega0(reg)


def effective_volume(p: OscillatorParams, registry: ConstantRegistry | None = None) -> Quantity:
    """Volume per pair: r^3 for the cube, 4/3 pi R^3 for the uniform sphere."""
    r = effective_radius(p, registry)
    if p.volume_convention.shape is Shape.SPHERE:
        return (4.0 * math.pi / 3.0) * r**3
    return r**3


def mean_square_orbit_radius(radius: Quantity) -> Quantity:
    """Mean squared distance to a central axis over a uniform solid ball: 2/5 R^2."""
    if radius.dimension != LENGTH or radius.magnitude <= 0:
        raise ValueError("radius must be a positive length")
    return float(Fraction(2, 5)) * radius**2


def _orbit_mean_square(p: OscillatorParams, radius: Quantity) -> Quantity:
    if p.volume_convention.shape is Shape.SPHERE:
        return mean_square_orbit_radius(radius)
    return radius**2


def vacuum_polarization(
    p: OscillatorParams,
    field: Quantity,
    omega: Quantity | None = None,
    registry: ConstantRegistry | None = None,
) -> Quantity:
    """Induced dipole density: dipole moment over the effective volume."""
    return induced_dipole_moment(p, field, omega, registry) / effective_volume(p, registry)


def permittivity_estimate(
    p: OscillatorParams, registry: ConstantRegistry | None = None
) -> Quantity:
    """Vacuum permittivity estimate q^2 / (m w0^2 V)."""
    reg = registry or default_registry()
    return p.charge**2 / (p.mass * p.omega0(reg) ** 2 * effective_volume(p, reg))


def electric_displacement(
    field: Quantity, polarization: Quantity, registry: ConstantRegistry | None = None
) -> Quantity:
    """Total displacement field eps0 E + P."""
    reg = registry or default_registry()
    return reg.quantity("eps0") * field + polarization


def magnetic_h_field(
    b_field: Quantity, magnetization: Quantity, registry: ConstantRegistry | None = None
) -> Quantity:
    """Free-current field H = B/mu0 - M."""
    reg = registry or default_registry()
    return b_field / reg.quantity("mu0") - magnetization


def induced_vortex_field(radius: Quantity, b_rate: Quantity) -> Quantity:
    """Azimuthal electric field -(r/2) dB/dt on a circular orbit (signed)."""
    if radius.dimension != LENGTH or radius.magnitude <= 0:
        raise ValueError("orbit radius must be a positive length")
    if b_rate.dimension != MAGNETIC_FIELD / TIME:
        raise DimensionMismatchError(
            f"expected a magnetic-field rate of change, got [{b_rate.dimension}]"
        )
    return -0.5 * radius * b_rate


def angular_momentum_kick(
    p: OscillatorParams, b_field: Quantity, registry: ConstantRegistry | None = None
) -> Quantity:
    """Angular momentum q <rho^2> B / 2 gained while the field is switched on."""
    if b_field.dimension != MAGNETIC_FIELD or b_field.magnitude < 0:
        raise ValueError("magnetic field must be a non-negative field amplitude")
    reg = registry or default_registry()
    r = effective_radius(p, reg)
    return abs(p.charge) * _orbit_mean_square(p, r) * b_field / 2


def pair_magnetic_moment(
    p: OscillatorParams, b_field: Quantity, registry: ConstantRegistry | None = None
) -> Quantity:
    """Induced magnetic moment of the pair.

    The gyromagnetic relation (g q / 2m) J applied to the angular-momentum
    kick, doubled for the antiparticle; at g = 2 and the cubic convention
    this reduces exactly to q^2 r^2 B / m.
    """
    reg = registry or default_registry()
    kick = angular_momentum_kick(p, b_field, reg)
    return PAIR_FACTOR * (p.g_factor * abs(p.charge) / (2 * p.mass)) * kick


def permeability_estimate(
    p: OscillatorParams, registry: ConstantRegistry | None = None
) -> Quantity:
    """Vacuum permeability estimate: applied B over the induced magnetization.

    Inverting the moment-per-volume chain gives 2 m V / (g q^2 <rho^2>),
    which is m r / q^2 for the cube at g = 2.
    """
    reg = registry or default_registry()
    r = effective_radius(p, reg)
    volume = effective_volume(p, reg)
    ms = _orbit_mean_square(p, r)
    return 2 * p.mass * volume / (p.g_factor * p.charge**2 * ms)


def maxwell_closure(
    p: OscillatorParams, registry: ConstantRegistry | None = None
) -> VacuumResponse:
    """Close the model on the light-speed constraint and return all outputs.

    The product of the two estimates is volume-independent, so requiring it
    to equal 1/c^2 fixes the radius within the chosen convention family.
    The implied light speed then reproduces the registry value identically.
    """
    reg = registry or default_registry()
    closed = replace(
        p,
        volume_convention=VolumeConvention(
            p.volume_convention.shape, RadiusRule.MAXWELL_CONSISTENT
        ),
    )
    eps = permittivity_estimate(closed, reg)
    mu = permeability_estimate(closed, reg)
    light_speed = (eps * mu) ** Fraction(-1, 2)
    return VacuumResponse(
        eps_tilde=eps,
        mu_tilde=mu,
        radius=effective_radius(closed, reg),
        implied_light_speed=light_speed,
        eps_ratio=(eps / reg.quantity("eps0")).magnitude,
        mu_ratio=(mu / reg.quantity("mu0")).magnitude,
    )


def fine_structure_form(
    p: OscillatorParams, registry: ConstantRegistry | None = None
) -> tuple[Quantity, float]:
    """Gap-ratio form of the closed cubic estimate.

    Returns the permittivity estimate written as (gap ratio) q^2/(hbar c)
    together with the dimensionless deviation factor 4 pi alpha times the
    gap ratio.  Only defined for the cube with the consistent radius at the
    spin response g = 2, the regime in which the closure takes this form.
    """
    reg = registry or default_registry()
    conv = p.volume_convention
    if conv.shape is not Shape.CUBE:
        raise ConventionMismatchError("the gap-ratio form is defined for the cubic convention")
    if conv.radius_rule is not RadiusRule.MAXWELL_CONSISTENT:
        raise ConventionMismatchError("the gap-ratio form requires the consistent radius rule")
    if p.g_factor != 2.0:
        raise ConventionMismatchError("the gap-ratio form is derived for the spin response g = 2")
    kappa = p.gap_ratio(reg)
    eps = kappa * p.charge**2 / (reg.quantity("hbar") * reg.quantity("c"))
    ratio = 4 * math.pi * reg.value("alpha") * kappa
    return eps, ratio
