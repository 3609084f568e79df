"""Exact dimensional algebra over the seven SI base dimensions.

A :class:`Dimension` is a vector of exact rational exponents over
(length, mass, time, electric current, temperature, amount of substance,
luminous intensity).  Multiplication, division and rational powers act
component-wise on the exponents, so dimensions form an abelian group with
the dimensionless vector as identity.  Exponents are :class:`~fractions.Fraction`
values throughout: half-integer exponents occur both in Gaussian
electromagnetic dimensions and in square-root geometry factors, and storing
them as floats would silently lose exactness.

A :class:`Quantity` binds a finite real magnitude to a dimension and a unit
system.  Arithmetic on quantities enforces dimensional consistency and
rejects non-finite magnitudes at construction, so errors surface at the
operation that produced them.

Gaussian support is a per-:class:`QuantityKind` conversion table rather than
a second dimensional algebra: Gaussian dimensions are a non-injective image
of the SI ones (electric and magnetic field collapse onto the same
dimension), so conversion is only well defined per physical kind.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Union

Rational = Union[int, Fraction]

_BASE_FIELDS = (
    "length",
    "mass",
    "time",
    "current",
    "temperature",
    "amount",
    "luminosity",
)


class DimensionMismatchError(ValueError):
    """Operation combined quantities of incompatible dimension or system."""


class NonFiniteError(ValueError):
    """A quantity magnitude was NaN or infinite."""


class NegativeBaseError(ValueError):
    """Fractional power of a negative magnitude."""


class KindMismatchError(ValueError):
    """Quantity dimension does not match the declared kind."""


class UnsupportedKindError(ValueError):
    """No conversion entry exists for the requested kind."""


def _as_fraction(value: Rational, field: str) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(
        f"dimension exponent {field!r} must be int or Fraction, got {type(value).__name__}"
    )


@dataclass(frozen=True)
class Dimension:
    """Vector of exact rational exponents over the seven SI base dimensions."""

    length: Fraction = Fraction(0)
    mass: Fraction = Fraction(0)
    time: Fraction = Fraction(0)
    current: Fraction = Fraction(0)
    temperature: Fraction = Fraction(0)
    amount: Fraction = Fraction(0)
    luminosity: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        for field in _BASE_FIELDS:
            object.__setattr__(self, field, _as_fraction(getattr(self, field), field))

    def as_tuple(self) -> tuple[Fraction, ...]:
        return tuple(getattr(self, field) for field in _BASE_FIELDS)

    def __mul__(self, other: Dimension) -> Dimension:
        if not isinstance(other, Dimension):
            return NotImplemented
        return Dimension(*(a + b for a, b in zip(self.as_tuple(), other.as_tuple())))

    def __truediv__(self, other: Dimension) -> Dimension:
        if not isinstance(other, Dimension):
            return NotImplemented
        return Dimension(*(a - b for a, b in zip(self.as_tuple(), other.as_tuple())))

    def __pow__(self, exponent: Rational) -> Dimension:
        p = _as_fraction(exponent, "power")
        return Dimension(*(a * p for a in self.as_tuple()))

    def inverse(self) -> Dimension:
        return Dimension(*(-a for a in self.as_tuple()))

    @property
    def is_dimensionless(self) -> bool:
        return all(a == 0 for a in self.as_tuple())

    def __str__(self) -> str:
        # Canonical rendering lives in the unit module; this is a debug form.
        parts = []
        for field, a in zip(_BASE_FIELDS, self.as_tuple()):
            if a != 0:
                parts.append(f"{field}^{a}" if a != 1 else field)
        return " ".join(parts) if parts else "dimensionless"


DIMENSIONLESS = Dimension()
LENGTH = Dimension(length=Fraction(1))
MASS = Dimension(mass=Fraction(1))
TIME = Dimension(time=Fraction(1))
CURRENT = Dimension(current=Fraction(1))
TEMPERATURE = Dimension(temperature=Fraction(1))
AMOUNT = Dimension(amount=Fraction(1))
LUMINOSITY = Dimension(luminosity=Fraction(1))

FREQUENCY = DIMENSIONLESS / TIME
SPEED = LENGTH / TIME
ENERGY = MASS * LENGTH**2 / TIME**2
CHARGE = CURRENT * TIME
ELECTRIC_FIELD = ENERGY / (CHARGE * LENGTH)
MAGNETIC_FIELD = MASS / (CHARGE * TIME)
ELECTRIC_DIPOLE = CHARGE * LENGTH
MAGNETIC_DIPOLE = CURRENT * LENGTH**2
POLARIZATION = CHARGE / LENGTH**2
MAGNETIZATION = CURRENT / LENGTH
PERMITTIVITY = CHARGE**2 / (ENERGY * LENGTH)
PERMEABILITY = (SPEED**2 * PERMITTIVITY).inverse()
ANGULAR_MOMENTUM = ENERGY * TIME


class UnitSystem(Enum):
    """The two supported unit-system conventions."""

    SI = "si"
    GAUSSIAN = "gaussian"


@dataclass(frozen=True)
class Quantity:
    """A finite real magnitude bound to a dimension and a unit system.

    Addition and subtraction require identical dimension and system;
    multiplication and division combine dimensions; rational powers scale
    the exponent vector exactly.  Non-finite magnitudes are rejected at
    construction so arithmetic overflow surfaces immediately.
    """

    magnitude: float
    dimension: Dimension = DIMENSIONLESS
    system: UnitSystem = UnitSystem.SI

    def __post_init__(self) -> None:
        value = float(self.magnitude)
        if not math.isfinite(value):
            raise NonFiniteError(f"quantity magnitude must be finite, got {value!r}")
        object.__setattr__(self, "magnitude", value)

    def _check_same(self, other: Quantity, op: str) -> None:
        if self.dimension != other.dimension:
            raise DimensionMismatchError(
                f"cannot {op} quantities of dimension [{self.dimension}] and [{other.dimension}]"
            )
        if self.system is not other.system:
            raise DimensionMismatchError(
                f"cannot {op} quantities from different unit systems "
                f"({self.system.value} vs {other.system.value})"
            )

    def __add__(self, other: Quantity) -> Quantity:
        if not isinstance(other, Quantity):
            return NotImplemented
        self._check_same(other, "add")
        return Quantity(self.magnitude + other.magnitude, self.dimension, self.system)

    def __sub__(self, other: Quantity) -> Quantity:
        if not isinstance(other, Quantity):
            return NotImplemented
        self._check_same(other, "subtract")
        return Quantity(self.magnitude - other.magnitude, self.dimension, self.system)

    def __neg__(self) -> Quantity:
        return Quantity(-self.magnitude, self.dimension, self.system)

    def __abs__(self) -> Quantity:
        return Quantity(abs(self.magnitude), self.dimension, self.system)

    def _coerce(self, other: object) -> Quantity | None:
        if isinstance(other, Quantity):
            return other
        if isinstance(other, (int, float)):
            return Quantity(float(other), DIMENSIONLESS, self.system)
        return None

    def __mul__(self, other: object) -> Quantity:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        if self.system is not rhs.system:
            raise DimensionMismatchError("cannot multiply quantities from different unit systems")
        return Quantity(self.magnitude * rhs.magnitude, self.dimension * rhs.dimension, self.system)

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> Quantity:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        if self.system is not rhs.system:
            raise DimensionMismatchError("cannot divide quantities from different unit systems")
        return Quantity(self.magnitude / rhs.magnitude, self.dimension / rhs.dimension, self.system)

    def __rtruediv__(self, other: object) -> Quantity:
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs.__truediv__(self)

    def __pow__(self, exponent: Rational) -> Quantity:
        p = _as_fraction(exponent, "power")
        dim = self.dimension**p
        if p.denominator == 1:
            return Quantity(self.magnitude ** int(p), dim, self.system)
        if self.magnitude < 0:
            raise NegativeBaseError(
                f"fractional power {p} of negative magnitude {self.magnitude!r}"
            )
        return Quantity(self.magnitude ** float(p), dim, self.system)

    def sqrt(self) -> Quantity:
        return self ** Fraction(1, 2)

    def __str__(self) -> str:
        return f"{self.magnitude:.12g} [{self.dimension}]"


class QuantityKind(Enum):
    """Physical kinds with a defined SI <-> Gaussian conversion."""

    CHARGE = "charge"
    ELECTRIC_FIELD = "electric_field"
    MAGNETIC_FIELD = "magnetic_field"
    ELECTRIC_DIPOLE_MOMENT = "electric_dipole_moment"
    MAGNETIC_DIPOLE_MOMENT = "magnetic_dipole_moment"
    POLARIZATION = "polarization"
    MAGNETIZATION = "magnetization"
    PERMITTIVITY = "permittivity"
    PERMEABILITY = "permeability"
    ENERGY = "energy"
    LENGTH = "length"
    MASS = "mass"
    FREQUENCY = "frequency"
    DIMENSIONLESS = "dimensionless"


@dataclass(frozen=True)
class KindEntry:
    si_dimension: Dimension
    gaussian_dimension: Dimension
    si_to_gaussian: float

    def dimension_in(self, system: UnitSystem) -> Dimension:
        return self.si_dimension if system is UnitSystem.SI else self.gaussian_dimension


# The numeral of the defined SI light speed; conversion factors between the
# systems are exact products of powers of ten and this number.
_C_NUMERAL = 299792458.0

_H = Fraction(1, 2)  # half-integer exponents of the Gaussian electromagnetic dimensions


def _gauss(length: Rational, mass: Rational, time: Rational) -> Dimension:
    return Dimension(length=Fraction(length), mass=Fraction(mass), time=Fraction(time))


_KIND_TABLE: dict[QuantityKind, KindEntry] = {
    QuantityKind.CHARGE: KindEntry(CHARGE, _gauss(3 * _H, _H, -1), 10.0 * _C_NUMERAL),
    QuantityKind.ELECTRIC_FIELD: KindEntry(
        ELECTRIC_FIELD, _gauss(-_H, _H, -1), 1.0 / (1e-4 * _C_NUMERAL)
    ),
    QuantityKind.MAGNETIC_FIELD: KindEntry(MAGNETIC_FIELD, _gauss(-_H, _H, -1), 1e4),
    QuantityKind.ELECTRIC_DIPOLE_MOMENT: KindEntry(
        ELECTRIC_DIPOLE, _gauss(5 * _H, _H, -1), 1e3 * _C_NUMERAL
    ),
    QuantityKind.MAGNETIC_DIPOLE_MOMENT: KindEntry(
        MAGNETIC_DIPOLE, _gauss(5 * _H, _H, -1), 1e3
    ),
    QuantityKind.POLARIZATION: KindEntry(
        POLARIZATION, _gauss(-_H, _H, -1), 1e-3 * _C_NUMERAL
    ),
    QuantityKind.MAGNETIZATION: KindEntry(MAGNETIZATION, _gauss(-_H, _H, -1), 1e-3),
    QuantityKind.PERMITTIVITY: KindEntry(
        PERMITTIVITY, DIMENSIONLESS, 1e-7 * _C_NUMERAL**2
    ),
    QuantityKind.PERMEABILITY: KindEntry(
        PERMEABILITY, _gauss(-2, 0, 2), 1e3 / _C_NUMERAL**2
    ),
    QuantityKind.ENERGY: KindEntry(ENERGY, ENERGY, 1e7),
    QuantityKind.LENGTH: KindEntry(LENGTH, LENGTH, 1e2),
    QuantityKind.MASS: KindEntry(MASS, MASS, 1e3),
    QuantityKind.FREQUENCY: KindEntry(FREQUENCY, FREQUENCY, 1.0),
    QuantityKind.DIMENSIONLESS: KindEntry(DIMENSIONLESS, DIMENSIONLESS, 1.0),
}


def convert_system(q: Quantity, kind: QuantityKind, target: UnitSystem) -> Quantity:
    """Re-express ``q`` in ``target`` using the conversion rule for ``kind``.

    The quantity's dimension must match the kind's canonical dimension in its
    current system.  Converting to the system the quantity is already in is a
    no-op.
    """
    entry = _KIND_TABLE.get(kind)
    if entry is None:
        raise UnsupportedKindError(f"no conversion entry for kind {kind!r}")
    expected = entry.dimension_in(q.system)
    if q.dimension != expected:
        raise KindMismatchError(
            f"quantity dimension [{q.dimension}] does not match "
            f"{kind.value} in the {q.system.value} system [{expected}]"
        )
    if target is q.system:
        return q
    if target is UnitSystem.GAUSSIAN:
        magnitude = q.magnitude * entry.si_to_gaussian
    else:
        magnitude = q.magnitude / entry.si_to_gaussian
    return Quantity(magnitude, entry.dimension_in(target), target)


def kind_dimension(kind: QuantityKind, system: UnitSystem = UnitSystem.SI) -> Dimension:
    entry = _KIND_TABLE.get(kind)
    if entry is None:
        raise UnsupportedKindError(f"no conversion entry for kind {kind!r}")
    return entry.dimension_in(system)


def _validate_kind_table() -> None:
    seen: dict[tuple[Fraction, ...], QuantityKind] = {}
    for kind, entry in _KIND_TABLE.items():
        key = entry.si_dimension.as_tuple()
        if key in seen:
            raise AssertionError(f"duplicate SI dimension for {kind} and {seen[key]}")
        seen[key] = kind


_validate_kind_table()
