"""Charged-species tables and the multi-species vacuum-response sums.

Every charged elementary pair contributes to the vacuum response in
proportion to the square of its charge (the gap-ratio form is mass
independent), so the total permittivity estimate carries a charge-weighted
species sum.  The sum is kept in exact rational arithmetic: fractional quark
charges must not accumulate rounding before the final scale factor.

Inverting the requirement that the total reproduce the measured permittivity
yields either the species count needed at a given gap ratio, or the gap
ratio matching a given table.
"""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Iterator, NamedTuple

from .constants import ConstantRegistry, default_registry
from .dimensions import Quantity
from .units import quantity


class DuplicateNameError(ValueError):
    def __init__(self, name: str) -> None:
        self.name = name
        super().__init__(f"duplicate species name {name!r}")


class MalformedRowError(ValueError):
    def __init__(self, line_number: int, reason: str) -> None:
        self.line_number = line_number
        super().__init__(f"malformed species row at line {line_number}: {reason}")


class ZeroChargeError(ValueError):
    def __init__(self, name: str, line_number: int) -> None:
        super().__init__(f"species {name!r} (line {line_number}) has zero charge")


class EmptyTableError(ValueError):
    """Operation undefined on a table with no charged species."""


class SpeciesModel(Enum):
    SIMPLE = "simple"
    SPHERE = "sphere"


@dataclass(frozen=True)
class ParticleSpecies:
    name: str
    charge_ratio: Fraction  # charge in units of the elementary charge
    multiplicity: int = 1
    mass: Quantity | None = None

    def __post_init__(self) -> None:
        if self.charge_ratio == 0:
            raise ValueError(f"species {self.name!r} must carry charge")
        if self.multiplicity < 1:
            raise ValueError(f"species {self.name!r} multiplicity must be >= 1")


@dataclass(frozen=True)
class SpeciesTable:
    species: tuple[ParticleSpecies, ...]
    path: str | None = None
    sha256: str | None = None

    def __post_init__(self) -> None:
        names = [s.name for s in self.species]
        for name in names:
            if names.count(name) > 1:
                raise DuplicateNameError(name)

    def __iter__(self) -> Iterator[ParticleSpecies]:
        return iter(self.species)

    def __len__(self) -> int:
        return len(self.species)


def _parse_charge(text: str) -> Fraction:
    return Fraction(text)


def load_species(path: str | Path, registry: ConstantRegistry | None = None) -> SpeciesTable:
    """Load a tab-separated species table.

    Row format: ``name<TAB>charge_ratio<TAB>multiplicity[<TAB>mass_MeV]``
    with ``#`` comments.  The optional mass column is in MeV and is converted
    to a mass quantity via the registry.
    """
    reg = registry or default_registry()
    raw = Path(path).read_bytes()
    text = raw.decode("utf-8")
    mev_to_kg = quantity(1.0, "MeV") / reg.quantity("c") ** 2

    rows: list[ParticleSpecies] = []
    seen: set[str] = set()
    for number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) not in (3, 4):
            raise MalformedRowError(number, f"expected 3 or 4 tab-separated fields, got {len(fields)}")
        name = fields[0].strip()
        if not name:
            raise MalformedRowError(number, "empty name")
        if name in seen:
            raise DuplicateNameError(name)
        seen.add(name)
        try:
            charge = _parse_charge(fields[1].strip())
        except (ValueError, ZeroDivisionError):
            raise MalformedRowError(number, f"bad charge ratio {fields[1]!r}") from None
        if charge == 0:
            raise ZeroChargeError(name, number)
        try:
            multiplicity = int(fields[2].strip())
        except ValueError:
            raise MalformedRowError(number, f"bad multiplicity {fields[2]!r}") from None
        if multiplicity < 1:
            raise MalformedRowError(number, f"multiplicity must be >= 1, got {multiplicity}")
        mass = None
        if len(fields) == 4 and fields[3].strip():
            try:
                mass_mev = float(fields[3].strip())
            except ValueError:
                raise MalformedRowError(number, f"bad mass {fields[3]!r}") from None
            if mass_mev <= 0:
                raise MalformedRowError(number, f"mass must be positive, got {mass_mev}")
            mass = mass_mev * mev_to_kg
        rows.append(ParticleSpecies(name, charge, multiplicity, mass))

    return SpeciesTable(
        species=tuple(rows),
        path=str(path),
        sha256=hashlib.sha256(raw).hexdigest(),
    )


def bundled_species_path() -> Path:
    return Path(str(resources.files(__package__) / "data" / "species.tsv"))


@lru_cache(maxsize=1)
def default_species_table() -> SpeciesTable:
    return load_species(bundled_species_path())


def charge_weighted_sum(table: SpeciesTable) -> Fraction:
    """Sum of multiplicity times squared charge ratio, in exact rationals."""
    total = Fraction(0)
    for s in table:
        total += s.multiplicity * s.charge_ratio**2
    return total


def total_permittivity(
    table: SpeciesTable, gap_ratio: float, registry: ConstantRegistry | None = None
) -> Quantity:
    """Summed permittivity estimate 4 pi alpha kappa (sum of (q/e)^2) eps0."""
    if gap_ratio <= 0:
        raise ValueError("gap ratio must be positive")
    reg = registry or default_registry()
    weight = charge_weighted_sum(table)
    factor = 4 * math.pi * reg.value("alpha") * gap_ratio * float(weight)
    return factor * reg.quantity("eps0")


# Geometry constant of the uniform-sphere refinement: (5/2)^(3/2).
_SPHERE_GEOMETRY = (5.0 / 2.0) ** 1.5


def required_species_count(
    gap_ratio: float,
    model: SpeciesModel = SpeciesModel.SIMPLE,
    registry: ConstantRegistry | None = None,
) -> float:
    """Charge-weighted species count that makes the total match eps0 exactly."""
    if gap_ratio <= 0:
        raise ValueError("gap ratio must be positive")
    reg = registry or default_registry()
    alpha = reg.value("alpha")
    if model is SpeciesModel.SIMPLE:
        return 1.0 / (4 * math.pi * alpha * gap_ratio)
    return _SPHERE_GEOMETRY / (3 * alpha * gap_ratio)


class GapMatch(NamedTuple):
    gap_ratio: float
    gap_energy: Quantity  # transition energy for electron-scale oscillators


def gap_for_exact_match(
    table: SpeciesTable,
    model: SpeciesModel = SpeciesModel.SIMPLE,
    registry: ConstantRegistry | None = None,
) -> GapMatch:
    """Gap ratio (and electron-scale gap energy) at which the total equals eps0."""
    reg = registry or default_registry()
    weight = charge_weighted_sum(table)
    if weight == 0:
        raise EmptyTableError("cannot match the measured permittivity with no charged species")
    alpha = reg.value("alpha")
    if model is SpeciesModel.SIMPLE:
        kappa = 1.0 / (4 * math.pi * alpha * float(weight))
    else:
        kappa = _SPHERE_GEOMETRY / (3 * alpha * float(weight))
    energy = kappa * reg.quantity("m_e") * reg.quantity("c") ** 2
    return GapMatch(kappa, energy)
