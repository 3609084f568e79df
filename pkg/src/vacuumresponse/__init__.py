"""Dimension-checked estimates of the vacuum's linear electromagnetic response."""

from .constants import (
    ConstantRecord,
    ConstantRegistry,
    compton_wavelength,
    default_registry,
    load_constants,
    schwinger_field,
)
from .dimensions import (
    Dimension,
    Quantity,
    QuantityKind,
    UnitSystem,
    convert_system,
)
from .model import (
    FieldProbe,
    OscillatorParams,
    RadiusRule,
    Shape,
    VacuumResponse,
    VolumeConvention,
    effective_radius,
    effective_volume,
    fine_structure_form,
    maxwell_closure,
    mean_square_orbit_radius,
    pair_magnetic_moment,
    permeability_estimate,
    permittivity_estimate,
    vacuum_polarization,
)
from .species import (
    ParticleSpecies,
    SpeciesModel,
    SpeciesTable,
    charge_weighted_sum,
    default_species_table,
    gap_for_exact_match,
    load_species,
    required_species_count,
    total_permittivity,
)
from .units import format_dimension, parse_unit, quantity

__version__ = "0.1.0"

__all__ = [
    "ConstantRecord",
    "ConstantRegistry",
    "Dimension",
    "FieldProbe",
    "OscillatorParams",
    "ParticleSpecies",
    "Quantity",
    "QuantityKind",
    "RadiusRule",
    "Shape",
    "SpeciesModel",
    "SpeciesTable",
    "UnitSystem",
    "VacuumResponse",
    "VolumeConvention",
    "charge_weighted_sum",
    "compton_wavelength",
    "convert_system",
    "default_registry",
    "default_species_table",
    "effective_radius",
    "effective_volume",
    "fine_structure_form",
    "format_dimension",
    "gap_for_exact_match",
    "load_constants",
    "load_species",
    "maxwell_closure",
    "mean_square_orbit_radius",
    "pair_magnetic_moment",
    "permeability_estimate",
    "permittivity_estimate",
    "parse_unit",
    "quantity",
    "required_species_count",
    "schwinger_field",
    "total_permittivity",
    "vacuum_polarization",
    "__version__",
]
