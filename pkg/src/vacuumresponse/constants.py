"""Physical-constant registry backed by a human-auditable data file.

Constants are read from a tab-separated text file (one record per line:
``key<TAB>magnitude<TAB>unit-expression<TAB>source``) rather than being
hard-coded, so the pinned CODATA release can be audited or swapped without
touching code.  The bundled file pins CODATA 2018; its release string is
carried in a ``#codata <release>`` header line.

Three derived records are appended at load time: the fine-structure
constant, the electron's reduced Compton wavelength, and the critical
(Schwinger) field strength.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .dimensions import MASS, Quantity
from .units import UnitParseError, format_dimension, parse_unit


class MissingConstantError(KeyError):
    def __init__(self, key: str) -> None:
        self.key = key
        super().__init__(f"required constant {key!r} not found")

    def __str__(self) -> str:  # KeyError quotes its payload otherwise
        return self.args[0]


class MalformedLineError(ValueError):
    def __init__(self, line_number: int, reason: str) -> None:
        self.line_number = line_number
        super().__init__(f"malformed constants line {line_number}: {reason}")


class NonPositiveMassError(ValueError):
    """Mass argument was zero or negative."""


# Every key the model needs: the electromagnetic base set plus the rest
# masses of all species in the bundled species table.
REQUIRED_KEYS = (
    "c",
    "hbar",
    "e",
    "m_e",
    "eps0",
    "mu0",
    "m_mu",
    "m_tau",
    "m_up",
    "m_down",
    "m_strange",
    "m_charm",
    "m_bottom",
    "m_top",
)

DERIVED_KEYS = ("alpha", "lambda_c", "E_S")


@dataclass(frozen=True)
class ConstantRecord:
    key: str
    symbol: str
    quantity: Quantity
    unit_text: str
    source: str
    definition: str | None = None

    @property
    def magnitude(self) -> float:
        return self.quantity.magnitude


class ConstantRegistry:
    """Immutable mapping of constant keys to records."""

    def __init__(self, records: dict[str, ConstantRecord], codata_release: str | None) -> None:
        self._records = dict(records)
        self.codata_release = codata_release

    def __contains__(self, key: str) -> bool:
        return key in self._records

    def __getitem__(self, key: str) -> ConstantRecord:
        try:
            return self._records[key]
        except KeyError:
            raise MissingConstantError(key) from None

    def keys(self) -> tuple[str, ...]:
        return tuple(self._records)

    def records(self) -> tuple[ConstantRecord, ...]:
        return tuple(self._records.values())

    def quantity(self, key: str) -> Quantity:
        return self[key].quantity

    def value(self, key: str) -> float:
        return self[key].quantity.magnitude


def _parse_lines(lines: list[str], origin: str) -> ConstantRegistry:
    records: dict[str, ConstantRecord] = {}
    release: str | None = None
    for number, raw in enumerate(lines, start=1):
        line = raw.rstrip("\n")
        if not line.strip():
            continue
        if line.startswith("#"):
            if line.startswith("#codata"):
                release = line[len("#codata"):].strip() or None
            continue
        fields = line.split("\t")
        if len(fields) != 4:
            raise MalformedLineError(number, f"expected 4 tab-separated fields, got {len(fields)}")
        key, magnitude_text, unit_text, source = (f.strip() for f in fields)
        if not key:
            raise MalformedLineError(number, "empty key")
        try:
            magnitude = float(magnitude_text)
        except ValueError:
            raise MalformedLineError(number, f"bad magnitude {magnitude_text!r}") from None
        try:
            scale, dimension = parse_unit(unit_text)
        except UnitParseError as exc:
            raise UnitParseError(f"{origin} line {number}: {exc}") from exc
        records[key] = ConstantRecord(
            key=key,
            symbol=key,
            quantity=Quantity(magnitude * scale, dimension),
            unit_text=unit_text,
            source=source,
        )
    for key in REQUIRED_KEYS:
        if key not in records:
            raise MissingConstantError(key)
    _append_derived(records)
    return ConstantRegistry(records, release)


def _append_derived(records: dict[str, ConstantRecord]) -> None:
    c = records["c"].quantity
    hbar = records["hbar"].quantity
    e = records["e"].quantity
    m_e = records["m_e"].quantity
    eps0 = records["eps0"].quantity

    alpha = e**2 / (4 * math.pi * eps0 * hbar * c)
    lambda_c = hbar / (m_e * c)
    schwinger = m_e**2 * c**3 / (e * hbar)
    derived = {
        "alpha": (alpha, "e^2 / (4 pi eps0 hbar c)"),
        "lambda_c": (lambda_c, "hbar / (m_e c)"),
        "E_S": (schwinger, "m_e^2 c^3 / (e hbar)"),
    }
    for key, (value, definition) in derived.items():
        records[key] = ConstantRecord(
            key=key,
            symbol=key,
            quantity=value,
            unit_text=format_dimension(value.dimension),
            source="derived",
            definition=definition,
        )
    # Self-check: re-derivation must reproduce the stored magnitudes.
    for key, (value, _) in derived.items():
        stored = records[key].quantity.magnitude
        if not math.isclose(stored, value.magnitude, rel_tol=1e-12):
            raise AssertionError(f"derived constant {key} failed its load-time self-check")


def load_constants(path: str | Path) -> ConstantRegistry:
    """Load a constants file, append derived records, and validate presence."""
    text = Path(path).read_text(encoding="utf-8")
    return _parse_lines(text.splitlines(), origin=str(path))


def bundled_constants_path() -> Path:
    return Path(str(resources.files(__package__) / "data" / "constants.tsv"))


@lru_cache(maxsize=1)
def default_registry() -> ConstantRegistry:
    return load_constants(bundled_constants_path())


def schwinger_field(registry: ConstantRegistry) -> Quantity:
    """Critical field strength above which the linear weak-field treatment fails."""
    return registry.quantity("E_S")


def compton_wavelength(mass: Quantity, registry: ConstantRegistry | None = None) -> Quantity:
    """Reduced Compton wavelength hbar/(m c) of a particle of the given mass."""
    reg = registry or default_registry()
    if mass.dimension != MASS:
        raise NonPositiveMassError(f"expected a mass, got dimension [{mass.dimension}]")
    if mass.magnitude <= 0:
        raise NonPositiveMassError(f"mass must be positive, got {mass.magnitude!r}")
    return reg.quantity("hbar") / (mass * reg.quantity("c"))
