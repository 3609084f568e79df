import math

import pytest

from vacuumresponse.constants import (
    DERIVED_KEYS,
    REQUIRED_KEYS,
    MalformedLineError,
    MissingConstantError,
    NonPositiveMassError,
    bundled_constants_path,
    compton_wavelength,
    load_constants,
    schwinger_field,
)
from vacuumresponse.dimensions import (
    LENGTH,
    Quantity,
    QuantityKind,
    UnitSystem,
    convert_system,
)
from vacuumresponse.units import UnitParseError, parse_unit


@pytest.fixture()
def bundled_text():
    return bundled_constants_path().read_text(encoding="utf-8")


def write_registry(tmp_path, text):
    path = tmp_path / "constants.tsv"
    path.write_text(text, encoding="utf-8")
    return path


class TestLoad:
    def test_bundled_file_loads_with_release(self, registry):
        assert registry.codata_release == "2018"
        for key in REQUIRED_KEYS + DERIVED_KEYS:
            assert key in registry

    def test_eps0_value_to_five_digits(self, registry):
        assert f"{registry.value('eps0'):.4e}" == "8.8542e-12"
        assert registry["eps0"].quantity.dimension == parse_unit("A s / (V m)")[1]

    def test_si_consistency_identity(self, registry):
        product = (
            registry.quantity("eps0") * registry.quantity("mu0") * registry.quantity("c") ** 2
        )
        assert product.dimension.is_dimensionless
        assert product.magnitude == pytest.approx(1.0, rel=1e-9)

    def test_fine_structure_constant(self, registry):
        alpha = registry.quantity("alpha")
        assert alpha.dimension.is_dimensionless
        assert alpha.magnitude == pytest.approx(7.2974e-3, rel=1e-4)
        assert 1 / alpha.magnitude == pytest.approx(137.036, rel=1e-5)

    def test_derived_records_reproduce_their_formulas(self, registry):
        e = registry.quantity("e")
        c = registry.quantity("c")
        hbar = registry.quantity("hbar")
        m_e = registry.quantity("m_e")
        eps0 = registry.quantity("eps0")
        assert registry.value("alpha") == pytest.approx(
            (e**2 / (4 * math.pi * eps0 * hbar * c)).magnitude, rel=1e-12
        )
        assert registry.value("lambda_c") == pytest.approx(
            (hbar / (m_e * c)).magnitude, rel=1e-12
        )
        assert registry.value("E_S") == pytest.approx(
            (m_e**2 * c**3 / (e * hbar)).magnitude, rel=1e-12
        )

    def test_alpha_agrees_between_unit_systems(self, registry):
        # SI route: e^2/(4 pi eps0 hbar c).  Gaussian route: e^2/(hbar c)
        # with every factor converted through the kind table.
        alpha_si = registry.value("alpha")
        e_gauss = convert_system(registry.quantity("e"), QuantityKind.CHARGE, UnitSystem.GAUSSIAN)
        joule = Quantity(1.0, parse_unit("J")[1])
        erg_per_joule = convert_system(joule, QuantityKind.ENERGY, UnitSystem.GAUSSIAN).magnitude
        metre = Quantity(1.0, LENGTH)
        cm_per_metre = convert_system(metre, QuantityKind.LENGTH, UnitSystem.GAUSSIAN).magnitude
        hbar_gauss = registry.value("hbar") * erg_per_joule
        c_gauss = registry.value("c") * cm_per_metre
        alpha_gauss = e_gauss.magnitude**2 / (hbar_gauss * c_gauss)
        assert alpha_gauss == pytest.approx(alpha_si, rel=1e-9)

    def test_missing_constant(self, tmp_path, bundled_text):
        text = "\n".join(
            line for line in bundled_text.splitlines() if not line.startswith("m_e\t")
        )
        with pytest.raises(MissingConstantError) as err:
            load_constants(write_registry(tmp_path, text))
        assert err.value.key == "m_e"

    def test_malformed_line_reports_line_number(self, tmp_path, bundled_text):
        text = bundled_text + "broken line without tabs\n"
        with pytest.raises(MalformedLineError) as err:
            load_constants(write_registry(tmp_path, text))
        assert err.value.line_number == len(bundled_text.splitlines()) + 1

    def test_bad_magnitude(self, tmp_path, bundled_text):
        text = bundled_text + "zeta\tnot-a-number\tm\ttest\n"
        with pytest.raises(MalformedLineError):
            load_constants(write_registry(tmp_path, text))

    def test_unit_parse_error_propagates(self, tmp_path, bundled_text):
        text = bundled_text + "zeta\t1.0\tbogus_unit\ttest\n"
        with pytest.raises(UnitParseError):
            load_constants(write_registry(tmp_path, text))


class TestSchwingerField:
    def test_value_and_dimension(self, registry):
        field = schwinger_field(registry)
        assert field.magnitude == pytest.approx(1.32328547413e18, rel=1e-9)
        assert field.magnitude == pytest.approx(1.32e18, rel=5e-3)
        assert field.dimension == parse_unit("V/m")[1]

    def test_quadratic_mass_scaling(self, tmp_path, bundled_text):
        doubled = bundled_text.replace(
            "m_e\t9.1093837015e-31", "m_e\t1.8218767403e-30"
        )
        scratch = load_constants(write_registry(tmp_path, doubled))
        base = load_constants(bundled_constants_path())
        ratio = schwinger_field(scratch).magnitude / schwinger_field(base).magnitude
        assert ratio == pytest.approx(4.0, rel=1e-9)


class TestComptonWavelength:
    def test_electron_value(self, registry):
        lam = compton_wavelength(registry.quantity("m_e"), registry)
        assert lam.magnitude == pytest.approx(3.86159267962e-13, rel=1e-10)
        assert lam.dimension == LENGTH

    def test_inverse_mass_scaling(self, registry):
        m = registry.quantity("m_e")
        assert compton_wavelength(2 * m, registry).magnitude == pytest.approx(
            compton_wavelength(m, registry).magnitude / 2, rel=1e-15
        )

    def test_rejects_non_positive_mass(self, registry):
        with pytest.raises(NonPositiveMassError):
            compton_wavelength(0 * registry.quantity("m_e"), registry)
        with pytest.raises(NonPositiveMassError):
            compton_wavelength(Quantity(1.0, LENGTH), registry)
