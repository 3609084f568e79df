import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from vacuumresponse.dimensions import (
    DIMENSIONLESS,
    LENGTH,
    PERMITTIVITY,
    Dimension,
)
from vacuumresponse.units import (
    EmptyInputError,
    UnitSyntaxError,
    UnknownUnitError,
    format_dimension,
    parse_unit,
    quantity,
)

exponents = st.fractions(min_value=-6, max_value=6, max_denominator=4)
dims = st.builds(Dimension, *[exponents] * 7)


class TestParse:
    def test_permittivity_unit(self):
        scale, dim = parse_unit("A s / (V m)")
        assert scale == 1.0
        assert dim == PERMITTIVITY

    def test_prefix(self):
        scale, dim = parse_unit("km")
        assert scale == 1000.0
        assert dim == LENGTH

    def test_unbalanced_group(self):
        with pytest.raises(UnitSyntaxError) as err:
            parse_unit("V/(m")
        assert err.value.position == 4
        assert ")" in err.value.expected

    def test_empty(self):
        with pytest.raises(EmptyInputError):
            parse_unit("")
        with pytest.raises(EmptyInputError):
            parse_unit("   ")

    def test_unknown_unit_carries_position(self):
        with pytest.raises(UnknownUnitError) as err:
            parse_unit("m foo")
        assert err.value.symbol == "foo"
        assert err.value.position == 2

    def test_milli_scale_exact(self):
        assert parse_unit("mm")[0] == 1e-3
        assert parse_unit("mm")[1] == LENGTH

    def test_product_associativity(self):
        variants = ["m kg s", "(m kg) s", "m (kg s)", "m*kg*s", "m·kg·s"]
        results = [parse_unit(v) for v in variants]
        assert all(r == results[0] for r in results)

    def test_slash_binds_one_factor(self):
        # "a/b c" is (a/b)*c, not a/(b*c)
        _, dim = parse_unit("m/s kg")
        assert dim == parse_unit("(m/s) kg")[1]
        assert dim != parse_unit("m/(s kg)")[1]

    def test_derived_volt_matches_base_expansion(self):
        assert parse_unit("V")[1] == parse_unit("kg m^2 / (A s^3)")[1]

    def test_rational_exponents(self):
        _, dim = parse_unit("m^1/2")
        assert dim == LENGTH ** Fraction(1, 2)
        _, dim = parse_unit("s^-2")
        assert dim == parse_unit("1/s^2")[1]

    def test_exponent_slash_disambiguation(self):
        # the slash after an exponent integer resumes the expression when the
        # next token is not an integer
        _, dim = parse_unit("m^2/s")
        assert dim == parse_unit("m^2 / s")[1]

    def test_zero_exponent_denominator_is_a_syntax_error(self):
        with pytest.raises(UnitSyntaxError):
            parse_unit("m^1/0")

    def test_dangling_operators(self):
        with pytest.raises(UnitSyntaxError):
            parse_unit("m^")
        with pytest.raises(UnitSyntaxError):
            parse_unit("m/")
        with pytest.raises(UnitSyntaxError):
            parse_unit("()")

    def test_numbers_other_than_one_rejected(self):
        with pytest.raises(UnitSyntaxError) as err:
            parse_unit("2 m")
        assert err.value.position == 0

    def test_micro_sign_aliases(self):
        for text in ("um", "µm", "μm"):
            scale, dim = parse_unit(text)
            assert scale == pytest.approx(1e-6)
            assert dim == LENGTH

    def test_bare_symbol_priority(self):
        # "cd" is the candela, not centi-day; "T" is the tesla, not tera.
        assert parse_unit("cd")[1] == Dimension(luminosity=Fraction(1))
        assert parse_unit("T")[1] == parse_unit("kg/(A s^2)")[1]

    def test_prefixed_compound_symbols(self):
        assert parse_unit("mN")[0] == pytest.approx(1e-3)
        assert parse_unit("dam")[0] == pytest.approx(10.0)
        assert parse_unit("MeV")[0] == pytest.approx(1e6 * parse_unit("eV")[0])

    def test_one_token(self):
        assert parse_unit("1") == (1.0, DIMENSIONLESS)
        assert parse_unit("1 / s")[1] == parse_unit("Hz")[1]

    def test_electronvolt_scale(self):
        scale, dim = parse_unit("eV")
        assert dim == parse_unit("J")[1]
        assert scale == pytest.approx(1.602176634e-19, rel=1e-15)

    def test_quantity_helper(self):
        q = quantity(2.0, "km")
        assert q.magnitude == 2000.0
        assert q.dimension == LENGTH


class TestFormat:
    def test_dimensionless(self):
        assert format_dimension(DIMENSIONLESS) == "1"

    def test_permittivity(self):
        assert format_dimension(PERMITTIVITY) == "A^2 s^4 / (kg m^3)"

    def test_half_power(self):
        assert format_dimension(LENGTH ** Fraction(1, 2)) == "m^1/2"

    def test_single_negative(self):
        assert format_dimension(DIMENSIONLESS / Dimension(time=Fraction(1))) == "1 / s"

    @given(d=dims)
    def test_round_trip_property(self, d):
        scale, parsed = parse_unit(format_dimension(d))
        assert scale == 1.0
        assert parsed == d

    def test_round_trip_thousand_cases_seeded(self):
        rng = random.Random(1859)
        for _ in range(1000):
            d = Dimension(
                *(
                    Fraction(rng.randint(-6, 6), rng.choice((1, 1, 2, 3, 4)))
                    for _ in range(7)
                )
            )
            scale, parsed = parse_unit(format_dimension(d))
            assert scale == 1.0
            assert parsed == d
