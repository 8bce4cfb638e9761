"""Exact scalar arithmetic: field axioms, quarter powers, float reporting."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pfensembles.exact import (
    AlgebraicScalar,
    BaseMismatchError,
    GaussianRational,
    exact_sqrt,
    quarter_power,
)

# One collapsing base (perfect fourth power), one square-but-not-fourth-power
# base, and one generic base; together they exercise all three ring degrees.
BASES = [Fraction(1, 16), Fraction(4, 9), Fraction(1, 3)]

rationals = st.fractions(
    min_value=-1000, max_value=1000, max_denominator=50
)
gaussians = st.builds(GaussianRational, rationals, rationals)


def scalar_strategy(base):
    return st.builds(
        lambda a, b, c, d: AlgebraicScalar((a, b, c, d), base),
        gaussians, gaussians, gaussians, gaussians,
    )


# ---------------------------------------------------------------------------
# Gaussian rationals


def test_gaussian_parse():
    assert GaussianRational.parse("4") == GaussianRational(4)
    assert GaussianRational.parse("-1/3") == GaussianRational(Fraction(-1, 3))
    assert GaussianRational.parse("1+1i") == GaussianRational(1, 1)
    assert GaussianRational.parse("1/2-3/4i") == GaussianRational(
        Fraction(1, 2), Fraction(-3, 4)
    )
    with pytest.raises(ValueError):
        GaussianRational.parse("nonsense")


def test_gaussian_conjugation_involution():
    g = GaussianRational(Fraction(2, 3), Fraction(-5, 7))
    assert g.conjugate().conjugate() == g


@given(gaussians, gaussians, gaussians)
def test_gaussian_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    if not a.is_zero():
        assert a * (GaussianRational(1) / a) == GaussianRational(1)


def test_gaussian_str_roundtrip():
    for text in ["4", "-1/3", "1+1i", "1/2-3/4i", "0"]:
        g = GaussianRational.parse(text)
        assert GaussianRational.parse(str(g)) == g


# ---------------------------------------------------------------------------
# Algebraic scalars


def test_reduction_rule_s4():
    # s * s^3 reduces to the base
    for base in BASES:
        s = AlgebraicScalar((0, 1, 0, 0), base)
        s3 = AlgebraicScalar((0, 0, 0, 1), base)
        assert s * s3 == AlgebraicScalar.from_value(base, base)


def test_generator_fourth_power():
    g = quarter_power(Fraction(1, 16), 1)
    assert g * g * g * g == AlgebraicScalar.from_value(Fraction(1, 16), Fraction(1, 16))


def test_polynomial_multiply_difference_of_squares():
    # (1+s)(1-s) = 1-s^2; over a non-collapsing base the coefficient tuple
    # is visible, over a collapsing base the same identity holds by value
    base = Fraction(1, 3)
    one_plus = AlgebraicScalar((1, 1, 0, 0), base)
    one_minus = AlgebraicScalar((1, -1, 0, 0), base)
    assert one_plus * one_minus == AlgebraicScalar((1, 0, -1, 0), base)

    base = Fraction(1, 16)  # s = 1/2 exactly, so 1-s^2 = 3/4
    one_plus = AlgebraicScalar((1, 1, 0, 0), base)
    one_minus = AlgebraicScalar((1, -1, 0, 0), base)
    assert one_plus * one_minus == AlgebraicScalar.from_value(Fraction(3, 4), base)


def test_quarter_power_examples():
    b = Fraction(1, 16)
    assert quarter_power(b, 0) == AlgebraicScalar.one(b)
    assert quarter_power(b, 4) == AlgebraicScalar.from_value(b, b)
    # k=3: numerically (1/16)^(3/4) = 1/8
    assert quarter_power(b, 3).to_complex() == pytest.approx(0.125)


def test_to_float_examples():
    b = Fraction(1, 16)
    assert AlgebraicScalar((0, 1, 0, 0), b).to_complex() == pytest.approx(0.5)
    assert AlgebraicScalar((1, 0, 0, 0), Fraction(7, 5)).to_complex() == pytest.approx(1.0)
    assert AlgebraicScalar((0, 0, 1, 0), b).to_complex() == pytest.approx(0.25)


@pytest.mark.parametrize("base", BASES)
def test_quarter_power_additivity(base):
    for k in range(-16, 17):
        for m in range(-16, 17):
            assert quarter_power(base, k) * quarter_power(base, m) == quarter_power(
                base, k + m
            )


@pytest.mark.parametrize("base", BASES)
@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_scalar_field_axioms(base, data):
    a = data.draw(scalar_strategy(base))
    b = data.draw(scalar_strategy(base))
    c = data.draw(scalar_strategy(base))
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    if not a.is_zero():
        assert a * a.inv() == AlgebraicScalar.one(base)
        assert (b / a) * a == b


@pytest.mark.parametrize("base", BASES)
@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_to_float_is_homomorphism(base, data):
    a = data.draw(scalar_strategy(base))
    b = data.draw(scalar_strategy(base))
    fsum = (a + b).to_complex()
    fprod = (a * b).to_complex()
    scale = max(abs(fsum), abs(fprod), 1.0)
    assert abs(fsum - (a.to_complex() + b.to_complex())) <= 1e-12 * scale
    assert abs(fprod - a.to_complex() * b.to_complex()) <= 1e-12 * scale


def test_base_mismatch_rejected():
    a = AlgebraicScalar.one(Fraction(1, 3))
    b = AlgebraicScalar.one(Fraction(1, 5))
    with pytest.raises(BaseMismatchError):
        _ = a + b


def test_division_by_zero_rejected():
    a = AlgebraicScalar.one(Fraction(1, 3))
    with pytest.raises(ZeroDivisionError):
        _ = a / AlgebraicScalar.zero(Fraction(1, 3))


def test_deg4_inverse():
    base = Fraction(1, 3)
    a = AlgebraicScalar((Fraction(2), Fraction(1, 5), Fraction(-3), Fraction(7, 2)), base)
    assert a * a.inv() == AlgebraicScalar.one(base)


def test_complex_coefficients():
    base = Fraction(1, 3)
    a = AlgebraicScalar(
        (GaussianRational(1, 1), GaussianRational(0, -2), 0, GaussianRational(3, 5)),
        base,
    )
    assert a * a.inv() == AlgebraicScalar.one(base)
    fa = a.to_complex()
    s = float(base) ** 0.25
    assert fa == pytest.approx((1 + 1j) - 2j * s + (3 + 5j) * s**3)


def test_serialization_roundtrip():
    for base in BASES:
        a = AlgebraicScalar(
            (GaussianRational(Fraction(1, 2), 1), Fraction(-3), 0, Fraction(5, 7)),
            base,
        )
        assert AlgebraicScalar.from_json_obj(a.to_json_obj()) == a


def test_exact_sqrt():
    assert exact_sqrt(Fraction(9, 4)) == Fraction(3, 2)
    assert exact_sqrt(Fraction(1, 3)) is None
    assert exact_sqrt(Fraction(-1)) is None


def test_math_isqrt_oracle_for_collapse():
    # the collapse degrees: fourth power -> 1, square -> 2, generic -> 4
    from pfensembles.exact import _base_profile

    assert _base_profile(Fraction(1, 16))[0] == 1
    assert _base_profile(Fraction(4, 9))[0] == 2
    assert _base_profile(Fraction(1, 3))[0] == 4
    assert _base_profile(Fraction(1))[0] == 1
