import fractions
import itertools
import math
import unittest.mock

import pytest

import wildquotient.group
import wildquotient.local
from wildquotient.exceptions import (
    PrecisionExhaustedError,
    PrecisionTooSmallError,
)
from wildquotient.options import ActionConvention

# pylint: disable=protected-access


@pytest.mark.parametrize(("q", "precision"), ((2, 8), (3, 10), (4, 12), (9, 22)))
def test_default_precision(q, precision):
    assert wildquotient.local.default_precision(q) == precision


def test_series_arithmetic(field16):
    one = wildquotient.local.TruncatedSeries.monomial(field16, 6, 0)
    u = wildquotient.local.TruncatedSeries.monomial(field16, 6, 1)
    assert u.valuation == 1
    assert wildquotient.local.TruncatedSeries.zero(field16, 6).valuation == math.inf
    assert u.power(6) == wildquotient.local.TruncatedSeries.zero(field16, 6)
    assert (one + u) * u.inverse_of_one_plus() == one
    assert u.power(3).divide_by_u(2).precision == 4
    assert u.multiply_by_u(2).valuation == 3
    with pytest.raises(ValueError):
        u.divide_by_u(2)
    with pytest.raises(ValueError):
        one.inverse_of_one_plus()


def test_series_compose(field27):
    u = wildquotient.local.TruncatedSeries.monomial(field27, 8, 1)
    square = u.power(2)
    assert square.compose(u + square) == square + square.power(2) + u.power(3).scale(
        field27.from_int(2)
    )
    with pytest.raises(ValueError):
        square.compose(u.power(0))


@pytest.mark.parametrize("q", (2, 3, 4, 5))
def test_expand_w(q):
    precision = wildquotient.local.default_precision(q)
    w = wildquotient.local.expand_w(q, precision)
    assert w.valuation == q + 1
    assert w - w.power(q) == wildquotient.local.TruncatedSeries.monomial(
        w.field, precision, q + 1
    )


def test_expand_w_precision_too_small():
    with pytest.raises(PrecisionTooSmallError):
        wildquotient.local.expand_w(3, 5)


@pytest.mark.parametrize("q", (2, 3, 4, 5))
def test_fixed_scheme_length(q):
    group = wildquotient.group.build_group(q)
    for sigma in group:
        if sigma == group.identity:
            continue
        length = wildquotient.local.fixed_scheme_length(sigma, q)
        assert length == (q + 2 if sigma.r.is_zero else 2)
        assert wildquotient.local.ramification_jump(sigma, q) == length - 1


@pytest.mark.parametrize("q", (2, 3, 4))
def test_fixed_scheme_length_precision_stable(q):
    group = wildquotient.group.build_group(q)
    for sigma in group:
        if sigma == group.identity:
            continue
        lengths = {
            wildquotient.local.fixed_scheme_length(sigma, q, precision)
            for precision in (None, 3 * q + 4, 4 * q + 8)
        }
        assert len(lengths) == 1


@pytest.mark.parametrize("q", (2, 3))
def test_fixed_scheme_length_ultrametric(q):
    group = wildquotient.group.build_group(q)
    lengths = {
        sigma: wildquotient.local.fixed_scheme_length(sigma, q)
        for sigma in group
        if sigma != group.identity
    }
    for sigma, tau in itertools.product(lengths, repeat=2):
        product = group.mul(sigma, tau)
        if product != group.identity:
            assert lengths[product] >= min(lengths[sigma], lengths[tau])


@pytest.mark.parametrize(("q", "degree"), ((2, 4), (3, 8)))
def test_fixed_scheme_length_larger_field(q, degree):
    group = wildquotient.group.build_group(q, degree)
    assert group.field.degree == degree
    for sigma in group.generators:
        length = wildquotient.local.fixed_scheme_length(sigma, q)
        assert length == (q + 2 if sigma.r.is_zero else 2)
    with pytest.raises(ValueError, match=r"identity"):
        wildquotient.local.fixed_scheme_length(group.identity, q)


def test_fixed_scheme_length_identity(quaternion_group):
    with pytest.raises(ValueError, match=r"identity"):
        wildquotient.local.fixed_scheme_length(quaternion_group.identity, 2)


def test_precision_exhausted(quaternion_group):
    with unittest.mock.patch("wildquotient.local.MAX_PRECISION", 16):
        with pytest.raises(PrecisionExhaustedError) as exc_info:
            wildquotient.local._displacement_valuation(
                quaternion_group.identity, 2, 8
            )
    assert exc_info.value.precision == 16


@pytest.mark.parametrize("q", (2, 3, 4, 5, 7, 8, 9))
def test_filtration(q):
    profile = wildquotient.local.filtration(q)
    orders = [order for _, order in profile.filtration]
    assert orders == [q**3, q**3] + [q] * q + [1]
    assert profile.order(1) == q**3
    assert profile.order(q + 1) == q
    assert profile.order(q + 2) == 1
    assert profile.order(100) == 1


def test_filtration_quaternion():
    profile = wildquotient.local.filtration(2)
    assert profile.filtration == ((0, 8), (1, 8), (2, 2), (3, 2), (4, 1))
    assert len(profile.jumps) == 7


@pytest.mark.parametrize(
    ("q", "dimension", "dimension_g", "dimension_z", "expected"),
    (
        (2, 2, 0, 0, 3),
        (3, 6, 0, 0, 8),
        (4, 12, 0, 0, 15),
        (3, 1, 1, 1, 0),
    ),
)
def test_swan_closed_form(q, dimension, dimension_g, dimension_z, expected):
    assert wildquotient.local.swan_closed_form(
        q, dimension, dimension_g, dimension_z
    ) == fractions.Fraction(expected)


def test_swan_conductor_sum():
    profile = wildquotient.local.filtration(2)
    # G_1 = G and G_2 = G_3 = Z
    assert wildquotient.local.swan_conductor(profile, 2, {1: 0, 2: 0, 3: 0}) == 3
    with pytest.raises(ValueError, match=r"missing"):
        wildquotient.local.swan_conductor(profile, 2, {1: 0})


@pytest.mark.parametrize("q", (2, 3))
def test_action_convention(q):
    assert wildquotient.local.action_convention(q) == ActionConvention.OPPOSITE
