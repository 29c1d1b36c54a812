# wildquotient - Verification Toolkit for Wild Quotient Surface Singularities
#
# Copyright (C) 2026 wildquotient contributors
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <https://www.gnu.org/licenses/>.

"""
Ramification of G at the point at infinity of C.

The completed local ring there is k[[u]] with u = x/y,
and w = 1/y satisfies w - w^q = u^{q+1}.
"""

from __future__ import annotations

import dataclasses
import fractions
import functools
import logging
import math
import typing

from wildquotient.exceptions import (
    NonIntegralSwanError,
    PrecisionExhaustedError,
    PrecisionTooSmallError,
    StructureViolationError,
)
from wildquotient.gf import FieldElement, FieldSpec
from wildquotient.group import GroupElement, build_group
from wildquotient.options import ActionConvention

_LOGGER = logging.getLogger(__name__)

MAX_PRECISION = 512

Valuation = typing.Union[int, float]


def default_precision(q: int) -> int:
    return 2 * q + 4


@dataclasses.dataclass(frozen=True)
class TruncatedSeries:
    """
    sum(coeffs[i] * u^i) modulo u^precision
    """

    coeffs: typing.Tuple[FieldElement, ...]

    @property
    def precision(self) -> int:
        return len(self.coeffs)

    @property
    def field(self) -> FieldSpec:
        return self.coeffs[0].spec

    @classmethod
    def monomial(
        cls,
        field: FieldSpec,
        precision: int,
        degree: int,
        coefficient: typing.Optional[FieldElement] = None,
    ) -> TruncatedSeries:
        coeffs = [field.zero] * precision
        if degree < precision:
            coeffs[degree] = field.one if coefficient is None else coefficient
        return cls(tuple(coeffs))

    @classmethod
    def zero(cls, field: FieldSpec, precision: int) -> TruncatedSeries:
        return cls((field.zero,) * precision)

    @property
    def valuation(self) -> Valuation:
        for index, coefficient in enumerate(self.coeffs):
            if not coefficient.is_zero:
                return index
        return math.inf

    def truncate(self, precision: int) -> TruncatedSeries:
        assert precision <= self.precision, (precision, self.precision)
        return TruncatedSeries(self.coeffs[:precision])

    def _common_precision(self, other: TruncatedSeries) -> int:
        return min(self.precision, other.precision)

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        precision = self._common_precision(other)
        return TruncatedSeries(
            tuple(a + b for a, b in zip(self.coeffs[:precision], other.coeffs))
        )

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries(tuple(-a for a in self.coeffs))

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        return self + -other

    def scale(self, scalar: FieldElement) -> TruncatedSeries:
        return TruncatedSeries(tuple(scalar * a for a in self.coeffs))

    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        precision = self._common_precision(other)
        product = [self.field.zero] * precision
        right = [
            (j, b) for j, b in enumerate(other.coeffs[:precision]) if not b.is_zero
        ]
        for i, a in enumerate(self.coeffs[:precision]):
            if a.is_zero:
                continue
            for j, b in right:
                if i + j >= precision:
                    break
                product[i + j] = product[i + j] + a * b
        return TruncatedSeries(tuple(product))

    def power(self, exponent: int) -> TruncatedSeries:
        assert exponent >= 0, exponent
        result = TruncatedSeries.monomial(self.field, self.precision, 0)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def divide_by_u(self, times: int) -> TruncatedSeries:
        """
        exact division by u^times, losing precision accordingly
        """
        if self.valuation < times:
            raise ValueError(f"valuation {self.valuation} below {times}")
        return TruncatedSeries(self.coeffs[times:])

    def multiply_by_u(self, times: int) -> TruncatedSeries:
        """
        exact multiplication by u^times, gaining precision accordingly
        """
        return TruncatedSeries((self.field.zero,) * times + self.coeffs)

    def inverse_of_one_plus(self) -> TruncatedSeries:
        """
        (1 + self)^-1 = sum((-self)^k), requires valuation >= 1
        """
        if self.valuation < 1:
            raise ValueError("geometric series needs a series without constant term")
        negated = -self
        term = TruncatedSeries.monomial(self.field, self.precision, 0)
        total = term
        for _ in range(1, self.precision):
            term = term * negated
            if term.valuation == math.inf:
                break
            total = total + term
        return total

    def compose(self, inner: TruncatedSeries) -> TruncatedSeries:
        """
        self(inner(u)) by Horner evaluation, requires valuation(inner) >= 1
        """
        if inner.valuation < 1:
            raise ValueError("can only substitute series without constant term")
        precision = min(self.precision, inner.precision)
        result = TruncatedSeries.monomial(
            self.field, precision, 0, self.coeffs[precision - 1]
        )
        for coefficient in reversed(self.coeffs[: precision - 1]):
            result = result * inner + TruncatedSeries.monomial(
                self.field, precision, 0, coefficient
            )
        return result


@dataclasses.dataclass(frozen=True)
class RamificationProfile:

    q: int
    # group element index -> largest i with sigma in G_i
    jumps: typing.Mapping[int, int]
    # (i, |G_i|) for i = 0, ..., q+2
    filtration: typing.Tuple[typing.Tuple[int, int], ...]

    def order(self, index: int) -> int:
        for i, order in self.filtration:
            if i == index:
                return order
        return 1


def _check_precision(q: int, precision: int) -> None:
    if precision < q + 3:
        raise PrecisionTooSmallError(
            f"precision {precision} below q+3={q + 3} for q={q}"
        )


@functools.lru_cache(maxsize=None)
def expand_w(
    q: int, precision: int, field: typing.Optional[FieldSpec] = None
) -> TruncatedSeries:
    """
    w = 1/y in k[[u]], fixed point of w -> u^{q+1} + w^q

    field: coefficient field, the ambient field of G if omitted
    """
    _check_precision(q, precision)
    field = build_group(q).field if field is None else field
    leading = TruncatedSeries.monomial(field, precision, q + 1)
    w = TruncatedSeries.zero(field, precision)
    for _ in range(precision):
        successor = leading + w.power(q)
        if successor == w:
            return w
        w = successor
    raise AssertionError(f"w did not stabilize modulo u^{precision}")


def _is_identity(sigma: GroupElement) -> bool:
    return sigma.r.is_zero and sigma.t.is_zero


@functools.lru_cache(maxsize=None)
def act_on_uniformizer(
    sigma: GroupElement, q: int, precision: int
) -> TruncatedSeries:
    """
    sigma(u) = u (1 + r w/u) (1 - r^q u + t w)^-1

    coefficients live in the field of sigma, which may extend that of
    build_group(q)
    """
    _check_precision(q, precision)
    field = sigma.t.spec
    u = TruncatedSeries.monomial(field, precision, 1)
    if _is_identity(sigma):
        return u
    reduced = precision - 1
    w = expand_w(q, precision, field)
    one = TruncatedSeries.monomial(field, reduced, 0)
    numerator = one + w.divide_by_u(1).scale(sigma.r)
    denominator = (u.scale(-(sigma.r**q)) + w.scale(sigma.t)).truncate(reduced)
    return (numerator * denominator.inverse_of_one_plus()).multiply_by_u(1)


def _displacement_valuation(
    sigma: GroupElement, q: int, precision: typing.Optional[int]
) -> int:
    precision = default_precision(q) if precision is None else precision
    while True:
        image = act_on_uniformizer(sigma, q, precision)
        u = TruncatedSeries.monomial(image.field, precision, 1)
        valuation = (image - u).valuation
        if valuation != math.inf:
            return int(valuation)
        if precision >= MAX_PRECISION:
            raise PrecisionExhaustedError(precision)
        _LOGGER.debug("sigma(u) = u modulo u^%d, doubling precision", precision)
        precision = min(2 * precision, MAX_PRECISION)


def fixed_scheme_length(
    sigma: GroupElement, q: int, precision: typing.Optional[int] = None
) -> int:
    """
    length of the fixed scheme of sigma != e at the point at infinity
    """
    if _is_identity(sigma):
        raise ValueError("the identity has no isolated fixed point")
    return _displacement_valuation(sigma, q, precision)


def ramification_jump(
    sigma: GroupElement, q: int, precision: typing.Optional[int] = None
) -> int:
    jump = fixed_scheme_length(sigma, q, precision) - 1
    expected = q + 1 if sigma.r.is_zero else 1
    if jump != expected:
        raise StructureViolationError(f"{sigma!r} has jump {jump}, expected {expected}")
    return jump


@functools.lru_cache(maxsize=None)
def filtration(q: int) -> RamificationProfile:
    group = build_group(q)
    jumps = {
        index: ramification_jump(sigma, q)
        for index, sigma in enumerate(group.elements)
        if sigma != group.identity
    }
    for conjugacy_class in group.classes:
        class_jumps = {
            jumps[group.index[sigma]]
            for sigma in conjugacy_class.elements
            if sigma != group.identity
        }
        if len(class_jumps) > 1:
            raise StructureViolationError(
                f"jumps {class_jumps} differ on a conjugacy class"
            )
    orders = []
    for i in range(q + 3):
        subgroup = [group.identity] + [
            group.elements[index] for index, jump in jumps.items() if jump >= i
        ]
        if not group.is_subgroup(subgroup):
            raise StructureViolationError(f"G_{i} is not a subgroup")
        orders.append((i, len(subgroup)))
    expected = [len(group), len(group)] + [q] * q + [1]
    if [order for _, order in orders] != expected:
        raise StructureViolationError(
            f"filtration orders {orders}, expected {expected}"
        )
    return RamificationProfile(q=q, jumps=jumps, filtration=tuple(orders))


def swan_conductor(
    profile: RamificationProfile,
    dimension: int,
    invariant_dimensions: typing.Mapping[int, int],
) -> int:
    """
    sum over i >= 1 of dim(M / M^{G_i}) / [G : G_i]

    invariant_dimensions: dim M^{G_i} for every i >= 1 with G_i != 1
    """
    order = profile.order(0)
    total = fractions.Fraction(0)
    for i, subgroup_order in profile.filtration:
        if i < 1 or subgroup_order == 1:
            continue
        if i not in invariant_dimensions:
            raise ValueError(f"dim M^(G_{i}) missing")
        total += fractions.Fraction(
            subgroup_order * (dimension - invariant_dimensions[i]), order
        )
    if total.denominator != 1:
        raise NonIntegralSwanError(f"Swan conductor {total} is not an integer")
    return int(total)


def swan_closed_form(
    q: int, dimension: int, dimension_g: int, dimension_z: int
) -> fractions.Fraction:
    """
    dim(M / M^G) + dim(M / M^Z) / q
    """
    return (dimension - dimension_g) + fractions.Fraction(dimension - dimension_z, q)


def action_convention(q: int) -> ActionConvention:
    group = build_group(q)
    precision = default_precision(q)
    images = {sigma: act_on_uniformizer(sigma, q, precision) for sigma in group}
    conventions = []
    for convention, law in (
        (ActionConvention.OPPOSITE, lambda tau, sigma: group.mul(tau, sigma)),
        (ActionConvention.COMPOSITION, lambda tau, sigma: group.mul(sigma, tau)),
    ):
        if all(
            images[tau].compose(images[sigma]) == images[law(tau, sigma)]
            for sigma in group
            for tau in group
        ):
            conventions.append(convention)
    if len(conventions) != 1:
        raise StructureViolationError(f"composition matches conventions {conventions}")
    return conventions[0]
