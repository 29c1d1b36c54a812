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
The Hermitian curve C: y^q - y = x^{q+1} over F_{q^2} and its extensions.

Point counts default to the model y^q + y = x^{q+1}, which is maximal over
F_{q^2}. For odd p the literal equation has only q+1 points there and is a
twist of it, trivialized over F_{q^4}.
"""

from __future__ import annotations

import concurrent.futures
import dataclasses
import itertools
import logging
import math
import typing

from wildquotient.exceptions import (
    ActionViolationError,
    FieldTooLargeError,
    MismatchAtLevelError,
)
from wildquotient.gf import AdditiveMap, FieldElement, FieldSpec, make_field
from wildquotient.group import GroupTable, build_group, split_prime_power
from wildquotient.options import CurveModel

_LOGGER = logging.getLogger(__name__)

FIELD_SIZE_LIMIT = 1 << 24
NAIVE_SIZE_LIMIT = 4096

Point = typing.Tuple[FieldElement, FieldElement]


@dataclasses.dataclass(frozen=True)
class CurveSpec:

    q: int
    genus: int
    b1: int


@dataclasses.dataclass(frozen=True)
class CountRecord:

    f: int
    # rational points over F_{q^{2f}}, including the point at infinity
    count: int


@dataclasses.dataclass(frozen=True)
class SupersingularityReport:

    q: int
    # every Frobenius eigenvalue of the maximal model over F_{q^2} equals sign * q
    sign: int
    records: typing.Tuple[CountRecord, ...]
    # levels f with q^{2f} beyond FIELD_SIZE_LIMIT
    skipped: typing.Tuple[int, ...]
    # literal model at twist_level(q), equal to the maximal count there
    literal: typing.Optional[CountRecord] = None


def curve_spec(q: int) -> CurveSpec:
    split_prime_power(q)
    genus = q * (q - 1) // 2
    return CurveSpec(q=q, genus=genus, b1=2 * genus)


def generic_fiber_equation(q: int) -> str:
    """
    equation of the generic fiber of the quotient fibration, documentation only
    """
    split_prime_power(q)
    return f"y^{q} - z^{q * q - 1}*y = x^{q + 1} + z^{q - 1}*x^{q}"


def _point_field(q: int, f: int) -> FieldSpec:
    p, m = split_prime_power(q)
    if f < 1:
        raise ValueError(f"extension index must be positive (got {f})")
    if q ** (2 * f) > FIELD_SIZE_LIMIT:
        raise FieldTooLargeError(
            f"F_{q}^{2 * f} has more than {FIELD_SIZE_LIMIT} elements"
        )
    return make_field(p, 2 * m * f)


def _artin_schreier_map(field: FieldSpec, q: int, model: CurveModel) -> AdditiveMap:
    _, m = split_prime_power(q)
    # t -> t^q - t or t -> t^q + t
    sign = field.one if model == CurveModel.MAXIMAL else -field.one
    return AdditiveMap(field, [(field.one, m), (sign, 0)])


def count_points(
    q: int, f: int, threads: int = 1, model: CurveModel = CurveModel.MAXIMAL
) -> CountRecord:
    field = _point_field(q, f)
    artin_schreier = _artin_schreier_map(field, q, model)
    artin_schreier.image_annihilator()
    arithmetic = field.arithmetic
    # points over each x with x^{q+1} in the image
    fiber = field.p ** (field.degree - artin_schreier.rank)

    def count_affine(values: range) -> int:
        return sum(
            fiber
            for x in values
            if artin_schreier.contains_digits(
                arithmetic.digits(arithmetic.power(x, q + 1))
            )
        )

    if threads <= 1:
        affine = count_affine(range(field.order))
    else:
        chunk = -(-field.order // threads)
        with concurrent.futures.ThreadPoolExecutor(max_workers=threads) as executor:
            affine = sum(
                executor.map(
                    count_affine,
                    (
                        range(start, min(start + chunk, field.order))
                        for start in range(0, field.order, chunk)
                    ),
                )
            )
    _LOGGER.debug("#C(%s) = %d + 1 for q=%d, %s model", field, affine, q, model.value)
    return CountRecord(f=f, count=affine + 1)


def naive_count_points(
    q: int, f: int, model: CurveModel = CurveModel.MAXIMAL
) -> CountRecord:
    field = _point_field(q, f)
    if field.order > NAIVE_SIZE_LIMIT:
        raise FieldTooLargeError(
            f"double loop over {field} exceeds {NAIVE_SIZE_LIMIT} elements"
        )
    elements = list(field.elements())
    norms = [(x ** (q + 1)).value for x in elements]
    if model == CurveModel.MAXIMAL:
        traces = [(y**q + y).value for y in elements]
    else:
        traces = [(y**q - y).value for y in elements]
    return CountRecord(
        f=f, count=1 + sum(1 for norm in norms for trace in traces if norm == trace)
    )


def predicted_count(q: int, f: int, sign: int) -> int:
    """
    count forced by all reciprocal Frobenius roots over F_{q^2} being sign * q
    """
    return q ** (2 * f) + 1 - curve_spec(q).b1 * (sign * q) ** f


def twist_level(q: int) -> int:
    """
    least f such that both models are isomorphic over F_{q^{2f}}
    """
    p, _ = split_prime_power(q)
    # y -> c y, x -> d x with c^{q-1} = -1 and d^{q+1} = -c, d in F_{q^4}
    return 1 if p == 2 else 2


def verify_supersingular(
    q: int, fmax: int, threads: int = 1
) -> SupersingularityReport:
    """
    counts the maximal model level by level, then ties it to C by an equal
    count of the literal model where the two are isomorphic
    """
    if fmax < 2:
        raise ValueError(f"at least two levels required (got fmax={fmax})")
    first = count_points(q, 1, threads=threads)
    signs = [s for s in (-1, 1) if predicted_count(q, 1, s) == first.count]
    if not signs:
        raise MismatchAtLevelError(1, first.count, predicted_count(q, 1, -1))
    (sign,) = signs
    records, skipped = [first], []
    for f in range(2, fmax + 1):
        if q ** (2 * f) > FIELD_SIZE_LIMIT:
            skipped.append(f)
            continue
        record = count_points(q, f, threads=threads)
        expected = predicted_count(q, f, sign)
        if record.count != expected:
            raise MismatchAtLevelError(f, record.count, expected)
        records.append(record)
    level = twist_level(q)
    maximal = next((record for record in records if record.f == level), None)
    literal = None
    if maximal is not None:
        literal = count_points(q, level, threads=threads, model=CurveModel.LITERAL)
        if literal.count != maximal.count:
            raise MismatchAtLevelError(level, literal.count, maximal.count)
    _LOGGER.debug("q=%d: eigenvalue %d*q up to f=%d", q, sign, fmax)
    return SupersingularityReport(
        q=q,
        sign=sign,
        records=tuple(records),
        skipped=tuple(skipped),
        literal=literal,
    )


def affine_points(
    q: int, field: FieldSpec, model: CurveModel = CurveModel.LITERAL
) -> typing.List[Point]:
    artin_schreier = _artin_schreier_map(field, q, model)
    points: typing.List[Point] = []
    for x in field.elements():
        norm = x ** (q + 1)
        if artin_schreier.in_image(norm):
            points.extend((x, y) for y in artin_schreier.solve(norm))
    return points


def _on_curve(q: int, x: FieldElement, y: FieldElement) -> bool:
    return y**q - y == x ** (q + 1)


def _joint_group(q: int, f: int) -> GroupTable:
    _, m = split_prime_power(q)
    group = build_group(q)
    joint = math.lcm(group.field.degree, 2 * m * f)
    if joint == group.field.degree:
        return group
    return build_group(q, joint)


def verify_action(q: int, f: int, generators_only: bool = False) -> bool:
    """
    G maps C to itself and acts freely on the affine part

    generators_only: check a generating set of G, which suffices for
    preserving C as the images compose but says nothing about freeness
    """
    group = _joint_group(q, f)
    points = affine_points(q, group.field)
    for sigma in group.generators if generators_only else group:
        r_q = sigma.r**q
        for x, y in points:
            image = (x + sigma.r, y - r_q * x + sigma.t)
            if not _on_curve(q, *image):
                raise ActionViolationError(f"{sigma!r} maps {(x, y)!r} off the curve")
            if sigma != group.identity and image == (x, y):
                raise ActionViolationError(f"{sigma!r} fixes {(x, y)!r}")
    return True


def verify_zeta_symmetry(q: int, f: int) -> bool:
    """
    (x, y) -> (zeta x, zeta^{q+1} y) preserves C for zeta in F_{q^2}^x
    """
    group = _joint_group(q, f)
    points = affine_points(q, group.field)
    for zeta in group.zeta_group:
        for x, y in points:
            if not _on_curve(q, zeta * x, zeta ** (q + 1) * y):
                raise ActionViolationError(
                    f"zeta={zeta!r} maps {(x, y)!r} off the curve"
                )
    return True


def verify_tau_invariant(q: int) -> bool:
    """
    tau = x^{q^2} + x is fixed by every sigma
    """
    group = build_group(q)

    def tau(x: FieldElement) -> FieldElement:
        return x ** (q * q) + x

    sample = list(itertools.islice(group.field.elements(), 256))
    for sigma in group:
        if not (sigma.r ** (q * q) + sigma.r).is_zero:
            return False
        if any(tau(x + sigma.r) != tau(x) for x in sample):
            return False
    return True
