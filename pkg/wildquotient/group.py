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
The special p-group G of order q^3 acting on the Hermitian curve
y^q - y = x^{q+1} by x -> x + r, y -> y - r^q x + t.

G = {(t, r) : r^{q^2} + r = 0, t^q - t = r^{q+1}} with the law
(t, r) * (t', r') = (t + t' - r^q r', r + r').
"""

from __future__ import annotations

import dataclasses
import functools
import logging
import math
import typing

import sympy

from wildquotient.exceptions import (
    AmbientFieldTooSmallError,
    DeskScaleError,
    NotAPrimePowerError,
    NotInMultiplicativeGroupError,
    StructureViolationError,
)
from wildquotient.gf import (
    MAX_DEGREE,
    AdditiveMap,
    FieldElement,
    FieldSpec,
    make_field,
    span_coordinates,
    subfield_members,
)

_LOGGER = logging.getLogger(__name__)

MAX_Q = 9


def split_prime_power(q: int) -> typing.Tuple[int, int]:
    """
    >>> split_prime_power(9)
    (3, 2)
    """
    factors = sympy.factorint(q) if q >= 2 else {}
    if len(factors) != 1:
        raise NotAPrimePowerError(f"{q} is not a prime power")
    ((p, m),) = factors.items()
    return p, m


def check_desk_scale(q: int) -> typing.Tuple[int, int]:
    p, m = split_prime_power(q)
    if q > MAX_Q:
        raise DeskScaleError(f"q={q} exceeds the supported maximum q={MAX_Q}")
    return p, m


@dataclasses.dataclass(frozen=True)
class GroupElement:

    t: FieldElement
    r: FieldElement

    def __repr__(self) -> str:
        return f"({self.t!r}, {self.r!r})"


@dataclasses.dataclass(frozen=True)
class ConjugacyClass:

    elements: typing.Tuple[GroupElement, ...]

    @property
    def representative(self) -> GroupElement:
        return self.elements[0]

    @property
    def central(self) -> bool:
        return len(self.elements) == 1

    def __len__(self) -> int:
        return len(self.elements)


@dataclasses.dataclass(frozen=True)
class SubgroupCensus:

    center: typing.FrozenSet[GroupElement]
    commutator_subgroup: typing.FrozenSet[GroupElement]
    frattini: typing.FrozenSet[GroupElement]


class GroupTable:
    # pylint: disable=too-many-instance-attributes

    def __init__(
        self,
        *,
        q: int,
        field: FieldSpec,
        elements: typing.Sequence[GroupElement],
        r_basis: typing.Sequence[FieldElement],
        t_basis: typing.Sequence[FieldElement],
    ) -> None:
        self.q = q
        self.p, self.m = split_prime_power(q)
        self.field = field
        self.elements = tuple(elements)
        self.index = {a: i for i, a in enumerate(self.elements)}
        # F_p-bases of the r-coordinates (G/Z) and of the t-coordinates of Z
        self.r_basis = tuple(r_basis)
        self.t_basis = tuple(t_basis)
        self.identity = GroupElement(field.zero, field.zero)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> typing.Iterator[GroupElement]:
        return iter(self.elements)

    def __contains__(self, element: object) -> bool:
        return element in self.index

    def __repr__(self) -> str:
        return f"GroupTable(q={self.q}, field={self.field})"

    def mul(self, a: GroupElement, b: GroupElement) -> GroupElement:
        return GroupElement(a.t + b.t - a.r**self.q * b.r, a.r + b.r)

    def inv(self, a: GroupElement) -> GroupElement:
        return GroupElement(-(a.r ** (self.q + 1)) - a.t, -a.r)

    def commutator(self, a: GroupElement, b: GroupElement) -> GroupElement:
        """
        a b a^-1 b^-1 = (r r'^q - r^q r', 0)
        """
        return GroupElement(
            a.r * b.r**self.q - a.r**self.q * b.r, self.field.zero
        )

    def commutator_from_products(
        self, a: GroupElement, b: GroupElement
    ) -> GroupElement:
        return self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)))

    def conjugate(self, g: GroupElement, a: GroupElement) -> GroupElement:
        return self.mul(self.mul(g, a), self.inv(g))

    def power(self, a: GroupElement, exponent: int) -> GroupElement:
        assert exponent >= 0, exponent
        result = self.identity
        for _ in range(exponent):
            result = self.mul(result, a)
        return result

    def element_order(self, a: GroupElement) -> int:
        order, power = 1, a
        while power != self.identity:
            power = self.mul(power, a)
            order += 1
            assert order <= len(self), a
        return order

    def generated_subgroup(
        self, generators: typing.Iterable[GroupElement]
    ) -> typing.FrozenSet[GroupElement]:
        generators = list(generators)
        subgroup = {self.identity}
        frontier = [self.identity]
        while frontier:
            successors = []
            for element in frontier:
                for generator in generators:
                    product = self.mul(element, generator)
                    if product not in subgroup:
                        subgroup.add(product)
                        successors.append(product)
            frontier = successors
        return frozenset(subgroup)

    def is_subgroup(self, subset: typing.Iterable[GroupElement]) -> bool:
        subset = frozenset(subset)
        if self.identity not in subset:
            return False
        generators: typing.List[GroupElement] = []
        generated = frozenset([self.identity])
        for element in sorted(subset, key=self.index.__getitem__):
            if element not in generated:
                generators.append(element)
                generated = self.generated_subgroup(generators)
        return generated == subset

    @functools.cached_property
    def generators(self) -> typing.Tuple[GroupElement, ...]:
        generators: typing.List[GroupElement] = []
        generated = frozenset([self.identity])
        # noncentral elements first keeps the generating set small
        for element in sorted(self.elements, key=lambda a: a.r.is_zero):
            if element not in generated:
                generators.append(element)
                generated = self.generated_subgroup(generators)
        assert len(generated) == len(self), generators
        return tuple(generators)

    def is_central(self, a: GroupElement) -> bool:
        return all(self.mul(a, g) == self.mul(g, a) for g in self.generators)

    @functools.cached_property
    def center(self) -> typing.FrozenSet[GroupElement]:
        return frozenset(a for a in self.elements if self.is_central(a))

    @functools.cached_property
    def coset_representatives(self) -> typing.Tuple[GroupElement, ...]:
        """
        one element per r-coordinate, i.e. per coset of the center
        """
        representatives: typing.Dict[FieldElement, GroupElement] = {}
        for element in self.elements:
            representatives.setdefault(element.r, element)
        return tuple(representatives.values())

    @functools.cached_property
    def classes(self) -> typing.Tuple[ConjugacyClass, ...]:
        return conjugacy_classes(self)

    @functools.cached_property
    def class_index(self) -> typing.Dict[GroupElement, int]:
        return {
            element: index
            for index, conjugacy_class in enumerate(self.classes)
            for element in conjugacy_class.elements
        }

    @functools.cached_property
    def r_coordinates(self) -> typing.Dict[FieldElement, typing.Tuple[int, ...]]:
        return span_coordinates(self.field, self.r_basis)

    @functools.cached_property
    def t_coordinates(self) -> typing.Dict[FieldElement, typing.Tuple[int, ...]]:
        return span_coordinates(self.field, self.t_basis)

    @functools.cached_property
    def zeta_group(self) -> typing.Tuple[FieldElement, ...]:
        """
        F_{q^2}^x inside the ambient field
        """
        return tuple(
            zeta
            for zeta in subfield_members(self.field, 2 * self.m)
            if not zeta.is_zero
        )


def _hermitian_maps(
    field: FieldSpec, q: int
) -> typing.Tuple[AdditiveMap, AdditiveMap]:
    p, m = split_prime_power(q)
    one = field.one
    # r -> r^{q^2} + r and t -> t^q - t
    return (
        AdditiveMap(field, [(one, 2 * m), (one, 0)]),
        AdditiveMap(field, [(one, m), (-one, 0)]),
    )


def _enumerate(
    field: FieldSpec, q: int
) -> typing.Optional[typing.Tuple[typing.List[GroupElement], AdditiveMap, AdditiveMap]]:
    r_map, t_map = _hermitian_maps(field, q)
    r_values = r_map.solve(field.zero)
    if len(r_values) != q * q:
        return None
    elements = []
    for r in r_values:
        t_values = t_map.solve(r ** (q + 1))
        if len(t_values) != q:
            return None
        elements.extend(GroupElement(t, r) for t in t_values)
    return elements, r_map, t_map


def _candidate_degrees(m: int) -> typing.List[int]:
    return list(range(2 * m, MAX_DEGREE + 1, 2 * m))


@functools.lru_cache(maxsize=None)
def build_group(q: int, degree: typing.Optional[int] = None) -> GroupTable:
    """
    degree: extension degree of the ambient field over F_p,
    the least degree splitting both defining equations if omitted
    """
    p, m = check_desk_scale(q)
    candidates = [degree] if degree is not None else _candidate_degrees(m)
    for candidate in candidates:
        field = make_field(p, candidate)
        enumeration = _enumerate(field, q)
        if enumeration is not None:
            break
        _LOGGER.debug("%s does not split the equations of G for q=%d", field, q)
    else:
        raise AmbientFieldTooSmallError(
            f"no ambient field F_{p}^d, d in {candidates},"
            f" contains all {q**3} elements of G for q={q}"
        )
    elements, r_map, t_map = enumeration
    _LOGGER.debug("built G of order %d for q=%d over %s", len(elements), q, field)
    return GroupTable(
        q=q,
        field=field,
        elements=elements,
        r_basis=r_map.kernel_basis(),
        t_basis=t_map.kernel_basis(),
    )


def subgroup_census(group: GroupTable) -> SubgroupCensus:
    commutators = {
        group.commutator_from_products(a, b)
        for a in group.coset_representatives
        for b in group.coset_representatives
    }
    commutator_subgroup = group.generated_subgroup(commutators)
    frattini = group.generated_subgroup(
        commutators | {group.power(a, group.p) for a in group.elements}
    )
    expected = frozenset(
        GroupElement(t, group.field.zero)
        for t in group.t_coordinates
    )
    census = SubgroupCensus(
        center=group.center, commutator_subgroup=commutator_subgroup, frattini=frattini
    )
    for name, subgroup in (
        ("center", census.center),
        ("commutator subgroup", census.commutator_subgroup),
        ("Frattini subgroup", census.frattini),
    ):
        if subgroup != expected:
            raise StructureViolationError(
                f"{name} has order {len(subgroup)},"
                f" expected {{(t,0) : t in F_{group.q}}}"
            )
    return census


def exponent(group: GroupTable) -> int:
    orders = {a: group.element_order(a) for a in group.elements}
    result = math.lcm(*orders.values())
    expected = 4 if group.p == 2 else group.p
    if result != expected:
        raise StructureViolationError(f"exponent {result}, expected {expected}")
    if group.p == 2:
        for element, order in orders.items():
            if element not in group.center and order != 4:
                raise StructureViolationError(
                    f"noncentral element {element!r} has order {order}"
                )
    return result


def involution_count(group: GroupTable) -> int:
    return sum(1 for a in group.elements if group.element_order(a) == 2)


def p_power_readings(group: GroupTable) -> typing.Dict[str, bool]:
    """
    compares (t,r)^p computed by repeated multiplication
    with (-(1 + ... + (p-1)) r^e, 0) for e = q+1 and e = p+1
    """
    coefficient = group.field.from_int(-(group.p * (group.p - 1) // 2))
    readings = {}
    for label, r_exponent in (("q+1", group.q + 1), ("p+1", group.p + 1)):
        readings[label] = all(
            group.power(a, group.p)
            == GroupElement(coefficient * a.r**r_exponent, group.field.zero)
            for a in group.elements
        )
    return readings


def conjugacy_classes(group: GroupTable) -> typing.Tuple[ConjugacyClass, ...]:
    classes = []
    visited: typing.Set[GroupElement] = set()
    for element in group.elements:
        if element in visited:
            continue
        orbit = {element}
        frontier = [element]
        while frontier:
            successors = []
            for member in frontier:
                for generator in group.generators:
                    image = group.conjugate(generator, member)
                    if image not in orbit:
                        orbit.add(image)
                        successors.append(image)
            frontier = successors
        visited |= orbit
        classes.append(
            ConjugacyClass(tuple(sorted(orbit, key=group.index.__getitem__)))
        )
    _check_classes(group, classes)
    return tuple(classes)


def _check_classes(
    group: GroupTable, classes: typing.Sequence[ConjugacyClass]
) -> None:
    q = group.q
    if len(classes) != q * q + q - 1:
        raise StructureViolationError(
            f"{len(classes)} conjugacy classes, expected {q * q + q - 1}"
        )
    for conjugacy_class in classes:
        r_values = {a.r for a in conjugacy_class.elements}
        if conjugacy_class.representative.r.is_zero:
            valid = len(conjugacy_class) == 1
        else:
            # the whole fiber over the image in G/Z
            valid = len(conjugacy_class) == q and len(r_values) == 1
        if not valid:
            raise StructureViolationError(
                f"unexpected conjugacy class {conjugacy_class.elements!r}"
            )


def zeta_conjugation(
    group: GroupTable, zeta: FieldElement, a: GroupElement
) -> GroupElement:
    if zeta.is_zero or zeta ** (group.q**2 - 1) != group.field.one:
        raise NotInMultiplicativeGroupError(f"{zeta!r} is not in F_{group.q**2}^x")
    return GroupElement(zeta ** (group.q + 1) * a.t, zeta * a.r)


def zeta_orbit_of_center(group: GroupTable) -> typing.FrozenSet[GroupElement]:
    central = next(
        a for a in group.elements if a.r.is_zero and a != group.identity
    )
    return frozenset(
        zeta_conjugation(group, zeta, central) for zeta in group.zeta_group
    )


def verify_commutator_pairing(group: GroupTable) -> bool:
    """
    the commutator pairing on G/Z is alternating and nondegenerate,
    centralizers of noncentral elements have order q^2
    """
    representatives = group.coset_representatives
    for a in representatives:
        if group.commutator(a, a) != group.identity:
            raise StructureViolationError(f"[a,a] != e for a={a!r}")
        for b in representatives:
            if (
                group.mul(group.commutator(a, b), group.commutator(b, a))
                != group.identity
            ):
                raise StructureViolationError(f"[a,b][b,a] != e for {a!r}, {b!r}")
        if a.r.is_zero:
            continue
        if all(group.commutator(a, b) == group.identity for b in representatives):
            raise StructureViolationError(f"{a!r} pairs trivially with G")
        centralizer = sum(
            1 for b in group.elements if group.mul(a, b) == group.mul(b, a)
        )
        if centralizer != group.q**2:
            raise StructureViolationError(
                f"centralizer of {a!r} has order {centralizer}, expected {group.q**2}"
            )
    return True


def sylow_cofactor(q: int) -> int:
    """
    [Aut(C) : G] where |Aut(C)| = q^3 (q^3 + 1) (q^2 - 1) for q != 2;
    for q = 2 the automorphisms fixing the point at infinity, 24 of them
    """
    split_prime_power(q)
    if q == 2:
        return 24 // q**3
    return (q**3 + 1) * (q**2 - 1)
