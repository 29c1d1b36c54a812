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
Characters of G, computed on conjugacy classes with exact rationals.
"""

from __future__ import annotations

import dataclasses
import fractions
import functools
import itertools
import logging
import typing

from wildquotient.exceptions import (
    AuditFailureError,
    LefschetzMismatchError,
    NonIntegralDimensionError,
    StructureViolationError,
)
from wildquotient.group import GroupElement, GroupTable, build_group, split_prime_power
from wildquotient.local import (
    filtration,
    fixed_scheme_length,
    swan_closed_form,
    swan_conductor,
)
from wildquotient.options import FieldKind

_LOGGER = logging.getLogger(__name__)

Fraction = fractions.Fraction


@dataclasses.dataclass(frozen=True)
class ClassFunction:

    group: GroupTable = dataclasses.field(compare=False, repr=False)
    # one value per entry of group.classes
    values: typing.Tuple[Fraction, ...]

    @classmethod
    def constant(cls, group: GroupTable, value: int) -> ClassFunction:
        return cls(group, (Fraction(value),) * len(group.classes))

    def __call__(self, element: GroupElement) -> Fraction:
        return self.values[self.group.class_index[element]]

    @property
    def degree(self) -> Fraction:
        return self(self.group.identity)

    def __add__(self, other: ClassFunction) -> ClassFunction:
        return ClassFunction(
            self.group, tuple(a + b for a, b in zip(self.values, other.values))
        )

    def __mul__(self, other: ClassFunction) -> ClassFunction:
        return ClassFunction(
            self.group, tuple(a * b for a, b in zip(self.values, other.values))
        )

    def scale(self, scalar: typing.Union[int, Fraction]) -> ClassFunction:
        return ClassFunction(self.group, tuple(scalar * a for a in self.values))

    def inner(self, other: ClassFunction) -> Fraction:
        """
        <f, g> = sum(f(a) g(a)) / |G|, all values being rational
        """
        total = sum(
            (
                len(conjugacy_class) * a * b
                for conjugacy_class, a, b in zip(
                    self.group.classes, self.values, other.values
                )
            ),
            Fraction(0),
        )
        return total / len(self.group)


@dataclasses.dataclass(frozen=True)
class CensusEntry:

    label: str
    count: int
    degree: int
    endo_dim: int


@dataclasses.dataclass(frozen=True)
class IrrCensus:

    q: int
    field_kind: FieldKind
    entries: typing.Tuple[CensusEntry, ...]

    @property
    def total(self) -> int:
        return sum(entry.count for entry in self.entries)


@dataclasses.dataclass(frozen=True)
class Constituent:

    # "trivial", "W", "V" or "2V"
    family: str
    label: str
    character: ClassFunction
    endo_dim: int


@dataclasses.dataclass(frozen=True)
class InvariantDimensions:

    h1_g: int
    h1_z: int
    h1_tensor_h1_g: int


@dataclasses.dataclass(frozen=True)
class SwanConductors:

    defining_sum: int
    closed_form: Fraction


def regular_character(group: GroupTable) -> ClassFunction:
    return ClassFunction(
        group,
        tuple(
            Fraction(len(group) if c.representative == group.identity else 0)
            for c in group.classes
        ),
    )


def irr_count(q: int, field_kind: FieldKind) -> int:
    p, _ = split_prime_power(q)
    if field_kind is FieldKind.NO_MU_P:
        return 1 + (q * q + q - 2) // (p - 1)
    return q * q + q - 1


def _galois_exponents(p: int, field_kind: FieldKind) -> typing.List[int]:
    if field_kind is FieldKind.NO_MU_P:
        return [k for k in range(1, p * p) if k % p]
    if field_kind is FieldKind.CONTAINS_MU_P:
        return [1 + p * j for j in range(p)]
    return [1]


def irr_count_by_orbits(q: int, field_kind: FieldKind) -> int:
    """
    orbits of conjugacy classes under the power maps a -> a^k
    with k in the image of the Galois group in (Z/p^2)^x
    """
    group = build_group(q)
    successors = [
        {
            group.class_index[group.power(c.representative, k)]
            for k in _galois_exponents(group.p, field_kind)
        }
        for c in group.classes
    ]
    orbits = 0
    visited: typing.Set[int] = set()
    for start in range(len(group.classes)):
        if start in visited:
            continue
        orbits += 1
        frontier = [start]
        visited.add(start)
        while frontier:
            index = frontier.pop()
            for successor in successors[index] - visited:
                visited.add(successor)
                frontier.append(successor)
    expected = irr_count(q, field_kind)
    if orbits != expected:
        raise StructureViolationError(
            f"{orbits} Galois orbits of classes, expected {expected}"
        )
    return orbits


def _is_rational_census(p: int, field_kind: FieldKind) -> bool:
    # every field of characteristic zero contains the square roots of unity
    return field_kind is FieldKind.NO_MU_P or (
        p == 2 and field_kind is FieldKind.CONTAINS_MU_P
    )


def basic_set(q: int, field_kind: FieldKind) -> IrrCensus:
    p, _ = split_prime_power(q)
    if not _is_rational_census(p, field_kind):
        entries = (
            CensusEntry("trivial", 1, 1, 1),
            CensusEntry("linear", q * q - 1, 1, 1),
            CensusEntry("V", q - 1, q, 1),
        )
    elif p == 2:
        entries = (
            CensusEntry("trivial", 1, 1, 1),
            CensusEntry("W", q * q - 1, 1, 1),
            CensusEntry("2V", q - 1, 2 * q, 4),
        )
    else:
        entries = (
            CensusEntry("trivial", 1, 1, 1),
            CensusEntry("W", (q * q - 1) // (p - 1), p - 1, p - 1),
            CensusEntry("V", (q - 1) // (p - 1), q * (p - 1), p - 1),
        )
    return IrrCensus(q=q, field_kind=field_kind, entries=entries)


def wedderburn_audit(census: IrrCensus) -> bool:
    total = sum(
        Fraction(entry.count * entry.degree**2, entry.endo_dim)
        for entry in census.entries
    )
    if total != census.q**3:
        raise AuditFailureError(
            f"sum of degree^2 / endo_dim is {total}, expected {census.q**3}"
        )
    return True


def _hyperplanes(p: int, dimension: int) -> typing.List[typing.Tuple[int, ...]]:
    """
    nonzero functionals on F_p^dimension up to scalars,
    normalized to a leading coefficient of 1
    """
    return [
        functional
        for functional in itertools.product(range(p), repeat=dimension)
        if any(functional) and next(c for c in functional if c) == 1
    ]


def _vanishes(
    functional: typing.Sequence[int], coordinates: typing.Sequence[int], p: int
) -> bool:
    return sum(c * x for c, x in zip(functional, coordinates)) % p == 0


@functools.lru_cache(maxsize=None)
def rational_constituents(q: int) -> typing.Tuple[Constituent, ...]:
    """
    the trivial character, W_y for every hyperplane y of G/Z
    and V_x (p odd) or 2V_x (p = 2) for every hyperplane x of Z
    """
    group = build_group(q)
    p = group.p
    representatives = [c.representative for c in group.classes]
    constituents = [
        Constituent("trivial", "trivial", ClassFunction.constant(group, 1), 1)
    ]
    for functional in _hyperplanes(p, len(group.r_basis)):
        values = tuple(
            Fraction(
                p - 1
                if _vanishes(functional, group.r_coordinates[a.r], p)
                else -1
            )
            for a in representatives
        )
        constituents.append(
            Constituent(
                "W", f"W{list(functional)}", ClassFunction(group, values), p - 1
            )
        )
    multiplicity, endo_dim = (2, 4) if p == 2 else (1, p - 1)
    label = "2V" if p == 2 else "V"
    for functional in _hyperplanes(p, len(group.t_basis)):
        values = []
        for a in representatives:
            if not a.r.is_zero:
                values.append(Fraction(0))
            elif _vanishes(functional, group.t_coordinates[a.t], p):
                values.append(Fraction(multiplicity * q * (p - 1)))
            else:
                values.append(Fraction(-multiplicity * q))
        constituents.append(
            Constituent(
                label,
                f"{label}{list(functional)}",
                ClassFunction(group, tuple(values)),
                endo_dim,
            )
        )
    return tuple(constituents)


def _v_constituents(q: int) -> typing.List[Constituent]:
    return [c for c in rational_constituents(q) if c.family in ("V", "2V")]


def schur_audit(q: int) -> bool:
    """
    <chi, chi> = dim End for every constituent, distinct constituents orthogonal
    """
    constituents = rational_constituents(q)
    for index, constituent in enumerate(constituents):
        norm = constituent.character.inner(constituent.character)
        if norm != constituent.endo_dim:
            raise AuditFailureError(
                f"<chi, chi> = {norm} for {constituent.label},"
                f" expected {constituent.endo_dim}"
            )
        for other in constituents[index + 1 :]:
            if constituent.character.inner(other.character) != 0:
                raise AuditFailureError(
                    f"{constituent.label} and {other.label} are not orthogonal"
                )
    census = basic_set(q, FieldKind.NO_MU_P)
    observed = sorted(
        (int(c.character.degree), c.endo_dim) for c in constituents
    )
    expected = sorted(
        (entry.degree, entry.endo_dim)
        for entry in census.entries
        for _ in range(entry.count)
    )
    if observed != expected:
        raise AuditFailureError("constituent degrees disagree with the census")
    return True


def regular_decomposition(q: int) -> bool:
    """
    every rational constituent occurs deg/endo times in Q[G]
    """
    group = build_group(q)
    total = ClassFunction.constant(group, 0)
    for constituent in rational_constituents(q):
        character = constituent.character
        total = total + character.scale(
            Fraction(int(character.degree), constituent.endo_dim)
        )
    if total != regular_character(group):
        raise AuditFailureError("constituents do not add up to the regular character")
    return True


def cohomology_character(q: int) -> ClassFunction:
    group = build_group(q)
    values = []
    for conjugacy_class in group.classes:
        representative = conjugacy_class.representative
        if representative == group.identity:
            values.append(Fraction(q * (q - 1)))
        elif representative.r.is_zero:
            values.append(Fraction(-q))
        else:
            values.append(Fraction(0))
    return ClassFunction(group, tuple(values))


def cohomology_decomposition(q: int) -> bool:
    """
    the cohomology character is the sum of all V_x, each once
    """
    group = build_group(q)
    halving = Fraction(1, 2) if group.p == 2 else Fraction(1)
    total = ClassFunction.constant(group, 0)
    for constituent in _v_constituents(q):
        total = total + constituent.character.scale(halving)
    if total != cohomology_character(q):
        raise AuditFailureError("H^1 is not the sum of the V_x")
    return True


def tensor_square_invariants(q: int) -> typing.Dict[str, Fraction]:
    """
    <chi_V^2, 1> for every V_x, equal to p - 1 as V_x is self-dual
    """
    group = build_group(q)
    trivial = ClassFunction.constant(group, 1)
    halving = Fraction(1, 2) if group.p == 2 else Fraction(1)
    result = {}
    for constituent in _v_constituents(q):
        character = constituent.character.scale(halving)
        result[constituent.label] = (character * character).inner(trivial)
    return result


def constituent_orbits(q: int) -> int:
    """
    number of orbits of zeta-conjugation on the V_x, zeta in F_{q^2}^x
    """
    group = build_group(q)
    p = group.p
    kernels = [
        frozenset(
            t
            for t, coordinates in group.t_coordinates.items()
            if _vanishes(functional, coordinates, p)
        )
        for functional in _hyperplanes(p, len(group.t_basis))
    ]
    position = {kernel: index for index, kernel in enumerate(kernels)}
    orbits = 0
    visited: typing.Set[int] = set()
    for start in range(len(kernels)):
        if start in visited:
            continue
        orbits += 1
        frontier = [start]
        visited.add(start)
        while frontier:
            kernel = kernels[frontier.pop()]
            for zeta in group.zeta_group:
                scalar = zeta ** (q + 1)
                image = position[frozenset(scalar * t for t in kernel)]
                if image not in visited:
                    visited.add(image)
                    frontier.append(image)
    return orbits


def trace_vs_lefschetz(q: int) -> bool:
    group = build_group(q)
    character = cohomology_character(q)
    for sigma in group:
        if sigma == group.identity:
            continue
        lefschetz = 2 - character(sigma)
        length = fixed_scheme_length(sigma, q)
        if lefschetz != length:
            raise LefschetzMismatchError(
                f"sigma={sigma!r}: Lefschetz number {lefschetz},"
                f" fixed scheme length {length}"
            )
    return True


def invariant_dimension(
    character: ClassFunction, subgroup: typing.Iterable[GroupElement]
) -> Fraction:
    subgroup = list(subgroup)
    return sum((character(h) for h in subgroup), Fraction(0)) / len(subgroup)


def _multiplicity(value: Fraction, name: str) -> int:
    if value.denominator != 1 or value < 0:
        raise NonIntegralDimensionError(f"{name} = {value}")
    return int(value)


def invariant_dims(q: int) -> InvariantDimensions:
    group = build_group(q)
    character = cohomology_character(q)
    trivial = ClassFunction.constant(group, 1)
    return InvariantDimensions(
        h1_g=_multiplicity(character.inner(trivial), "dim H^1^G"),
        h1_z=_multiplicity(invariant_dimension(character, group.center), "dim H^1^Z"),
        h1_tensor_h1_g=_multiplicity(
            (character * character).inner(trivial), "dim (H^1 x H^1)^G"
        ),
    )


def dimension_match(q: int) -> bool:
    p, _ = split_prime_power(q)
    # 2V_x for p = 2 contributes (q - 1) * q through its half V_x
    return q * (q - 1) == (q - 1) // (p - 1) * q * (p - 1)


def cohomology_swan_conductor(q: int) -> SwanConductors:
    group = build_group(q)
    profile = filtration(q)
    character = cohomology_character(q)
    dimension = q * (q - 1)
    invariants = {}
    for i, order in profile.filtration:
        if i < 1 or order == 1:
            continue
        subgroup = [group.identity] + [
            group.elements[index] for index, jump in profile.jumps.items() if jump >= i
        ]
        invariants[i] = _multiplicity(
            invariant_dimension(character, subgroup), f"dim H^1^(G_{i})"
        )
    dims = invariant_dims(q)
    return SwanConductors(
        defining_sum=swan_conductor(profile, dimension, invariants),
        closed_form=swan_closed_form(q, dimension, dims.h1_g, dims.h1_z),
    )
