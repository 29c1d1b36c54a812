from fractions import Fraction

import pytest

import wildquotient.rep
from wildquotient.options import FieldKind


@pytest.mark.parametrize(
    ("q", "field_kind", "count"),
    (
        (2, FieldKind.COMPLEX, 5),
        (2, FieldKind.CONTAINS_MU_P, 5),
        (2, FieldKind.NO_MU_P, 5),
        (3, FieldKind.COMPLEX, 11),
        (3, FieldKind.CONTAINS_MU_P, 11),
        (3, FieldKind.NO_MU_P, 6),
        (4, FieldKind.NO_MU_P, 19),
        (5, FieldKind.NO_MU_P, 8),
        (9, FieldKind.NO_MU_P, 45),
    ),
)
def test_irr_count(q, field_kind, count):
    assert wildquotient.rep.irr_count(q, field_kind) == count


@pytest.mark.parametrize("q", (2, 3, 4, 5))
@pytest.mark.parametrize("field_kind", tuple(FieldKind))
def test_irr_count_by_orbits(q, field_kind):
    assert wildquotient.rep.irr_count_by_orbits(
        q, field_kind
    ) == wildquotient.rep.irr_count(q, field_kind)


@pytest.mark.parametrize("q", (2, 3, 4, 5, 7, 8, 9))
@pytest.mark.parametrize("field_kind", tuple(FieldKind))
def test_basic_set(q, field_kind):
    census = wildquotient.rep.basic_set(q, field_kind)
    assert census.total == wildquotient.rep.irr_count(q, field_kind)
    assert wildquotient.rep.wedderburn_audit(census)


def test_basic_set_quaternion():
    census = wildquotient.rep.basic_set(2, FieldKind.NO_MU_P)
    assert census.entries[-1] == wildquotient.rep.CensusEntry("2V", 1, 4, 4)


def test_rational_constituents_quaternion():
    constituents = wildquotient.rep.rational_constituents(2)
    assert len(constituents) == 5
    assert [c.family for c in constituents] == ["trivial", "W", "W", "W", "2V"]


@pytest.mark.parametrize("q", (2, 3, 4, 5))
def test_schur_audit(q):
    assert wildquotient.rep.schur_audit(q)
    assert wildquotient.rep.regular_decomposition(q)


def test_cohomology_character(quaternion_group):
    character = wildquotient.rep.cohomology_character(2)
    for element in quaternion_group:
        if element == quaternion_group.identity:
            expected = 2
        elif element.r.is_zero:
            expected = -2
        else:
            expected = 0
        assert character(element) == expected
    assert character.degree == 2


@pytest.mark.parametrize("q", (2, 3, 4, 5))
def test_cohomology_decomposition(q):
    assert wildquotient.rep.cohomology_decomposition(q)
    assert wildquotient.rep.trace_vs_lefschetz(q)
    assert wildquotient.rep.dimension_match(q)


@pytest.mark.parametrize("q", (2, 3, 4, 5, 9))
def test_tensor_square_invariants(q):
    p = {2: 2, 3: 3, 4: 2, 5: 5, 9: 3}[q]
    values = wildquotient.rep.tensor_square_invariants(q)
    assert len(values) == (q - 1) // (p - 1)
    assert set(values.values()) == {Fraction(p - 1)}


@pytest.mark.parametrize("q", (2, 3, 4, 5, 8, 9))
def test_constituent_orbits(q):
    assert wildquotient.rep.constituent_orbits(q) == 1


@pytest.mark.parametrize("q", (2, 3, 4, 5, 7, 8, 9))
def test_invariant_dims(q):
    assert wildquotient.rep.invariant_dims(q) == wildquotient.rep.InvariantDimensions(
        h1_g=0, h1_z=0, h1_tensor_h1_g=q - 1
    )


@pytest.mark.parametrize(("q", "conductor"), ((2, 3), (3, 8), (4, 15), (5, 24)))
def test_cohomology_swan_conductor(q, conductor):
    conductors = wildquotient.rep.cohomology_swan_conductor(q)
    assert conductors.defining_sum == conductor
    assert conductors.closed_form == Fraction(conductor)


def test_class_function_inner(heisenberg_group):
    regular = wildquotient.rep.regular_character(heisenberg_group)
    trivial = wildquotient.rep.ClassFunction.constant(heisenberg_group, 1)
    assert regular.inner(trivial) == 1
    assert regular.inner(regular) == 27
    assert (trivial + trivial).degree == 2
    assert trivial.scale(Fraction(1, 2))(heisenberg_group.identity) == Fraction(1, 2)
