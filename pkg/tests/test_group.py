import itertools
import random

import pytest

import wildquotient.group
from wildquotient.exceptions import (
    DeskScaleError,
    NotAPrimePowerError,
    NotInMultiplicativeGroupError,
)


@pytest.mark.parametrize(
    ("q", "p", "m"), ((2, 2, 1), (4, 2, 2), (8, 2, 3), (9, 3, 2), (25, 5, 2))
)
def test_split_prime_power(q, p, m):
    assert wildquotient.group.split_prime_power(q) == (p, m)


@pytest.mark.parametrize("q", (0, 1, 6, 12, 100))
def test_split_prime_power_invalid(q):
    with pytest.raises(NotAPrimePowerError, match=r"not a prime power"):
        wildquotient.group.split_prime_power(q)


@pytest.mark.parametrize(
    ("q", "error"),
    ((6, NotAPrimePowerError), (11, DeskScaleError), (16, DeskScaleError)),
)
def test_build_group_invalid(q, error):
    with pytest.raises(error):
        wildquotient.group.build_group(q)


@pytest.mark.parametrize("q", (2, 3, 4, 5))
def test_order_and_law(q):
    group = wildquotient.group.build_group(q)
    assert len(group) == q**3
    assert len(set(group.elements)) == q**3
    for a in group:
        assert group.mul(a, group.inv(a)) == group.identity
        assert group.mul(group.identity, a) == a
    sample = group.elements[:: max(1, len(group) // 12)]
    for a, b, c in itertools.product(sample, repeat=3):
        product = group.mul(a, b)
        assert product in group
        assert group.mul(product, c) == group.mul(a, group.mul(b, c))


def test_quaternion_group(quaternion_group):
    # the unique involution of Q_8 is its central element
    assert wildquotient.group.involution_count(quaternion_group) == 1
    assert wildquotient.group.exponent(quaternion_group) == 4
    assert len(quaternion_group.classes) == 5


@pytest.mark.parametrize("q", (2, 3, 4, 5, 7, 8, 9))
def test_subgroup_census(q):
    group = wildquotient.group.build_group(q)
    census = wildquotient.group.subgroup_census(group)
    assert len(census.center) == q
    assert census.center == census.commutator_subgroup == census.frattini
    assert all(a.r.is_zero for a in census.center)


@pytest.mark.parametrize(
    ("q", "exponent"), ((2, 4), (3, 3), (4, 4), (5, 5), (7, 7), (8, 4), (9, 3))
)
def test_exponent(q, exponent):
    assert wildquotient.group.exponent(wildquotient.group.build_group(q)) == exponent


@pytest.mark.parametrize("q", (2, 3, 4, 5, 7, 8, 9))
def test_conjugacy_classes(q):
    classes = wildquotient.group.build_group(q).classes
    assert len(classes) == q * q + q - 1
    sizes = sorted(len(conjugacy_class) for conjugacy_class in classes)
    assert sizes == [1] * q + [q] * (q * q - 1)


@pytest.mark.parametrize("q", (2, 3))
def test_commutator_exhaustive(q):
    group = wildquotient.group.build_group(q)
    for a, b in itertools.product(group, repeat=2):
        assert group.commutator(a, b) == group.commutator_from_products(a, b)


@pytest.mark.parametrize("q", (4, 5, 9))
def test_commutator_random(q):
    group = wildquotient.group.build_group(q)
    generator = random.Random(20261019)
    for _ in range(2000):
        a = generator.choice(group.elements)
        b = generator.choice(group.elements)
        assert group.commutator(a, b) == group.commutator_from_products(a, b)


@pytest.mark.parametrize("q", (2, 3, 4, 5))
def test_verify_commutator_pairing(q):
    group = wildquotient.group.build_group(q)
    assert wildquotient.group.verify_commutator_pairing(group)


@pytest.mark.parametrize(
    ("q", "readings"),
    (
        (2, {"q+1": True, "p+1": True}),
        (3, {"q+1": True, "p+1": True}),
        (4, {"q+1": True, "p+1": False}),
        (8, {"q+1": True, "p+1": False}),
    ),
)
def test_p_power_readings(q, readings):
    group = wildquotient.group.build_group(q)
    assert wildquotient.group.p_power_readings(group) == readings


@pytest.mark.parametrize("q", (2, 3, 4, 5))
def test_zeta_conjugation_is_automorphism(q):
    group = wildquotient.group.build_group(q)
    assert len(group.zeta_group) == q * q - 1
    zeta = group.zeta_group[-1]
    sample = group.elements[:: max(1, len(group) // 10)]
    for a, b in itertools.product(sample, repeat=2):
        assert wildquotient.group.zeta_conjugation(
            group, zeta, group.mul(a, b)
        ) == group.mul(
            wildquotient.group.zeta_conjugation(group, zeta, a),
            wildquotient.group.zeta_conjugation(group, zeta, b),
        )


@pytest.mark.parametrize("q", (2, 3, 4, 5))
def test_zeta_orbit_of_center(q):
    group = wildquotient.group.build_group(q)
    orbit = wildquotient.group.zeta_orbit_of_center(group)
    assert orbit == group.center - {group.identity}


def test_zeta_conjugation_invalid(heisenberg_group):
    with pytest.raises(NotInMultiplicativeGroupError):
        wildquotient.group.zeta_conjugation(
            heisenberg_group, heisenberg_group.field.zero, heisenberg_group.identity
        )


@pytest.mark.parametrize(
    ("q", "cofactor"), ((2, 3), (3, 224), (4, 65 * 15), (5, 126 * 24))
)
def test_sylow_cofactor(q, cofactor):
    p, _ = wildquotient.group.split_prime_power(q)
    assert wildquotient.group.sylow_cofactor(q) == cofactor
    assert cofactor % p != 0


def test_is_subgroup(heisenberg_group):
    assert heisenberg_group.is_subgroup(heisenberg_group.center)
    assert heisenberg_group.is_subgroup([heisenberg_group.identity])
    noncentral = next(a for a in heisenberg_group if not a.r.is_zero)
    assert not heisenberg_group.is_subgroup([heisenberg_group.identity, noncentral])
    assert heisenberg_group.element_order(noncentral) == 3
