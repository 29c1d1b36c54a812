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

import pytest

import wildquotient.graph
from wildquotient.exceptions import (
    NonPrimeError,
    NotNegativeDefiniteError,
    OutOfRangeError,
)


def _d4_graph():
    return wildquotient.graph.DualGraph(
        [
            wildquotient.graph.Vertex("C", -2),
            wildquotient.graph.Vertex("L1", -2),
            wildquotient.graph.Vertex("L2", -2),
            wildquotient.graph.Vertex("L3", -2),
        ],
        [("C", "L1"), ("C", "L2"), ("C", "L3")],
    )


@pytest.mark.parametrize(
    ("matrix", "minors"),
    (
        ([[2, 1], [1, 2]], [2, 3]),
        ([[-3, 1, 0], [1, -2, 1], [0, 1, -2]], [-3, 5, -7]),
        ([[0, 1], [1, 0]], [0, -1]),
        ([[5]], [5]),
    ),
)
def test_leading_principal_minors(matrix, minors):
    assert wildquotient.graph.leading_principal_minors(matrix) == minors


def test_is_negative_definite():
    assert wildquotient.graph.is_negative_definite(
        wildquotient.graph.chain_graph([3, 2, 2])
    )
    assert wildquotient.graph.is_negative_definite(_d4_graph())
    graph = wildquotient.graph.DualGraph(
        [wildquotient.graph.Vertex("A", -1), wildquotient.graph.Vertex("B", -1)],
        [("A", "B")],
    )
    assert not wildquotient.graph.is_negative_definite(graph)
    with pytest.raises(NotNegativeDefiniteError):
        wildquotient.graph.discriminant_group(graph)
    with pytest.raises(NotNegativeDefiniteError):
        wildquotient.graph.fundamental_cycle(graph)


def test_is_negative_definite_fiber(fiber_q3):
    # a full fiber has square zero, so its form is only semidefinite
    assert not wildquotient.graph.is_negative_definite(fiber_q3)
    matrix = fiber_q3.intersection_matrix()
    assert wildquotient.graph.leading_principal_minors(matrix)[-1] == 0


@pytest.mark.parametrize(
    ("expansion", "factors"),
    (
        ([2], [2]),
        ([7], [7]),
        ([3, 2, 2], [7]),
        ([2, 2, 2], [4]),
    ),
)
def test_discriminant_group_chain(expansion, factors):
    chain = wildquotient.graph.chain_graph(expansion)
    assert wildquotient.graph.discriminant_group(chain) == factors


def test_discriminant_group_d4():
    assert wildquotient.graph.discriminant_group(_d4_graph()) == [2, 2]


@pytest.mark.parametrize(
    ("m", "p", "order"),
    ((12, 2, 3), (7, 7, 1), (9, 1, 9), (18, 3, 2), (5, 2, 5), (1, 3, 1)),
)
def test_local_pi1_order(m, p, order):
    assert wildquotient.graph.local_pi1_order(m, p) == order


def test_local_pi1_order_invalid():
    with pytest.raises(NonPrimeError):
        wildquotient.graph.local_pi1_order(12, 4)
    with pytest.raises(OutOfRangeError):
        wildquotient.graph.local_pi1_order(0, 2)


def test_monoid_p_a1():
    monoid = wildquotient.graph.monoid_P(2, 1)
    assert monoid.contains(1, 1)
    assert not monoid.contains(1, 0)
    assert not monoid.contains(-1, 1)
    assert monoid.hilbert_basis() == [(0, 2), (1, 1), (2, 0)]
    assert monoid.index() == 2


@pytest.mark.parametrize(("m", "b"), ((3, 1), (5, 2), (7, 3), (9, 2)))
def test_monoid_p(m, b):
    monoid = wildquotient.graph.monoid_P(m, b)
    assert monoid.contains(m, 0)
    assert monoid.contains(0, m)
    assert monoid.index() == m
    basis = monoid.hilbert_basis()
    assert (m, 0) in basis
    assert (0, m) in basis
    assert all(monoid.contains(*pair) for pair in basis)


@pytest.mark.parametrize(
    ("expansion", "cycle"),
    (([2], (1,)), ([3, 2, 2], (1, 1, 1)), ([2, 2, 2, 2], (1, 1, 1, 1))),
)
def test_fundamental_cycle_chain(expansion, cycle):
    chain = wildquotient.graph.chain_graph(expansion)
    assert wildquotient.graph.fundamental_cycle(chain) == cycle


def test_fundamental_cycle_d4():
    assert wildquotient.graph.fundamental_cycle(_d4_graph()) == (2, 1, 1, 1)


def test_dual_graph():
    graph = wildquotient.graph.chain_graph([3, 2])
    assert len(graph) == 2
    assert repr(graph) == "DualGraph(2 vertices, 1 edges)"
    assert graph.labels == ("E1", "E2")
    assert graph.self_intersections == (-3, -2)
    assert graph.multiplicities == (1, 1)
    assert graph.neighbors("E1") == ["E2"]
    assert graph.degree("E2") == 1
    assert graph.is_tree()
    assert graph.intersection_matrix() == [[-3, 1], [1, -2]]


def test_dual_graph_invalid():
    with pytest.raises(ValueError, match=r"multiplicity of A must be positive"):
        wildquotient.graph.DualGraph([wildquotient.graph.Vertex("A", -2, 0)], [])
    with pytest.raises(ValueError, match=r"unknown vertex"):
        wildquotient.graph.DualGraph(
            [wildquotient.graph.Vertex("A", -2)], [("A", "B")]
        )
    graph = wildquotient.graph.DualGraph([wildquotient.graph.Vertex("A", None)], [])
    with pytest.raises(ValueError, match=r"unknown"):
        graph.intersection_matrix()


def test_to_dot():
    graph = wildquotient.graph.chain_graph([2, 3])
    assert graph.to_dot(name="chain") == (
        "graph chain {\n"
        '  "E1" [label="E1 [m=1, s=-2]"];\n'
        '  "E2" [label="E2 [m=1, s=-3]"];\n'
        '  "E1" -- "E2";\n'
        "}\n"
    )
