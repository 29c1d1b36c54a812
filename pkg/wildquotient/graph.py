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
Dual graphs of configurations of rational curves on a surface:
Hirzebruch-Jung chains, the resolved singular fiber of the quotient
fibration and the invariants of the resulting rational surface.
"""

from __future__ import annotations

import dataclasses
import fractions
import itertools
import logging
import math
import typing

import networkx
import sympy
from sympy.matrices.normalforms import smith_normal_form

from wildquotient.exceptions import (
    CrossCheckFailureError,
    InvalidEntryError,
    NonIntegralSelfIntersectionError,
    NonPrimeError,
    NotCoprimeError,
    NotNegativeDefiniteError,
    OutOfRangeError,
)
from wildquotient.group import split_prime_power
from wildquotient.rep import cohomology_swan_conductor, invariant_dims

_LOGGER = logging.getLogger(__name__)

Fraction = fractions.Fraction
Matrix = typing.List[typing.List[int]]


@dataclasses.dataclass(frozen=True)
class HJType:

    m: int
    b: int
    # self-intersections of the chain are -s for s in expansion
    expansion: typing.Tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.expansion)


def cf_expand(m: int, b: int) -> HJType:
    """
    m/b = s_1 - 1/(s_2 - 1/(... - 1/s_r)) with every s_i >= 2

    >>> cf_expand(7, 3).expansion
    (3, 2, 2)
    """
    if not 0 < b < m:
        raise OutOfRangeError(f"expected 0 < b < m (got m={m}, b={b})")
    if math.gcd(m, b) != 1:
        raise NotCoprimeError(f"{m} and {b} are not coprime")
    expansion = []
    numerator, denominator = m, b
    while denominator:
        term = -(-numerator // denominator)
        expansion.append(term)
        numerator, denominator = denominator, term * denominator - numerator
    return HJType(m=m, b=b, expansion=tuple(expansion))


def cf_eval(expansion: typing.Sequence[int]) -> typing.Tuple[int, int]:
    if not expansion:
        raise InvalidEntryError("empty expansion")
    for term in expansion:
        if term < 2:
            raise InvalidEntryError(f"entry {term} of {list(expansion)} is below 2")
    value = Fraction(expansion[-1])
    for term in reversed(expansion[:-1]):
        value = term - 1 / value
    m, b = value.numerator, value.denominator
    length = len(expansion)
    # leading blocks of the chain read from E_r; the last two omit nothing and E_1
    minors = [1] + leading_principal_minors(
        chain_graph(list(reversed(expansion))).intersection_matrix()
    )
    if (-1) ** length * minors[-1] != m or (-1) ** (length - 1) * minors[-2] != b:
        raise CrossCheckFailureError(
            f"determinants of the chain {list(expansion)} disagree with {m}/{b}"
        )
    return m, b


def reversed_type(hj_type: HJType) -> HJType:
    """
    the same chain read from the other end, of type m/b' with b b' = 1 mod m
    """
    expansion = tuple(reversed(hj_type.expansion))
    m, b_prime = cf_eval(expansion)
    if m != hj_type.m or (hj_type.b * b_prime) % m != 1:
        raise CrossCheckFailureError(
            f"reversing {list(hj_type.expansion)} gives {m}/{b_prime},"
            f" expected an inverse of {hj_type.b} modulo {hj_type.m}"
        )
    return HJType(m=m, b=b_prime, expansion=expansion)


@dataclasses.dataclass(frozen=True)
class Vertex:

    label: str
    # None until solved from the multiplicities
    self_intersection: typing.Optional[int]
    multiplicity: int = 1


class DualGraph:
    """
    One vertex per curve, one edge per transversal intersection point.
    Vertices keep their insertion order.
    """

    def __init__(
        self,
        vertices: typing.Iterable[Vertex],
        edges: typing.Iterable[typing.Tuple[str, str]],
    ) -> None:
        self._graph = networkx.Graph()
        for vertex in vertices:
            if vertex.multiplicity < 1:
                raise ValueError(
                    f"multiplicity of {vertex.label} must be positive"
                    f" (got {vertex.multiplicity})"
                )
            self._graph.add_node(vertex.label, vertex=vertex)
        for first, second in edges:
            for label in (first, second):
                if label not in self._graph:
                    raise ValueError(f"edge ({first}, {second}) names unknown vertex")
            self._graph.add_edge(first, second)

    def __len__(self) -> int:
        return self._graph.number_of_nodes()

    def __repr__(self) -> str:
        return f"DualGraph({len(self)} vertices, {len(self.edges)} edges)"

    @property
    def labels(self) -> typing.Tuple[str, ...]:
        return tuple(self._graph.nodes)

    @property
    def vertices(self) -> typing.Tuple[Vertex, ...]:
        return tuple(self._graph.nodes[label]["vertex"] for label in self._graph)

    def vertex(self, label: str) -> Vertex:
        return self._graph.nodes[label]["vertex"]

    @property
    def edges(self) -> typing.Tuple[typing.Tuple[str, str], ...]:
        return tuple(self._graph.edges)

    def neighbors(self, label: str) -> typing.List[str]:
        return list(self._graph.neighbors(label))

    def degree(self, label: str) -> int:
        return self._graph.degree[label]

    @property
    def multiplicities(self) -> typing.Tuple[int, ...]:
        return tuple(vertex.multiplicity for vertex in self.vertices)

    @property
    def self_intersections(self) -> typing.Tuple[typing.Optional[int], ...]:
        return tuple(vertex.self_intersection for vertex in self.vertices)

    def is_tree(self) -> bool:
        return len(self) > 0 and networkx.is_tree(self._graph)

    def subgraph(self, labels: typing.Iterable[str]) -> networkx.Graph:
        return self._graph.subgraph(labels)

    def intersection_matrix(self) -> Matrix:
        labels = self.labels
        position = {label: index for index, label in enumerate(labels)}
        matrix = [[0] * len(labels) for _ in labels]
        for index, vertex in enumerate(self.vertices):
            if vertex.self_intersection is None:
                raise ValueError(f"self-intersection of {vertex.label} is unknown")
            matrix[index][index] = vertex.self_intersection
        for first, second in self._graph.edges:
            matrix[position[first]][position[second]] = 1
            matrix[position[second]][position[first]] = 1
        return matrix

    def with_self_intersections(
        self, self_intersections: typing.Mapping[str, int]
    ) -> DualGraph:
        return DualGraph(
            (
                dataclasses.replace(
                    vertex, self_intersection=self_intersections[vertex.label]
                )
                for vertex in self.vertices
            ),
            self.edges,
        )

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {name} {{"]
        for vertex in self.vertices:
            details = f"m={vertex.multiplicity}"
            if vertex.self_intersection is not None:
                details += f", s={vertex.self_intersection}"
            lines.append(f'  "{vertex.label}" [label="{vertex.label} [{details}]"];')
        for first, second in self.edges:
            lines.append(f'  "{first}" -- "{second}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


def chain_graph(expansion: typing.Sequence[int]) -> DualGraph:
    """
    the resolution graph E_1 - E_2 - ... - E_r with E_i^2 = -s_i
    """
    if not expansion:
        raise InvalidEntryError("empty expansion")
    for term in expansion:
        if term < 2:
            raise InvalidEntryError(f"entry {term} of {list(expansion)} is below 2")
    labels = [f"E{index}" for index in range(1, len(expansion) + 1)]
    return DualGraph(
        (Vertex(label, -term) for label, term in zip(labels, expansion)),
        zip(labels, labels[1:]),
    )


def leading_principal_minors(matrix: Matrix) -> typing.List[int]:
    """
    det of the upper left k x k blocks, k = 1..n
    """
    full = sympy.Matrix(matrix)
    return [int(full[:k, :k].det()) for k in range(1, full.rows + 1)]


def is_negative_definite(graph: DualGraph) -> bool:
    return bool(sympy.Matrix(graph.intersection_matrix()).is_negative_definite)


def _require_negative_definite(graph: DualGraph) -> Matrix:
    if not is_negative_definite(graph):
        raise NotNegativeDefiniteError(
            f"intersection matrix of {graph!r} is not negative definite"
        )
    return graph.intersection_matrix()


def discriminant_group(graph: DualGraph) -> typing.List[int]:
    """
    invariant factors of the cokernel of the intersection matrix
    """
    matrix = _require_negative_definite(graph)
    normal_form = smith_normal_form(sympy.Matrix(matrix), domain=sympy.ZZ)
    factors = [abs(int(normal_form[i, i])) for i in range(len(matrix))]
    return [factor for factor in factors if factor != 1]


def local_pi1_order(m: int, p: int) -> int:
    """
    prime-to-p part of m, p being the characteristic exponent
    """
    if m < 1:
        raise OutOfRangeError(f"m must be positive (got {m})")
    if p != 1 and not sympy.isprime(p):
        raise NonPrimeError(f"{p} is neither 1 nor a prime")
    if p == 1:
        return m
    while m % p == 0:
        m //= p
    return m


def _sympy_to_fraction(value: sympy.Rational) -> Fraction:
    return Fraction(int(value.p), int(value.q))


@dataclasses.dataclass(frozen=True)
class MonoidP:
    """
    pairs (n, n') of natural numbers such that n E_1 + n' E_r
    is trivial in the discriminant group of a chain
    """

    m: int
    b: int
    # A^-1 e_1 and A^-1 e_r for the intersection matrix A
    first_column: typing.Tuple[Fraction, ...]
    last_column: typing.Tuple[Fraction, ...]

    def contains(self, n: int, n_prime: int) -> bool:
        if n < 0 or n_prime < 0:
            return False
        return all(
            (n * first + n_prime * last).denominator == 1
            for first, last in zip(self.first_column, self.last_column)
        )

    def hilbert_basis(self) -> typing.List[typing.Tuple[int, int]]:
        # (m, 0) and (0, m) lie in P, so no irreducible element has a coordinate above m
        members = [
            pair
            for pair in itertools.product(range(self.m + 1), repeat=2)
            if pair != (0, 0) and self.contains(*pair)
        ]
        return [
            (n, n_prime)
            for n, n_prime in members
            if not any(
                a <= n
                and b <= n_prime
                and self.contains(n - a, n_prime - b)
                and (n - a, n_prime - b) != (0, 0)
                for a, b in members
            )
        ]

    def index(self) -> int:
        """
        [Z^2 : P^gp], P^gp containing m Z^2
        """
        inside = sum(
            1
            for n, n_prime in itertools.product(range(self.m), repeat=2)
            if self.contains(n, n_prime)
        )
        assert (self.m * self.m) % inside == 0, (self.m, inside)
        return self.m * self.m // inside


def monoid_P(m: int, b: int) -> MonoidP:  # pylint: disable=invalid-name
    hj_type = cf_expand(m, b)
    matrix = sympy.Matrix(chain_graph(hj_type.expansion).intersection_matrix())
    size = hj_type.length
    first = matrix.LUsolve(sympy.Matrix([1] + [0] * (size - 1)))
    last = matrix.LUsolve(sympy.Matrix([0] * (size - 1) + [1]))
    return MonoidP(
        m=m,
        b=b,
        first_column=tuple(_sympy_to_fraction(value) for value in first),
        last_column=tuple(_sympy_to_fraction(value) for value in last),
    )


def fundamental_cycle(graph: DualGraph) -> typing.Tuple[int, ...]:
    """
    Laufer's algorithm: start at Z = sum(E_i) and add E_i while Z.E_i > 0
    """
    matrix = _require_negative_definite(graph)
    cycle = [1] * len(matrix)
    while True:
        for index, row in enumerate(matrix):
            if sum(a * z for a, z in zip(row, cycle)) > 0:
                cycle[index] += 1
                break
        else:
            return tuple(cycle)


def build_fiber_graph(q: int) -> DualGraph:
    """
    Singular fiber over the image of the branch point after resolving
    the quotient: a chain E_1 .. E_{q-1} with multiplicities 1 .. q-1,
    the component F_0 of multiplicity 1, the multiplicity q chain
    F_1 .. F_4 and q strings S_j of length q-1 leaving F_4 with
    multiplicities q-1 .. 1.
    Self-intersections are left unknown, see solve_self_intersections.
    """
    split_prime_power(q)
    vertices = [Vertex(f"E{i}", None, i) for i in range(1, q)]
    vertices.append(Vertex("F0", None, 1))
    vertices.extend(Vertex(f"F{i}", None, q) for i in range(1, 5))
    edges = [(f"E{i}", f"E{i + 1}") for i in range(1, q - 1)]
    edges.append((f"E{q - 1}", "F1"))
    edges.append(("F0", "F1"))
    edges.extend((f"F{i}", f"F{i + 1}") for i in range(1, 4))
    for j in range(1, q + 1):
        vertices.extend(Vertex(f"S{j}_{k}", None, q - k) for k in range(1, q))
        edges.append(("F4", f"S{j}_1"))
        edges.extend((f"S{j}_{k}", f"S{j}_{k + 1}") for k in range(1, q - 1))
    graph = DualGraph(vertices, edges)
    assert len(graph) == q * q + 4, len(graph)
    return graph


def solve_self_intersections(graph: DualGraph) -> DualGraph:
    """
    The fiber sum(m_j E_j) meets every component in degree 0, so
    E_i^2 = -sum(m_j for j adjacent to i) / m_i.
    """
    if not graph.is_tree():
        raise ValueError(f"{graph!r} is not a tree")
    solved = {}
    for vertex in graph.vertices:
        weight = sum(
            graph.vertex(label).multiplicity for label in graph.neighbors(vertex.label)
        )
        if weight % vertex.multiplicity:
            raise NonIntegralSelfIntersectionError(
                f"{vertex.label}^2 = -{weight}/{vertex.multiplicity} is not an integer"
            )
        solved[vertex.label] = -(weight // vertex.multiplicity)
    return graph.with_self_intersections(solved)


def node_count(graph: DualGraph) -> int:
    return sum(1 for label in graph.labels if graph.degree(label) >= 3)


def fiber_euler_number(graph: DualGraph) -> int:
    # rational curves meeting transversally in distinct points
    return 2 * len(graph) - len(graph.edges)


def kodaira_i_star_index(graph: DualGraph) -> typing.Optional[int]:
    """
    n if graph is the Kodaira fiber I*_n: a chain of n+1 components of
    multiplicity 2 with two leaves of multiplicity 1 at either end
    (four leaves at the single component when n = 0)
    """
    if not graph.is_tree() or any(
        s is not None and s != -2 for s in graph.self_intersections
    ):
        return None
    leaves = [v.label for v in graph.vertices if v.multiplicity == 1]
    spine = [v.label for v in graph.vertices if v.multiplicity == 2]
    if len(leaves) != 4 or len(leaves) + len(spine) != len(graph):
        return None
    if any(graph.degree(label) != 1 for label in leaves):
        return None
    spine_graph = graph.subgraph(spine)
    if not spine or not networkx.is_tree(spine_graph):
        return None
    if any(degree > 2 for _, degree in spine_graph.degree):
        return None
    attachments = [graph.neighbors(label)[0] for label in leaves]
    if len(spine) == 1:
        return 0
    ends = [label for label, degree in spine_graph.degree if degree == 1]
    if sorted(attachments.count(end) for end in ends) != [2, 2]:
        return None
    return len(spine) - 1


@dataclasses.dataclass(frozen=True)
class SurfaceInvariants:

    q: int
    # Euler number c_2
    e: int
    K2: int  # pylint: disable=invalid-name
    rho: int
    # components of the singular fiber
    components_c: int
    mw_rank_r: int


def surface_invariants(
    q: int,
    swan_conductor: typing.Optional[int] = None,
    mordell_weil_rank: typing.Optional[int] = None,
) -> SurfaceInvariants:
    """
    Chern numbers and Picard number of the rational surface fibered over P^1
    with generic fiber C and a single singular fiber.

    swan_conductor: wild conductor of H^1, computed from the ramification
    filtration if omitted
    mordell_weil_rank: computed as dim (H^1 x H^1)^G if omitted
    """
    split_prime_power(q)
    if swan_conductor is None:
        swan_conductor = cohomology_swan_conductor(q).defining_sum
    if mordell_weil_rank is None:
        mordell_weil_rank = invariant_dims(q).h1_tensor_h1_g
    fiber = solve_self_intersections(build_fiber_graph(q))
    euler_curve = 2 - q * (q - 1)
    # Euler number of the total space of a fibration over P^1
    # with a single singular fiber and wild conductor delta
    e = 2 * euler_curve + (fiber_euler_number(fiber) - euler_curve) + swan_conductor
    k2 = 12 - e
    rho = e - 2
    components = len(fiber)
    tate_shioda = 2 + (components - 1) + mordell_weil_rank
    if rho != tate_shioda:
        raise CrossCheckFailureError(
            f"rho={rho} but 2 + (c - 1) + r = {tate_shioda}"
            f" with c={components}, r={mordell_weil_rank}"
        )
    expected = (q * q + q + 6, -q * q - q + 6, q * q + q + 4)
    if (e, k2, rho) != expected:
        raise CrossCheckFailureError(
            f"(e, K^2, rho) = {(e, k2, rho)}, expected {expected} for q={q}"
        )
    _LOGGER.debug("q=%d: e=%d K^2=%d rho=%d", q, e, k2, rho)
    return SurfaceInvariants(
        q=q, e=e, K2=k2, rho=rho, components_c=components, mw_rank_r=mordell_weil_rank
    )
