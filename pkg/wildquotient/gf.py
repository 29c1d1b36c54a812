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
Exact arithmetic in F_{p^M} = F_p[x] / (modulus).

Elements are stored as the packed integer sum(c_i * p^i) of their
coordinates c_0, ..., c_{M-1} in the basis 1, x, ..., x^{M-1}.
The packed value also defines the enumeration order of a field.
"""

from __future__ import annotations

import dataclasses
import functools
import itertools
import logging
import typing

import numpy
import sympy
from sympy.polys.domains import GF, ZZ
from sympy.polys.galoistools import gf_irreducible_p
from sympy.polys.matrices import DomainMatrix

from wildquotient.exceptions import (
    DegreeTooLargeError,
    DivisionByZeroError,
    NonPrimeError,
    NotASubfieldDegreeError,
    SpecMismatchError,
)

_LOGGER = logging.getLogger(__name__)

MAX_DEGREE = 24
# fields with at most this many elements multiply via discrete log tables
_LOG_TABLE_ORDER_LIMIT = 1 << 20


def _to_digits(value: int, p: int, degree: int) -> typing.List[int]:
    digits = []
    for _ in range(degree):
        value, digit = divmod(value, p)
        digits.append(digit)
    return digits


def _from_digits(digits: typing.Iterable[int], p: int) -> int:
    value = 0
    for digit in reversed(list(digits)):
        value = value * p + digit
    return value


def _format_polynomial(coefficients: typing.Sequence[int]) -> str:
    terms = []
    for exponent in range(len(coefficients) - 1, -1, -1):
        coefficient = coefficients[exponent]
        if not coefficient:
            continue
        monomial = {0: "", 1: "x"}.get(exponent, f"x^{exponent}")
        if not monomial:
            terms.append(str(coefficient))
        elif coefficient == 1:
            terms.append(monomial)
        else:
            terms.append(f"{coefficient}*{monomial}")
    return " + ".join(terms) or "0"


def is_irreducible(coefficients: typing.Sequence[int], p: int) -> bool:
    """
    coefficients: constant term first, leading coefficient nonzero mod p
    """
    return bool(gf_irreducible_p([c % p for c in reversed(coefficients)], p, ZZ))


def _smallest_irreducible(p: int, degree: int) -> typing.Tuple[int, ...]:
    # (c_{M-1}, ..., c_0) in lexicographic order
    for tail in itertools.product(range(p), repeat=degree):
        descending = (1,) + tail
        if gf_irreducible_p(list(descending), p, ZZ):
            return tuple(reversed(descending))
    raise AssertionError(f"no monic irreducible of degree {degree} over F_{p}")


class _PrimeFieldArithmetic:
    def __init__(self, p: int) -> None:
        self.p = p

    def digits(self, a: int) -> typing.List[int]:
        return [a]

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def neg(self, a: int) -> int:
        return -a % self.p

    def mul(self, a: int, b: int) -> int:
        return a * b % self.p

    def power(self, a: int, exponent: int) -> int:
        return pow(a, exponent, self.p)

    def inv(self, a: int) -> int:
        return pow(a, self.p - 2, self.p)


class _PolynomialArithmetic:
    """
    schoolbook multiplication with reduction by the modulus,
    square-and-multiply exponentiation
    """

    def __init__(self, spec: FieldSpec) -> None:
        self.p = spec.p
        self.degree = spec.degree
        self.order = spec.order
        self._modulus = spec.modulus

    def digits(self, a: int) -> typing.List[int]:
        return _to_digits(a, self.p, self.degree)

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        return _from_digits(
            ((x + y) % self.p for x, y in zip(self.digits(a), self.digits(b))),
            self.p,
        )

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        return _from_digits((-x % self.p for x in self.digits(a)), self.p)

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        p, degree = self.p, self.degree
        product = [0] * (2 * degree - 1)
        right = self.digits(b)
        for i, x in enumerate(self.digits(a)):
            if x:
                for j, y in enumerate(right):
                    if y:
                        product[i + j] += x * y
        for k in range(2 * degree - 2, degree - 1, -1):
            coefficient = product[k] % p
            if coefficient:
                # x^degree = -(modulus[0] + ... + modulus[degree-1] x^(degree-1))
                for i in range(degree):
                    product[k - degree + i] -= coefficient * self._modulus[i]
        return _from_digits((c % p for c in product[:degree]), p)

    def power(self, a: int, exponent: int) -> int:
        result = 1
        while exponent:
            if exponent & 1:
                result = self.mul(result, a)
            exponent >>= 1
            if exponent:
                a = self.mul(a, a)
        return result

    def inv(self, a: int) -> int:
        return self.power(a, self.order - 2)


class _LogTableArithmetic:
    """
    a * b = g^(log a + log b), a + b = g^(log a + zech(log b - log a))
    with zech(n) = log(1 + g^n)
    """

    def __init__(self, spec: FieldSpec) -> None:
        self.p = spec.p
        self.order = spec.order
        self._polynomial = _PolynomialArithmetic(spec)
        self._cycle = self.order - 1
        generator = self._find_generator()
        _LOGGER.debug(
            "building log tables of %s with generator %s",
            spec,
            _format_polynomial(self._polynomial.digits(generator)),
        )
        self._exp, self._log, self._zech = self._build_tables(generator)

    def _find_generator(self) -> int:
        prime_factors = sympy.primefactors(self._cycle)
        for candidate in range(1, self.order):
            if all(
                self._polynomial.power(candidate, self._cycle // prime) != 1
                for prime in prime_factors
            ):
                return candidate
        raise AssertionError("multiplicative group is not cyclic")

    def _build_tables(
        self, generator: int
    ) -> typing.Tuple[typing.List[int], typing.List[int], typing.List[int]]:
        p, degree = self.p, self._polynomial.degree
        weights = numpy.array([p**i for i in range(degree)], dtype=numpy.int64)
        # column j holds the coordinates of generator^k * x^j
        step = numpy.array(
            [
                self._polynomial.digits(self._polynomial.mul(generator, p**j))
                for j in range(degree)
            ],
            dtype=numpy.int64,
        ).T
        powers = numpy.zeros((self._cycle, degree), dtype=numpy.int64)
        powers[0, 0] = 1
        filled = 1
        while filled < self._cycle:
            count = min(filled, self._cycle - filled)
            powers[filled : filled + count] = powers[:count] @ step.T % p
            filled += count
            step = step @ step % p
        exp = powers @ weights
        log = numpy.full(self.order, -1, dtype=numpy.int64)
        log[exp] = numpy.arange(self._cycle, dtype=numpy.int64)
        assert (log[1:] >= 0).all(), generator
        powers[:, 0] = (powers[:, 0] + 1) % p
        zech = log[powers @ weights]
        return exp.tolist(), log.tolist(), zech.tolist()

    def digits(self, a: int) -> typing.List[int]:
        return self._polynomial.digits(a)

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if a == 0:
            return b
        if b == 0:
            return a
        log_a = self._log[a]
        zech = self._zech[(self._log[b] - log_a) % self._cycle]
        if zech < 0:
            return 0
        return self._exp[(log_a + zech) % self._cycle]

    def neg(self, a: int) -> int:
        if self.p == 2 or a == 0:
            return a
        # -1 = g^(cycle / 2)
        return self._exp[(self._log[a] + self._cycle // 2) % self._cycle]

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % self._cycle]

    def power(self, a: int, exponent: int) -> int:
        if a == 0:
            return 0 if exponent else 1
        return self._exp[self._log[a] * exponent % self._cycle]

    def inv(self, a: int) -> int:
        return self._exp[-self._log[a] % self._cycle]


_Arithmetic = typing.Union[
    _PrimeFieldArithmetic, _PolynomialArithmetic, _LogTableArithmetic
]


@dataclasses.dataclass(frozen=True)
class FieldSpec:

    p: int
    degree: int
    # monic irreducible, constant term first
    modulus: typing.Tuple[int, ...]

    @property
    def order(self) -> int:
        return self.p**self.degree

    @functools.cached_property
    def arithmetic(self) -> _Arithmetic:
        if self.degree == 1:
            return _PrimeFieldArithmetic(self.p)
        if self.order <= _LOG_TABLE_ORDER_LIMIT:
            return _LogTableArithmetic(self)
        return _PolynomialArithmetic(self)

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    def from_int(self, integer: int) -> FieldElement:
        return FieldElement(self, integer % self.p)

    def from_value(self, value: int) -> FieldElement:
        if not 0 <= value < self.order:
            raise ValueError(f"packed value {value} outside of {self}")
        return FieldElement(self, value)

    def element(self, coeffs: typing.Sequence[int]) -> FieldElement:
        """
        coeffs: coordinates in the basis 1, x, ..., x^(degree-1)
        """
        if len(coeffs) > self.degree:
            raise ValueError(
                f"{len(coeffs)} coordinates given for a field of degree {self.degree}"
            )
        return FieldElement(self, _from_digits((c % self.p for c in coeffs), self.p))

    def basis_element(self, index: int) -> FieldElement:
        assert 0 <= index < self.degree, index
        return FieldElement(self, self.p**index)

    def elements(self) -> typing.Iterator[FieldElement]:
        for value in range(self.order):
            yield FieldElement(self, value)

    def __str__(self) -> str:
        return f"F_{self.p}^{self.degree}"


class FieldElement:

    __slots__ = ("spec", "value")

    def __init__(self, spec: FieldSpec, value: int) -> None:
        self.spec = spec
        self.value = value

    @property
    def coeffs(self) -> typing.Tuple[int, ...]:
        return tuple(self.spec.arithmetic.digits(self.value))

    @property
    def is_zero(self) -> bool:
        return self.value == 0

    def _operand(self, other: typing.Union[FieldElement, int]) -> int:
        if isinstance(other, int):
            return other % self.spec.p
        if other.spec is not self.spec and other.spec != self.spec:
            raise SpecMismatchError(f"{self.spec} vs. {other.spec}")
        return other.value

    def __add__(self, other: typing.Union[FieldElement, int]) -> FieldElement:
        return FieldElement(
            self.spec, self.spec.arithmetic.add(self.value, self._operand(other))
        )

    __radd__ = __add__

    def __neg__(self) -> FieldElement:
        return FieldElement(self.spec, self.spec.arithmetic.neg(self.value))

    def __sub__(self, other: typing.Union[FieldElement, int]) -> FieldElement:
        arithmetic = self.spec.arithmetic
        return FieldElement(
            self.spec,
            arithmetic.add(self.value, arithmetic.neg(self._operand(other))),
        )

    def __rsub__(self, other: int) -> FieldElement:
        return self.spec.from_int(other) - self

    def __mul__(self, other: typing.Union[FieldElement, int]) -> FieldElement:
        return FieldElement(
            self.spec, self.spec.arithmetic.mul(self.value, self._operand(other))
        )

    __rmul__ = __mul__

    def inverse(self) -> FieldElement:
        if self.value == 0:
            raise DivisionByZeroError(f"zero has no inverse in {self.spec}")
        return FieldElement(self.spec, self.spec.arithmetic.inv(self.value))

    def __truediv__(self, other: typing.Union[FieldElement, int]) -> FieldElement:
        if isinstance(other, int):
            other = self.spec.from_int(other)
        else:
            self._operand(other)
        return self * other.inverse()

    def __pow__(self, exponent: int) -> FieldElement:
        if exponent < 0:
            return self.inverse() ** -exponent
        return FieldElement(self.spec, self.spec.arithmetic.power(self.value, exponent))

    def frobenius(self, times: int = 1) -> FieldElement:
        return self ** (self.spec.p**times)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.value == other.value and (
            self.spec is other.spec or self.spec == other.spec
        )

    def __hash__(self) -> int:
        return hash((self.spec.p, self.spec.degree, self.value))

    def __repr__(self) -> str:
        return f"FieldElement({self.spec}, {_format_polynomial(self.coeffs)})"


@functools.lru_cache(maxsize=None)
def make_field(p: int, degree: int) -> FieldSpec:
    if not sympy.isprime(p):
        raise NonPrimeError(f"{p} is not a prime")
    if degree < 1:
        raise ValueError(f"extension degree must be positive (got {degree})")
    if degree > MAX_DEGREE:
        raise DegreeTooLargeError(
            f"extension degree {degree} exceeds the maximum of {MAX_DEGREE}"
        )
    modulus = _smallest_irreducible(p, degree)
    _LOGGER.debug("F_%d^%d = F_%d[x]/(%s)", p, degree, p, _format_polynomial(modulus))
    return FieldSpec(p=p, degree=degree, modulus=modulus)


def _row_reduce(
    rows: typing.List[typing.List[int]], p: int
) -> typing.Tuple[typing.List[typing.List[int]], typing.List[int]]:
    domain = GF(p)
    matrix = DomainMatrix(
        [[domain(v) for v in row] for row in rows], (len(rows), len(rows[0])), domain
    )
    reduced, pivots = matrix.rref()
    return (
        [[int(v) % p for v in row] for row in reduced.to_Matrix().tolist()],
        list(pivots),
    )


AdditiveTerm = typing.Tuple[FieldElement, int]


class AdditiveMap:
    """
    F_p-linear map a -> sum(c * a^(p^e) for (c, e) in terms)

    A single row reduction of the augmented matrix [L | I] yields
    the kernel, the solutions of L(a) = b and the functionals
    annihilating the image of L.
    """

    def __init__(
        self, field: FieldSpec, terms: typing.Iterable[AdditiveTerm]
    ) -> None:
        self.field = field
        self.terms = tuple(terms)
        for coefficient, exponent in self.terms:
            if coefficient.spec != field:
                raise SpecMismatchError(f"{coefficient.spec} vs. {field}")
            assert exponent >= 0, exponent

    def __call__(self, a: FieldElement) -> FieldElement:
        total = self.field.zero
        for coefficient, exponent in self.terms:
            total = total + coefficient * a.frobenius(exponent)
        return total

    @functools.cached_property
    def _reduction(
        self,
    ) -> typing.Tuple[
        typing.List[typing.List[int]], typing.List[int], typing.List[typing.List[int]]
    ]:
        degree = self.field.degree
        columns = [self(self.field.basis_element(j)).coeffs for j in range(degree)]
        augmented = [
            [column[i] for column in columns] + [int(i == j) for j in range(degree)]
            for i in range(degree)
        ]
        rows, pivots = _row_reduce(augmented, self.field.p)
        # transform * L = reduced
        return (
            [row[:degree] for row in rows],
            [c for c in pivots if c < degree],
            [row[degree:] for row in rows],
        )

    @property
    def rank(self) -> int:
        return len(self._reduction[1])

    @functools.cached_property
    def _kernel(self) -> typing.Tuple[FieldElement, ...]:
        reduced, pivots, _ = self._reduction
        p, degree = self.field.p, self.field.degree
        basis = []
        for free in (c for c in range(degree) if c not in pivots):
            vector = [0] * degree
            vector[free] = 1
            for row, pivot in zip(reduced, pivots):
                vector[pivot] = -row[free] % p
            basis.append(FieldElement(self.field, _from_digits(vector, p)))
        return tuple(basis)

    def kernel_basis(self) -> typing.List[FieldElement]:
        return list(self._kernel)

    @functools.cached_property
    def _annihilator(self) -> typing.Tuple[typing.Tuple[int, ...], ...]:
        _, pivots, transform = self._reduction
        return tuple(tuple(row) for row in transform[len(pivots) :])

    def image_annihilator(self) -> typing.List[typing.Tuple[int, ...]]:
        """
        functionals w on coordinates with w(L(a)) = 0 for all a
        """
        return list(self._annihilator)

    def contains_digits(self, digits: typing.Sequence[int]) -> bool:
        p = self.field.p
        return all(
            sum(w * d for w, d in zip(functional, digits)) % p == 0
            for functional in self._annihilator
        )

    def in_image(self, a: FieldElement) -> bool:
        return self.contains_digits(a.coeffs)

    def solve(self, target: FieldElement) -> typing.List[FieldElement]:
        if target.spec != self.field:
            raise SpecMismatchError(f"{target.spec} vs. {self.field}")
        _, pivots, transform = self._reduction
        p, degree = self.field.p, self.field.degree
        coordinates = target.coeffs
        rhs = [sum(w * c for w, c in zip(row, coordinates)) % p for row in transform]
        if any(rhs[len(pivots) :]):
            return []
        particular = [0] * degree
        for value, pivot in zip(rhs, pivots):
            particular[pivot] = value
        kernel = [k.coeffs for k in self._kernel]
        solutions = []
        for combination in itertools.product(range(p), repeat=len(kernel)):
            vector = list(particular)
            for scalar, direction in zip(combination, kernel):
                if scalar:
                    vector = [(v + scalar * d) % p for v, d in zip(vector, direction)]
            solutions.append(FieldElement(self.field, _from_digits(vector, p)))
        return sorted(solutions, key=lambda a: a.value)


def solve_additive(
    spec: FieldSpec, terms: typing.Iterable[AdditiveTerm], target: FieldElement
) -> typing.List[FieldElement]:
    return AdditiveMap(spec, terms).solve(target)


def subfield_members(spec: FieldSpec, degree: int) -> typing.List[FieldElement]:
    """
    F_{p^degree} inside spec, as the kernel of a -> a^(p^degree) - a
    """
    if degree < 1 or spec.degree % degree:
        raise NotASubfieldDegreeError(
            f"{degree} does not divide the extension degree {spec.degree}"
        )
    return solve_additive(spec, [(spec.one, degree), (-spec.one, 0)], spec.zero)


def span_coordinates(
    field: FieldSpec, basis: typing.Sequence[FieldElement]
) -> typing.Dict[FieldElement, typing.Tuple[int, ...]]:
    """
    coordinates of every F_p-combination of basis
    """
    coordinates = {}
    for combination in itertools.product(range(field.p), repeat=len(basis)):
        element = field.zero
        for scalar, vector in zip(combination, basis):
            element = element + scalar * vector
        coordinates[element] = combination
    assert len(coordinates) == field.p ** len(basis), basis
    return coordinates
