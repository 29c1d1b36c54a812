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
Invalid input raises a subclass of ValueError,
a failed verification raises a subclass of VerificationError.
"""

from __future__ import annotations


class NonPrimeError(ValueError):
    pass


class DegreeTooLargeError(ValueError):
    pass


class NotASubfieldDegreeError(ValueError):
    pass


class SpecMismatchError(ValueError):
    pass


class DivisionByZeroError(ZeroDivisionError):
    pass


class NotAPrimePowerError(ValueError):
    pass


class DeskScaleError(ValueError):
    pass


class AmbientFieldTooSmallError(ValueError):
    pass


class NotInMultiplicativeGroupError(ValueError):
    pass


class FieldTooLargeError(ValueError):
    pass


class PrecisionTooSmallError(ValueError):
    pass


class NotCoprimeError(ValueError):
    pass


class OutOfRangeError(ValueError):
    pass


class InvalidEntryError(ValueError):
    pass


class NotNegativeDefiniteError(ValueError):
    pass


class NonIntegralSelfIntersectionError(ValueError):
    pass


class PrecisionExhaustedError(RuntimeError):
    def __init__(self, precision: int) -> None:
        super().__init__(f"series vanishes modulo u^{precision}")
        self.precision = precision


class VerificationError(RuntimeError):
    """
    A computed quantity contradicts the statement being verified.
    At desk scale this always points to an arithmetic bug.
    """


class StructureViolationError(VerificationError):
    pass


class MismatchAtLevelError(VerificationError):
    def __init__(self, f: int, observed: int, expected: int) -> None:
        super().__init__(
            f"#C(F_(q^{2 * f})) = {observed}, predicted {expected} (level f={f})"
        )
        self.f = f
        self.observed = observed
        self.expected = expected


class ActionViolationError(VerificationError):
    pass


class LefschetzMismatchError(VerificationError):
    pass


class AuditFailureError(VerificationError):
    pass


class CrossCheckFailureError(VerificationError):
    pass


class NonIntegralSwanError(VerificationError):
    pass


class NonIntegralDimensionError(VerificationError):
    pass
