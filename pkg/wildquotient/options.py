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

import enum


class FieldKind(enum.Enum):
    """
    coefficient field K of characteristic zero for irreducible representations
    """

    COMPLEX = "complex"
    # K contains the p-th roots of unity
    CONTAINS_MU_P = "contains_mu_p"
    # K contains no primitive p-th root of unity, e.g. the rationals
    NO_MU_P = "no_mu_p"


class ClaimStatus(enum.Enum):

    PASS = "pass"
    FAIL = "fail"


class ActionConvention(enum.Enum):
    """
    how composing power series maps relates to the group law
    """

    # acting by sigma, then by tau equals acting by mul(tau, sigma)
    OPPOSITE = "opposite"
    # acting by sigma, then by tau equals acting by mul(sigma, tau)
    COMPOSITION = "composition"


class CurveModel(enum.Enum):
    """
    equation whose rational points are counted
    """

    # y^q - y = x^{q+1}, the curve G acts on
    LITERAL = "literal"
    # y^q + y = x^{q+1}, maximal over F_{q^2}; both models agree for p = 2
    # and become isomorphic over F_{q^4} for odd p
    MAXIMAL = "maximal"
