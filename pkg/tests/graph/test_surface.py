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
from wildquotient.exceptions import CrossCheckFailureError


@pytest.mark.parametrize(
    ("q", "e", "k2", "rho", "components", "rank"),
    ((2, 12, 0, 10, 8, 1), (3, 18, -6, 16, 13, 2), (4, 26, -14, 24, 20, 3)),
)
def test_surface_invariants(q, e, k2, rho, components, rank):
    invariants = wildquotient.graph.surface_invariants(q)
    assert invariants.e == e
    assert invariants.K2 == k2
    assert invariants.rho == rho
    assert invariants.components_c == components
    assert invariants.mw_rank_r == rank
    assert invariants.e + invariants.K2 == 12


def test_surface_invariants_given_inputs():
    invariants = wildquotient.graph.surface_invariants(
        5, swan_conductor=24, mordell_weil_rank=4
    )
    assert (invariants.e, invariants.K2, invariants.rho) == (36, -24, 34)


@pytest.mark.parametrize(
    ("swan_conductor", "mordell_weil_rank"), ((0, None), (3, 0), (4, 2))
)
def test_surface_invariants_cross_check(swan_conductor, mordell_weil_rank):
    with pytest.raises(CrossCheckFailureError):
        wildquotient.graph.surface_invariants(
            2, swan_conductor=swan_conductor, mordell_weil_rank=mordell_weil_rank
        )
