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
Desk-scale verification of the quotient of the Hermitian curve
y^q - y = x^{q+1} by its Sylow p-subgroup G of order q^3.

>>> import wildquotient
>>> wildquotient.verify(2).overall
True
"""

from wildquotient.group import build_group
from wildquotient.report import Report, verify

__all__ = ["Report", "build_group", "verify"]
