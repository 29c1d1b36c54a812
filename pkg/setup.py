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

import pathlib

import setuptools

setuptools.setup(
    name="wildquotient",
    use_scm_version=True,
    packages=setuptools.find_packages(exclude=["tests", "tests.*"]),
    description="Library & Command Line Tool verifying the wild quotient"
    " of the Hermitian curve by its Sylow p-subgroup",
    long_description=pathlib.Path(__file__).parent.joinpath("README.md").read_text(),
    long_description_content_type="text/markdown",
    license="GPLv3+",
    keywords=[
        "Hermitian-curve",
        "Hirzebruch-Jung",
        "Swan-conductor",
        "algebraic-geometry",
        "finite-fields",
        "p-groups",
        "quotient-singularities",
        "ramification",
    ],
    classifiers=[
        # https://pypi.org/classifiers/
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: GNU General Public License v3 or later (GPLv3+)",
        "Operating System :: OS Independent",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    entry_points={
        "console_scripts": [
            "wildquotient = wildquotient._cli:main",
        ]
    },
    # >=3.8 functools.cached_property
    # >=3.9 math.lcm with arbitrarily many arguments
    python_requires=">=3.9",
    install_requires=[
        # primality, factorization, F_p row reduction, Smith normal form
        "sympy>=1.9",
        # dual graphs
        "networkx",
        # discrete logarithm tables
        "numpy",
    ],
    setup_requires=["setuptools_scm"],
    tests_require=["pytest"],
)
