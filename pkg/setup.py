# This code is part of boson-star.
#
# (C) Copyright the boson-star developers 2026.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license in the LICENSE.txt file in the root directory
# of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
#
# Any modifications or derivative works of this code must retain this
# copyright notice, and modified files need to carry a notice indicating
# that they have been altered from the originals.

import setuptools
import os

long_description = """boson-star computes ground states, dynamics and small-beta asymptotics of
 boson stars with a long-range Riesz perturbation on a periodic pseudospectral grid.
 """

with open("requirements.txt") as f:
    REQUIREMENTS = f.read().splitlines()

VERSION_PATH = os.path.join(os.path.dirname(__file__), "boson_star", "VERSION.txt")
with open(VERSION_PATH, "r") as version_file:
    VERSION = version_file.read().strip()

setuptools.setup(
    name="boson-star",
    version=VERSION,
    description="Boson stars with Riesz perturbation: ground states, dynamics and asymptotics",
    long_description=long_description,
    long_description_content_type="text/markdown",
    author="boson-star developers",
    license="Apache-2.0",
    classifiers=(
        "Environment :: Console",
        "License :: OSI Approved :: Apache Software License",
        "Intended Audience :: Science/Research",
        "Operating System :: MacOS",
        "Operating System :: POSIX :: Linux",
        "Programming Language :: Python :: 3 :: Only",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Topic :: Scientific/Engineering :: Physics",
    ),
    keywords="boson star pseudospectral hartree riesz ground state",
    packages=setuptools.find_packages(include=["boson_star", "boson_star.*"]),
    install_requires=REQUIREMENTS,
    include_package_data=True,
    package_data={"boson_star": ["VERSION.txt"]},
    python_requires=">=3.8",
    entry_points={"console_scripts": ["boson-star=boson_star.cli.main:main"]},
    zip_safe=False,
)
