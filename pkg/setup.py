# Copyright (c) 2021 The fcab developers.
#
# Licensed under the EUROPEAN UNION PUBLIC LICENCE v. 1.2
#
# SPDX-License-Identifier: EUPL-1.2
#
from setuptools import setup, find_packages

setup(
    name="fcab",
    version="0.1.0",
    packages=find_packages(include=["fcab", "fcab.*"]),
    python_requires=">=3.9",
    install_requires=[
        "numpy>=1.22",
        "scipy>=1.9",
        "pydantic>=2.0,<3",
    ],
    extras_require={
        "dev": ["pytest", "pytest-cov", "mypy"],
    },
    entry_points={
        "console_scripts": ["fcab=fcab.main:main"],
    },
)
