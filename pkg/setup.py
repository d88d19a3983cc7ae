#!/usr/bin/env python3
"""Setup script for Clifford Supermorita."""

from setuptools import setup, find_packages

with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

setup(
    name="clifford-supermorita",
    version="1.0.0",
    author="clifford-supermorita Contributors",
    description="Exact graded Morita classification of Clifford superalgebras",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=find_packages(exclude=["tests", "tests.*", "examples", "examples.*"]),
    py_modules=["main", "compare_tables"],
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
        "License :: OSI Approved :: MIT License",
    ],
    python_requires=">=3.10",
    install_requires=[
        "sympy>=1.12",
    ],
    extras_require={
        "test": ["pytest>=7.0", "hypothesis>=6.0", "jsonschema>=4.0"],
    },
    entry_points={
        "console_scripts": [
            "supermorita=main:main",
            "supermorita-compare=compare_tables:main",
        ],
    },
    include_package_data=True,
    zip_safe=False,
)
