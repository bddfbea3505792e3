#!/usr/bin/env python3
"""
Package setup for the quantum solvable algebra toolkit.
Installs the library packages and the qsolv command.
"""

from pathlib import Path

from setuptools import find_packages, setup


def read_requirements():
    """Runtime requirements from requirements.txt (the testing section is left to extras)."""
    requirements = []
    for line in Path(__file__).with_name("requirements.txt").read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if line.startswith("# Testing"):
            break
        if line and not line.startswith("#"):
            requirements.append(line)
    return requirements


setup(
    name="qsolv",
    version="0.1.0",
    description="Exact arithmetic for quantum solvable algebras at roots of unity",
    long_description=Path(__file__).with_name("README.md").read_text(encoding="utf-8"),
    long_description_content_type="text/markdown",
    python_requires=">=3.10",
    packages=find_packages(exclude=["tests", "tests.*", "examples", "examples.*"]),
    install_requires=read_requirements(),
    extras_require={
        "dev": ["pytest>=7.0.0", "pytest-cov>=4.1.0", "black>=23.0.0", "isort>=5.12.0", "mypy>=1.0.0"],
    },
    entry_points={
        "console_scripts": [
            "qsolv=cli.main:main",
        ],
    },
)
