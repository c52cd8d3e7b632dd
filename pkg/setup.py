#!/usr/bin/env python3
"""
Setup script for the tracebench workbench.
"""

from setuptools import setup, find_packages
from pathlib import Path

# Read the README file
this_directory = Path(__file__).parent
long_description = (this_directory / "README.md").read_text(encoding="utf-8")

# Read version from __init__.py
def get_version():
    """Extract version from __init__.py"""
    init_file = this_directory / "tracebench" / "__init__.py"
    for line in init_file.read_text().splitlines():
        if line.startswith("__version__"):
            return line.split('"')[1]
    raise RuntimeError("Unable to find version string in __init__.py")

setup(
    name="tracebench",
    version=get_version(),
    author="Tracebench Contributors",
    author_email="",
    description="Executable workbench for trace properties of instrumented libraries",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=find_packages(exclude=["tests", "tests.*"]),
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "Topic :: Software Development :: Testing",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12",
        "Operating System :: OS Independent",
    ],
    python_requires=">=3.9",
    install_requires=[
        "pydantic>=2.0.0",
        "click>=8.0.0",
        "python-dotenv>=0.19.0",
    ],
    extras_require={
        "yaml": ["PyYAML>=5.4.0"],  # For YAML config support
        "dev": [
            "pytest>=7.0.0",
            "pytest-cov>=4.1.0",
            "hypothesis>=6.0.0",
            "PyYAML>=5.4.0",
        ],
    },
    entry_points={
        "console_scripts": [
            "tracebench=tracebench.cli:main",
        ],
    },
    keywords=[
        "trace properties",
        "runtime verification",
        "separation logic",
        "monitoring",
        "instrumentation",
    ],
)
