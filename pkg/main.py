#!/usr/bin/env python3
"""
bohrlab

Numerical realization and verification of refined Bohr inequalities:
radius solvers, Bohr-type functionals with certified tail bounds, and
randomized verification suites with sharpness witnesses.

Usage: python main.py <radius|sweep|verify|witness> [--flag value]...
"""

import sys

from src.cli import main

if __name__ == "__main__":
    sys.exit(main())
