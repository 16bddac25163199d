"""Graded Lie superalgebra cohomology with trivial coefficients."""

__version__ = "0.1.0"
