"""Tropical moduli computations: Bergman fans of reflection arrangements and
their images under monomial maps."""

__version__ = "0.1.0"
