"""Exact-arithmetic workbench for quiver cluster algebras."""

__version__ = "0.1.0"
