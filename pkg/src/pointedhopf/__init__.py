"""Exact workbench for finite-dimensional pointed Hopf algebras over abelian groups."""

__version__ = "0.1.0"
