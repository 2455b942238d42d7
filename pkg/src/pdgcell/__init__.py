"""Exact-arithmetic workbench for cyclotomic nilHecke algebras, quiver Schur
algebras, and Webster-algebra blocks with p-differentials over F_p."""

__version__ = "0.1.0"
