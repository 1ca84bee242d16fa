"""Exact computations with natural loop modules over quantum affine algebras of classical type."""

__version__ = "0.1.0"
