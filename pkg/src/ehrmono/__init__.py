"""Exact weighted Ehrhart theory and monodromy invariants of Newton data."""

from .groupring import GroupRingElement, TorsionClass
from .polynomials import FractionalPolynomial, Polynomial

__all__ = ["GroupRingElement", "TorsionClass", "Polynomial", "FractionalPolynomial"]
