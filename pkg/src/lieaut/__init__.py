"""Exact-arithmetic simple Lie algebras and their local-automorphism checks."""

from .chevalley import LieAlgebra, LieVec, Subspace, build, intersect, member, span
from .cyclotomic import Cyc, CyclotomicField
from .rootsystem import CartanMatrix, RootSystem, cartan

__all__ = [
    "CartanMatrix",
    "Cyc",
    "CyclotomicField",
    "LieAlgebra",
    "LieVec",
    "RootSystem",
    "Subspace",
    "build",
    "cartan",
    "intersect",
    "member",
    "span",
]

__version__ = "0.1.0"
