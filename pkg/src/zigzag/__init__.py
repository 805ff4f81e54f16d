"""Zigzag algebras of types A and B, their braid group actions on complexes of
projective modules, and the curve calculus on the punctured disc that computes
the same invariants combinatorially."""

from .algebra import build_algebra, phi
from .arith import GaussRational, GradedLaurent
from .complexes import ProjComplex, is_isomorphic, minimize, projective, sum_of_projectives
from .extension import extend
from .functors import apply_TL, apply_generator, apply_word, psi
from .homology import poincare

__all__ = [
    "build_algebra", "phi", "GaussRational", "GradedLaurent", "ProjComplex",
    "is_isomorphic", "minimize", "projective", "sum_of_projectives", "extend",
    "apply_TL", "apply_generator", "apply_word", "psi", "poincare",
]
