"""Exact sparse linear algebra over Q and Q(i).

Matrices are dicts ``{(row, col): scalar}`` with Fraction or GaussRational
entries; the heavy lifting is done by sympy's ``DomainMatrix``.
"""
from __future__ import annotations

from fractions import Fraction

from sympy.polys.domains import QQ, QQ_I
from sympy.polys.matrices import DomainMatrix

from .arith import GaussRational


def _field(entries, gauss):
    if gauss is None:
        gauss = any(isinstance(v, GaussRational) for v in entries)
    return QQ_I if gauss else QQ


def _to_dom(x, K):
    if isinstance(x, GaussRational):
        if K is QQ:
            if x.im:
                raise ValueError("complex entry in a rational matrix")
            return QQ(x.re.numerator, x.re.denominator)
        return QQ_I(QQ(x.re.numerator, x.re.denominator),
                    QQ(x.im.numerator, x.im.denominator))
    x = Fraction(x)
    q = QQ(x.numerator, x.denominator)
    return q if K is QQ else QQ_I(q, 0)


def _from_dom(x, K):
    if K is QQ:
        return Fraction(int(x.numerator), int(x.denominator))
    return GaussRational(Fraction(int(x.x.numerator), int(x.x.denominator)),
                         Fraction(int(x.y.numerator), int(x.y.denominator)))


def to_domain_matrix(M: dict, shape, gauss=None) -> DomainMatrix:
    K = _field(M.values(), gauss)
    rows: dict = {}
    for (i, j), v in M.items():
        if v:
            rows.setdefault(i, {})[j] = _to_dom(v, K)
    return DomainMatrix(rows, shape, K)


def rank(M: dict, shape, gauss=None) -> int:
    if shape[0] == 0 or shape[1] == 0 or not M:
        return 0
    return to_domain_matrix(M, shape, gauss).rank()


def nullspace(M: dict, shape, gauss=None) -> list[dict]:
    """Basis of {x : M x = 0}, each vector a dict col -> scalar."""
    nrows, ncols = shape
    if ncols == 0:
        return []
    if nrows == 0 or not M:
        one = GaussRational(1) if gauss else Fraction(1)
        return [{j: one} for j in range(ncols)]
    D = to_domain_matrix(M, shape, gauss)
    K = D.domain
    N = D.nullspace().to_sdm()
    return [{j: _from_dom(v, K) for j, v in row.items()} for _, row in sorted(N.items())]


def inverse(M: dict, size: int, gauss=None) -> dict | None:
    """Inverse of a square matrix, or None if singular."""
    if size == 0:
        return {}
    D = to_domain_matrix(M, (size, size), gauss)
    if D.rank() < size:
        return None
    K = D.domain
    inv = D.inv().to_sdm()
    return {(i, j): _from_dom(v, K) for i, row in inv.items() for j, v in row.items()}
