"""Internal HOM complexes and their Poincare polynomials.

A basis morphism of HOM(C, D) is a triple (c, d, a): generator c of C,
generator d of D, and a basis path a from c.vertex to d.vertex.  Its
trigrading is

    s1 = d.r - c.r,   s2 = deg a + d.s - c.s,   s3 = z2(a) + d.t - c.t,

and the differential is d(f) = d_D o f - (-1)^s1 f o d_C.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .arith import GradedLaurent
from .complexes import ProjComplex


@dataclass
class HomComplex:
    alg: object
    basis: list          # (c, d, a, (s1, s2, s3))
    pieces: dict         # (s1, s2, s3) -> list of basis positions
    diff: dict           # (s1, s2, s3) -> sparse matrix {(row, col): scalar}

    def graded_dims(self):
        return {k: len(v) for k, v in self.pieces.items()}


def hom_complex(C: ProjComplex, D: ProjComplex) -> HomComplex:
    alg = C.alg
    if alg.tag != D.alg.tag or alg.rank != D.alg.rank:
        raise ValueError("HOM between complexes over different algebras")
    B = alg.tag == "B"
    basis = []
    for ci, c in enumerate(C.gens):
        for di, d in enumerate(D.gens):
            for k in alg.hom_basis(c.vertex, d.vertex):
                b = alg.basis[k]
                deg = (d.r - c.r, b.deg + d.s - c.s, (b.z2 + d.t - c.t) % 2 if B else 0)
                basis.append((ci, di, k, deg))
    pos = {(ci, di, k): n for n, (ci, di, k, _) in enumerate(basis)}
    pieces: dict = {}
    for n, (_, _, _, deg) in enumerate(basis):
        pieces.setdefault(deg, []).append(n)
    local = {n: i for piece in pieces.values() for i, n in enumerate(piece)}

    dD: dict = {}
    for (i, j), a in D.d.items():
        dD.setdefault(i, []).append((j, a))
    dC_in: dict = {}
    for (i, j), a in C.d.items():
        dC_in.setdefault(j, []).append((i, a))

    diff: dict = {}
    for n, (ci, di, k, deg) in enumerate(basis):
        s1 = deg[0]
        sign = -1 if s1 % 2 else 1
        M = diff.setdefault(deg, {})
        f = {k: alg.one}
        for dj, a in dD.get(di, ()):
            for kk, v in alg.mul(f, a).items():
                row = local[pos[(ci, dj, kk)]]
                M[(row, local[n])] = M.get((row, local[n]), 0) + v
        for cj, a in dC_in.get(ci, ()):
            for kk, v in alg.mul(a, f).items():
                row = local[pos[(cj, di, kk)]]
                M[(row, local[n])] = M.get((row, local[n]), 0) - sign * v
    return HomComplex(alg, basis, pieces, diff)


def cohomology_dims(H: HomComplex) -> dict:
    """(s1, s2, s3) -> dimension of the cohomology."""
    gauss = H.alg.tag == "A"
    ranks = {}
    for deg, piece in H.pieces.items():
        tgt = (deg[0] + 1, deg[1], deg[2])
        rows = len(H.pieces.get(tgt, ()))
        M = {k: v for k, v in H.diff.get(deg, {}).items() if v}
        ranks[deg] = linalg.rank(M, (rows, len(piece)), gauss=gauss) if rows else 0
    out = {}
    for deg, piece in H.pieces.items():
        src = (deg[0] - 1, deg[1], deg[2])
        dim = len(piece) - ranks[deg] - ranks.get(src, 0)
        if dim:
            out[deg] = dim
    return out


def poincare(C: ProjComplex, D: ProjComplex) -> GradedLaurent:
    """Sum of q1^s1 q2^s2 q3^s3 times the cohomology dimensions of HOM(C, D);
    TRI-tagged for type B, BI-tagged for type A."""
    dims = cohomology_dims(hom_complex(C, D))
    if C.alg.tag == "B":
        return GradedLaurent("TRI", dims)
    out = {}
    for (a, b, _), v in dims.items():
        out[(a, b)] = out.get((a, b), 0) + v
    return GradedLaurent("BI", out)


def euler_pairing(C: ProjComplex, D: ProjComplex) -> GradedLaurent:
    """Graded Euler characteristic of HOM(C, D) from the chain groups."""
    H = hom_complex(C, D)
    tag = "TRI" if C.alg.tag == "B" else "BI"
    out = {}
    for (s1, s2, s3), piece in H.pieces.items():
        key = (0, s2, s3) if tag == "TRI" else (0, s2)
        out[key] = out.get(key, 0) + (-1) ** (s1 % 2) * len(piece)
    return GradedLaurent(tag, out)
