"""Extension of scalars from type B_n to type A_{2n-1} along Phi.

``extend`` sends P_1 to P_n and P_j (j >= 2) to P_{n-j+1} + P_{n+j-1};
a differential entry b becomes the matrix of idempotent-cut pieces
e_u Phi(1 (x) b) e_v.  The parity shift is forgotten.
"""
from __future__ import annotations

from functools import lru_cache

from .algebra import build_algebra, phi
from .complexes import Gen, ProjComplex


def vertex_image(n: int, j: int) -> list[int]:
    return [n] if j == 1 else [n - (j - 1), n + (j - 1)]


@lru_cache(maxsize=None)
def extension_table(n: int) -> dict:
    """(B basis index, source A vertex, target A vertex) -> A element."""
    B = build_algebra("B", n)
    A = build_algebra("A", 2 * n - 1)
    table = {}
    for k, b in enumerate(B.basis):
        img = phi(n, {k: B.one})
        for u in vertex_image(n, b.src):
            for v in vertex_image(n, b.tgt):
                piece = {i: c for i, c in img.items()
                         if A.basis[i].src == u and A.basis[i].tgt == v}
                if piece:
                    table[(k, u, v)] = piece
    return table


def extend(C: ProjComplex) -> ProjComplex:
    if C.alg.tag != "B":
        raise ValueError("extend expects a type B complex")
    n = C.alg.rank
    A = build_algebra("A", 2 * n - 1)
    tab = extension_table(n)
    gens, where = [], {}
    for g, gg in enumerate(C.gens):
        for u in vertex_image(n, gg.vertex):
            where[(g, u)] = len(gens)
            gens.append(Gen(u, gg.r, gg.s, 0))
    d = {}
    for (g, h), x in C.d.items():
        for u in vertex_image(n, C.gens[g].vertex):
            for v in vertex_image(n, C.gens[h].vertex):
                el = {}
                for k, c in x.items():
                    for i, a in tab.get((k, u, v), {}).items():
                        w = el.get(i, A.zero) + a * c
                        if w:
                            el[i] = w
                        else:
                            el.pop(i, None)
                if el:
                    d[(where[(g, u)], where[(h, v)])] = el
    return ProjComplex(A, gens, d)
