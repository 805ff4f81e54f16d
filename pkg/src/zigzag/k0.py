"""Grothendieck group classes and the induced braid representations.

Conventions: [C[1]] = -[C], [C{1}] = q[C], [C<1>] = s[C].  In type B the
coordinates at vertices j >= 2 are reduced by s -> 1.
"""
from __future__ import annotations

from .algebra import build_algebra
from .arith import GradedLaurent
from .complexes import ProjComplex, projective
from .functors import apply_generator, parse_word, psi


def _tag(kind: str) -> str:
    return "KB" if kind.upper() == "B" else "KA"


def k0_class(C: ProjComplex) -> list[GradedLaurent]:
    """Coordinates indexed by vertex 1..m (list position j-1)."""
    tag = _tag(C.alg.tag)
    vec = [GradedLaurent.zero(tag) for _ in range(C.alg.nvert)]
    for g in C.gens:
        sign = -1 if g.r % 2 else 1
        if tag == "KB":
            t = g.t if g.vertex == 1 else 0
            mono = GradedLaurent.monomial(tag, (g.s, t), sign)
        else:
            mono = GradedLaurent.monomial(tag, (g.s,), sign)
        vec[g.vertex - 1] = vec[g.vertex - 1] + mono
    return vec


def reduce_s(p: GradedLaurent) -> GradedLaurent:
    """Image of a KB polynomial under s -> 1, as a KA polynomial."""
    out = {}
    for (a, _), c in p.terms.items():
        out[(a,)] = out.get((a,), 0) + c
    return GradedLaurent("KA", out)


def rep_matrix(kind: str, m: int, j: int) -> list[list[GradedLaurent]]:
    """Matrix of sigma_j (j < 0 for inverses) on K_0; column k is the class
    of sigma_j(P_k), computed through the functor."""
    alg = build_algebra(kind.upper(), m)
    cols = [k0_class(apply_generator(projective(alg, k), j)) for k in range(1, m + 1)]
    return [[cols[c][r] for c in range(m)] for r in range(m)]


def mat_mul(A, B):
    tag = A[0][0].tag
    n, k, m = len(A), len(B), len(B[0])
    out = [[GradedLaurent.zero(tag) for _ in range(m)] for _ in range(n)]
    for i in range(n):
        for t in range(k):
            a = A[i][t]
            if not a:
                continue
            for j in range(m):
                if B[t][j]:
                    out[i][j] = out[i][j] + a * B[t][j]
    return out


def identity(tag: str, m: int):
    return [[GradedLaurent.one(tag) if i == j else GradedLaurent.zero(tag)
             for j in range(m)] for i in range(m)]


def word_matrix(kind: str, m: int, word) -> list[list[GradedLaurent]]:
    """Matrix of the word acting left to right: rho(w) = rho(w_k)...rho(w_1)."""
    M = identity(_tag(kind), m)
    for x in parse_word(word):
        M = mat_mul(rep_matrix(kind, m, x), M)
    return M


def reduce_matrix(M):
    """Apply s -> 1 to a KB matrix."""
    return [[reduce_s(x) for x in row] for row in M]


def canonical_b(M):
    """Reduce rows j >= 2 of a KB matrix by s -> 1 (kept in the KB ring)."""
    out = []
    for r, row in enumerate(M):
        if r == 0:
            out.append(list(row))
        else:
            out.append([_lift(reduce_s(x)) for x in row])
    return out


def _lift(p: GradedLaurent) -> GradedLaurent:
    return GradedLaurent("KB", {(a, 0): c for (a,), c in p.terms.items()})


def tensor_matrix(n: int) -> list[list[GradedLaurent]]:
    """K_0 of extension of scalars, from the classes of extend(P_j)."""
    from .extension import extend

    B = build_algebra("B", n)
    cols = [k0_class(extend(projective(B, j))) for j in range(1, n + 1)]
    return [[cols[c][r] for c in range(n)] for r in range(2 * n - 1)]


def iota_matrix(n: int) -> list[list[GradedLaurent]]:
    """Coordinates of the homological comparison map: xi_1 -> gamma_n,
    xi_j -> gamma_{n-(j-1)} + gamma_{n+(j-1)}."""
    M = [[GradedLaurent.zero("KA") for _ in range(n)] for _ in range(2 * n - 1)]
    one = GradedLaurent.one("KA")
    for j in range(1, n + 1):
        for v in ({n} if j == 1 else {n - (j - 1), n + (j - 1)}):
            M[v - 1][j - 1] = one
    return M


def listed_rows(kind: str, m: int, j: int) -> dict:
    """Nontrivial row of the tabulated generator matrices, read block-locally:
    {column: polynomial} for row j; all other rows are identity rows."""
    q = GradedLaurent.var(_tag(kind), "q")
    one = GradedLaurent.one(_tag(kind))
    if kind.upper() == "B":
        s = GradedLaurent.var("KB", "s")
        n = m
        if j == 1:
            return {1: -(s * q), 2: -(one + s)}
        if j == n:
            return {n - 1: -q, n: -q}
        return {j - 1: -q, j: -q, j + 1: -one}
    n = (m + 1) // 2
    if j == 1:
        return {1: -q, 2: -q}
    if j == m:
        return {m - 1: -q, m: -q}
    if j < n:
        return {j - 1: -one, j: -q, j + 1: -q}
    if j == n:
        return {j - 1: -one, j: -q, j + 1: -one}
    return {j - 1: -q, j: -q, j + 1: -one}


def compare_listed(kind: str, m: int, j: int) -> list[str]:
    """Entrywise mismatches between the functor matrix and the tabulated one."""
    M = rep_matrix(kind, m, j)
    if kind.upper() == "B":
        M = canonical_b(M)
    tag = _tag(kind)
    row = listed_rows(kind, m, j)
    bad = []
    for r in range(1, m + 1):
        for c in range(1, m + 1):
            if r == j:
                want = row.get(c, GradedLaurent.zero(tag))
            else:
                want = GradedLaurent.one(tag) if r == c else GradedLaurent.zero(tag)
            if M[r - 1][c - 1] != want:
                bad.append(f"({r},{c}): functor {M[r - 1][c - 1]} vs listed {want}")
    return bad


def check_decat_square(n: int) -> dict:
    """T rho_KB(sigma)|_{s=1} = rho_KA(Psi(sigma)) T for every generator."""
    T = tensor_matrix(n)
    report = {"n": n, "T_equals_iota": T == iota_matrix(n), "generators": {}}
    ok = report["T_equals_iota"]
    for j in range(1, n + 1):
        for sgn in (1, -1):
            x = sgn * j
            lhs = mat_mul(T, reduce_matrix(rep_matrix("B", n, x)))
            rhs = mat_mul(word_matrix("A", 2 * n - 1, psi([x], n)), T)
            good = lhs == rhs
            report["generators"][str(x)] = good
            ok = ok and good
    report["ok"] = ok
    return report


def matrix_to_json(M):
    return [[str(x) for x in row] for row in M]
