"""Named verification suites.

Every suite returns a list of case records ``{"suite", "tag", "case", "ok"}``
where ``tag`` names the statement being checked.  The two sides of each
check are computed by independent parts of the package (functors against
curves, functor matrices against tabulated blocks, and so on).
"""
from __future__ import annotations

import itertools
import random

from . import curves as cv
from .algebra import build_algebra, phi, phi_table
from .arith import GaussRational, GradedLaurent, lp_specialize
from .complexes import direct_sum, is_isomorphic, projective, shift, sum_of_projectives
from .extension import extend
from .functors import (apply_TL_word, apply_generator, apply_word, braid_relations,
                       free_reduce, psi, tl_algebra)
from .homology import poincare
from .k0 import (canonical_b, check_decat_square, rep_matrix, word_matrix)
from .linalg import rank as mat_rank


def _rec(suite, tag, case, ok, **extra):
    r = {"suite": suite, "tag": tag, "case": case, "ok": bool(ok)}
    r.update(extra)
    return r


def random_word(rng, n, max_len, min_len=0):
    return [rng.choice((1, -1)) * rng.randint(1, n)
            for _ in range(rng.randint(min_len, max_len))]


def _w(word):
    return " ".join(str(x) for x in word) or "e"


# algebras -------------------------------------------------------------------

def suite_algebra(rank, side="b", seed=0):
    """Dimensions, listed relations and associativity, both types."""
    out = []
    n = rank
    for tag, m in (("B", n), ("A", 2 * n - 1)):
        alg = build_algebra(tag, m)
        out.append(_rec("algebra", "dimension", f"{tag}{m}", alg.dim() == 8 * n - 6,
                        value=alg.dim()))
        N = alg.dim()
        assoc = all(
            alg.mul(alg.mul({a: alg.one}, {b: alg.one}), {c: alg.one})
            == alg.mul({a: alg.one}, alg.mul({b: alg.one}, {c: alg.one}))
            for a in range(N) for b in range(N) for c in range(N))
        out.append(_rec("algebra", "associativity", f"{tag}{m}", assoc))
        unit = {}
        for j in range(1, alg.nvert + 1):
            unit.update(alg.e(j))
        ok = all(alg.mul(unit, {a: alg.one}) == {a: alg.one} == alg.mul({a: alg.one}, unit)
                 for a in range(N))
        out.append(_rec("algebra", "idempotents-sum-to-one", f"{tag}{m}", ok))
        for name, lhs, rhs in _relations(alg):
            out.append(_rec("algebra", "relation", f"{tag}{m}: {name}", lhs == rhs))
    return out


def _relations(alg):
    mul, m = alg.mul, alg.nvert
    ar = alg.arrow
    rels = []
    for j in range(2, m):
        rels.append((f"({j}|{j+1}|{j})=({j}|{j-1}|{j})",
                     mul(ar(j, j + 1), ar(j + 1, j)), mul(ar(j, j - 1), ar(j - 1, j))))
    for j in range(1, m - 1):
        rels.append((f"({j}|{j+1}|{j+2})=0", mul(ar(j, j + 1), ar(j + 1, j + 2)), {}))
        rels.append((f"({j+2}|{j+1}|{j})=0", mul(ar(j + 2, j + 1), ar(j + 1, j)), {}))
    if alg.tag == "B":
        for j in range(2, m + 1):
            ie = alg.ie(j)
            rels.append((f"(ie{j})^2=-e{j}", mul(ie, ie), {k: -v for k, v in alg.e(j).items()}))
            rels.append((f"(ie{j})X{j}=X{j}(ie{j})", mul(ie, alg.X(j)), mul(alg.X(j), ie)))
        for j in range(3, m + 1):
            rels.append((f"(ie{j-1})({j-1}|{j})=({j-1}|{j})(ie{j})",
                         mul(alg.ie(j - 1), ar(j - 1, j)), mul(ar(j - 1, j), alg.ie(j))))
        rels.append(("(1|2)(ie2)(2|1)=0", mul(mul(ar(1, 2), alg.ie(2)), ar(2, 1)), {}))
    return rels


def suite_phi(rank, side="b", seed=0):
    """Multiplicativity, grading and bijectivity of Phi."""
    n = rank
    B = build_algebra("B", n)
    A = build_algebra("A", 2 * n - 1)
    tab = phi_table(n)
    i = GaussRational(0, 1)
    span = [(c, k) for k in range(B.dim()) for c in (GaussRational(1), i)]
    mult = True
    for (c1, a), (c2, b) in itertools.product(span, repeat=2):
        lhs = A.mul(phi(n, (c1, {a: B.one})), phi(n, (c2, {b: B.one})))
        rhs = phi(n, (c1 * c2, B.mul({a: B.one}, {b: B.one})))
        if lhs != rhs:
            mult = False
            break
    grading = all({A.basis[i].deg for i in tab[k]} == {B.basis[k].deg}
                  for k in range(B.dim()))
    M = {(r, c): v for r, img in enumerate(tab) for c, v in img.items()}
    bij = mat_rank(M, (B.dim(), A.dim()), gauss=True) == A.dim() == B.dim()
    return [_rec("phi", "multiplicative", f"n={n}", mult),
            _rec("phi", "grading-preserving", f"n={n}", grading),
            _rec("phi", "bijective", f"n={n}", bij)]


# braid actions --------------------------------------------------------------

def suite_braid_relations(rank, side="b", seed=0):
    """Artin relations and R_j R_j' = id on the sum of projectives."""
    tag = side.upper()
    m = rank if tag == "B" else 2 * rank - 1
    P = sum_of_projectives(build_algebra(tag, m))
    out = []
    for label, lhs, rhs in braid_relations(tag, m):
        v = is_isomorphic(apply_word(lhs, P), apply_word(rhs, P)).verdict
        out.append(_rec("braid-relations", "braid-relation", f"{tag}{m}: {label}",
                        v == "yes", verdict=v))
    for j in range(1, m + 1):
        for w in ([j, -j], [-j, j]):
            v = is_isomorphic(apply_word(w, P), P).verdict
            out.append(_rec("braid-relations", "inverse", f"{tag}{m}: {_w(w)}",
                            v == "yes", verdict=v))
    return out


def suite_type_b_relation(rank=2, side="b", seed=0):
    """R2 R1 R2 (P1) = P1{1}<1> up to a cohomological shift (bare R1)."""
    B = build_algebra("B", 2)
    C = apply_word([2, 1, 2], projective(B, 1), twist_b1=False)
    gens = C.gens
    ok = len(gens) == 1 and (gens[0].vertex, gens[0].s, gens[0].t % 2) == (1, 1, 1)
    r = gens[0].r if len(gens) == 1 else None
    if ok:
        ok = is_isomorphic(C, projective(B, 1, r, 1, 1)).verdict == "yes"
    return [_rec("type-b-relation", "type-b-relation", "R2R1R2(P1)", ok,
                 result=[list(g) for g in gens])]


def suite_tensor_equivariant(rank, side="b", seed=0, samples=50, max_len=4):
    """extend(w C) = Psi(w) extend(C) for C = P_j and random words."""
    n = rank
    rng = random.Random(seed)
    B = build_algebra("B", n)
    out = []
    for _ in range(samples):
        w = random_word(rng, n, max_len)
        for j in range(1, n + 1):
            P = projective(B, j)
            lhs = extend(apply_word(w, P))
            rhs = apply_word(psi(w, n), extend(P))
            v = is_isomorphic(lhs, rhs).verdict
            out.append(_rec("tensor-equivariant", "tensor-equivariant",
                            f"n={n} j={j} w={_w(w)}", v == "yes", verdict=v))
    return out


def suite_faithful(rank=2, side="b", seed=0, max_len=3):
    """Nontrivial reduced words of bounded length move the sum of projectives."""
    n = rank
    P = sum_of_projectives(build_algebra("B", n))
    letters = [x for j in range(1, n + 1) for x in (j, -j)]
    out = []
    for L in range(1, max_len + 1):
        for w in itertools.product(letters, repeat=L):
            if free_reduce(w) != list(w):
                continue
            v = is_isomorphic(apply_word(w, P), P).verdict
            out.append(_rec("faithful-action", "faithful-action", f"n={n} w={_w(w)}",
                            v == "no", verdict=v))
    return out


def suite_tl(rank, side="b", seed=0):
    """The four U-relations on the sum of projectives, path length grading."""
    n = rank
    P = sum_of_projectives(tl_algebra(n))
    U = lambda w: apply_TL_word(w, P)  # noqa: E731
    out = []
    for j in range(1, n + 1):
        v = is_isomorphic(U([j, j]), direct_sum(shift(U([j]), 0, 1, 0),
                                                shift(U([j]), 0, -1, 0))).verdict
        out.append(_rec("tl-relations", "U_j^2", f"n={n} j={j}", v == "yes"))
    for i, j in itertools.permutations(range(1, n + 1), 2):
        if abs(i - j) > 1:
            out.append(_rec("tl-relations", "U_iU_j=0", f"n={n} {i},{j}", U([i, j]).is_zero()))
        elif i > 1 and j > 1:
            v = is_isomorphic(U([i, j, i]), U([i])).verdict
            out.append(_rec("tl-relations", "U_iU_jU_i=U_i", f"n={n} {i},{j}", v == "yes"))
    for i, j in ((1, 2), (2, 1)):
        X = U([i, j])
        v = is_isomorphic(U([i, j, i, j]), direct_sum(X, X)).verdict
        out.append(_rec("tl-relations", "U_iU_jU_iU_j=2U_iU_j", f"n={n} {i},{j}", v == "yes"))
    return out


# K_0 -----------------------------------------------------------------------

def suite_k0(rank, side="b", seed=0):
    n = rank
    out = []
    q = GradedLaurent.var("KB", "q")
    s = GradedLaurent.var("KB", "s")
    one, zero = GradedLaurent.one("KB"), GradedLaurent.zero("KB")
    for tag, m in (("B", n), ("A", 2 * n - 1)):
        norm = canonical_b if tag == "B" else (lambda M: M)
        for label, lhs, rhs in braid_relations(tag, m):
            ok = norm(word_matrix(tag, m, lhs)) == norm(word_matrix(tag, m, rhs))
            out.append(_rec("k0", "matrix-braid-relation", f"{tag}{m}: {label}", ok))
    M1 = canonical_b(rep_matrix("B", n, 1))
    block = [[M1[r][c] for c in range(2)] for r in range(2)]
    out.append(_rec("k0", "rho_KB(sigma_1) block", f"n={n}",
                    block == [[-(s * q), -(one + s)], [zero, one]]))
    Mn = canonical_b(rep_matrix("B", n, n))
    block = [[Mn[r][c] for c in (n - 2, n - 1)] for r in (n - 2, n - 1)]
    out.append(_rec("k0", "rho_KB(sigma_n) block", f"n={n}",
                    block == [[one, zero], [-q, -q]]))
    rep = check_decat_square(n)
    out.append(_rec("k0", "decat-square", f"n={n}", rep["ok"]))
    return out


# curves ----------------------------------------------------------------------

def suite_lb_equivariant(rank, side="b", seed=0, samples=50, max_len=3):
    """L_B(w b_j) = w L_B(b_j)."""
    n = rank
    rng = random.Random(seed)
    out = []
    for _ in range(samples):
        w = random_word(rng, n, max_len)
        for j in range(1, n + 1):
            b = cv.basic_curve(n, j)
            v = is_isomorphic(cv.build_LB(cv.act_word(w, b)),
                              apply_word(w, cv.build_LB(b))).verdict
            out.append(_rec("lb-equivariant", "L_B-equivariant", f"n={n} j={j} w={_w(w)}",
                            v == "yes", verdict=v))
    return out


def suite_diagram_commutes(rank, side="b", seed=0, max_len=3):
    """extend(L_B(c)) = L_A(lift(c)) over all words of bounded length."""
    n = rank
    letters = [x for j in range(1, n + 1) for x in (j, -j)]
    seen, out = set(), []
    for L in range(max_len + 1):
        for w in itertools.product(letters, repeat=L):
            for j in range(1, n + 1):
                c = cv.act_word(w, cv.basic_curve(n, j))
                key = c.shape() + (tuple(c.mus),)
                if key in seen:
                    continue
                seen.add(key)
                v = is_isomorphic(extend(cv.build_LB(c)), cv.build_LA(cv.lift(c))).verdict
                out.append(_rec("diagram-commutes", "diagram-commutes",
                                f"n={n} j={j} w={_w(w)}", v == "yes", verdict=v))
    return out


def suite_intersection(rank, side="b", seed=0, samples=100, max_len=3):
    """Trigraded intersection numbers against Poincare polynomials of HOM."""
    n = rank
    rng = random.Random(seed)
    B = build_algebra("B", n)
    out = []
    q1, q2, q3 = (GradedLaurent.var("TRI", v) for v in ("q1", "q2", "q3"))
    one = GradedLaurent.one("TRI")
    table = [("I(b_j,b_j)", j, j, (one + q2) * (one + q3)) for j in range(2, n + 1)]
    table += [("I(b_j,b_j+1)", j, j + 1, one + q3) for j in range(1, n)]
    for label, j, k, want in table:
        got = cv.intersect([], j, [], k, n)
        out.append(_rec("poin-poly-equals-tri-int", "basic-table", f"n={n} {label} j={j}",
                        got == want, value=str(got)))
    if n >= 3:
        # a curve meeting b_1 in one interior point: value is a monomial
        # multiple of (1+q3)(1+q1^-1 q2)
        w, k = [-3, 2], 2
        got = cv.intersect([], 1, w, k, n)
        want = (one + q3) * (one + q1 ** -1 * q2)
        ok = any(GradedLaurent.monomial("TRI", e) * want == got for e in got.terms)
        ok = ok and got == poincare(projective(B, 1), apply_word(w, projective(B, k)))
        out.append(_rec("poin-poly-equals-tri-int", "basic-table", f"n={n} interior point",
                        ok, value=str(got)))
    for _ in range(samples):
        w0, w1 = random_word(rng, n, max_len), random_word(rng, n, max_len)
        j, k = rng.randint(1, n), rng.randint(1, n)
        lhs = cv.intersect(w0, j, w1, k, n)
        rhs = poincare(apply_word(w0, projective(B, j)), apply_word(w1, projective(B, k)))
        out.append(_rec("poin-poly-equals-tri-int", "poin-poly-equals-tri-int",
                        f"n={n} ({_w(w0)},{j}) ({_w(w1)},{k})", lhs == rhs,
                        curve=str(lhs), hom=str(rhs)))
    return out


def suite_curve_calculus(rank, side="b", seed=0, samples=60, max_len=4):
    """(T2) shift law, (T3) symmetry, q3 -> 1 against bigraded numbers of
    lifts, the sgn invariant, and the twist action on basic curves."""
    n = rank
    rng = random.Random(seed)
    out = []
    for j in range(1, n + 1):
        b = cv.basic_curve(n, j)
        want = b.shifted((-1, 1, 1 if j == 1 else 0))
        out.append(_rec("curve-calculus", "twist-on-basic-curve", f"n={n} j={j}",
                        cv.act(b, j) == want))
    for _ in range(samples):
        w = random_word(rng, n, max_len)
        j, k = rng.randint(1, n), rng.randint(1, n)
        c = cv.act_word(w, cv.basic_curve(n, k))
        r = (rng.randint(-2, 2), rng.randint(-2, 2), rng.randint(0, 1))
        ok = cv.intersect_basic(j, c.shifted(r)) == GradedLaurent.monomial("TRI", r) * cv.intersect_basic(j, c)
        out.append(_rec("curve-calculus", "T2-shift", f"n={n} j={j} c={_w(w)}.b{k} r={r}", ok))
        if j >= 2 and k >= 2:
            x = cv.intersect([], j, w, k, n)
            y = cv.intersect(w, k, [], j, n)
            flipped = GradedLaurent("TRI", {(-a, 1 - b_, t): v
                                            for (a, b_, t), v in x.terms.items()})
            out.append(_rec("curve-calculus", "T3-symmetry", f"n={n} j={j} w={_w(w)} k={k}",
                            flipped == y))
        m0 = cv.lift(cv.basic_curve(n, j))
        lhs = lp_specialize(cv.intersect_basic(j, c), {"q3": 1}, "BI")
        out.append(_rec("curve-calculus", "q3=1-bigraded", f"n={n} j={j} c={_w(w)}.b{k}",
                        lhs == cv.bigraded_intersect(m0, cv.lift(c))))
        if 0 in (c.start, c.end):
            for g in (1, -1):
                ok = (cv.sgn(apply_generator(cv.build_LB(c), g))
                      == cv.sgn(cv.build_LB(cv.act(c, 1, g))))
                out.append(_rec("curve-calculus", "sgn-invariant",
                                f"n={n} c={_w(w)}.b{k} letter={g}", ok))
    return out


SUITES = {
    "algebra": suite_algebra,
    "phi": suite_phi,
    "braid-relations": suite_braid_relations,
    "type-b-relation": suite_type_b_relation,
    "tensor-equivariant": suite_tensor_equivariant,
    "diagram-commutes": suite_diagram_commutes,
    "lb-equivariant": suite_lb_equivariant,
    "poin-poly-equals-tri-int": suite_intersection,
    "k0": suite_k0,
    "tl-relations": suite_tl,
    "faithful-action": suite_faithful,
    "curve-calculus": suite_curve_calculus,
}


def run(name, rank, side="b", seed=0):
    if name == "all":
        out = []
        for key in SUITES:
            out.extend(run(key, rank, side, seed))
        return out
    if name not in SUITES:
        raise KeyError(name)
    if name == "braid-relations" and side == "both":
        return (SUITES[name](rank, "b", seed) + SUITES[name](rank, "a", seed))
    return SUITES[name](rank, side=side, seed=seed)
