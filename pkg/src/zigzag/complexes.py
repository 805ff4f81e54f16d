"""Bounded complexes of graded projectives over a zigzag algebra.

A generator ``Gen(vertex, r, s, t)`` stands for ``P_vertex`` placed in
cohomological degree ``r`` with internal shift ``{s}`` and parity shift
``<t>``.  A differential entry ``g -> h`` is an algebra element ``a`` in
``e_g alg e_h`` acting by right multiplication; it must satisfy

    h.r = g.r + 1,   deg a = g.s - h.s,   z2(a) = g.t - h.t (mod 2).

Composition is written in diagrammatic order: a map given by ``a`` followed
by one given by ``b`` is given by the product ``a*b``.
"""
from __future__ import annotations

import json
import random
from collections import Counter
from dataclasses import dataclass, field
from typing import NamedTuple

from . import linalg
from .algebra import ZigzagAlgebra, add, build_algebra, neg, scale
from .arith import GaussRational


class Gen(NamedTuple):
    vertex: int
    r: int
    s: int
    t: int = 0


@dataclass
class ProjComplex:
    alg: ZigzagAlgebra
    gens: list = field(default_factory=list)
    d: dict = field(default_factory=dict)  # (i, j) -> element

    # basic structure ----------------------------------------------------
    def __len__(self):
        return len(self.gens)

    def copy(self):
        return ProjComplex(self.alg, list(self.gens), dict(self.d))

    def out_edges(self):
        out = {}
        for (i, j), a in self.d.items():
            out.setdefault(i, {})[j] = a
        return out

    def signature(self) -> Counter:
        """Multiset of generators up to isomorphism of the summands.

        For type B, ``P_j<1>`` is isomorphic to ``P_j`` when ``j >= 2``."""
        B = self.alg.tag == "B"
        return Counter(
            Gen(g.vertex, g.r, g.s, 0 if (B and g.vertex >= 2) else g.t % 2)
            for g in self.gens)

    def is_zero(self) -> bool:
        return not self.gens

    def __repr__(self):
        lines = [f"ProjComplex({self.alg.tag}{self.alg.rank}, {len(self.gens)} gens)"]
        for k, g in enumerate(self.gens):
            lines.append(f"  {k}: P{g.vertex} r={g.r} s={g.s} t={g.t}")
        for (i, j), a in sorted(self.d.items()):
            lines.append(f"  {i}->{j}: {self.alg.format(a)}")
        return "\n".join(lines)

    # serialisation ------------------------------------------------------
    def to_json(self) -> dict:
        return {
            "algebra": {"type": self.alg.tag.lower(), "rank": self.alg.rank},
            "generators": [{"id": k, "vertex": g.vertex, "r": g.r, "s": g.s, "t": g.t}
                           for k, g in enumerate(self.gens)],
            "differential": [{"from": i, "to": j, "element": self.alg.format(a)}
                             for (i, j), a in sorted(self.d.items())],
        }

    @classmethod
    def from_json(cls, data) -> "ProjComplex":
        if isinstance(data, str):
            data = json.loads(data)
        alg = build_algebra(data["algebra"]["type"].upper(), int(data["algebra"]["rank"]))
        ids = {}
        gens = []
        for k, g in enumerate(data["generators"]):
            ids[g.get("id", k)] = k
            gens.append(Gen(int(g["vertex"]), int(g["r"]), int(g["s"]), int(g.get("t", 0)) % 2))
        d = {}
        for e in data.get("differential", []):
            a = alg.parse(e["element"])
            if a:
                d[(ids[e["from"]], ids[e["to"]])] = a
        return cls(alg, gens, d)


# constructors ---------------------------------------------------------------

def projective(alg: ZigzagAlgebra, j: int, r=0, s=0, t=0) -> ProjComplex:
    return ProjComplex(alg, [Gen(j, r, s, t % 2)], {})


def sum_of_projectives(alg: ZigzagAlgebra) -> ProjComplex:
    """The direct sum of all indecomposable projectives in degree 0."""
    return ProjComplex(alg, [Gen(j, 0, 0, 0) for j in range(1, alg.nvert + 1)], {})


def direct_sum(*cs: ProjComplex) -> ProjComplex:
    alg = cs[0].alg
    gens, d, off = [], {}, 0
    for c in cs:
        gens.extend(c.gens)
        for (i, j), a in c.d.items():
            d[(i + off, j + off)] = a
        off += len(c.gens)
    return ProjComplex(alg, gens, d)


def shift(C: ProjComplex, r=0, s=0, t=0) -> ProjComplex:
    """C[r]{s}<t>: cohomological degrees drop by r."""
    gens = [Gen(g.vertex, g.r - r, g.s + s, (g.t + t) % 2) for g in C.gens]
    return ProjComplex(C.alg, gens, dict(C.d))


# diagnostics ----------------------------------------------------------------

def check_complex(C: ProjComplex) -> dict:
    alg, viol = C.alg, []
    for (i, j), a in C.d.items():
        g, h = C.gens[i], C.gens[j]
        if h.r != g.r + 1:
            viol.append({"entry": [i, j], "problem": "cohomological degree"})
        for k in a:
            b = alg.basis[k]
            if b.src != g.vertex or b.tgt != h.vertex:
                viol.append({"entry": [i, j], "problem": "endpoints"})
                break
            if b.deg != g.s - h.s:
                viol.append({"entry": [i, j], "problem": "internal degree"})
                break
            if alg.tag == "B" and (b.z2 - g.t + h.t) % 2:
                viol.append({"entry": [i, j], "problem": "parity"})
                break
    out = C.out_edges()
    for i, row in out.items():
        acc = {}
        for j, a in row.items():
            for k, b in out.get(j, {}).items():
                acc[k] = add(acc.get(k, {}), alg.mul(a, b))
        for k, v in acc.items():
            if v:
                viol.append({"entry": [i, k], "problem": "d^2 != 0"})
    return {"ok": not viol, "violations": viol}


# cones ----------------------------------------------------------------------

def compose(alg, f: dict, g: dict) -> dict:
    """Diagrammatic composite of sparse matrices of algebra elements."""
    rows = {}
    for (i, j), a in g.items():
        rows.setdefault(i, []).append((j, a))
    out = {}
    for (i, j), a in f.items():
        for k, b in rows.get(j, ()):
            v = add(out.get((i, k), {}), alg.mul(a, b))
            if v:
                out[(i, k)] = v
            else:
                out.pop((i, k), None)
    return out


def is_chain_map(X: ProjComplex, Y: ProjComplex, f: dict) -> bool:
    lhs = compose(X.alg, X.d, f)
    rhs = compose(X.alg, f, Y.d)
    keys = set(lhs) | set(rhs)
    return all(not add(lhs.get(k, {}), neg(rhs.get(k, {}))) for k in keys)


def cone(X: ProjComplex, Y: ProjComplex, f: dict, check=True) -> ProjComplex:
    """Mapping cone of a degree zero chain map f: X -> Y."""
    if check and not is_chain_map(X, Y, f):
        raise ValueError("cone: input is not a chain map")
    n = len(X.gens)
    gens = [Gen(g.vertex, g.r - 1, g.s, g.t) for g in X.gens] + list(Y.gens)
    d = {k: neg(a) for k, a in X.d.items()}
    for (i, j), a in f.items():
        if a:
            d[(i, n + j)] = a
    for (i, j), a in Y.d.items():
        d[(n + i, n + j)] = a
    return ProjComplex(X.alg, gens, d)


# minimisation ---------------------------------------------------------------

def _invertible(alg, g: Gen, h: Gen, a: dict):
    """Inverse of the entry if it is a unit multiple of an idempotent-type
    element (length zero, degree zero), else None."""
    if g.vertex != h.vertex or g.s != h.s or len(a) != 1:
        return None
    (k, c), = a.items()
    b = alg.basis[k]
    if b.length != 0:
        return None
    if b.key[1] == 0:
        return {k: 1 / c}
    return {k: -(1 / c)}  # (c*ie)^-1 = -c^-1 * ie


def minimize(C: ProjComplex) -> ProjComplex:
    """Gaussian elimination of all invertible entries."""
    alg = C.alg
    out: dict = {}
    inc: dict = {}
    for (i, j), a in C.d.items():
        if a:
            out.setdefault(i, {})[j] = a
            inc.setdefault(j, {})[i] = a
    alive = set(range(len(C.gens)))
    order = sorted(alive, key=lambda k: (C.gens[k].r, k))
    while True:
        found = None
        for g in order:
            if g not in alive:
                continue
            for h in sorted(out.get(g, {})):
                inv = _invertible(alg, C.gens[g], C.gens[h], out[g][h])
                if inv is not None:
                    found = (g, h, inv)
                    break
            if found:
                break
        if not found:
            break
        g, h, inv = found
        ys = [(y, a) for y, a in inc.get(h, {}).items() if y != g]
        zs = [(z, b) for z, b in out.get(g, {}).items() if z != h]
        for y, a in ys:
            ainv = alg.mul(a, inv)
            for z, b in zs:
                upd = neg(alg.mul(ainv, b))
                if not upd:
                    continue
                v = add(out.get(y, {}).get(z, {}), upd)
                if v:
                    out.setdefault(y, {})[z] = v
                    inc.setdefault(z, {})[y] = v
                else:
                    out.get(y, {}).pop(z, None)
                    inc.get(z, {}).pop(y, None)
        for x in (g, h):
            for z in list(out.get(x, {})):
                inc[z].pop(x, None)
            for y in list(inc.get(x, {})):
                out[y].pop(x, None)
            out.pop(x, None)
            inc.pop(x, None)
            alive.discard(x)
    keep = sorted(alive)
    idx = {k: n for n, k in enumerate(keep)}
    d = {}
    for i, row in out.items():
        for j, a in row.items():
            if a:
                d[(idx[i], idx[j])] = a
    return ProjComplex(alg, [C.gens[k] for k in keep], d)


# chain maps -----------------------------------------------------------------

def _map_unknowns(C: ProjComplex, D: ProjComplex, deg=(0, 0, 0)):
    """Unknowns (g, h, basis index) for homogeneous maps C -> D of the given
    degree: h.r = g.r + r0, deg a = g.s - h.s + s0, z2 a = g.t - h.t + t0."""
    alg = C.alg
    r0, s0, t0 = deg
    byr: dict = {}
    for h, gh in enumerate(D.gens):
        byr.setdefault(gh.r, []).append(h)
    unk = []
    for g, gg in enumerate(C.gens):
        for h in byr.get(gg.r + r0, ()):
            gh = D.gens[h]
            for k in alg.hom_basis(gg.vertex, gh.vertex):
                b = alg.basis[k]
                if b.deg != gg.s - gh.s + s0:
                    continue
                if alg.tag == "B" and (b.z2 - gg.t + gh.t - t0) % 2:
                    continue
                unk.append((g, h, k))
    return unk


def chain_map_space(C: ProjComplex, D: ProjComplex, deg=(0, 0, 0)) -> list[dict]:
    """Basis of chain maps C -> D of the given degree.

    A map of cohomological degree r0 commutes with the differentials up to
    the sign (-1)^r0: d_C f = (-1)^r0 f d_D in diagrammatic order."""
    alg = C.alg
    unk = _map_unknowns(C, D, deg)
    if not unk:
        return []
    sign = -1 if deg[0] % 2 else 1
    dC_in: dict = {}
    for (i, j), a in C.d.items():
        dC_in.setdefault(j, []).append((i, a))
    dD_out: dict = {}
    for (i, j), a in D.d.items():
        dD_out.setdefault(i, []).append((j, a))
    rows: dict = {}
    M = {}
    for col, (g, h, k) in enumerate(unk):
        b = {k: alg.one}
        # d_C then f: entries (g', h) with d_C[g'][g] * b
        for gp, a in dC_in.get(g, ()):
            for kk, v in alg.mul(a, b).items():
                key = (gp, h, kk)
                row = rows.setdefault(key, len(rows))
                M[(row, col)] = M.get((row, col), 0) + v
        # f then d_D: entries (g, h') with b * d_D[h][h']
        for hp, a in dD_out.get(h, ()):
            for kk, v in alg.mul(b, a).items():
                key = (g, hp, kk)
                row = rows.setdefault(key, len(rows))
                M[(row, col)] = M.get((row, col), 0) - sign * v
    gauss = alg.tag == "A"
    ns = linalg.nullspace(M, (len(rows), len(unk)), gauss=gauss)
    basis = []
    for vec in ns:
        f = {}
        for col, c in vec.items():
            g, h, k = unk[col]
            f[(g, h)] = add(f.get((g, h), {}), {k: alg.scalar(c)})
        basis.append({k: v for k, v in f.items() if v})
    return basis


# isomorphism ----------------------------------------------------------------

def _to_complex(alg, a: dict):
    """Length zero element as a number in Q(i) (ie -> i)."""
    c = GaussRational(0)
    for k, v in a.items():
        b = alg.basis[k]
        c = c + (GaussRational.coerce(v) * (GaussRational(0, 1) if b.key[1] else 1))
    return c


def _from_complex(alg, j: int, c: GaussRational) -> dict:
    if alg.tag == "A":
        return {alg.index[f"e{j}"]: c} if c else {}
    out = {}
    if c.re:
        out[alg.index[f"e{j}"]] = c.re
    if c.im:
        if j == 1:
            raise ArithmeticError("non-real scalar at vertex 1")
        out[alg.index[f"ie{j}"]] = c.im
    return out


def invert_map(C: ProjComplex, D: ProjComplex, f: dict):
    """Inverse of a degree zero map f: C -> D between complexes with the same
    number of generators, or None if f is not invertible."""
    alg = C.alg
    n = len(C.gens)
    if len(D.gens) != n:
        return None
    S, N = {}, {}
    for (g, h), a in f.items():
        s_part = {k: v for k, v in a.items() if alg.basis[k].length == 0}
        n_part = {k: v for k, v in a.items() if alg.basis[k].length > 0}
        if s_part:
            S[(g, h)] = _to_complex(alg, s_part)
        if n_part:
            N[(g, h)] = n_part
    Sinv = linalg.inverse(S, n, gauss=True)
    if Sinv is None:
        return None
    Si = {}
    for (h, g), c in Sinv.items():
        el = _from_complex(alg, D.gens[h].vertex, c)
        if el:
            Si[(h, g)] = el
    # g = sum_k (-S^-1 N)^k S^-1, terminating since the radical cubes to zero
    T = {k: neg(v) for k, v in compose(alg, Si, N).items()}
    total, term = dict(Si), dict(Si)
    for _ in range(4):
        term = compose(alg, T, term)
        if not term:
            break
        for k, v in term.items():
            w = add(total.get(k, {}), v)
            if w:
                total[k] = w
            else:
                total.pop(k, None)
    return total


def _is_identity(alg, C: ProjComplex, m: dict) -> bool:
    n = len(C.gens)
    for g in range(n):
        if m.get((g, g), {}) != alg.e(C.gens[g].vertex):
            return False
    return all(k[0] == k[1] for k, v in m.items() if v)


@dataclass
class IsoResult:
    verdict: str  # "yes" | "no" | "inconclusive"
    f: dict | None = None
    g: dict | None = None
    C: ProjComplex | None = None
    D: ProjComplex | None = None
    reason: str = ""

    def __bool__(self):
        return self.verdict == "yes"


def is_isomorphic(C: ProjComplex, D: ProjComplex, tries: int = 6, seed: int = 0,
                  minimal: bool = False) -> IsoResult:
    """Decide C = D in the homotopy category, with an exact certificate.

    Both sides are minimised; on minimal complexes homotopy equivalence is
    isomorphism.  A random element f of the chain map space is inverted
    exactly (when its length zero part is invertible) and both composites are
    checked to be identities."""
    if C.alg.tag != D.alg.tag or C.alg.rank != D.alg.rank:
        raise ValueError("complexes over different algebras")
    if not minimal:
        C, D = minimize(C), minimize(D)
    if C.signature() != D.signature():
        return IsoResult("no", C=C, D=D, reason="generator multisets differ")
    if not C.gens:
        return IsoResult("yes", {}, {}, C, D)
    basis = chain_map_space(C, D)
    if not basis:
        return IsoResult("no", C=C, D=D, reason="no degree zero chain maps")
    rng = random.Random(seed)
    alg = C.alg
    for _ in range(tries):
        f = {}
        for b in basis:
            c = alg.scalar(rng.choice([x for x in range(-7, 8) if x]))
            for k, v in b.items():
                w = add(f.get(k, {}), scale(c, v))
                if w:
                    f[k] = w
                else:
                    f.pop(k, None)
        g = invert_map(C, D, f)
        if g is None:
            continue
        if (is_chain_map(D, C, g) and _is_identity(alg, C, compose(alg, f, g))
                and _is_identity(alg, D, compose(alg, g, f))):
            return IsoResult("yes", f, g, C, D)
    return IsoResult("inconclusive", C=C, D=D, reason="no invertible sample found")
