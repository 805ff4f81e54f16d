"""Zigzag algebras of type A and B, and the comparison map Phi.

Type A_m is the zigzag algebra on vertices 1..m over Q(i).  Paths are
written left to right, so ``(j|k)`` starts at j, and ``(j|k)(k|j) = X_j``.

Type B_n is realised as a real form: a basis element is a pair ``(p, eps)``
with ``p`` a zigzag path on 1..n and ``eps`` the power of a central element
``i`` with ``i^2 = -1``.  At vertex 1 the element ``i`` is absent: the pair
``(e_1, 1)`` is not a basis element and ``(X_1, 1)`` is zero.  This gives
``(1|2)(ie_2)(2|1) = 0`` together with all the other defining relations, and
a Q-basis of size ``8n - 6``.

Elements are plain dicts ``{basis index: coefficient}``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .arith import GaussRational


@dataclass(frozen=True)
class BasisPath:
    tag: str
    name: str
    src: int
    tgt: int
    deg: int
    z2: int
    key: tuple  # (path, eps); path is ('e',v) | ('a',v,w) | ('X',v)
    length: int  # path length, 0 for idempotents and ie_j

    def __str__(self):
        return self.name


# path combinatorics on the zigzag quiver ---------------------------------

def _src(p):
    return p[1]


def _tgt(p):
    return p[2] if p[0] == "a" else p[1]


def _len(p):
    return {"e": 0, "a": 1, "X": 2}[p[0]]


def _pmul(p, q):
    """Product of two zigzag paths, or None."""
    if _tgt(p) != _src(q):
        return None
    if p[0] == "e":
        return q
    if q[0] == "e":
        return p
    if p[0] == "a" and q[0] == "a" and q[2] == p[1]:
        return ("X", p[1])
    return None


def _zigzag_paths(m):
    out = []
    for v in range(1, m + 1):
        out.append(("e", v))
    for v in range(1, m):
        out.append(("a", v, v + 1))
        out.append(("a", v + 1, v))
    for v in range(1, m + 1):
        out.append(("X", v))
    return out


def _pname(p):
    if p[0] == "e":
        return f"e{p[1]}"
    if p[0] == "X":
        return f"X{p[1]}"
    return f"({p[1]}|{p[2]})"


def _bname(p, eps):
    if not eps:
        return _pname(p)
    if p[0] == "e":
        return f"ie{p[1]}"
    if p[0] == "X":
        return f"(ie{p[1]})X{p[1]}"
    a, b = p[1], p[2]
    v = max(min(a, b), 2)
    # the central i is written at the vertex min(a, b) (or 2 next to vertex 1)
    if v == a:
        return f"(ie{v})({a}|{b})"
    return f"({a}|{b})(ie{v})"


class ZigzagAlgebra:
    """Finite-dimensional graded algebra with a fixed basis and product table."""

    def __init__(self, tag: str, rank: int, grading: str = "standard"):
        tag = tag.upper()
        if tag not in ("A", "B"):
            raise ValueError(f"unknown algebra type {tag!r}")
        if int(rank) < 2:
            raise ValueError("rank must be at least 2")
        if grading not in ("standard", "pathlength"):
            raise ValueError(f"unknown grading mode {grading!r}")
        self.tag, self.rank, self.grading = tag, int(rank), grading
        self.nvert = self.rank
        self.one = GaussRational(1) if tag == "A" else Fraction(1)
        self.zero = self.one * 0
        self._build()

    # construction ------------------------------------------------------
    def _arrow_deg(self, a, b):
        if self.grading == "pathlength":
            return 1
        if self.tag == "B":
            return 1 if b < a else 0
        c = (self.rank + 1) // 2
        if b == a + 1:
            return 1 if a < c else 0
        return 1 if a > c else 0

    def _path_deg(self, p):
        if p[0] == "e":
            return 0
        if p[0] == "a":
            return self._arrow_deg(p[1], p[2])
        return 2 if self.grading == "pathlength" else 1

    def _build(self):
        basis = []
        for p in _zigzag_paths(self.rank):
            epss = (0, 1) if self.tag == "B" else (0,)
            for eps in epss:
                if eps and p[0] in ("e", "X") and p[1] == 1:
                    continue
                name = _bname(p, eps) if self.tag == "B" else _pname(p)
                basis.append(BasisPath(self.tag, name, _src(p), _tgt(p),
                                       self._path_deg(p), eps, (p, eps), _len(p)))
        self.basis = basis
        self.index = {b.name: k for k, b in enumerate(basis)}
        self._by_key = {b.key: k for k, b in enumerate(basis)}
        table = {}
        for i, x in enumerate(basis):
            for j, y in enumerate(basis):
                r = self._mul_basis(x, y)
                if r is not None:
                    table[(i, j)] = r
        self.table = table
        self._hom = {}
        for k, b in enumerate(basis):
            self._hom.setdefault((b.src, b.tgt), []).append(k)

    def _mul_basis(self, x, y):
        p = _pmul(x.key[0], y.key[0])
        if p is None:
            return None
        e1, e2 = x.key[1], y.key[1]
        sign = -1 if (e1 and e2) else 1
        eps = (e1 + e2) % 2
        k = self._by_key.get((p, eps))
        if k is None:  # (X_1, 1) vanishes
            return None
        return (k, sign)

    # elements ----------------------------------------------------------
    def dim(self) -> int:
        return len(self.basis)

    def scalar(self, c):
        return self.one * c

    def elem(self, name: str, coeff=1) -> dict:
        return {self.index[name]: self.scalar(coeff)}

    def e(self, j: int) -> dict:
        return {self.index[f"e{j}"]: self.one}

    def ie(self, j: int) -> dict:
        return {self.index[f"ie{j}"]: self.one}

    def X(self, j: int) -> dict:
        return {self.index[f"X{j}"]: self.one}

    def arrow(self, a: int, b: int) -> dict:
        return {self.index[f"({a}|{b})"]: self.one}

    def mul(self, x: dict, y: dict) -> dict:
        out = {}
        t = self.table
        for i, a in x.items():
            for j, b in y.items():
                r = t.get((i, j))
                if r is None:
                    continue
                k, s = r
                v = out.get(k, self.zero) + (a * b if s > 0 else -(a * b))
                if v:
                    out[k] = v
                else:
                    out.pop(k, None)
        return out

    def hom_basis(self, j: int, k: int) -> list[int]:
        """Indices of basis paths spanning e_j * alg * e_k."""
        return list(self._hom.get((j, k), []))

    def hom_paths(self, j: int, k: int) -> list[BasisPath]:
        return [self.basis[i] for i in self.hom_basis(j, k)]

    def degree(self, x: dict):
        """(src, tgt, deg, z2) of a nonzero homogeneous element, else None."""
        if not x:
            return None
        ds = {(self.basis[i].src, self.basis[i].tgt, self.basis[i].deg, self.basis[i].z2)
              for i in x}
        return ds.pop() if len(ds) == 1 else None

    # printing ----------------------------------------------------------
    def _fmt_coeff(self, c):
        if isinstance(c, GaussRational):
            if c.im == 0:
                return str(c.re)
            if c.re == 0:
                return "(i)" if c.im == 1 else f"({c.im}i)"
            return f"({c.re}{'+' if c.im > 0 else '-'}{abs(c.im)}i)"
        return str(c)

    def format(self, x: dict) -> str:
        if not x:
            return "0"
        parts = []
        for k in sorted(x):
            c, name = x[k], self.basis[k].name
            neg = False
            if isinstance(c, GaussRational):
                if c.im == 0 and c.re < 0:
                    neg, c = True, -c
                elif c.re == 0 and c.im < 0:
                    neg, c = True, -c
            elif c < 0:
                neg, c = True, -c
            body = name if c == 1 else f"{self._fmt_coeff(c)}*{name}"
            parts.append(("-" if neg else "+", body))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s

    def parse(self, s: str) -> dict:
        s = s.strip()
        if s == "0":
            return {}
        if not s.startswith("-"):
            s = "+ " + s
        else:
            s = "- " + s[1:]
        out = {}
        for sign, term in re.findall(r"([+-])\s*(\S+)", s):
            coeff, star, name = term.rpartition("*")
            c = self.one if not star else self._parse_coeff(coeff)
            if sign == "-":
                c = -c
            if name not in self.index:
                raise ValueError(f"unknown basis element {name!r}")
            k = self.index[name]
            v = out.get(k, self.zero) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return out

    def _parse_coeff(self, t):
        t = t.strip()
        if t.startswith("(") and t.endswith(")"):
            t = t[1:-1]
        if not t.endswith("i"):
            return self.scalar(Fraction(t))
        body = t[:-1]
        cut = max(body.rfind("+"), body.rfind("-"))
        if cut > 0:
            re_s, im_s = body[:cut], body[cut:]
        else:
            re_s, im_s = "0", body
        im = {"": 1, "+": 1, "-": -1}.get(im_s)
        return GaussRational(Fraction(re_s), Fraction(im_s) if im is None else im)

    def __repr__(self):
        return f"ZigzagAlgebra({self.tag}, {self.rank}, {self.grading})"


@lru_cache(maxsize=None)
def build_algebra(tag: str, rank: int, grading: str = "standard") -> ZigzagAlgebra:
    return ZigzagAlgebra(tag, rank, grading)


def add(x: dict, y: dict) -> dict:
    out = dict(x)
    for k, v in y.items():
        w = out[k] + v if k in out else v
        if w:
            out[k] = w
        else:
            out.pop(k, None)
    return out


def scale(c, x: dict) -> dict:
    if not c:
        return {}
    return {k: c * v for k, v in x.items()}


def neg(x: dict) -> dict:
    return {k: -v for k, v in x.items()}


def multiply(alg: ZigzagAlgebra, a: dict, b: dict) -> dict:
    return alg.mul(a, b)


def hom_basis(alg: ZigzagAlgebra, j: int, k: int) -> list[BasisPath]:
    return alg.hom_paths(j, k)


# Phi -------------------------------------------------------------------

def _phi_basis(n: int, A: ZigzagAlgebra, b: BasisPath) -> dict:
    p, eps = b.key
    if p == ("e", 1):
        return A.e(n)
    if p == ("X", 1):
        return A.elem(f"X{n}", 2)
    out = {}
    for sgn in (-1, 1):
        def v(x):
            return n + sgn * (x - 1)
        if p[0] == "e":
            q = ("e", v(p[1]))
        elif p[0] == "X":
            q = ("X", v(p[1]))
        else:
            q = ("a", v(p[1]), v(p[2]))
        c = GaussRational(0, sgn) if eps else GaussRational(1)
        out = add(out, {A.index[_pname(q)]: c})
    return out


@lru_cache(maxsize=None)
def phi_table(n: int) -> tuple:
    B = build_algebra("B", n)
    A = build_algebra("A", 2 * n - 1)
    return tuple(_phi_basis(n, A, b) for b in B.basis)


def phi(n: int, x) -> dict:
    """Image of c (x) b under Phi; ``x`` is a pair (c, b) with b a B-element,
    or a bare B-element (c = 1)."""
    if isinstance(x, tuple):
        c, b = x
    else:
        c, b = 1, x
    c = GaussRational.coerce(c)
    tab = phi_table(n)
    out = {}
    for k, v in b.items():
        out = add(out, scale(c * v, tab[k]))
    return out
