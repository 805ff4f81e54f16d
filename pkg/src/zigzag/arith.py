"""Exact scalars and group-graded Laurent polynomials.

Rationals are :class:`fractions.Fraction`.  Gaussian rationals are a small
immutable pair of fractions.  :class:`GradedLaurent` is a sparse Laurent
polynomial whose exponent group is one of

    TRI  Z x Z x Z/2   variables q1, q2, q3
    BI   Z x Z         variables q1, q2
    KB   Z x Z/2       variables q, s
    KA   Z             variable  q
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational as _RationalABC

Rational = Fraction


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, _RationalABC)):
        return Fraction(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to a rational")


class GaussRational:
    """Element re + im*i of Q(i)."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _frac(re))
        object.__setattr__(self, "im", _frac(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussRational is immutable")

    @staticmethod
    def coerce(x) -> "GaussRational":
        if isinstance(x, GaussRational):
            return x
        return GaussRational(x, 0)

    def __add__(self, o):
        try:
            o = GaussRational.coerce(o)
        except TypeError:
            return NotImplemented
        return GaussRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussRational(-self.re, -self.im)

    def __sub__(self, o):
        try:
            o = GaussRational.coerce(o)
        except TypeError:
            return NotImplemented
        return GaussRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, o):
        return GaussRational.coerce(o) - self

    def __mul__(self, o):
        try:
            o = GaussRational.coerce(o)
        except TypeError:
            return NotImplemented
        return GaussRational(self.re * o.re - self.im * o.im,
                             self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def conj(self):
        return GaussRational(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def inverse(self):
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of 0 in Q(i)")
        return GaussRational(self.re / n, -self.im / n)

    def __truediv__(self, o):
        return self * GaussRational.coerce(o).inverse()

    def __rtruediv__(self, o):
        return GaussRational.coerce(o) * self.inverse()

    def __eq__(self, o):
        if isinstance(o, GaussRational):
            return self.re == o.re and self.im == o.im
        if isinstance(o, (int, Fraction)):
            return self.im == 0 and self.re == o
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def is_real(self) -> bool:
        return self.im == 0

    def __repr__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}*i"
        return f"({self.re}{'+' if self.im > 0 else '-'}{abs(self.im)}*i)"


I = GaussRational(0, 1)


# ---------------------------------------------------------------- Laurent

TAGS = {
    "TRI": (("q1", "q2", "q3"), (None, None, 2)),
    "BI": (("q1", "q2"), (None, None)),
    "KB": (("q", "s"), (None, 2)),
    "KA": (("q",), (None,)),
}


class GradedLaurent:
    """Sparse Laurent polynomial with integer coefficients over a tagged
    grading group.  Exponents of torsion variables are kept in {0, 1}."""

    __slots__ = ("tag", "terms")

    def __init__(self, tag: str, terms=None):
        if tag not in TAGS:
            raise ValueError(f"unknown grading group {tag!r}")
        names, mods = TAGS[tag]
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(int(x) for x in e)
            if len(e) != len(names):
                raise ValueError("exponent tuple has wrong length")
            e = tuple(x % m if m else x for x, m in zip(e, mods))
            clean[e] = clean.get(e, 0) + int(c)
        object.__setattr__(self, "tag", tag)
        object.__setattr__(self, "terms", {e: c for e, c in clean.items() if c})

    def __setattr__(self, name, value):
        raise AttributeError("GradedLaurent is immutable")

    # constructors
    @classmethod
    def zero(cls, tag):
        return cls(tag)

    @classmethod
    def one(cls, tag):
        return cls(tag, {(0,) * len(TAGS[tag][0]): 1})

    @classmethod
    def monomial(cls, tag, exps, coeff=1):
        return cls(tag, {tuple(exps): coeff})

    @classmethod
    def var(cls, tag, name):
        names = TAGS[tag][0]
        e = [0] * len(names)
        e[names.index(name)] = 1
        return cls(tag, {tuple(e): 1})

    def _check(self, other):
        if isinstance(other, int):
            return GradedLaurent(self.tag, {(0,) * len(TAGS[self.tag][0]): other})
        if not isinstance(other, GradedLaurent):
            raise TypeError("expected GradedLaurent")
        if other.tag != self.tag:
            raise ValueError("incompatible grading groups")
        return other

    def __add__(self, o):
        o = self._check(o)
        t = dict(self.terms)
        for e, c in o.terms.items():
            t[e] = t.get(e, 0) + c
        return GradedLaurent(self.tag, t)

    __radd__ = __add__

    def __neg__(self):
        return GradedLaurent(self.tag, {e: -c for e, c in self.terms.items()})

    def __sub__(self, o):
        return self + (-self._check(o))

    def __rsub__(self, o):
        return self._check(o) - self

    def __mul__(self, o):
        o = self._check(o)
        t = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                t[e] = t.get(e, 0) + c1 * c2
        return GradedLaurent(self.tag, t)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self.terms) != 1 or abs(next(iter(self.terms.values()))) != 1:
                raise ValueError("only unit monomials are invertible")
            (e, c), = self.terms.items()
            return GradedLaurent(self.tag, {tuple(-x for x in e): c}) ** (-k)
        out = GradedLaurent.one(self.tag)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, o):
        if isinstance(o, int):
            o = GradedLaurent(self.tag, {(0,) * len(TAGS[self.tag][0]): o})
        if not isinstance(o, GradedLaurent):
            return NotImplemented
        return self.tag == o.tag and self.terms == o.terms

    def __hash__(self):
        return hash((self.tag, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def coefficient(self, exps) -> int:
        return self.terms.get(tuple(exps), 0)

    def evaluate_ones(self) -> int:
        return sum(self.terms.values())

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self.terms.values())

    # rendering ------------------------------------------------------
    @staticmethod
    def _key(e):
        # sort from the last variable backwards, which keeps the torsion
        # variable outermost: 1 + q3 + q1^-1*q2*q3
        return tuple(reversed(e))

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda ec: self._key(ec[0]))

    def __str__(self):
        if not self.terms:
            return "0"
        names = TAGS[self.tag][0]
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                n if x == 1 else f"{n}^{x}" for n, x in zip(names, e) if x)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            parts.append(("-" if c < 0 else "+", body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for s, b in parts[1:]:
            out += f" {s} {b}"
        return out

    __repr__ = __str__

    @classmethod
    def parse(cls, tag: str, text: str) -> "GradedLaurent":
        """Inverse of ``str`` for the canonical rendering."""
        names = TAGS[tag][0]
        text = text.replace(" ", "")
        if text == "0":
            return cls(tag)
        out = cls(tag)
        i = 0
        tokens = []
        while i < len(text):
            j = i + 1
            while j < len(text) and text[j] not in "+-" or (j < len(text) and text[j - 1] == "^"):
                j += 1
            tokens.append(text[i:j])
            i = j
        for tok in tokens:
            sign = -1 if tok.startswith("-") else 1
            tok = tok.lstrip("+-")
            coeff, e = 1, [0] * len(names)
            for f in tok.split("*"):
                if f.isdigit():
                    coeff *= int(f)
                    continue
                base, _, ex = f.partition("^")
                e[names.index(base)] += int(ex) if ex else 1
            out = out + cls(tag, {tuple(e): sign * coeff})
        return out


def lp_mul(a: GradedLaurent, b: GradedLaurent) -> GradedLaurent:
    return a * b


def lp_specialize(p: GradedLaurent, assignment: dict, target: str) -> GradedLaurent:
    """Ring map into the ``target`` group.

    ``assignment`` sends each source variable to 1, -1, or the name of a
    target variable (optionally a monomial given as a dict name->exponent).
    Unassigned source variables must exist in the target under the same name.
    """
    src_names = TAGS[p.tag][0]
    tgt_names = TAGS[target][0]
    images = []
    for n in src_names:
        v = assignment.get(n, n)
        if v == 1 or v == -1:
            images.append((v, {}))
        elif isinstance(v, str):
            if v not in tgt_names:
                raise ValueError(f"{n} -> {v}: not a variable of {target}")
            images.append((1, {v: 1}))
        elif isinstance(v, dict):
            images.append((1, dict(v)))
        else:
            raise ValueError(f"bad image for {n}: {v!r}")
    out = {}
    for e, c in p.terms.items():
        coeff = c
        te = [0] * len(tgt_names)
        for (sgn, mono), x in zip(images, e):
            coeff *= sgn ** (x % 2)
            for name, k in mono.items():
                te[tgt_names.index(name)] += k * x
        te = tuple(te)
        out[te] = out.get(te, 0) + coeff
    return GradedLaurent(target, out)


def tri(a=0, b=0, c=0, coeff=1) -> GradedLaurent:
    """The TRI monomial coeff*q1^a q2^b q3^c."""
    return GradedLaurent.monomial("TRI", (a, b, c), coeff)
