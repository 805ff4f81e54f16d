"""Braid group actions on complexes of projectives.

``sigma_j`` is the cone of the evaluation map P_j (x) jP (x) C -> C and
``sigma_j^-1`` the cocone of the coevaluation C -> P_j (x) jP^v (x) C, where
the tensor product over the endomorphism field F_j of the top of P_j is
expanded through an F_j-basis of e_j alg e_k.  F_j is R (here Q) for type B
vertex 1, C (here Q(i)) otherwise; over type B the complex structure at
vertex j >= 2 is carried by the central element ie_j.
"""
from __future__ import annotations

from dataclasses import dataclass

from .algebra import ZigzagAlgebra, add, build_algebra, neg
from .arith import GaussRational
from .complexes import Gen, ProjComplex, minimize, shift, sum_of_projectives


# F_j-linear structure ---------------------------------------------------------

def _complex_type(alg: ZigzagAlgebra, j: int) -> bool:
    """True when F_j acts through ie_j (type B, j >= 2)."""
    return alg.tag == "B" and j >= 2


def f_basis(alg: ZigzagAlgebra, j: int, k: int) -> list[int]:
    """An F_j-basis of e_j alg e_k, as basis indices."""
    idx = alg.hom_basis(j, k)
    if _complex_type(alg, j):
        return [i for i in idx if alg.basis[i].key[1] == 0]
    return idx


def _dual_path(alg: ZigzagAlgebra, i: int):
    """u with b*u = X_j for the basis path b = (p, eps) starting at j."""
    b = alg.basis[i]
    p, eps = b.key
    if p[0] == "e":
        q = ("X", p[1])
    elif p[0] == "X":
        q = ("e", p[1])
    else:
        q = ("a", p[2], p[1])
    k = alg._by_key[(q, eps)]
    return k, (-1 if eps else 1)


def _scalar(alg: ZigzagAlgebra, j: int, c) -> dict:
    """F_j scalar c realised as an endomorphism of P_j."""
    if not c:
        return {}
    if alg.tag == "A":
        return {alg.index[f"e{j}"]: alg.scalar(c)}
    if isinstance(c, GaussRational):
        out = {}
        if c.re:
            out[alg.index[f"e{j}"]] = c.re
        if c.im:
            out[alg.index[f"ie{j}"]] = c.im
        return out
    return {alg.index[f"e{j}"]: c}


def _coords(alg: ZigzagAlgebra, j: int, x: dict, reps: list[tuple[int, int]]) -> list:
    """F_j-coordinates of x in the basis {sign_a * basis[k_a]}."""
    out = []
    for k, sgn in reps:
        if _complex_type(alg, j):
            p = alg.basis[k].key[0]
            k1 = alg._by_key.get((p, 1))
            c = GaussRational(x.get(k, 0), x.get(k1, 0) if k1 is not None else 0)
        else:
            c = x.get(k, alg.zero)
        out.append(c * sgn)
    return out


# generator functors -------------------------------------------------------------

def _sigma_plus(C: ProjComplex, j: int) -> ProjComplex:
    alg = C.alg
    gens = list(C.gens)
    d = dict(C.d)
    new = {}  # (g, alpha) -> index
    fb = {}
    for g, gg in enumerate(C.gens):
        fb[g] = f_basis(alg, j, gg.vertex)
        for a, k in enumerate(fb[g]):
            b = alg.basis[k]
            new[(g, a)] = len(gens)
            gens.append(Gen(j, gg.r - 1, gg.s + b.deg, (gg.t + b.z2) % 2))
            d[(new[(g, a)], g)] = {k: alg.one}
    for (g, h), x in C.d.items():
        reps = [(k, 1) for k in fb[h]]
        for a, k in enumerate(fb[g]):
            coeffs = _coords(alg, j, alg.mul({k: alg.one}, x), reps)
            for b_, c in enumerate(coeffs):
                el = neg(_scalar(alg, j, c))
                if el:
                    d[(new[(g, a)], new[(h, b_)])] = el
    return ProjComplex(alg, gens, d)


def _sigma_minus(C: ProjComplex, j: int) -> ProjComplex:
    alg = C.alg
    gens = list(C.gens)
    d = dict(C.d)
    new = {}
    duals = {}
    for g, gg in enumerate(C.gens):
        duals[g] = [_dual_path(alg, k) for k in f_basis(alg, j, gg.vertex)]
        for a, (k, sgn) in enumerate(duals[g]):
            u = alg.basis[k]
            new[(g, a)] = len(gens)
            gens.append(Gen(j, gg.r + 1, gg.s - u.deg, (gg.t - u.z2) % 2))
            d[(g, new[(g, a)])] = {k: alg.scalar(sgn)}
    for (g, h), x in C.d.items():
        reps = duals[g]
        for b_, (k, sgn) in enumerate(duals[h]):
            y = alg.mul(x, {k: alg.scalar(sgn)})
            for a, c in enumerate(_coords(alg, j, y, reps)):
                el = neg(_scalar(alg, j, c))
                if el:
                    d[(new[(g, a)], new[(h, b_)])] = el
    return ProjComplex(alg, gens, d)


def apply_generator(C: ProjComplex, letter: int, reduce: bool = True,
                    twist_b1: bool = True) -> ProjComplex:
    """sigma_|letter|^(sign letter) applied to C.

    With ``twist_b1=False`` the type B generator 1 acts through the bare
    bimodule complex R_1 (resp. R_1'), without the extra parity shift."""
    alg = C.alg
    j = abs(letter)
    if not 1 <= j <= alg.nvert:
        raise ValueError(f"generator {letter} out of range for rank {alg.rank}")
    out = _sigma_plus(C, j) if letter > 0 else _sigma_minus(C, j)
    if alg.tag == "B" and j == 1 and twist_b1:
        out = shift(out, 0, 0, 1)
    return minimize(out) if reduce else out


def apply_word(word, C: ProjComplex, twist_b1: bool = True) -> ProjComplex:
    """Apply the letters left to right, minimising after each."""
    for x in parse_word(word):
        C = apply_generator(C, x, twist_b1=twist_b1)
    return C


# words ------------------------------------------------------------------------

def parse_word(word) -> list[int]:
    if word is None:
        return []
    if isinstance(word, str):
        return [int(x) for x in word.replace(",", " ").split()]
    return [int(x) for x in word]


def inverse_word(word) -> list[int]:
    return [-x for x in reversed(parse_word(word))]


def free_reduce(word) -> list[int]:
    out = []
    for x in parse_word(word):
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return out


def psi(word, n: int) -> list[int]:
    """Embedding of the type B_n Artin group into the braid group on 2n strands."""
    out = []
    for x in parse_word(word):
        j, s = abs(x), (1 if x > 0 else -1)
        if not 1 <= j <= n:
            raise ValueError(f"generator {x} out of range for rank {n}")
        if j == 1:
            out.append(s * n)
        else:
            pair = [n - (j - 1), n + (j - 1)]
            out.extend(s * a for a in (pair if s > 0 else reversed(pair)))
    return out


@dataclass(frozen=True)
class BraidWord:
    tag: str
    rank: int
    letters: tuple

    def __post_init__(self):
        m = self.rank
        for x in self.letters:
            if x == 0 or abs(x) > m:
                raise ValueError(f"letter {x} out of range 1..{m}")

    @classmethod
    def parse(cls, tag, rank, text):
        return cls(tag.upper(), int(rank), tuple(parse_word(text)))

    def inverse(self):
        return BraidWord(self.tag, self.rank, tuple(inverse_word(self.letters)))

    def __mul__(self, o):
        return BraidWord(self.tag, self.rank, self.letters + o.letters)

    def to_a(self):
        if self.tag != "B":
            return self
        return BraidWord("A", 2 * self.rank - 1, tuple(psi(self.letters, self.rank)))


def braid_relations(tag: str, m: int) -> list[tuple[str, list[int], list[int]]]:
    """Defining relations of the Artin group, as (label, lhs, rhs)."""
    rels = []
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            if j - i >= 2:
                rels.append((f"s{i}s{j}=s{j}s{i}", [i, j], [j, i]))
            elif tag.upper() == "B" and i == 1:
                rels.append(("s1s2s1s2=s2s1s2s1", [1, 2, 1, 2], [2, 1, 2, 1]))
            else:
                rels.append((f"s{i}s{j}s{i}=s{j}s{i}s{j}", [i, j, i], [j, i, j]))
    return rels


# Temperley-Lieb ---------------------------------------------------------------

def apply_TL(j: int, C: ProjComplex) -> ProjComplex:
    """U_j = P_j (x)_{F_j} jP (-1) on an algebra in path length grading."""
    alg = C.alg
    if alg.grading != "pathlength":
        raise ValueError("apply_TL needs the path length grading")
    gens, d, new, fb = [], {}, {}, {}
    for g, gg in enumerate(C.gens):
        fb[g] = f_basis(alg, j, gg.vertex)
        for a, k in enumerate(fb[g]):
            b = alg.basis[k]
            new[(g, a)] = len(gens)
            gens.append(Gen(j, gg.r, gg.s + b.deg - 1, (gg.t + b.z2) % 2))
    for (g, h), x in C.d.items():
        reps = [(k, 1) for k in fb[h]]
        for a, k in enumerate(fb[g]):
            for b_, c in enumerate(_coords(alg, j, alg.mul({k: alg.one}, x), reps)):
                el = _scalar(alg, j, c)
                if el:
                    d[(new[(g, a)], new[(h, b_)])] = el
    return ProjComplex(alg, gens, d)


def apply_TL_word(word, C: ProjComplex) -> ProjComplex:
    """Apply U_{w_1}, then U_{w_2}, ... (rightmost factor of the product first
    when the word is read as an operator product)."""
    for j in reversed(parse_word(word)):
        C = apply_TL(j, C)
    return C


def tl_algebra(n: int) -> ZigzagAlgebra:
    return build_algebra("B", n, "pathlength")


def base_object(tag: str, m: int) -> ProjComplex:
    return sum_of_projectives(build_algebra(tag, m))
