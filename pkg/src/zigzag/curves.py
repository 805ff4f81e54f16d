"""Trigraded curves in the disc with marked points 0, 1, ..., n.

The marked points sit on a horizontal line at x = 0, 1, ..., n.  From each
point p_i a ray L_i runs straight down to the boundary; cutting along these
rays leaves a disc, so the isotopy class of an arc is recorded by the reduced
sequence of its crossings with the rays.  A letter ``(i, e, id)`` is a
crossing of L_i from left to right (e = +1) or right to left (e = -1), and
``id`` tracks the crossing through braid moves.  Words are reduced freely and
by discarding end letters on the rays of the end points themselves.

Between consecutive letters the arc runs over the intervening marked points,
which fixes its crossings with the upward rays U_i and with the walls d_m
(the vertical line x = m - 1/2, 1 <= m <= n).  The crossings with the walls
carry the trigrading: a local index (y1, y2, y3) per crossing, constant
differences along the pieces cut out by the walls.

Piece labels (region D_a lies between d_a and d_(a+1)):

    "1"   d_a -- d_(a+1) above p_a          "1'"  the same below p_a
    "2"   d_a -- d_a around p_a             "2'"  d_(a+1) -- d_(a+1) around p_a
    "0"   d_1 -- d_1 around p_0             "3"/"3'"  p_a -- d_a / p_a -- d_(a+1)
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import build_algebra
from .arith import GradedLaurent
from .complexes import Gen, ProjComplex
from .functors import parse_word



def _add(a, b, sign=1):
    return (a[0] + sign * b[0], a[1] + sign * b[1], (a[2] + sign * b[2]) % 2)


# piece rules ------------------------------------------------------------------

_STEP = {
    "1": (1, 0, 0),      # left to right; reversed travel negates
    "1'": (-1, 1, 0),
    "2": (1, -1, 0),     # when the upper ray is met first
    "2'": (-1, 1, 0),
    "0": (0, 0, 1),
}


@dataclass(frozen=True)
class Piece:
    """A component of the curve minus the walls."""
    kind: str
    region: int
    start: int | None    # crossing index at the start (None for a puncture)
    end: int | None
    letters: tuple       # ('U'|'L', i) in travel order


@dataclass
class TrigradedCurve:
    n: int
    start: int
    end: int
    word: tuple = ()             # ((i, e, id), ...)
    mus: tuple = ()              # local index per wall crossing
    walls: tuple = ()            # wall per crossing (derived)
    pieces: tuple = ()           # Piece per component (derived)
    keys: tuple = ()             # anchor keys per crossing (derived)
    special: bool = field(default=False)  # B-type marked point 0

    @property
    def crossings(self):
        return list(zip(self.walls, self.mus))

    def shifted(self, r) -> "TrigradedCurve":
        """chi(r1, r2, r3) applied to the curve."""
        return TrigradedCurve(self.n, self.start, self.end, self.word,
                              tuple(_add(m, r) for m in self.mus), self.walls,
                              self.pieces, self.keys, self.special)

    def reversed(self) -> "TrigradedCurve":
        word = tuple((i, -e, k) for i, e, k in reversed(self.word))
        c = _layout(self.n, self.end, self.start, word, self.special)
        return _with_mus(c, tuple(reversed(self.mus)))

    def shape(self):
        """Isotopy data without grading: endpoints and reduced word."""
        return (self.start, self.end, tuple((i, e) for i, e, _ in self.word))

    def to_json(self) -> dict:
        return {
            "endpoints": [self.start, self.end],
            "word": [[i, e] for i, e, _ in self.word],
            "crossings": [{"wall": w, "mu": list(m)} for w, m in zip(self.walls, self.mus)],
            "segments": [{"region": p.region, "type": p.kind,
                          "from": p.start, "to": p.end,
                          "rays": [f"{a}{i}" for a, i in p.letters]}
                         for p in self.pieces],
        }

    def __eq__(self, other):
        if not isinstance(other, TrigradedCurve):
            return NotImplemented
        a, b = self, other
        if a.start != b.start:
            b = b.reversed()
        return a.shape() == b.shape() and a.mus == b.mus

    def __hash__(self):
        return hash((frozenset([self.start, self.end]), len(self.word)))


# word reduction ---------------------------------------------------------------

def _reduce(start, end, word):
    w = list(word)
    changed = True
    while changed:
        changed = False
        out = []
        for x in w:
            if out and out[-1][0] == x[0] and out[-1][1] == -x[1]:
                out.pop()
                changed = True
            else:
                out.append(x)
        w = out
        while w and w[0][0] == start:
            w.pop(0)
            changed = True
        while w and w[-1][0] == end:
            w.pop()
            changed = True
    return tuple(w)


# layout: walls, upper rays, pieces ------------------------------------------------

def _events(start, end, word):
    """Events along the curve: ('P', a), ('L', i, id), ('U', i), ('W', m, dir).

    Positions are scaled by 4: marked point i at 4i, the sides of L_i at
    4i -/+ 1, wall d_m at 4m - 2."""
    ev = [("P", start)]
    pos = 4 * start
    stops = [(4 * i - e, ("L", i, k), 4 * i + e) for i, e, k in word]
    stops.append((4 * end, ("P", end), None))
    for arrive, what, depart in stops:
        lo, hi = sorted((pos, arrive))
        step = 1 if arrive > pos else -1
        xs = range(pos + step, arrive, step)
        for x in xs:
            if x % 4 == 0:
                ev.append(("U", x // 4))
            elif x % 4 == 2:
                ev.append(("W", (x + 2) // 4, step))
        ev.append(what)
        pos = depart
    return ev


def _classify(a, b, letters, special):
    """Kind and region of a piece between events a and b (walls/punctures)."""
    if a[0] == "P" or b[0] == "P":
        if a[0] == "P" and b[0] == "P":
            raise ValueError("a curve must cross a wall")
        p, w = (a, b) if a[0] == "P" else (b, a)
        if letters:
            raise ValueError("not in normal form: rays crossed next to an end point")
        if w[1] == p[1]:
            return "3", p[1]
        if w[1] == p[1] + 1:
            return "3'", p[1]
        raise ValueError("not in normal form")
    m1, m2 = a[1], b[1]
    if abs(m1 - m2) == 1:
        if len(letters) != 1:
            raise ValueError("not in normal form")
        region = min(m1, m2)
        if letters[0][1] != region:
            raise ValueError("inconsistent ray crossing")
        return ("1" if letters[0][0] == "U" else "1'"), region
    if m1 == m2:
        if len(letters) != 2 or letters[0][1] != letters[1][1] or letters[0][0] == letters[1][0]:
            raise ValueError("not in normal form")
        p = letters[0][1]
        if p == m1:
            return "2", p
        if p == m1 - 1:
            return ("0" if p == 0 and special else "2'"), p
    raise ValueError("not in normal form")


def _step(piece: Piece, a, b):
    """Local index difference mu(end) - mu(start) along a piece."""
    k = piece.kind
    if k in ("1", "1'"):
        return _STEP[k] if b[1] > a[1] else tuple(-x for x in _STEP[k])
    if k in ("2", "2'"):
        s = _STEP[k]
        return s if piece.letters[0][0] == "U" else tuple(-x for x in s)
    if k == "0":
        return _STEP[k]
    raise ValueError(k)


def _layout(n, start, end, word, special=True):
    if not (0 <= start <= n and 0 <= end <= n) or start == end:
        raise ValueError("end points must be distinct marked points")
    ev = _events(start, end, word)
    cuts = [k for k, e in enumerate(ev) if e[0] in ("W", "P")]
    walls, keys, pieces = [], [], []
    idx = {}
    for k in cuts:
        if ev[k][0] == "W":
            idx[k] = len(walls)
            walls.append(ev[k][1])
            keys.append(_key(ev, k))
    for a, b in zip(cuts, cuts[1:]):
        letters = tuple((e[0], e[1]) for e in ev[a + 1:b])
        kind, region = _classify(ev[a], ev[b], letters, special)
        pieces.append(Piece(kind, region, idx.get(a), idx.get(b), letters))
    return TrigradedCurve(n, start, end, tuple(word), (), tuple(walls),
                          tuple(pieces), tuple(keys), special)


def _key(ev, k):
    """Name of a wall crossing by its nearest letter (or end point) on the
    far side of the wall: right side for walls right of the moving region,
    left side otherwise.  Returns both candidates."""
    m, step = ev[k][1], ev[k][2]

    def nearest(direction):
        j = k + direction
        while ev[j][0] not in ("L", "P"):
            j += direction
        e = ev[j]
        return (m, e[2] if e[0] == "L" else ("P", e[1]), direction)

    # the event reached by moving towards larger x
    right = nearest(1 if step > 0 else -1)
    left = nearest(-1 if step > 0 else 1)
    return (left, right)


def _with_mus(c: TrigradedCurve, mus) -> TrigradedCurve:
    return TrigradedCurve(c.n, c.start, c.end, c.word, tuple(mus), c.walls,
                          c.pieces, c.keys, c.special)


def _propagate(c: TrigradedCurve, anchor: int, mu) -> tuple:
    ev_walls = c.walls
    mus = [None] * len(ev_walls)
    mus[anchor] = tuple(mu)
    for p in c.pieces[anchor + 1:]:
        if p.start is not None and p.end is not None:
            mus[p.end] = _add(mus[p.start], _step(p, ("W", ev_walls[p.start]), ("W", ev_walls[p.end])))
    for p in reversed(c.pieces[:anchor + 1]):
        if p.start is not None and p.end is not None:
            mus[p.start] = _add(mus[p.end], _step(p, ("W", ev_walls[p.start]), ("W", ev_walls[p.end])), -1)
    return tuple(mus)


def _consistent(c: TrigradedCurve) -> bool:
    for p in c.pieces:
        if p.start is not None and p.end is not None:
            d = _step(p, ("W", c.walls[p.start]), ("W", c.walls[p.end]))
            if _add(c.mus[p.start], d) != c.mus[p.end]:
                return False
    return True


# constructors -----------------------------------------------------------------------

def make_curve(n, start, end, word=(), mu0=(0, 0, 0), special=True) -> TrigradedCurve:
    """Curve from end points and a ray word [(i, e), ...]; the first wall
    crossing gets local index mu0."""
    ids = itertools.count(1)
    w = _reduce(start, end, [(i, e, next(ids)) for i, e in word])
    c = _layout(n, start, end, w, special)
    return _with_mus(c, _propagate(c, 0, mu0))


def basic_curve(n: int, j: int, kind: str = "b") -> TrigradedCurve:
    """b_j joins the marked points j-1 and j along the axis; its single wall
    crossing (on d_j) has local index (0, 0, 0)."""
    if not 1 <= j <= n:
        raise ValueError(f"basic curve index {j} out of range 1..{n}")
    if kind != "b":
        raise ValueError("only b-curves are curves here; walls d_j enter through their crossings")
    return make_curve(n, j - 1, j)


# braid action -------------------------------------------------------------------------

class _Ids:
    def __init__(self, word):
        self.c = itertools.count(1 + max((k for _, _, k in word), default=0))

    def __call__(self):
        return next(self.c)


def _half_twist(start, end, word, k, sign, fresh):
    """Half twist exchanging the marked points k-1 and k; sign +1 is
    anticlockwise.  Returns (start, end, unreduced word)."""
    a, b = k - 1, k

    def img(i, e, kid):
        if i not in (a, b):
            return [(i, e, kid)]
        if sign > 0:
            base = [(a, 1), (b, 1), (a, -1)] if i == a else [(a, 1)]
        else:
            base = [(b, 1)] if i == a else [(b, -1), (a, 1), (b, 1)]
        if e < 0:
            base = [(x, -y) for x, y in reversed(base)]
        return [(x, y, fresh()) for x, y in base]

    if sign > 0:
        h = {a: [(a, 1)], b: []}
    else:
        h = {a: [], b: [(b, -1)]}
    out = [(x, -y, fresh()) for x, y in reversed(h.get(start, []))]
    for letter in word:
        out.extend(img(*letter))
    out.extend((x, y, fresh()) for x, y in h.get(end, []))
    perm = {a: b, b: a}
    return perm.get(start, start), perm.get(end, end), out


# sign of the geometric half twist realising the positive generator
TWIST_SIGN = 1


def _act_once(c: TrigradedCurve, letter: int, fixed_shift=None) -> TrigradedCurve:
    n = c.n
    k, s = abs(letter), (1 if letter > 0 else -1)
    if not 1 <= k <= n:
        raise ValueError(f"generator {letter} out of range for rank {n}")
    fresh = _Ids(c.word)
    st, en, w = c.start, c.end, list(c.word)
    reps = 2 if (k == 1 and c.special) else 1
    for _ in range(reps):
        st, en, w = _half_twist(st, en, w, k, s * TWIST_SIGN, fresh)
    w = _reduce(st, en, w)
    new = _layout(n, st, en, w, c.special)
    old = {}
    for key, mu in zip(c.keys, c.mus):
        for kk in key:
            old[kk] = mu
    for i, (wall, key) in enumerate(zip(new.walls, new.keys)):
        if wall == k:
            continue
        cand = key[1] if wall > k else key[0]
        if cand in old:
            out = _with_mus(new, _propagate(new, i, old[cand]))
            for j, (w2, key2) in enumerate(zip(new.walls, new.keys)):
                if w2 == k:
                    continue
                c2 = key2[1] if w2 > k else key2[0]
                if c2 in old and old[c2] != out.mus[j]:
                    raise RuntimeError("inconsistent grading transport")
            return out
    # the curve lives inside the twisting disc: it is b_k up to grading
    if {st, en} != {k - 1, k} or len(new.walls) != 1:
        raise RuntimeError("no anchor crossing survived the twist")
    r = fixed_shift if fixed_shift is not None else ((-1, 1, 1) if (k == 1 and c.special) else (-1, 1, 0))
    mu = _add(c.mus[0], r, s)
    return _with_mus(new, (mu,))


def act(c: TrigradedCurve, k: int, sign: int = 1) -> TrigradedCurve:
    """sigma_k^sign applied to a trigraded curve."""
    return _act_once(c, k * (1 if sign > 0 else -1))


def act_word(word, c: TrigradedCurve) -> TrigradedCurve:
    """Apply the letters of the word in order, the first letter first.

    This matches ``apply_word`` on complexes."""
    for x in parse_word(word):
        c = _act_once(c, x)
    return c


# curve -> complex -------------------------------------------------------------------

def _essential(c: TrigradedCurve):
    for p in c.pieces:
        if p.start is not None and p.end is not None:
            yield p


def _d0_partners(c: TrigradedCurve) -> dict:
    out = {}
    for p in _essential(c):
        if p.kind == "0":
            out[p.start], out[p.end] = p.end, p.start
    return out


def _oriented(c, p):
    """(source, target) crossing indices of the differential of a piece."""
    y, z = p.start, p.end
    if c.mus[z][0] == c.mus[y][0] + 1:
        return y, z
    if c.mus[y][0] == c.mus[z][0] + 1:
        return z, y
    raise ValueError("local indices violate the piece rules")


def build_LB(c: TrigradedCurve) -> ProjComplex:
    """The complex of type B projectives attached to a trigraded curve."""
    if not c.special:
        raise ValueError("build_LB needs a type B curve")
    alg = build_algebra("B", c.n)
    gens = [Gen(w, m[0], m[1], m[2]) for w, m in zip(c.walls, c.mus)]
    d = {}
    d1 = {}  # D_1 essential pieces at 1-crossings: crossing -> [(src, tgt)]
    for p in _essential(c):
        if p.kind == "0":
            continue
        src, tgt = _oriented(c, p)
        ws, wt = c.walls[src], c.walls[tgt]
        d[(src, tgt)] = alg.X(ws) if ws == wt else alg.arrow(ws, wt)
        if p.region == 1:
            for y in (p.start, p.end):
                if c.walls[y] == 1:
                    d1.setdefault(y, []).append((src, tgt))
    partner = _d0_partners(c)
    for y, yp in partner.items():
        for src, tgt in d1.get(y, ()):
            z = tgt if src == y else src
            if c.walls[z] == 2:
                if src == z:      # (2|1) : P(z) -> P(y)
                    d[(z, yp)] = alg.elem("(ie2)(2|1)", -1)
                else:             # (1|2) : P(y) -> P(z)
                    d[(yp, z)] = alg.elem("(1|2)(ie2)")
            elif src == y and z in partner:   # X_1 : P(y) -> P(z)
                d[(yp, partner[z])] = alg.X(1)
    return ProjComplex(alg, gens, d)


# lift to the double branched cover ----------------------------------------------

@dataclass
class BigradedMulticurve:
    """Combinatorial image of a trigraded curve in the disc with 2n points.

    ``crossings[i] = (wall, (r1, r2))`` on the walls theta_1 .. theta_(2n-1);
    ``segments`` are the lifted essential pieces as crossing index pairs, and
    ``components`` lists crossing indices per connected component.  The
    source curve is kept to read off intersections with lifted b-curves."""
    n: int
    crossings: list
    segments: list
    components: list
    source: TrigradedCurve | None = None

    def to_json(self) -> dict:
        return {
            "rank": 2 * self.n - 1,
            "components": [[{"wall": self.crossings[i][0], "mu": list(self.crossings[i][1])}
                            for i in comp] for comp in self.components],
            "segments": [list(s) for s in self.segments],
        }


def lift(c: TrigradedCurve) -> BigradedMulticurve:
    """A j-crossing (j >= 2) lifts to crossings on theta_(n+j-1) and
    theta_(n-j+1); a 1-crossing lifts to one crossing on theta_n.  An
    essential piece y - z in D_j (j >= 1) lifts to a copy on each sheet; on
    the second sheet a 1-crossing is replaced by its partner across D_0."""
    n = c.n
    cr, plus, minus = [], {}, {}
    for i, (w, m) in enumerate(zip(c.walls, c.mus)):
        if w == 1:
            plus[i] = len(cr)
            cr.append((n, (m[0], m[1])))
        else:
            plus[i] = len(cr)
            cr.append((n + w - 1, (m[0], m[1])))
            minus[i] = len(cr)
            cr.append((n - w + 1, (m[0], m[1])))
    partner = _d0_partners(c)
    for i, w in enumerate(c.walls):
        if w == 1:
            minus[i] = plus[partner.get(i, i)]
    segs = []
    for p in _essential(c):
        if p.kind == "0":
            continue
        segs.append((plus[p.start], plus[p.end]))
        segs.append((minus[p.start], minus[p.end]))
    # connected components, listed in order along each component
    adj = {i: [] for i in range(len(cr))}
    for a, b in segs:
        adj[a].append(b)
        adj[b].append(a)
    seen, comps = set(), []
    for s in sorted(adj, key=lambda i: (len(adj[i]), i)):
        if s in seen:
            continue
        comp, x, prev = [], s, None
        while x is not None and x not in seen:
            seen.add(x)
            comp.append(x)
            nxt = [y for y in adj[x] if y != prev and y not in seen]
            prev, x = x, (nxt[0] if nxt else None)
        comps.append(comp)
    return BigradedMulticurve(n, cr, segs, comps, c)


def build_LA(m: BigradedMulticurve) -> ProjComplex:
    """The complex of type A projectives attached to a bigraded multicurve."""
    alg = build_algebra("A", 2 * m.n - 1)
    gens = [Gen(w, r[0], r[1], 0) for w, r in m.crossings]
    d = {}
    for a, b in m.segments:
        ra, rb = m.crossings[a][1][0], m.crossings[b][1][0]
        if rb == ra + 1:
            src, tgt = a, b
        elif ra == rb + 1:
            src, tgt = b, a
        else:
            raise ValueError("local indices violate the segment rules")
        ws, wt = m.crossings[src][0], m.crossings[tgt][0]
        d[(src, tgt)] = alg.X(ws) if ws == wt else alg.arrow(ws, wt)
    return ProjComplex(alg, gens, d)


# intersections with basic curves ---------------------------------------------------

def _event_pieces(ev):
    """Piece index of every event strictly inside a piece."""
    cuts = [k for k, e in enumerate(ev) if e[0] in ("W", "P")]
    owner = {}
    for p, (a, b) in enumerate(zip(cuts, cuts[1:])):
        for k in range(a + 1, b):
            owner[k] = p
    return cuts, owner


def intersection_points(j: int, c: TrigradedCurve) -> list:
    """Points where c meets b_j in minimal position, as (category, local
    index of a reference crossing).  Not meaningful for c isotopic to b_j."""
    return [(cat, c.mus[y]) for cat, y in _points(j, c)]


def _points(j: int, c: TrigradedCurve) -> list:
    """As intersection_points, with reference crossing indices."""
    ev = _events(c.start, c.end, c.word)
    cuts, owner = _event_pieces(ev)
    wall_no = {k: i for i, k in enumerate(k for k in cuts if ev[k][0] == "W")}
    lines = [k for k, e in enumerate(ev) if e[0] in ("U", "L", "P")]
    pts = []
    for a, b in zip(lines, lines[1:]):
        ea, eb = ev[a], ev[b]
        if {ea[0], eb[0]} != {"U", "L"}:
            continue
        inside = [k for k in range(a + 1, b) if k in wall_no]
        if inside:
            y = wall_no[inside[0]]
            if c.walls[y] != j:
                continue
            left = ea if ea[1] < eb[1] else eb
            pts.append((("across", left[0]), y))
            continue
        piece = c.pieces[owner[a]]
        strip = ea[1] + 1 if piece.kind == "2" else ea[1]
        if strip != j:
            continue
        y, z = piece.start, piece.end
        low = y if c.mus[y][0] <= c.mus[z][0] else z
        pts.append(((piece.kind + "mid",), low))
    for end, pi, seq in ((c.start, 0, ev), (c.end, -1, ev[::-1])):
        if end not in (j - 1, j):
            continue
        piece = c.pieces[pi]
        y = piece.end if pi == 0 else piece.start
        nxt = next(e[0] for e in seq[1:] if e[0] in ("U", "L", "P"))
        side = "left" if end == j - 1 else "right"
        pts.append((("end", side, piece.kind, nxt), y))
    return [(("zero",) + cat[2:] if cat[:2] == ("end", "left") and j == 1 else cat, mu)
            for cat, mu in pts]


# local index of b_j relative to the reference crossing of each point category
_OFFSET = {
    ("across", "U"): (0, 0, 0),
    ("across", "L"): (1, 0, 0),
    ("2mid",): (1, 0, 0),
    ("2'mid",): (1, -1, 0),
    ("end", "left", "3'", "U"): (0, 1, 0),
    ("end", "left", "3'", "L"): (0, 0, 0),
    ("end", "left", "3", "U"): (0, 1, 0),
    ("end", "left", "3", "L"): (0, 1, 0),
    ("end", "left", "3", "P"): (0, 1, 0),
    ("end", "right", "3'", "U"): (0, 0, 0),
    ("end", "right", "3'", "L"): (0, 0, 0),
    ("end", "right", "3'", "P"): (0, 0, 0),
    ("end", "right", "3", "U"): (0, 0, 0),
    ("end", "right", "3", "L"): (0, 1, 0),
    # shared end point at the marked point 0
    ("zero", "3'", "U"): (1, 0, 1),
    ("zero", "3'", "L"): (0, 0, 0),
}


def _tri(*mono):
    return GradedLaurent.monomial("TRI", tuple(mono))


def _weight(cat) -> GradedLaurent:
    one = GradedLaurent.one("TRI")
    if cat[0] == "zero":
        return one + _tri(-1, 1, 1)
    if cat[0] == "end":
        return one + _tri(0, 0, 1)
    return (one + _tri(0, 0, 1)) * (one + _tri(-1, 1, 0))


def intersect_basic(j: int, c: TrigradedCurve) -> GradedLaurent:
    """Trigraded intersection number I(b_j, c) from the points of b_j and c."""
    if not 1 <= j <= c.n:
        raise ValueError(f"basic curve index {j} out of range 1..{c.n}")
    if {c.start, c.end} == {j - 1, j} and len(c.walls) == 1:
        one = GradedLaurent.one("TRI")
        base = one + _tri(0, 1, 0)
        if j >= 2:
            base = base * (one + _tri(0, 0, 1))
        return _tri(*c.mus[0]) * base
    total = GradedLaurent.zero("TRI")
    for cat, mu in intersection_points(j, c):
        if cat not in _OFFSET:
            raise KeyError(f"no local index rule for {cat}")
        total = total + _weight(cat) * _tri(*_add(mu, _OFFSET[cat]))
    return total


def intersect(w0, j: int, w1, k: int, n: int) -> GradedLaurent:
    """I(w0 b_j, w1 b_k), computed as I(b_j, w0^-1 w1 b_k)."""
    from .functors import inverse_word
    word = parse_word(w1) + inverse_word(w0)
    return intersect_basic(j, act_word(word, basic_curve(n, k)))


# lifted intersections ----------------------------------------------------------------

def _components_of(m: BigradedMulticurve) -> dict:
    comp = {}
    for ci, members in enumerate(m.components):
        for x in members:
            comp[x] = ci
    return comp


def _lifted_points(j: int, c: TrigradedCurve, m: BigradedMulticurve):
    """Lifts of the points of b_j and c: (sheet of b_j, component of m,
    bigraded local index, kind) with kind 'interior' or 'end'."""
    plus, minus = _sheet_maps(c)
    comp = _components_of(m)
    out = []
    for cat, ref in _points(j, c):
        mu = _add(c.mus[ref], _OFFSET[cat])
        bi = (mu[0], mu[1])
        if cat[0] == "zero":
            out.append((0, comp[plus[ref]], bi, "interior"))
            continue
        kind = "end" if cat[0] == "end" else "interior"
        out.append((1, comp[plus[ref]], bi, kind))
        out.append((-1, comp[minus[ref]], bi, kind))
    return out


def _sheet_maps(c: TrigradedCurve):
    """Crossing indices of the lift on each sheet, numbered as in lift()."""
    plus, minus, k = {}, {}, 0
    for i, w in enumerate(c.walls):
        plus[i] = k
        k += 1
        if w >= 2:
            minus[i] = k
            k += 1
    partner = _d0_partners(c)
    for i, w in enumerate(c.walls):
        if w == 1:
            minus[i] = plus[partner.get(i, i)]
    return plus, minus


def _bi(*mono):
    return GradedLaurent.monomial("BI", tuple(mono))


def bigraded_intersect(m0: BigradedMulticurve, m1: BigradedMulticurve,
                       component: int | None = None,
                       right_component: int | None = None) -> GradedLaurent:
    """Bigraded intersection number of the lift of a (shifted) basic curve
    with a lifted multicurve.

    ``component`` selects one component of m0 (0 for the component on
    theta_(n+j-1) side, 1 for the mirror one); ``right_component`` indexes
    m1.components.  By default both multicurves are used whole."""
    src = m0.source
    if src is None or len(src.walls) != 1 or abs(src.start - src.end) != 1:
        raise ValueError("the first argument must be the lift of a basic curve")
    c = m1.source
    j = max(src.start, src.end)
    r = src.mus[0]
    one = GradedLaurent.one("BI")
    if {c.start, c.end} == {j - 1, j} and len(c.walls) == 1:
        if right_component is not None and component is not None \
                and right_component != component:
            return GradedLaurent.zero("BI")
        if right_component is not None:
            component = right_component
        mu = _add(c.mus[0], r, -1)
        each = _bi(mu[0], mu[1]) * (one + _bi(0, 1))
        copies = 1 if (j == 1 or component is not None) else 2
        return each * copies
    total = GradedLaurent.zero("BI")
    for sheet, comp, (a, b), kind in _lifted_points(j, c, m1):
        if component is not None and j >= 2 and sheet != (1 if component == 0 else -1):
            continue
        if right_component is not None and comp != right_component:
            continue
        w = one + _bi(-1, 1) if kind == "interior" else one
        total = total + w * _bi(a - r[0], b - r[1])
    return total


def geometric_intersect(j: int, c: TrigradedCurve, lifted: bool = False):
    """Geometric intersection number of b_j and c (shared marked points
    count 1/2).  With ``lifted`` the count is taken for the lifts."""
    half = Fraction(1, 2)
    if {c.start, c.end} == {j - 1, j} and len(c.walls) == 1:
        base = Fraction(1)
        if lifted:
            return base * (1 if j == 1 else 2)
        return base
    total = Fraction(0)
    for cat, _ in intersection_points(j, c):
        if not lifted:
            total += half if cat[0] in ("end", "zero") else 1
        elif cat[0] == "zero":
            total += 1
        else:
            total += 1 if cat[0] == "end" else 2
    return total


def sgn(C: ProjComplex) -> int:
    """Sum of the parity shifts of the P_1 summands, mod 2."""
    return sum(g.t for g in C.gens if g.vertex == 1) % 2


def parse_curve(n: int, text: str) -> TrigradedCurve:
    """'b3' -> the basic curve b_3."""
    t = text.strip().lower()
    if not t.startswith("b") or not t[1:].isdigit():
        raise ValueError(f"unknown curve {text!r}; expected b1..b{n}")
    return basic_curve(n, int(t[1:]))
