import random

import pytest

from zigzag import curves as cv
from zigzag.algebra import build_algebra
from zigzag.arith import GradedLaurent
from zigzag.complexes import check_complex, is_isomorphic, projective, shift
from zigzag.homology import poincare


def P(tag, s):
    return GradedLaurent.parse(tag, s)


def words(n, count, max_len, seed):
    rng = random.Random(seed)
    for _ in range(count):
        yield [rng.choice((1, -1)) * rng.randint(1, n) for _ in range(rng.randint(0, max_len))]


def test_basic_curve_b1():
    b = cv.basic_curve(3, 1)
    assert (b.start, b.end) == (0, 1)
    assert tuple(b.walls) == (1,) and tuple(b.mus) == ((0, 0, 0),)


def test_basic_curve_range():
    with pytest.raises(ValueError):
        cv.basic_curve(2, 3)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_twist_of_own_basic_curve(n):
    for j in range(1, n + 1):
        b = cv.basic_curve(n, j)
        assert cv.act(b, j) == b.shifted((-1, 1, 1 if j == 1 else 0))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_inverse_twists(n):
    for w in words(n, 40, 4, n):
        c = cv.act_word(w, cv.basic_curve(n, 1 + len(w) % n))
        for k in range(1, n + 1):
            assert cv.act(cv.act(c, k, 1), k, -1) == c
            assert cv.act(cv.act(c, k, -1), k, 1) == c


@pytest.mark.parametrize("n", [2, 3, 4])
def test_basic_table(n):
    for j in range(1, n):
        assert cv.intersect_basic(j, cv.basic_curve(n, j + 1)) == P("TRI", "1 + q3")
    for j in range(2, n + 1):
        assert cv.intersect_basic(j, cv.basic_curve(n, j)) == P("TRI", "1 + q2 + q3 + q2*q3")
    assert cv.intersect_basic(1, cv.basic_curve(n, 1)) == P("TRI", "1 + q2")


def test_conjugation_invariance():
    n = 3
    for w in words(n, 20, 3, 1):
        for j in range(1, n + 1):
            for k in range(1, n + 1):
                assert cv.intersect(w, j, w, k, n) == cv.intersect([], j, [], k, n)


def test_disjoint_curves():
    n = 4
    assert cv.intersect_basic(1, cv.basic_curve(n, 3)) == P("TRI", "0")
    assert cv.geometric_intersect(1, cv.basic_curve(n, 4)) == 0
    m0, m1 = cv.lift(cv.basic_curve(n, 1)), cv.lift(cv.basic_curve(n, 3))
    assert cv.bigraded_intersect(m0, m1) == P("BI", "0")


def test_geometric_examples():
    assert cv.geometric_intersect(1, cv.basic_curve(2, 2)) == cv.Fraction(1, 2)


@pytest.mark.parametrize("n", [2, 3])
def test_geometric_counts_lifts(n):
    """Half the trigraded number at q = 1 counts intersections of the lifts."""
    for w in words(n, 60, 4, 10 + n):
        c = cv.act_word(w, cv.basic_curve(n, 1 + len(w) % n))
        for j in range(1, n + 1):
            total = sum(cv.intersect_basic(j, c).terms.values())
            assert cv.geometric_intersect(j, c, lifted=True) == cv.Fraction(total, 2)


def test_build_LB_basic():
    B = build_algebra("B", 3)
    for j in (1, 2, 3):
        C = cv.build_LB(cv.basic_curve(3, j))
        assert len(C.gens) == 1 and C.gens[0].vertex == j and not C.d
        assert is_isomorphic(C, projective(B, j)).verdict == "yes"


@pytest.mark.parametrize("n", [2, 3])
def test_build_LB_is_complex_and_shift_law(n):
    rng = random.Random(n)
    for w in words(n, 40, 4, 20 + n):
        c = cv.act_word(w, cv.basic_curve(n, rng.randint(1, n)))
        C = cv.build_LB(c)
        assert check_complex(C)["ok"]
        r = (rng.randint(-2, 2), rng.randint(-2, 2), rng.randint(0, 1))
        D = cv.build_LB(c.shifted(r))
        assert is_isomorphic(D, shift(C, -r[0], r[1], r[2])).verdict == "yes"


def test_d0_modification_appears():
    """Some curve through 0 needs the i-twisted entries; the result is still a complex."""
    found = False
    for w in words(2, 200, 4, 5):
        c = cv.act_word(w, cv.basic_curve(2, 1))
        C = cv.build_LB(c)
        assert check_complex(C)["ok"]
        if any("ie2" in C.alg.format(a) for a in C.d.values()):
            found = True
    assert found


def test_lift_shapes():
    n = 3
    assert len(cv.lift(cv.basic_curve(n, 1)).components) == 1
    m = cv.lift(cv.basic_curve(n, 2))
    assert len(m.components) == 2
    walls = sorted(m.crossings[c[0]][0] for c in m.components)
    assert walls == [n - 1, n + 1]


def test_adjacent_lifted_basic_curves():
    n = 3
    A = build_algebra("A", 2 * n - 1)
    m1, m2 = cv.lift(cv.basic_curve(n, 1)), cv.lift(cv.basic_curve(n, 2))
    for rc in range(2):
        assert cv.bigraded_intersect(m1, m2, right_component=rc) == P("BI", "1")
    assert poincare(projective(A, n), projective(A, n + 1)) == P("BI", "1")


def test_parse_curve():
    assert cv.parse_curve(3, "b2") == cv.basic_curve(3, 2)
    with pytest.raises(ValueError):
        cv.parse_curve(3, "d2")
