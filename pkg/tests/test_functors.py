import pytest

from zigzag.algebra import build_algebra
from zigzag.complexes import is_isomorphic, projective, shift, sum_of_projectives
from zigzag.functors import apply_generator, apply_word, inverse_word, psi


def test_type_a_twist_of_own_projective():
    A = build_algebra("A", 3)
    P = projective(A, 2)
    assert apply_generator(P, 2).gens == shift(P, 1, 1, 0).gens


def test_type_b_twist_of_p1():
    B = build_algebra("B", 2)
    P = projective(B, 1)
    assert apply_generator(P, 1).gens == shift(P, 1, 1, 1).gens


def test_distant_projective_fixed():
    B = build_algebra("B", 3)
    P = projective(B, 3)
    C = apply_generator(P, 1)
    assert len(C.gens) == 1 and is_isomorphic(C, P).verdict == "yes"


@pytest.mark.parametrize("n,w,img", [(3, [1], [3]), (3, [2], [2, 4]), (3, [-2], [-4, -2]),
                                     (2, [2, 1], [1, 3, 2])])
def test_psi(n, w, img):
    assert psi(w, n) == img


def test_word_and_inverse():
    B = build_algebra("B", 3)
    P = sum_of_projectives(B)
    w = [2, -1, 3, 2]
    assert is_isomorphic(apply_word(w + inverse_word(w), P), P).verdict == "yes"
    assert apply_word([], P) is P
