from zigzag.algebra import build_algebra
from zigzag.arith import GradedLaurent
from zigzag.complexes import projective
from zigzag.extension import extend
from zigzag.functors import apply_generator, apply_word
from zigzag.k0 import k0_class, reduce_s, rep_matrix, tensor_matrix, word_matrix


def test_extend_projectives():
    B = build_algebra("B", 3)
    assert [g.vertex for g in extend(projective(B, 1)).gens] == [3]
    assert sorted(g.vertex for g in extend(projective(B, 3)).gens) == [1, 5]


def test_k0_class_sigma1():
    B = build_algebra("B", 2)
    v = k0_class(apply_generator(projective(B, 1), 1))
    q, s = GradedLaurent.var("KB", "q"), GradedLaurent.var("KB", "s")
    assert v == [-(s * q), GradedLaurent.zero("KB")]


def test_tensor_matrix_rank2():
    one, zero = GradedLaurent.one("KA"), GradedLaurent.zero("KA")
    assert tensor_matrix(2) == [[zero, one], [one, zero], [zero, one]]


def test_k0_extend_compat():
    B = build_algebra("B", 3)
    T = tensor_matrix(3)
    C = apply_word([2, -1, 3], projective(B, 2))
    v = [reduce_s(x) for x in k0_class(C)]
    Tv = [sum((T[r][c] * v[c] for c in range(3)), GradedLaurent.zero("KA")) for r in range(5)]
    assert k0_class(extend(C)) == Tv


def test_inverse_matrices():
    M = word_matrix("B", 3, [2, -2])
    assert M == word_matrix("B", 3, [])
    assert rep_matrix("A", 3, 1)[0][0] == -GradedLaurent.var("KA", "q")
