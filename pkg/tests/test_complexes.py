import json

from zigzag.algebra import build_algebra
from zigzag.complexes import (ProjComplex, check_complex, cone, direct_sum, is_isomorphic,
                              minimize, projective, shift)


def test_contractible_cone_minimizes_to_zero():
    B = build_algebra("B", 2)
    P = projective(B, 2)
    C = cone(P, P, {(0, 0): B.e(2)})
    assert len(C) == 2 and check_complex(C)["ok"]
    assert minimize(C).is_zero()


def test_isomorphism_verdicts():
    B = build_algebra("B", 2)
    P1, P2 = projective(B, 1), projective(B, 2)
    assert is_isomorphic(P2, shift(P2, 0, 0, 1)).verdict == "yes"
    assert is_isomorphic(P1, shift(P1, 0, 0, 1)).verdict == "no"
    assert is_isomorphic(direct_sum(P1, P2), direct_sum(P2, P1)).verdict == "yes"


def test_nontrivial_certificate():
    B = build_algebra("B", 2)
    P1, P2 = projective(B, 1), projective(B, 2, 0, 0, 0)
    # P1 -> P2 via (1|2), twisted by the automorphism -1 of P2
    C = cone(P1, P2, {(0, 0): B.arrow(1, 2)})
    D = cone(P1, P2, {(0, 0): {k: -v for k, v in B.arrow(1, 2).items()}})
    res = is_isomorphic(C, D)
    assert res.verdict == "yes" and res.f is not None


def test_check_complex_detects_bad_degree():
    B = build_algebra("B", 2)
    C = ProjComplex(B, list(projective(B, 1).gens) + list(projective(B, 2, 1).gens),
                    {(0, 1): B.arrow(1, 2)})
    assert check_complex(C)["ok"]
    bad = ProjComplex(B, C.gens, {(0, 1): B.X(1)})
    assert not check_complex(bad)["ok"]


def test_json_roundtrip():
    B = build_algebra("B", 2)
    C = cone(projective(B, 1), projective(B, 2), {(0, 0): B.arrow(1, 2)})
    D = ProjComplex.from_json(json.dumps(C.to_json()))
    assert D.to_json() == C.to_json()
