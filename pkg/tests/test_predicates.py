import random
from math import gcd

import pytest

from divlab import exponents as ex
from divlab import f2_algebra as alg
from divlab.classic import QuadInt
from divlab.domains import DK, R, R0, Z, Z5, get_domain
from divlab.errors import EmptyContent, PreconditionFailed, Undecided
from divlab.exponents import ExpVec
from divlab.f2_algebra import mono
from divlab.parsing import parse_expr
from divlab.predicates import (
    PrimalDecomposition, aq_triple_check, gauss_product_check, is_primitive, primal_check,
    primal_decompose, prime_like_check, primitive_check,
)

X, Y, Z_ = mono(ex.X), mono(ex.Y), mono(ex.Z)
I5 = QuadInt(0, 1)


def r(text):
    return parse_expr(text, "r")


def test_is_primitive_examples():
    assert is_primitive(R, [r("Y*T[1]"), r("Z*T[1]")])
    assert is_primitive(Z5, [QuadInt(2), QuadInt(1, 1)])
    assert not is_primitive(Z5, [QuadInt(4), QuadInt(4), QuadInt(6)])
    assert primitive_check(Z5, [QuadInt(4), QuadInt(4), QuadInt(6)]).witness == QuadInt(2)
    assert not is_primitive(Z, [4, 6]) and is_primitive(Z, [4, 6, 9])
    assert not is_primitive(R, [r("X^(1/2)*T[1]"), r("X")])


def test_is_primitive_brute_force_z5():
    """Any common nonunit divisor of 2 and 1+sqrt(-5) has norm dividing gcd(4, 6) = 2; none has norm 2."""
    assert not any(a * a + 5 * b * b == 2 for a in range(-2, 3) for b in range(-1, 2))


def test_is_primitive_unknown_and_empty():
    with pytest.raises(Undecided):
        is_primitive(R, [r("X + Y"), r("X + Z")])
    assert primitive_check(R, [r("X + Y"), r("X + Z")]).verdict == "Unknown"
    with pytest.raises(EmptyContent):
        is_primitive(Z, [0, 0])


def test_is_primitive_monotone_on_samples():
    rng = random.Random(3)
    for _ in range(300):
        cs = [rng.randint(-20, 20) for _ in range(rng.randint(1, 4))]
        if not any(cs):
            continue
        if is_primitive(Z, cs):
            assert is_primitive(Z, cs + [rng.randint(-20, 20)])


def test_gauss_examples():
    v = gauss_product_check(Z5, [QuadInt(2), QuadInt(1, 1)], [QuadInt(2), QuadInt(1, -1)])
    assert v.verdict == "NotPrimitive" and v.extra["product"] == ["4", "4", "6"]
    assert gauss_product_check(Z, [2, 3], [3, 2]).verdict == "Primitive"
    v = gauss_product_check(R, [r("Y*T[1]"), r("Z*T[1]")], [r("Y*T[2]"), r("Z*T[2]")])
    assert v.verdict == "Primitive"
    with pytest.raises(PreconditionFailed):
        gauss_product_check(Z, [2, 4], [1, 1])


def test_aq_examples():
    assert aq_triple_check(Z5, QuadInt(2), QuadInt(1, 1), QuadInt(1, -1)).verdict == "Violation"
    assert aq_triple_check(R, X, Y, Z_).verdict == "Holds"
    assert aq_triple_check(Z, 4, 3, 5).verdict == "Holds"
    assert aq_triple_check(Z, 4, 2, 5).verdict == "Vacuous"


def test_prime_like_examples():
    assert prime_like_check(Z5, QuadInt(2), QuadInt(1, 1), QuadInt(1, -1)).verdict == "NoWitness"
    v = prime_like_check(Z, 6, 4, 9)
    assert v.verdict == "Witness" and v.witness in (2, 3)
    v = prime_like_check(R, X, r("X^(1/2)*Y"), r("X^(1/2)*Z"))
    assert v.verdict == "Witness" and v.witness == r("X^(1/2)")
    with pytest.raises(PreconditionFailed):
        prime_like_check(Z, 6, 4, 5)


def test_prime_like_dk_dispatch():
    v = prime_like_check(DK, parse_expr("1 - 2*x^2", "dk"), parse_expr("1 + 1r2*x", "dk"), parse_expr("1 - 1r2*x", "dk"))
    assert v.verdict == "Witness" and v.case == "Case2_2_polyprime"
    v = prime_like_check(DK, parse_expr("2", "dk"), parse_expr("1", "dk"), parse_expr("4", "dk"))
    assert v.verdict == "Witness" and v.extra["side"] == "s"


def test_primal_examples():
    dec = primal_decompose(Z, 6, 4, 9)
    assert (dec.r_part, dec.s_part, dec.unit_slack) == (2, 3, 1)
    for p in (2, 7, 97):
        dec = primal_decompose(Z, p, p, 1)
        assert (dec.r_part, dec.s_part, dec.unit_slack) == (p, 1, 1)
    dec = primal_decompose(R0, r("X*Y"), r("X*Z"), r("Y^2*Z"))
    assert (dec.r_part, dec.s_part, dec.unit_slack) == (X, Y, alg.ONE)


def test_primal_z5_not_primal():
    # 2 | (1+i5)(1-i5) but 2 is irreducible and divides neither factor
    v = primal_decompose(Z5, QuadInt(2), QuadInt(1, 1), QuadInt(1, -1))
    assert v.verdict == "NotPrimal" and v.extra["exhaustive"]
    assert primal_check(Z5, QuadInt(6), QuadInt(2), QuadInt(3)).verdict == "Primal"


def test_primal_r_unknown_without_mcd():
    # X and X*T_1 have no maximal common divisor in R
    v = primal_check(R, X, mono(ExpVec(x=1, exc={1: 1})), X)
    assert v.verdict == "Unknown"


def test_primal_z_against_brute_force():
    rng = random.Random(11)
    for _ in range(200):
        p = rng.randint(2, 500)
        a = rng.randint(1, 500)
        b = (p // gcd(p, a)) * rng.randint(1, 9)
        dec = primal_decompose(Z, p, a, b)
        assert isinstance(dec, PrimalDecomposition)
        best = max(x for x in range(1, p + 1) if p % x == 0 and a % x == 0 and b % (p // x) == 0)
        assert dec.r_part == best


def test_get_domain():
    assert get_domain("z5") is Z5
    with pytest.raises(ValueError):
        get_domain("q")
