from fractions import Fraction as F

import pytest
from hypothesis import given

from divlab import exponents as ex
from divlab.exponents import ExpVec, QVerdict, add, in_qr, minimum, sub

from conftest import expvecs


def test_canonical_form_drops_zero_deviations():
    assert ExpVec(x=1, exc={3: 0}) == ExpVec(x=1)
    assert ExpVec(u=1, exc={2: F(1, 2), 5: 0}).exc == ((2, F(1, 2)),)


def test_t_exponent_uses_bulk_plus_deviation():
    b3 = ex.b_vec(3)
    assert b3.t_exponent(3) == 0
    assert b3.t_exponent(1) == 1
    assert b3.t_exponent(10**6) == 1


@pytest.mark.parametrize("kwargs", [dict(x=-1), dict(u=-F(1, 2)), dict(u=1, exc={2: -2}), dict(exc={0: 1})])
def test_invalid_vectors_rejected(kwargs):
    with pytest.raises(ValueError):
        ExpVec(**kwargs)


def test_str_forms():
    assert str(ExpVec()) == "1"
    assert str(ExpVec(x=F(3, 2), y=1, u=1, exc={3: -1})) == "X^(3/2)*Y*U*T[3]^(-1)"


def test_sub_and_divides():
    assert sub(ex.S_Y, ex.b_vec(1)) == ExpVec(y=1, exc={1: 1})
    assert sub(ex.X, ex.Y) is None
    # b_1 does not divide b_2: the T_1 exponent would go negative
    assert sub(ex.b_vec(2), ex.b_vec(1)) is None


def test_minimum_is_componentwise():
    m = minimum(ex.S_Y, ex.S_Z)
    assert m == ExpVec(x=1, u=1)
    m1 = minimum(sub(ex.S_Y, ex.b_vec(1)), sub(ex.S_Z, ex.b_vec(1)))
    assert m1 == ExpVec.t(1) and not m1.has_xyz


@pytest.mark.parametrize(
    "vec, verdict",
    [
        (ExpVec(x=F(1, 2)), QVerdict.IN_Q_PURE_XYZ),
        (ExpVec(), QVerdict.IN_Q_PURE_XYZ),
        (ex.b_vec(3), QVerdict.IN_Q_MIXED),
        (ExpVec(y=1, exc={1: 1}), QVerdict.IN_Q_MIXED),
        (ExpVec.t(1), QVerdict.NOT_IN_Q_PURE_T),
        (ex.U, QVerdict.NOT_IN_Q_PURE_T),
    ],
)
def test_in_qr(vec, verdict):
    assert in_qr(vec).verdict is verdict
    assert bool(in_qr(vec)) == verdict.member


def test_classify_raw_negative():
    assert ex.classify_raw(0, 0, 0, 0, {1: -1}).verdict is QVerdict.NOT_IN_Q_NEGATIVE


@given(expvecs(), expvecs())
def test_sub_inverts_add(a, b):
    assert sub(add(a, b), b) == a


@given(expvecs(), expvecs(), expvecs())
def test_order_is_additive(a, b, c):
    if a < b:
        assert add(a, c) < add(b, c)


@given(expvecs(), expvecs())
def test_minimum_divides_both(a, b):
    m = minimum(a, b)
    assert ex.divides(m, a) and ex.divides(m, b)


@given(expvecs(), expvecs())
def test_order_matches_dense_key(a, b):
    n = max(a.max_index(), b.max_index())
    assert (a < b) == (a.dense_key(n) < b.dense_key(n))


@given(expvecs(xyz=True), expvecs())
def test_qr_closed_under_addition(a, b):
    if ex.is_in_qr(b):
        assert ex.is_in_qr(add(a, b))
