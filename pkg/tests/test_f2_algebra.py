from fractions import Fraction as F

import pytest
from hypothesis import given

from divlab import exponents as ex
from divlab import f2_algebra as alg
from divlab.errors import ClaimViolation, NotMember
from divlab.exponents import ExpVec
from divlab.f2_algebra import MCDStatus, exact_div, mono

from conftest import algelems, expvecs, r_elems

X, Y, Z = mono(ex.X), mono(ex.Y), mono(ex.Z)


def test_characteristic_two():
    assert X + X == alg.ZERO
    assert (X + Y) * (X + Y) == X * X + Y * Y


def test_exact_div_examples():
    assert exact_div((X + Y) * (X + Z), X + Y) == X + Z
    assert exact_div(X, X + Y) is None
    assert exact_div(alg.ZERO, X) == alg.ZERO
    with pytest.raises(ZeroDivisionError):
        exact_div(X, alg.ZERO)


def test_exact_div_fractional_exponents():
    h = mono(ExpVec(x=F(1, 2))) + mono(ExpVec(y=F(1, 3), u=1, exc={2: -1}))
    f = X + mono(ExpVec.t(4, F(1, 5)))
    assert exact_div(f * h, f) == h


@given(algelems(), algelems())
def test_exact_div_multiply_back(f, h):
    assert exact_div(f * h, f) == h


@given(algelems(), algelems())
def test_exact_div_result_is_exact(f, g):
    q = exact_div(g, f)
    if q is not None:
        assert f * q == g


@given(algelems(min_size=0))
def test_frobenius_round_trip(f):
    h = alg.sqrt(f)
    assert h * h == f
    assert alg.sqrt(f * f) == f


def test_split_and_in_r():
    f = X + mono(ExpVec.t(1)) + alg.ONE
    s = alg.split_r0(f)
    assert s.i_part == X and s.t_part == mono(ExpVec.t(1)) + alg.ONE
    assert s.reconstruct() == f
    assert not alg.in_r(f)
    assert alg.in_r(X + alg.ONE)


def test_claim_examples():
    v = alg.claim_check(X, mono(ExpVec.t(1)))
    assert v.status is alg.ClaimStatus.HOLDS and v.which == "f"
    v = alg.claim_check(mono(ExpVec.t(1)), mono(ExpVec.t(2)))
    assert v.status is alg.ClaimStatus.NOT_APPLICABLE


def test_claim_violation_is_raised_for_a_forged_case(monkeypatch):
    # in_r answers "product yes, factors no" only if the kernel is broken
    calls = iter([False, False, True])
    monkeypatch.setattr(alg, "in_r", lambda f: next(calls))
    with pytest.raises(ClaimViolation):
        alg.claim_check(X, Y)


@given(algelems(), algelems())
def test_claim_property(f, g):
    v = alg.claim_check(f, g)
    if v.status is alg.ClaimStatus.HOLDS:
        assert v.f_in_r or v.g_in_r


def test_antimatter_examples():
    h, k = alg.antimatter_factor(X)
    assert h == k == mono(ExpVec(x=F(1, 2)))
    f = mono(ex.S_Y) + mono(ex.S_Z)
    h, _ = alg.antimatter_factor(f)
    assert h * h == f and alg.in_r(h)
    assert alg.antimatter_factor(alg.ONE) is None
    with pytest.raises(NotMember):
        alg.antimatter_factor(mono(ExpVec.t(1)))


@given(r_elems())
def test_antimatter_property(f):
    pair = alg.antimatter_factor(f)
    if f.is_one:
        assert pair is None
    else:
        h, k = pair
        assert h * k == f and alg.in_r(h) and not h.is_one


def test_mcd_verify_examples():
    b1 = ex.b_vec(1)
    v = alg.mcd_verify(b1, ex.S_Y, ex.S_Z)
    assert v.status is MCDStatus.MAXIMAL
    assert v.quotients == (ExpVec(y=1, exc={1: 1}), ExpVec(z=1, exc={1: 1}))
    v = alg.mcd_verify(ExpVec(x=F(1, 2)), ex.X, ex.X)
    assert v.status is MCDStatus.NOT_MAXIMAL and v.witness == ExpVec(x=F(3, 4))
    assert alg.mcd_verify(ex.Y, ex.X, ex.X).status is MCDStatus.NOT_COMMON_DIVISOR


def _mcd_brute(d, a, b, den=8):
    """Search d + delta over a small grid of deltas for a larger common divisor."""
    grid = [F(k, den) for k in range(0, 2 * den + 1)]
    for dx in grid:
        for dy in grid[:den + 1]:
            for dt in grid[:den + 1]:
                delta = ExpVec(dx, dy, 0, 0, {1: dt})
                if delta.is_zero or not ex.is_in_qr(delta):
                    continue
                big = ex.add(d, delta)
                if alg.r_monomial_quotient(a, big) is not None and alg.r_monomial_quotient(b, big) is not None:
                    return big
    return None


@pytest.mark.parametrize("d, a, b", [
    (ex.b_vec(1), ex.S_Y, ex.S_Z),
    (ExpVec(x=F(1, 2)), ex.X, ex.X),
    (ExpVec(), ExpVec(y=1, exc={1: 1}), ExpVec(z=1, exc={1: 1})),
    (ExpVec(x=1), ExpVec(x=1, y=1), ExpVec(x=2)),
])
def test_mcd_verify_against_grid_search(d, a, b):
    v = alg.mcd_verify(d, a, b)
    bigger = _mcd_brute(d, a, b)
    assert (v.status is MCDStatus.MAXIMAL) == (bigger is None)


def test_r_monomial_mcd():
    assert alg.r_monomial_mcd(ex.X, ex.Y) == ExpVec()
    assert alg.r_monomial_mcd(ExpVec(x=1, y=1), ExpVec(x=1, z=1)) == ex.X
    # min(s_y, s_z) = X*U, but s_y - X*U = Y is fine: X*U is an honest common divisor
    assert alg.r_monomial_mcd(ex.S_Y, ex.S_Z) == ExpVec(x=1, u=1)
    # X is the minimum of X and X*T_1 but X*T_1 / X = T_1 is not in R
    assert alg.r_monomial_mcd(ex.X, ExpVec(x=1, exc={1: 1})) is None


@given(expvecs(xyz=True), expvecs(xyz=True))
def test_r_monomial_mcd_is_maximal(a, b):
    m = alg.r_monomial_mcd(a, b)
    if m is not None:
        assert alg.mcd_verify(m, a, b).status is MCDStatus.MAXIMAL
