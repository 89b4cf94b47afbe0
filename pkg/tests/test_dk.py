import random

import pytest

from divlab.classic import SQRT2, KPoly, QuadRat
from divlab.dk import Case, DKElem, Side, dk_divides, prime_like_witness, smallest_prime_factor, x_not_primal_check
from divlab.errors import NotMember, PreconditionFailed, UnitFactor
from divlab.fuzz import dk_triple


def dk(*cs):
    return DKElem(KPoly([QuadRat.coerce(c) for c in cs]))


X = dk(0, 1)


def test_membership():
    with pytest.raises(NotMember):
        dk(QuadRat(0, 1), 1)
    with pytest.raises(NotMember):
        DKElem(KPoly([QuadRat(1) / 2]))
    assert dk(3, SQRT2).constant == 3


def test_units_and_division():
    assert dk(-1).is_unit and not dk(2).is_unit and not X.is_unit
    assert dk_divides(dk(2), X) == DKElem(KPoly([0, QuadRat(1) / 2]))
    assert dk_divides(dk(2), dk(1, 1)) is None  # (1 + x)/2 has constant 1/2
    assert dk_divides(X, dk(0, SQRT2)) is None  # quotient sqrt 2 is not an integer constant


def test_smallest_prime_factor():
    assert [smallest_prime_factor(n) for n in (2, 9, 15, -49, 97)] == [2, 3, 3, 7, 97]


@pytest.mark.parametrize("r, b, c, case", [
    (dk(0, 0, 1), dk(0, 1), dk(0, 1), Case.CASE1_ORD),
    (dk(6), dk(2, 1), dk(3), Case.CASE2_1_CONSTANT),
    (dk(1, 0, -2), dk(1, SQRT2), dk(1, -SQRT2), Case.CASE2_2_POLYPRIME),
])
def test_prime_like_cases(r, b, c, case):
    w = prime_like_witness(r, b, c)
    assert w.case_used is case
    side = b if w.side is Side.DIVIDES_B else c
    assert w.divisor * w.quotients[0] == r and w.divisor * w.quotients[1] == side
    assert not w.divisor.is_unit


def test_case_two_two_divisor_has_constant_one():
    w = prime_like_witness(dk(1, 0, -2), dk(1, SQRT2), dk(1, -SQRT2))
    assert w.divisor.constant == 1


def test_prime_like_preconditions():
    with pytest.raises(PreconditionFailed):
        prime_like_witness(dk(1), X, X)
    with pytest.raises(PreconditionFailed):
        prime_like_witness(dk(3), dk(2), X * X + dk(1))
    with pytest.raises(UnitFactor) as ei:
        prime_like_witness(dk(2), dk(1), dk(4))
    assert ei.value.other == "c"


def test_fuzzed_triples_cover_all_cases():
    rng = random.Random(7)
    for case in Case:
        for _ in range(20):
            r, b, c = dk_triple(rng, case)
            assert prime_like_witness(r, b, c).case_used is case


def test_x_not_primal():
    rep = x_not_primal_check()
    assert rep.reproduced and rep.label == "NotPrimal"
    # a rational alpha does split, so the check must notice
    assert not x_not_primal_check(QuadRat(3)).reproduced
