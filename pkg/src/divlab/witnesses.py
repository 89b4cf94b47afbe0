"""Named, scripted reproductions.  Each returns a :class:`WitnessReport`."""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable

from . import exponents as ex
from . import f2_algebra as alg
from .classic import KPoly, QuadInt, QuadRat
from .dk import DKElem, prime_like_witness, x_not_primal_check
from .domains import R, Z5
from .exponents import ExpVec
from .fuzz import fuzz_antimatter, fuzz_claim
from .predicates import aq_triple_check, gauss_product_check, is_primitive, prime_like_check
from .report import SubCheck, WitnessReport

MAX_FAMILY = 10**6


@dataclass(frozen=True)
class FamilyParams:
    """Size of an indexed family b_1..b_n / g_1..g_n."""

    n: int = 100

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, int):
            raise TypeError("n must be an integer")
        if not 1 <= self.n <= MAX_FAMILY:
            raise ValueError(f"n must satisfy 1 <= n <= {MAX_FAMILY}, got {self.n}")


def _params(params: FamilyParams | int | None) -> FamilyParams:
    if params is None:
        return FamilyParams()
    return params if isinstance(params, FamilyParams) else FamilyParams(params)


def witness_mcd_infinite(params: FamilyParams | int | None = None) -> WitnessReport:
    """Each b_i = X * prod_{j != i} T_j is a maximal common divisor of s_y, s_z in R."""
    p = _params(params)
    start = time.perf_counter()
    checks = []
    bad = []
    bs = []
    for i in range(1, p.n + 1):
        b = ex.b_vec(i)
        bs.append(b)
        v = alg.mcd_verify(b, ex.S_Y, ex.S_Z)
        if v.status is not alg.MCDStatus.MAXIMAL:
            bad.append({"i": i, "status": v.status.value})
        elif i <= 3:
            checks.append(SubCheck(f"b_{i} is maximal", True, {
                "b": str(b), "s_y / b": str(v.quotients[0]), "s_z / b": str(v.quotients[1])}))
    checks.append(SubCheck(f"all b_1..b_{p.n} maximal common divisors", not bad, {"failures": bad[:10]}))
    distinct = len(set(bs)) == len(bs)
    checks.append(SubCheck("pairwise distinct, hence pairwise non-associate (units are trivial)",
                           distinct, {"count": len(set(bs))}))
    # below b_i nothing else is maximal: the minimum of the quotients is pure T content
    m = ex.minimum(ex.sub(ex.S_Y, bs[0]), ex.sub(ex.S_Z, bs[0]))
    checks.append(SubCheck("min(s_y - b_1, s_z - b_1) has no X/Y/Z content", not m.has_xyz,
                           {"min": str(m)}))
    return WitnessReport.build(
        "mcd-infinite",
        "The pair s_y = XYU, s_z = XZU has infinitely many non-associate maximal common divisors in R.",
        {"s_y": str(ex.S_Y), "s_z": str(ex.S_Z), "n": p.n},
        checks, start,
    )


def idf_family_member(i: int) -> tuple[alg.AlgElem, alg.AlgElem]:
    """Coefficients (constant term first) of g_i = Y*T_i + Z*T_i * x."""
    return alg.mono(ExpVec(y=1, exc={i: 1})), alg.mono(ExpVec(z=1, exc={i: 1}))


def witness_idf_fails(params: FamilyParams | int | None = None) -> WitnessReport:
    """f = s_y + s_z x in R[x] has at least n non-associate irreducible divisors g_i."""
    p = _params(params)
    start = time.perf_counter()
    f = (alg.mono(ex.S_Y), alg.mono(ex.S_Z))
    mult_bad, irr_bad = [], []
    gs = []
    for i in range(1, p.n + 1):
        b = alg.mono(ex.b_vec(i))
        g = idf_family_member(i)
        gs.append(g)
        if (b * g[0], b * g[1]) != f or not all(alg.in_r(c) for c in (b, *g)):
            mult_bad.append(i)
        # degree 1 with trivial content: a factorization must put a constant
        # c of R in one factor, and c divides both coefficients, so c = 1
        trivial = alg.monomial_common_divisor_trivial(c.only_monomial() for c in g)
        if not trivial or any(c.is_one for c in g):
            irr_bad.append(i)
    checks = [
        SubCheck("b_i * g_i = f coefficientwise", not mult_bad, {"failures": mult_bad[:10]}),
        SubCheck("g_i irreducible: degree 1, content trivial", not irr_bad, {"failures": irr_bad[:10]}),
        SubCheck("g_i pairwise distinct (non-associate)", len(set(gs)) == len(gs), {"count": len(set(gs))}),
        SubCheck("g_1 content cross-check via is_primitive", is_primitive(R, list(gs[0])),
                 {"g_1": f"{gs[0][0]} + ({gs[0][1]})*x"}),
    ]
    return WitnessReport.build(
        "idf-fails",
        "R is IDF but R[x] is not: f = s_y + s_z x has infinitely many non-associate irreducible divisors.",
        {"f": f"{f[0]} + ({f[1]})*x", "n": p.n},
        checks, start,
    )


def witness_antimatter_idf(trials: int = 10_000, seed: int = 0) -> WitnessReport:
    """R has no irreducible elements: every nonzero nonunit is a square of a nonunit."""
    start = time.perf_counter()
    checks = []
    for name, f in (("X", alg.mono(ex.X)), ("s_y + s_z", alg.mono(ex.S_Y) + alg.mono(ex.S_Z))):
        h, k = alg.antimatter_factor(f)
        ok = h * k == f and not h.is_one and alg.in_r(h)
        checks.append(SubCheck(f"{name} = (sqrt)^2", ok, {"f": str(f), "sqrt": str(h)}))
    res = fuzz_antimatter(trials, seed)
    checks.append(SubCheck(f"{trials} random nonunits factor as nonunit squares", res.ok,
                           {"failures": res.failures[:5], "seed": seed}))
    return WitnessReport.build(
        "antimatter-idf",
        "R is antimatter (no irreducibles), hence vacuously IDF.",
        {"trials": trials, "seed": seed},
        checks, start,
    )


Z5_F = [QuadInt(2), QuadInt(1, 1)]
Z5_G = [QuadInt(2), QuadInt(1, -1)]


def witness_gauss_fails_z5() -> WitnessReport:
    start = time.perf_counter()
    v = gauss_product_check(Z5, Z5_F, Z5_G)
    checks = [
        SubCheck("f primitive", is_primitive(Z5, Z5_F), {"f": [str(c) for c in Z5_F]}),
        SubCheck("g primitive", is_primitive(Z5, Z5_G), {"g": [str(c) for c in Z5_G]}),
        SubCheck("f*g not primitive", v.verdict == "NotPrimitive", {
            "product": v.extra.get("product"), "common divisor": str(v.witness),
            "quotients": [str(q) for q in v.quotients]}),
    ]
    return WitnessReport.build(
        "gauss-fails-z5",
        "In Z[sqrt(-5)] two primitive polynomials have a non-primitive product, so it is not GL.",
        {"f": "2 + (1+1i5)*x", "g": "2 + (1-1i5)*x"},
        checks, start, verdict_label="NotPrimitive",
    )


def witness_aq_z5() -> WitnessReport:
    start = time.perf_counter()
    r, s, t = QuadInt(2), QuadInt(1, 1), QuadInt(1, -1)
    aq = aq_triple_check(Z5, r, s, t)
    pl = prime_like_check(Z5, r, s, t)
    checks = [
        SubCheck("gcd(2, 1+i5) = gcd(2, 1-i5) = 1 but gcd(2, 6) != 1", aq.verdict == "Violation",
                 {"verdict": aq.verdict, "common divisor": str(aq.witness)}),
        SubCheck("2 is not prime-like: no nonunit divisor of 2 divides 1+i5 or 1-i5",
                 pl.verdict == "NoWitness", {"verdict": pl.verdict}),
    ]
    return WitnessReport.build(
        "aq-z5",
        "Coprimality is not multiplicative in Z[sqrt(-5)] and 2 is not prime-like there.",
        {"r": str(r), "s": str(s), "t": str(t)},
        checks, start, verdict_label="Violation",
    )


def witness_x_not_primal() -> WitnessReport:
    return x_not_primal_check()


def witness_claim_fuzz(trials: int = 10_000, seed: int = 0) -> WitnessReport:
    start = time.perf_counter()
    res = fuzz_claim(trials, seed)
    checks = [SubCheck(f"{trials} pairs f, g in R0 with fg in R: f or g in R", res.ok,
                       {"failures": res.failures[:5], **res.stats, "seed": seed})]
    return WitnessReport.build(
        "claim-fuzz",
        "If f, g in F2[P] and fg lies in R then f or g lies in R.",
        {"trials": trials, "seed": seed},
        checks, start,
    )


def _dk(*coeffs) -> DKElem:
    return DKElem(KPoly([QuadRat.coerce(c) for c in coeffs]))


PRIME_LIKE_CASES = {
    "Case1_ord": (_dk(0, 0, 1), _dk(0, 1), _dk(0, 1)),
    "Case2_1_constant": (_dk(6), _dk(2, 1), _dk(3)),
    "Case2_2_polyprime": (_dk(1, 0, -2), _dk(1, QuadRat(0, 1)), _dk(1, QuadRat(0, -1))),
}


def witness_prime_like_cases() -> WitnessReport:
    start = time.perf_counter()
    checks = []
    for expected, (r, b, c) in PRIME_LIKE_CASES.items():
        w = prime_like_witness(r, b, c)
        side = b if w.side.value == "DividesB" else c
        ok = (w.case_used.value == expected and not w.divisor.is_unit
              and w.divisor * w.quotients[0] == r and w.divisor * w.quotients[1] == side)
        checks.append(SubCheck(expected, ok, {
            "r": str(r), "b": str(b), "c": str(c), "divisor": str(w.divisor),
            "side": w.side.value, "quotients": [str(q) for q in w.quotients]}))
    return WitnessReport.build(
        "prime-like-cases",
        "Every nonzero nonunit of Z + xQ(sqrt 2)[x] is prime-like; one instance per construction case.",
        {"cases": list(PRIME_LIKE_CASES)},
        checks, start,
    )


WITNESSES: dict[str, Callable[..., WitnessReport]] = {
    "mcd-infinite": witness_mcd_infinite,
    "idf-fails": witness_idf_fails,
    "antimatter-idf": witness_antimatter_idf,
    "gauss-fails-z5": witness_gauss_fails_z5,
    "x-not-primal": witness_x_not_primal,
    "claim-fuzz": witness_claim_fuzz,
    "aq-z5": witness_aq_z5,
    "prime-like-cases": witness_prime_like_cases,
}
FAMILY_WITNESSES = {"mcd-infinite", "idf-fails"}
TRIAL_WITNESSES = {"antimatter-idf", "claim-fuzz"}
