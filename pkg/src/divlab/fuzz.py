"""Seeded property runners shared by the witnesses, the CLI and the test suite.

Each runner returns a :class:`FuzzResult`; ``failures`` holds printable
counterexamples and is empty when the property held on every trial.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Callable

from . import exponents as ex
from . import f2_algebra as alg
from .classic import QuadInt
from .dk import Case, DKElem, dk_divides, dk_ord, prime_like_witness
from .domains import R0, Z, Z5
from .errors import ClaimViolation
from .exponents import ExpVec
from .f2_algebra import AlgElem
from .parsing import parse_expr, print_expr
from .predicates import (
    PrimalDecomposition,
    aq_triple_check,
    gauss_product_check,
    is_primitive,
    poly_mul,
    primal_decompose,
    prime_like_check,
)
from . import sampling as smp


@dataclass
class FuzzResult:
    name: str
    trials: int
    failures: list[str] = field(default_factory=list)
    stats: dict = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures and self.trials > 0

    def to_dict(self) -> dict:
        return {
            "property": self.name,
            "trials": self.trials,
            "ok": self.ok,
            "failures": self.failures[:20],
            "failure_count": len(self.failures),
            "stats": self.stats,
            "elapsed": round(self.elapsed, 6),
        }


def _timed(fn):
    def wrapper(trials: int = 1000, seed: int = 0) -> FuzzResult:
        start = time.perf_counter()
        res = fn(trials, random.Random(seed))
        res.elapsed = time.perf_counter() - start
        return res

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


# -- claim: fg in R implies f in R or g in R -----------------------------------------


def claim_pair(rng: random.Random) -> tuple[AlgElem, AlgElem]:
    """A pair in R0, biased towards products that land in R."""
    mode = rng.randrange(5)
    pure_t = lambda: rng.choice([alg.ZERO, alg.ONE, smp.rand_pure_t(rng)])  # noqa: E731
    if mode == 0:
        f2, g2 = alg.ZERO, pure_t()
    elif mode == 1:
        f2, g2 = pure_t(), alg.ZERO
    elif mode == 2:
        f2, g2 = alg.ONE, alg.ONE
    elif mode == 3:
        f2, g2 = smp.rand_pure_t(rng), smp.rand_pure_t(rng)
    else:
        return smp.rand_alg(rng), smp.rand_alg(rng)
    return smp.rand_i(rng) + f2, smp.rand_i(rng) + g2


@_timed
def fuzz_claim(trials: int, rng: random.Random) -> FuzzResult:
    """Collect ``trials`` pairs with fg in R and confirm f or g lies in R."""
    res = FuzzResult("claim", trials)
    applicable = skipped = 0
    which = {"f": 0, "g": 0, "both": 0}
    while applicable < trials:
        f, g = claim_pair(rng)
        try:
            v = alg.claim_check(f, g)
        except ClaimViolation as exc:
            res.failures.append(str(exc))
            applicable += 1
            continue
        if v.status is alg.ClaimStatus.NOT_APPLICABLE:
            skipped += 1
            continue
        applicable += 1
        which[v.which] += 1
    res.stats = {"applicable": applicable, "not_applicable": skipped, "in_r": which}
    return res


# -- Frobenius and antimatter ------------------------------------------------------------


@_timed
def fuzz_antimatter(trials: int, rng: random.Random) -> FuzzResult:
    """Every nonzero nonunit of R splits as a square of a nonunit of R."""
    res = FuzzResult("antimatter", trials)
    for _ in range(trials):
        f = smp.rand_r(rng)
        if f.is_one:
            f = f + alg.mono(ex.X)
        pair = alg.antimatter_factor(f)
        if pair is None:
            res.failures.append(f"no factorization for nonunit {f}")
            continue
        h, k = pair
        if h * k != f or not alg.in_r(h) or not alg.in_r(k) or h.is_one or k.is_one:
            res.failures.append(f"bad factorization of {f}: ({h})*({k})")
    return res


@_timed
def fuzz_frobenius(trials: int, rng: random.Random) -> FuzzResult:
    res = FuzzResult("frobenius", trials)
    for _ in range(trials):
        f = smp.rand_alg(rng, allow_zero=True)
        h = alg.sqrt(f)
        if h * h != f:
            res.failures.append(f"sqrt({f})^2 != f")
        if alg.sqrt(f * f) != f:
            res.failures.append(f"sqrt(({f})^2) != f")
        if alg.in_r(f) and not alg.in_r(h):
            res.failures.append(f"sqrt of {f} left R")
    return res


# -- exact division ------------------------------------------------------------------------


def _coords(v: ExpVec) -> tuple:
    """Absolute exponents (X, Y, Z, T_1..T_4, tail) as a linear coordinate vector."""
    return (v.x, v.y, v.z) + tuple(v.t_exponent(i) for i in range(1, smp.MAX_INDEX + 1)) + (v.u,)


_N_COORDS = 3 + smp.MAX_INDEX + 1
_ORDERS = [(k, s) for k in range(_N_COORDS) for s in (1, -1)]


def newton_vertex_obstruction(g: AlgElem, f: AlgElem) -> str | None:
    """Independent monomial-level test that ``f`` cannot divide ``g``.

    For any additive total order, max(f*q) = max(f) + max(q).  So under each
    order in a fixed family, max(g) - max(f) must be a valid exponent vector.
    Returns a description of the first violated order, or ``None`` if no
    obstruction is found (which proves nothing).
    """
    if g.is_zero:
        return None
    gc = [_coords(v) for v in g]
    fc = [_coords(v) for v in f]
    for k, s in _ORDERS:
        def key(c, k=k, s=s):
            return (s * c[k],) + c
        diff = [a - b for a, b in zip(max(gc, key=key), max(fc, key=key))]
        if any(d < 0 for d in diff):
            return f"order on coordinate {k} with sign {s:+d}"
    if len(f) > 1 and len(g) == 1:
        return "a product of a multi-term element with a nonzero element has at least 2 terms"
    return None


@_timed
def fuzz_exact_div(trials: int, rng: random.Random) -> FuzzResult:
    """exact_div(f*h, f) == h, and confirmed non-multiples are rejected."""
    res = FuzzResult("exact-div", trials)
    for _ in range(trials):
        f, h = smp.rand_alg(rng), smp.rand_alg(rng)
        q = alg.exact_div(f * h, f)
        if q != h:
            res.failures.append(f"({f}*{h}) / ({f}) gave {q}")
    rejected = inconclusive = 0
    attempts = 0
    while rejected < trials:
        attempts += 1
        f, h = smp.rand_alg(rng), smp.rand_alg(rng)
        g = f * h + smp.rand_alg(rng, max_terms=2)
        why = newton_vertex_obstruction(g, f)
        q = alg.exact_div(g, f)
        if why is None:
            if q is None:
                inconclusive += 1
            elif f * q != g:
                res.failures.append(f"returned non-quotient for ({g}) / ({f})")
            continue
        rejected += 1
        if q is not None:
            res.failures.append(f"({g}) / ({f}) accepted despite obstruction: {why}")
    # monomial divisors: exact_div agrees with exponent subtraction
    for _ in range(trials):
        a, b = smp.rand_expvec(rng), smp.rand_expvec(rng)
        got = alg.exact_div(alg.mono(a), alg.mono(b))
        want = ex.sub(a, b)
        if (got is None) != (want is None) or (got is not None and got != alg.mono(want)):
            res.failures.append(f"monomial division {a} / {b} disagrees with sub")
    res.stats = {"multiples": trials, "rejected_confirmed": rejected,
                 "unconfirmed_skipped": inconclusive, "attempts": attempts}
    return res


# -- prime-like witnesses in Z + xK[x] -------------------------------------------------------------


def dk_triple(rng: random.Random, case: Case) -> tuple[DKElem, DKElem, DKElem]:
    """Random (r, b, c) with r | bc, b and c nonunits, r of degree <= 3 in the given case."""
    while True:
        da = rng.randint(1, 3) if case is not Case.CASE2_1_CONSTANT else rng.randint(0, 3)
        db = rng.randint(0, 3 - da)
        if case is Case.CASE1_ORD:
            ca, cb = 0, rng.randint(-5, 5)
        elif case is Case.CASE2_1_CONSTANT:
            ca, cb = rng.choice([i for i in range(-6, 7) if i]), rng.choice([i for i in range(-4, 5) if i])
            if abs(ca * cb) < 2:
                continue
        else:
            ca, cb = rng.choice([1, -1]), rng.choice([1, -1])
        ra = smp.rand_dk(rng, da, ca)
        rb = smp.rand_dk(rng, db, cb)
        if ra.is_zero or rb.is_zero:
            continue
        h1 = smp.rand_dk(rng, rng.randint(0, 3 - ra.degree))
        h2 = smp.rand_dk(rng, rng.randint(0, max(0, 3 - rb.degree)))
        if h1.is_zero or h2.is_zero:
            continue
        r, b, c = ra * rb, ra * h1, rb * h2
        if r.is_unit or b.is_unit or c.is_unit:
            continue
        return r, b, c


@_timed
def fuzz_prime_like_dk(trials: int, rng: random.Random) -> FuzzResult:
    res = FuzzResult("prime-like-dk", trials)
    counts = {c.value: 0 for c in Case}
    cases = list(Case)
    for k in range(trials):
        case = cases[k % 3]
        r, b, c = dk_triple(rng, case)
        try:
            w = prime_like_witness(r, b, c)
        except Exception as exc:  # any failure is a counterexample
            res.failures.append(f"r={r}, b={b}, c={c}: {type(exc).__name__}: {exc}")
            continue
        counts[w.case_used.value] += 1
        side = b if w.side.value == "DividesB" else c
        if (w.divisor.is_unit or dk_divides(w.divisor, r) is None
                or dk_divides(w.divisor, side) is None):
            res.failures.append(f"unverified witness {w.divisor} for r={r}")
        if w.case_used is not case:
            res.failures.append(f"r={r} landed in {w.case_used.value}, generated for {case.value}")
    res.stats = {"cases": counts}
    return res


# -- primal decompositions ---------------------------------------------------------------------------


def _z_primal_oracle(p: int, a: int, b: int) -> list[int]:
    """All positive x with x | a and (p/x) | b, by brute force over divisors of p."""
    return [x for x in range(1, abs(p) + 1) if p % x == 0 and a % x == 0 and b % (p // x) == 0]


@_timed
def fuzz_primal_z(trials: int, rng: random.Random) -> FuzzResult:
    res = FuzzResult("primal-z", trials)
    for _ in range(trials):
        p = rng.choice([1, -1]) * rng.randint(2, 10_000)
        a = rng.choice([1, -1]) * rng.randint(1, 10_000)
        b = (p // gcd(p, a)) * rng.choice([1, -1]) * rng.randint(1, 50)
        dec = primal_decompose(Z, p, a, b)
        valid = _z_primal_oracle(p, a, b)
        if not isinstance(dec, PrimalDecomposition):
            res.failures.append(f"p={p}, a={a}, b={b}: {dec.verdict}")
            continue
        if not valid or abs(dec.r_part) != max(valid):
            res.failures.append(f"p={p}, a={a}, b={b}: r_part {dec.r_part} vs oracle {valid[-1:] }")
    return res


_GRID = [Fraction(k, 2) for k in range(5)]  # 0, 1/2, ..., 2


def _small_mono(rng: random.Random, nonzero: bool = False) -> tuple:
    while True:
        c = tuple(rng.choice(_GRID) if rng.random() < 0.6 else Fraction(0) for _ in range(4))
        if not nonzero or any(c):
            return c


def _grid_vec(c: tuple) -> ExpVec:
    return ExpVec(c[0], c[1], c[2], 0, {1: c[3]})


@_timed
def fuzz_primal_r0(trials: int, rng: random.Random) -> FuzzResult:
    """Monomial p | ab in R0; compare with brute force over the half-integer grid below p."""
    res = FuzzResult("primal-r0", trials)
    for _ in range(trials):
        p = _small_mono(rng, nonzero=True)
        a = _small_mono(rng)
        extra = _small_mono(rng)
        b = tuple(max(pi - ai, Fraction(0)) + e for pi, ai, e in zip(p, a, extra))
        P, A, B = (alg.mono(_grid_vec(v)) for v in (p, a, b))
        dec = primal_decompose(R0, P, A, B)
        ranges = [[Fraction(k, 2) for k in range(int(pi * 2) + 1)] for pi in p]
        valid = [
            r for r in itertools.product(*ranges)
            if all(ri <= ai for ri, ai in zip(r, a)) and all(pi - ri <= bi for pi, ri, bi in zip(p, r, b))
        ]
        if not isinstance(dec, PrimalDecomposition):
            res.failures.append(f"p={P}, a={A}, b={B}: {dec.verdict}")
            continue
        top = tuple(max(col) for col in zip(*valid)) if valid else None
        if top not in valid or dec.r_part != alg.mono(_grid_vec(top)):
            res.failures.append(f"p={P}, a={A}, b={B}: r_part {dec.r_part} vs oracle {top}")
    return res


# -- Gauss, AQ and prime-like coherence -----------------------------------------------------------------


def _primitive_int_poly(rng: random.Random) -> list[int]:
    while True:
        f = [rng.randint(-30, 30) for _ in range(rng.randint(1, 4))]
        if any(f) and is_primitive(Z, f):
            return f


@_timed
def fuzz_gauss_z(trials: int, rng: random.Random) -> FuzzResult:
    res = FuzzResult("gauss-z", trials)
    for _ in range(trials):
        f, g = _primitive_int_poly(rng), _primitive_int_poly(rng)
        v = gauss_product_check(Z, f, g)
        if v.verdict != "Primitive":
            res.failures.append(f"f={f}, g={g}: {v.verdict}")
    return res


@_timed
def fuzz_prime_like_coherence(trials: int, rng: random.Random) -> FuzzResult:
    """NoWitness in Z[sqrt(-5)] always comes with an AQ violation on the same triple;
    Z and monomials of R never answer NoWitness."""
    res = FuzzResult("prime-like-coherence", trials)
    nowitness = 0
    for _ in range(trials):
        # p | rs by construction: split p*h across r and s
        p = smp.rand_quadint(rng, 4)
        if p.is_unit:
            continue
        h = smp.rand_quadint(rng, 3)
        pieces = [x for x in Z5.factorizations(p * h)]
        u, v = rng.choice(pieces)
        r, s = (u, v) if rng.random() < 0.5 else (v, u)
        if rng.random() < 0.3:
            r, s = QuadInt(1, 1), QuadInt(1, -1)
            p = rng.choice([QuadInt(2), QuadInt(3), QuadInt(6), QuadInt(1, 1)])
        if Z5.divide(r * s, p) is None:
            continue
        w = prime_like_check(Z5, p, r, s)
        if w.verdict == "NoWitness":
            nowitness += 1
            if aq_triple_check(Z5, p, r, s).verdict != "Violation":
                res.failures.append(f"NoWitness without AQ violation at p={p}, r={r}, s={s}")
    for _ in range(trials):
        p = rng.randint(2, 500)
        r = rng.randint(1, 500) * rng.choice([1, -1])
        s = (p // gcd(p, r)) * rng.randint(1, 20)
        if prime_like_check(Z, p, r, s).verdict != "Witness":
            res.failures.append(f"Z: no witness for p={p}, r={r}, s={s}")
    from .domains import R as RDOM
    for _ in range(trials):
        p = smp.rand_expvec(rng, xyz=True)
        r = smp.rand_expvec(rng, xyz=True)
        s = ex.add(ex.sub(p, ex.minimum(p, r)) or ExpVec(), smp.rand_expvec(rng, xyz=True))
        P, Rm, S = alg.mono(p), alg.mono(r), alg.mono(s)
        if RDOM.divide(Rm * S, P) is None:
            continue
        if prime_like_check(RDOM, P, Rm, S).verdict != "Witness":
            res.failures.append(f"R: no witness for p={P}, r={Rm}, s={S}")
    res.stats = {"z5_nowitness": nowitness}
    return res


# -- MCD grid falsifier ---------------------------------------------------------------------------------


@_timed
def fuzz_mcd_grid(trials: int, rng: random.Random) -> FuzzResult:
    """For b_i and {s_y, s_z}: no nonzero delta on a rational grid below
    min(s_y - b_i, s_z - b_i) gives a larger common divisor b_i + delta in R."""
    res = FuzzResult("mcd-grid", trials)
    dens = range(1, 9)
    for i in range(1, trials + 1):
        b = ex.b_vec(i)
        m = ex.minimum(ex.sub(ex.S_Y, b), ex.sub(ex.S_Z, b))
        # m is T_i alone; candidates delta = T_i^e and, to be thorough, any X/Y/Z content up to m's (none)
        for den in dens:
            for num in range(1, den + 1):
                delta = ExpVec.t(i, Fraction(num, den))
                if ex.sub(m, delta) is None:
                    res.failures.append(f"grid point {delta} not below {m}")
                    continue
                d = ex.add(b, delta)
                ok_common = (alg.r_monomial_quotient(ex.S_Y, d) is not None
                             and alg.r_monomial_quotient(ex.S_Z, d) is not None)
                b_divides = alg.r_monomial_quotient(d, b) is not None
                if ok_common and b_divides:
                    res.failures.append(f"b_{i} + {delta} is a larger common divisor")
        if alg.mcd_verify(b, ex.S_Y, ex.S_Z).status is not alg.MCDStatus.MAXIMAL:
            res.failures.append(f"b_{i} not maximal")
    return res


# -- parser round trips -------------------------------------------------------------------------------------


@_timed
def fuzz_parser(trials: int, rng: random.Random) -> FuzzResult:
    res = FuzzResult("parser", trials)
    gens: dict[str, Callable] = {
        "r0": lambda: smp.rand_alg(rng, allow_zero=True),
        "r": lambda: smp.rand_r(rng),
        "z": lambda: rng.randint(-10**6, 10**6),
        "z5": lambda: QuadInt(rng.randint(-99, 99), rng.randint(-99, 99)),
        "dk": lambda: smp.rand_dk(rng, rng.randint(0, 4)),
    }
    for tag, gen in gens.items():
        for _ in range(trials):
            e = gen()
            text = print_expr(e)
            try:
                back = parse_expr(text, tag)
            except Exception as exc:
                res.failures.append(f"{tag}: {text!r} failed to parse: {exc}")
                continue
            if back != e or print_expr(back) != text:
                res.failures.append(f"{tag}: {text!r} round-tripped to {print_expr(back)!r}")
    return res


PROPERTIES: dict[str, Callable[..., FuzzResult]] = {
    "claim": fuzz_claim,
    "antimatter": fuzz_antimatter,
    "frobenius": fuzz_frobenius,
    "exact-div": fuzz_exact_div,
    "prime-like-dk": fuzz_prime_like_dk,
    "primal-z": fuzz_primal_z,
    "primal-r0": fuzz_primal_r0,
    "gauss-z": fuzz_gauss_z,
    "prime-like-coherence": fuzz_prime_like_coherence,
    "mcd-grid": fuzz_mcd_grid,
    "parser": fuzz_parser,
}


def run_property(name: str, trials: int = 1000, seed: int = 0) -> FuzzResult:
    try:
        fn = PROPERTIES[name]
    except KeyError:
        raise ValueError(f"unknown property {name!r}; choose from {', '.join(PROPERTIES)}") from None
    return fn(trials, seed)
