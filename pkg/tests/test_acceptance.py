"""Exit criteria.  Each test prints exactly one PASS/FAIL line."""

from __future__ import annotations

import json
import time

import pytest

from divlab.classic import QuadInt
from divlab.cli import main
from divlab.domains import Z5
from divlab.fuzz import (
    fuzz_antimatter, fuzz_claim, fuzz_exact_div, fuzz_frobenius, fuzz_primal_r0, fuzz_primal_z,
    fuzz_prime_like_dk,
)
from divlab.predicates import aq_triple_check, gauss_product_check, is_primitive, prime_like_check
from divlab.witnesses import witness_x_not_primal

pytestmark = pytest.mark.acceptance

SEED = 2024


@pytest.fixture
def report(capsys):
    def emit(number: int, title: str, ok: bool, elapsed: float, limit: float, detail: str = ""):
        within = elapsed < limit
        line = (f"[{'PASS' if ok and within else 'FAIL'}] criterion {number}: {title} "
                f"({elapsed:.3f}s, limit {limit}s){' ' + detail if detail else ''}")
        with capsys.disabled():
            print("\n" + line)
        assert ok, line
        assert within, line
    return emit


def _cli_json(capsys, *argv):
    code = main(list(argv))
    return code, json.loads(capsys.readouterr().out)


def test_criterion_1_mcd_infinite(report, capsys):
    t = time.perf_counter()
    code, d = _cli_json(capsys, "witness", "mcd-infinite", "--n", "100", "--json")
    el = time.perf_counter() - t
    ok = code == 0 and d["verdict"] == "Reproduced" and d["inputs"]["n"] == 100
    report(1, "100 distinct maximal common divisors of s_y, s_z", ok, el, 1.0)


def test_criterion_2_idf_fails(report, capsys):
    t = time.perf_counter()
    code, d = _cli_json(capsys, "witness", "idf-fails", "--n", "100", "--json")
    el = time.perf_counter() - t
    ok = code == 0 and d["verdict"] == "Reproduced"
    report(2, "100 non-associate irreducible divisors of s_y + s_z x", ok, el, 1.0)


def test_criterion_3_antimatter(report):
    res = fuzz_antimatter(10_000, SEED)
    report(3, "10^4 nonunits of R factor as nonunit squares", res.ok, res.elapsed, 5.0,
           f"failures={len(res.failures)}")


def test_criterion_4_claim(report):
    res = fuzz_claim(10_000, SEED)
    report(4, "10^4 pairs with fg in R have f or g in R", res.ok and res.stats["applicable"] == 10_000,
           res.elapsed, 10.0, f"violations={len(res.failures)}")


def test_criterion_5_z5_control(report):
    t = time.perf_counter()
    f, g = [QuadInt(2), QuadInt(1, 1)], [QuadInt(2), QuadInt(1, -1)]
    gauss = gauss_product_check(Z5, f, g)
    aq = aq_triple_check(Z5, QuadInt(2), QuadInt(1, 1), QuadInt(1, -1))
    pl = prime_like_check(Z5, QuadInt(2), QuadInt(1, 1), QuadInt(1, -1))
    el = time.perf_counter() - t
    ok = (is_primitive(Z5, f) and is_primitive(Z5, g) and gauss.verdict == "NotPrimitive"
          and aq.verdict == "Violation" and pl.verdict == "NoWitness")
    report(5, "Z[sqrt(-5)]: Gauss fails, AQ violated, 2 not prime-like", ok, el, 1.0)


def test_criterion_6_x_not_primal(report):
    t = time.perf_counter()
    rep = witness_x_not_primal()
    el = time.perf_counter() - t
    symbolic = any("symbolic" in c.name and c.passed for c in rep.details)
    report(6, "x is not primal in Z + xQ(sqrt 2)[x]", rep.reproduced and symbolic, el, 0.1)


def test_criterion_7_prime_like_dk(report):
    res = fuzz_prime_like_dk(1000, SEED)
    cases = res.stats["cases"]
    ok = res.ok and sum(cases.values()) == 1000 and min(cases.values()) >= 10
    report(7, "10^3 triples in Z + xQ(sqrt 2)[x] have verified prime-like witnesses", ok, res.elapsed, 10.0,
           f"cases={cases}")


def test_criterion_8_primal(report):
    rz = fuzz_primal_z(1000, SEED)
    rr = fuzz_primal_r0(1000, SEED)
    report(8, "10^3 primal decompositions each in Z and R0 monomials match brute force",
           rz.ok and rr.ok, rz.elapsed + rr.elapsed, 10.0,
           f"failures z={len(rz.failures)} r0={len(rr.failures)}")


def test_criterion_9_kernel(report):
    rd = fuzz_exact_div(10_000, SEED)
    rf = fuzz_frobenius(10_000, SEED)
    ok = rd.ok and rf.ok and rd.stats["rejected_confirmed"] == 10_000
    report(9, "exact_div multiply-back and rejection on 10^4 each; sqrt round trip on 10^4",
           ok, rd.elapsed + rf.elapsed, 30.0, f"failures={len(rd.failures) + len(rf.failures)}")
