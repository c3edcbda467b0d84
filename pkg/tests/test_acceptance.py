"""Acceptance criteria, one PASS/FAIL line each, exact equality throughout.

Run with ``pytest tests/test_acceptance.py -v`` or directly with
``python3 tests/test_acceptance.py`` for just the twelve summary lines.
"""

import sys
from fractions import Fraction
from importlib.resources import files
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from qcfrac.cfrac import NAMES, CFSpec, auto_depth, named_product
from qcfrac.dissection import (FAMILIES, DissectionSpec, verify_diss_expansion, verify_dissection,
                               vanishing_scan)
from qcfrac.dsl import DSLError, check_file, parse, parse_expression, render
from qcfrac.identities import THM23_SIGN, suite_auxiliary, suite_thm21, suite_thm22, suite_thm23
from qcfrac.partitions import NAMED_SPECS, enum_counts, gf_counts, verify_thm31, verify_thm32
from qcfrac.theta import mono, pochhammer, theta_product, theta_sum

from ast_gen import seeded_asts
from oracles import partitions_listed

F = Fraction
ORDERS = {"thm21": 120, "thm22": 120, "thm23": 80, "aux": 100}


def emit(n: int, ok: bool, text: str, detail: str = "") -> None:
    line = f"{'PASS' if ok else 'FAIL'} [{n}] {text}" + (f" ({detail})" if detail else "")
    sys.__stdout__.write(line + "\n")
    sys.__stdout__.flush()


def failures(results):
    return [f"{r.id} at q^{r.first_mismatch[0]}" for r in results if not r.passed]


def monomial_pairs():
    pairs = []
    for d in (1, 2, 4):
        exps = [F(k, d) for k in range(1, 3 * d + 1) if d == 1 or k % 2]
        for i, ea in enumerate(exps):
            for eb in exps[i:i + 3]:
                for sa, sb in ((1, 1), (-1, -1), (1, -1)):
                    pairs.append((mono(ea, sa), mono(eb, sb)))
    return pairs


# -- criteria -------------------------------------------------------------------

def criterion_1():
    pairs = monomial_pairs()
    bad = [f"f({a}, {b})" for a, b in pairs if theta_sum(a, b, 50) != theta_product(a, b, 50)]
    ok = len(pairs) >= 40 and not bad
    emit(1, ok, f"triple product on {len(pairs)} monomial pairs, grids 1/2/4, order 50",
         ", ".join(bad[:3]))
    return ok


def criterion_2():
    bad = failures(suite_thm21(120))
    emit(2, not bad, "first theorem, eight parts as printed, order 120", "; ".join(bad))
    return not bad


def criterion_3():
    bad = failures(suite_thm22(120))
    emit(3, not bad, "second theorem, eight parts, order 120", "; ".join(bad))
    return not bad


def criterion_4():
    results = suite_thm23(4, 80)
    bad = failures(results)
    signs = {(name, n): THM23_SIGN[name](n) for name in THM23_SIGN for n in range(1, 5)}
    rule = all(signs[(v, n)] == (-1 if v != "V2" and n % 2 else 1) for v, n in signs)
    ok = not bad and rule and len(results) == 12
    emit(4, ok, "V(q)^n V(-q)^n = +-V(q^2)^n, n = 1..4, order 80, parity signs", "; ".join(bad))
    return ok


def criterion_5():
    results = suite_auxiliary(100)
    bad = failures(results)
    emit(5, not bad, f"auxiliary suite, {len(results)} identities, order 100", "; ".join(bad))
    return not bad


def criterion_6():
    bad = []
    for name in NAMES:
        rep = auto_depth(CFSpec.named(name), 60)
        if not rep.stabilized or rep.series != named_product(name, 60):
            bad.append(name)
    emit(6, not bad, "product form = stabilized convergent for all 7 fractions, order 60",
         ", ".join(bad))
    return not bad


TABLES = [("C1", 7, 3), ("C2", 6, 1), ("C3", 7, 2), ("D1", 6, 8), ("D2", 0, 1), ("D3", 6, 7)]


def criterion_7():
    bad = []
    for key, n, want in TABLES:
        spec = NAMED_SPECS[key]
        got = (gf_counts(spec, n)[n], enum_counts(spec, n)[n])
        if got != (want, want):
            bad.append(f"{key}({n}) = {got}")
    emit(7, not bad, "table values by generating function and enumeration", ", ".join(bad))
    return not bad


def criterion_8():
    results = [verify_thm31(200), verify_thm32(200)]
    bad = [f"{r.id} at n={r.first_mismatch[0]}" for r in results if not r.passed]
    emit(8, not bad, "colour-partition relations through n = 200, both methods agree",
         "; ".join(bad))
    return not bad


def criterion_9():
    results = [verify_dissection(DissectionSpec(14, 3, 7, 7), 120), verify_diss_expansion(120)]
    bad = failures(results)
    emit(9, not bad, "(14,3,7,7) dissection and printed six-term expansion, order 120",
         "; ".join(bad))
    return not bad


def criterion_10():
    bad = []
    for fam in FAMILIES.values():
        rep = vanishing_scan(fam, 500)
        if not rep.result.passed or not rep.first_nonzero:
            bad.append(fam.label)
    emit(10, not bad, "six vanishing progressions through q^500, with nonzero witnesses",
         ", ".join(bad))
    return not bad


MALFORMED = [
    "q^^2 == 1;", "f(q, ) == 1;", "f(q) == 1;", "phi() == 1;", "poch(q, q) == 1;", "S9 == 1;",
    "q == q", "== q;", "(q == 1;", "q^1/0 == 1;", "2 $ 3 == 1;", "f(q^2*q, q) == 1;",
    "#order x\nq == q;", "foo(q) == 1;", "q == q;;", "poch(; q) == 1;", "\x00", "q^" * 50,
    "(" * 200, "#scale 0\n",
]


def criterion_11():
    problems = []
    suites = {"thm21": suite_thm21(120), "thm22": suite_thm22(120), "thm23": suite_thm23(4, 80),
              "aux": suite_auxiliary(100)}
    for name, want in suites.items():
        got = check_file(files("qcfrac.corpus") / f"{name}.qid", ORDERS[name])
        key = lambda rs: [(r.id, r.status, r.first_mismatch) for r in rs]
        if key(got) != key(want):
            problems.append(f"{name}.qid differs")
    trees = seeded_asts(1000)
    if any(parse_expression(render(t)) != t for t in trees):
        problems.append("round trip")
    for src in MALFORMED:
        try:
            parse(src)
            problems.append(f"accepted {src[:10]!r}")
        except DSLError as exc:
            if not exc.position or min(exc.position) < 1:
                problems.append(f"no position for {src[:10]!r}")
        except Exception as exc:
            problems.append(f"crash {type(exc).__name__} on {src[:10]!r}")
    ok = not problems
    emit(11, ok, f"corpus matches suites, {len(trees)} trees round-trip, {len(MALFORMED)} bad inputs",
         "; ".join(problems))
    return ok


def criterion_12():
    inv = pochhammer(mono(1), 1, 31).inverse()
    bad = [n for n in range(31) if inv.coefficient(n) != len(partitions_listed(n))]
    emit(12, not bad, "1/(q;q) against listed partitions, n <= 30", str(bad[:3]) if bad else "")
    return not bad


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
            criterion_7, criterion_8, criterion_9, criterion_10, criterion_11, criterion_12]


@pytest.mark.parametrize("n", range(1, 13))
def test_criterion(n, capsys):
    with capsys.disabled():
        ok = CRITERIA[n - 1]()
    assert ok


if __name__ == "__main__":
    outcomes = [c() for c in CRITERIA]
    print(f"{sum(outcomes)}/{len(outcomes)} criteria pass")
    sys.exit(0 if all(outcomes) else 1)
