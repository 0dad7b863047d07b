"""Acceptance criteria, one printed PASS/FAIL line each.

Run under pytest, or directly with ``python3 tests/test_acceptance.py``.
"""

import random
import sys
import time

import mpmath
import pytest
import sympy

from order10 import reproduce
from order10.classfield import (HighPrecComplex, class_polynomial, eta_eval,
                                recognize_algebraic)
from order10.classfield.recognize import poly_eval
from order10.qseries import FracSeries

# criterion -> (description, time budget in seconds)
CRITERIA = {
    1: ("printed q-expansions", 1),
    2: ("cusp-order tables", 1),
    3: ("identity catalog to O(q^200)", 30),
    4: ("modular equations at levels 2,3,5,7,11", 180),
    5: ("structure at p = 3, 7, 11", 10),
    6: ("singular values at -1/sqrt(-10)", 60),
    7: ("level-2 propagation to -1/(2 sqrt(-10))", 120),
    8: ("property suites", 120),
}

_cache = {}


def _printed(checks):
    return [c for c in checks if c.kind == "printed"]


def _outcome(checks, required=None):
    required = required if required is not None else _printed(checks)
    failed = [c.id for c in required if not c.passed]
    return not failed, failed


def criterion_1():
    return _outcome(reproduce.check_expansions())


def criterion_2():
    return _outcome(reproduce.check_cusp_tables())


def criterion_3():
    return _outcome(reproduce.check_identities(200))


def criterion_4():
    return _outcome(reproduce.check_modular_equations())


def criterion_5():
    # the conjectured congruence for U is a diagnostic in the manifest but required here
    checks = reproduce.check_structure()
    return _outcome(checks, checks)


def criterion_6():
    return _outcome(reproduce.check_base_point(120))


def criterion_7():
    return _outcome(reproduce.check_half_point(120))


def _ring_axioms(rng, n=200):
    def rand():
        grain = rng.choice([1, 2, 4])
        lead = rng.randint(-3, 4)
        coeffs = [rng.randint(-9, 9) for _ in range(rng.randint(0, 7))]
        return FracSeries.from_coeffs(coeffs, grain, lead, lead + 12)

    def same(x, y):
        o = min(x.order, y.order)
        return x.truncate(o) == y.truncate(o)

    for _ in range(n):
        a, b, c = rand(), rand(), rand()
        if not (same((a + b) + c, a + (b + c)) and same((a * b) * c, a * (b * c))
                and same(a * (b + c), a * b + a * c) and same(a * b, b * a)):
            return False
    return True


def _eta_laws(rng, n=100, prec=40):
    with mpmath.workdps(prec + 10):
        tol = mpmath.mpf(10) ** -(prec - 5)
        for _ in range(n):
            t = mpmath.mpc(rng.uniform(-2, 2), rng.uniform(0.05, 3))
            e = eta_eval(t, prec).value
            if abs(eta_eval(t + 1, prec).value / e - mpmath.expjpi(mpmath.mpf(1) / 12)) > tol:
                return False
            if abs(eta_eval(-1 / t, prec).value / e - mpmath.sqrt(-1j * t)) > tol:
                return False
    return True


def _recognition_round_trips(rng, n=20, prec=50):
    for _ in range(n):
        coeffs = [1] + [rng.randint(-12, 12) for _ in range(rng.randint(1, 3))]
        coeffs[-1] = coeffs[-1] or 1
        with mpmath.workdps(2 * prec):
            roots = mpmath.polyroots(coeffs, maxsteps=200, extraprec=400)
            z2 = HighPrecComplex.of(roots[0], 2 * prec)
        cand = recognize_algebraic(HighPrecComplex.of(z2.value, prec), 4, prec)
        with mpmath.workdps(2 * prec):
            if abs(poly_eval(cand.minpoly, z2.value)) > mpmath.mpf(10) ** -prec:
                return False
        # the recognized polynomial must divide the generator
        X = sympy.Symbol("X")
        if not sympy.rem(sympy.Poly(coeffs, X), sympy.Poly(list(cand.minpoly), X)).is_zero:
            return False
    return True


def _lift_independence():
    a = class_polynomial(-40)
    b = class_polynomial(-40, alternative_lift=True)
    if a.coeffs != b.coeffs or [s.V_x for s in a.data] == [s.V_x for s in b.data]:
        return False
    with mpmath.workdps(130):
        return all(abs(x.value - y.value) < mpmath.mpf(10) ** -100
                   for x, y in zip(a.conjugates, b.conjugates))


def criterion_8():
    rng = random.Random(20240601)
    parts = {"ring_axioms": _ring_axioms(rng), "eta_laws": _eta_laws(rng),
             "recognition": _recognition_round_trips(rng), "lift_independence": _lift_independence()}
    failed = [k for k, v in parts.items() if not v]
    return not failed, failed


def evaluate(n):
    if n not in _cache:
        t = time.perf_counter()
        ok, failed = globals()[f"criterion_{n}"]()
        _cache[n] = (ok, failed, time.perf_counter() - t)
    return _cache[n]


def line(n):
    ok, failed, secs = evaluate(n)
    desc, budget = CRITERIA[n]
    in_time = secs < budget
    verdict = "PASS" if ok and in_time else "FAIL"
    extra = "" if ok else f"; failing: {', '.join(failed)}"
    if not in_time:
        extra += f"; over the {budget} s budget"
    return verdict, f"CRITERION {n} {verdict} {desc} ({secs:.1f} s){extra}"


@pytest.mark.parametrize("n", sorted(CRITERIA))
def test_criterion(n, capsys):
    verdict, text = line(n)
    with capsys.disabled():
        print("\n" + text)
    assert verdict == "PASS", text


if __name__ == "__main__":
    results = [line(n) for n in sorted(CRITERIA)]
    for _, text in results:
        print(text)
    sys.exit(0 if all(v == "PASS" for v, _ in results) else 1)

