from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from order10.modeq import (BivarPoly, DerivationError, _solve, check_U_factor, derive_G,
                           derive_G_report, derive_U, derive_U_report, kronecker_target,
                           pole_degrees, psi, row_bound, solve_modeq, structure_checks,
                           transformed_G, verify_modeq)
from order10.reference import G_REFERENCE, U_REFERENCE

X, Y = BivarPoly.X(), BivarPoly.Y()
LEVELS = [2, 3, 5, pytest.param(7, marks=pytest.mark.slow), pytest.param(11, marks=pytest.mark.slow)]

polys = st.dictionaries(st.tuples(st.integers(0, 4), st.integers(0, 4)), st.integers(-20, 20),
                        max_size=8).map(BivarPoly)


def to_sympy(p):
    x, y = sympy.symbols("X Y")
    return sympy.expand(sum(c * x ** i * y ** j for (i, j), c in p.items()))


# ---------------------------------------------------------------------------
# polynomial arithmetic


@given(polys, polys)
@settings(max_examples=200)
def test_arithmetic_matches_sympy(a, b):
    assert to_sympy(a + b) == sympy.expand(to_sympy(a) + to_sympy(b))
    assert to_sympy(a * b) == sympy.expand(to_sympy(a) * to_sympy(b))
    assert to_sympy(a - b) == sympy.expand(to_sympy(a) - to_sympy(b))


@given(polys, polys)
def test_exact_division(a, b):
    if b.is_zero():
        return
    quot, rem = (a * b).divmod_exact(b)
    assert not rem
    assert {k: v for k, v in quot.items() if v} == dict(a.items())
    assert b.divides(a * b)


@given(polys)
def test_serialization_round_trips(a):
    assert BivarPoly.from_json(a.to_json()) == a
    assert BivarPoly.from_text(a.to_text()) == a


@given(polys)
def test_canonical_form(a):
    c = a.canonical()
    assert c.equal_up_to_sign(a.canonical())
    if not a.is_zero():
        assert c.content == 1
        assert c.items()[0][1] > 0


def test_text_format():
    p = X - Y ** 2 - 4 * X * Y - X ** 2 + 5 * X * Y ** 2
    assert p.to_text() == "X - Y^2 - 4*X*Y - X^2 + 5*X*Y^2"
    assert BivarPoly.from_text("X^5 - Y") == X ** 5 - Y


def test_json_shape():
    d = (3 * X - Y).to_json_dict()
    assert d == {"terms": [{"i": 1, "j": 0, "c": "3"}, {"i": 0, "j": 1, "c": "-1"}]}


def test_reduction_mod_p():
    assert (7 * X + 8 * Y).mod(7) == BivarPoly({(0, 1): 1})
    assert (X ** 3 - Y).congruent(X ** 3 + 6 * Y, 7)


# ---------------------------------------------------------------------------
# degree bounds


def test_psi():
    assert [psi(n) for n in (2, 3, 5, 7, 11, 4, 6)] == [3, 4, 6, 8, 12, 6, 12]


@pytest.mark.parametrize("p", [3, 7, 11, 13])
def test_pole_degrees_at_primes_coprime_to_10(p):
    b = pole_degrees(p)
    assert b.d1 == b.dn == p + 1


def test_pole_degrees_small_levels():
    assert (pole_degrees(2).d1, pole_degrees(2).dn) == (2, 2)
    assert (pole_degrees(5).d1, pole_degrees(5).dn) == (5, 5)
    with pytest.raises(ValueError):
        pole_degrees(1)


# ---------------------------------------------------------------------------
# derivations


@pytest.mark.parametrize("n", LEVELS)
def test_derive_G_matches_printed(n):
    d = derive_G_report(n)
    assert d.dimension == 1
    assert d.poly.equal_up_to_sign(G_REFERENCE[n])
    assert verify_modeq(d.poly, "g", n).passed


@pytest.mark.parametrize("n", LEVELS)
def test_derive_U_matches_printed(n):
    d = derive_U_report(n)
    assert d.dimension == 1
    assert d.poly.equal_up_to_sign(U_REFERENCE[n])
    assert verify_modeq(d.poly, "U", n).passed


@pytest.mark.parametrize("n", [2, 3, 5])
def test_derivation_stable_when_order_raised(n):
    for rep in (derive_G_report, derive_U_report):
        d = rep(n)
        assert rep(n, int(d.order) + 50).poly == d.poly


@pytest.mark.parametrize("n", [2, 3, 5, 7])
def test_no_relation_in_smaller_box(n):
    b = pole_degrees(n)
    box = (b.dn - 1, b.d1)
    order = Fraction(row_bound(b.dn, b.d1, b) + 51)
    poly, dim, _, _ = _solve("g", n, box, order, "bareiss")
    assert dim == 0 and poly is None


def test_solvers_agree():
    assert derive_G(3, method="bareiss") == derive_G(3, method="multimodular")


def test_order_below_valence_bound_rejected():
    with pytest.raises(DerivationError):
        derive_G_report(3, order=5)


def test_level_two_forms():
    G2 = X - X ** 2 - 4 * X * Y - Y ** 2 + 5 * X * Y ** 2
    U2 = X ** 4 - Y ** 2 + 4 * X ** 2 * Y ** 2 - 5 * X ** 4 * Y ** 2 + Y ** 4
    assert derive_G(2).equal_up_to_sign(G2)
    assert derive_U(2).equal_up_to_sign(U2)
    assert transformed_G(2, G2) == -16 * U2


def test_level_five_forms():
    P = Y + 11 * X ** 3 - 12 * X ** 2 + 7 * X - 2
    Q = (25 * X ** 2 * Y ** 3 - 5 * X * (10 * X - 1) * Y ** 2
         + (35 * X ** 2 - 10 * X + 1) * Y - 12 * X ** 2 + 7 * X - 2)
    R = ((5 * Y ** 4 - 5 * Y ** 2 + 1) * X ** 3 - Y * (5 * Y ** 2 - 3) * X ** 2
         + (3 * Y ** 2 - 1) * X - Y)
    G5 = X ** 5 - Y - 5 * X * Y * P - 25 * X ** 2 * Y ** 2 * Q
    U5 = X ** 5 - Y - 5 * X * Y * R
    other = BivarPoly.from_text("X^5 + Y - 5*X^2*Y + 5*X^4*Y + 5*X*Y^2 - 15*X^3*Y^2 + 15*X^2*Y^3"
                                " - 25*X^4*Y^3 + 25*X^3*Y^4 + 25*X^4*Y^5")
    assert derive_G(5).equal_up_to_sign(G5)
    assert derive_U(5).equal_up_to_sign(U5)
    assert transformed_G(5, G5) == 1024 * U5 * other
    # the other factor does not vanish on the U pair
    assert not verify_modeq(other, "U", 5, 40).passed


def test_U_factor_check():
    chk = check_U_factor(derive_U(3), 3)
    assert chk.divides and chk.cofactor_valuation is not None
    assert not check_U_factor(X - Y, 3).divides


def test_verify_rejects_wrong_polynomials():
    assert not verify_modeq(BivarPoly(), "g", 2).passed
    assert not verify_modeq(X - Y, "g", 2, 30).passed


# ---------------------------------------------------------------------------
# structure at primes


@pytest.mark.parametrize("p", [3, pytest.param(7, marks=pytest.mark.slow),
                               pytest.param(11, marks=pytest.mark.slow)])
def test_structure_of_G(p):
    rep = structure_checks(derive_G(p), p, "g")
    assert rep.degrees == (p + 1, p + 1) and rep.degree_ok
    assert rep.symmetric and rep.kronecker and rep.support


@pytest.mark.parametrize("p", [3, pytest.param(7, marks=pytest.mark.slow),
                               pytest.param(11, marks=pytest.mark.slow)])
def test_congruence_of_U(p):
    rep = structure_checks(derive_U(p), p, "U")
    assert rep.conjecture
    sign = 1 if p % 10 in (1, 9) else -1
    assert rep.details["conjecture_form"] == ("(X^p-Y)(X-Y^p)" if sign == 1 else "(X^p-Y)(X+Y^p)")


def test_kronecker_target():
    assert kronecker_target(3) == (X ** 3 - Y) * (X - Y ** 3)
    assert kronecker_target(3, -1) == (X ** 3 - Y) * (X + Y ** 3)


# ---------------------------------------------------------------------------
# numeric solving


def test_solve_modeq_level_two():
    import mpmath

    G2 = derive_G(2)
    with mpmath.workdps(30):
        roots = solve_modeq(G2, mpmath.mpf(3), "X")
        assert len(roots) == 2
        for r in roots:
            assert abs(G2.evaluate(r, mpmath.mpf(3))) < mpmath.mpf(10) ** -25
        ys = solve_modeq(G2, roots[0], "Y")
        assert min(abs(y - 3) for y in ys) < mpmath.mpf(10) ** -20
