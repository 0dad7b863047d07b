from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from order10.qseries import (FracSeries, PochhammerSpec, ZeroDivisorToPrecision, eta_quotient_series,
                             eta_series, gen_eta_exponent, gen_eta_quotient_series, gen_eta_series,
                             j_series, pochhammer_series, series_arith, sigma, theta_f)


def naive_product(factors, n):
    """Expand prod (1 + c*x^e) to x^n by repeated polynomial multiplication."""
    out = [0] * n
    out[0] = 1
    for c, e in factors:
        new = out[:]
        for i in range(n - e):
            new[i + e] += c * out[i]
        out = new
    return out


def pentagonal(n):
    out = [0] * n
    k = 0
    while True:
        hit = False
        for m in (k, -k) if k else (0,):
            e = m * (3 * m - 1) // 2
            if e < n:
                out[e] = (-1) ** (m % 2)
                hit = True
        if not hit and k > 0:
            return out
        k += 1


def same(a, b):
    """Equal on the range where both are known."""
    orders = [x.order for x in (a, b) if x.order is not None]
    if not orders:
        return a == b
    o = min(orders)
    return a.truncate(o) == b.truncate(o)


series = st.builds(
    lambda grain, lead, coeffs, width: FracSeries.from_coeffs(
        coeffs, grain, lead, None if width is None else lead + width),
    st.sampled_from([1, 2, 4, 5]),
    st.integers(-4, 6),
    st.lists(st.integers(-9, 9), max_size=8),
    st.one_of(st.none(), st.integers(3, 14)),
)
exact = st.builds(lambda grain, lead, coeffs: FracSeries.from_coeffs(coeffs, grain, lead),
                  st.sampled_from([1, 2, 3]), st.integers(-3, 5),
                  st.lists(st.integers(-9, 9), max_size=7))


def test_euler_function_matches_pentagonal_theorem():
    e = eta_series(1, 80)
    body = e * FracSeries.monomial(Fraction(-1, 24))
    assert [body[k] for k in range(80)] == pentagonal(80)
    assert e.valuation == Fraction(1, 24)


def test_eta_quotient_matches_naive_product():
    exps = {1: -4, 2: 2, 5: 4, 10: -2}
    s = eta_quotient_series(exps, 30)
    # invert the denominators with the geometric-series identity applied to the numerator
    num = naive_product([(-1, 2 * k) for k in range(1, 30)] * 2
                        + [(-1, 5 * k) for k in range(1, 30)] * 4, 30)
    den = naive_product([(-1, k) for k in range(1, 30)] * 4
                        + [(-1, 10 * k) for k in range(1, 30)] * 2, 30)
    assert s.valuation == 0
    prod = [sum(s[i] * den[k - i] for i in range(k + 1)) for k in range(30)]
    assert prod == num


def test_theta_f_equals_bilateral_sum():
    # f(a, b) = sum_n a^(n(n+1)/2) b^(n(n-1)/2) with a = -q, b = -q^4
    order = 60
    got = theta_f(-1, 1, -1, 4, order)
    want = {}
    for n in range(-20, 21):
        e = n * (n + 1) // 2 + 4 * n * (n - 1) // 2
        if e < order:
            want[e] = want.get(e, 0) + (-1) ** (n * (n + 1) // 2 + n * (n - 1) // 2)
    assert got == FracSeries.from_dict(want, order)


def test_j_matches_e4_e6_route():
    n = 12
    e4 = [1] + [240 * sigma(k, 3) for k in range(1, n + 1)]
    e6 = [1] + [-504 * sigma(k, 5) for k in range(1, n + 1)]
    E4, E6 = FracSeries.from_coeffs(e4, trunc=n + 1), FracSeries.from_coeffs(e6, trunc=n + 1)
    delta = (E4 ** 3 - E6 ** 2) / 1728
    j = (E4 ** 3 / delta).truncate(n - 1)
    assert j == j_series(n - 1)
    assert j_series(3)[-1] == 1 and j_series(3)[0] == 744 and j_series(3)[1] == 196884


def test_generalized_eta_leading_exponent_and_body():
    assert gen_eta_exponent(10, 1) == 10 * (Fraction(1, 100) - Fraction(1, 10) + Fraction(1, 6)) / 2
    s = gen_eta_series(10, 3, 25)
    lead = gen_eta_exponent(10, 3)
    body = naive_product([(-1, 3 + 10 * k) for k in range(3)] + [(-1, 7 + 10 * k) for k in range(3)], 25)
    assert all(s[lead + k] == body[k] for k in range(int(25 - lead)))
    q = gen_eta_quotient_series(10, {1: 1, 3: -1}, 20)
    assert same(q, gen_eta_series(10, 1, 20) / gen_eta_series(10, 3, 20))
    with pytest.raises(ValueError):
        gen_eta_series(10, 6)


def test_pochhammer_with_plus_sign():
    s = pochhammer_series(PochhammerSpec(-1, 1, 2), 20)  # (-q; q^2)
    want = naive_product([(1, 2 * k + 1) for k in range(10)], 20)
    assert [s[k] for k in range(20)] == want
    with pytest.raises(ValueError):
        PochhammerSpec(1, 0, 1)


def test_truncation_and_indexing():
    s = FracSeries.from_coeffs([1, 2, 3], trunc=3)
    with pytest.raises(IndexError):
        s[3]
    assert s[Fraction(1, 2)] == 0
    assert FracSeries.zero(5).is_zero() and FracSeries.zero(5).order == 5
    with pytest.raises(ZeroDivisorToPrecision):
        FracSeries.zero(5).inverse()


def test_scale_multiplies_exponents():
    s = FracSeries.from_dict({Fraction(1, 4): 1, Fraction(3, 4): -2}, 2)
    t = s.scale(4)
    assert t.terms() == {1: 1, 3: -2} and t.order == 8


@given(exact, exact, exact)
@settings(max_examples=200)
def test_ring_axioms_exact(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert (a - a).is_zero()


@given(series, series, series)
@settings(max_examples=200)
def test_ring_axioms_truncated(a, b, c):
    assert same((a + b) + c, a + (b + c))
    assert same((a * b) * c, a * (b * c))
    assert same(a * (b + c), a * b + a * c)


@given(series)
def test_inverse(a):
    if a.is_zero():
        return
    if a.order is None:
        a = a.truncate(a.valuation + 10)
    assert same(a * a.inverse(), FracSeries.constant(1))


@given(series)
def test_json_round_trip(a):
    assert FracSeries.from_json(a.to_json()) == a


def test_series_arith_dispatch():
    a = FracSeries.from_coeffs([1, 1])
    assert series_arith(a, a, "mul") == a * a
    assert series_arith(a, None, "pow", 3) == a ** 3
    with pytest.raises(ValueError):
        series_arith(a, a, "bogus")
