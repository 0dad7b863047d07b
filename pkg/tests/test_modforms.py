import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from order10.cfrac10 import G_ETA, U_ETA
from order10.modforms import (INFINITY, Cusp, EtaQuotientSpec, GenEtaQuotientSpec, cusp_count,
                              cusp_equivalent, cusp_matrix, cusp_representative, cusp_set,
                              cusp_width, divisors, ext_gcd, gen_eta_cusp_order, gen_order_table,
                              ligozat_order, newman_check, order_table, parse_exponents,
                              yang_modularity_check)
from order10.qseries import eta_quotient_series, gen_eta_quotient_series


def test_level_10_cusps():
    assert {str(x) for x in cusp_set(10)} == {"oo", "0", "1/2", "1/5"}
    assert [cusp_width(10, Cusp.parse(s)) for s in ("oo", "0", "1/2", "1/5")] == [1, 10, 5, 2]


@pytest.mark.parametrize("N", range(1, 61))
def test_cusp_count_formula_matches_enumeration(N):
    assert len(cusp_set(N)) == cusp_count(N)


def test_equivalence_examples():
    assert cusp_equivalent(10, Cusp(3, 10), INFINITY)
    assert cusp_equivalent(10, Cusp(1, 3), Cusp(0, 1))
    assert cusp_representative(10, Cusp(3, 4)) == Cusp(1, 2)
    assert not cusp_equivalent(10, Cusp(1, 2), Cusp(1, 5))


def test_cusp_matrix_is_in_sl2():
    for N in (10, 20, 30):
        for x in cusp_set(N):
            a, b, c, d = cusp_matrix(x)
            assert a * d - b * c == 1 and Cusp(a, c) == x


def test_ext_gcd():
    for a, b in [(240, 46), (-7, 3), (0, 5), (17, 0)]:
        g, x, y = ext_gcd(a, b)
        assert g == math.gcd(a, b) and a * x + b * y == g


def test_g_is_a_hauptmodul_on_gamma0_10():
    spec = EtaQuotientSpec(10, G_ETA)
    assert newman_check(spec).passes
    orders = order_table(spec)
    # one simple pole, one simple zero
    assert sorted(orders.values()) == [-1, 0, 0, 1]


def test_order_at_infinity_is_series_valuation():
    for exps in (G_ETA, U_ETA, {1: 2, 5: -2}, {2: 3, 10: -3}):
        spec = EtaQuotientSpec(10, exps)
        assert ligozat_order(spec, INFINITY) == eta_quotient_series(exps, 5).valuation


def test_order_at_zero_from_inversion():
    # eta(d*(-1/tau)) is eta(tau/d) up to a factor that does not vanish at oo
    for exps in (G_ETA, U_ETA, {1: 4, 2: -4}):
        spec = EtaQuotientSpec(10, exps)
        lead = sum(Fraction(r, 24 * d) for d, r in exps.items())
        assert ligozat_order(spec, Cusp(0, 1)) == lead * cusp_width(10, Cusp(0, 1))


weight_zero = st.lists(st.integers(-6, 6), min_size=4, max_size=4).map(
    lambda r: {1: r[0], 2: r[1], 5: r[2], 10: -sum(r[:3])})


@given(weight_zero)
def test_orders_sum_to_zero_for_weight_zero(exps):
    spec = EtaQuotientSpec(10, exps)
    assert sum(order_table(spec).values()) == 0


@given(weight_zero, weight_zero)
def test_orders_are_additive(a, b):
    ab = {d: a.get(d, 0) + b.get(d, 0) for d in divisors(10)}
    ta, tb, tab = (order_table(EtaQuotientSpec(10, e)) for e in (a, b, ab))
    assert all(tab[x] == ta[x] + tb[x] for x in tab)


def test_spec_validation():
    with pytest.raises(ValueError):
        EtaQuotientSpec(10, {3: 1})
    with pytest.raises(ValueError):
        GenEtaQuotientSpec(10, {6: 1})


def test_generalized_order_at_infinity_is_series_valuation():
    for exps in ({1: 1, 4: -1}, {2: -1, 3: 1}, {1: 2, 2: -1, 3: -1}):
        spec = GenEtaQuotientSpec(10, exps)
        assert gen_eta_cusp_order(spec, INFINITY) == gen_eta_quotient_series(10, exps, 5).valuation


@pytest.mark.parametrize("exps", [{1: 4, 4: -4}, {2: -4, 3: 4}, {1: 1, 2: -1, 3: -1, 4: 1}])
def test_generalized_order_independent_of_lift(exps):
    spec = GenEtaQuotientSpec(10, exps)
    for x in cusp_set(10):
        a, b, c, d = cusp_matrix(x)
        other = (a, b + 3 * a, c, d + 3 * c)
        assert gen_eta_cusp_order(spec, x, other) == gen_eta_cusp_order(spec, x)


def test_generalized_lift_must_match_cusp():
    with pytest.raises(ValueError):
        gen_eta_cusp_order(GenEtaQuotientSpec(10, {1: 1}), Cusp(1, 2), (1, 0, 0, 1))


def test_yang_conditions():
    rep = yang_modularity_check(GenEtaQuotientSpec(10, {1: 4, 4: -4}))
    assert (rep.sum_r, rep.sum_gr, rep.sum_g2r) == (0, -12, -60)
    assert rep.gamma_N
    assert gen_order_table(GenEtaQuotientSpec(10, {1: 4, 4: -4})).keys() == order_table(
        EtaQuotientSpec(10, {})).keys()


def test_parse_exponents():
    assert parse_exponents("1:-4, 2:2,5:4,10:-2") == G_ETA
    assert parse_exponents("1:1,1:2") == {1: 3}
