from fractions import Fraction

import pytest

from order10.cfrac10 import (CF_NAMES, IDENTITIES, NAMES, c37_factors, c39_factors, cf_convergent,
                             eq15_literal_residuals, named_qexp, verify_identity)
from order10.reference import PRINTED_EXPANSIONS, expansion_mismatches


@pytest.mark.parametrize("name", sorted(PRINTED_EXPANSIONS))
def test_printed_expansions(name):
    assert expansion_mismatches(name) == []


@pytest.mark.parametrize("tag", list(IDENTITIES))
def test_identity_to_order_200(tag):
    r = verify_identity(tag, 200)
    assert r.passed and r.residual_order >= 200


def test_identity_catalog_size():
    # eighteen product identities plus the quartic for T1 + 1/T1 (listed as two L31 halves)
    assert len(IDENTITIES) == 20


def test_unknown_identity():
    with pytest.raises(KeyError):
        verify_identity("nope")


def test_quartic_in_g0_fails_at_first_powers():
    # the quartic vanishes at 1/g_i^2; evaluated at 1/g_i it leaves a nonzero residual
    residuals = eq15_literal_residuals(20)
    assert all(not r.is_zero() for r in residuals)
    assert all(r.order == 20 for r in residuals)


def test_only_one_factor_vanishes():
    for first, second in (c37_factors(60), c39_factors(60)):
        assert first.is_zero() != second.is_zero()


def test_u_two_routes():
    # U as a ratio of the two products against the eta quotient for U^2
    u = named_qexp("U", 40)
    assert (u * u).truncate(40) == named_qexp("U2", 40)


def test_generalized_eta_routes_for_g1_g2():
    for name, gen in (("g1", "g14"), ("g2", "g24")):
        assert named_qexp(name, 40) ** 4 == named_qexp(gen, 40)


def test_g0_inverts_g():
    prod = named_qexp("g", 30) * named_qexp("g0", 30)
    assert prod.terms() == {0: 1} and prod.order == 30


@pytest.mark.parametrize("name", CF_NAMES)
def test_convergents_approach_products(name):
    agree = [cf_convergent(name, d, 60).agreement_order for d in (1, 2, 3)]
    assert agree[0] < agree[1] < agree[2]


def test_t1_first_convergent():
    # q(1+q^3)/(1-q^5) = q + q^4 + q^6 + ..., while T1 has no q^6 term
    c = cf_convergent("T1", 1, 30)
    assert c.agreement_order == 6
    assert named_qexp("T1", 30)[6] == 0


def test_convergent_depth_validation():
    with pytest.raises(ValueError):
        cf_convergent("T1", 0)
    with pytest.raises(KeyError):
        cf_convergent("g", 2)


def test_named_qexp_is_exact_to_order():
    for name in NAMES:
        s = named_qexp(name, 12)
        assert s.order == 12
    assert named_qexp("I", Fraction(21, 4)).order == Fraction(21, 4)
    with pytest.raises(KeyError):
        named_qexp("nope")
