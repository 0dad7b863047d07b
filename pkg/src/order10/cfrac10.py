"""Catalog of the order-10 functions and machine checks of their q-series identities.

Every function is defined by an infinite product or eta quotient.  The
continued fractions are only used as a cross-check via ``cf_convergent``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .qseries import (
    DEFAULT_ORDER,
    FracSeries,
    PochhammerSpec,
    ZeroDivisorToPrecision,
    eta_quotient_series,
    gen_eta_quotient_series,
    j_series,
    pochhammer_series,
    theta_f,
)

Number = int | Fraction

G_ETA = {1: -4, 2: 2, 5: 4, 10: -2}
U_ETA = {1: 1, 2: -2, 5: -1, 10: 2}
U2_ETA = {d: 2 * r for d, r in U_ETA.items()}
F5_ETA = {1: 6, 5: -6}
G14_GEN = {1: -8, 2: 4, 4: -8}
G24_GEN = {2: -8, 3: -8, 4: 4}


def _poch(sign: int, s: Number, t: Number, order: Number) -> FracSeries:
    return pochhammer_series(PochhammerSpec(sign, Fraction(s), Fraction(t)), order)


def _ratio_10(lead: Fraction, num: tuple[int, int], den: tuple[int, int], order: Fraction) -> FracSeries:
    """``q^lead (q^a, q^b; q^10) / (q^c, q^d; q^10)``."""
    rel = order - lead
    top = _poch(1, num[0], 10, rel) * _poch(1, num[1], 10, rel)
    bot = _poch(1, den[0], 10, rel) * _poch(1, den[1], 10, rel)
    return FracSeries.monomial(lead) * (top / bot)


def _r_parts(r: int, order: Fraction) -> tuple[FracSeries, FracSeries]:
    """``(-q^r, -q^(5-r); q^5)`` and ``(q^r, q^(5-r); q^5)``."""
    plus = _poch(-1, r, 5, order) * _poch(-1, 5 - r, 5, order)
    minus = _poch(1, r, 5, order) * _poch(1, 5 - r, 5, order)
    return plus, minus


def _t_fraction(r: int, order: Fraction) -> FracSeries:
    plus, minus = _r_parts(r, order)
    return (plus - minus) / (plus + minus)


def _g_fraction(r: int, order: Fraction) -> FracSeries:
    plus, minus = _r_parts(r, order)
    return plus / minus


def _recipe_I(o):
    return _ratio_10(Fraction(3, 4), (1, 9), (4, 6), o)


def _recipe_J(o):
    return _ratio_10(Fraction(1, 4), (2, 8), (3, 7), o)


def _recipe_g0(o):
    return 1 / eta_quotient_series(G_ETA, o)


_RECIPES: dict[str, Callable[[Fraction], FracSeries]] = {
    "g": lambda o: eta_quotient_series(G_ETA, o),
    "I": _recipe_I,
    "J": _recipe_J,
    "U": lambda o: _recipe_I(o + 1) / _recipe_J(o + 1),
    "U2": lambda o: eta_quotient_series(U2_ETA, o),
    "I4": lambda o: _recipe_I(o) ** 4,
    "J4": lambda o: _recipe_J(o) ** 4,
    "T1": lambda o: _t_fraction(1, o),
    "T2": lambda o: _t_fraction(2, o),
    "g1": lambda o: _g_fraction(1, o),
    "g2": lambda o: _g_fraction(2, o),
    "g14": lambda o: gen_eta_quotient_series(10, G14_GEN, o),
    "g24": lambda o: gen_eta_quotient_series(10, G24_GEN, o),
    "g0": _recipe_g0,
    "U0": lambda o: _recipe_J(o + 1) / _recipe_I(o + 1),
    "v0": lambda o: 4 / (_recipe_g0(o + 2) - 1),
    "w0": lambda o: 2 * (_recipe_g0(o + 2) + 1) / (_recipe_g0(o + 2) - 1),
    "f5": lambda o: eta_quotient_series(F5_ETA, o),
    "j": lambda o: j_series(o),
}

NAMES = tuple(_RECIPES)


def named_qexp(name: str, order: Number = DEFAULT_ORDER) -> FracSeries:
    """q-expansion of a catalog function, exact below ``q^order``."""
    if name not in _RECIPES:
        raise KeyError(f"unknown function {name!r}; expected one of {', '.join(NAMES)}")
    order = Fraction(order)
    work = order
    for _ in range(6):
        s = _RECIPES[name](work)
        if s.order is None or s.order >= order:
            return s.truncate(order)
        work += order - s.order + 2
    raise ArithmeticError(f"could not reach O(q^{order}) for {name}")


# ---------------------------------------------------------------------------
# identity catalog


def _poly(coeffs: list[int], x: FracSeries) -> FracSeries:
    """Horner evaluation, ``coeffs`` from the leading term down."""
    acc = FracSeries.constant(0)
    for c in coeffs:
        acc = acc * x + c
    return acc


def _id_l31a(o):
    lhs = theta_f(-1, 1, -1, 4, o) * theta_f(-1, 2, -1, 3, o)
    return lhs - theta_f(-1, 1, -1, 2, o) * theta_f(-1, 5, -1, 10, o)


def _id_l31b(o):
    chi = _poch(-1, 1, 2, o)
    lhs = theta_f(1, 1, 1, 9, o) * theta_f(1, 3, 1, 7, o)
    return lhs - chi * theta_f(-1, 5, -1, 10, o) * theta_f(-1, 20, -1, 40, o)


def _id_l32(o):
    return named_qexp("U", o) - eta_quotient_series(U_ETA, o)


def _id_eq5(o):
    # g (5U^2 - 1) = U^2 - 1
    u2 = named_qexp("U", o) ** 2
    return named_qexp("g", o) * (5 * u2 - 1) - (u2 - 1)


def _id_t36a(o):
    # U^2 (I^4 J^4 + 1) = J^4 (1 - 2U^2 + 3U^4)
    w = o + 2
    u2 = named_qexp("U", w) ** 2
    i4, j4 = named_qexp("I4", w), named_qexp("J4", w)
    return u2 * (i4 * j4 + 1) - j4 * (1 - 2 * u2 + 3 * u2 * u2)


def _id_t36b(o):
    # U^6 (I^4 J^4 + 1) = I^4 (1 - 2U^2 + 3U^4)
    w = o + 2
    u2 = named_qexp("U", w) ** 2
    i4, j4 = named_qexp("I4", w), named_qexp("J4", w)
    return u2 ** 3 * (i4 * j4 + 1) - i4 * (1 - 2 * u2 + 3 * u2 * u2)


def _id_c37(o):
    # I(1 + IJ) - J^2 (I^3 + J), times q^(-3/4) to clear the fractional lead
    i, j = named_qexp("I", o + 1), named_qexp("J", o + 1)
    res = i * (1 + i * j) - j * j * (i ** 3 + j)
    return FracSeries.monomial(Fraction(-3, 4)) * res


def _id_t38(o):
    # g (g1^4 + g2^4) = 1 - 2g + 3g^2
    g = named_qexp("g", o)
    return g * (named_qexp("g14", o) + named_qexp("g24", o)) - (1 - 2 * g + 3 * g * g)


def _id_c39(o):
    t1, t2 = named_qexp("T1", o), named_qexp("T2", o)
    return t1 * (t1 + t2) * (1 + t2 * t2) - t2 * (1 + t1 * t2) * (1 + t1 * t1)


def _id_g1g2(o):
    g1, g2 = named_qexp("g1", o), named_qexp("g2", o)
    return g1 * g1 * g2 * g2 - named_qexp("g", o)


def _id_eq10(o):
    # j f^5 = (f^2 + 250 f + 3125)^3
    f = named_qexp("f5", o + 1)
    return named_qexp("j", o + 1) * f ** 5 - _poly([1, 250, 3125], f) ** 3


def _id_eq11(o):
    # f(2 tau) (g0 - 1)^2 = g0 (g0 - 5)^2
    g0 = named_qexp("g0", o + 2)
    f2 = named_qexp("f5", Fraction(o + 2, 2)).scale(2)
    return f2 * (g0 - 1) ** 2 - g0 * (g0 - 5) ** 2


EQ12_NUM = [1, 230, 275, -1500, 4375, -6250, 3125]
EQ14_NUM = [1, 0, -10, 0, 275, 0, -1500, 0, 4375, 0, -6250, 0, 3125]
L56V_NUM = [1, 4, 240, 480, 1440, 944, 16]
L56W_NUM = [1, -8, 260, -1440, 4240, -6608, 3824]


def _j2(o) -> FracSeries:
    return named_qexp("j", Fraction(o, 2)).scale(2)


def _id_eq12(o):
    g0 = named_qexp("g0", o + 4)
    den = g0 ** 5 * (g0 - 1) ** 2 * (g0 - 5) ** 10
    return _j2(o + 4) * den - _poly(EQ12_NUM, g0) ** 3


def _id_eq13(o):
    # g0 (1 - U0^2) = 5 - U0^2
    u02 = named_qexp("U0", o + 2) ** 2
    return named_qexp("g0", o + 2) * (1 - u02) - (5 - u02)


def _id_eq14(o):
    # multiply through by U^36; U^12 N(U0) is N with reversed coefficients in U^2
    u2 = named_qexp("U", o + 2) ** 2
    rev = _poly(EQ14_NUM[::-2], u2)
    den = u2 * u2 * (1 - u2) * (1 - 5 * u2) ** 5
    return _j2(o + 2) * den - rev ** 3


def _id_l56v(o):
    v = named_qexp("v0", o + 4)
    den = v * (v + 4) ** 5 * (v - 1) ** 10
    return _j2(o + 4) * den - _poly(L56V_NUM, v) ** 3


def _id_l56w(o):
    w = named_qexp("w0", o + 4)
    den = (w - 2) * (w + 2) ** 5 * (w - 3) ** 10
    return _j2(o + 4) * den - _poly(L56W_NUM, w) ** 3


def _eq15_residuals(o, power: int) -> list[FracSeries]:
    g0 = named_qexp("g0", o)
    mid = _poly([1, -2, 3, 0], g0)
    out = []
    for name in ("g1", "g2"):
        t2 = named_qexp(name, o) ** (-2 * power)
        out.append(t2 * t2 - mid * t2 + g0 * g0)
    return out


def _id_eq15(o):
    # the quartic T^4 - (g0^3 - 2g0^2 + 3g0) T^2 + g0^2 is annihilated by
    # T = 1/g1^2 and T = 1/g2^2 (its square roots 1/g1, 1/g2 are not roots)
    return _eq15_residuals(o, 2)


def eq15_literal_residuals(order: Number = 20) -> list[FracSeries]:
    """The same quartic evaluated at ``T = 1/g1`` and ``T = 1/g2``; nonzero."""
    return _eq15_residuals(Fraction(order), 1)


def _id_t55q(o):
    # J^4 and I^-4 are roots of T^2 - (U0^6 - 2U0^4 + 3U0^2) T + U0^4;
    # multiplied by U^6 (resp. U^6 I^8) to keep the residual a power series
    w = o + 4
    u2 = named_qexp("U", w) ** 2
    i4, j4 = named_qexp("I4", w), named_qexp("J4", w)
    out = []
    mid = 1 - 2 * u2 + 3 * u2 * u2          # U^6 times the middle coefficient
    out.append(u2 ** 3 * j4 * j4 - mid * j4 + u2)
    out.append(u2 ** 3 - mid * i4 + u2 * i4 * i4)
    return out


def _id_eq16(o):
    # alpha = T1 + 1/T1 satisfies the quartic in g0
    g0 = named_qexp("g0", o + 2)
    t1 = named_qexp("T1", o + 2)
    a = t1 + 1 / t1
    gm, gp = g0 - 1, g0 + 1
    coeffs = [gm ** 3, -8 * gp * gm, -8 * gp * (g0 * g0 + 3), -32 * gp * gm, 16 * gm ** 3]
    acc = FracSeries.constant(0)
    for c in coeffs:
        acc = acc * a + c
    # alpha has a simple pole; scale by T1^4
    return acc * t1 ** 4


@dataclass(frozen=True)
class IdentityInfo:
    tag: str
    statement: str
    residual: Callable[[Fraction], FracSeries | list[FracSeries]]


IDENTITIES: dict[str, IdentityInfo] = {i.tag: i for i in [
    IdentityInfo("L31a", "f(-q,-q^4) f(-q^2,-q^3) = f(-q) f(-q^5)", _id_l31a),
    IdentityInfo("L31b", "f(q,q^9) f(q^3,q^7) = chi(q) f(-q^5) f(-q^20)", _id_l31b),
    IdentityInfo("L32", "U = eta(t) eta(10t)^2 / (eta(2t)^2 eta(5t))", _id_l32),
    IdentityInfo("EQ5", "g = (U^2 - 1)/(5U^2 - 1)", _id_eq5),
    IdentityInfo("T36a", "I^4 + J^-4 = U^-2 - 2 + 3U^2", _id_t36a),
    IdentityInfo("T36b", "J^4 + I^-4 = U^-6 - 2U^-4 + 3U^-2", _id_t36b),
    IdentityInfo("C37", "I (1 + I J) = J^2 (I^3 + J)", _id_c37),
    IdentityInfo("T38", "g1^4 + g2^4 = 1/g - 2 + 3g", _id_t38),
    IdentityInfo("C39", "T1 (T1 + T2)(1 + T2^2) = T2 (1 + T1 T2)(1 + T1^2)", _id_c39),
    IdentityInfo("G1G2", "g1^2 g2^2 = g", _id_g1g2),
    IdentityInfo("EQ10", "j = (f^2 + 250 f + 3125)^3 / f^5", _id_eq10),
    IdentityInfo("EQ11", "f(2t) = g0 (g0 - 5)^2 / (g0 - 1)^2", _id_eq11),
    IdentityInfo("EQ12", "j(2t) = (g0^6 + 230 g0^5 + ...)^3 / (g0^5 (g0-1)^2 (g0-5)^10)", _id_eq12),
    IdentityInfo("EQ13", "g0 = (5 - U0^2)/(1 - U0^2)", _id_eq13),
    IdentityInfo("EQ14", "j(2t) = (U0^12 - 10 U0^10 + ...)^3 / (U0^20 (U0^2-1)(U0^2-5)^5)", _id_eq14),
    IdentityInfo("L56v", "j(2t) = (v0^6 + 4 v0^5 + ...)^3 / (v0 (v0+4)^5 (v0-1)^10)", _id_l56v),
    IdentityInfo("L56w", "j(2t) = (w0^6 - 8 w0^5 + ...)^3 / ((w0-2)(w0+2)^5 (w0-3)^10)", _id_l56w),
    IdentityInfo("EQ15", "1/g1^2, 1/g2^2 are roots of T^4 - (g0^3 - 2g0^2 + 3g0) T^2 + g0^2", _id_eq15),
    IdentityInfo("T55Q", "J^4, I^-4 are roots of T^2 - (U0^6 - 2U0^4 + 3U0^2) T + U0^4", _id_t55q),
    IdentityInfo("EQ16", "T1 + 1/T1 is a root of the quartic in g0", _id_eq16),
]}


@dataclass(frozen=True)
class IdentityResult:
    id: str
    order: Fraction
    residual_order: Fraction
    passed: bool

    def to_json_dict(self) -> dict:
        return {"id": self.id, "order": str(self.order),
                "residual_order": str(self.residual_order), "pass": self.passed}


def verify_identity(tag: str, order: Number = DEFAULT_ORDER) -> IdentityResult:
    """Evaluate left minus right and check it vanishes below ``q^order``.

    When the residual comes back with less precision than requested (poles
    in intermediate quotients eat into the truncation), the inputs are
    recomputed with more headroom.
    """
    if tag not in IDENTITIES:
        raise KeyError(f"unknown identity {tag!r}; expected one of {', '.join(IDENTITIES)}")
    order = Fraction(order)
    work = order
    for _ in range(6):
        res = IDENTITIES[tag].residual(work)
        parts = res if isinstance(res, list) else [res]
        reached = min(p.order for p in parts)
        if reached >= order:
            passed = all(p.is_zero() for p in parts)
            if not passed:
                reached = min(p.valuation for p in parts if not p.is_zero())
            return IdentityResult(tag, order, reached, passed)
        work += order - reached + 2
    raise ArithmeticError(f"{tag}: could not reach O(q^{order})")


# ---------------------------------------------------------------------------
# factor selection for the two polynomial identities


def c37_factors(order: Number = 50) -> tuple[FracSeries, FracSeries]:
    """Both factors of F(X,Y) evaluated at (I, J)."""
    i, j = named_qexp("I", order), named_qexp("J", order)
    first = -i + i * i * j + i ** 3 * j * j - j ** 3
    second = -i - i * i * j + i ** 3 * j * j + j ** 3
    return first, second


def c39_factors(order: Number = 50) -> tuple[FracSeries, FracSeries]:
    """Both factors of H(X,Y) evaluated at (T1, T2)."""
    x, y = named_qexp("T1", order), named_qexp("T2", order)
    first = (-x * x + y - x * y + x * x * y + x * y * y - x * x * y * y
             + x ** 3 * y * y - x * y ** 3)
    second = (-x + x * y - x * x * y + x ** 3 * y + y * y - x * y * y
              + x * x * y * y - x * x * y ** 3)
    return first, second


# ---------------------------------------------------------------------------
# continued fractions


def _mono(e: Number, c: Number = 1) -> FracSeries:
    return FracSeries.monomial(Fraction(e), c)


def _r_fraction_terms(r: int, depth: int):
    """Partial numerators/denominators of R(q^r, -q^(5-r); q^5)."""
    a, b = _mono(r), _mono(5 - r, -1)
    Q = 5

    def D(k):
        return 1 - _mono(Q * (2 * k + 1))

    def N(k):
        return _mono(Q * (k - 1)) * (a - b * _mono(Q * k)) * (a * _mono(Q * k) - b)

    return a - b, [D(k) for k in range(depth)], [None] + [N(k) for k in range(1, depth)]


def _quartic_fraction_terms(a_exp: Fraction, b_exp: Fraction, depth: int):
    """Partial numerators/denominators of the (a, b; Q) fraction with Q = q^(5/2)."""
    a, b = _mono(a_exp), _mono(b_exp)
    Q = Fraction(5, 2)
    one_ab = 1 - a * b

    def D(k):
        return one_ab if k == 0 else one_ab * (_mono(2 * k * Q) + 1)

    def N(k):
        m = (2 * k - 1) * Q
        return (a - b * _mono(m)) * (b - a * _mono(m))

    return [D(k) for k in range(depth)], [None] + [N(k) for k in range(1, depth)]


def _collapse(dens, nums, order: Fraction) -> FracSeries:
    x = dens[-1].truncate(order)
    for k in range(len(dens) - 1, 0, -1):
        x = dens[k - 1] + nums[k] / x
    return x.truncate(order)


def _convergent(name: str, depth: int, order: Fraction) -> FracSeries:
    if name in ("T1", "T2"):
        top, dens, nums = _r_fraction_terms(1 if name == "T1" else 2, depth)
        return top / _collapse(dens, nums, order)
    if name == "I":
        dens, nums = _quartic_fraction_terms(Fraction(7, 4), Fraction(3, 4), depth)
        return _mono(Fraction(3, 4)) * (1 - _mono(1)) / _collapse(dens, nums, order)
    if name == "J":
        dens, nums = _quartic_fraction_terms(Fraction(9, 4), Fraction(1, 4), depth)
        return _mono(Fraction(1, 4)) * (1 - _mono(2)) / _collapse(dens, nums, order)
    if name == "U":
        return _convergent("I", depth, order + 1) / _convergent("J", depth, order + 1)
    raise KeyError(f"no continued fraction for {name!r}")


CF_NAMES = ("I", "J", "T1", "T2", "U")


@dataclass(frozen=True)
class Convergent:
    series: FracSeries
    agreement_order: Fraction


def cf_convergent(name: str, depth: int, order: Number = 60) -> Convergent:
    """Depth-``depth`` convergent and the first exponent where it leaves the product form.

    Depth ``d`` keeps the denominators ``D_0 .. D_{d-1}``.  When the two
    series agree to the working order, ``agreement_order`` is that order.
    """
    if depth < 1:
        raise ValueError("depth must be at least 1")
    order = Fraction(order)
    try:
        conv = _convergent(name, depth, order).truncate(order)
    except ZeroDivisorToPrecision as exc:
        raise ZeroDivisorToPrecision(f"{name}: zero denominator at depth {depth}") from exc
    ref = named_qexp(name, order)
    diff = conv - ref
    agree = diff.order if diff.is_zero() else diff.valuation
    return Convergent(conv, agree)
