"""Published reference data: cusp orders on Gamma0(10) and modular equations.

Modular equations for g and U at prime levels up to 11 are stored expanded,
with the printed sign; comparisons with derived equations are made up to a
global sign.
"""

from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .cfrac10 import G14_GEN, G24_GEN, G_ETA, U2_ETA, named_qexp
from .modeq import BivarPoly
from .modforms import (Cusp, EtaQuotientSpec, GenEtaQuotientSpec, gen_order_table,
                       order_table)

_G_REFERENCE_TEXT = {
    2: (
        "X - Y^2 - 4*X*Y - X^2 + 5*X*Y^2"
    ),
    3: (
        "-X*Y + 6*X*Y^2 + 6*X^2*Y + Y^4 - 9*X*Y^3 - 30*X^2*Y^2 - 9*X^3*Y + X^4 + 30*X^2*Y^3 + "
        "30*X^3*Y^2 - 25*X^3*Y^3"
    ),
    5: (
        "-Y + 10*X*Y - 5*X*Y^2 - 35*X^2*Y + 50*X^2*Y^2 + 60*X^3*Y - 25*X^2*Y^3 - 175*X^3*Y^2 - "
        "55*X^4*Y + X^5 + 250*X^3*Y^3 + 300*X^4*Y^2 - 125*X^3*Y^4 - 875*X^4*Y^3 + 1250*X^4*Y^4 - "
        "625*X^4*Y^5"
    ),
    7: (
        "-X*Y + 14*X*Y^2 + 14*X^2*Y - 77*X*Y^3 - 224*X^2*Y^2 - 77*X^3*Y + 224*X*Y^4 + "
        "1358*X^2*Y^3 + 1358*X^3*Y^2 + 224*X^4*Y - 392*X*Y^5 - 4060*X^2*Y^4 - 8911*X^3*Y^3 - "
        "4060*X^4*Y^2 - 392*X^5*Y + 392*X*Y^6 + 6664*X^2*Y^5 + 27692*X^3*Y^4 + 27692*X^4*Y^3 + "
        "6664*X^5*Y^2 + 392*X^6*Y + Y^8 - 168*X*Y^7 - 5684*X^2*Y^6 - 43638*X^3*Y^5 - "
        "88746*X^4*Y^4 - 43638*X^5*Y^3 - 5684*X^6*Y^2 - 168*X^7*Y + X^8 + 1960*X^2*Y^7 + "
        "33320*X^3*Y^6 + 138460*X^4*Y^5 + 138460*X^5*Y^4 + 33320*X^6*Y^3 + 1960*X^7*Y^2 - "
        "9800*X^3*Y^7 - 101500*X^4*Y^6 - 222775*X^5*Y^5 - 101500*X^6*Y^4 - 9800*X^7*Y^3 + "
        "28000*X^4*Y^7 + 169750*X^5*Y^6 + 169750*X^6*Y^5 + 28000*X^7*Y^4 - 48125*X^5*Y^7 - "
        "140000*X^6*Y^6 - 48125*X^7*Y^5 + 43750*X^6*Y^7 + 43750*X^7*Y^6 - 15625*X^7*Y^7"
    ),
    11: (
        "-X*Y + 22*X*Y^2 + 22*X^2*Y - 209*X*Y^3 - 484*X^2*Y^2 - 209*X^3*Y + 1144*X*Y^4 + "
        "4862*X^2*Y^3 + 4862*X^3*Y^2 + 1144*X^4*Y - 4070*X*Y^5 - 29656*X^2*Y^4 - 52745*X^3*Y^3 - "
        "29656*X^4*Y^2 - 4070*X^5*Y + 9988*X*Y^6 + 119460*X^2*Y^5 + 345752*X^3*Y^4 + "
        "345752*X^4*Y^3 + 119460*X^5*Y^2 + 9988*X^6*Y - 17182*X*Y^7 - 321519*X^2*Y^6 - "
        "1467906*X^3*Y^5 - 2328106*X^4*Y^4 - 1467906*X^5*Y^3 - 321519*X^6*Y^2 - 17182*X^7*Y + "
        "20328*X*Y^8 + 572088*X^2*Y^7 + 4103880*X^3*Y^6 + 9887944*X^4*Y^5 + 9887944*X^5*Y^4 + "
        "4103880*X^6*Y^3 + 572088*X^7*Y^2 + 20328*X^8*Y - 15675*X*Y^9 - 656458*X^2*Y^8 - "
        "7519974*X^3*Y^7 - 27739118*X^4*Y^6 - 40977376*X^5*Y^5 - 27739118*X^6*Y^4 - "
        "7519974*X^7*Y^3 - 656458*X^8*Y^2 - 15675*X^9*Y + 6930*X*Y^10 + 469590*X^2*Y^9 + "
        "8708480*X^3*Y^8 + 51953440*X^4*Y^7 + 112818420*X^5*Y^6 + 112818420*X^6*Y^5 + "
        "51953440*X^7*Y^4 + 8708480*X^8*Y^3 + 469590*X^9*Y^2 + 6930*X^10*Y + Y^12 - 1287*X*Y^11 - "
        "192489*X^2*Y^10 - 6078435*X^3*Y^9 - 61762855*X^4*Y^8 - 212917364*X^5*Y^7 - "
        "302733002*X^6*Y^6 - 212917364*X^7*Y^5 - 61762855*X^8*Y^4 - 6078435*X^9*Y^3 - "
        "192489*X^10*Y^2 - 1287*X^11*Y + X^12 + 34650*X^2*Y^11 + 2347950*X^3*Y^10 + "
        "43542400*X^4*Y^9 + 259767200*X^5*Y^8 + 564092100*X^6*Y^7 + 564092100*X^7*Y^6 + "
        "259767200*X^8*Y^5 + 43542400*X^9*Y^4 + 2347950*X^10*Y^3 + 34650*X^11*Y^2 - "
        "391875*X^3*Y^11 - 16411450*X^4*Y^10 - 187999350*X^5*Y^9 - 693477950*X^6*Y^8 - "
        "1024434400*X^7*Y^7 - 693477950*X^8*Y^6 - 187999350*X^9*Y^5 - 16411450*X^10*Y^4 - "
        "391875*X^11*Y^3 + 2541000*X^4*Y^11 + 71511000*X^5*Y^10 + 512985000*X^6*Y^9 + "
        "1235993000*X^7*Y^8 + 1235993000*X^8*Y^7 + 512985000*X^9*Y^6 + 71511000*X^10*Y^5 + "
        "2541000*X^11*Y^4 - 10738750*X^5*Y^11 - 200949375*X^6*Y^10 - 917441250*X^7*Y^9 - "
        "1455066250*X^8*Y^8 - 917441250*X^9*Y^7 - 200949375*X^10*Y^6 - 10738750*X^11*Y^5 + "
        "31212500*X^6*Y^11 + 373312500*X^7*Y^10 + 1080475000*X^8*Y^9 + 1080475000*X^9*Y^8 + "
        "373312500*X^10*Y^7 + 31212500*X^11*Y^6 - 63593750*X^7*Y^11 - 463375000*X^8*Y^10 - "
        "824140625*X^9*Y^9 - 463375000*X^10*Y^8 - 63593750*X^11*Y^7 + 89375000*X^8*Y^11 + "
        "379843750*X^9*Y^10 + 379843750*X^10*Y^9 + 89375000*X^11*Y^8 - 81640625*X^9*Y^11 - "
        "189062500*X^10*Y^10 - 81640625*X^11*Y^9 + 42968750*X^10*Y^11 + 42968750*X^11*Y^10 - "
        "9765625*X^11*Y^11"
    ),
}

_U_REFERENCE_TEXT = {
    2: (
        "-Y^2 + Y^4 + 4*X^2*Y^2 + X^4 - 5*X^4*Y^2"
    ),
    3: (
        "-X*Y - Y^4 + 3*X*Y^3 + 3*X^3*Y + X^4 - 5*X^3*Y^3"
    ),
    5: (
        "-Y + 5*X*Y^2 + 5*X^2*Y - 15*X^2*Y^3 - 15*X^3*Y^2 - 5*X^4*Y + X^5 + 25*X^3*Y^4 + "
        "25*X^4*Y^3 - 25*X^4*Y^5"
    ),
    7: (
        "-X*Y + 7*X*Y^3 + 7*X^3*Y - 14*X*Y^5 - 63*X^3*Y^3 - 14*X^5*Y - Y^8 + 14*X*Y^7 - "
        "14*X^2*Y^6 + 140*X^3*Y^5 + 140*X^5*Y^3 + 14*X^6*Y^2 + 14*X^7*Y + X^8 - 70*X^3*Y^7 - "
        "315*X^5*Y^5 - 70*X^7*Y^3 + 175*X^5*Y^7 + 175*X^7*Y^5 - 125*X^7*Y^7"
    ),
    11: (
        "-X*Y + 11*X*Y^3 + 11*X^3*Y - 44*X*Y^5 - 121*X^3*Y^3 - 44*X^5*Y + 88*X*Y^7 - 33*X^2*Y^6 + "
        "616*X^3*Y^5 - 198*X^4*Y^4 + 616*X^5*Y^3 - 33*X^6*Y^2 + 88*X^7*Y - 99*X*Y^9 + 198*X^2*Y^8 "
        "- 1760*X^3*Y^7 + 1386*X^4*Y^6 - 3564*X^5*Y^5 + 1386*X^6*Y^4 - 1760*X^7*Y^3 + 198*X^8*Y^2 "
        "- 99*X^9*Y + Y^12 + 33*X*Y^11 - 99*X^2*Y^10 + 1529*X^3*Y^9 - 1683*X^4*Y^8 + 8800*X^5*Y^7 "
        "- 6534*X^6*Y^6 + 8800*X^7*Y^5 - 1683*X^8*Y^4 + 1529*X^9*Y^3 - 99*X^10*Y^2 + 33*X^11*Y + "
        "X^12 - 495*X^3*Y^11 + 990*X^4*Y^10 - 8800*X^5*Y^9 + 6930*X^6*Y^8 - 17820*X^7*Y^7 + "
        "6930*X^8*Y^6 - 8800*X^9*Y^5 + 990*X^10*Y^4 - 495*X^11*Y^3 + 2200*X^5*Y^11 - 825*X^6*Y^10 "
        "+ 15400*X^7*Y^9 - 4950*X^8*Y^8 + 15400*X^9*Y^7 - 825*X^10*Y^6 + 2200*X^11*Y^5 - "
        "5500*X^7*Y^11 - 15125*X^9*Y^9 - 5500*X^11*Y^7 + 6875*X^9*Y^11 + 6875*X^11*Y^9 - "
        "3125*X^11*Y^11"
    ),
}


G_REFERENCE = {p: BivarPoly.from_text(t) for p, t in _G_REFERENCE_TEXT.items()}
U_REFERENCE = {p: BivarPoly.from_text(t) for p, t in _U_REFERENCE_TEXT.items()}


def reference(which: str, p: int) -> BivarPoly:
    table = {"g": G_REFERENCE, "U": U_REFERENCE}[which]
    if p not in table:
        raise KeyError(f"no published equation for {which} at level {p}; have {sorted(table)}")
    return table[p]


# ---------------------------------------------------------------------------
# orders at the cusps oo, 0, 1/2, 1/5 of Gamma0(10)

I4_GEN = {1: 4, 4: -4}
JINV4_GEN = {2: -4, 3: 4}

CUSP_COLUMNS = ("oo", "0", "1/2", "1/5")

# (name, kind, exponents, printed orders)
CUSP_ROWS = [
    ("g", "eta", G_ETA, (0, -1, 0, 1)),
    ("U^2", "eta", U2_ETA, (1, 0, -1, 0)),
    ("I^4", "gen", I4_GEN, (3, 0, -1, 0)),
    ("J^-4", "gen", JINV4_GEN, (-1, 0, -1, 0)),
    ("g1^4", "gen", G14_GEN, (0, -1, 0, -1)),
    ("g2^4", "gen", G24_GEN, (0, -1, 0, 3)),
]

# sums of two rows; ">=" cells are lower bounds
CUSP_SUM_ROWS = [
    ("I^4 + J^-4", ("I^4", "J^-4"), (("=", -1), (">=", 0), (">=", -1), (">=", 0))),
    ("g1^4 + g2^4", ("g1^4", "g2^4"), ((">=", 0), (">=", -1), (">=", 0), ("=", -1))),
]


@dataclass(frozen=True)
class CuspCell:
    row: str
    cusp: str
    relation: str
    printed: int
    computed: Fraction
    passed: bool


def computed_orders(kind: str, exps: dict) -> dict[str, Fraction]:
    if kind == "eta":
        table = order_table(EtaQuotientSpec(10, exps))
    else:
        table = gen_order_table(GenEtaQuotientSpec(10, exps))
    return {c: table[Cusp.parse(c)] for c in CUSP_COLUMNS}


def cusp_table_cells() -> list[CuspCell]:
    """Every printed cell of the three cusp tables against the computed order.

    For a sum of two functions the computed value is the minimum of the two
    orders, which is exact when the orders differ and a lower bound otherwise.
    """
    cells = []
    rows = {}
    for name, kind, exps, printed in CUSP_ROWS:
        got = computed_orders(kind, exps)
        rows[name] = got
        for c, p in zip(CUSP_COLUMNS, printed):
            cells.append(CuspCell(name, c, "=", p, got[c], got[c] == p))
    for name, (a, b), printed in CUSP_SUM_ROWS:
        for c, (rel, p) in zip(CUSP_COLUMNS, printed):
            oa, ob = rows[a][c], rows[b][c]
            low = min(oa, ob)
            exact = oa != ob
            ok = low == p and (exact if rel == "=" else True)
            cells.append(CuspCell(name, c, rel, p, low, ok))
    return cells


# ---------------------------------------------------------------------------
# printed q-expansions: name -> ({exponent: coefficient}, exact-below order)

PRINTED_EXPANSIONS: dict[str, tuple[dict[int, int], int]] = {
    "g": ({0: 1, 1: 4, 2: 12, 3: 32, 4: 76, 5: 164, 6: 336}, 7),
    "U2": ({1: 1, 2: -2, 3: 3, 4: -6, 5: 11, 6: -16}, 7),
    "I4": ({3: 1, 4: -4, 5: 6, 6: -4, 7: 5, 8: -16}, 9),
    "J4": ({1: 1, 3: -4, 4: 4, 5: 6, 6: -16, 7: 6, 8: 28}, 9),
    "g14": ({0: 1, 1: 8, 2: 32, 3: 88, 4: 200, 5: 424, 6: 872}, 7),
    "g24": ({0: 1, 2: 8, 3: 8, 4: 32, 5: 64, 6: 120}, 7),
    "T1": ({1: 1, 4: 1, 8: -1, 11: -1, 14: -1, 15: 1}, 16),
    "T2": ({2: 1, 3: 1, 11: -1, 12: -1, 13: -1, 14: -1}, 16),
}


def expansion_mismatches(name: str) -> list[tuple[int, int, Fraction]]:
    """``(exponent, printed, computed)`` for every disagreeing coefficient."""
    printed, order = PRINTED_EXPANSIONS[name]
    s = named_qexp(name, order)
    return [(e, printed.get(e, 0), s[e]) for e in range(order) if s[e] != printed.get(e, 0)]


# ---------------------------------------------------------------------------
# printed singular values at -1/sqrt(-10) (root of 10X^2 + 1) and at half that
# point (root of 40X^2 + 1); radicals are evaluated at the current mpmath precision

BASE_DISC = -40
BASE_FORMS = ((1, 0, 10), (2, 0, 5))
BASE_CLASS_POLY = (1, -10, 5)
BASE_U_X = (2, 5, 5, 6)
BASE_V_X = (22, 35, 5, 8)
BASE_THETA_QUADRATIC = (253, -2220, 4870)
BASE_POINT = (10, 0, 1)
HALF_POINT = (40, 0, 1)

# seven-digit decimals printed next to the radicals
BASE_DECIMALS = {"g0": "0.5278640", "J": "0.5986205", "invI": "5.1412960",
                 "invg1": "0.5749991", "invg2": "0.9180259"}


def base_radicals() -> dict[str, mpmath.mpc]:
    r5 = mpmath.sqrt(5)
    a, b = 175 + 78 * r5, 2 * mpmath.sqrt(15250 + 6820 * r5)
    c, d = 175 - 78 * r5, 2 * mpmath.sqrt(15250 - 6820 * r5)
    return {
        "g0": 5 - 2 * r5,
        "U0": mpmath.sqrt(5 + 2 * r5),
        "J": mpmath.power(a - b, mpmath.mpf(1) / 4),
        "I": mpmath.power(a + b, -mpmath.mpf(1) / 4),
        "g1": mpmath.power(c - d, -mpmath.mpf(1) / 2),
        "g2": mpmath.power(c + d, -mpmath.mpf(1) / 2),
    }


def base_relations() -> dict[str, tuple[mpmath.mpf, mpmath.mpf, int]]:
    """``(s, p, k)`` for the printed relations ``T^(2k) - s T^k + p = 0``.

    ``"JI"`` is satisfied by J and 1/I (k = 4); ``"g"`` is printed as
    satisfied by 1/g1 and 1/g2 (k = 2).
    """
    r5 = mpmath.sqrt(5)
    return {"JI": (350 + 156 * r5, 45 + 20 * r5, 4), "g": (350 - 156 * r5, 45 - 20 * r5, 2)}


def half_lambda() -> mpmath.mpf:
    r2, r5, r10 = mpmath.sqrt(2), mpmath.sqrt(5), mpmath.sqrt(10)
    return 10 * (41176730 - 29116345 * r2 - 18414793 * r5 + 13021225 * r10)


def half_radicals() -> dict[str, mpmath.mpc]:
    r2, r5, r10 = mpmath.sqrt(2), mpmath.sqrt(5), mpmath.sqrt(10)
    a = -15 - 10 * r2 + 19 * r5 + 14 * r10
    b = 2 * mpmath.sqrt(5 * (835 + 590 * r2 - 226 * r5 - 160 * r10))
    c = 20295 - 14350 * r2 - 9074 * r5 + 6416 * r10
    d = 2 * mpmath.sqrt(half_lambda())
    return {
        "g0": (3 - 2 * r2) * (5 - 2 * r5),
        "U0": mpmath.sqrt(r5 + r10),
        "J": mpmath.power(a - b, mpmath.mpf(1) / 4),
        "I": mpmath.power(a + b, -mpmath.mpf(1) / 4),
        "g1": mpmath.power(c - d, -mpmath.mpf(1) / 2),
        "g2": mpmath.power(c + d, -mpmath.mpf(1) / 2),
    }
