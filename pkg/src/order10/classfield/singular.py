"""Class polynomials of g0 and algebraic values of the order-10 functions."""

from __future__ import annotations

from dataclasses import dataclass, field

import mpmath

from ..modeq import BivarPoly, derive_G, solve_modeq
from .evaluate import GUARD, HighPrecComplex, g0_eval, g_eval, product_eval, u0_eval
from .forms import ImagQuadPoint, QuadForm
from .recognize import (AlgebraicCandidate, RecognitionError, scaled_residual, minpoly_from_power,
                        recognize_algebraic, transform_candidate)
from .shimura import ShimuraData, conjugate_points

DEFAULT_PREC = 120


class InsufficientPrecision(ArithmeticError):
    def __init__(self, message: str, suggested_prec: int):
        super().__init__(message)
        self.suggested_prec = suggested_prec


class RootSelectionError(ArithmeticError):
    pass


class NonIntegralCoefficients(ArithmeticError):
    """The class polynomial has coefficients outside the rational integers."""


# ---------------------------------------------------------------------------
# class polynomial


@dataclass
class ClassPolynomial:
    d_K: int
    coeffs: tuple[int, ...]
    data: list[ShimuraData]
    conjugates: list[HighPrecComplex]
    prec: int
    rounding_distance: mpmath.mpf

    @property
    def forms(self) -> list[QuadForm]:
        return [s.form for s in self.data]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def to_json_dict(self, digits: int = 40) -> dict:
        conj = []
        for s, v in zip(self.data, self.conjugates):
            re, im = v.to_strings(digits)
            conj.append({"form": s.form.as_list(), "point": list(s.point.as_tuple()),
                         "k": s.k_x, "re": re, "im": im})
        return {"disc": self.d_K, "coeffs": [str(c) for c in self.coeffs],
                "forms": [f.as_list() for f in self.forms], "conjugates": conj}


def _expand_roots(roots) -> list:
    coeffs = [mpmath.mpc(1)]
    for r in roots:
        nxt = coeffs + [mpmath.mpc(0)]
        for i, c in enumerate(coeffs):
            nxt[i + 1] -= r * c
        coeffs = nxt
    return coeffs


def class_polynomial(d_K: int, prec: int = DEFAULT_PREC, retries: int = 3,
                     alternative_lift: bool = False) -> ClassPolynomial:
    """``prod_x (X - g0(point_x))`` over the reduced forms, with integer coefficients.

    Every coefficient must lie within ``10^(-prec/4)`` of a rational integer;
    otherwise precision is doubled, at most ``retries`` times.  A coefficient
    that is far from every integer means the polynomial lives over the ring
    of integers of K, which is reported rather than retried.
    """
    data = conjugate_points(d_K, alternative_lift)
    p = prec
    for _ in range(retries + 1):
        vals = [g0_eval(s.point, p) for s in data]
        with mpmath.workdps(p + GUARD):
            coeffs = _expand_roots([v.value for v in vals])
            ints = [int(mpmath.nint(c.real)) for c in coeffs]
            dist = max(abs(c - n) for c, n in zip(coeffs, ints))
            if dist < mpmath.mpf(10) ** (-(p // 4)):
                return ClassPolynomial(d_K, tuple(ints), data, vals, p, dist)
            if dist > mpmath.mpf(10) ** -6:
                worst = max(coeffs, key=lambda c: abs(c - mpmath.nint(c.real)))
                raise NonIntegralCoefficients(
                    f"class polynomial for {d_K} has a coefficient near "
                    f"{mpmath.nstr(worst, 12)}; only rational-integer coefficients are supported")
        p *= 2
    raise InsufficientPrecision(
        f"class polynomial coefficients for {d_K} are not within 10^-{p // 8} of integers "
        f"at {p // 2} digits; retry with --prec {p}", p)


# ---------------------------------------------------------------------------
# root selection


def select_root(roots, reference: HighPrecComplex, prec: int):
    """The unique root within ``10^(-prec/3)`` of an independently computed value."""
    tol = mpmath.mpf(10) ** (-(prec // 3))
    ranked = sorted(roots, key=lambda r: abs(r - reference.value))
    if abs(ranked[0] - reference.value) > tol:
        raise RootSelectionError("no root matches the direct evaluation")
    if len(ranked) > 1 and abs(ranked[1] - reference.value) <= tol:
        raise RootSelectionError("two roots match the direct evaluation")
    return ranked[0]


def octic_roots(s, p) -> list:
    """All ``T`` with ``T^8 - s T^4 + p = 0``."""
    disc = mpmath.sqrt(s * s - 4 * p)
    out = []
    for t4 in ((s - disc) / 2, (s + disc) / 2):
        r = mpmath.root(t4, 4)
        out.extend(r * mpmath.mpc(0, 1) ** k for k in range(4))
    return out


def u0_relation(g0):
    """``U0^2`` from ``g0 (1 - U0^2) = 5 - U0^2``."""
    return (5 - g0) / (1 - g0)


def jj_coefficients(u0):
    """``(s, p)`` with ``J`` and ``1/I`` among the roots of ``T^8 - s T^4 + p``."""
    u2 = u0 * u0
    return u2 ** 3 - 2 * u2 ** 2 + 3 * u2, u2 * u2


def gg_coefficients(g0):
    """``(s, p)`` with ``1/g1`` and ``1/g2`` among the roots of ``T^8 - s T^4 + p``."""
    return g0 ** 3 - 2 * g0 ** 2 + 3 * g0, g0 * g0


# ---------------------------------------------------------------------------
# singular values


@dataclass
class SingularValue:
    name: str
    value: HighPrecComplex
    candidate: AlgebraicCandidate | None
    note: str = ""

    def to_json_dict(self, digits: int = 40) -> dict:
        if self.candidate is not None:
            out = self.candidate.to_json_dict(digits)
        else:
            re, im = self.value.to_strings(digits)
            out = {"approx_re": re, "approx_im": im, "minpoly": None, "residual": None}
        if self.note:
            out["note"] = self.note
        return out


@dataclass
class SingularValues:
    point: ImagQuadPoint
    prec: int
    values: dict[str, SingularValue] = field(default_factory=dict)

    def __getitem__(self, name: str) -> SingularValue:
        return self.values[name]


VALUE_NAMES = ("g0", "U0", "J", "invI", "I", "invg1", "invg2", "g1", "g2", "T1", "T2")


def _recognize(fn, note: list):
    try:
        return fn()
    except RecognitionError as exc:
        note.append(str(exc))
        return None


def singular_values(point: ImagQuadPoint, prec: int = DEFAULT_PREC,
                    g0: HighPrecComplex | None = None, max_deg: int = 8) -> SingularValues:
    """Algebraic values at ``point`` of g0, U0, J, I, g1, g2, T1, T2.

    Each value is a root of an explicit polynomial built from g0; the root is
    chosen by comparison with a direct evaluation at the point and then
    recognized.  ``max_deg`` bounds the degree of g0 and of the fourth powers.
    """
    out = SingularValues(point, prec)
    H = lambda z: HighPrecComplex.of(z, prec)  # noqa: E731
    with mpmath.workdps(prec + GUARD):
        direct_g0 = g0_eval(point, prec)
        if g0 is None:
            g0 = direct_g0
        else:
            select_root([g0.value], direct_g0, prec)
        gv = g0.value

        def add(name, value, fn):
            note: list[str] = []
            cand = _recognize(fn, note) if fn else None
            out.values[name] = SingularValue(name, value, cand, "; ".join(note))
            return cand

        add("g0", g0, lambda: recognize_algebraic(g0, max_deg, prec))

        u2 = u0_relation(gv)
        u0 = select_root([mpmath.sqrt(u2), -mpmath.sqrt(u2)], u0_eval(point, prec), prec)
        add("U0", H(u0), lambda: minpoly_from_power(H(u0), 2, max_deg))

        s, p = jj_coefficients(u0)
        roots = octic_roots(s, p)
        for name in ("J", "invI"):
            v = H(select_root(roots, product_eval(name, point, prec), prec))
            add(name, v, lambda v=v: minpoly_from_power(v, 4, 2 * max_deg))
        inv_i = out["invI"]
        add("I", H(1 / inv_i.value.value),
            (lambda: _reciprocal(inv_i.candidate, prec)) if inv_i.candidate else None)

        s, p = gg_coefficients(gv)
        roots = octic_roots(s, p)
        for k in (1, 2):
            v = H(select_root(roots, product_eval(f"invg{k}", point, prec), prec))
            inv = add(f"invg{k}", v, lambda v=v: minpoly_from_power(v, 2, 2 * max_deg))
            g = H(1 / v.value)
            add(f"g{k}", g, (lambda inv=inv: _reciprocal(inv, prec)) if inv else None)
            # 1/g = (1 - T)/(1 + T)
            t = H((1 - v.value) / (1 + v.value))
            add(f"T{k}", t, (lambda inv=inv, t=t: transform_candidate(inv, (-1, 1, 1, 1), t))
                if inv else None)
    return out


def _reciprocal(cand: AlgebraicCandidate, prec: int) -> AlgebraicCandidate:
    coeffs = list(cand.minpoly[::-1])
    if coeffs[0] < 0:
        coeffs = [-c for c in coeffs]
    with mpmath.workdps(prec + GUARD):
        v = HighPrecComplex.of(1 / cand.approx.value, prec)
        return AlgebraicCandidate(tuple(coeffs), v, scaled_residual(coeffs, v.value))


def evaluate_functions(point: ImagQuadPoint, names, prec: int = DEFAULT_PREC,
                       max_deg: int = 8) -> dict[str, SingularValue]:
    """Selected entries of :func:`singular_values` in the order requested."""
    unknown = [n for n in names if n not in VALUE_NAMES]
    if unknown:
        raise KeyError(f"unknown function(s) {', '.join(unknown)}; known: {', '.join(VALUE_NAMES)}")
    sv = singular_values(point, prec, max_deg=max_deg)
    return {n: sv[n] for n in names}


# ---------------------------------------------------------------------------
# going down to tau/2 with the level-2 equation


@dataclass
class HalvedPoint:
    point: ImagQuadPoint
    g: HighPrecComplex
    g0: HighPrecComplex
    candidates: list


def halve_point(point: ImagQuadPoint, g_at_double: HighPrecComplex, prec: int = DEFAULT_PREC,
                G2: BivarPoly | None = None) -> HalvedPoint:
    """``g(tau)`` from ``g(2 tau)`` through the level-2 modular equation.

    ``point`` is ``tau``; the root of ``G_2(X, g(2 tau)) = 0`` matching a
    direct evaluation at ``tau`` is kept.
    """
    G2 = G2 or derive_G(2)
    with mpmath.workdps(prec + GUARD):
        roots = solve_modeq(G2, g_at_double.value, "X")
        g = select_root(roots, g_eval(point, prec), prec)
        return HalvedPoint(point, HighPrecComplex.of(g, prec), HighPrecComplex.of(1 / g, prec),
                           [HighPrecComplex.of(r, prec) for r in roots])
