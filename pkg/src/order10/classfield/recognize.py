"""Recognition of high-precision numbers as algebraic numbers."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from typing import Sequence

import mpmath
import sympy

from .evaluate import GUARD, HighPrecComplex


class RecognitionError(ArithmeticError):
    pass


def _primitive(coeffs: Sequence[int]) -> list[int]:
    """Content 1 and positive leading coefficient (coefficients highest first)."""
    coeffs = [int(c) for c in coeffs]
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
    g = reduce(math.gcd, coeffs, 0) or 1
    if coeffs and coeffs[0] < 0:
        g = -g
    return [c // g for c in coeffs]


def poly_eval(coeffs: Sequence[int], z):
    acc = 0
    for c in coeffs:
        acc = acc * z + c
    return acc


@dataclass(frozen=True)
class AlgebraicCandidate:
    """``minpoly`` lists integer coefficients from the leading one down."""

    minpoly: tuple[int, ...]
    approx: HighPrecComplex
    residual: mpmath.mpf

    @property
    def degree(self) -> int:
        return len(self.minpoly) - 1

    def radical(self) -> str | None:
        """Closed form of the value for minimal polynomials of degree at most two."""
        if self.degree > 2:
            return None
        X = sympy.Symbol("X")
        roots = sympy.Poly([int(c) for c in self.minpoly], X).all_roots()
        with mpmath.workdps(self.approx.prec + GUARD):
            best = min(roots, key=lambda r: abs(mpmath.mpc(complex(sympy.N(r, 30))) - self.approx.value))
        return str(sympy.nsimplify(best)) if best.is_real else str(best)

    def to_json_dict(self, digits: int = 40) -> dict:
        re, im = self.approx.to_strings(digits)
        with mpmath.workdps(20):
            res = mpmath.nstr(self.residual, 5)
        out = {"approx_re": re, "approx_im": im, "minpoly": [str(c) for c in self.minpoly],
               "residual": res}
        rad = self.radical()
        if rad is not None:
            out["radical"] = rad
        return out


def scaled_residual(coeffs, z) -> mpmath.mpf:
    """``|P(z)|`` scaled by the size of the terms, so large coefficients don't inflate it."""
    scale = sum(abs(c) * abs(z) ** k for k, c in enumerate(reversed(coeffs)))
    return abs(poly_eval(coeffs, z)) / max(scale, 1)


def recognize_algebraic(z, max_deg: int, prec: int | None = None) -> AlgebraicCandidate:
    """Lowest-degree integer polynomial vanishing at ``z``, found by PSLQ.

    Coefficients are bounded so that a genuine relation is much smaller than
    the relations any random number of that precision admits; the result is
    accepted only when the residual is below ``10^(-prec/2)``.
    """
    if not isinstance(z, HighPrecComplex):
        z = HighPrecComplex.of(z, prec or mpmath.mp.dps)
    prec = prec or z.prec
    with mpmath.workdps(prec):
        v = z.value
        real = z.is_real()
        tol = mpmath.mpf(10) ** (-(prec // 2))
        for deg in range(1, max_deg + 1):
            bound = 10 ** max(2, prec // (2 * (deg + 1)))
            powers = [v ** k for k in range(deg + 1)]
            if real:
                vec = [p.real for p in powers]
            else:
                # a joint relation kills both parts; e is a generic multiplier
                vec = [p.real + mpmath.e * p.imag for p in powers]
            rel = mpmath.pslq(vec, maxcoeff=bound, maxsteps=20000 * (deg + 1))
            if rel is None or rel[-1] == 0:
                continue
            coeffs = _primitive(rel[::-1])
            res = scaled_residual(coeffs, v)
            if res < tol:
                return AlgebraicCandidate(tuple(coeffs), z, res)
    raise RecognitionError(f"no relation of degree <= {max_deg} at {prec} digits")


def _to_sympy(coeffs: Sequence[int]) -> sympy.Poly:
    return sympy.Poly([int(c) for c in coeffs], sympy.Symbol("X"), domain="ZZ")


def vanishing_factor(coeffs: Sequence[int], z: HighPrecComplex) -> list[int]:
    """The irreducible factor of ``coeffs`` that vanishes at ``z``."""
    with mpmath.workdps(z.prec + GUARD):
        best = None
        for fac, _ in _to_sympy(coeffs).factor_list()[1]:
            c = _primitive(fac.all_coeffs())
            r = scaled_residual(c, z.value)
            if best is None or r < best[0]:
                best = (r, c)
        if best is None:
            raise RecognitionError("constant polynomial")
        return best[1]


def minpoly_from_power(z: HighPrecComplex, k: int, max_deg: int) -> AlgebraicCandidate:
    """Recognize ``z^k`` first, then pick the factor of ``m(X^k)`` vanishing at ``z``."""
    zk = z
    for _ in range(k - 1):
        zk = zk * z
    base = recognize_algebraic(zk, max_deg, z.prec)
    expanded = []
    for c in base.minpoly[:-1]:
        expanded.extend([c] + [0] * (k - 1))
    expanded.append(base.minpoly[-1])
    coeffs = vanishing_factor(expanded, z)
    with mpmath.workdps(z.prec + GUARD):
        return AlgebraicCandidate(tuple(coeffs), z, scaled_residual(coeffs, z.value))


def mobius_transform(coeffs: Sequence[int], m: tuple[int, int, int, int]) -> list[int]:
    """``(cX + d)^n P((aX + b)/(cX + d))`` for ``m = (a, b, c, d)``."""
    a, b, c, d = m
    X = sympy.Symbol("X")
    n = len(coeffs) - 1
    expr = sum(int(co) * (a * X + b) ** (n - i) * (c * X + d) ** i for i, co in enumerate(coeffs))
    return _primitive(sympy.Poly(sympy.expand(expr), X).all_coeffs())


def transform_candidate(cand: AlgebraicCandidate, m: tuple[int, int, int, int],
                        value: HighPrecComplex) -> AlgebraicCandidate:
    """Minimal polynomial of ``y`` where ``w = (a y + b) / (c y + d)`` has ``cand``'s.

    ``value`` is ``y`` itself; it selects the vanishing factor.
    """
    coeffs = vanishing_factor(mobius_transform(cand.minpoly, m), value)
    with mpmath.workdps(value.prec + GUARD):
        return AlgebraicCandidate(tuple(coeffs), value, scaled_residual(coeffs, value.value))


@dataclass(frozen=True)
class IntegralityReport:
    integer: bool
    unit: bool
    leading: int
    constant: int


def integrality_report(cand: AlgebraicCandidate) -> IntegralityReport:
    lead, const = cand.minpoly[0], cand.minpoly[-1]
    integer = abs(lead) == 1
    return IntegralityReport(integer, integer and abs(const) == 1, lead, const)


def integrality_checks(cand: AlgebraicCandidate, kind: str = "integer") -> bool:
    """``integer``: monic minimal polynomial; ``unit``: also constant term +-1."""
    rep = integrality_report(cand)
    if kind == "integer":
        return rep.integer
    if kind == "unit":
        return rep.unit
    raise ValueError(f"kind must be 'integer' or 'unit', got {kind!r}")
