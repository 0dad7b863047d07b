"""Arbitrary-precision values of eta quotients and the order-10 products."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import mpmath

from ..cfrac10 import G_ETA, U_ETA, named_qexp
from .forms import ImagQuadPoint

GUARD = 15
MAX_PRODUCT_TERMS = 200_000


@dataclass(frozen=True)
class HighPrecComplex:
    """A complex value together with the decimal precision it is good to."""

    re: mpmath.mpf
    im: mpmath.mpf
    prec: int

    @classmethod
    def of(cls, z, prec: int) -> "HighPrecComplex":
        with mpmath.workdps(prec + GUARD):
            z = mpmath.mpc(z)
            return cls(z.real, z.imag, prec)

    @property
    def value(self) -> mpmath.mpc:
        # built at the recorded precision, not the ambient one
        with mpmath.workdps(self.prec + GUARD):
            return mpmath.mpc(self.re, self.im)

    def _binop(self, other, op) -> "HighPrecComplex":
        if isinstance(other, HighPrecComplex):
            prec = max(self.prec, other.prec)
            other = other.value
        else:
            prec = self.prec
        with mpmath.workdps(prec + GUARD):
            return HighPrecComplex.of(op(self.value, other), prec)

    def __add__(self, o):
        return self._binop(o, lambda a, b: a + b)

    def __sub__(self, o):
        return self._binop(o, lambda a, b: a - b)

    def __mul__(self, o):
        return self._binop(o, lambda a, b: a * b)

    def __truediv__(self, o):
        return self._binop(o, lambda a, b: a / b)

    def __abs__(self):
        with mpmath.workdps(self.prec + GUARD):
            return abs(self.value)

    def is_real(self) -> bool:
        with mpmath.workdps(self.prec + GUARD):
            return abs(self.im) <= mpmath.mpf(10) ** (-(self.prec // 2)) * max(1, abs(self.re))

    def to_strings(self, digits: int | None = None) -> tuple[str, str]:
        d = digits or self.prec
        with mpmath.workdps(self.prec + GUARD):
            return mpmath.nstr(self.re, d), mpmath.nstr(self.im, d)


def _as_tau(tau) -> mpmath.mpc:
    if isinstance(tau, ImagQuadPoint):
        return tau.value()
    if isinstance(tau, HighPrecComplex):
        return tau.value
    return mpmath.mpc(tau)


# ---------------------------------------------------------------------------
# Dedekind eta


def _eta_reduced(t: mpmath.mpc) -> mpmath.mpc:
    """Pentagonal-number series; assumes ``Im t >= sqrt(3)/2``."""
    q = mpmath.expjpi(2 * t)
    eps = mpmath.eps * 2 ** -8
    total = mpmath.mpc(1)
    k = 1
    while True:
        e1, e2 = k * (3 * k - 1) // 2, k * (3 * k + 1) // 2
        t1, t2 = q ** e1, q ** e2
        sign = -1 if k % 2 else 1
        total += sign * (t1 + t2)
        # later terms are bounded by |q|^e2 times a geometric tail
        if abs(t2) < eps:
            break
        k += 1
    return mpmath.expjpi(t / 12) * total


def eta_eval(tau, prec: int) -> HighPrecComplex:
    """``eta(tau)`` by reduction to the fundamental domain."""
    with mpmath.workdps(prec + GUARD):
        t = _as_tau(tau)
        if t.imag <= 0:
            raise ValueError("eta needs Im(tau) > 0")
        factor = mpmath.mpc(1)
        one = mpmath.mpf(1) - mpmath.mpf(10) ** (-(prec + 5))
        for _ in range(100_000):
            n = int(mpmath.nint(t.real))
            if n:
                factor *= mpmath.expjpi(mpmath.mpf(n) / 12)
                t -= n
            if abs(t) < one:
                factor /= mpmath.sqrt(-1j * t)
                t = -1 / t
            else:
                break
        else:
            raise ArithmeticError("reduction did not terminate")
        return HighPrecComplex.of(factor * _eta_reduced(t), prec)


def eta_quotient_eval(exps: dict[int, int], tau, prec: int) -> HighPrecComplex:
    """``prod eta(d tau)^r`` with each factor reduced separately."""
    with mpmath.workdps(prec + GUARD):
        t = _as_tau(tau)
        out = mpmath.mpc(1)
        for d, r in exps.items():
            out *= eta_eval(d * t, prec + 5).value ** r
        return HighPrecComplex.of(out, prec)


def g_eval(tau, prec: int) -> HighPrecComplex:
    return eta_quotient_eval(G_ETA, tau, prec)


def g0_eval(tau, prec: int) -> HighPrecComplex:
    return eta_quotient_eval({d: -r for d, r in G_ETA.items()}, tau, prec)


def U_eval(tau, prec: int) -> HighPrecComplex:
    return eta_quotient_eval(U_ETA, tau, prec)


def u0_eval(tau, prec: int) -> HighPrecComplex:
    return eta_quotient_eval({d: -r for d, r in U_ETA.items()}, tau, prec)


# ---------------------------------------------------------------------------
# direct products at the point


def _qpow(t: mpmath.mpc, e) -> mpmath.mpc:
    return mpmath.expjpi(2 * t * mpmath.mpf(Fraction(e).numerator) / Fraction(e).denominator)


def _poch(sign: int, s: int, step: int, t: mpmath.mpc, prec: int) -> mpmath.mpc:
    """``prod_{n >= 0} (1 - sign q^(s + n step))``."""
    aq = abs(mpmath.exp(-2 * mpmath.pi * t.imag))
    if aq >= 1:
        raise ValueError("need Im(tau) > 0")
    need = (prec + GUARD) * math.log(10) / (-float(mpmath.log(aq)) * step) + 2
    if need > MAX_PRODUCT_TERMS:
        raise ArithmeticError("point too close to the real axis for direct product evaluation")
    x = _qpow(t, s)
    ratio = _qpow(t, step)
    out = mpmath.mpc(1)
    eps = mpmath.eps * 2 ** -8
    while abs(x) > eps:
        out *= 1 - sign * x
        x *= ratio
    return out


def _product_ratio(lead: Fraction, num: tuple[int, int], den: tuple[int, int], t, prec) -> mpmath.mpc:
    top = _poch(1, num[0], 10, t, prec) * _poch(1, num[1], 10, t, prec)
    bot = _poch(1, den[0], 10, t, prec) * _poch(1, den[1], 10, t, prec)
    return _qpow(t, lead) * top / bot


def _parts(r: int, t, prec) -> tuple[mpmath.mpc, mpmath.mpc]:
    plus = _poch(-1, r, 5, t, prec) * _poch(-1, 5 - r, 5, t, prec)
    minus = _poch(1, r, 5, t, prec) * _poch(1, 5 - r, 5, t, prec)
    return plus, minus


def _I(t, prec):
    return _product_ratio(Fraction(3, 4), (1, 9), (4, 6), t, prec)


def _J(t, prec):
    return _product_ratio(Fraction(1, 4), (2, 8), (3, 7), t, prec)


def _T(r):
    def f(t, prec):
        plus, minus = _parts(r, t, prec)
        return (plus - minus) / (plus + minus)
    return f


def _G(r):
    def f(t, prec):
        plus, minus = _parts(r, t, prec)
        return plus / minus
    return f


_PRODUCTS: dict[str, Callable] = {
    "g": lambda t, p: g_eval(t, p).value,
    "g0": lambda t, p: g0_eval(t, p).value,
    "U": lambda t, p: U_eval(t, p).value,
    "U0": lambda t, p: u0_eval(t, p).value,
    "I": _I,
    "invI": lambda t, p: 1 / _I(t, p),
    "J": _J,
    "T1": _T(1),
    "T2": _T(2),
    "g1": _G(1),
    "g2": _G(2),
    "invg1": lambda t, p: 1 / _G(1)(t, p),
    "invg2": lambda t, p: 1 / _G(2)(t, p),
}

PRODUCT_NAMES = tuple(_PRODUCTS)


def product_eval(name: str, tau, prec: int) -> HighPrecComplex:
    """Value of a named function: eta reduction for eta quotients, infinite products otherwise.

    The branch of ``q^(1/4)`` and ``q^(3/4)`` is ``exp(2 pi i tau / 4)`` and
    so on, matching the q-expansions.
    """
    if name not in _PRODUCTS:
        raise KeyError(f"unknown function {name!r}; known: {', '.join(PRODUCT_NAMES)}")
    with mpmath.workdps(prec + GUARD):
        return HighPrecComplex.of(_PRODUCTS[name](_as_tau(tau), prec), prec)


def series_eval(name: str, tau, prec: int) -> HighPrecComplex:
    """Sum the exact q-expansion of a catalog function at ``tau``."""
    with mpmath.workdps(prec + GUARD):
        t = _as_tau(tau)
        if t.imag < 0.05:
            raise ArithmeticError("q-expansion converges too slowly at this point")
        # coefficients grow subexponentially; 30% margin on the geometric count
        order = int(1.3 * (prec + GUARD) * math.log(10) / (2 * math.pi * float(t.imag))) + 10
        s = named_qexp(name, order)
        total = mpmath.mpc(0)
        for e, c in sorted(s.terms().items()):
            if e >= order:
                break
            total += mpmath.mpf(c.numerator) / c.denominator * _qpow(t, e)
        return HighPrecComplex.of(total, prec)
