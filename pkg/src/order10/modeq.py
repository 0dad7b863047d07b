"""Modular equations for g and U, derived by exact linear algebra.

A relation ``P(f(tau), f(n tau)) = 0`` with ``deg_X P <= a``, ``deg_Y P <= b``
is found as the nullspace of the matrix whose columns are the q-expansions
of the monomials ``f(tau)^i f(n tau)^j``.  The number of rows comes from a
valence bound: a combination with those degrees has at most
``a*d1 + b*dn`` poles, so vanishing beyond that order forces it to be zero.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Iterable, Mapping

from .cfrac10 import G_ETA, named_qexp
from .linalg import nullspace, nullspace_multimodular
from .modforms import EtaQuotientSpec, order_table
from .qseries import FracSeries

SLACK = 50


class DerivationError(ArithmeticError):
    """The nullspace did not have dimension one."""

    def __init__(self, message: str, dimension: int):
        super().__init__(message)
        self.dimension = dimension


# ---------------------------------------------------------------------------
# bivariate integer polynomials


class BivarPoly:
    """Polynomial in X, Y with integer coefficients, stored sparsely."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[tuple[int, int], int] | None = None):
        c = {}
        for (i, j), v in (coeffs or {}).items():
            v = int(v)
            if v:
                if i < 0 or j < 0:
                    raise ValueError("negative exponent")
                c[(int(i), int(j))] = v
        self._c = c

    @classmethod
    def X(cls) -> "BivarPoly":
        return cls({(1, 0): 1})

    @classmethod
    def Y(cls) -> "BivarPoly":
        return cls({(0, 1): 1})

    @classmethod
    def const(cls, v: int) -> "BivarPoly":
        return cls({(0, 0): v})

    # -- inspection

    def coeff(self, i: int, j: int) -> int:
        return self._c.get((i, j), 0)

    def items(self) -> list[tuple[tuple[int, int], int]]:
        """Terms in graded-lex order: total degree, then X-degree."""
        return sorted(self._c.items(), key=lambda kv: (kv[0][0] + kv[0][1], kv[0][0]))

    def is_zero(self) -> bool:
        return not self._c

    @property
    def degX(self) -> int:
        return max((i for i, _ in self._c), default=-1)

    @property
    def degY(self) -> int:
        return max((j for _, j in self._c), default=-1)

    @property
    def content(self) -> int:
        return reduce(math.gcd, self._c.values(), 0)

    def canonical(self) -> "BivarPoly":
        """Content 1 and a positive first coefficient in graded-lex order."""
        if not self._c:
            return self
        g = self.content
        items = self.items()
        if items[0][1] < 0:
            g = -g
        return BivarPoly({k: v // g for k, v in self._c.items()})

    def swap(self) -> "BivarPoly":
        return BivarPoly({(j, i): v for (i, j), v in self._c.items()})

    def equal_up_to_sign(self, other: "BivarPoly") -> bool:
        return self == other or self == -other

    # -- arithmetic

    def __neg__(self):
        return BivarPoly({k: -v for k, v in self._c.items()})

    def __add__(self, other):
        other = _as_poly(other)
        c = dict(self._c)
        for k, v in other._c.items():
            c[k] = c.get(k, 0) + v
        return BivarPoly(c)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        other = _as_poly(other)
        c: dict[tuple[int, int], int] = {}
        for (i, j), v in self._c.items():
            for (k, l), w in other._c.items():
                key = (i + k, j + l)
                c[key] = c.get(key, 0) + v * w
        return BivarPoly(c)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = BivarPoly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        return isinstance(other, BivarPoly) and self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def divmod_exact(self, other: "BivarPoly") -> tuple[dict, dict]:
        """Division in Q[X, Y] under lex order (X > Y).

        A single divisor is a Groebner basis of its ideal, so the remainder
        is zero exactly when ``other`` divides ``self``.  Quotient and
        remainder are returned as ``{(i, j): Fraction}`` maps.
        """
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        key = lambda m: (m[0], m[1])  # noqa: E731
        lt = max(other._c, key=key)
        lc = Fraction(other._c[lt])
        rest: dict = {k: Fraction(v) for k, v in self._c.items()}
        quot: dict = {}
        rem: dict = {}
        while rest:
            m = max(rest, key=key)
            v = rest.pop(m)
            if m[0] >= lt[0] and m[1] >= lt[1]:
                s = (m[0] - lt[0], m[1] - lt[1])
                f = v / lc
                quot[s] = quot.get(s, 0) + f
                for (i, j), w in other._c.items():
                    k = (i + s[0], j + s[1])
                    if k == m:
                        continue
                    nv = rest.get(k, 0) - f * w
                    if nv:
                        rest[k] = nv
                    else:
                        rest.pop(k, None)
            else:
                rem[m] = v
        return quot, rem

    def divides(self, other: "BivarPoly") -> bool:
        """True when ``self`` divides ``other``."""
        return not other.divmod_exact(self)[1]

    # -- reduction and evaluation

    def mod(self, p: int) -> "BivarPoly":
        return BivarPoly({k: v % p for k, v in self._c.items()})

    def congruent(self, other: "BivarPoly", p: int) -> bool:
        return (self - other).mod(p).is_zero()

    def evaluate(self, x, y):
        """Evaluate at ring elements (series, numbers) supporting + and *."""
        by_j: dict[int, dict[int, int]] = {}
        for (i, j), v in self._c.items():
            by_j.setdefault(j, {})[i] = v
        xp = _powers(x, self.degX)
        yp = _powers(y, self.degY)
        total = None
        for j, row in sorted(by_j.items()):
            inner = None
            for i, v in sorted(row.items()):
                t = xp[i] * v
                inner = t if inner is None else inner + t
            t = inner * yp[j]
            total = t if total is None else total + t
        return 0 if total is None else total

    def coefficients_in_x(self, y) -> list:
        """``[c_0(y), c_1(y), ...]`` with ``P(X, y) = sum c_i(y) X^i``."""
        out = [0] * (self.degX + 1)
        for (i, j), v in self._c.items():
            out[i] = out[i] + v * y ** j
        return out

    # -- serialization

    def to_json_dict(self) -> dict:
        return {"terms": [{"i": i, "j": j, "c": str(v)}
                          for (i, j), v in sorted(self._c.items(), key=lambda kv: (kv[0][1], kv[0][0]))]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), separators=(",", ":"))

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "BivarPoly":
        return cls({(int(t["i"]), int(t["j"])): int(t["c"]) for t in data["terms"]})

    @classmethod
    def from_json(cls, text: str) -> "BivarPoly":
        return cls.from_json_dict(json.loads(text))

    def to_text(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for (i, j), v in self.items():
            mono = "*".join(s for s in (_pw("X", i), _pw("Y", j)) if s)
            if not mono:
                body = str(abs(v))
            elif abs(v) == 1:
                body = mono
            else:
                body = f"{abs(v)}*{mono}"
            parts.append(("- " if v < 0 else "+ ") + body)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    @classmethod
    def from_text(cls, text: str) -> "BivarPoly":
        """Parse the expanded form produced by :meth:`to_text`."""
        c: dict[tuple[int, int], int] = {}
        s = text.replace(" ", "")
        if s and s[0] not in "+-":
            s = "+" + s
        for sign, body in re.findall(r"([+-])([^+-]+)", s):
            coef, i, j = 1, 0, 0
            for f in body.split("*"):
                m = re.fullmatch(r"([XY])(?:\^(\d+))?", f)
                if m:
                    e = int(m.group(2) or 1)
                    if m.group(1) == "X":
                        i += e
                    else:
                        j += e
                else:
                    coef *= int(f)
            c[(i, j)] = c.get((i, j), 0) + (coef if sign == "+" else -coef)
        return cls(c)

    def __repr__(self):
        return f"BivarPoly({self.to_text()})"


def _pw(var: str, e: int) -> str:
    return "" if e == 0 else var if e == 1 else f"{var}^{e}"


def _as_poly(x) -> BivarPoly:
    return x if isinstance(x, BivarPoly) else BivarPoly.const(int(x))


def _powers(x, k: int) -> list:
    out = [x ** 0 if not isinstance(x, FracSeries) else FracSeries.constant(1)]
    for _ in range(k):
        out.append(out[-1] * x)
    return out


# ---------------------------------------------------------------------------
# degree bounds


@dataclass(frozen=True)
class DegreeBounds:
    d1: int
    dn: int


def _pole_degree(exps: Mapping[int, int], m: int, level: int) -> int:
    spec = EtaQuotientSpec(level, {d * m: r for d, r in exps.items()})
    return int(sum(-v for v in order_table(spec).values() if v < 0))


@lru_cache(maxsize=None)
def pole_degrees(n: int) -> DegreeBounds:
    """Total pole degrees of ``g(tau)`` and ``g(n tau)`` on Gamma0(10n)."""
    if n < 2:
        raise ValueError("level must be at least 2")
    return DegreeBounds(_pole_degree(G_ETA, 1, 10 * n), _pole_degree(G_ETA, n, 10 * n))


def psi(n: int) -> int:
    """Index of Gamma0(n) in SL2(Z): ``n * prod(1 + 1/p)``."""
    out = Fraction(n)
    m, p = n, 2
    while p * p <= m:
        if m % p == 0:
            out *= Fraction(p + 1, p)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        out *= Fraction(m + 1, m)
    return int(out)


def row_bound(a: int, b: int, bounds: DegreeBounds) -> int:
    """Order beyond which a relation of X-degree a, Y-degree b must vanish."""
    return a * bounds.d1 + b * bounds.dn


# ---------------------------------------------------------------------------
# derivation


@dataclass
class Derivation:
    poly: BivarPoly
    level: int
    function: str
    order: Fraction
    box: tuple[int, int]
    dimension: int
    columns: int
    rows: int


def _series_pair(function: str, n: int, order: Fraction) -> tuple[FracSeries, FracSeries]:
    f = named_qexp(function, order)
    fn = named_qexp(function, order / n).scale(n)
    return f, fn


def _relation(function: str, n: int, box: tuple[int, int], order: Fraction,
              classes: bool, method: str) -> list[tuple[list[tuple[int, int]], list[list[int]]]]:
    """Nullspace of the monomial matrix, split by exponent residue class."""
    f, fn = _series_pair(function, n, order)
    a, b = box
    fp = _powers(f, a)
    fnp = _powers(fn, b)
    monos = [(i, j) for j in range(b + 1) for i in range(a + 1)]
    groups: dict[Fraction, list[tuple[int, int]]] = {}
    for m in monos:
        lead = (fp[m[0]] * fnp[m[1]]).valuation or Fraction(0)
        key = lead - math.floor(lead) if classes else Fraction(0)
        groups.setdefault(key, []).append(m)
    out = []
    for key, ms in sorted(groups.items()):
        cols = [fp[i] * fnp[j] for i, j in ms]
        grain = reduce(lambda u, v: u * v // math.gcd(u, v), (c.grain for c in cols), 1)
        step = Fraction(1) if classes else Fraction(1, grain)
        rows = []
        e = key
        while e < order:
            rows.append([_int_coeff(c[e]) for c in cols])
            e += step
        solver = nullspace if method == "bareiss" else nullspace_multimodular
        out.append((ms, solver(rows, len(ms)) if rows else [[1 if k == t else 0 for k in range(len(ms))]
                                                              for t in range(len(ms))]))
    return out


def _int_coeff(x: Fraction) -> int:
    if x.denominator != 1:
        raise ValueError("non-integral q-coefficient")
    return x.numerator


def _solve(function: str, n: int, box: tuple[int, int], order: Fraction,
           method: str) -> tuple[BivarPoly | None, int, int, int]:
    parts = _relation(function, n, box, order, classes=(function == "U"), method=method)
    dim = sum(len(ns) for _, ns in parts)
    poly = None
    for ms, ns in parts:
        if len(ns) == 1:
            poly = BivarPoly(dict(zip(ms, ns[0]))).canonical()
    cols = sum(len(ms) for ms, _ in parts)
    rows = int(order) + 1
    return poly, dim, cols, rows


def _default_method(box: tuple[int, int]) -> str:
    return "bareiss" if (box[0] + 1) * (box[1] + 1) <= 50 else "multimodular"


def derive_G_report(n: int, order: int | None = None, method: str | None = None) -> Derivation:
    b = pole_degrees(n)
    box = (b.dn, b.d1)
    need = row_bound(*box, b) + 1
    order = Fraction(need + SLACK if order is None else order)
    if order < need:
        raise DerivationError(f"order {order} is below the valence bound {need}", -1)
    poly, dim, cols, rows = _solve("g", n, box, order, method or _default_method(box))
    if dim != 1 or poly is None:
        raise DerivationError(f"level {n}: nullspace dimension {dim}, expected 1", dim)
    return Derivation(poly, n, "g", order, box, dim, cols, rows)


def derive_G(n: int, order: int | None = None, method: str | None = None) -> BivarPoly:
    """Modular equation ``G_n(g(tau), g(n tau)) = 0`` with content 1."""
    return derive_G_report(n, order, method).poly


def transformed_G(n: int, G: BivarPoly | None = None) -> BivarPoly:
    """``(5X^2-1)^dn (5Y^2-1)^d1 G_n((X^2-1)/(5X^2-1), (Y^2-1)/(5Y^2-1))``."""
    b = pole_degrees(n)
    G = G or derive_G(n)
    X, Y = BivarPoly.X(), BivarPoly.Y()
    xn, xd = X * X - 1, 5 * X * X - 1
    yn, yd = Y * Y - 1, 5 * Y * Y - 1
    xnp, xdp = _powers(xn, b.dn), _powers(xd, b.dn)
    ynp, ydp = _powers(yn, b.d1), _powers(yd, b.d1)
    out = BivarPoly()
    for (i, j), v in G.items():
        out = out + v * (xnp[i] * xdp[b.dn - i] * ynp[j] * ydp[b.d1 - j])
    return out


def derive_U_report(n: int, order: int | None = None, method: str | None = None) -> Derivation:
    """Smallest-box relation between ``U(tau)`` and ``U(n tau)``.

    Boxes are tried in the order ``(dn, d1)``, ``(2dn, d1)``, ``(dn, 2d1)``,
    ``(2dn, 2d1)``; the first one with a nontrivial nullspace must have
    dimension one.
    """
    b = pole_degrees(n)
    for box in [(b.dn, b.d1), (2 * b.dn, b.d1), (b.dn, 2 * b.d1), (2 * b.dn, 2 * b.d1)]:
        need = row_bound(*box, b) + 1
        o = Fraction(need + SLACK if order is None else max(order, need))
        poly, dim, cols, rows = _solve("U", n, box, o, method or _default_method(box))
        if dim == 0:
            continue
        if dim != 1 or poly is None:
            raise DerivationError(f"level {n}: nullspace dimension {dim} in box {box}", dim)
        return Derivation(poly, n, "U", o, box, dim, cols, rows)
    raise DerivationError(f"level {n}: no relation within degree ({2 * b.dn}, {2 * b.d1})", 0)


@dataclass(frozen=True)
class FactorCheck:
    divides: bool
    cofactor_valuation: Fraction | None


def check_U_factor(U: BivarPoly, n: int, G: BivarPoly | None = None, order: int = 60) -> FactorCheck:
    """``U`` divides the transformed ``G_n`` and the cofactor does not vanish at U."""
    big = transformed_G(n, G)
    quot, rem = big.divmod_exact(U)
    if rem:
        return FactorCheck(False, None)
    den = reduce(lambda a, c: a * c // math.gcd(a, c), (v.denominator for v in quot.values()), 1)
    cof = BivarPoly({k: int(v * den) for k, v in quot.items()})
    x, y = _series_pair("U", n, Fraction(order))
    val = cof.evaluate(x, y)
    return FactorCheck(True, None if val.is_zero() else val.valuation)


def derive_U(n: int, order: int | None = None, method: str | None = None) -> BivarPoly:
    """Modular equation ``U_n(U(tau), U(n tau)) = 0``, checked as a factor of the transformed G_n."""
    d = derive_U_report(n, order, method)
    chk = check_U_factor(d.poly, n)
    if not chk.divides:
        raise DerivationError(f"level {n}: candidate does not divide the transformed G_{n}", 1)
    if chk.cofactor_valuation is None:
        raise DerivationError(f"level {n}: cofactor also vanishes; factor choice ambiguous", 1)
    return d.poly


@dataclass(frozen=True)
class ModeqCheck:
    passed: bool
    residual_order: Fraction | None


def verify_modeq(poly: BivarPoly, which: str, n: int, order: int = 300) -> ModeqCheck:
    """Substitute the catalog series and check the result vanishes below ``q^order``."""
    if poly.is_zero():
        return ModeqCheck(False, None)
    fn = {"g": "g", "U": "U"}[which]
    o = Fraction(order)
    x, y = _series_pair(fn, n, o)
    res = poly.evaluate(x, y)
    if res.is_zero():
        return ModeqCheck(res.order >= o, res.order)
    return ModeqCheck(False, res.valuation)


# ---------------------------------------------------------------------------
# structural checks


def kronecker_target(p: int, sign: int = 1) -> BivarPoly:
    """``(X^p - Y)(X - sign*Y^p)``."""
    X, Y = BivarPoly.X(), BivarPoly.Y()
    return (X ** p - Y) * (X - sign * Y ** p)


def congruent_up_to_sign(poly: BivarPoly, target: BivarPoly, p: int) -> bool:
    return poly.congruent(target, p) or poly.congruent(-target, p)


@dataclass
class StructureReport:
    p: int
    degrees: tuple[int, int]
    psi: int
    degree_ok: bool
    symmetric: bool
    kronecker: bool | None = None
    support: bool | None = None
    conjecture: bool | None = None
    details: dict = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        return {k: (list(v) if isinstance(v, tuple) else v) for k, v in self.__dict__.items()}


def support_pattern(poly: BivarPoly, p: int) -> dict[str, bool]:
    """Corner and zero-coefficient pattern for odd prime levels ``p != 5``."""
    c = poly.coeff
    top = p + 1
    return {
        "corners_nonzero": c(top, 0) != 0 and c(0, top) != 0,
        "top_row_zero": all(c(top, j) == 0 and c(j, top) == 0 for j in range(1, top + 1)),
        "low_edge_zero": all(c(0, j) == 0 and c(j, 0) == 0 for j in range(0, top)),
    }


def structure_checks(poly: BivarPoly, p: int, which: str = "g") -> StructureReport:
    """Degree, symmetry and congruence properties expected at prime level ``p``."""
    deg = (poly.degX, poly.degY)
    rep = StructureReport(p, deg, psi(p), deg == (psi(p), psi(p)),
                          poly.equal_up_to_sign(poly.swap()))
    if p % 2 and p != 5:
        if which == "g":
            rep.kronecker = congruent_up_to_sign(poly, kronecker_target(p), p)
            pattern = support_pattern(poly, p)
            rep.details["support"] = pattern
            rep.support = all(pattern.values())
        else:
            sign = 1 if p % 10 in (1, 9) else -1
            rep.conjecture = congruent_up_to_sign(poly, kronecker_target(p, sign), p)
            rep.details["conjecture_form"] = "(X^p-Y)(X-Y^p)" if sign == 1 else "(X^p-Y)(X+Y^p)"
    return rep


# ---------------------------------------------------------------------------
# numeric use of the level-2 equation


def solve_modeq(poly: BivarPoly, value, solve_for: str = "X") -> list:
    """All roots of ``poly`` in one variable with the other fixed to ``value``."""
    import mpmath

    p = poly if solve_for == "X" else poly.swap()
    coeffs = p.coefficients_in_x(mpmath.mpmathify(value))
    while coeffs and abs(coeffs[-1]) == 0:
        coeffs.pop()
    scale = max(abs(c) for c in coeffs)
    if len(coeffs) < 2 or abs(coeffs[-1]) < scale * mpmath.mpf(10) ** (-mpmath.mp.dps // 2):
        raise ArithmeticError("degenerate equation: leading coefficient vanishes")
    return list(mpmath.polyroots(coeffs[::-1], maxsteps=200, extraprec=2 * mpmath.mp.prec))


def propagate_level2(g_value, G2: BivarPoly | None = None) -> list:
    """Both candidates for ``g(tau)`` given ``g(2 tau)``."""
    G2 = G2 or derive_G(2)
    return solve_modeq(G2, g_value, "X")


def iter_levels(levels: Iterable[int]):
    for n in levels:
        yield n, derive_G(n), derive_U(n)
