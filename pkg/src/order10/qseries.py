"""Exact truncated q-series in fractional powers of q.

A :class:`FracSeries` stores ``q^(lead/grain) * sum_k c_k q^(k/grain)`` with
rational coefficients held as an integer numerator vector over a common
denominator.  Coefficients at exponents ``>= trunc/grain`` are *unknown*, not
zero; ``trunc=None`` marks an exact (finite) series such as ``1 + q``.

Every constructor takes an absolute ``order``: the returned series is exact
for all exponents strictly below ``order``.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, Mapping, Sequence, Union

DEFAULT_ORDER = 200
DEFAULT_GRAIN = 240

Number = Union[int, Fraction]


class ZeroDivisorToPrecision(ZeroDivisionError):
    """Raised when dividing by a series that is zero to its known order."""


def _lcm(a: int, b: int) -> int:
    return a * b // math.gcd(a, b)


def _as_fraction(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


# ---------------------------------------------------------------------------
# integer convolution kernel


def _pack(vec: Sequence[int], nbytes: int) -> int:
    """Kronecker-pack a signed integer vector into one integer, base 2**(8*nbytes)."""
    raw = b"".join(c.to_bytes(nbytes, "little", signed=True) for c in vec)
    value = int.from_bytes(raw, "little")
    if any(c < 0 for c in vec):
        one = (1).to_bytes(nbytes, "little")
        zero = bytes(nbytes)
        borrow = b"".join(one if c < 0 else zero for c in vec)
        value -= int.from_bytes(borrow, "little") << (8 * nbytes)
    return value


def _unpack(value: int, nbytes: int, count: int) -> list[int]:
    half = 1 << (8 * nbytes - 1)
    offset = int.from_bytes(half.to_bytes(nbytes, "little") * count, "little")
    value = (value + offset) & ((1 << (8 * nbytes * count)) - 1)
    raw = value.to_bytes(nbytes * count, "little")
    return [int.from_bytes(raw[i:i + nbytes], "little") - half
            for i in range(0, nbytes * count, nbytes)]


def convolve(a: Sequence[int], b: Sequence[int], n: int) -> list[int]:
    """First ``n`` coefficients of the product of two integer coefficient lists."""
    a = list(a[:n])
    b = list(b[:n])
    while a and a[-1] == 0:
        a.pop()
    while b and b[-1] == 0:
        b.pop()
    if not a or not b:
        return [0] * n
    m = min(n, len(a) + len(b) - 1)
    if len(a) * len(b) <= 400:
        out = [0] * m
        for i, x in enumerate(a):
            if x:
                for j in range(min(len(b), m - i)):
                    out[i + j] += x * b[j]
        return out + [0] * (n - m)
    bound = max(map(abs, a)) * max(map(abs, b)) * min(len(a), len(b))
    nbytes = (bound.bit_length() + 2 + 7) // 8
    prod = _pack(a, nbytes) * _pack(b, nbytes)
    return _unpack(prod, nbytes, m) + [0] * (n - m)


def _inverse_int(b: Sequence[int], n: int) -> list[int]:
    """Newton inversion of an integer series with constant term +-1."""
    b0 = b[0]
    inv = [b0]
    k = 1
    while k < n:
        k = min(2 * k, n)
        e = convolve(b, inv, k)
        e = [-x for x in e]
        e[0] += 2
        inv = convolve(inv, e, k)
    return inv[:n]


def _inverse_rational(b: Sequence[int], n: int) -> tuple[list[int], int]:
    """Inverse of an integer series with arbitrary nonzero constant term.

    Returns ``(E, b0**n)`` with ``1/b = E / b0**n`` (up to ``q**n``).
    """
    b0 = b[0]
    if b0 in (1, -1):
        return _inverse_int(b, n), 1
    # E_k = b0^(k+1) * inv_k are the coefficients of 1/B(y), where
    # B(y) = b(b0*y)/b0 has integer coefficients and constant term 1
    scaled = [1] + [b[i] * b0 ** (i - 1) for i in range(1, min(n, len(b)))]
    e = _inverse_int(scaled, n)
    # rescale E_k (denominator b0^(k+1)) to the common denominator b0^n
    return [e[k] * b0 ** (n - 1 - k) for k in range(n)], b0 ** n


# ---------------------------------------------------------------------------


class FracSeries:
    """Truncated series in ``q^(1/grain)`` with exact rational coefficients."""

    __slots__ = ("grain", "lead", "_nums", "_den", "trunc")

    def __init__(self, grain: int, lead: int, nums: Sequence[int], den: int = 1,
                 trunc: int | None = None):
        if grain < 1:
            raise ValueError("grain must be a positive integer")
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        nums = list(nums)
        if den < 0:
            den = -den
            nums = [-x for x in nums]
        if trunc is not None:
            width = trunc - lead
            if width < 0:
                nums, lead = [], trunc
            elif len(nums) > width:
                nums = nums[:width]
            else:
                nums = nums + [0] * (width - len(nums))
        skip = 0
        while skip < len(nums) and nums[skip] == 0:
            skip += 1
        if skip:
            nums = nums[skip:]
            lead += skip
        if trunc is None:
            while nums and nums[-1] == 0:
                nums.pop()
            if not nums:
                lead = 0
        g = reduce(math.gcd, nums, den)
        if g > 1:
            nums = [x // g for x in nums]
            den //= g
        # canonical grain: smallest grain on which every known exponent lives
        step = reduce(math.gcd, (i for i, x in enumerate(nums) if x), grain)
        step = math.gcd(step, lead)
        if trunc is not None:
            step = math.gcd(step, trunc)
        if step > 1:
            nums = nums[::step]
            grain //= step
            lead //= step
            if trunc is not None:
                trunc //= step
        self.grain = grain
        self.lead = lead
        self._nums = tuple(nums)
        self._den = den
        self.trunc = trunc

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[Number], grain: int = 1, lead: int = 0,
                    trunc: int | None = None) -> "FracSeries":
        """Build from consecutive coefficients starting at ``q^(lead/grain)``."""
        fr = [_as_fraction(c) for c in coeffs]
        den = reduce(_lcm, (c.denominator for c in fr), 1)
        nums = [c.numerator * (den // c.denominator) for c in fr]
        return cls(grain, lead, nums, den, trunc)

    @classmethod
    def from_dict(cls, terms: Mapping[Number, Number], order: Number | None = None) -> "FracSeries":
        """Build from ``{exponent: coefficient}`` with rational exponents."""
        exps = [_as_fraction(e) for e in terms]
        grain = reduce(_lcm, (e.denominator for e in exps), 1)
        if order is not None:
            grain = _lcm(grain, _as_fraction(order).denominator)
        if not terms:
            if order is None:
                return cls(1, 0, [])
            o = _as_fraction(order)
            return cls(grain, int(o * grain), [], 1, int(o * grain))
        idx = {int(e * grain): _as_fraction(c) for e, c in zip(exps, terms.values())}
        lo = min(idx)
        coeffs = [idx.get(k, Fraction(0)) for k in range(lo, max(idx) + 1)]
        trunc = None if order is None else int(_as_fraction(order) * grain)
        return cls.from_coeffs(coeffs, grain, lo, trunc)

    @classmethod
    def constant(cls, c: Number) -> "FracSeries":
        return cls.from_coeffs([c])

    @classmethod
    def monomial(cls, exponent: Number, coeff: Number = 1) -> "FracSeries":
        e = _as_fraction(exponent)
        return cls.from_coeffs([coeff], e.denominator, e.numerator)

    @classmethod
    def zero(cls, order: Number | None = None) -> "FracSeries":
        return cls.from_dict({}, order)

    # -- views ----------------------------------------------------------------

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(x, self._den) for x in self._nums)

    @property
    def is_exact(self) -> bool:
        return self.trunc is None

    @property
    def valuation(self) -> Fraction | None:
        """Leading exponent, or ``None`` when zero to the known order."""
        if not self._nums:
            return None
        return Fraction(self.lead, self.grain)

    @property
    def order(self) -> Fraction | None:
        """Exponent bound below which the series is known (``None``: exact)."""
        return None if self.trunc is None else Fraction(self.trunc, self.grain)

    def is_zero(self) -> bool:
        return not self._nums

    def leading_coefficient(self) -> Fraction:
        if not self._nums:
            raise ZeroDivisorToPrecision("series is zero to its known order")
        return Fraction(self._nums[0], self._den)

    def terms(self) -> dict[Fraction, Fraction]:
        """Nonzero terms as ``{exponent: coefficient}``."""
        return {Fraction(self.lead + k, self.grain): Fraction(x, self._den)
                for k, x in enumerate(self._nums) if x}

    def __getitem__(self, exponent: Number) -> Fraction:
        e = _as_fraction(exponent)
        if self.trunc is not None and e >= self.order:
            raise IndexError(f"coefficient of q^{e} is beyond the known order {self.order}")
        k = e * self.grain
        if k.denominator != 1:
            return Fraction(0)
        k = int(k) - self.lead
        if 0 <= k < len(self._nums):
            return Fraction(self._nums[k], self._den)
        return Fraction(0)

    def coefficient_list(self, start: Number, stop: Number, step: Number = 1) -> list[Fraction]:
        """Coefficients at ``start, start+step, ...`` below ``stop``."""
        out = []
        e = _as_fraction(start)
        while e < stop:
            out.append(self[e])
            e += step
        return out

    def regrain(self, grain: int) -> tuple[int, list[int], int | None]:
        """Exponent data rescaled to a multiple of the current grain."""
        k, r = divmod(grain, self.grain)
        if r:
            raise ValueError(f"grain {grain} is not a multiple of {self.grain}")
        if k == 1:
            return self.lead, list(self._nums), self.trunc
        nums = [0] * (len(self._nums) * k)
        nums[::k] = self._nums
        trunc = None if self.trunc is None else self.trunc * k
        return self.lead * k, nums, trunc

    def truncate(self, order: Number) -> "FracSeries":
        """Forget everything at exponents ``>= order``."""
        o = _as_fraction(order)
        grain = _lcm(self.grain, o.denominator)
        lead, nums, trunc = self.regrain(grain)
        t = int(o * grain)
        if trunc is not None:
            t = min(t, trunc)
        return FracSeries(grain, lead, nums, self._den, t)

    # -- arithmetic -----------------------------------------------------------

    @staticmethod
    def _coerce(x) -> "FracSeries":
        if isinstance(x, FracSeries):
            return x
        if isinstance(x, (int, Fraction)):
            return FracSeries.constant(x)
        return NotImplemented

    def __neg__(self) -> "FracSeries":
        return FracSeries(self.grain, self.lead, [-x for x in self._nums], self._den, self.trunc)

    def __add__(self, other) -> "FracSeries":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        grain = _lcm(self.grain, other.grain)
        la, na, ta = self.regrain(grain)
        lb, nb, tb = other.regrain(grain)
        if not na:
            la = lb if nb else min(la, lb)
        if not nb:
            lb = la
        lead = min(la, lb)
        truncs = [t for t in (ta, tb) if t is not None]
        trunc = min(truncs) if truncs else None
        end = max(la + len(na), lb + len(nb))
        if trunc is not None:
            end = min(end, trunc)
            lead = min(lead, trunc)
        g = math.gcd(self._den, other._den)
        fa, fb = other._den // g, self._den // g
        out = [0] * max(end - lead, 0)
        for k, x in enumerate(na):
            i = la - lead + k
            if i >= len(out):
                break
            out[i] += x * fa
        for k, x in enumerate(nb):
            i = lb - lead + k
            if i >= len(out):
                break
            out[i] += x * fb
        return FracSeries(grain, lead, out, self._den * fa, trunc)

    __radd__ = __add__

    def __sub__(self, other) -> "FracSeries":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "FracSeries":
        return self._coerce(other) - self

    def __mul__(self, other) -> "FracSeries":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        grain = _lcm(self.grain, other.grain)
        la, na, ta = self.regrain(grain)
        lb, nb, tb = other.regrain(grain)
        # an unknown-zero factor still bounds the product's known range
        if not na and ta is not None:
            la = ta
        if not nb and tb is not None:
            lb = tb
        lead = la + lb
        cands = []
        if ta is not None:
            cands.append(ta + lb)
        if tb is not None:
            cands.append(tb + la)
        trunc = min(cands) if cands else None
        if trunc is None:
            n = len(na) + len(nb) - 1 if na and nb else 0
        else:
            n = trunc - lead
        out = convolve(na, nb, n) if n > 0 else []
        return FracSeries(grain, lead, out, self._den * other._den, trunc)

    __rmul__ = __mul__

    def inverse(self) -> "FracSeries":
        if not self._nums:
            raise ZeroDivisorToPrecision(
                f"division by a series that is zero to O(q^{self.order})")
        if self.trunc is None:
            if len(self._nums) == 1:
                return FracSeries(self.grain, -self.lead, [self._den], self._nums[0])
            raise ZeroDivisorToPrecision(
                "inverse of an exact non-monomial series needs a truncation; call .truncate() first")
        n = self.trunc - self.lead
        e, d = _inverse_rational(self._nums, n)
        return FracSeries(self.grain, -self.lead, [x * self._den for x in e], d,
                          self.trunc - 2 * self.lead)

    def __truediv__(self, other) -> "FracSeries":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other) -> "FracSeries":
        return self._coerce(other) * self.inverse()

    def __pow__(self, k: int) -> "FracSeries":
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = FracSeries.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale(self, m: int) -> "FracSeries":
        """The series of ``tau -> f(m*tau)``: every exponent is multiplied by ``m``."""
        if m < 1:
            raise ValueError("scale factor must be a positive integer")
        if m == 1:
            return self
        nums = [0] * (len(self._nums) * m)
        nums[::m] = self._nums
        trunc = None if self.trunc is None else self.trunc * m
        return FracSeries(self.grain, self.lead * m, nums, self._den, trunc)

    # -- comparison -----------------------------------------------------------

    def agrees_with(self, other: "FracSeries") -> Fraction | None:
        """First exponent at which the two series differ (``None`` if they never do)."""
        diff = self - other
        if diff.is_zero():
            return diff.order
        return diff.valuation

    def __eq__(self, other) -> bool:
        if not isinstance(other, FracSeries):
            return NotImplemented
        return (self.grain, self.lead, self._nums, self._den, self.trunc) == (
            other.grain, other.lead, other._nums, other._den, other.trunc)

    def __hash__(self):
        return hash((self.grain, self.lead, self._nums, self._den, self.trunc))

    def __repr__(self) -> str:
        parts = []
        for e, c in list(self.terms().items())[:8]:
            parts.append(f"{c}*q^{e}")
        tail = f" + O(q^{self.order})" if self.trunc is not None else ""
        more = " + ..." if len(self.terms()) > 8 else ""
        return f"FracSeries({' + '.join(parts) or '0'}{more}{tail})"

    # -- serialization --------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "grain": self.grain,
            "lead": self.lead,
            "trunc": self.trunc,
            "coeffs": [f"{x.numerator}/{x.denominator}" for x in self.coeffs],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "FracSeries":
        coeffs = [Fraction(c) for c in data["coeffs"]]
        return cls.from_coeffs(coeffs, int(data["grain"]), int(data["lead"]),
                               None if data["trunc"] is None else int(data["trunc"]))

    @classmethod
    def from_json(cls, text: str) -> "FracSeries":
        return cls.from_json_dict(json.loads(text))


def series_arith(a: FracSeries, b: FracSeries | None, op: str, k: int | None = None) -> FracSeries:
    """Dispatch ``add|sub|mul|div|pow`` by name."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    if op == "pow":
        return a ** k
    raise ValueError(f"unknown operation {op!r}")


# ---------------------------------------------------------------------------
# product constructors


@dataclass(frozen=True)
class PochhammerSpec:
    """The infinite product ``(sign*q^s; q^t)_oo``."""

    sign: int
    s: Fraction
    t: Fraction

    def __post_init__(self):
        object.__setattr__(self, "s", _as_fraction(self.s))
        object.__setattr__(self, "t", _as_fraction(self.t))
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if self.s <= 0 or self.t <= 0:
            raise ValueError("exponents must be positive for a convergent product")


def _product(factors: Iterable[tuple[int, int]], length: int) -> list[int]:
    """Expand prod (1 - sign*x^e) over ``(sign, e)`` pairs, to ``x^length``."""
    c = [0] * length
    if length:
        c[0] = 1
    for sign, e in factors:
        if e >= length:
            continue
        if sign == 1:
            for i in range(length - 1, e - 1, -1):
                c[i] -= c[i - e]
        else:
            for i in range(length - 1, e - 1, -1):
                c[i] += c[i - e]
    return c


def _grain_for(*values: Fraction) -> int:
    return reduce(_lcm, (_as_fraction(v).denominator for v in values), 1)


def _signed_pochhammer(sign: int, s: Fraction, base_sign: int, t: Fraction,
                       order: Fraction) -> FracSeries:
    """``prod_n (1 - sign*base_sign^n q^(s+n t))`` to ``O(q^order)``."""
    grain = _grain_for(s, t, order)
    S, T = int(s * grain), int(t * grain)
    L = max(int(math.ceil(order * grain)), 0)
    count = 0 if S >= L else (L - S - 1) // T + 1
    factors = ((sign * base_sign ** n, S + n * T) for n in range(count))
    return FracSeries(grain, 0, _product(factors, L), 1, L)


def pochhammer_series(spec: PochhammerSpec, order: Number = DEFAULT_ORDER) -> FracSeries:
    """Expansion of ``(sign*q^s; q^t)_oo`` exact below ``q^order``."""
    return _signed_pochhammer(spec.sign, spec.s, 1, spec.t, _as_fraction(order))


def euler_product(m: int, order: Number) -> FracSeries:
    """``(q^m; q^m)_oo`` below ``q^order``."""
    return _signed_pochhammer(1, Fraction(m), 1, Fraction(m), _as_fraction(order))


def eta_series(m: Number = 1, order: Number = DEFAULT_ORDER) -> FracSeries:
    """``eta(m*tau) = q^(m/24) (q^m; q^m)_oo`` exact below ``q^order``."""
    m = _as_fraction(m)
    if m <= 0:
        raise ValueError("scale must be positive")
    lead = m / 24
    body = _signed_pochhammer(1, m, 1, m, _as_fraction(order) - lead)
    return FracSeries.monomial(lead) * body


def eta_quotient_series(exponents: Mapping[int, int], order: Number = DEFAULT_ORDER) -> FracSeries:
    """``prod eta(delta*tau)^r_delta`` exact below ``q^order``."""
    order = _as_fraction(order)
    lead = sum(Fraction(d * r, 24) for d, r in exponents.items())
    rel = order - lead
    body = FracSeries.constant(1)
    for d, r in sorted(exponents.items()):
        if r == 0:
            continue
        base = _signed_pochhammer(1, Fraction(d), 1, Fraction(d), max(rel, Fraction(0)))
        body = body * base ** r
    return (FracSeries.monomial(lead) * body).truncate(order)


def bernoulli2(t: Fraction) -> Fraction:
    """Second Bernoulli polynomial ``t^2 - t + 1/6``."""
    t = _as_fraction(t)
    return t * t - t + Fraction(1, 6)


def gen_eta_exponent(N: int, g: int) -> Fraction:
    """Leading exponent ``N*B2(g/N)/2`` of the generalized eta function."""
    return N * bernoulli2(Fraction(g, N)) / 2


def gen_eta_series(N: int, g: int, order: Number = DEFAULT_ORDER) -> FracSeries:
    """Generalized Dedekind eta ``eta_{N,g}`` exact below ``q^order``."""
    if N < 1 or not 1 <= g <= N // 2:
        raise ValueError(f"need 1 <= g <= floor(N/2), got N={N}, g={g}")
    order = _as_fraction(order)
    lead = gen_eta_exponent(N, g)
    rel = max(order - lead, Fraction(0))
    body = (_signed_pochhammer(1, Fraction(g), 1, Fraction(N), rel)
            * _signed_pochhammer(1, Fraction(N - g), 1, Fraction(N), rel))
    return (FracSeries.monomial(lead) * body).truncate(order)


def gen_eta_quotient_series(N: int, exponents: Mapping[int, int],
                            order: Number = DEFAULT_ORDER) -> FracSeries:
    """``prod eta_{N,g}^r_g`` exact below ``q^order``."""
    order = _as_fraction(order)
    lead = sum(r * gen_eta_exponent(N, g) for g, r in exponents.items())
    rel = max(order - lead, Fraction(0))
    body = FracSeries.constant(1)
    for g, r in sorted(exponents.items()):
        if r == 0:
            continue
        if not 1 <= g <= N // 2:
            raise ValueError(f"index g={g} out of range for N={N}")
        f = (_signed_pochhammer(1, Fraction(g), 1, Fraction(N), rel)
             * _signed_pochhammer(1, Fraction(N - g), 1, Fraction(N), rel))
        body = body * f ** r
    return (FracSeries.monomial(lead) * body).truncate(order)


def theta_f(sign_a: int, s: Number, sign_b: int, t: Number,
            order: Number = DEFAULT_ORDER) -> FracSeries:
    """Ramanujan's ``f(a, b)`` at ``a = sign_a*q^s``, ``b = sign_b*q^t``.

    Uses the triple product ``f(a,b) = (-a;ab)(-b;ab)(ab;ab)``.
    """
    s, t, order = _as_fraction(s), _as_fraction(t), _as_fraction(order)
    if s <= 0 or t <= 0:
        raise ValueError("exponents must be positive")
    ab_sign = sign_a * sign_b
    u = s + t
    return (_signed_pochhammer(-sign_a, s, ab_sign, u, order)
            * _signed_pochhammer(-sign_b, t, ab_sign, u, order)
            * _signed_pochhammer(ab_sign, u, ab_sign, u, order))


def substitute_scale(f: FracSeries, m: int) -> FracSeries:
    return f.scale(m)


def sigma(n: int, k: int) -> int:
    """Divisor power sum."""
    total = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            total += d ** k
            if d * d != n:
                total += (n // d) ** k
        d += 1
    return total


def eisenstein_e4(order: Number) -> FracSeries:
    L = int(math.ceil(_as_fraction(order)))
    return FracSeries(1, 0, [1] + [240 * sigma(n, 3) for n in range(1, L)], 1, L)


def j_series(order: Number = DEFAULT_ORDER) -> FracSeries:
    """Klein's ``j = E4^3 / eta^24`` exact below ``q^order``."""
    order = _as_fraction(order)
    rel = order + 1
    e4 = eisenstein_e4(rel)
    delta = FracSeries.monomial(1) * euler_product(1, rel) ** 24
    return (e4 ** 3 / delta).truncate(order)
