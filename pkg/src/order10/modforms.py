"""Cusps of Gamma0(N) and orders of (generalized) eta quotients at them."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .qseries import bernoulli2


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def units_mod(n: int) -> list[int]:
    return [s for s in range(n) if math.gcd(s, n) == 1] if n > 1 else [0]


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``a*x + b*y = g = gcd(a, b) >= 0``."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        k, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - k * x1
        y0, y1 = y1, y0 - k * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


@dataclass(frozen=True, order=True)
class Cusp:
    """A cusp ``a/c`` in lowest terms; ``c == 0`` encodes infinity."""

    a: int
    c: int

    def __post_init__(self):
        a, c = self.a, self.c
        if c < 0:
            a, c = -a, -c
        if c == 0:
            a = 1
        elif math.gcd(a, c) != 1:
            g = math.gcd(a, c)
            a, c = a // g, c // g
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "c", c)

    @classmethod
    def infinity(cls) -> "Cusp":
        return cls(1, 0)

    @classmethod
    def parse(cls, text: str) -> "Cusp":
        text = text.strip()
        if text in ("oo", "inf", "infinity", "∞"):
            return cls.infinity()
        if "/" in text:
            a, c = text.split("/")
            return cls(int(a), int(c))
        return cls(int(text), 1)

    @property
    def is_infinity(self) -> bool:
        return self.c == 0

    def __str__(self) -> str:
        if self.c == 0:
            return "oo"
        if self.c == 1:
            return str(self.a)
        return f"{self.a}/{self.c}"


INFINITY = Cusp.infinity()


def cusp_equivalent(N: int, x: Cusp, y: Cusp) -> bool:
    """Brute-force Gamma0(N)-equivalence of two reduced cusps."""
    if N == 1:
        return True
    a, c = x.a % N, x.c % N
    a2, c2 = y.a % N, y.c % N
    for s in units_mod(N):
        if (s * c - c2) % N:
            continue
        s_inv = pow(s, -1, N)
        for n in range(N):
            if (s_inv * a + n * c - a2) % N == 0:
                return True
    return False


def cusp_set(N: int) -> list[Cusp]:
    """One representative per Gamma0(N) cusp class.

    Denominators run over the divisors of ``N``; within a denominator the
    smallest positive numerator is kept.  ``c = 1`` gives ``0`` and
    ``c = N`` gives infinity.
    """
    reps: list[Cusp] = []
    for c in divisors(N):
        if c == N:
            cand = [INFINITY]
        elif c == 1:
            cand = [Cusp(0, 1)]
        else:
            cand = [Cusp(a, c) for a in range(1, N + 1) if math.gcd(a, c) == 1]
        for x in cand:
            if not any(cusp_equivalent(N, x, r) for r in reps):
                reps.append(x)
    return reps


def cusp_count(N: int) -> int:
    """Number of cusp classes, ``sum_{c|N} phi(gcd(c, N/c))``."""
    return sum(sum(1 for s in range(1, math.gcd(c, N // c) + 1)
                   if math.gcd(s, math.gcd(c, N // c)) == 1) for c in divisors(N))


def cusp_representative(N: int, x: Cusp) -> Cusp:
    for r in cusp_set(N):
        if cusp_equivalent(N, x, r):
            return r
    raise AssertionError(f"no representative for {x} at level {N}")


def cusp_width(N: int, x: Cusp) -> int:
    return N // math.gcd(x.c * x.c, N)


def cusp_matrix(x: Cusp) -> tuple[int, int, int, int]:
    """An SL2(Z) matrix ``[a, b; c, d]`` sending infinity to the cusp."""
    if x.c == 0:
        return (1, 0, 0, 1)
    g, d, b = ext_gcd(x.a, x.c)
    # a*d - b*c = 1 with the signs of ext_gcd(a, c): a*d + c*b = 1
    return (x.a, -b, x.c, d)


# ---------------------------------------------------------------------------
# eta quotients


@dataclass(frozen=True)
class EtaQuotientSpec:
    """``prod_{delta | N} eta(delta*tau)^r_delta``."""

    level: int
    exponents: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        exps = {int(d): int(r) for d, r in dict(self.exponents).items() if r}
        for d in exps:
            if d < 1 or self.level % d:
                raise ValueError(f"{d} does not divide the level {self.level}")
        object.__setattr__(self, "exponents", exps)

    @property
    def weight(self) -> Fraction:
        return Fraction(sum(self.exponents.values()), 2)

    def scaled(self, m: int) -> "EtaQuotientSpec":
        """The quotient of ``f(m*tau)`` at level ``m*N``."""
        return EtaQuotientSpec(self.level * m, {d * m: r for d, r in self.exponents.items()})

    def __hash__(self):
        return hash((self.level, tuple(sorted(self.exponents.items()))))


@dataclass(frozen=True)
class NewmanReport:
    weight: Fraction
    sum_delta: int
    sum_codelta: int
    character_argument: Fraction
    passes: bool

    @property
    def character_squarefree(self) -> int:
        """Squarefree kernel of the character argument (1 means trivial)."""
        arg = self.character_argument
        n = arg.numerator * arg.denominator
        sign = -1 if n < 0 else 1
        n = abs(n)
        core = 1
        p = 2
        while p * p <= n:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            if e % 2:
                core *= p
            p += 1
        return sign * core * n


def newman_check(spec: EtaQuotientSpec) -> NewmanReport:
    """Holomorphy-free modularity conditions on Gamma0(N) for an eta quotient."""
    N = spec.level
    k = spec.weight
    s1 = sum(d * r for d, r in spec.exponents.items())
    s2 = sum((N // d) * r for d, r in spec.exponents.items())
    arg = Fraction(1)
    for d, r in spec.exponents.items():
        arg *= Fraction(d) ** r
    if k.denominator == 1 and k.numerator % 2:
        arg = -arg
    passes = k.denominator == 1 and s1 % 24 == 0 and s2 % 24 == 0
    return NewmanReport(k, s1, s2, arg, passes)


def ligozat_order(spec: EtaQuotientSpec, x: Cusp) -> Fraction:
    """Order of vanishing at ``x`` in the local parameter ``q^(1/width)``."""
    N = spec.level
    d = N if x.c == 0 else math.gcd(x.c, N)
    total = sum(Fraction(math.gcd(d, delta) ** 2 * r, delta)
                for delta, r in spec.exponents.items())
    return Fraction(N, 24 * d * math.gcd(d, N // d)) * total


def order_table(spec: EtaQuotientSpec) -> dict[Cusp, Fraction]:
    return {x: ligozat_order(spec, x) for x in cusp_set(spec.level)}


# ---------------------------------------------------------------------------
# generalized eta quotients


@dataclass(frozen=True)
class GenEtaQuotientSpec:
    """``prod_g eta_{N,g}(tau)^r_g`` over ``1 <= g <= N/2``."""

    level: int
    exponents: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        exps = {int(g): int(r) for g, r in dict(self.exponents).items() if r}
        for g in exps:
            if not 1 <= g <= self.level // 2:
                raise ValueError(f"index {g} outside 1..{self.level // 2}")
        object.__setattr__(self, "exponents", exps)

    @property
    def sums(self) -> tuple[int, int, int]:
        e = self.exponents
        return (sum(e.values()), sum(g * r for g, r in e.items()),
                sum(g * g * r for g, r in e.items()))

    def __pow__(self, k: int) -> "GenEtaQuotientSpec":
        return GenEtaQuotientSpec(self.level, {g: k * r for g, r in self.exponents.items()})

    def __mul__(self, other: "GenEtaQuotientSpec") -> "GenEtaQuotientSpec":
        if other.level != self.level:
            raise ValueError("levels differ")
        e = dict(self.exponents)
        for g, r in other.exponents.items():
            e[g] = e.get(g, 0) + r
        return GenEtaQuotientSpec(self.level, e)

    def __hash__(self):
        return hash((self.level, tuple(sorted(self.exponents.items()))))


@dataclass(frozen=True)
class YangReport:
    sum_r: int
    sum_gr: int
    sum_g2r: int
    gamma_N: bool
    gamma1_N: bool


def yang_modularity_check(spec: GenEtaQuotientSpec) -> YangReport:
    s0, s1, s2 = spec.sums
    on_gamma = s0 % 12 == 0 and s1 % 2 == 0
    return YangReport(s0, s1, s2, on_gamma, on_gamma and s2 % (2 * spec.level) == 0)


def _p2(t: Fraction) -> Fraction:
    return bernoulli2(t - math.floor(t))


def gen_eta_leading_exponent(N: int, g: int, gamma: tuple[int, int, int, int]) -> Fraction:
    """Exponent of ``q`` in the first term of ``eta_{N,g}(gamma*tau)``."""
    a, _, c, _ = gamma
    m = math.gcd(c, N)
    return Fraction(m * m, 2 * N) * _p2(Fraction(a * g, m))


def gen_eta_cusp_order(spec: GenEtaQuotientSpec, x: Cusp,
                       gamma: tuple[int, int, int, int] | None = None) -> Fraction:
    """Order at ``x`` in the local parameter of Gamma0(N) (width-scaled)."""
    if gamma is None:
        gamma = cusp_matrix(x)
    a, b, c, d = gamma
    if a * d - b * c != 1 or Cusp(a, c) != x:
        raise ValueError("gamma must lie in SL2(Z) and send infinity to the cusp")
    N = spec.level
    delta = sum(r * gen_eta_leading_exponent(N, g, gamma) for g, r in spec.exponents.items())
    return delta * cusp_width(N, x)


def gen_order_table(spec: GenEtaQuotientSpec) -> dict[Cusp, Fraction]:
    return {x: gen_eta_cusp_order(spec, x) for x in cusp_set(spec.level)}


def parse_exponents(text: str) -> dict[int, int]:
    """Parse ``"1:-4,2:2,5:4"`` into ``{1: -4, 2: 2, 5: 4}``."""
    out: dict[int, int] = {}
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        k, v = part.split(":")
        out[int(k)] = out.get(int(k), 0) + int(v)
    return out
