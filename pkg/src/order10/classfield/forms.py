"""Binary quadratic forms, imaginary quadratic points and their reduction."""

from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath

# residues of d_K mod 40 for which 40k + d_K can be a square
SQUARE_CLASSES_40 = frozenset({0, 1, 4, 9, 16, 20, 24, 25, 36})


@dataclass(frozen=True)
class QuadForm:
    """``a X^2 + b XY + c Y^2``."""

    a: int
    b: int
    c: int

    @property
    def disc(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    @property
    def is_primitive(self) -> bool:
        return math.gcd(math.gcd(self.a, self.b), self.c) == 1

    @property
    def is_reduced(self) -> bool:
        a, b, c = self.a, self.b, self.c
        if not abs(b) <= a <= c:
            return False
        if (abs(b) == a or a == c) and b < 0:
            return False
        return True

    def root(self) -> "ImagQuadPoint":
        """The point ``(-b + sqrt(disc)) / (2a)`` in the upper half plane."""
        return ImagQuadPoint(self.a, self.b, self.c)

    def as_list(self) -> list[int]:
        return [self.a, self.b, self.c]

    def __str__(self) -> str:
        return f"[{self.a},{self.b},{self.c}]"


def _check_disc(d: int) -> None:
    if d >= 0 or d % 4 not in (0, 1):
        raise ValueError(f"{d} is not a negative discriminant (need d < 0, d = 0 or 1 mod 4)")


def reduced_forms(d: int) -> list[QuadForm]:
    """All reduced primitive positive definite forms of discriminant ``d``."""
    _check_disc(d)
    out = []
    a = 1
    while 3 * a * a <= -d:
        for b in range(-a + 1, a + 1):
            num = b * b - d
            if num % (4 * a):
                continue
            f = QuadForm(a, b, num // (4 * a))
            if f.is_reduced and f.is_primitive:
                out.append(f)
        a += 1
    return out


def class_number(d: int) -> int:
    return len(reduced_forms(d))


def is_fundamental(d: int) -> bool:
    """Fundamental discriminant test for ``d < 0``."""
    if d % 4 == 1:
        return _squarefree(-d)
    if d % 4 == 0:
        m = d // 4
        return m % 4 in (2, 3) and _squarefree(-m)
    return False


def _squarefree(n: int) -> bool:
    n = abs(n)
    p = 2
    while p * p <= n:
        if n % (p * p) == 0:
            return False
        p += 1
    return True


@dataclass(frozen=True)
class HilbertCheck:
    ok: bool
    d_K: int
    fundamental: bool
    divisible: bool
    congruence: bool


def hilbert_precondition(a: int, b: int, c: int) -> HilbertCheck:
    """Whether the root of ``aX^2 + bX + c`` is a valid base point.

    The base point needs ``10 | a`` and a fundamental discriminant.
    """
    if math.gcd(math.gcd(a, b), c) != 1:
        raise ValueError(f"({a},{b},{c}) is not primitive")
    d = b * b - 4 * a * c
    if d >= 0:
        raise ValueError("discriminant must be negative")
    fund = is_fundamental(d)
    div = a % 10 == 0
    cong = d % 40 in SQUARE_CLASSES_40
    return HilbertCheck(fund and div, d, fund, div, cong)


def hilbert_base_quadratic(d_K: int) -> tuple[int, int, int]:
    """``(10k, r, 1)`` with ``r^2 = 40k + d_K`` for the smallest ``k >= 1``."""
    _check_disc(d_K)
    if d_K % 40 not in SQUARE_CLASSES_40:
        raise ValueError(f"no square of the form 40k + {d_K}")
    k = 1
    while True:
        n = 40 * k + d_K
        if n >= 0:
            r = math.isqrt(n)
            if r * r == n:
                return (10 * k, r, 1)
        k += 1


@dataclass(frozen=True)
class ImagQuadPoint:
    """Upper-half-plane root of the primitive quadratic ``A X^2 + B X + C``."""

    A: int
    B: int
    C: int

    def __post_init__(self):
        A, B, C = self.A, self.B, self.C
        if B * B - 4 * A * C >= 0:
            raise ValueError("discriminant must be negative")
        g = math.gcd(math.gcd(A, B), C)
        if A < 0:
            g = -g
        object.__setattr__(self, "A", A // g)
        object.__setattr__(self, "B", B // g)
        object.__setattr__(self, "C", C // g)

    @property
    def disc(self) -> int:
        return self.B * self.B - 4 * self.A * self.C

    def value(self) -> mpmath.mpc:
        """The root at the current mpmath precision."""
        return mpmath.mpc(-self.B, mpmath.sqrt(-self.disc)) / (2 * self.A)

    def transform(self, m: tuple[int, int, int, int]) -> "ImagQuadPoint":
        """The point ``(p tau + q) / (r tau + s)`` for ``m = (p, q, r, s)`` in SL2(Z)."""
        p, q, r, s = m
        if p * s - q * r != 1:
            raise ValueError("matrix must have determinant 1")
        A, B, C = self.A, self.B, self.C
        return ImagQuadPoint(A * s * s - B * r * s + C * r * r,
                             -2 * A * q * s + B * (p * s + q * r) - 2 * C * p * r,
                             A * q * q - B * p * q + C * p * p)

    def shift_invert(self, k: int) -> "ImagQuadPoint":
        """``-1 / (tau - k)``."""
        return self.transform((1, -k, 0, 1)).transform((0, -1, 1, 0))

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.A, self.B, self.C)

    def __str__(self) -> str:
        return f"{self.A}X^2{self.B:+d}X{self.C:+d}"
