"""Galois action of the form class group through matrices mod 10."""

from __future__ import annotations

import math
from dataclasses import dataclass

from ..modforms import ext_gcd
from .forms import SQUARE_CLASSES_40, ImagQuadPoint, QuadForm, is_fundamental, reduced_forms

Matrix = tuple[int, int, int, int]
LEVEL = 10


def _local(x: QuadForm, d_K: int, p: int) -> Matrix:
    a, b, c = x.a, x.b, x.c
    if d_K % 4 == 0:
        h = b // 2
        if a % p:
            return (a, h, 0, 1)
        if c % p:
            return (-h, -c, 1, 0)
        return (-h - a, -h - c, 1, -1)
    h, k = (b - 1) // 2, (b + 1) // 2
    if a % p:
        return (a, h, 0, 1)
    if c % p:
        return (-k, -c, 1, 0)
    return (-k - a, (1 - b) // 2 - c, 1, -1)


def _crt(r2: int, r5: int) -> int:
    return (5 * (r2 % 2) + 6 * (r5 % 5)) % 10


def _mat_mul(m: Matrix, n: Matrix, mod: int | None = None) -> Matrix:
    a, b, c, d = m
    e, f, g, h = n
    out = (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)
    return tuple(v % mod for v in out) if mod else out


def lift_sl2(v: Matrix, N: int = LEVEL) -> Matrix:
    """A matrix in SL2(Z) congruent to ``v`` modulo ``N``."""
    a, b, c, d = (x % N for x in v)
    if (a * d - b * c) % N != 1 % N:
        raise ValueError("matrix is not in SL2 mod N")
    c, d = next((c + s * N, d + t * N) for s in range(N + 1) for t in range(N)
                if math.gcd(c + s * N, d + t * N) == 1)
    _, x, y = ext_gcd(d, c)          # x d + y c = 1
    a0, b0 = x, -y                   # a0 d - b0 c = 1
    for k in range(N):
        if (a0 + k * c - a) % N == 0 and (b0 + k * d - b) % N == 0:
            return (a0 + k * c, b0 + k * d, c, d)
    raise AssertionError("no lift found")


@dataclass(frozen=True)
class ShimuraData:
    form: QuadForm
    u_x: Matrix
    det: int
    v_x: Matrix
    V_x: Matrix
    theta: ImagQuadPoint
    k_x: int
    point: ImagQuadPoint


def choose_shift(theta: ImagQuadPoint) -> int:
    """Smallest ``k >= 0`` with ``10`` dividing the leading coefficient of ``-1/(theta - k)``."""
    A, B, C = theta.A, theta.B, theta.C
    for k in range(LEVEL):
        if (A * k * k + B * k + C) % LEVEL == 0:
            return k
    raise ValueError(f"no shift works for {theta}; discriminant not a square mod 40")


def shimura_matrix(x: QuadForm, d_K: int, lift: Matrix | None = None) -> ShimuraData:
    """Matrix data attached to the class of ``x``.

    ``lift`` overrides the SL2(Z) lift of ``v_x``; it must be congruent to
    ``v_x`` modulo 10.
    """
    if x.disc != d_K:
        raise ValueError(f"form {x} has discriminant {x.disc}, not {d_K}")
    m2, m5 = _local(x, d_K, 2), _local(x, d_K, 5)
    u = tuple(_crt(p, q) for p, q in zip(m2, m5))
    det = (u[0] * u[3] - u[1] * u[2]) % LEVEL
    if math.gcd(det, LEVEL) != 1:
        raise AssertionError(f"u_x for {x} is not invertible mod 10")
    inv = pow(det, -1, LEVEL)
    v = _mat_mul((1, 0, 0, inv), u, LEVEL)
    V = lift if lift is not None else lift_sl2(v)
    if any((p - q) % LEVEL for p, q in zip(V, v)) or V[0] * V[3] - V[1] * V[2] != 1:
        raise ValueError("lift must lie in SL2(Z) and reduce to v_x mod 10")
    theta = x.root().transform(V)
    k = choose_shift(theta)
    return ShimuraData(x, u, det, v, V, theta, k, theta.shift_invert(k))


def conjugate_points(d_K: int, alternative_lift: bool = False) -> list[ShimuraData]:
    """One Shimura datum per reduced form of discriminant ``d_K``.

    ``alternative_lift`` left-multiplies every lift by ``[1, 0; 10, 1]``,
    which leaves the classes mod 10 unchanged.
    """
    if not is_fundamental(d_K):
        raise ValueError(f"{d_K} is not a fundamental discriminant")
    if d_K % 40 not in SQUARE_CLASSES_40:
        raise ValueError(f"{d_K} mod 40 is not a square class; no base point of level 10")
    out = []
    for x in reduced_forms(d_K):
        base = shimura_matrix(x, d_K)
        if alternative_lift:
            base = shimura_matrix(x, d_K, _mat_mul((1, 0, LEVEL, 1), base.V_x))
        out.append(base)
    return out
