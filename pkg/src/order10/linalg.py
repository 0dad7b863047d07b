"""Exact integer linear algebra: fraction-free elimination and nullspaces."""

from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce
from typing import Sequence


def primitive(vec: Sequence[int]) -> list[int]:
    """Divide out the content and make the first nonzero entry positive."""
    g = reduce(math.gcd, vec, 0)
    if g == 0:
        return list(vec)
    out = [x // g for x in vec]
    for x in out:
        if x:
            if x < 0:
                out = [-y for y in out]
            break
    return out


def bareiss_echelon(rows: Sequence[Sequence[int]]) -> tuple[list[list[int]], list[int]]:
    """Fraction-free row echelon form.

    Returns the nonzero echelon rows and their pivot columns.  Every division
    performed is exact (Bareiss), so entries stay integral and bounded by
    minors of the input.
    """
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    prev = 1
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        pr = m[r]
        for i in range(r + 1, len(m)):
            row = m[i]
            f = row[c]
            if f:
                m[i] = [(p * row[j] - f * pr[j]) // prev if j > c else 0
                        for j in range(ncols)]
            elif p != prev:
                m[i] = [(p * x) // prev for x in row]
        # rows above the pivot row are untouched; the next divisor is this pivot
        prev = p
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def nullspace(rows: Sequence[Sequence[int]], ncols: int | None = None) -> list[list[int]]:
    """Basis of the rational right nullspace as primitive integer vectors."""
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    echelon, pivots = bareiss_echelon(rows)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        x: list[Fraction] = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, pc in zip(reversed(echelon), reversed(pivots)):
            s = sum((row[j] * x[j] for j in range(pc + 1, ncols) if x[j]), Fraction(0))
            x[pc] = -s / row[pc]
        den = reduce(lambda a, b: a * b // math.gcd(a, b), (v.denominator for v in x), 1)
        basis.append(primitive([int(v * den) for v in x]))
    return basis


# ---------------------------------------------------------------------------
# multimodular route


def _rank_profile_mod(rows: Sequence[Sequence[int]], p: int) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form modulo a prime."""
    m = [[x % p for x in r] for r in rows]
    ncols = len(m[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], -1, p)
        m[r] = [(x * inv) % p for x in m[r]]
        pr = m[r]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [(x - f * y) % p for x, y in zip(m[i], pr)]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def _rational_reconstruct(a: int, m: int) -> Fraction | None:
    """Wang's rational reconstruction of ``a mod m``."""
    bound = math.isqrt(m // 2)
    r0, r1 = m, a % m
    s0, s1 = 0, 1
    while r1 > bound:
        k = r0 // r1
        r0, r1 = r1, r0 - k * r1
        s0, s1 = s1, s0 - k * s1
    if s1 == 0 or abs(s1) > bound or math.gcd(r1, abs(s1)) != 1:
        return None
    return Fraction(r1, s1)


_PRIMES = [2305843009213693951, 4611686018427387847, 9223372036854775783,
           1152921504606846883, 576460752303423433, 288230376151711717,
           144115188075855859, 72057594037927931, 36028797018963913,
           18014398509481951, 9007199254740881, 4503599627370449]


def nullspace_multimodular(rows: Sequence[Sequence[int]], ncols: int | None = None) -> list[list[int]]:
    """Nullspace of an integer matrix via elimination modulo large primes.

    The candidate basis is rebuilt by CRT and rational reconstruction, then
    certified exactly: every vector must satisfy ``rows @ v == 0`` over the
    integers, and the modular rank bounds the true nullity from above.
    """
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    modulus = 1
    residues: list[list[int]] | None = None
    pivots_ref: list[int] | None = None
    for p in _PRIMES:
        red, pivots = _rank_profile_mod(rows, p)
        if pivots_ref is None or len(pivots) > len(pivots_ref):
            pivots_ref, residues, modulus = pivots, None, 1
        elif pivots != pivots_ref:
            continue
        free = [c for c in range(ncols) if c not in set(pivots)]
        vecs = []
        for f in free:
            v = [0] * ncols
            v[f] = 1
            for row, pc in zip(red, pivots):
                v[pc] = (-row[f]) % p
            vecs.append(v)
        if residues is None:
            residues, modulus = vecs, p
        else:
            merged = []
            for old, new in zip(residues, vecs):
                inv = pow(modulus, -1, p)
                merged.append([o + modulus * (((n - o) * inv) % p) for o, n in zip(old, new)])
            residues = merged
            modulus *= p
        basis = []
        for v in residues:
            fr = [_rational_reconstruct(x, modulus) for x in v]
            if any(x is None for x in fr):
                break
            den = reduce(lambda a, b: a * b // math.gcd(a, b), (x.denominator for x in fr), 1)
            basis.append(primitive([int(x * den) for x in fr]))
        else:
            if all(all(sum(r[j] * v[j] for j in range(ncols) if v[j]) == 0 for r in rows)
                   for v in basis):
                return basis
    raise ArithmeticError("multimodular nullspace did not stabilise; too few primes")
