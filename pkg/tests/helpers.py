"""Independent oracle helpers shared by the tests.

Everything here is deliberately written from scratch on plain lists so the
checks do not reuse the code paths they are meant to validate.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

from riordan import RiordanElement, TruncatedSeries


def frac_rows(rows):
    """Ragged integer rows -> full square tuple-of-tuples of Fractions."""
    size = len(rows)
    return tuple(
        tuple(Fraction(c) for c in row) + (Fraction(0),) * (size - len(row))
        for row in rows
    )


def poly_mul(a, b, degree):
    """Naive convolution of coefficient lists, truncated to ``degree``."""
    out = [Fraction(0)] * (degree + 1)
    for i, ai in enumerate(a[: degree + 1]):
        if ai:
            for j, bj in enumerate(b[: degree + 1 - i]):
                out[i + j] += Fraction(ai) * Fraction(bj)
    return out


def gf_entry(g, f, n, k):
    """[x^n] g * f^k computed by repeated naive convolution."""
    acc = [Fraction(c) for c in g[: n + 1]] + [Fraction(0)] * max(0, n + 1 - len(g))
    for _ in range(k):
        acc = poly_mul(acc, f, n)
    return acc[n]


def mat_mul_rows(a, b):
    """Naive product of row-major Fraction matrices (lists of lists)."""
    rows, inner, cols = len(a), len(b), len(b[0])
    out = [[Fraction(0)] * cols for _ in range(rows)]
    for i in range(rows):
        for k in range(inner):
            if a[i][k]:
                for j in range(cols):
                    out[i][j] += a[i][k] * b[k][j]
    return out


def lower_inverse_rows(m):
    """Inverse of a lower-triangular Fraction matrix by row elimination."""
    n = len(m)
    out = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    work = [list(row) for row in m]
    for i in range(n):
        pivot = work[i][i]
        for j in range(n):
            work[i][j] /= pivot
            out[i][j] /= pivot
        for r in range(i + 1, n):
            factor = work[r][i]
            if factor:
                for j in range(n):
                    work[r][j] -= factor * work[i][j]
                    out[r][j] -= factor * out[i][j]
    return out


def catalan_number(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


def general_binomial(alpha: Fraction, n: int) -> Fraction:
    """binomial(alpha, n) for rational alpha, by the product formula."""
    out = Fraction(1)
    for i in range(n):
        out *= (alpha - i) / (i + 1)
    return out


def binomial_series(alpha: Fraction, scale: int, order: int) -> list[Fraction]:
    """Coefficients of (1 + scale*x)^alpha."""
    return [general_binomial(alpha, n) * scale**n for n in range(order + 1)]


def random_series(rng: random.Random, order: int, low=-4, high=4) -> TruncatedSeries:
    return TruncatedSeries([rng.randint(low, high) for _ in range(order + 1)])


def random_normalized_element(rng: random.Random, order: int) -> RiordanElement:
    """Polynomial (g, f) with g(0) = f'(0) = 1 and coefficients in [-3, 3]."""
    g = [1] + [rng.randint(-3, 3) for _ in range(rng.randint(1, 4))]
    f = [0, 1] + [rng.randint(-3, 3) for _ in range(rng.randint(1, 4))]
    return RiordanElement(
        TruncatedSeries(g, order), TruncatedSeries(f, order)
    )


def element_battery(count: int, order: int, seed: int) -> list[RiordanElement]:
    rng = random.Random(seed)
    return [random_normalized_element(rng, order) for _ in range(count)]
