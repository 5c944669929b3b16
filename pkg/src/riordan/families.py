"""Named element families and their closed-form entry formulas.

Covers the binomial powers B^r = (1/(1-rx), x/(1-rx)), the Catalan array
(c, xc), the element behind the binomial-coefficient triangle A085478, the
one-parameter moment arrays M(r) = (c(rx)^2, x c(rx)^2) with their orthogonal
polynomials, and the iterated second-production process.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .arrays import RiordanElement, TriMatrix
from .errors import PrecisionError, UnknownFamilyError
from .production import produced_matrix_closed_form
from .series import Rational, TruncatedSeries, catalan_gf

FAMILY_NAMES = ("pascal", "binomial:r", "catalan", "moment:r", "a085478")


def binomial_power(r: Rational, order: int) -> RiordanElement:
    """The r-th power of the binomial matrix: (1/(1-rx), x/(1-rx))."""
    g = 1 / TruncatedSeries([1, -Fraction(r)], order)
    return RiordanElement(g, g.shift_up(1).truncate(order))


def pascal(order: int) -> RiordanElement:
    return binomial_power(1, order)


def catalan_array(order: int) -> RiordanElement:
    """(c, xc) with c the Catalan generating function; triangle A033184."""
    c = catalan_gf(order)
    return RiordanElement(c, c.shift_up(1).truncate(order))


def a085478_element(order: int) -> RiordanElement:
    """(1/(1-x), x/(1-x)^2), whose matrix is the triangle A085478."""
    base = TruncatedSeries([1, -1], order)
    g = 1 / base
    f = (1 / base**2).shift_up(1).truncate(order)
    return RiordanElement(g, f)


# ---------------------------------------------------------------------------
# the moment-array family M(r)
# ---------------------------------------------------------------------------

def moment_element(r: Rational, order: int) -> RiordanElement:
    """(c(rx)^2, x c(rx)^2), the element generated by the second production
    matrix of the binomial power B^r."""
    crx = catalan_gf(order).compose(TruncatedSeries([0, Fraction(r)], order))
    g = crx * crx
    return RiordanElement(g, g.shift_up(1).truncate(order))


def moment_entry(r: Rational, n: int, k: int) -> Fraction:
    """Closed-form entry of M(r): 2(k+1)/(n+k+2) * C(2n+1, n-k) * r^(n-k)."""
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    return (
        Fraction(2 * (k + 1), n + k + 2)
        * math.comb(2 * n + 1, n - k)
        * Fraction(r) ** (n - k)
    )


def moment_array(r: Rational, size: int) -> TriMatrix:
    """The size x size block of M(r).

    Computed from the series pair and cross-checked, entry for entry,
    against the closed-form formula; any disagreement is a bug.
    """
    if size < 1:
        raise ValueError("size must be positive")
    series_route = moment_element(r, size - 1).matrix(size)
    for n in range(size):
        for k in range(n + 1):
            expected = moment_entry(r, n, k)
            if series_route[n, k] != expected:
                raise RuntimeError(
                    f"moment array entry ({n}, {k}) disagrees with its closed "
                    f"form: {series_route[n, k]} != {expected}"
                )
    return series_route


@dataclass(frozen=True)
class PolynomialRow:
    """Coefficients of one orthogonal polynomial, ascending in x; the row-n
    polynomial is monic of degree exactly n."""

    coeffs: tuple[Fraction, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1


def orthogonal_polys(r: Rational, count: int) -> list[PolynomialRow]:
    """Rows of M(r)^-1 = (1/(1+rx)^2, x/(1+rx)^2).

    These are the coefficient rows of the polynomials satisfying
    P_n = (x - 2r) P_(n-1) - r^2 P_(n-2) with P_0 = 1 and P_1 = x - 2r.
    """
    if count < 1:
        raise ValueError("count must be positive")
    order = count - 1
    base = TruncatedSeries([1, Fraction(r)], order) ** 2
    g = 1 / base
    if count == 1:
        return [PolynomialRow((g.constant_term,))]
    f = (1 / base).shift_up(1).truncate(order)
    inverse_matrix = RiordanElement(g, f).matrix(count)
    return [
        PolynomialRow(tuple(inverse_matrix.row(n)[: n + 1])) for n in range(count)
    ]


# ---------------------------------------------------------------------------
# closed-form entries of the produced matrices
# ---------------------------------------------------------------------------

def a085478_second_entry(n: int, k: int) -> Fraction:
    """Entry (n, k) of the matrix generated by the second production matrix
    of the A085478 element, as the double-binomial sum
    sum_i (2i+2)/(3n+2-i) * C(3n+2-i, n-i) * C(i+k, 2k)."""
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    total = Fraction(0)
    for i in range(n + 1):
        total += (
            Fraction(2 * i + 2, 3 * n + 2 - i)
            * math.comb(3 * n + 2 - i, n - i)
            * math.comb(i + k, 2 * k)
        )
    return total


def a092276_entry(n: int, k: int) -> Fraction:
    """Entry (n, k) of the triangle A092276: 2(k+1)/(3n-k+2) * C(3n-k+2, n-k);
    the matrix generated by the Catalan array's second production matrix."""
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    return Fraction(2 * (k + 1), 3 * n - k + 2) * math.comb(3 * n - k + 2, n - k)


# ---------------------------------------------------------------------------
# iterated process
# ---------------------------------------------------------------------------

def iterate_second_production(
    e: RiordanElement, steps: int
) -> list[RiordanElement]:
    """Repeatedly replace the element by the one its second production matrix
    generates; returns [e0, e1, ..., e_steps].

    Uses the closed form, so each step costs one order of precision rather
    than a quadratic amount.
    """
    if steps < 0:
        raise ValueError("steps must be non-negative")
    chain = [e]
    for step in range(1, steps + 1):
        try:
            chain.append(produced_matrix_closed_form(chain[-1], 2))
        except PrecisionError as err:
            raise PrecisionError(
                f"precision exhausted at step {step} of {steps}: {err}"
            ) from err
    return chain


# ---------------------------------------------------------------------------
# name registry for the CLI
# ---------------------------------------------------------------------------

def family_element(spec: str, order: int) -> RiordanElement:
    """Resolve a family identifier like ``pascal`` or ``moment:1/2``."""
    name, _, param = spec.partition(":")
    if name in ("pascal", "catalan", "a085478"):
        if param:
            raise UnknownFamilyError(f"family '{name}' takes no parameter")
        if name == "pascal":
            return pascal(order)
        if name == "catalan":
            return catalan_array(order)
        return a085478_element(order)
    if name in ("binomial", "moment"):
        if not param:
            raise UnknownFamilyError(
                f"family '{name}' needs a rational parameter, e.g. {name}:2"
            )
        try:
            r = Fraction(param)
        except (ValueError, ZeroDivisionError) as err:
            raise UnknownFamilyError(
                f"bad parameter {param!r} for family '{name}': {err}"
            ) from err
        if name == "binomial":
            return binomial_power(r, order)
        return moment_element(r, order)
    raise UnknownFamilyError(
        f"unknown family {spec!r}; valid names: {', '.join(FAMILY_NAMES)}"
    )
