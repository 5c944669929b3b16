"""Exact truncated formal power series over rational coefficients.

A :class:`TruncatedSeries` holds coefficients c0..cN of a power series known
modulo x^(N+1); N is the *order* of the truncation.  All arithmetic is exact
(``fractions.Fraction``), and no operation ever fabricates a coefficient
beyond the known order: binary operations return results at the smaller
operand order, and reading past the order raises
:class:`~riordan.errors.PrecisionError` rather than returning zero.

Values are immutable; every operation returns a new series.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import (
    CompositionError,
    NonUnitError,
    PrecisionError,
    ReversionError,
    SqrtError,
)

Rational = Union[Fraction, int]

_ZERO = Fraction(0)
_ONE = Fraction(1)


# ---------------------------------------------------------------------------
# list-level helpers (coefficients as lists of Fraction, shared common order)
# ---------------------------------------------------------------------------

def _mul_lists(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    n = min(len(a), len(b))
    out = [_ZERO] * n
    for i in range(n):
        ai = a[i]
        if ai:
            for j in range(n - i):
                bj = b[j]
                if bj:
                    out[i + j] += ai * bj
    return out


def _div_lists(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    # requires b[0] != 0 (checked by callers)
    n = min(len(a), len(b))
    b0 = b[0]
    q = [_ZERO] * n
    for i in range(n):
        s = a[i]
        for k in range(i):
            qk = q[k]
            if qk and b[i - k]:
                s -= qk * b[i - k]
        q[i] = s / b0
    return q


def _compose_lists(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    # requires b[0] == 0 (checked by callers); Horner from the top nonzero
    # coefficient of a, so short polynomials compose cheaply
    n = min(len(a), len(b))
    top = -1
    for i in range(n - 1, -1, -1):
        if a[i]:
            top = i
            break
    res = [_ZERO] * n
    for i in range(top, -1, -1):
        res = _mul_lists(res, b)
        res[0] += a[i]
    return res


def _as_fractions(coeffs: Iterable[Rational]) -> list[Fraction]:
    return [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]


class TruncatedSeries:
    """Power series truncated at a fixed order, with exact rational entries."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Rational], order: int | None = None):
        """Build a series from its coefficients c0, c1, ...

        With ``order`` given, the coefficient list is padded with zeros (the
        caller asserts the remaining terms vanish, as for a polynomial) or
        truncated down to ``order + 1`` entries.
        """
        values = _as_fractions(coeffs)
        if order is not None:
            if order < 0:
                raise ValueError("order must be non-negative")
            if len(values) <= order:
                values += [_ZERO] * (order + 1 - len(values))
            else:
                values = values[: order + 1]
        if not values:
            raise ValueError("a series needs at least the constant coefficient")
        self._coeffs = tuple(values)

    # -- construction helpers ------------------------------------------------

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls([0], order)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls([1], order)

    @classmethod
    def x(cls, order: int) -> "TruncatedSeries":
        return cls([0, 1], order)

    @classmethod
    def constant(cls, value: Rational, order: int) -> "TruncatedSeries":
        return cls([value], order)

    # -- basic access ----------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def constant_term(self) -> Fraction:
        return self._coeffs[0]

    def coefficient(self, n: int) -> Fraction:
        """Coefficient of x^n; raises beyond the truncation order."""
        if n < 0:
            raise ValueError("coefficient index must be non-negative")
        if n > self.order:
            raise PrecisionError(
                f"coefficient {n} requested but series is only known to order {self.order}"
            )
        return self._coeffs[n]

    def __getitem__(self, n: int) -> Fraction:
        return self.coefficient(n)

    def is_zero(self) -> bool:
        return not any(self._coeffs)

    def valuation(self) -> int | None:
        """Index of the first nonzero coefficient, or None if all are zero."""
        for i, c in enumerate(self._coeffs):
            if c:
                return i
        return None

    def truncate(self, order: int) -> "TruncatedSeries":
        """Drop precision down to the given order (never pads)."""
        if order > self.order:
            raise PrecisionError(
                f"cannot extend a series of order {self.order} to order {order}"
            )
        if order == self.order:
            return self
        return TruncatedSeries(self._coeffs[: order + 1])

    # -- ring operations -------------------------------------------------------

    def _coerce(self, other: "TruncatedSeries | Rational") -> "TruncatedSeries | None":
        if isinstance(other, TruncatedSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries.constant(other, self.order)
        return None

    def __add__(self, other: "TruncatedSeries | Rational") -> "TruncatedSeries":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        n = min(self.order, rhs.order)
        return TruncatedSeries(
            [self._coeffs[i] + rhs._coeffs[i] for i in range(n + 1)]
        )

    __radd__ = __add__

    def __sub__(self, other: "TruncatedSeries | Rational") -> "TruncatedSeries":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        n = min(self.order, rhs.order)
        return TruncatedSeries(
            [self._coeffs[i] - rhs._coeffs[i] for i in range(n + 1)]
        )

    def __rsub__(self, other: Rational) -> "TruncatedSeries":
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs - self

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries([-c for c in self._coeffs])

    def __mul__(self, other: "TruncatedSeries | Rational") -> "TruncatedSeries":
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries([c * other for c in self._coeffs])
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return TruncatedSeries(_mul_lists(self._coeffs, other._coeffs))

    __rmul__ = __mul__

    def __truediv__(self, other: "TruncatedSeries | Rational") -> "TruncatedSeries":
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division by zero scalar")
            return TruncatedSeries([c / other for c in self._coeffs])
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        if not other._coeffs[0]:
            raise NonUnitError(
                "division requires a divisor with nonzero constant term"
            )
        return TruncatedSeries(_div_lists(self._coeffs, other._coeffs))

    def __rtruediv__(self, other: Rational) -> "TruncatedSeries":
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs / self

    def __pow__(self, exponent: int) -> "TruncatedSeries":
        """Integer power; negative exponents require a unit constant term."""
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            if not self._coeffs[0]:
                raise NonUnitError(
                    "negative power requires a series with nonzero constant term"
                )
            return (TruncatedSeries.one(self.order) / self) ** (-exponent)
        result = TruncatedSeries.one(self.order)
        base = self
        k = exponent
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- shifts ---------------------------------------------------------------

    def shift_up(self, k: int = 1) -> "TruncatedSeries":
        """Multiply by x^k; all knowledge is preserved, order grows by k."""
        if k < 0:
            raise ValueError("shift_up needs k >= 0")
        return TruncatedSeries((_ZERO,) * k + self._coeffs)

    def shift_down(self, k: int = 1) -> "TruncatedSeries":
        """Divide by x^k; the first k coefficients must vanish."""
        if k < 0:
            raise ValueError("shift_down needs k >= 0")
        if k == 0:
            return self
        if k > self.order:
            raise PrecisionError(
                f"cannot shift an order-{self.order} series down by {k}"
            )
        for i in range(k):
            if self._coeffs[i]:
                raise NonUnitError(
                    f"cannot divide by x^{k}: coefficient {i} is nonzero"
                )
        return TruncatedSeries(self._coeffs[k:])

    # -- composition, reversion, square root ----------------------------------

    def compose(self, inner: "TruncatedSeries") -> "TruncatedSeries":
        """Substitute ``inner`` (which must have zero constant term) for x."""
        if inner._coeffs[0]:
            raise CompositionError(
                "composition requires an inner series with zero constant term"
            )
        return TruncatedSeries(_compose_lists(self._coeffs, inner._coeffs))

    def revert(self) -> "TruncatedSeries":
        """Compositional inverse: the series r with self(r(x)) = x.

        Solved order by order: the coefficient of x^n in self(r) is linear in
        r_n once r_1..r_(n-1) are fixed, so each step reads off one
        coefficient of the partial composition.
        """
        if self._coeffs[0]:
            raise ReversionError(
                "reversion requires a series with zero constant term"
            )
        if self.order < 1:
            raise ReversionError(
                "reversion needs the linear coefficient; order 0 is not enough"
            )
        f1 = self._coeffs[1]
        if not f1:
            raise ReversionError(
                "reversion requires a nonzero linear coefficient"
            )
        out = [_ZERO, _ONE / f1]
        for n in range(2, self.order + 1):
            partial = out + [_ZERO]
            h = _compose_lists(self._coeffs[: n + 1], partial)
            out.append(-h[n] / f1)
        return TruncatedSeries(out)

    def sqrt(self) -> "TruncatedSeries":
        """Square root with positive constant term.

        The constant term must be a nonzero square of a rational; the rest
        follows order by order from (sum b_i x^i)^2 = self.
        """
        b0 = _rational_sqrt(self._coeffs[0])
        if b0 is None:
            raise SqrtError(
                f"constant term {self._coeffs[0]} has no nonzero rational square root"
            )
        out = [b0]
        for n in range(1, self.order + 1):
            acc = _ZERO
            for i in range(1, n):
                if out[i] and out[n - i]:
                    acc += out[i] * out[n - i]
            out.append((self._coeffs[n] - acc) / (2 * b0))
        return TruncatedSeries(out)

    # -- comparison and display -------------------------------------------------

    def __eq__(self, other: object) -> bool:
        """Equality up to the smaller of the two orders."""
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return self._coeffs[: n + 1] == other._coeffs[: n + 1]

    __hash__ = None  # equality ignores surplus precision, so no stable hash

    def __repr__(self) -> str:
        shown = ", ".join(str(c) for c in self._coeffs[:8])
        if self.order >= 8:
            shown += ", ..."
        return f"TruncatedSeries([{shown}], order={self.order})"

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self._coeffs):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
                continue
            mag = abs(c)
            body = "x" if i == 1 else f"x^{i}"
            if mag != 1:
                body = f"{mag}*{body}"
            terms.append(f"- {body}" if c < 0 else f"+ {body}" if terms else body)
        if not terms:
            terms = ["0"]
        return " ".join(terms) + f" + O(x^{self.order + 1})"


def _rational_sqrt(value: Fraction) -> Fraction | None:
    """Positive rational square root of ``value``, or None if there is none."""
    if value <= 0:
        return None
    num, den = value.numerator, value.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn != num or rd * rd != den:
        return None
    return Fraction(rn, rd)


def catalan_gf(order: int) -> TruncatedSeries:
    """Generating function of the Catalan numbers, (1 - sqrt(1-4x)) / (2x).

    Satisfies c = 1 + x*c^2 exactly up to the truncation order.
    """
    if order < 0:
        raise ValueError("order must be non-negative")
    root = TruncatedSeries([1, -4], order + 1).sqrt()
    return (1 - root).shift_down(1) / 2
