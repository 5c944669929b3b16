"""Riordan group elements and their exact matrix representations.

An element is a pair (g, f) of truncated series with g(0) != 0, f(0) = 0 and
f'(0) != 0.  Its matrix has entry (n, k) equal to the coefficient of x^n in
g * f^k, which makes the matrix lower triangular and invertible.  Group
multiplication is (g, f) * (u, v) = (g * u(f), v(f)); the inverse element is
(1 / g(rev f), rev f) with rev f the compositional inverse of f.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    InvalidElementError,
    PrecisionError,
    ShapeError,
    SingularMatrixError,
)
from .series import TruncatedSeries

Rows = tuple[tuple[Fraction, ...], ...]

_ZERO = Fraction(0)
_ONE = Fraction(1)


# ---------------------------------------------------------------------------
# entry formatting shared by TriMatrix, ProductionMatrix and the CLI
# ---------------------------------------------------------------------------

def render_rows(rows: Sequence[Sequence[Fraction]]) -> str:
    """Aligned text table.

    Integer-valued matrices print without denominators; as soon as one entry
    is a proper fraction, every entry prints as num/den so the format never
    mixes within one matrix.
    """
    integral = all(c.denominator == 1 for row in rows for c in row)
    if integral:
        cells = [[str(c.numerator) for c in row] for row in rows]
    else:
        cells = [[f"{c.numerator}/{c.denominator}" for c in row] for row in rows]
    ncols = max(len(row) for row in cells)
    widths = [
        max(len(row[j]) for row in cells if j < len(row)) for j in range(ncols)
    ]
    lines = [
        "  ".join(cell.ljust(widths[j]) for j, cell in enumerate(row)).rstrip()
        for row in cells
    ]
    return "\n".join(lines)


def rows_to_strings(rows: Sequence[Sequence[Fraction]]) -> list[list[str]]:
    """Entries as exact strings ("7" or "7/2") for JSON output."""
    return [[str(c) for c in row] for row in rows]


def _freeze_rows(rows: Iterable[Iterable[Fraction]]) -> Rows:
    return tuple(tuple(c if isinstance(c, Fraction) else Fraction(c) for c in row) for row in rows)


def mat_mul(a: Sequence[Sequence[Fraction]], b: Sequence[Sequence[Fraction]]) -> Rows:
    """Plain dense product of two row-major rational matrices."""
    if not a or len(a[0]) != len(b):
        raise ShapeError("inner dimensions do not match")
    cols = len(b[0])
    out = []
    for row in a:
        acc = [_ZERO] * cols
        for k, aik in enumerate(row):
            if aik:
                brow = b[k]
                for j in range(cols):
                    if brow[j]:
                        acc[j] += aik * brow[j]
        out.append(tuple(acc))
    return tuple(out)


class TriMatrix:
    """Dense square lower-triangular matrix with exact rational entries."""

    __slots__ = ("_rows",)

    def __init__(self, rows: Iterable[Iterable[Fraction]]):
        frozen = _freeze_rows(rows)
        size = len(frozen)
        if size == 0:
            raise ShapeError("matrix must have at least one row")
        for i, row in enumerate(frozen):
            if len(row) != size:
                raise ShapeError(f"row {i} has {len(row)} entries, expected {size}")
            for j in range(i + 1, size):
                if row[j]:
                    raise ShapeError(
                        f"entry ({i}, {j}) above the diagonal is {row[j]}, not zero"
                    )
        self._rows = frozen

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Fraction | int]]) -> "TriMatrix":
        """Build from ragged lower rows (row i may list only entries 0..i)."""
        size = len(rows)
        full = []
        for i, row in enumerate(rows):
            if len(row) > size:
                raise ShapeError(f"row {i} is longer than the matrix size {size}")
            padded = [Fraction(c) for c in row] + [_ZERO] * (size - len(row))
            full.append(padded)
        return cls(full)

    @property
    def size(self) -> int:
        return len(self._rows)

    @property
    def rows(self) -> Rows:
        return self._rows

    def __getitem__(self, index: tuple[int, int]) -> Fraction:
        n, k = index
        return self._rows[n][k]

    def row(self, n: int) -> tuple[Fraction, ...]:
        return self._rows[n]

    def column(self, k: int) -> tuple[Fraction, ...]:
        return tuple(row[k] for row in self._rows)

    def diagonal(self) -> tuple[Fraction, ...]:
        return tuple(self._rows[i][i] for i in range(self.size))

    def leading(self, size: int) -> "TriMatrix":
        if size > self.size:
            raise ShapeError(f"cannot take a {size}x{size} block of a {self.size}x{self.size} matrix")
        return TriMatrix(row[:size] for row in self._rows[:size])

    def block(self, row0: int, col0: int, nrows: int, ncols: int) -> Rows:
        """Raw rectangular block (not necessarily triangular)."""
        if row0 + nrows > self.size or col0 + ncols > self.size:
            raise ShapeError("block reaches outside the matrix")
        return tuple(
            self._rows[i][col0 : col0 + ncols] for i in range(row0, row0 + nrows)
        )

    def mul(self, other: "TriMatrix") -> "TriMatrix":
        if self.size != other.size:
            raise ShapeError("matrix sizes differ")
        return TriMatrix(mat_mul(self._rows, other._rows))

    __matmul__ = mul

    def inverse(self) -> "TriMatrix":
        """Exact inverse by forward substitution, column by column."""
        n = self.size
        for i in range(n):
            if not self._rows[i][i]:
                raise SingularMatrixError(f"zero diagonal entry at ({i}, {i})")
        inv = [[_ZERO] * n for _ in range(n)]
        for j in range(n):
            inv[j][j] = _ONE / self._rows[j][j]
            for i in range(j + 1, n):
                acc = _ZERO
                for k in range(j, i):
                    if self._rows[i][k] and inv[k][j]:
                        acc += self._rows[i][k] * inv[k][j]
                inv[i][j] = -acc / self._rows[i][i]
        return TriMatrix(inv)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for row in self._rows for c in row)

    def lower_rows(self) -> list[list[Fraction]]:
        """Ragged rows of the lower triangle (row n has n+1 entries)."""
        return [list(row[: i + 1]) for i, row in enumerate(self._rows)]

    def to_text(self) -> str:
        return render_rows(self._rows)

    def to_json_entries(self) -> list[list[str]]:
        return rows_to_strings(self._rows)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TriMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        return f"TriMatrix(size={self.size})"


class RiordanElement:
    """A validated pair (g, f) representing a Riordan group element."""

    __slots__ = ("_g", "_f", "_frev")

    def __init__(self, g: TruncatedSeries, f: TruncatedSeries):
        if g.order != f.order:
            raise PrecisionError(
                f"g and f must share a truncation order (got {g.order} and "
                f"{f.order}); truncate explicitly"
            )
        if not g.constant_term:
            raise InvalidElementError("g must have nonzero constant term")
        if f.constant_term:
            raise InvalidElementError("f must have zero constant term")
        if f.order < 1 or not f.coefficient(1):
            raise InvalidElementError("f must have nonzero linear coefficient")
        self._g = g
        self._f = f
        self._frev: TruncatedSeries | None = None

    @classmethod
    def identity(cls, order: int) -> "RiordanElement":
        return cls(TruncatedSeries.one(order), TruncatedSeries.x(order))

    @property
    def g(self) -> TruncatedSeries:
        return self._g

    @property
    def f(self) -> TruncatedSeries:
        return self._f

    @property
    def order(self) -> int:
        return self._g.order

    def is_normalized(self) -> bool:
        """True when g(0) = 1 and f'(0) = 1."""
        return self._g.constant_term == 1 and self._f.coefficient(1) == 1

    def truncate(self, order: int) -> "RiordanElement":
        if order == self.order:
            return self
        return RiordanElement(self._g.truncate(order), self._f.truncate(order))

    # -- matrix representation -------------------------------------------------

    def matrix(self, size: int) -> TriMatrix:
        """Leading size x size block of the represented matrix."""
        if size < 1:
            raise ValueError("size must be positive")
        if size > self.order + 1:
            raise PrecisionError(
                f"a {size}x{size} matrix needs the element at order >= {size - 1}, "
                f"but it has order {self.order}"
            )
        rows = [[_ZERO] * size for _ in range(size)]
        column = self._g
        for k in range(size):
            coeffs = column.coefficients
            for n in range(k, size):
                rows[n][k] = coeffs[n]
            if k + 1 < size:
                column = column * self._f
        return TriMatrix(rows)

    # -- group structure ---------------------------------------------------------

    def mul(self, other: "RiordanElement") -> "RiordanElement":
        """Group product; the matrix of the product is the matrix product."""
        if self.order != other.order:
            raise PrecisionError(
                "group multiplication needs equal orders; truncate explicitly"
            )
        return RiordanElement(
            self._g * other._g.compose(self._f),
            other._f.compose(self._f),
        )

    __mul__ = mul

    def reverted_f(self) -> TruncatedSeries:
        """Compositional inverse of f (cached: elements are immutable)."""
        if self._frev is None:
            self._frev = self._f.revert()
        return self._frev

    def inverse(self) -> "RiordanElement":
        frev = self.reverted_f()
        return RiordanElement(1 / self._g.compose(frev), frev)

    def ftra_apply(self, h: TruncatedSeries) -> TruncatedSeries:
        """Action on a single series: g * h(f).

        Column k of the matrix has generating function ftra_apply(x^k).
        """
        return self._g * h.compose(self._f)

    # -- A- and Z-sequences -------------------------------------------------------

    def a_sequence(self) -> TruncatedSeries:
        """The series x / rev(f); one order of precision is consumed."""
        return 1 / self.reverted_f().shift_down(1)

    def z_sequence(self) -> TruncatedSeries:
        """The first-column series of the production matrix.

        Computed as (1 - g(0)/g(rev f)) / rev(f); the g(0) factor makes the
        formula valid for non-normalized elements as well.
        """
        frev = self.reverted_f()
        w = 1 - self._g.constant_term / self._g.compose(frev)
        return w.shift_down(1) / frev.shift_down(1)

    @classmethod
    def from_az(
        cls, a: TruncatedSeries, z: TruncatedSeries
    ) -> "RiordanElement":
        """Rebuild the element whose production matrix has A-column ``a``
        and Z-column ``z``: the inverse of (1 - x*Z/A, x/A)."""
        if not a.constant_term:
            raise InvalidElementError(
                "invalid A-sequence: constant term must be nonzero"
            )
        common = min(a.order, z.order)
        a = a.truncate(common)
        z = z.truncate(common)
        g_inner = 1 - (z / a).shift_up(1)
        f_inner = (1 / a).shift_up(1)
        return cls(g_inner, f_inner).inverse()

    # -- comparison and display ----------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RiordanElement):
            return NotImplemented
        return self._g == other._g and self._f == other._f

    __hash__ = None  # series equality ignores surplus precision

    def __repr__(self) -> str:
        return f"RiordanElement(g={self._g!r}, f={self._f!r})"
