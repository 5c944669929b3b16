"""Production matrices of every order and their closed-form counterparts.

The production matrix of a lower-triangular invertible matrix M is
P = M^-1 * (M with its top row removed); row n+1 of M is row n times P.
The n-th production matrix generalizes this: remove the top n rows, multiply
by M^-1, then drop the first n-1 columns.  For a Riordan element the result
is lower Hessenberg, its column 0 is a Z-sequence and its later columns are
shifted copies of an A-sequence, so it generates another Riordan matrix.
This module computes these objects exactly, both by matrix arithmetic and by
a series route, together with the closed-form element that the n-th
production matrix generates, and a verifier comparing the two.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Literal, Sequence

from .arrays import RiordanElement, Rows, TriMatrix, mat_mul, render_rows, rows_to_strings
from .errors import PrecisionError, ShapeError
from .series import TruncatedSeries

_ZERO = Fraction(0)
_ONE = Fraction(1)

# above this size the O(size^3) inversion of the matrix route starts to lose
# to the series route, which never inverts a matrix
_SERIES_ROUTE_THRESHOLD = 32

Method = Literal["auto", "matrix", "series"]


class ProductionMatrix:
    """Square lower-Hessenberg matrix with exact rational entries.

    For production matrices of Riordan elements, column 0 holds the
    Z-sequence and each column k >= 1 holds the A-sequence shifted down
    k - 1 places.
    """

    __slots__ = ("_rows",)

    def __init__(self, rows: Iterable[Iterable[Fraction]]):
        frozen = tuple(
            tuple(c if isinstance(c, Fraction) else Fraction(c) for c in row)
            for row in rows
        )
        size = len(frozen)
        if size == 0:
            raise ShapeError("matrix must have at least one row")
        for i, row in enumerate(frozen):
            if len(row) != size:
                raise ShapeError(f"row {i} has {len(row)} entries, expected {size}")
            for j in range(i + 2, size):
                if row[j]:
                    raise ShapeError(
                        f"entry ({i}, {j}) above the superdiagonal is {row[j]}, "
                        "matrix is not lower Hessenberg"
                    )
        self._rows = frozen

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Fraction | int]]) -> "ProductionMatrix":
        """Build from ragged rows (row i may list only entries 0..i+1)."""
        size = len(rows)
        full = []
        for i, row in enumerate(rows):
            if len(row) > size:
                raise ShapeError(f"row {i} is longer than the matrix size {size}")
            full.append([Fraction(c) for c in row] + [_ZERO] * (size - len(row)))
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

    def z_column(self) -> tuple[Fraction, ...]:
        return self.column(0)

    def a_column(self) -> tuple[Fraction, ...]:
        """Column 1, which reads off the A-sequence a0, a1, ..."""
        if self.size < 2:
            raise ShapeError("need size >= 2 to read the A-column")
        return self.column(1)

    def superdiagonal(self) -> tuple[Fraction, ...]:
        return tuple(self._rows[i][i + 1] for i in range(self.size - 1))

    def to_text(self) -> str:
        return render_rows(self._rows)

    def to_json_entries(self) -> list[list[str]]:
        return rows_to_strings(self._rows)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ProductionMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        return f"ProductionMatrix(size={self.size})"


# ---------------------------------------------------------------------------
# extraction
# ---------------------------------------------------------------------------

def _require_order(e: RiordanElement, needed: int, what: str) -> None:
    if e.order < needed:
        raise PrecisionError(
            f"{what} needs the element at order >= {needed}, but it has "
            f"order {e.order}"
        )


def production_block(e: RiordanElement, n: int, size: int) -> Rows:
    """The size x size block of M^-1 times M with its top n rows removed.

    This is the raw object from which the n-th production matrix is cut; its
    first n-1 columns have not yet been removed, so it is generally not
    Hessenberg.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if size < 1:
        raise ValueError("size must be positive")
    _require_order(e, size + n - 1, f"a size-{size} block with {n} rows removed")
    big = e.matrix(size + n)
    inv = big.leading(size).inverse()
    shifted = big.block(n, 0, size, size)
    return mat_mul(inv.rows, shifted)


def production_matrix(e: RiordanElement, size: int) -> ProductionMatrix:
    """The classical production matrix P with M * P = M shifted up one row."""
    return ProductionMatrix(production_block(e, 1, size))


def nth_production_matrix(
    e: RiordanElement, n: int, size: int, method: Method = "auto"
) -> ProductionMatrix:
    """The n-th production matrix: drop n top rows, multiply by the inverse,
    then drop the first n-1 columns.  n=1 is the classical production matrix.

    Both computation routes give bit-identical results; "matrix" inverts the
    leading block, "series" works on column generating functions and avoids
    the O(size^3) inversion.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if size < 1:
        raise ValueError("size must be positive")
    _require_order(e, size + n - 1, f"the order-{n} production matrix at size {size}")
    if method == "auto":
        method = "matrix" if size <= _SERIES_ROUTE_THRESHOLD else "series"
    if method == "matrix":
        big = e.matrix(size + n)
        inv = big.leading(size).inverse()
        shifted = big.block(n, n - 1, size, size)
        return ProductionMatrix(mat_mul(inv.rows, shifted))
    if method == "series":
        return ProductionMatrix(_columns_by_series(e, n, size))
    raise ValueError(f"unknown method {method!r}")


def _columns_by_series(e: RiordanElement, n: int, size: int) -> list[list[Fraction]]:
    # column j of the result has generating function
    #   (1/g(rev f)) * h_j(rev f),  h_j = (g f^(j+n-1) with terms below
    # degree n dropped) / x^n
    inv = e.inverse()
    rows = [[_ZERO] * size for _ in range(size)]
    gfk = e.g * e.f ** (n - 1)
    for j in range(size):
        h = TruncatedSeries(gfk.coefficients[n:])
        col = inv.ftra_apply(h)
        for i in range(size):
            rows[i][j] = col.coefficient(i)
        if j + 1 < size:
            gfk = gfk * e.f
    return rows


def generate_from_production(p: ProductionMatrix, size: int) -> TriMatrix:
    """Unfold a production matrix into the triangle it generates.

    Row 0 is (1, 0, ...); each later row is the previous row times p.
    """
    if size < 1:
        raise ValueError("size must be positive")
    if p.size < size:
        raise PrecisionError(
            f"a size-{p.size} production matrix cannot generate {size} rows; "
            f"need size >= {size}"
        )
    rows = [[_ZERO] * size for _ in range(size)]
    rows[0][0] = _ONE
    for i in range(size - 1):
        current = rows[i]
        nxt = rows[i + 1]
        for k in range(min(i + 1, size)):
            cik = current[k]
            if cik:
                prow = p.row(k)
                for j in range(min(k + 2, size)):
                    if prow[j]:
                        nxt[j] += cik * prow[j]
    return TriMatrix(rows)


# ---------------------------------------------------------------------------
# closed forms
# ---------------------------------------------------------------------------

def nth_az(e: RiordanElement, n: int) -> tuple[TruncatedSeries, TruncatedSeries]:
    """A- and Z-series of the n-th production matrix, from the reverted f.

    With w = x/rev(f):  A = w^n, and Z = (w^(n-1) - g(0) f'(0)^(n-1) /
    g(rev f)) / rev(f).  For n=1 these are the classical A- and Z-sequences;
    the returned orders are e.order-1 and e.order-2.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    _require_order(e, 2, "A/Z extraction")
    frev = e.reverted_f()
    w = 1 / frev.shift_down(1)
    a = w**n
    unit = (
        e.g.constant_term
        * e.f.coefficient(1) ** (n - 1)
        / e.g.compose(frev)
    )
    diff = w ** (n - 1) - unit
    z = diff.shift_down(1) / frev.shift_down(1)
    return a, z


def produced_matrix_closed_form(e: RiordanElement, n: int) -> RiordanElement:
    """The element generated by the n-th production matrix of ``e``:

        ((x/f)^(n-1), x*(x/f)^(n-1))^-1 * (g, f)

    For n=1 this is ``e`` itself.  The result is returned at order
    e.order - 1 (one order is consumed by the x/f cancellation).
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if n == 1:
        return e
    _require_order(e, 2, "the produced-matrix closed form")
    u = 1 / e.f.shift_down(1)  # x/f at order e.order-1
    p = u ** (n - 1)
    left = RiordanElement(p, p.shift_up(1).truncate(p.order))
    return left.inverse().mul(e.truncate(p.order))


# ---------------------------------------------------------------------------
# conjecture verification
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class VerificationReport:
    """Outcome of comparing the generated matrix against the closed form."""

    element: RiordanElement
    n: int
    size: int
    produced: TriMatrix
    closed_form: TriMatrix
    equal: bool
    first_mismatch: tuple[int, int] | None

    def to_json_dict(self) -> dict:
        doc: dict = {
            "n": self.n,
            "size": self.size,
            "element": {
                "g": [str(c) for c in self.element.g.coefficients],
                "f": [str(c) for c in self.element.f.coefficients],
            },
            "equal": self.equal,
            "produced": self.produced.to_json_entries(),
            "closed_form": self.closed_form.to_json_entries(),
            "first_mismatch": None,
        }
        if self.first_mismatch is not None:
            i, j = self.first_mismatch
            doc["first_mismatch"] = {
                "row": i,
                "col": j,
                "produced": str(self.produced[i, j]),
                "closed_form": str(self.closed_form[i, j]),
            }
        return doc


def verify_nth_conjecture(
    e: RiordanElement, n: int, size: int
) -> VerificationReport:
    """Generate the matrix from the n-th production matrix and compare it,
    entry for entry, with the closed form.  Disagreement is reported, not
    raised: for n >= 4 the equality is not proved, so a counterexample is a
    legitimate result."""
    produced = generate_from_production(nth_production_matrix(e, n, size), size)
    closed = produced_matrix_closed_form(e, n).matrix(size)
    mismatch = None
    for i in range(size):
        if mismatch:
            break
        for j in range(i + 1):
            if produced[i, j] != closed[i, j]:
                mismatch = (i, j)
                break
    return VerificationReport(
        element=e,
        n=n,
        size=size,
        produced=produced,
        closed_form=closed,
        equal=mismatch is None,
        first_mismatch=mismatch,
    )
