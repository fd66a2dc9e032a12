"""Exact rational scalars and dense rational matrices.

The scalar type is ``fractions.Fraction``, which is canonical by
construction (denominator positive, fully reduced, zero stored as 0/1),
so value equality is structural equality and nothing here ever rounds.
Matrices are immutable, row-major, and dense.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .errors import DomainError

Rational = Fraction


def as_rational(value) -> Fraction:
    """Coerce an int, Fraction, or rational string to a canonical Fraction.

    Floats are refused: silently converting them would smuggle binary
    rounding into an exact computation.
    """
    if isinstance(value, float):
        raise DomainError(f"refusing float {value!r}; pass an int, Fraction, or string")
    try:
        return Fraction(value)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise DomainError(f"not a rational value: {value!r}") from exc


def rat_canonical(num: int, den: int = 1) -> Fraction:
    """The unique canonical fraction equal to num/den (den > 0, gcd 1)."""
    if den == 0:
        raise DomainError("rational denominator must be nonzero")
    return Fraction(num, den)


def rat_str(r: Fraction) -> str:
    """Canonical text form "<num>/<den>", denominator always present."""
    return f"{r.numerator}/{r.denominator}"


def rat_parse(token: str) -> Fraction:
    """Parse the canonical "<num>/<den>" rendering.

    Strict inverse of :func:`rat_str`: anything that would not render
    back to the same bytes (missing denominator, sign on the denominator,
    unreduced fraction, leading zeros, whitespace) is rejected.
    """
    num_s, _, den_s = token.partition("/")
    try:
        num = int(num_s)
        den = int(den_s)
    except ValueError:
        raise DomainError(f"malformed rational token {token!r}") from None
    if den == 0:
        raise DomainError(f"zero denominator in rational token {token!r}")
    r = Fraction(num, den)
    if rat_str(r) != token:
        raise DomainError(f"non-canonical rational token {token!r}")
    return r


class Matrix:
    """Immutable dense matrix of canonical rationals.

    Entries are stored row-major in a flat tuple. All operations return
    new matrices; instances are safe to share between threads.
    """

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable):
        if rows < 1 or cols < 1:
            raise DomainError("matrix dimensions must be at least 1x1")
        ents = tuple(as_rational(e) for e in entries)
        if len(ents) != rows * cols:
            raise DomainError(f"expected {rows * cols} entries, got {len(ents)}")
        self.rows = rows
        self.cols = cols
        self.entries = ents

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "Matrix":
        rows = [list(r) for r in rows]
        if not rows or not rows[0]:
            raise DomainError("matrix needs at least one row and one column")
        cols = len(rows[0])
        if any(len(r) != cols for r in rows):
            raise DomainError("ragged rows")
        return cls(len(rows), cols, (e for r in rows for e in r))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, (Fraction(int(i == j)) for i in range(n) for j in range(n)))

    @classmethod
    def column(cls, values: Iterable) -> "Matrix":
        vals = list(values)
        return cls(len(vals), 1, vals)

    def at(self, i: int, j: int) -> Fraction:
        """Entry at 0-based (row, column)."""
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def col(self, j: int) -> tuple:
        return self.entries[j :: self.cols]

    def to_rows(self) -> list:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows, (e for j in range(self.cols) for e in self.col(j)))

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __matmul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return mat_mul(self, other)

    def __repr__(self):
        if self.rows * self.cols <= 36:
            body = "; ".join(
                " ".join(rat_str(e) for e in self.row(i)) for i in range(self.rows)
            )
            return f"Matrix({self.rows}x{self.cols}: {body})"
        return f"Matrix({self.rows}x{self.cols})"


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    """Exact matrix product."""
    if a.cols != b.rows:
        raise DomainError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    bcols = [b.col(j) for j in range(b.cols)]
    out = []
    for i in range(a.rows):
        arow = a.row(i)
        for bcol in bcols:
            out.append(sum(x * y for x, y in zip(arow, bcol)))
    return Matrix(a.rows, b.cols, out)


def mat_det_exact(a: Matrix) -> Fraction:
    """Exact determinant.

    Clears denominators row by row, then runs Bareiss fraction-free
    elimination over the integers, which caps intermediate growth at the
    size of the matrix minors instead of letting rational gcd work pile up.
    """
    if not a.is_square:
        raise DomainError("determinant requires a square matrix")
    n = a.rows
    scale = 1
    rows = []
    for i in range(n):
        r = a.row(i)
        lcm = 1
        for e in r:
            lcm = lcm // gcd(lcm, e.denominator) * e.denominator
        scale *= lcm
        rows.append([e.numerator * (lcm // e.denominator) for e in r])
    return Fraction(_bareiss_det(rows), scale)


def _bareiss_det(rows: list) -> int:
    """Integer determinant by fraction-free elimination. Mutates its input."""
    n = len(rows)
    sign = 1
    prev = 1
    for k in range(n - 1):
        piv = next((r for r in range(k, n) if rows[r][k] != 0), None)
        if piv is None:
            return 0
        if piv != k:
            rows[k], rows[piv] = rows[piv], rows[k]
            sign = -sign
        pivot = rows[k][k]
        for i in range(k + 1, n):
            ri, rk = rows[i], rows[k]
            lead = ri[k]
            for j in range(k + 1, n):
                # exact by Sylvester's identity: prev divides the cross term
                ri[j] = (ri[j] * pivot - lead * rk[j]) // prev
            ri[k] = 0
        prev = pivot
    return sign * rows[n - 1][n - 1]


def mat_inv_exact(a: Matrix) -> Matrix:
    """Exact inverse via Gauss-Jordan elimination.

    Pivots on the first nonzero candidate in each column; magnitude-based
    pivot choice buys nothing when no arithmetic ever rounds.
    """
    if not a.is_square:
        raise DomainError("inverse requires a square matrix")
    n = a.rows
    zero, one = Fraction(0), Fraction(1)
    aug = [list(a.row(i)) + [one if i == j else zero for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise DomainError("singular matrix (determinant 0/1)")
        if piv != col:
            aug[col], aug[piv] = aug[piv], aug[col]
        inv_p = one / aug[col][col]
        aug[col] = [e * inv_p for e in aug[col]]
        prow = aug[col]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [e - f * p for e, p in zip(aug[r], prow)]
    return Matrix(n, n, (e for row in aug for e in row[n:]))
