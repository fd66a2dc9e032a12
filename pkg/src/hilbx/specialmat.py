"""Constructors and closed forms for four special matrix families.

Families (indices 1-based throughout, matching the usual formulas):

* Hilbert: entry (i, j) = 1/(i+j-1). Symmetric, positive definite, and
  famously ill-conditioned, with an all-integer inverse.
* Cauchy: entry (i, j) = 1/(x_i + y_j). Hilbert is the special case
  x_i = i, y_j = j-1.
* Vandermonde: entry (i, j) = x_j**i with the row exponent starting at 1,
  so the j-th column is x_j, x_j**2, ..., x_j**n. The exponent-from-1
  convention makes every x_j a factor of the determinant, hence the
  nonzero requirement for invertibility.
* Combinatorial: y everywhere plus x added on the diagonal.

Each closed-form determinant and inverse is verified in the test suite
against the elimination routines in :mod:`hilbx.exactmat`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .errors import DomainError
from .exactmat import Matrix, as_rational

HILBERT = "hilbert"
CAUCHY = "cauchy"
VANDERMONDE = "vandermonde"
COMBINATORIAL = "combinatorial"

FAMILIES = (HILBERT, CAUCHY, VANDERMONDE, COMBINATORIAL)


@dataclass(frozen=True)
class SpecialSpec:
    """Parameters picking one concrete member of a special family.

    ``x`` and ``y`` hold the node sequences for Cauchy/Vandermonde and
    the two scalars (as 1-tuples) for the combinatorial family.
    """

    family: str
    n: int
    x: tuple = ()
    y: tuple = ()

    @classmethod
    def hilbert(cls, n: int) -> "SpecialSpec":
        if n < 1:
            raise DomainError("Hilbert order must be at least 1")
        return cls(HILBERT, n)

    @classmethod
    def cauchy(cls, x, y) -> "SpecialSpec":
        xs = tuple(as_rational(v) for v in x)
        ys = tuple(as_rational(v) for v in y)
        if not xs or len(xs) != len(ys):
            raise DomainError("Cauchy needs nonempty x and y of equal length")
        return cls(CAUCHY, len(xs), xs, ys)

    @classmethod
    def vandermonde(cls, x) -> "SpecialSpec":
        xs = tuple(as_rational(v) for v in x)
        if not xs:
            raise DomainError("Vandermonde needs at least one node")
        return cls(VANDERMONDE, len(xs), xs)

    @classmethod
    def combinatorial(cls, n: int, x, y) -> "SpecialSpec":
        if n < 1:
            raise DomainError("combinatorial order must be at least 1")
        return cls(COMBINATORIAL, n, (as_rational(x),), (as_rational(y),))


def build(spec: SpecialSpec) -> Matrix:
    """The explicit matrix described by ``spec``."""
    n = spec.n
    if spec.family == HILBERT:
        return Matrix(n, n, (Fraction(1, i + j - 1) for i in _r(n) for j in _r(n)))
    if spec.family == CAUCHY:
        x, y = spec.x, spec.y
        ents = []
        for i in _r(n):
            for j in _r(n):
                s = x[i - 1] + y[j - 1]
                if s == 0:
                    raise DomainError(f"Cauchy entry ({i},{j}) has x_i + y_j = 0")
                ents.append(1 / s)
        return Matrix(n, n, ents)
    if spec.family == VANDERMONDE:
        x = spec.x
        return Matrix(n, n, (x[j - 1] ** i for i in _r(n) for j in _r(n)))
    if spec.family == COMBINATORIAL:
        x, y = spec.x[0], spec.y[0]
        return Matrix(n, n, (y + x if i == j else y for i in _r(n) for j in _r(n)))
    raise DomainError(f"unknown family {spec.family!r}")


def closed_det(spec: SpecialSpec) -> Fraction:
    """Closed-form determinant, exactly equal to the elimination result."""
    n = spec.n
    if spec.family == HILBERT:
        num = 1
        for i in _r(n):
            for j in range(i + 1, n + 1):
                num *= (i - j) * (i - j)
        den = 1
        for i in _r(n):
            for j in _r(n):
                den *= i + j - 1
        return Fraction(num, den)
    if spec.family == CAUCHY:
        x, y = spec.x, spec.y
        num = Fraction(1)
        for i in _r(n):
            for j in range(i + 1, n + 1):
                num *= (x[j - 1] - x[i - 1]) * (y[j - 1] - y[i - 1])
        den = Fraction(1)
        for i in _r(n):
            for j in _r(n):
                s = x[i - 1] + y[j - 1]
                if s == 0:
                    raise DomainError(f"Cauchy entry ({i},{j}) has x_i + y_j = 0")
                den *= s
        return num / den
    if spec.family == VANDERMONDE:
        x = spec.x
        det = Fraction(1)
        for v in x:
            det *= v
        for i in _r(n):
            for j in range(i + 1, n + 1):
                det *= x[j - 1] - x[i - 1]
        return det
    if spec.family == COMBINATORIAL:
        x, y = spec.x[0], spec.y[0]
        # degenerate parameters simply make this zero, never an error
        return x ** (n - 1) * (x + n * y)
    raise DomainError(f"unknown family {spec.family!r}")


def closed_inv(spec: SpecialSpec) -> Matrix:
    """Closed-form inverse, exactly equal to the elimination result.

    Degenerate parameters (repeated Cauchy/Vandermonde nodes, a zero
    Vandermonde node, combinatorial x = 0 or x + n*y = 0) are rejected
    before any arithmetic.
    """
    n = spec.n
    if spec.family == HILBERT:
        return Matrix(n, n, (v for row in hilbert_inverse_int_rows(n) for v in row))
    if spec.family == CAUCHY:
        return _cauchy_inv(spec)
    if spec.family == VANDERMONDE:
        return _vandermonde_inv(spec)
    if spec.family == COMBINATORIAL:
        x, y = spec.x[0], spec.y[0]
        if x == 0:
            raise DomainError("combinatorial inverse needs x != 0")
        if x + n * y == 0:
            raise DomainError("combinatorial inverse needs x + n*y != 0")
        scale = x * (x + n * y)
        off = -y / scale
        diag = (x + n * y - y) / scale
        return Matrix(n, n, (diag if i == j else off for i in _r(n) for j in _r(n)))
    raise DomainError(f"unknown family {spec.family!r}")


@lru_cache(maxsize=8)
def hilbert_inverse_int_rows(n: int) -> tuple:
    """Rows of the order-n Hilbert inverse as plain integers.

    Entry (i, j) is

        prod_{k=0}^{n-1} (i+k)(j+k)
        ---------------------------------------------------
        (i+j-1) * prod_{k != i} (i-k) * prod_{k != j} (j-k)

    evaluated with running products so no factorial is recomputed per
    entry: the numerator factors are rising factorials a_i = (i+n-1)!/(i-1)!
    and the sign products reduce to (-1)^(n-i) (i-1)! (n-i)!. Every
    division below is exact, which is the integrality property the
    cryptosystem depends on.
    """
    if n < 1:
        raise DomainError("Hilbert order must be at least 1")
    fact = [1] * (n + 1)
    for i in range(1, n + 1):
        fact[i] = fact[i - 1] * i
    a = [0] * (n + 1)
    a[1] = fact[n]
    for i in range(1, n):
        a[i + 1] = a[i] * (i + n) // i
    d = [0] * (n + 1)
    for i in range(1, n + 1):
        v = fact[i - 1] * fact[n - i]
        d[i] = -v if (n - i) % 2 else v
    rows = [[0] * n for _ in range(n)]
    for i in range(1, n + 1):
        ai, di = a[i], d[i]
        for j in range(i, n + 1):
            v = ai * a[j] // ((i + j - 1) * di * d[j])
            rows[i - 1][j - 1] = v
            rows[j - 1][i - 1] = v
    return tuple(tuple(r) for r in rows)


def _cauchy_inv(spec: SpecialSpec) -> Matrix:
    n = spec.n
    x, y = spec.x, spec.y
    if len(set(x)) != n:
        raise DomainError("Cauchy inverse needs pairwise distinct x nodes")
    if len(set(y)) != n:
        raise DomainError("Cauchy inverse needs pairwise distinct y nodes")
    for i in _r(n):
        for j in _r(n):
            if x[i - 1] + y[j - 1] == 0:
                raise DomainError(f"Cauchy entry ({i},{j}) has x_i + y_j = 0")
    # entry (i, j) of the inverse:
    #   prod_k (x_j + y_k)(x_k + y_i)
    #   over (x_j + y_i) * prod_{k != j} (x_j - x_k) * prod_{k != i} (y_i - y_k)
    px = []   # px[j] = prod_k (x_j + y_k)
    dx = []   # dx[j] = prod_{k != j} (x_j - x_k)
    for j in range(n):
        p = Fraction(1)
        for k in range(n):
            p *= x[j] + y[k]
        px.append(p)
        q = Fraction(1)
        for k in range(n):
            if k != j:
                q *= x[j] - x[k]
        dx.append(q)
    py = []   # py[i] = prod_k (x_k + y_i)
    dy = []   # dy[i] = prod_{k != i} (y_i - y_k)
    for i in range(n):
        p = Fraction(1)
        for k in range(n):
            p *= x[k] + y[i]
        py.append(p)
        q = Fraction(1)
        for k in range(n):
            if k != i:
                q *= y[i] - y[k]
        dy.append(q)
    ents = []
    for i in range(n):
        for j in range(n):
            ents.append(px[j] * py[i] / ((x[j] + y[i]) * dx[j] * dy[i]))
    return Matrix(n, n, ents)


def _vandermonde_inv(spec: SpecialSpec) -> Matrix:
    n = spec.n
    x = spec.x
    if len(set(x)) != n:
        raise DomainError("Vandermonde inverse needs pairwise distinct nodes")
    if any(v == 0 for v in x):
        raise DomainError("Vandermonde inverse needs nonzero nodes")
    # Row i of the inverse holds the coefficients of the Lagrange-style
    # polynomial prod_{k != i} (X - x_k), scaled by x_i * prod_{k != i} (x_i - x_k):
    # entry (i, j) is the X**(j-1) coefficient of that quotient. The full
    # product is expanded once and each factor divided back out, an O(n^2)
    # coefficient recurrence instead of the exponential symmetric sums.
    full = [Fraction(1)]   # coefficients of prod_k (X - x_k), low degree first
    for v in x:
        nxt = [Fraction(0)] * (len(full) + 1)
        for deg, c in enumerate(full):
            nxt[deg + 1] += c
            nxt[deg] -= c * v
        full = nxt
    rows = []
    for i in range(n):
        xi = x[i]
        # synthetic division of ``full`` by (X - x_i); remainder is zero
        quot = [Fraction(0)] * n
        carry = full[n]
        for deg in range(n - 1, -1, -1):
            quot[deg] = carry
            carry = full[deg] + carry * xi
        denom = xi
        for k in range(n):
            if k != i:
                denom *= xi - x[k]
        rows.append([c / denom for c in quot])
    return Matrix(n, n, (v for row in rows for v in row))


def _r(n: int) -> range:
    return range(1, n + 1)
