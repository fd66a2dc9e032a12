"""Side-by-side study of binary64 Hilbert inversion against the exact
integer inverse.

The Hilbert matrix is the textbook ill-conditioned example: its float
rendering already differs from the true matrix by relative eps, and
elimination amplifies that until, somewhere around order 12 or 13 in
binary64, the computed inverse has entries that are wrong by more than
their own magnitude. The exact closed-form inverse has no error at all,
which is the property the cipher leans on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError
from .specialmat import hilbert_inverse_int_rows


@dataclass(frozen=True)
class StabilityRow:
    """One order's comparison: worst entry error and float residual."""

    n: int
    max_abs_err: float
    residual: float


def _float_hilbert(n: int) -> list:
    return [[1.0 / (i + j - 1) for j in range(1, n + 1)] for i in range(1, n + 1)]


def float_invert_hilbert(n: int) -> list:
    """Invert the float-rendered Hilbert matrix in binary64.

    Gauss-Jordan with partial pivoting; ties on |pivot| take the first
    candidate row, so the result is reproducible bit for bit wherever
    binary64 behaves. An exactly zero pivot column would be a breakdown
    and raises DomainError (never observed at small orders, but the
    guard keeps that failure loud rather than silent).
    """
    if n < 1:
        raise DomainError("order must be at least 1")
    aug = [row + [float(i == j) for j in range(n)] for i, row in enumerate(_float_hilbert(n))]
    for col in range(n):
        piv = max(range(col, n), key=lambda r: abs(aug[r][col]))
        if aug[piv][col] == 0.0:
            raise DomainError(f"float elimination broke down at order {n}, column {col + 1}")
        if piv != col:
            aug[col], aug[piv] = aug[piv], aug[col]
        scale = aug[col][col]
        aug[col] = [v / scale for v in aug[col]]
        prow = aug[col]
        for r in range(n):
            if r != col and aug[r][col] != 0.0:
                f = aug[r][col]
                aug[r] = [v - f * p for v, p in zip(aug[r], prow)]
    return [row[n:] for row in aug]


def stability_report(n_max: int) -> list:
    """Comparison rows for every order 1..n_max."""
    if n_max < 1:
        raise DomainError("n_max must be at least 1")
    rows = []
    for n in range(1, n_max + 1):
        exact = hilbert_inverse_int_rows(n)
        try:
            finv = float_invert_hilbert(n)
        except DomainError:
            rows.append(StabilityRow(n, math.inf, math.inf))
            continue
        err = 0.0
        for i in range(n):
            for j in range(n):
                try:
                    delta = abs(finv[i][j] - float(exact[i][j]))
                except OverflowError:
                    delta = math.inf
                if delta > err:
                    err = delta
        rows.append(StabilityRow(n, err, _residual(n, finv)))
    return rows


def _residual(n: int, finv: list) -> float:
    """Largest entry of H*H_inv - I, all in binary64."""
    h = _float_hilbert(n)
    worst = 0.0
    for i in range(n):
        for j in range(n):
            acc = 0.0
            for k in range(n):
                acc += h[i][k] * finv[k][j]
            if i == j:
                acc -= 1.0
            if abs(acc) > worst:
                worst = abs(acc)
    return worst


def report_csv(rows) -> str:
    out = ["n,max_abs_err,residual"]
    for row in rows:
        out.append(f"{row.n},{row.max_abs_err!r},{row.residual!r}")
    return "\n".join(out) + "\n"


def report_text(rows) -> str:
    lines = [f"{'n':>4}  {'max_abs_err':>13}  {'residual':>13}"]
    for row in rows:
        lines.append(f"{row.n:>4}  {row.max_abs_err:>13.5e}  {row.residual:>13.5e}")
    first, last = rows[0], rows[-1]
    if first.max_abs_err > 0 and math.isfinite(last.max_abs_err):
        growth = last.max_abs_err / first.max_abs_err
        lines.append(
            f"max_abs_err grew {growth:.3e}x from n={first.n} to n={last.n}"
        )
    else:
        lines.append(
            f"max_abs_err went from {first.max_abs_err:.5e} (n={first.n}) "
            f"to {last.max_abs_err:.5e} (n={last.n})"
        )
    return "\n".join(lines) + "\n"
