"""Fraction-free elimination over Laurent polynomial rings."""

from __future__ import annotations

from typing import Sequence

from .errors import NotInSpan
from .ring import LaurentPoly, RationalFunc, exact_div

__all__ = ["bareiss_echelon", "bareiss_solve"]


def bareiss_echelon(rows: list[list[LaurentPoly]], ncols: int) -> tuple[list[list[LaurentPoly]], list[int]]:
    """Bareiss elimination of ``rows`` restricted to the first ``ncols`` columns.

    Pivots are chosen column by column, taking the first row (in the given
    order) with a non-zero entry.  Every update is divided exactly by the
    previous pivot, so entries stay in the ring.  Returns the reduced rows
    and the list of pivot columns; row ``k`` of the result holds pivot ``k``.
    """
    rows = [list(r) for r in rows]
    nrows = len(rows)
    if not nrows:
        return rows, []
    one = LaurentPoly.const(1, rows[0][0].vars)
    prev = one
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pr = next((i for i in range(r, nrows) if not rows[i][c].is_zero()), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        piv = rows[r][c]
        for i in range(r + 1, nrows):
            a = rows[i][c]
            row_i = rows[i]
            row_r = rows[r]
            for j in range(len(row_i)):
                if j == c:
                    continue
                val = piv * row_i[j] - a * row_r[j]
                row_i[j] = exact_div(val, prev) if not val.is_zero() else val
            row_i[c] = row_i[c] * 0
        prev = piv
        pivots.append(c)
        r += 1
    return rows, pivots


def bareiss_solve(A: Sequence[Sequence[LaurentPoly]], b: Sequence[LaurentPoly]) -> list[RationalFunc]:
    """Exact solution ``y`` of ``A y = b`` for a full column rank matrix.

    Raises :class:`NotInSpan` if the system is inconsistent or ``A`` is rank
    deficient.
    """
    ncols = len(A[0]) if A else 0
    aug = [list(row) + [rhs] for row, rhs in zip(A, b)]
    red, pivots = bareiss_echelon(aug, ncols)
    if len(pivots) != ncols:
        raise NotInSpan("matrix does not have full column rank")
    for row in red[len(pivots):]:
        if not row[-1].is_zero():
            raise NotInSpan("system is inconsistent")
    y: list[RationalFunc | None] = [None] * ncols
    for k in range(ncols - 1, -1, -1):
        row = red[k]
        acc = RationalFunc(row[-1])
        for j in range(k + 1, ncols):
            if not row[j].is_zero():
                acc = acc - y[j] * row[j]
        y[k] = acc / row[k]
    return y  # type: ignore[return-value]
