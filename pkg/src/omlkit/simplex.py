"""Dense two-phase simplex over exact rationals.

Solves  max c.x  subject to  A x <= b, x >= 0  with every coefficient a
Fraction, so verdicts are exact and the returned optimum is a vertex of
the feasible region.  Pivoting uses Bland's smallest-index rule, which
rules out cycling at the price of a few extra pivots; the problems this
toolkit generates are small enough not to care.
"""

from __future__ import annotations

from fractions import Fraction

__all__ = ["maximize", "InfeasibleError", "UnboundedError"]

_ZERO = Fraction(0)
_ONE = Fraction(1)


class InfeasibleError(Exception):
    """The constraint system has no solution at all."""


class UnboundedError(Exception):
    """The objective can be pushed beyond every bound."""


def maximize(c, rows, rhs):
    """Return (optimal value, vertex x) for max c.x, rows.x <= rhs, x >= 0.

    Raises InfeasibleError or UnboundedError.  Fully deterministic: the
    same input always yields the same vertex.
    """
    m, n = len(rows), len(c)
    art_of = {}
    n_art = 0
    for i in range(m):
        if rhs[i] < 0:
            art_of[i] = n_art
            n_art += 1
    width = n + m + n_art + 1

    tableau = []
    basis = []
    for i in range(m):
        row = [_ZERO] * width
        sign = 1
        if i in art_of:
            sign = -1
        for j in range(n):
            v = rows[i][j]
            if v:
                row[j] = sign * v
        row[n + i] = Fraction(sign)
        row[-1] = sign * rhs[i]
        if i in art_of:
            row[n + m + art_of[i]] = _ONE
            basis.append(n + m + art_of[i])
        else:
            basis.append(n + i)
        tableau.append(row)

    if n_art:
        # Phase one: drive the artificial variables to zero.
        obj = [_ZERO] * width
        for i in art_of:
            row = tableau[i]
            for j in range(n + m):
                if row[j]:
                    obj[j] += row[j]
            obj[-1] += row[-1]
        _pivot_until_optimal(tableau, basis, obj, n + m)
        if obj[-1] != 0:
            raise InfeasibleError("artificial variables cannot be eliminated")
        _evict_artificials(tableau, basis, n + m)

    obj = [_ZERO] * width
    for j in range(n):
        obj[j] = c[j]
    for i, bv in enumerate(basis):
        if bv < n and obj[bv]:
            coef = obj[bv]
            row = tableau[i]
            for j in range(width):
                if row[j]:
                    obj[j] -= coef * row[j]
    _pivot_until_optimal(tableau, basis, obj, n + m)

    x = [_ZERO] * n
    for i, bv in enumerate(basis):
        if bv < n:
            x[bv] = tableau[i][-1]
    return -obj[-1], x


def _pivot_until_optimal(tableau, basis, obj, real_width):
    """Bland's rule: enter the first improving column, leave by the first
    tied minimum-ratio basic variable."""
    m = len(tableau)
    while True:
        col = -1
        for j in range(real_width):
            if obj[j] > 0:
                col = j
                break
        if col < 0:
            return
        best = None
        leave = -1
        for i in range(m):
            a = tableau[i][col]
            if a > 0:
                ratio = tableau[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave < 0:
            raise UnboundedError("improving column has no blocking row")
        _pivot(tableau, basis, obj, leave, col)


def _pivot(tableau, basis, obj, r, col):
    prow = tableau[r]
    piv = prow[col]
    if piv != 1:
        tableau[r] = prow = [v / piv for v in prow]
    for i, row in enumerate(tableau):
        if i != r and row[col]:
            coef = row[col]
            tableau[i] = [a - coef * b for a, b in zip(row, prow)]
    if obj[col]:
        coef = obj[col]
        obj[:] = [a - coef * b for a, b in zip(obj, prow)]
    basis[r] = col


def _evict_artificials(tableau, basis, real_width):
    """Pivot leftover zero-level artificials onto real columns, or drop
    their rows when redundant."""
    dead = []
    for i in range(len(tableau)):
        if basis[i] >= real_width:
            row = tableau[i]
            col = next((j for j in range(real_width) if row[j]), -1)
            if col < 0:
                dead.append(i)
            else:
                _pivot(tableau, basis, [_ZERO] * len(row), i, col)
    for i in reversed(dead):
        del tableau[i]
        del basis[i]
