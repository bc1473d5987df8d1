"""Exact rational feasibility of linear inequality systems.

Phase-1 simplex over `fractions.Fraction`, used to decide whether a candidate
genetic code is realizable by a length vector.  Systems here are tiny (tens of
rows, at most nine variables), so a dense tableau with Bland's rule is both
simple and fast enough.
"""

from __future__ import annotations

from fractions import Fraction

Constraint = tuple[list[int], int]


def feasible_point(num_vars: int, constraints: list[Constraint]) -> list[Fraction] | None:
    """Find x >= 0 with coeffs . x >= rhs for every (coeffs, rhs) constraint.

    Requires rhs >= 0 so that the all-artificial basis is feasible.  Returns
    one feasible point, or None when the system is inconsistent.
    """
    m = len(constraints)
    ncols = num_vars + 2 * m  # x | surplus | artificial
    rows: list[list[Fraction]] = []
    for i, (coeffs, rhs) in enumerate(constraints):
        if len(coeffs) != num_vars:
            raise ValueError("coefficient length mismatch")
        if rhs < 0:
            raise ValueError("rhs must be nonnegative")
        row = [Fraction(c) for c in coeffs] + [Fraction(0)] * (2 * m) + [Fraction(rhs)]
        row[num_vars + i] = Fraction(-1)
        row[num_vars + m + i] = Fraction(1)
        rows.append(row)
    basis = [num_vars + m + i for i in range(m)]

    # Phase-1 objective: minimize the artificial sum, expressed in terms of the
    # nonbasic columns by summing the constraint rows.
    obj = [Fraction(0)] * (ncols + 1)
    for row in rows:
        for j in range(ncols + 1):
            obj[j] += row[j]
    for i in range(m):
        obj[num_vars + m + i] = Fraction(0)

    while True:
        enter = -1
        for j in range(num_vars + m):  # artificials never re-enter
            if obj[j] > 0:
                enter = j
                break
        if enter < 0:
            break
        leave = -1
        best: Fraction | None = None
        for i in range(m):
            if rows[i][enter] > 0:
                ratio = rows[i][ncols] / rows[i][enter]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave < 0:
            return None
        piv = rows[leave][enter]
        rows[leave] = [v / piv for v in rows[leave]]
        pivot_row = rows[leave]
        for i in range(m):
            if i != leave and rows[i][enter] != 0:
                f = rows[i][enter]
                rows[i] = [a - f * b for a, b in zip(rows[i], pivot_row)]
        f = obj[enter]
        obj = [a - f * b for a, b in zip(obj, pivot_row)]
        basis[leave] = enter

    if obj[ncols] != 0:
        return None
    x = [Fraction(0)] * num_vars
    for i, b in enumerate(basis):
        if b < num_vars:
            x[b] = rows[i][ncols]
    return x
