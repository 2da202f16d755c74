"""Exact rational linear programming.

``max c.x  s.t.  A x <= b`` with free ``x`` is solved through its dual in
standard form::

    min b.y  s.t.  A^T y = c,  y >= 0

which has one tableau row per variable instead of one per constraint. The
polytopes handled here have few variables and many inequalities (Fourier-
Motzkin intermediates), so this keeps pivots cheap. The primal optimiser is
read off the simplex multipliers and re-checked exactly before returning.

The tableau runs on ``gmpy2.mpq`` for speed; inputs and outputs are
:class:`fractions.Fraction`.

Pivoting follows Bland's rule in both phases, so results are deterministic
and the method terminates on degenerate problems.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence

import gmpy2

from .linalg import QVector, dot

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"

_ZERO = Fraction(0)
_MZERO = gmpy2.mpq(0)
_MONE = gmpy2.mpq(1)


def _mpq(x: Fraction):
    return gmpy2.mpq(x.numerator, x.denominator)


def _frac(x) -> Fraction:
    return Fraction(int(x.numerator), int(x.denominator))


@dataclass(frozen=True)
class LPResult:
    status: str
    value: Optional[Fraction] = None
    argmax: Optional[QVector] = None

    @property
    def optimal(self) -> bool:
        return self.status == OPTIMAL


class _Tableau:
    """Dense simplex tableau with an objective row of reduced costs."""

    def __init__(self, rows: List[List[Fraction]], basis: List[int]):
        self.rows = rows
        self.basis = basis
        self.obj: List[Fraction] = []

    def set_objective(self, cost) -> None:
        # reduced costs d_j = cost_j - sum_r cost_{basis[r]} T[r][j]; last entry is -z
        obj = list(cost) + [_MZERO]
        for r, bv in enumerate(self.basis):
            cb = cost[bv]
            if cb:
                row = self.rows[r]
                for j, x in enumerate(row):
                    if x:
                        obj[j] -= cb * x
        self.obj = obj

    def pivot(self, r: int, col: int) -> None:
        prow = self.rows[r]
        p = prow[col]
        if p != 1:
            prow = [x / p if x else x for x in prow]
            self.rows[r] = prow
        nz = [j for j, x in enumerate(prow) if x]
        for i, row in enumerate(self.rows):
            if i != r:
                f = row[col]
                if f:
                    for j in nz:
                        row[j] -= f * prow[j]
        f = self.obj[col]
        if f:
            for j in nz:
                self.obj[j] -= f * prow[j]
        self.basis[r] = col

    def run(self, allowed: int) -> str:
        """Bland's rule on columns ``< allowed``. Returns OPTIMAL or UNBOUNDED."""
        rows = self.rows
        while True:
            col = next((j for j in range(allowed) if self.obj[j] < 0), None)
            if col is None:
                return OPTIMAL
            best = None
            for i, row in enumerate(rows):
                a = row[col]
                if a > 0:
                    ratio = row[-1] / a
                    key = (ratio, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return UNBOUNDED
            self.pivot(best[1], col)


def _solve_dual(A: Sequence[Sequence[Fraction]], b: Sequence[Fraction],
                c: Sequence[Fraction]):
    """Run both phases on the dual. Returns (status, value, multipliers)."""
    m = len(A)
    n = len(c)
    signs = [(-1 if cj < 0 else 1) for cj in c]
    rows = []
    for j in range(n):
        s = signs[j]
        row = [_mpq(-A[i][j] if s < 0 else A[i][j]) for i in range(m)]
        row += [_MONE if jj == j else _MZERO for jj in range(n)]
        row.append(_mpq(-c[j] if s < 0 else c[j]))
        rows.append(row)
    tab = _Tableau(rows, [m + j for j in range(n)])

    # phase one: minimise the sum of artificials
    tab.set_objective([_MZERO] * m + [_MONE] * n)
    tab.run(m)
    if tab.obj[-1] != 0:
        return "dual_infeasible", None, None
    # drive zero-level artificials out of the basis where possible
    for r in range(n):
        if tab.basis[r] >= m:
            col = next((j for j in range(m) if tab.rows[r][j] != 0), None)
            if col is not None:
                tab.pivot(r, col)

    tab.set_objective([_mpq(bi) for bi in b] + [_MZERO] * n)
    status = tab.run(m)
    if status == UNBOUNDED:
        return "dual_unbounded", None, None
    value = _frac(-tab.obj[-1])
    # reduced cost of artificial column j is -pi_j for the sign-flipped row j
    x = tuple(_frac(-tab.obj[m + j] * signs[j]) for j in range(n))
    return OPTIMAL, value, x


def lp_max(A: Sequence[Sequence[Fraction]], b: Sequence[Fraction],
           c: Sequence[Fraction]) -> LPResult:
    """Maximise ``c.x`` over ``{x : A x <= b}`` exactly."""
    n = len(c)
    if not A:
        if all(cj == 0 for cj in c):
            return LPResult(OPTIMAL, _ZERO, tuple(_ZERO for _ in range(n)))
        return LPResult(UNBOUNDED)
    status, value, x = _solve_dual(A, b, c)
    if status == OPTIMAL:
        _certify(A, b, c, value, x)
        return LPResult(OPTIMAL, value, x)
    if status == "dual_unbounded":
        return LPResult(INFEASIBLE)
    # dual infeasible: primal is unbounded if it has any feasible point
    if feasible_point(A, b, n) is None:
        return LPResult(INFEASIBLE)
    return LPResult(UNBOUNDED)


def feasible_point(A: Sequence[Sequence[Fraction]], b: Sequence[Fraction],
                   n: int) -> Optional[QVector]:
    """Some point of ``{x : A x <= b}``, or None if the system is infeasible."""
    if not A:
        return tuple(_ZERO for _ in range(n))
    zero = [_ZERO] * n
    status, value, x = _solve_dual(A, b, zero)
    if status != OPTIMAL:
        return None
    _certify(A, b, zero, value, x)
    return x


def _certify(A, b, c, value, x) -> None:
    for row, bi in zip(A, b):
        if dot(row, x) > bi:
            raise AssertionError("simplex returned an infeasible point")
    if dot(c, x) != value:
        raise AssertionError("simplex optimum does not match its certificate")
