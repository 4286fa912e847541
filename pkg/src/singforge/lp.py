"""A small exact two-phase simplex over ``Fraction``.

Only what the Newton-polyhedron membership checks need: maximize ``c.x``
subject to ``A x = b`` and ``x >= 0``.  Bland's rule keeps it finite.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


@dataclass(frozen=True)
class LPResult:
    status: str  # "optimal" | "infeasible" | "unbounded"
    value: Fraction | None = None
    x: tuple[Fraction, ...] | None = None


class _Tableau:
    def __init__(self, rows: list[list[Fraction]], rhs: list[Fraction], basis: list[int]):
        self.rows = rows
        self.rhs = rhs
        self.basis = basis

    def pivot(self, r: int, col: int) -> None:
        row = self.rows[r]
        piv = row[col]
        self.rows[r] = row = [v / piv for v in row]
        self.rhs[r] = self.rhs[r] / piv
        for i, other in enumerate(self.rows):
            if i == r:
                continue
            f = other[col]
            if f:
                self.rows[i] = [a - f * b for a, b in zip(other, row)]
                self.rhs[i] -= f * self.rhs[r]
        self.basis[r] = col

    def optimize(self, cost: Sequence[Fraction], allowed: int) -> bool:
        """Maximize cost over the current basis; False if unbounded.

        Only columns ``< allowed`` may enter the basis.
        """
        while True:
            # reduced cost of column j: cost_j - sum_i cost_{basis_i} * row_i[j]
            entering = None
            for j in range(allowed):
                if j in self.basis:
                    continue
                red = cost[j] - sum(cost[b] * row[j] for b, row in zip(self.basis, self.rows))
                if red > 0:
                    entering = j
                    break
            if entering is None:
                return True
            best = None
            for i, row in enumerate(self.rows):
                a = row[entering]
                if a > 0:
                    ratio = self.rhs[i] / a
                    key = (ratio, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return False
            self.pivot(best[1], entering)


def maximize(c: Sequence, A: Sequence[Sequence], b: Sequence) -> LPResult:
    """Solve ``max c.x`` s.t. ``A x = b``, ``x >= 0`` exactly."""
    m = len(A)
    n = len(c)
    rows = []
    rhs = []
    for i in range(m):
        row = [Fraction(v) for v in A[i]]
        if len(row) != n:
            raise ValueError("constraint row length does not match the objective")
        rb = Fraction(b[i])
        if rb < 0:
            row = [-v for v in row]
            rb = -rb
        rows.append(row + [Fraction(int(k == i)) for k in range(m)])
        rhs.append(rb)
    tab = _Tableau(rows, rhs, [n + i for i in range(m)])

    phase1 = [Fraction(0)] * n + [Fraction(-1)] * m
    tab.optimize(phase1, n + m)
    if any(tab.rhs[i] != 0 for i in range(m) if tab.basis[i] >= n):
        return LPResult("infeasible")

    # drive zero-level artificials out of the basis; drop redundant rows
    keep = []
    for i in range(m):
        if tab.basis[i] >= n:
            col = next((j for j in range(n) if tab.rows[i][j] != 0), None)
            if col is None:
                continue
            tab.pivot(i, col)
        keep.append(i)
    tab.rows = [tab.rows[i] for i in keep]
    tab.rhs = [tab.rhs[i] for i in keep]
    tab.basis = [tab.basis[i] for i in keep]

    cost = [Fraction(v) for v in c] + [Fraction(0)] * m
    if not tab.optimize(cost, n):
        return LPResult("unbounded")
    x = [Fraction(0)] * n
    for i, col in enumerate(tab.basis):
        x[col] = tab.rhs[i]
    value = sum(ci * xi for ci, xi in zip(cost, x))
    return LPResult("optimal", value, tuple(x))
