"""Reference rows for the two tables of exceptional 3-fold Brieskorn types.

Table 1 lists the types whose exceptional surface is a weighted projective
plane ``P(q1, q2, q3)``, with the different written on the coordinate lines
``L1, L2, L3`` and the curve ``C_m``.  Table 2 lists the types whose surface
has Picard rank > 1, with its normalized ambient space, reduced exponents and
the different written on the curves ``Gamma_i``.  Parameter families are
expanded to one row per type.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as F


@dataclass(frozen=True)
class Table1Row:
    no: int
    type: tuple[int, int, int, int]
    q: tuple[int, int, int]
    diff: dict


@dataclass(frozen=True)
class Table2Row:
    no: int
    type: tuple[int, int, int, int]
    pbar: tuple[int, int, int, int]
    abar: tuple[int, int, int, int]
    diff: dict  # 1-based curve index -> coefficient


def _r(r):
    return 1 - F(1, r)


def _table1():
    rows = []

    def add(no, t, q, diff):
        rows.append(Table1Row(no, tuple(t), tuple(q), dict(diff)))

    P2 = (1, 1, 1)
    for r in (11, 13, 17, 19, 23, 25, 29, 31, 37, 41):
        add(1, (2, 3, 7, r), P2, {"L1": F(1, 2), "L2": F(2, 3), "L3": F(6, 7), "C1": _r(r)})
    add(2, (2, 3, 11, 13), P2, {"L1": F(1, 2), "L2": F(2, 3), "L3": F(10, 11), "C1": F(12, 13)})
    for r in (3, 7, 9):
        add(3, (2, 4, 5, 2 * r), P2, {"L2": F(1, 2), "C2": F(4, 5), "L3": _r(r)})
    for r in (7, 11):
        add(4, (2, 4, 6, r), P2, {"L2": F(1, 2), "L3": F(2, 3), "C2": _r(r)})
    for r in (5, 7, 11):
        add(5, (2, 3, 8, 2 * r), P2, {"C2": F(2, 3), "L2": F(3, 4), "L3": _r(r)})
    add(6, (2, 3, 10, 14), P2, {"C2": F(2, 3), "L2": F(4, 5), "L3": F(6, 7)})
    add(7, (2, 3, 9, 15), P2, {"C3": F(1, 2), "L2": F(2, 3), "L3": F(4, 5)})
    add(8, (3, 3, 4, 9), P2, {"C3": F(3, 4), "L3": F(2, 3)})
    add(9, (3, 3, 5, 6), P2, {"C3": F(4, 5), "L3": F(1, 2)})
    add(10, (3, 4, 4, 4), P2, {"C4": F(2, 3)})
    add(11, (2, 5, 5, 5), P2, {"C5": F(1, 2)})
    for r in (4, 5, 8, 10, 11, 13, 16, 17, 19, 20):
        add(12, (2, 3, 7, 2 * r), (1, 2, 1), {"C2": F(2, 3), "L2": F(6, 7), "L3": _r(r)})
    for r in (11, 13, 17, 19, 23):
        add(13, (2, 3, 8, r), (1, 1, 2), {"C2": F(2, 3), "L2": F(3, 4), "L3": _r(r)})
    add(14, (2, 3, 8, 20), (2, 1, 1), {"C4": F(2, 3), "L2": F(1, 2), "L3": F(4, 5)})
    for r in (7, 9, 11, 13, 17, 19):
        add(15, (2, 4, 5, r), (1, 1, 2), {"L2": F(1, 2), "L3": F(4, 5), "C2": _r(r)})
    for r in (2, 3, 4):
        add(16, (2, 4, 5, 4 * r), (2, 1, 1), {"C4": F(4, 5), "L3": _r(r)})
    add(17, (2, 4, 7, 8), (2, 1, 1), {"C4": F(6, 7), "L3": F(1, 2)})
    add(18, (2, 4, 7, 9), (1, 1, 2), {"L2": F(1, 2), "L3": F(6, 7), "C2": F(8, 9)})
    for r in (11, 13):
        add(19, (2, 3, 10, r), (1, 1, 2), {"C2": F(2, 3), "L2": F(4, 5), "L3": _r(r)})
    add(20, (2, 5, 6, 7), (1, 1, 2), {"C2": F(4, 5), "L2": F(2, 3), "L3": F(6, 7)})
    for r in (3, 5, 9, 11, 13):
        add(21, (2, 3, 7, 3 * r), (3, 1, 1), {"L1": F(1, 2), "C3": F(6, 7), "L3": _r(r)})
    add(22, (2, 3, 9, 9), (3, 1, 1), {"C9": F(1, 2)})
    for r in (11, 13, 17):
        add(23, (2, 3, 9, r), (3, 1, 1), {"L1": F(1, 2), "L3": F(2, 3), "C3": _r(r)})
    for r in (5, 7, 11):
        add(24, (3, 3, 4, r), (1, 1, 3), {"L3": F(3, 4), "C3": _r(r)})
    add(25, (3, 3, 5, 7), (1, 1, 3), {"L3": F(4, 5), "C3": F(6, 7)})
    add(26, (2, 5, 6, 6), (3, 1, 1), {"C6": F(4, 5)})
    for r in (1, 2):
        add(27, (2, 3, 8, 8 * r), (4, 1, 1), {"C8": F(2, 3), "L3": _r(r)})
    add(28, (3, 4, 4, 5), (4, 1, 1), {"L1": F(2, 3), "C4": F(4, 5)})
    for r in (7, 9):
        add(29, (2, 5, 5, r), (5, 1, 1), {"L1": F(1, 2), "C5": _r(r)})
    add(30, (2, 3, 10, 10), (5, 1, 1), {"C10": F(2, 3)})
    add(31, (2, 3, 7, 35), (7, 1, 1), {"C7": F(1, 2), "L1": F(2, 3), "L3": F(4, 5)})
    add(32, (2, 3, 11, 11), (11, 1, 1), {"C11": F(1, 2), "L1": F(2, 3)})
    for r in (2, 3, 4, 5, 6):
        add(33, (2, 3, 7, 6 * r), (3, 2, 1), {"C6": F(6, 7), "L3": _r(r)})
    add(34, (2, 3, 11, 12), (3, 2, 1), {"C6": F(10, 11), "L3": F(1, 2)})
    for r in (1, 2):
        add(35, (2, 3, 7, 14 * r), (7, 2, 1), {"C14": F(2, 3), "L3": _r(r)})
    add(36, (2, 3, 7, 21), (7, 3, 1), {"C21": F(1, 2)})
    for row in rows:
        for lab in [k for k, v in row.diff.items() if v == 0]:
            del row.diff[lab]
    return tuple(rows)


def _table2():
    rows = []
    no = 36

    def add(t, pbar, abar, diff):
        rows.append(Table2Row(no, tuple(t), tuple(pbar), tuple(abar), {k: v for k, v in diff.items() if v}))

    no += 1
    for r in (3, 4):
        add((2, 5, 5, 2 * r), (5, 2, 2, 5), (2, 5, 5, 2), {4: _r(r)})
    no += 1
    add((2, 4, 5, 15), (5, 5, 2, 2), (2, 2, 5, 5), {2: F(1, 2), 4: F(2, 3)})
    no += 1
    for r in (3, 5, 7):
        add((2, 3, 8, 3 * r), (3, 2, 3, 2), (2, 3, 2, 3), {3: F(3, 4), 4: _r(r)})
    no += 1
    for r in (5, 7, 8):
        add((2, 3, 9, 2 * r), (3, 2, 2, 3), (2, 3, 3, 2), {3: F(2, 3), 4: _r(r)})
    no += 1
    add((3, 3, 4, 10), (2, 2, 3, 3), (3, 3, 2, 2), {3: F(1, 2), 4: F(4, 5)})
    no += 1
    add((2, 4, 5, 10), (5, 5, 2, 1), (2, 2, 5, 10), {2: F(1, 2)})
    no += 1
    add((2, 3, 8, 18), (3, 2, 3, 1), (2, 3, 2, 6), {3: F(3, 4), 4: F(2, 3)})
    no += 1
    add((2, 3, 10, 12), (3, 2, 3, 1), (2, 3, 2, 6), {3: F(4, 5), 4: F(1, 2)})
    no += 1
    add((2, 4, 6, 9), (3, 3, 1, 2), (2, 2, 6, 3), {2: F(1, 2), 4: F(2, 3)})
    no += 1
    add((2, 4, 6, 10), (1, 1, 1, 1), (2, 2, 2, 2), {2: F(1, 2), 3: F(2, 3), 4: F(4, 5)})
    no += 1
    add((2, 3, 8, 12), (6, 4, 3, 1), (2, 3, 4, 12), {3: F(1, 2)})
    no += 1
    add((3, 3, 4, 6), (2, 2, 3, 1), (3, 3, 2, 6), {3: F(1, 2)})
    no += 1
    add((2, 3, 9, 12), (3, 2, 2, 1), (2, 3, 3, 6), {3: F(2, 3), 4: F(1, 2)})
    no += 1
    add((2, 4, 7, 7), (7, 7, 2, 2), (2, 2, 7, 7), {2: F(1, 2)})
    no += 1
    add((3, 3, 4, 8), (4, 4, 3, 3), (3, 3, 4, 4), {4: F(1, 2)})
    no += 1
    add((3, 3, 5, 5), (5, 5, 3, 3), (3, 3, 5, 5), {})
    no += 1
    add((2, 4, 6, 8), (2, 1, 2, 1), (2, 4, 2, 4), {3: F(2, 3), 4: F(1, 2)})
    no += 1
    add((2, 4, 6, 6), (3, 3, 1, 1), (2, 2, 6, 6), {2: F(1, 2)})
    return tuple(rows)


TABLE1: tuple[Table1Row, ...] = _table1()
TABLE2: tuple[Table2Row, ...] = _table2()

# Types in the enumeration that are not exceptional.
NON_EXCEPTIONAL_EXTRAS = ((2, 3, 7, 7), (3, 3, 4, 4), (2, 4, 5, 5))

# Exceptional families with their parameter ranges, exactly as listed.
EXCEPTIONAL_FAMILIES = (
    ((3, 3, 4), range(5, 12)),
    ((3, 3, 5), (6, 7)),
    ((3, 4, 4), (4, 5)),
    ((2, 3, 7), range(8, 42)),
    ((2, 3, 8), range(8, 24)),
    ((2, 3, 9), range(9, 18)),
    ((2, 3, 10), range(10, 15)),
    ((2, 3, 11), (11, 12, 13)),
    ((2, 4, 5), range(6, 20)),
    ((2, 4, 6), range(6, 12)),
    ((2, 4, 7), (7, 8, 9)),
    ((2, 5, 5), range(5, 10)),
    ((2, 5, 6), (6, 7)),
)


def family_types() -> list[tuple[int, int, int, int]]:
    return sorted(head + (d,) for head, ds in EXCEPTIONAL_FAMILIES for d in ds)
