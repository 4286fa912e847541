"""Exact integer-vector and rational helpers shared by every module.

Rationals are plain :class:`fractions.Fraction` values; integer vectors are
tuples of ``int``.  Nothing in the package touches floating point.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import UsageError

Rat = Fraction
IntVec = tuple[int, ...]


def gcd_of(values: Iterable[int]) -> int:
    values = list(values)
    if not values:
        raise UsageError("gcd_of needs at least one value")
    if any(v < 0 for v in values):
        raise UsageError("gcd_of expects nonnegative integers")
    return math.gcd(*values)


def lcm_of(values: Iterable[int]) -> int:
    values = list(values)
    if not values:
        raise UsageError("lcm_of needs at least one value")
    if any(v <= 0 for v in values):
        raise UsageError("lcm_of expects positive integers")
    return math.lcm(*values)


def pairing(p: Sequence[int], m: Sequence[int]) -> int:
    """The dot product <p, m> of a weight-space and an exponent-space vector."""
    if len(p) != len(m):
        raise UsageError(f"dimension mismatch: {len(p)} vs {len(m)}")
    return sum(a * b for a, b in zip(p, m))


def primitive(v: Sequence[int]) -> IntVec:
    """Divide an integer vector by the gcd of its entries (zero stays zero)."""
    g = math.gcd(*v)
    if g == 0:
        return tuple(v)
    return tuple(x // g for x in v)


def ones(n: int) -> IntVec:
    return (1,) * n


def fmt_rat(x: Fraction | int) -> str:
    """Render a rational as ``"num/den"``; integers keep the ``/1``."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rat(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"not an exact rational: {text!r}") from exc


class Weight(tuple):
    """A primitive integer vector with all entries >= 1.

    Instances are tuples, so they compare, sort and hash like ``IntVec``.
    """

    def __new__(cls, entries: Iterable[int]):
        entries = tuple(int(e) for e in entries)
        if not entries:
            raise UsageError("a weight needs at least one entry")
        if any(e < 1 for e in entries):
            raise UsageError(f"weight entries must be positive: {entries}")
        if math.gcd(*entries) != 1:
            raise UsageError(f"weight is not primitive: {entries}")
        return super().__new__(cls, entries)

    def __repr__(self) -> str:
        return f"Weight({tuple(self)})"
