"""Regular complements of ``K_S + Diff`` on the exceptional surface.

Everything here is degree arithmetic in units of ``H``: a boundary is a
list of curves with their degrees and coefficients, and a candidate
complement must have total degree ``-deg K_S``.  The screens below only
ever certify klt; anything they cannot certify is handed to the ledger.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import InvariantError, UsageError
from .lattice import fmt_rat
from .wps import SurfaceModel

REGULAR = (1, 2, 3, 4, 6)


def _check_n(n: int) -> None:
    if n not in REGULAR:
        raise UsageError(f"n must be one of {REGULAR}, got {n}")


def coefficient_floor(delta: Fraction, n: int) -> Fraction:
    """Least coefficient an n-complement may put on a curve carrying ``delta``."""
    _check_n(n)
    delta = Fraction(delta)
    if not 0 <= delta < 1:
        raise UsageError(f"boundary coefficient must lie in [0, 1): {delta}")
    return Fraction(math.floor((n + 1) * delta), n)


@dataclass(frozen=True)
class Component:
    label: str
    degree: Fraction
    coeff: Fraction

    def __post_init__(self):
        object.__setattr__(self, "degree", Fraction(self.degree))
        object.__setattr__(self, "coeff", Fraction(self.coeff))
        if self.degree <= 0:
            raise UsageError(f"{self.label}: degree must be positive")
        if not 0 <= self.coeff <= 1:
            raise UsageError(f"{self.label}: coefficient {self.coeff} outside [0, 1]")


@dataclass(frozen=True)
class BoundaryDivisor:
    components: tuple[Component, ...]

    @property
    def degree(self) -> Fraction:
        return sum((c.degree * c.coeff for c in self.components), Fraction(0))

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return tuple(c.coeff for c in self.components)

    def render(self) -> str:
        parts = [f"{fmt_rat(c.coeff)}*{c.label}" for c in self.components if c.coeff]
        return " + ".join(parts) if parts else "0"

    def to_json(self) -> list:
        return [{"label": c.label, "degree": fmt_rat(c.degree), "coeff": fmt_rat(c.coeff)} for c in self.components]


def gamma_labels(model: SurfaceModel) -> list[str]:
    return [f"Gamma{i + 1}" for i in range(len(model.model.pbar))]


def diff_boundary(model: SurfaceModel) -> BoundaryDivisor:
    comps = [Component(lab, deg, c) for lab, deg, c in zip(gamma_labels(model), model.curve_degrees, model.diff) if c]
    return BoundaryDivisor(tuple(comps))


def degree_budget(model: SurfaceModel) -> Fraction:
    """H-degree left for ``Delta' = Delta+ - Delta``."""
    budget = -model.degK - sum(c * d for c, d in zip(model.diff, model.curve_degrees))
    if budget < 0:
        raise InvariantError(f"{model.type}: negative degree budget {budget}")
    return budget


@dataclass(frozen=True)
class BumpWitness:
    anticanonical_degree: int
    bumped: dict  # n -> bumped degree sum

    @property
    def minimum(self) -> Fraction:
        return min(self.bumped.values())

    def holds(self) -> bool:
        return self.minimum > self.anticanonical_degree

    def render(self) -> str:
        return f"{fmt_rat(self.minimum)} > {self.anticanonical_degree}"

    def to_json(self) -> dict:
        return {
            "minus_degK": self.anticanonical_degree,
            "bumped": {str(n): fmt_rat(v) for n, v in sorted(self.bumped.items())},
            "minimum": fmt_rat(self.minimum),
            "inequality": self.render(),
        }


def bumped_degrees(model: SurfaceModel) -> BumpWitness:
    bumped = {n: sum(coefficient_floor(c, n) * d for c, d in zip(model.diff, model.curve_degrees)) for n in REGULAR}
    return BumpWitness(-model.degK, bumped)


def bump_obstruction(model: SurfaceModel) -> BumpWitness | None:
    """Witness that no regular complement fits in ``-K_S``, if there is one."""
    w = bumped_degrees(model)
    return w if w.holds() else None


class Screen(enum.Enum):
    KLT_BY_SCREEN = "klt_by_screen"
    NEEDS_LEDGER = "needs_ledger"


@dataclass(frozen=True, order=True)
class ComplementCandidate:
    n: int
    fixed: tuple[int, ...]  # numerators k_i on Gamma_i
    mobile: tuple[tuple[int, int], ...]  # sorted (degree m_j, numerator s_j)

    def coefficients(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(k, self.n) for k in self.fixed) + tuple(Fraction(s, self.n) for _, s in self.mobile)

    def degree(self, model: SurfaceModel) -> Fraction:
        fixed = sum(Fraction(k, self.n) * d for k, d in zip(self.fixed, model.curve_degrees))
        return fixed + sum(Fraction(s * m, self.n) for m, s in self.mobile)

    def boundary(self, model: SurfaceModel) -> BoundaryDivisor:
        comps = [
            Component(lab, d, Fraction(k, self.n))
            for lab, d, k in zip(gamma_labels(model), model.curve_degrees, self.fixed)
            if k
        ]
        comps += [Component(f"M{j + 1}~{m}H", m, Fraction(s, self.n)) for j, (m, s) in enumerate(self.mobile)]
        return BoundaryDivisor(tuple(comps))

    def to_json(self, model: SurfaceModel, ledger_key: str | None = None) -> dict:
        tag = klt_screen(model, self)
        out = {
            "n": self.n,
            "fixed": [fmt_rat(Fraction(k, self.n)) for k in self.fixed],
            "mobile": [{"degree": m, "coeff": fmt_rat(Fraction(s, self.n))} for m, s in self.mobile],
            "boundary": self.boundary(model).render(),
            "screen": tag.value,
        }
        if tag is Screen.NEEDS_LEDGER:
            out["ledger_key"] = ledger_key or str(model.type)
        return out


def semigroup_elements(generators: Sequence[int], limit: int) -> list[int]:
    """Positive elements <= limit of the numerical semigroup spanned by the generators."""
    reach = [False] * (limit + 1)
    reach[0] = True
    for v in range(1, limit + 1):
        reach[v] = any(g <= v and reach[v - g] for g in generators)
    return [v for v in range(1, limit + 1) if reach[v]]


def _mobile_parts(total: int, pairs: list[tuple[int, int]], start: int = 0):
    """Multisets of (m, s) pairs, taken in non-decreasing order, with sum(m*s) = total."""
    if total == 0:
        yield ()
        return
    for idx in range(start, len(pairs)):
        m, s = pairs[idx]
        if m * s > total:
            continue
        for rest in _mobile_parts(total - m * s, pairs, idx):
            yield ((m, s),) + rest


def enumerate_candidates(model: SurfaceModel, n: int) -> list[ComplementCandidate]:
    _check_n(n)
    degs = model.curve_degrees
    target = -model.degK * n  # degree equation scaled by n, over the integers
    floors = [coefficient_floor(c, n) for c in model.diff]
    ranges = [range(int(fl * n), n + 1) for fl in floors]
    out = []

    def fixed_parts(i, acc, used):
        if i == len(degs):
            yield tuple(acc), used
            return
        for k in ranges[i]:
            u = used + k * degs[i]
            if u > target:
                break
            yield from fixed_parts(i + 1, acc + [k], u)

    semigroup = semigroup_elements(degs, target)
    pairs = sorted((m, s) for m in semigroup for s in range(1, n + 1) if m * s <= target)
    for fixed, used in fixed_parts(0, [], 0):
        for mobile in _mobile_parts(target - used, pairs):
            cand = ComplementCandidate(n, fixed, mobile)
            if cand.degree(model) != -model.degK:
                raise InvariantError("candidate violates the degree equation")
            out.append(cand)
    out.sort()
    return out


def all_candidates(model: SurfaceModel) -> list[ComplementCandidate]:
    out = []
    for n in REGULAR:
        out.extend(enumerate_candidates(model, n))
    return out


def monomial_count(weights: Sequence[int], degree: int) -> int:
    """Number of monomials of the given weighted degree."""
    ways = [1] + [0] * degree
    for g in weights:
        for v in range(g, degree + 1):
            ways[v] += ways[v - g]
    return ways[degree]


def klt_screen(model: SurfaceModel, cand: ComplementCandidate) -> Screen:
    """Certify klt when the support lies in the Gamma curves with no coefficient 1."""
    if not cand.mobile and all(c < 1 for c in cand.coefficients()):
        return Screen.KLT_BY_SCREEN
    return Screen.NEEDS_LEDGER


def plt_inequality(selfint_KM_M: Fraction, orders: Sequence[int]) -> bool:
    """``(K+M).M <= -2 + sum(1 - 1/m_i)`` over the quotient points on M."""
    if any(m < 2 for m in orders):
        raise UsageError("quotient orders must be >= 2")
    return Fraction(selfint_KM_M) <= -2 + sum(1 - Fraction(1, m) for m in orders)


def can_term_condition(coeffs: Sequence[Fraction]) -> bool:
    coeffs = [Fraction(c) for c in coeffs]
    if any(c < 0 for c in coeffs):
        raise UsageError("coefficients must be nonnegative")
    return sum(coeffs) <= 1 and all(c < 1 for c in coeffs)
