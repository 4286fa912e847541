"""The exceptional surface S of the canonical weighted blow-up of a 3-fold
Brieskorn singularity, modelled as a hypersurface in a weighted projective
space ``P(pbar)`` with normalized weights.

Curve classes and intersection numbers are in units of the generator
``H`` with ``O_S(H) = O_S(1)``; the class of ``Gamma_i = S & {x_i = 0}`` is
``pbar_i * H``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import InvariantError, UsageError
from .lattice import fmt_rat, gcd_of, lcm_of


@dataclass(frozen=True, order=True)
class BrieskornType:
    a: tuple[int, int, int, int]

    def __post_init__(self):
        a = tuple(int(x) for x in self.a)
        if len(a) != 4:
            raise UsageError(f"a Brieskorn type has four exponents, got {len(a)}")
        if any(x < 2 for x in a):
            raise UsageError(f"exponents must be >= 2: {a}")
        if list(a) != sorted(a):
            raise UsageError(f"exponents must be sorted ascending: {a}")
        object.__setattr__(self, "a", a)

    @classmethod
    def parse(cls, text: str) -> "BrieskornType":
        try:
            vals = [int(x) for x in text.replace("[", "").replace("]", "").split(",")]
        except ValueError as exc:
            raise UsageError(f"cannot parse a type from {text!r}") from exc
        return cls(tuple(vals))

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.a)) + "]"

    @property
    def sum_inverse(self) -> Fraction:
        return sum(Fraction(1, x) for x in self.a)


@dataclass(frozen=True)
class NormalizedModel:
    abar: tuple[int, ...]
    pbar: tuple[int, ...]
    wbar: int
    removed: tuple[int, ...]  # factor divided out at each reduction step


@dataclass(frozen=True)
class SingularPoint:
    pair: tuple[int, int]  # 1-based indices i < j; the points are Gamma_i & Gamma_j
    order: int
    residues: tuple[int, int]  # (pbar_i mod d, pbar_j mod d)
    q: int  # normal form 1/d(1, q)
    count: int

    @property
    def label(self) -> str:
        if self.q == self.order - 1:
            return f"A{self.order - 1}"
        return f"1/{self.order}(1,{self.q})"

    def to_json(self) -> dict:
        return {
            "pair": list(self.pair),
            "order": self.order,
            "residues": list(self.residues),
            "type": [1, self.q],
            "label": self.label,
            "count": self.count,
        }


@dataclass(frozen=True)
class SurfaceModel:
    type: BrieskornType
    w: int
    p: tuple[int, ...]
    model: NormalizedModel
    diff: tuple[Fraction, ...]
    star: int | None  # 1-based index k dropped by the projection, if any
    h2: Fraction
    degK: int
    sing: tuple[SingularPoint, ...]

    @property
    def curve_degrees(self) -> tuple[int, ...]:
        return self.model.pbar

    def to_json(self) -> dict:
        out = {
            "type": list(self.type.a),
            "w": self.w,
            "p": list(self.p),
            "abar": list(self.model.abar),
            "pbar": list(self.model.pbar),
            "wbar": self.model.wbar,
            "diff": [fmt_rat(c) for c in self.diff],
            "star": self.star,
            "curve_degrees": list(self.curve_degrees),
            "h2": fmt_rat(self.h2),
            "degK": self.degK,
            "sing": [s.to_json() for s in self.sing],
        }
        if self.star is not None:
            out["cone"] = cone_presentation(self).to_json()
        return out


def weights_of(t: BrieskornType) -> tuple[int, tuple[int, ...]]:
    w = lcm_of(t.a)
    p = tuple(w // a for a in t.a)
    if gcd_of(p) != 1:
        raise InvariantError(f"weights {p} of {t} are not primitive")
    return w, p


def normalize(a: Sequence[int], p: Sequence[int]) -> NormalizedModel:
    """Four reduction steps turning ``P(p)`` into a normalized presentation.

    Step i divides the three weights other than ``p_i`` by their gcd ``d``
    and divides ``a_i`` by the same ``d``.
    """
    a, p = list(a), list(p)
    if len({x * y for x, y in zip(a, p)}) != 1:
        raise UsageError("a_i * p_i must be constant")
    if gcd_of(p) != 1:
        raise UsageError(f"weights {tuple(p)} are not primitive")
    removed = []
    for i in range(len(p)):
        d = gcd_of([p[j] for j in range(len(p)) if j != i])
        if a[i] % d:
            raise InvariantError(f"reduction step {i + 1}: {d} does not divide a_{i + 1}={a[i]}")
        a[i] //= d
        for j in range(len(p)):
            if j != i:
                p[j] //= d
        removed.append(d)
    wbar = a[0] * p[0]
    if any(x * y != wbar for x, y in zip(a, p)):
        raise InvariantError("abar_i * pbar_i is not constant after normalization")
    for sub in itertools.combinations(p, len(p) - 1):
        if gcd_of(sub) != 1:
            raise InvariantError(f"{tuple(p)} is not normalized")
    return NormalizedModel(tuple(a), tuple(p), wbar, tuple(removed))


def different_coefficients(p: Sequence[int]) -> tuple[Fraction, ...]:
    out = []
    for i in range(len(p)):
        m = gcd_of([p[j] for j in range(len(p)) if j != i])
        out.append(1 - Fraction(1, m))
    return tuple(out)


def star_indices(t: BrieskornType) -> list[int]:
    """All 1-based k with a_k coprime to every other exponent."""
    a = t.a
    return [k + 1 for k in range(4) if all(math.gcd(a[k], a[i]) == 1 for i in range(4) if i != k)]


def star_condition(t: BrieskornType) -> int | None:
    ks = star_indices(t)
    return ks[-1] if ks else None


def _quotient_normal_form(d: int, r1: int, r2: int) -> int:
    q = (r2 * pow(r1, -1, d)) % d
    return min(q, pow(q, -1, d)) if q else q


def singular_points(m: SurfaceModel | NormalizedModel) -> tuple[SingularPoint, ...]:
    nm = m.model if isinstance(m, SurfaceModel) else m
    pbar, wbar = nm.pbar, nm.wbar
    out = []
    for i, j in itertools.combinations(range(4), 2):
        k, l = [x for x in range(4) if x not in (i, j)]
        d = math.gcd(pbar[k], pbar[l])
        if d == 1:
            continue
        count = wbar // math.lcm(pbar[k], pbar[l])
        if count * math.lcm(pbar[k], pbar[l]) != wbar:
            raise InvariantError("intersection count is not an integer")
        r1, r2 = pbar[i] % d, pbar[j] % d
        out.append(SingularPoint((i + 1, j + 1), d, (r1, r2), _quotient_normal_form(d, r1, r2), count))
    return tuple(out)


def intersection_numbers(m: SurfaceModel | NormalizedModel) -> tuple[Fraction, int]:
    nm = m.model if isinstance(m, SurfaceModel) else m
    h2 = Fraction(nm.wbar, math.prod(nm.pbar))
    degK = nm.wbar - sum(nm.pbar)
    return h2, degK


def surface_model(t: BrieskornType) -> SurfaceModel:
    w, p = weights_of(t)
    nm = normalize(t.a, p)
    diff = different_coefficients(p)
    if tuple(1 - Fraction(1, d) for d in nm.removed) != diff:
        raise InvariantError(f"{t}: different disagrees with the normalization factors")
    h2, degK = intersection_numbers(nm)
    star = star_condition(t)
    if (star is not None) != (1 in nm.abar):
        raise InvariantError(f"{t}: star condition disagrees with the reduced exponents")
    return SurfaceModel(t, w, p, nm, diff, star, h2, degK, singular_points(nm))


@dataclass(frozen=True)
class ConePresentation:
    """``S = P(q1, q2, q3)`` after dropping the coordinate ``x_k`` with ``abar_k = 1``.

    The three remaining Gamma curves become the coordinate lines L1, L2, L3
    (in index order) and Gamma_k becomes the curve ``C_m`` with ``m = wbar``.
    """

    k: int
    q: tuple[int, int, int]
    labels: tuple[str, str, str, str]  # label of Gamma_1..Gamma_4
    diff: dict[str, Fraction]

    @property
    def h2(self) -> Fraction:
        return Fraction(1, math.prod(self.q))

    @property
    def degK(self) -> int:
        return -sum(self.q)

    @property
    def ambient(self) -> str:
        return "P2" if self.q == (1, 1, 1) else "P(" + ",".join(map(str, self.q)) + ")"

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "ambient": self.ambient,
            "q": list(self.q),
            "labels": list(self.labels),
            "diff": {lab: fmt_rat(c) for lab, c in self.diff.items()},
        }


def cone_presentation(m: SurfaceModel, k: int | None = None) -> ConePresentation:
    """Cone presentation dropping ``Gamma_k`` (default: the star index)."""
    k = m.star if k is None else k
    if k is None or k not in star_indices(m.type):
        raise UsageError(f"{m.type}: index {k} does not satisfy the coprimality condition")
    nm = m.model
    if nm.abar[k - 1] != 1:
        raise InvariantError(f"{m.type}: abar_{k} != 1")
    rest = [i for i in range(4) if i != k - 1]
    labels = [""] * 4
    for pos, i in enumerate(rest):
        labels[i] = f"L{pos + 1}"
    labels[k - 1] = f"C{nm.wbar}"
    diff = {labels[i]: m.diff[i] for i in range(4) if m.diff[i]}
    return ConePresentation(k, tuple(nm.pbar[i] for i in rest), tuple(labels), diff)
