"""Newton polyhedra of finitely supported power series.

A series is represented only by its support (the exponents of monomials
with nonzero coefficient); coefficients are treated as generic and the
caller vouches for non-degeneracy.  The polyhedron
``conv(support) + R_{>=0}^n`` is described by its facets, found with the
double description method on the cone of valid inequalities.
"""

from __future__ import annotations

import enum
import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import lp
from .errors import PreconditionError, UsageError
from .lattice import IntVec, Weight, ones, pairing, primitive


class SupportSet:
    """Finite support of a power series in ``n`` variables."""

    __slots__ = ("n", "points")

    def __init__(self, points: Iterable[Sequence[int]], n: int | None = None):
        pts = [tuple(int(x) for x in p) for p in points]
        if not pts:
            raise UsageError("support set is empty")
        dims = {len(p) for p in pts}
        if len(dims) != 1:
            raise UsageError("support rows have different lengths")
        dim = dims.pop()
        if n is not None and n != dim:
            raise UsageError(f"declared n={n} but rows have length {dim}")
        if dim < 1:
            raise UsageError("support rows must be nonempty")
        if any(x < 0 for p in pts for x in p):
            raise UsageError("exponents must be nonnegative")
        if len(set(pts)) != len(pts):
            raise UsageError("support contains duplicate points")
        if (0,) * dim in pts:
            raise UsageError("support contains the zero exponent (a unit, not a singularity germ)")
        self.n = dim
        self.points: tuple[IntVec, ...] = tuple(sorted(pts))

    @classmethod
    def brieskorn(cls, exponents: Sequence[int]) -> "SupportSet":
        """Support of ``x_1^{a_1} + ... + x_n^{a_n}``."""
        n = len(exponents)
        if any(a < 1 for a in exponents):
            raise UsageError("Brieskorn exponents must be positive")
        return cls(tuple(a if j == i else 0 for j in range(n)) for i, a in enumerate(exponents))

    @classmethod
    def from_json(cls, data) -> "SupportSet":
        if isinstance(data, (str, bytes)):
            data = json.loads(data)
        if not isinstance(data, dict) or "support" not in data:
            raise UsageError('support JSON must be an object with a "support" key')
        rows = data["support"]
        if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
            raise UsageError('"support" must be a list of exponent rows')
        if not all(isinstance(x, int) and not isinstance(x, bool) for r in rows for x in r):
            raise UsageError("exponents must be integers")
        return cls(rows, n=data.get("n"))

    def to_json(self) -> dict:
        return {"n": self.n, "support": [list(p) for p in self.points]}

    def __iter__(self):
        return iter(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def __eq__(self, other) -> bool:
        return isinstance(other, SupportSet) and self.points == other.points

    def __hash__(self) -> int:
        return hash(self.points)

    def __repr__(self) -> str:
        return f"SupportSet({list(self.points)})"


class Membership(enum.Enum):
    OUTSIDE = "outside"
    BOUNDARY = "boundary"
    INTERIOR = "interior"


@dataclass(frozen=True, order=True)
class Facet:
    """The half-space ``<normal, x> >= offset``."""

    normal: IntVec
    offset: int

    def value(self, x: Sequence) -> Fraction | int:
        return pairing(self.normal, x) - self.offset

    @property
    def compact(self) -> bool:
        return all(c > 0 for c in self.normal)


@dataclass(frozen=True)
class NewtonPolyhedron:
    generators: SupportSet
    facets: tuple[Facet, ...]

    def tight_points(self, facet: Facet) -> frozenset[IntVec]:
        return frozenset(m for m in self.generators if facet.value(m) == 0)

    def contains(self, x: Sequence) -> bool:
        return all(f.value(x) >= 0 for f in self.facets)

    def locate(self, x: Sequence) -> Membership:
        vals = [f.value(x) for f in self.facets]
        if any(v < 0 for v in vals):
            return Membership.OUTSIDE
        if all(v > 0 for v in vals):
            return Membership.INTERIOR
        return Membership.BOUNDARY


def _check_dim(f: SupportSet, p: Sequence[int]) -> None:
    if len(p) != f.n:
        raise UsageError(f"vector of length {len(p)} does not match n={f.n}")
    if any(x < 0 for x in p):
        raise UsageError("weight vectors must be nonnegative")


def weight_value(f: SupportSet, p: Sequence[int]) -> int:
    """``min <p, m>`` over the support."""
    _check_dim(f, p)
    return min(pairing(p, m) for m in f)


def leading_support(f: SupportSet, p: Sequence[int]) -> SupportSet:
    """Support points of the leading form of ``f`` with respect to ``p``."""
    pf = weight_value(f, p)
    return SupportSet([m for m in f if pairing(p, m) == pf])


def _double_description(n: int, points: Sequence[IntVec]) -> list[IntVec]:
    """Extreme rays ``(c, d)`` of ``{c >= 0, <v, c> - d >= 0 for v in points}``.

    Constraints are processed incrementally starting from the simplicial
    cone cut out by ``c >= 0`` and the first point.
    """
    dim = n + 1
    constraints: list[IntVec] = [tuple(int(i == j) for j in range(dim)) for i in range(n)]
    constraints += [tuple(v) + (-1,) for v in points]

    def dot(g, r):
        return sum(a * b for a, b in zip(g, r))

    v0 = points[0]
    rays: list[IntVec] = [(0,) * n + (-1,)]
    rays += [tuple(int(i == j) for j in range(n)) + (v0[i],) for i in range(n)]
    processed = list(range(n + 1))
    zeros = {r: frozenset(k for k in processed if dot(constraints[k], r) == 0) for r in rays}

    for k in range(n + 1, len(constraints)):
        g = constraints[k]
        vals = {r: dot(g, r) for r in rays}
        pos = [r for r in rays if vals[r] > 0]
        neg = [r for r in rays if vals[r] < 0]
        zer = [r for r in rays if vals[r] == 0]
        new_rays = pos + zer
        for rp, rn in itertools.product(pos, neg):
            common = zeros[rp] & zeros[rn]
            if len(common) < dim - 2:
                continue
            if any(r not in (rp, rn) and common <= zeros[r] for r in rays):
                continue
            combo = tuple(vals[rp] * b - vals[rn] * a for a, b in zip(rp, rn))
            new_rays.append(primitive(combo))
        processed.append(k)
        new_rays = list(dict.fromkeys(new_rays))
        zeros = {r: frozenset(j for j in processed if dot(constraints[j], r) == 0) for r in new_rays}
        rays = new_rays
    return rays


def facet_enumeration(f: SupportSet) -> NewtonPolyhedron:
    n = f.n
    facets = set()
    for ray in _double_description(n, f.points):
        c = ray[:n]
        if not any(c):
            continue
        c = primitive(c)
        facets.add(Facet(c, min(pairing(c, m) for m in f)))
    return NewtonPolyhedron(f, tuple(sorted(facets)))


def classify_one(f: SupportSet) -> Membership:
    """Position of the all-ones point relative to the Newton polyhedron.

    For a non-degenerate series: INTERIOR means canonical, BOUNDARY means
    strictly log canonical, OUTSIDE means not log canonical.
    """
    return facet_enumeration(f).locate(ones(f.n))


@dataclass(frozen=True)
class CompactFace:
    points: frozenset[IntVec]
    normal: IntVec  # primitive, strictly positive, in the relative interior of the normal cone


def compact_faces(poly: NewtonPolyhedron) -> list[CompactFace]:
    """All compact faces, each with a canonical positive normal.

    The normal is the primitive part of the sum of the normals of the facets
    containing the face; it lies in the relative interior of the face's
    normal cone, so the leading face for that weight is exactly the face.
    """
    tight = {fc: poly.tight_points(fc) for fc in poly.facets}
    closed = set(s for s in tight.values() if s)
    frontier = set(closed)
    while frontier:
        fresh = set()
        for a in frontier:
            for b in closed:
                c = a & b
                if c and c not in closed:
                    fresh.add(c)
        closed |= fresh
        frontier = fresh
    faces = []
    for pts in closed:
        containing = [fc for fc in poly.facets if pts <= tight[fc]]
        total = [sum(col) for col in zip(*(fc.normal for fc in containing))]
        if all(t > 0 for t in total):
            faces.append(CompactFace(pts, primitive(total)))
    faces.sort(key=lambda face: (face.normal, sorted(face.points)))
    return faces


def find_plt_weight(f: SupportSet) -> Weight | None:
    """Lexicographically least compact-face weight whose leading form is canonical."""
    poly = facet_enumeration(f)
    if poly.locate(ones(f.n)) is not Membership.INTERIOR:
        raise PreconditionError("find_plt_weight needs a canonical input: the all-ones point must be interior")
    for face in compact_faces(poly):  # sorted by normal
        if classify_one(SupportSet(face.points)) is Membership.INTERIOR:
            return Weight(face.normal)
    return None


# Independent LP route, used to cross-check the facet description.

def lp_locate(f: SupportSet, x: Sequence) -> Membership:
    """Locate ``x`` by solving ``x - eps*1 = sum(lam_i m_i) + s`` with max eps.

    ``x`` is in the polyhedron iff the system is feasible for some eps >= 0
    and interior iff the optimum eps is positive.
    """
    n, pts = f.n, f.points
    k = len(pts)
    # variables: lam (k), s (n), eps_plus, eps_minus
    A = []
    b = []
    for i in range(n):
        row = [pts[j][i] for j in range(k)] + [int(i == t) for t in range(n)] + [1, -1]
        A.append(row)
        b.append(Fraction(x[i]))
    A.append([1] * k + [0] * n + [0, 0])
    b.append(1)
    c = [0] * (k + n) + [1, -1]
    res = lp.maximize(c, A, b)
    if res.status == "infeasible":
        return Membership.OUTSIDE
    if res.status == "unbounded":
        # eps can grow without bound only if the recession cone allows it; it cannot
        raise AssertionError("membership LP unexpectedly unbounded")
    if res.value < 0:
        return Membership.OUTSIDE
    return Membership.INTERIOR if res.value > 0 else Membership.BOUNDARY


def affine_rank(points: Iterable[Sequence[int]]) -> int:
    """Dimension of the affine hull of a point set (exact Gaussian elimination)."""
    pts = [tuple(Fraction(x) for x in p) for p in points]
    if not pts:
        return -1
    base = pts[0]
    rows = [[a - b for a, b in zip(p, base)] for p in pts[1:]]
    rank = 0
    cols = len(base)
    for col in range(cols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                f = rows[r][col] / rows[rank][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def is_weighted_homogeneous(f: SupportSet, p: Sequence[int]) -> bool:
    pf = weight_value(f, p)
    return all(pairing(p, m) == pf for m in f)

