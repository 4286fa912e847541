"""Discrepancies of toric divisors over a weighted blow-up of a hypersurface."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import PreconditionError, UsageError
from .lattice import Weight, ones, pairing
from .newton import Membership, SupportSet, classify_one, leading_support, weight_value


@dataclass(frozen=True)
class BlowupContext:
    f: SupportSet
    p: Weight
    pf: int = field(init=False)
    sp: int = field(init=False)

    def __post_init__(self):
        if len(self.p) != self.f.n:
            raise UsageError(f"weight has {len(self.p)} entries, support has n={self.f.n}")
        if not isinstance(self.p, Weight):
            object.__setattr__(self, "p", Weight(self.p))
        pf = weight_value(self.f, self.p)
        if pf < 1:
            raise UsageError("p(f) must be positive")
        object.__setattr__(self, "pf", pf)
        object.__setattr__(self, "sp", sum(self.p))

    def cone_indices(self, q: Sequence[int]) -> list[int]:
        """Indices i with q in the cone sigma_i of the star subdivision (min q_j/p_j)."""
        ratios = [Fraction(qj, pj) for qj, pj in zip(q, self.p)]
        low = min(ratios)
        return [i for i, r in enumerate(ratios) if r == low]


def _check_q(ctx: BlowupContext, q: Sequence[int]) -> tuple[int, ...]:
    q = tuple(int(x) for x in q)
    if len(q) != ctx.f.n:
        raise UsageError(f"q has {len(q)} entries, expected {ctx.f.n}")
    if any(x < 0 for x in q):
        raise UsageError("q must be nonnegative")
    if not any(q):
        raise UsageError("q must be nonzero")
    return q


def alpha(ctx: BlowupContext, q: Sequence[int], index: int | None = None) -> Fraction:
    """Discrepancy of ``K + X(p) + D_p`` at ``D_q``.

    ``index`` picks the cone sigma_i containing q; by default the smallest
    minimizing index.  Any minimizing index gives the same value.
    """
    q = _check_q(ctx, q)
    candidates = ctx.cone_indices(q)
    i = candidates[0] if index is None else index
    if i not in candidates:
        raise UsageError(f"q is not in the cone sigma_{i + 1}")
    qf = weight_value(ctx.f, q)
    return pairing(q, ones(len(q))) - qf - Fraction(q[i], ctx.p[i]) * (ctx.sp - ctx.pf) - 1


def discrepancy_over_proper_transform(ctx: BlowupContext, q: Sequence[int], index: int | None = None) -> Fraction:
    """``a(D_q, X(p))``: alpha plus the coefficient of D_q in the pullback of D_p."""
    q = _check_q(ctx, q)
    i = ctx.cone_indices(q)[0] if index is None else index
    return alpha(ctx, q, i) + Fraction(q[i], ctx.p[i])


def discrepancy_over_base(f: SupportSet, q: Sequence[int]) -> int:
    """``a(D_q, X) = <q, 1> - q(f) - 1`` for the hypersurface itself."""
    q = tuple(q)
    if len(q) != f.n or any(x < 0 for x in q) or not any(q):
        raise UsageError("q must be a nonzero nonnegative vector of the right length")
    return sum(q) - weight_value(f, q) - 1


def is_plt_weight(f: SupportSet, p: Sequence[int]) -> bool:
    """True iff the p-blow-up is a plt blow-up, i.e. 1 is interior to Gamma_+(f_p)."""
    if classify_one(f) is not Membership.INTERIOR:
        raise PreconditionError("is_plt_weight needs a canonical input: the all-ones point must be interior")
    p = Weight(p)
    if len(p) != f.n:
        raise UsageError("weight dimension does not match the support")
    return classify_one(leading_support(f, p)) is Membership.INTERIOR
