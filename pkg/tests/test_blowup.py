import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from singforge.blowup import (
    BlowupContext,
    alpha,
    discrepancy_over_base,
    discrepancy_over_proper_transform,
    is_plt_weight,
)
from singforge.errors import PreconditionError, UsageError
from singforge.lattice import lcm_of
from singforge.newton import Membership, SupportSet, classify_one, leading_support


def brieskorn_ctx(a):
    w = lcm_of(a)
    return BlowupContext(SupportSet.brieskorn(a), tuple(w // x for x in a))


def test_alpha_at_ones():
    ctx = brieskorn_ctx((2, 3, 7, 41))
    assert alpha(ctx, (1, 1, 1, 1)) == Fraction(860, 861)


@pytest.mark.parametrize("a", [(2, 3, 5), (2, 3, 7, 41), (3, 3, 5, 5), (2, 2, 2, 7)])
def test_alpha_at_p(a):
    ctx = brieskorn_ctx(a)
    assert alpha(ctx, ctx.p) == -1
    assert discrepancy_over_proper_transform(ctx, ctx.p) == 0


@pytest.mark.parametrize("a", [(2, 3, 5), (2, 3, 7, 41)])
def test_base_discrepancy_zero(a):
    ctx = brieskorn_ctx(a)
    assert discrepancy_over_base(ctx.f, ctx.p) == sum(ctx.p) - lcm_of(a) - 1 == 0


def test_index_argument():
    ctx = brieskorn_ctx((2, 3, 5))
    q = (15, 10, 6)
    assert {alpha(ctx, q, i) for i in ctx.cone_indices(q)} == {Fraction(-1)}
    with pytest.raises(UsageError):
        alpha(ctx, (1, 0, 0), index=0)  # (1,0,0) sits only in sigma_2 and sigma_3
    with pytest.raises(UsageError):
        alpha(ctx, (0, 0, 0))


def test_plt_weight_checks():
    f = SupportSet.brieskorn((2, 3, 7, 11))
    assert is_plt_weight(f, (231, 154, 66, 42))
    # x^2 + y^3 + z^7 + t^11 with weight 1 at the t coordinate kills the plt condition
    assert not is_plt_weight(f, (1, 1, 1, 1))
    with pytest.raises(PreconditionError):
        is_plt_weight(SupportSet.brieskorn((2, 3, 6)), (3, 2, 1))


GRID = [q for q in itertools.product(range(5), repeat=3) if any(q)]


@settings(max_examples=100, deadline=None)
@given(st.tuples(*[st.integers(2, 9)] * 3), st.tuples(*[st.integers(1, 9)] * 3))
def test_alpha_lower_bound(a, p):
    # whenever 1 lies in Gamma_+(f_p), every sampled alpha is >= -1
    f = SupportSet.brieskorn(a)
    if classify_one(leading_support(f, p)) is Membership.OUTSIDE:
        return
    from math import gcd

    if gcd(*p) != 1:
        return
    ctx = BlowupContext(f, p)
    assert alpha(ctx, p) == -1
    for q in GRID:
        assert alpha(ctx, q) >= -1


@settings(max_examples=100, deadline=None)
@given(st.tuples(*[st.integers(2, 9)] * 3), st.tuples(*[st.integers(0, 6)] * 3))
def test_alpha_vs_base(a, q):
    # alpha differs from the base discrepancy by the pullback coefficient times (sum p - p(f))
    if not any(q):
        return
    ctx = brieskorn_ctx(a)
    i = ctx.cone_indices(q)[0]
    gap = discrepancy_over_base(ctx.f, q) - alpha(ctx, q)
    assert gap == Fraction(q[i], ctx.p[i]) * (ctx.sp - ctx.pf)
