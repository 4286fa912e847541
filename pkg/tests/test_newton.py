import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from singforge.errors import PreconditionError, UsageError
from singforge.newton import (
    Facet,
    Membership,
    SupportSet,
    affine_rank,
    classify_one,
    compact_faces,
    facet_enumeration,
    find_plt_weight,
    is_weighted_homogeneous,
    leading_support,
    lp_locate,
    weight_value,
)


def test_brieskorn_235_facets():
    poly = facet_enumeration(SupportSet.brieskorn((2, 3, 5)))
    assert set(poly.facets) == {
        Facet((1, 0, 0), 0), Facet((0, 1, 0), 0), Facet((0, 0, 1), 0), Facet((15, 10, 6), 30)
    }


def test_compact_faces_235():
    faces = compact_faces(facet_enumeration(SupportSet.brieskorn((2, 3, 5))))
    assert len(faces) == 7  # one triangle, three edges, three vertices
    top = [f for f in faces if len(f.points) == 3]
    assert top[0].normal == (15, 10, 6)


def test_membership_examples():
    assert classify_one(SupportSet.brieskorn((2, 3, 5))) is Membership.INTERIOR
    assert classify_one(SupportSet.brieskorn((2, 3, 6))) is Membership.BOUNDARY
    assert classify_one(SupportSet.brieskorn((2, 3, 7, 42))) is Membership.BOUNDARY
    assert classify_one(SupportSet.brieskorn((2, 3, 7, 43))) is Membership.OUTSIDE


def test_leading_support_and_value():
    f = SupportSet.brieskorn((2, 3, 7, 41))
    p = (861, 574, 246, 42)
    assert weight_value(f, p) == 1722
    assert leading_support(f, p) == f
    assert is_weighted_homogeneous(f, p)
    # a smaller weight picks out a single vertex
    assert leading_support(f, (1, 1, 1, 1)).points == ((2, 0, 0, 0),)


def test_find_plt_weight():
    assert find_plt_weight(SupportSet.brieskorn((2, 3, 5))) == (15, 10, 6)
    # x^2 + y^2 + z^2 + xyz: leading form at (1,1,1) is the quadric
    f = SupportSet([(2, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 1)])
    assert find_plt_weight(f) == (1, 1, 1)
    with pytest.raises(PreconditionError):
        find_plt_weight(SupportSet.brieskorn((2, 3, 6)))


def test_affine_rank():
    assert affine_rank([(2, 0, 0), (0, 3, 0), (0, 0, 5)]) == 2
    assert affine_rank([(1, 1), (2, 2), (3, 3)]) == 1


def test_support_json():
    f = SupportSet.brieskorn((2, 3, 7))
    assert SupportSet.from_json(json.dumps(f.to_json())) == f
    with pytest.raises(UsageError):
        SupportSet([(1, 2), (1, 2, 3)])
    with pytest.raises(UsageError):
        SupportSet([(-1, 2)])


def test_weight_dimension_mismatch():
    with pytest.raises(UsageError):
        weight_value(SupportSet.brieskorn((2, 3, 5)), (1, 1))


supports = st.integers(2, 4).flatmap(
    lambda n: st.lists(st.tuples(*[st.integers(0, 6)] * n), min_size=1, max_size=6, unique=True)
    .filter(lambda pts: all(any(m) for m in pts))
)


@settings(max_examples=200, deadline=None)
@given(supports, st.data())
def test_facets_agree_with_lp(pts, data):
    f = SupportSet(pts)
    poly = facet_enumeration(f)
    x = data.draw(st.tuples(*[st.fractions(0, 5, max_denominator=4)] * f.n))
    assert poly.locate(x) is lp_locate(f, x)
    # every generator lies in the polyhedron and every facet is tight somewhere
    assert all(poly.contains(m) for m in f)
    assert all(poly.tight_points(fc) for fc in poly.facets)


def test_brieskorn_sign_sample():
    rng = random.Random(7)
    for _ in range(100):
        a = [rng.randint(2, 12) for _ in range(rng.randint(3, 4))]
        s = sum(Fraction(1, x) for x in a) - 1
        want = Membership.INTERIOR if s > 0 else Membership.BOUNDARY if s == 0 else Membership.OUTSIDE
        assert classify_one(SupportSet.brieskorn(a)) is want
