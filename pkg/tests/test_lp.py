from fractions import Fraction

from hypothesis import given, strategies as st

from singforge.lp import maximize


def test_simple_optimum():
    # max x + 2y, x + y + s = 4, y + t = 3
    r = maximize([1, 2, 0, 0], [[1, 1, 1, 0], [0, 1, 0, 1]], [4, 3])
    assert r.status == "optimal" and r.value == 7


def test_infeasible():
    # x + y = -1 with x, y >= 0
    assert maximize([0, 0], [[1, 1]], [-1]).status == "infeasible"


def test_unbounded():
    # x - y = 0
    assert maximize([1, 0], [[1, -1]], [0]).status == "unbounded"


def test_fractional_vertex():
    # 3x + 2y + s = 6, x + 3y + t = 4: optimum of x + y at (10/7, 6/7)
    r = maximize([1, 1, 0, 0], [[3, 2, 1, 0], [1, 3, 0, 1]], [6, 4])
    assert r.value == Fraction(16, 7)
    assert r.x[:2] == (Fraction(10, 7), Fraction(6, 7))


@given(
    st.lists(st.tuples(st.integers(-5, 5), st.integers(0, 9)), min_size=1, max_size=5)
)
def test_box_lp(data):
    # box constraints x_i + s_i = b_i have the closed-form optimum sum max(c_i, 0) b_i
    n = len(data)
    c = [ci for ci, _ in data] + [0] * n
    A = []
    for i in range(n):
        row = [0] * (2 * n)
        row[i] = row[n + i] = 1
        A.append(row)
    r = maximize(c, A, [bi for _, bi in data])
    assert r.status == "optimal"
    assert r.value == sum(max(ci, 0) * bi for ci, bi in data)
