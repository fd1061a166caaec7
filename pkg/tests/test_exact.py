import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from deligne import exact


def test_primitive_and_canonical():
    assert exact.primitive([2, 0]) == (1, 0)
    assert exact.primitive([Fraction(1, 2), Fraction(-3, 4)]) == (2, -3)
    assert exact.canonical([-2, 4]) == (1, -2)
    assert exact.canonical([0, -3, 6]) == (0, 1, -2)
    with pytest.raises(ValueError):
        exact.primitive([0, 0])


def test_rank_and_kernel():
    assert exact.rank([[1, 2], [2, 4]]) == 1
    assert exact.rank([[1, 0, 0], [0, 1, 0], [1, 1, 0]]) == 2
    assert exact.kernel_vector([[1, 2]], 2) in {(2, -1), (-2, 1)}
    k = exact.kernel_vector([[1, 0, 0], [0, 1, 1]], 3)
    assert exact.dot(k, (1, 0, 0)) == 0 and exact.dot(k, (0, 1, 1)) == 0


def test_solve_and_det():
    assert exact.det([[2, 1], [1, 1]]) == 1
    assert exact.solve([[2, 1], [1, 1]], [3, 2]) == (1, 1)


def test_strict_cone_witness_examples():
    # x > 0, y > 0, x + y > 0, x + 2y > 0
    assert exact.strict_cone_witness([(1, 0), (0, 1), (1, 1), (1, 2)], 2) == (1, 1)
    # x > 0, y > 0, -(x + y) > 0
    assert exact.strict_cone_witness([(1, 0), (0, 1), (-1, -1)], 2) is None
    assert exact.strict_cone_witness([(1,), (-1,)], 1) is None


small_rows = st.lists(
    st.tuples(*[st.integers(-3, 3)] * 3).filter(any), min_size=1, max_size=6
)


@settings(max_examples=150, deadline=None)
@given(small_rows)
def test_witness_satisfies_or_grid_finds_nothing(rows):
    w = exact.strict_cone_witness(rows, 3)
    if w is not None:
        assert all(exact.dot(r, w) > 0 for r in rows)
    else:
        # an open cone that is nonempty contains lattice points of a small box
        for p in itertools.product(range(-4, 5), repeat=3):
            assert not all(exact.dot(r, p) > 0 for r in rows)
