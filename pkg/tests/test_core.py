import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from sdiskyline.core import (
    Cmp,
    ComparisonCounter,
    Dataset,
    Direction,
    OrderSpec,
    StructuralError,
    compare_values,
    dominated_mask,
    dominates,
    first_dominator,
    incomparable,
)

from conftest import SAMPLE

MIN6 = OrderSpec.uniform(6)


def t(i):
    return Dataset(SAMPLE)[i]


def test_compare_values():
    order = OrderSpec((Direction.MIN, Direction.MAX))
    assert compare_values(4.7, 5.3, 0, order) is Cmp.BETTER
    assert compare_values(7.5, 7.5, 0, order) is Cmp.EQUAL
    assert compare_values(4.7, 5.3, 1, order) is Cmp.WORSE
    assert compare_values(5.3, 4.7, 1, order) is Cmp.BETTER


@pytest.mark.parametrize("a,b", [(1, 8), (4, 2), (6, 7), (6, 9)])
def test_sample_dominance_pairs(a, b):
    assert dominates(t(a), t(b), MIN6)
    assert not dominates(t(b), t(a), MIN6)


def test_dominance_irreflexive_and_incomparable_pairs():
    for i in range(10):
        assert not dominates(t(i), t(i), MIN6)
    assert not dominates(t(0), t(3), MIN6)
    assert not dominates(t(3), t(0), MIN6)


def test_incomparable():
    assert incomparable(t(0), t(1), MIN6)
    assert not incomparable(t(6), t(7), MIN6)
    assert not incomparable(t(4), t(4), MIN6)


def test_counter_one_per_call():
    c = ComparisonCounter()
    dominates(t(6), t(7), MIN6, c)  # true
    dominates(t(7), t(6), MIN6, c)  # false on first dimension
    dominates(t(0), t(0), MIN6, c)
    assert c.count == 3
    # incomparable short-circuits after one call when the first one succeeds
    incomparable(t(6), t(7), MIN6, c)
    assert c.count == 4
    incomparable(t(0), t(1), MIN6, c)
    assert c.count == 6


def test_dimensionality_mismatch():
    with pytest.raises(StructuralError):
        dominates((1.0, 2.0), (1.0, 2.0, 3.0), OrderSpec.uniform(2))


def test_dataset_validation():
    with pytest.raises(StructuralError):
        Dataset(np.empty((0, 3)))
    with pytest.raises(StructuralError):
        Dataset([[1.0, float("nan")]])
    with pytest.raises(StructuralError):
        Dataset([[1.0, 2.0]], OrderSpec.uniform(3))
    data = Dataset(SAMPLE)
    assert (data.n, data.d) == (10, 6)
    assert data[3].id == 3 and data[3].values[0] == 5.3
    with pytest.raises(ValueError):
        data.values[0, 0] = 1.0


def test_order_spec_rank_maps():
    with pytest.raises(StructuralError):
        OrderSpec((Direction.MIN,), {0: {"red": 1, "blue": 1}})
    spec = OrderSpec((Direction.MIN, Direction.MAX), {0: {"blue": 0, "green": 1}})
    assert spec.resolve(0, "green") == 1.0
    assert spec.resolve(1, "2.5") == 2.5
    with pytest.raises(StructuralError):
        spec.resolve(0, "red")
    with pytest.raises(StructuralError):
        spec.resolve(1, "inf")


small_matrix = st.integers(2, 30).flatmap(
    lambda n: st.integers(1, 8).flatmap(
        lambda d: arrays(np.float64, (n, d), elements=st.sampled_from([0.0, 0.25, 0.5, 1.0, 2.0]))
    )
)


@settings(max_examples=60, deadline=None)
@given(small_matrix)
def test_dominance_is_a_strict_partial_order(m):
    order = OrderSpec.uniform(m.shape[1])
    rows = [tuple(r) for r in m]
    rel = [[dominates(a, b, order) for b in rows] for a in rows]
    k = len(rows)
    for i in range(k):
        assert not rel[i][i]
        for j in range(k):
            if rel[i][j]:
                assert not rel[j][i]
                for l in range(k):
                    if rel[j][l]:
                        assert rel[i][l]


@settings(max_examples=60, deadline=None)
@given(small_matrix, st.data())
def test_negate_and_flip_keeps_dominance(m, data):
    d = m.shape[1]
    dirs = data.draw(st.lists(st.sampled_from(["min", "max"]), min_size=d, max_size=d))
    order = OrderSpec(tuple(dirs))
    flipped = OrderSpec(tuple("max" if x == "min" else "min" for x in dirs))
    for a in m[:6]:
        for b in m[:6]:
            assert dominates(a, b, order) == dominates(-a, -b, flipped)


@settings(max_examples=60, deadline=None)
@given(small_matrix)
def test_vector_helpers_agree_with_scalar_scan(m):
    order = OrderSpec.uniform(m.shape[1])
    window, v = m[:-1], m[-1]
    c = ComparisonCounter()
    expected = -1
    for i, w in enumerate(window):
        if dominates(w, v, order, c):
            expected = i
            break
    assert first_dominator(window, v) == (expected, c.count)
    mask = dominated_mask(v, window)
    assert mask.tolist() == [dominates(v, w, order) for w in window]
