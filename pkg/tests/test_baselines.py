import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sdiskyline.baselines import (
    OracleBoundError,
    Window,
    normalized,
    run_bnl,
    run_oracle,
    run_salsa,
    run_sfs,
    salsa_order,
    sfs_order,
)
from sdiskyline.core import Dataset, OrderSpec, dominates
from sdiskyline.datagen import GenSpec, generate

from conftest import SAMPLE_SKYLINE, random_dataset

ALGOS = [run_bnl, run_sfs, run_salsa]


@pytest.mark.parametrize("algo", ALGOS)
def test_sample_skyline(sample, algo):
    assert algo(sample)[0].members == SAMPLE_SKYLINE


def test_oracle_trivia(sample):
    assert run_oracle(sample).members == SAMPLE_SKYLINE
    assert run_oracle(Dataset([[4.0, 2.0]])).members == {0}
    assert run_oracle(Dataset([[1.0, 1.0], [2.0, 1.0]])).members == {0}


def test_oracle_bound():
    data = Dataset(np.zeros((11, 1)))
    with pytest.raises(OracleBoundError, match="n <= 10"):
        run_oracle(data, max_n=10)


@pytest.mark.parametrize("algo", ALGOS)
def test_identical_tuples(algo):
    data = Dataset(np.ones((7, 3)))
    assert algo(data)[0].members == set(range(7))


def test_sfs_on_a_chain():
    # t0 > t1 > ... > t9 presented in scrambled order
    v = np.arange(10, dtype=float)[:, None] * np.ones((1, 3))
    rng = np.random.default_rng(0)
    data = Dataset(v[rng.permutation(10)])
    result, report = run_sfs(data)
    assert result.size == 1
    assert report.dominance_comparisons == 9


def test_salsa_stops_after_all_zero_tuple():
    rng = np.random.default_rng(3)
    v = rng.random((200, 4)) * 0.9 + 0.1
    v[42] = 0.0
    result, report = run_salsa(Dataset(v))
    assert result.members == {42}
    assert report.early_stop
    assert report.dominance_comparisons == 0
    v[7] = 0.0
    assert run_salsa(Dataset(v))[0].members == {7, 42}


def test_random_cases_against_oracle():
    cases = [("independent", 4, run_bnl), ("correlated", 6, run_sfs), ("anti-correlated", 4, run_salsa)]
    for dist, d, algo in cases:
        data = generate(GenSpec(dist, 200, d, seed=5))
        assert algo(data)[0].members == run_oracle(data).members


def test_window_offer_counts():
    order = OrderSpec.uniform(2)
    w = Window(2)
    rows = np.array([[2.0, 3.0], [3.0, 2.0], [1.0, 1.0], [0.0, 5.0]])
    counts = []
    for i, r in enumerate(rows):
        counts.append(w.offer(i, r)[1])
    # 0; then 2 (both directions vs t0); t2 evicts both: 4; t3 vs t2: 2
    assert counts == [0, 2, 4, 2]
    assert w.ids == [2, 3]
    assert not dominates(rows[2], rows[3], order)
    # a pinned member is only ever tested as the dominator
    w.push(9, np.array([-1.0, 10.0]), pinned=True)
    inserted, c = w.offer(10, np.array([-0.5, 11.0]))
    assert not inserted and c == 2 + 2 + 1


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 150), st.integers(1, 7), st.integers(0, 2**32 - 1),
       st.sampled_from([None, 0.2, 0.5]), st.sampled_from([(1, 1), (1, -1), (-1, 1)]))
def test_all_algorithms_agree_with_oracle(n, d, seed, dup, flip):
    rng = np.random.default_rng(seed)
    v = random_dataset(rng, n, d, dup).values
    dirs = tuple("min" if (i % 2 == 0 and flip[0] > 0) or (i % 2 == 1 and flip[1] > 0) else "max"
                 for i in range(d))
    data = Dataset(v, OrderSpec(dirs))
    truth = run_oracle(data).members
    assert run_bnl(data, check_invariants=True)[0].members == truth
    assert run_sfs(data)[0].members == truth
    assert run_salsa(data)[0].members == truth
    assert run_salsa(data, use_stop_point=False)[0].members == truth


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 60), st.integers(1, 5), st.integers(0, 2**32 - 1), st.sampled_from([None, 0.25]))
def test_presort_keys_never_put_a_dominator_last(n, d, seed, dup):
    data = random_dataset(np.random.default_rng(seed), n, d, dup)
    for order in (sfs_order(data), salsa_order(data)):
        pos = np.empty(n, dtype=int)
        pos[order] = np.arange(n)
        for a in range(n):
            for b in range(n):
                if pos[a] < pos[b]:
                    assert not dominates(data.values[b], data.values[a], data.order)


def test_normalized_range():
    data = Dataset([[1.0, 5.0, 2.0], [3.0, 5.0, 0.0]], OrderSpec(("min", "min", "max")))
    norm = normalized(data)
    assert norm.tolist() == [[0.0, 0.0, 0.0], [1.0, 0.0, 1.0]]


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 120), st.integers(1, 6), st.integers(0, 2**32 - 1), st.sampled_from([None, 0.25]))
def test_alternative_sort_keys_are_exact(n, d, seed, dup):
    data = random_dataset(np.random.default_rng(seed), n, d, dup)
    truth = run_oracle(data).members
    assert run_sfs(data, key="sum")[0].members == truth
    result, report = run_salsa(data, key="sum")
    assert result.members == truth
    assert not report.early_stop


def test_unknown_sort_key(sample):
    from sdiskyline.core import StructuralError
    with pytest.raises(StructuralError):
        run_sfs(sample, key="volume")
    with pytest.raises(StructuralError):
        run_salsa(sample, key="max")
