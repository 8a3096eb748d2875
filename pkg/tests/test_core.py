import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from mx1 import (
    DyadicWord,
    MapParams,
    affine_coefficients,
    detect_cycle,
    dyadic_word,
    step,
    stopping_time,
    trajectory,
)

P3 = MapParams(3)
P5 = MapParams(5)

params_st = st.sampled_from([P3, P5])


def test_map_params_rejects_other_multipliers():
    for bad in (1, 2, 4, 7, -3):
        with pytest.raises(ValueError):
            MapParams(bad)


def test_step_examples():
    assert step(8, P3) == 4
    assert step(3, P3) == 5
    assert step(1, P5) == 3
    assert step(7, P3) == 11


def test_step_rejects_nonpositive():
    with pytest.raises(ValueError):
        step(0, P3)
    with pytest.raises(ValueError):
        step(-4, P3)


def test_trajectory_examples():
    rec = trajectory(7, P3, 4)
    assert rec.iterates == (7, 11, 17, 26, 13)
    assert rec.word.bits == (1, 1, 1, 0)
    rec = trajectory(11, P3, 4)
    assert rec.iterates == (11, 17, 26, 13, 20)
    assert rec.word.bits == (1, 1, 0, 1)


def test_trajectory_zero_iterations():
    rec = trajectory(42, P5, 0)
    assert rec.iterates == (42,)
    assert len(rec.word) == 0


def test_dyadic_word_examples():
    assert dyadic_word(3, P3, 3).bits == (1, 1, 0)
    assert dyadic_word(15, P3, 4).bits == (1, 1, 1, 1)


def test_word_counts():
    w = DyadicWord((1, 1, 0, 1, 0))
    assert w.k2 == 3
    assert w.k1 == 2
    assert len(w) == 5


def test_word_rejects_bad_bits():
    with pytest.raises(ValueError):
        DyadicWord((0, 2))
    with pytest.raises(ValueError):
        DyadicWord.from_string("01x")


def test_stopping_time_examples():
    assert stopping_time(3, P3, 10) == 4
    assert stopping_time(7, P3, 4) is None
    for n in (2, 4, 6, 100):
        assert stopping_time(n, P3, 1) == 1


def test_stopping_time_rejects_n_below_two():
    with pytest.raises(ValueError):
        stopping_time(1, P3, 10)


def test_affine_coefficients_single_bit():
    c1 = affine_coefficients(DyadicWord((1,)), P3)
    assert (c1.a, c1.b, c1.c) == (3, 2, 1)
    c0 = affine_coefficients(DyadicWord((0,)), P3)
    assert (c0.a, c0.b, c0.c) == (1, 2, 0)


def test_affine_coefficients_oracle_110():
    # independent oracle: run the trajectory of 3 and solve for c
    rec = trajectory(3, P3, 3)
    a, b = 3 ** rec.word.k2, 2 ** 3
    c_oracle = b * rec.iterates[-1] - a * rec.start
    got = affine_coefficients(rec.word, P3)
    assert (got.a, got.b, got.c) == (a, b, c_oracle)
    assert c_oracle == 5


def test_detect_cycle_examples():
    assert detect_cycle(1, P3, 10) == (1, 2)
    assert detect_cycle(1, P5, 10) == (1, 3, 8, 4, 2)
    assert detect_cycle(7, P3, 2) is None


@given(n=st.integers(1, 10 ** 9), k=st.integers(0, 30), params=params_st)
def test_affine_identity(n, k, params):
    rec = trajectory(n, params, k)
    co = affine_coefficients(rec.word, params)
    assert co.b * rec.iterates[-1] == co.a * n + co.c


@given(n=st.integers(1, 10 ** 9), k=st.integers(0, 25), params=params_st)
def test_word_matches_iterate_parities(n, k, params):
    rec = trajectory(n, params, k)
    assert all(rec.word[j] == rec.iterates[j] % 2 for j in range(k))


@given(n=st.integers(1, 10 ** 6), q=st.integers(0, 100), k=st.integers(1, 20),
       params=params_st)
def test_word_periodicity(n, q, k, params):
    assert dyadic_word(n + (1 << k) * q, params, k) == dyadic_word(n, params, k)


@pytest.mark.parametrize("params", [P3, P5])
@pytest.mark.parametrize("k", [1, 4, 8, 12])
def test_word_completeness_exhaustive(params, k):
    # any 2^k consecutive integers realize all 2^k words, each once
    words = {dyadic_word(n, params, k).bits for n in range(5, 5 + (1 << k))}
    assert len(words) == 1 << k


@given(n=st.integers(2, 10 ** 6), k=st.integers(1, 25), params=params_st)
@settings(max_examples=200)
def test_stopping_time_strict_definition(n, k, params):
    rec = trajectory(n, params, k)
    survived = all(v >= n for v in rec.iterates[1:])
    chi = stopping_time(n, params, k)
    assert (chi is None) == survived
    if chi is not None:
        assert rec.iterates[chi] < n
        assert all(v >= n for v in rec.iterates[1:chi])
