import itertools

import pytest
from hypothesis import given, strategies as st

from cylbij.diagram import boxes_up_to_hook, hook
from cylbij.partitions import Profile, iter_cpps, rotate_profile, reverse_complement
from cylbij.series import (
    TruncatedSeries,
    borodin_rhs_series,
    enumerate_cpp_series,
    enumerate_pairs_series,
    enumerate_rpp_series,
    hook_product,
    stanley_rhs_series,
)


def brute_cpp_counts(pi, N):
    counts = [0] * (N + 1)
    for c in iter_cpps(pi, N):
        counts[c.weight] += 1
    return counts


def test_series_arithmetic():
    a = TruncatedSeries((1, 2, 3))
    b = TruncatedSeries((0, 1, 1))
    assert list(a + b) == [1, 3, 4]
    assert list(a * b) == [0, 1, 3]
    assert list(TruncatedSeries.one(3).times_geometric(2)) == [1, 0, 1, 0]
    assert a.first_mismatch(a) is None
    assert a.first_mismatch(TruncatedSeries((1, 2, 4))) == 2
    with pytest.raises(ValueError):
        a + TruncatedSeries((1,))
    with pytest.raises(ValueError):
        TruncatedSeries(())
    with pytest.raises(ValueError):
        a.times_geometric(0)


@given(st.lists(st.integers(-5, 5), min_size=1, max_size=12), st.integers(1, 12))
def test_geometric_and_binomial_are_inverse(coeffs, h):
    s = TruncatedSeries(tuple(coeffs))
    assert s.times_geometric(h).times_binomial(h) == s
    assert s.times_binomial(h).times_geometric(h) == s


def test_profile_10_is_the_partition_function():
    expected = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
    pi = Profile("10")
    assert list(enumerate_cpp_series(pi, 10)) == expected
    assert list(enumerate_pairs_series(pi, 10)) == expected
    assert list(borodin_rhs_series(pi, 10)) == expected


def test_transfer_matrix_matches_brute_force():
    for bits in ("10", "110", "1001", "10100", "01011"):
        pi = Profile(bits)
        assert list(enumerate_cpp_series(pi, 7)) == brute_cpp_counts(pi, 7)


def test_hook_product_direct():
    assert list(hook_product([1, 1], 4)) == [1, 2, 3, 4, 5]
    assert list(hook_product([5], 4)) == [1, 0, 0, 0, 0]


def test_hook_product_rhs_from_hook_list():
    pi = Profile("10100")
    hooks = [hook(pi, c) for c in boxes_up_to_hook(pi, 10)]
    assert sorted(hooks)[:4] == [1, 1, 2, 3]
    assert borodin_rhs_series(pi, 10) == hook_product(hooks + [5, 10], 10)


@pytest.mark.parametrize("T", [2, 3, 4, 5])
def test_three_series_agree(T):
    for bits in itertools.product("01", repeat=T):
        if len(set(bits)) < 2:
            continue
        pi = Profile("".join(bits))
        lhs = enumerate_cpp_series(pi, 10)
        assert lhs == enumerate_pairs_series(pi, 10) == borodin_rhs_series(pi, 10)


def test_rotation_and_reflection_invariance():
    for bits in ("10100", "110100", "1001"):
        pi = Profile(bits)
        s = enumerate_cpp_series(pi, 10)
        assert enumerate_cpp_series(rotate_profile(pi), 10) == s
        assert enumerate_cpp_series(reverse_complement(pi), 10) == s


def test_reverse_plane_partition_small_cases():
    # a single box: reverse plane partitions of shape (1) are counted by 1/(1-z)
    assert list(enumerate_rpp_series(Profile("10"), 4)) == [1, 1, 1, 1, 1]
    assert list(stanley_rhs_series(Profile("01"), 4)) == [1, 0, 0, 0, 0]
    for T in range(1, 7):
        for bits in itertools.product("01", repeat=T):
            pi = Profile("".join(bits))
            assert enumerate_rpp_series(pi, 10) == stanley_rhs_series(pi, 10), pi


def test_non_cylindric_profile_rejected():
    with pytest.raises(ValueError):
        enumerate_cpp_series(Profile("111"), 3)
    with pytest.raises(ValueError):
        borodin_rhs_series(Profile("00"), 3)
