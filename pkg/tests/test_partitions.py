import itertools

import pytest
from hypothesis import given, strategies as st

from cylbij.partitions import (
    CPP,
    Profile,
    add_horizontal_strips,
    conjugate,
    constant_cpp,
    contains,
    cpp_refined_weight,
    cpp_weight,
    inversions,
    is_horizontal_strip,
    iter_cpps,
    parse_profile,
    partition,
    partition_to_profile,
    partitions_of,
    partitions_up_to,
    profile_covers,
    profile_to_partition,
    reflect_cpp,
    remove_horizontal_strips,
    rotate_cpp,
    rotate_profile,
)

partitions = st.lists(st.integers(1, 8), max_size=6).map(lambda xs: tuple(sorted(xs, reverse=True)))
profiles = st.text("01", min_size=2, max_size=7).filter(lambda s: "0" in s and "1" in s).map(Profile)


def strip_by_rows(outer, inner):
    # interlacing: outer_1 >= inner_1 >= outer_2 >= inner_2 >= ...
    if not contains(outer, inner) or len(outer) > len(inner) + 1:
        return False
    return all(inner[t] >= (outer[t + 1] if t + 1 < len(outer) else 0) for t in range(len(inner)))


def test_partition_validation():
    assert partition([3, 1, 0, 0]) == (3, 1)
    with pytest.raises(ValueError):
        partition([1, 2])
    with pytest.raises(ValueError):
        partition([2, -1])


def test_partition_counts():
    assert [len(partitions_of(n)) for n in range(11)] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
    assert len(partitions_up_to(5)) == 1 + 1 + 2 + 3 + 5 + 7


def test_conjugate_involution_exhaustive():
    for n in range(31):
        for lam in partitions_of(n):
            mu = conjugate(lam)
            assert sum(mu) == n
            assert conjugate(mu) == lam


def test_conjugate_examples():
    assert conjugate((5, 3, 3, 2)) == (4, 4, 3, 1, 1)
    assert conjugate(()) == ()


def test_horizontal_strip_two_characterisations():
    for a in partitions_up_to(8):
        for b in partitions_up_to(8):
            assert is_horizontal_strip(a, b) == strip_by_rows(a, b), (a, b)


def test_horizontal_strip_examples():
    assert is_horizontal_strip((4, 2), (2, 1))
    assert not is_horizontal_strip((2, 2), (1, 1))
    assert not is_horizontal_strip((2,), (3,))


def test_strip_enumerators_are_adjoint():
    for n in range(9):
        for mu in partitions_of(n):
            for r in range(5):
                ups = set(add_horizontal_strips(mu, r))
                brute = {lam for lam in partitions_up_to(n + r) if sum(lam) - n <= r and is_horizontal_strip(lam, mu)}
                assert ups == brute
                for lam in ups:
                    assert mu in remove_horizontal_strips(lam)
            downs = set(remove_horizontal_strips(mu))
            assert downs == {nu for nu in partitions_up_to(n) if is_horizontal_strip(mu, nu)}


def test_profile_parsing():
    pi = parse_profile("10100")
    assert (pi.T, pi.ones, pi.zeros) == (5, 2, 3)
    assert [pi[k] for k in range(0, 7)] == [0, 1, 0, 1, 0, 0, 1]
    for bad in ("11", "000", "", "10a"):
        with pytest.raises(ValueError):
            parse_profile(bad)


def test_profile_partition_roundtrip():
    assert partition_to_profile((2, 1)) == Profile("1010")
    for n in range(9):
        for lam in partitions_of(n):
            assert profile_to_partition(partition_to_profile(lam)) == lam
            assert len(inversions(partition_to_profile(lam))) == n


def test_profile_covers():
    assert profile_covers(Profile("0110"), Profile("1010"))
    assert not profile_covers(Profile("1010"), Profile("0110"))
    assert not profile_covers(Profile("0011"), Profile("1100"))
    with pytest.raises(ValueError):
        profile_covers(Profile("01"), Profile("011"))


def test_rotation_of_profile_and_cpp():
    assert rotate_profile(Profile("10100")) == Profile("01001")
    pi = Profile("110")
    for c in iter_cpps(pi, 5):
        r = rotate_cpp(c)
        assert r.profile == rotate_profile(pi)
        assert cpp_weight(r) == cpp_weight(c)
        back = c
        for _ in range(pi.T):
            back = rotate_cpp(back)
        assert back == c


def test_reflection_is_involution():
    for c in iter_cpps(Profile("1001"), 5):
        assert reflect_cpp(reflect_cpp(c)) == c
        assert cpp_weight(reflect_cpp(c)) == cpp_weight(c)


def test_example_cpp():
    c = CPP(Profile("11010"), ((3, 2, 2), (5, 3, 2), (6, 4, 3, 2), (4, 3, 2), (4, 3, 2, 1), (3, 2, 2)))
    assert cpp_weight(c) == 51
    assert cpp_refined_weight(c) == (10, 15, 9, 10, 7)
    with pytest.raises(ValueError):
        CPP(Profile("10100"), c.slices)


def test_invalid_cpp_messages():
    pi = Profile("10")
    with pytest.raises(ValueError, match="differs"):
        CPP(pi, ((1,), (2,), (2,)))
    with pytest.raises(ValueError, match="horizontal strip"):
        CPP(pi, ((), (1, 1), ()))
    with pytest.raises(ValueError, match="expected 3 slices"):
        CPP(pi, ((),))


def test_constant_cpp():
    c = constant_cpp(Profile("100"), (2, 1))
    assert cpp_weight(c) == 9


def test_iter_cpps_brute_force():
    pi = Profile("101")
    found = set(iter_cpps(pi, 4))
    pool = partitions_up_to(4)
    brute = set()
    for seq in itertools.product(pool, repeat=3):
        slices = (seq[-1],) + seq
        if sum(map(sum, seq)) <= 4:
            try:
                brute.add(CPP(pi, slices))
            except ValueError:
                pass
    assert found == brute


@given(partitions)
def test_conjugate_property(lam):
    assert conjugate(conjugate(lam)) == lam
    assert sum(conjugate(lam)) == sum(lam)


@given(partitions, partitions)
def test_strip_property(a, b):
    assert is_horizontal_strip(a, b) == strip_by_rows(a, b)


@given(profiles)
def test_rotation_has_period_T(pi):
    r = pi
    for _ in range(pi.T):
        r = rotate_profile(r)
    assert r == pi
