import pytest
from hypothesis import given, strategies as st

from cylbij.local_rule import LocalRuleError, burge_down, burge_up
from cylbij.partitions import add_horizontal_strips, is_horizontal_strip, partitions_up_to, remove_horizontal_strips

SMALL = partitions_up_to(8)


def test_golden_pair():
    alpha, beta = (6, 5, 5, 3), (6, 6, 5, 2)
    assert burge_down(alpha, beta, (7, 6, 5, 3, 1)) == (1, (6, 5, 4, 2))
    assert burge_up(alpha, beta, 1, (6, 5, 4, 2)) == (7, 6, 5, 3, 1)


def test_trivial_cases():
    assert burge_down((), (), ()) == (0, ())
    assert burge_up((), (), 0, ()) == ()
    # ell counts the first-row growth when everything else is empty
    assert burge_up((), (), 3, ()) == (3,)
    assert burge_down((), (), (3,)) == (3, ())


def test_preconditions():
    with pytest.raises(LocalRuleError):
        burge_down((2,), (1, 1), (2,))
    with pytest.raises(LocalRuleError):
        burge_up((1,), (1,), -1, ())
    with pytest.raises(LocalRuleError):
        burge_up((1, 1), (1,), 0, ())


def test_up_then_down_exhaustive():
    for alpha in SMALL:
        for beta in SMALL:
            below = set(remove_horizontal_strips(alpha)) & set(remove_horizontal_strips(beta))
            seen = set()
            for nu in below:
                for ell in range(4):
                    lam = burge_up(alpha, beta, ell, nu)
                    assert is_horizontal_strip(lam, alpha) and is_horizontal_strip(lam, beta)
                    assert burge_down(alpha, beta, lam) == (ell, nu)
                    assert lam not in seen
                    seen.add(lam)


def test_down_then_up_exhaustive():
    for alpha in partitions_up_to(6):
        for beta in partitions_up_to(6):
            above = set(add_horizontal_strips(alpha, 4)) & set(add_horizontal_strips(beta, 6))
            for lam in above:
                ell, nu = burge_down(alpha, beta, lam)
                assert ell >= 0
                assert burge_up(alpha, beta, ell, nu) == lam


def test_weight_condition():
    for alpha in partitions_up_to(5):
        for beta in partitions_up_to(5):
            for lam in set(add_horizontal_strips(alpha, 3)) & set(add_horizontal_strips(beta, 5)):
                ell, nu = burge_down(alpha, beta, lam)
                assert sum(lam) - sum(alpha) == sum(beta) - sum(nu) + ell


partitions = st.lists(st.integers(1, 12), max_size=8).map(lambda xs: tuple(sorted(xs, reverse=True)))


@given(partitions, st.data())
def test_roundtrip_property(lam, data):
    downs = remove_horizontal_strips(lam)
    alpha = data.draw(st.sampled_from(downs))
    beta = data.draw(st.sampled_from(downs))
    ell, nu = burge_down(alpha, beta, lam)
    assert burge_up(alpha, beta, ell, nu) == lam
