"""The bijection psi: (partition, ALCD) -> CPP and its inverse phi."""

from __future__ import annotations

from .diagram import ALCD, diag_weights
from .growth import from_cpp, from_pair, read_cpp, read_pair
from .partitions import CPP, Partition, cpp_refined_weight, format_partition


class WeightError(AssertionError):
    """Raised when a computed image is not strongly weight preserving."""


def strong_weight_defects(gamma: Partition, d: ALCD, c: CPP) -> list[tuple[int, int, int]]:
    """``(k, |mu^k|, |gamma| + |diag(k)|)`` for every diagonal where the two sides differ."""
    if c.profile != d.profile:
        return [(0, -1, -1)]
    refined = cpp_refined_weight(c)
    diags = diag_weights(d)
    g = sum(gamma)
    return [(k, refined[k - 1], g + diags[k - 1])
            for k in range(1, c.profile.T + 1) if refined[k - 1] != g + diags[k - 1]]


def check_strong_weight(gamma: Partition, d: ALCD, c: CPP) -> bool:
    return not strong_weight_defects(gamma, d, c)


def _assert_strong(gamma, d, c):
    defects = strong_weight_defects(gamma, d, c)
    if defects:
        k, lhs, rhs = defects[0]
        raise WeightError(f"diagonal {k}: |mu^{k}| = {lhs} but |gamma| + |diag({k})| = {rhs} "
                          f"for gamma={format_partition(gamma)}, cpp={c}")


def psi(gamma: Partition, d: ALCD) -> CPP:
    c = read_cpp(from_pair(gamma, d))
    _assert_strong(gamma, d, c)
    return c


def phi(c: CPP) -> tuple[Partition, ALCD]:
    gamma, d = read_pair(from_cpp(c))
    _assert_strong(gamma, d, c)
    return gamma, d
