"""Truncated integer power series and the generating functions on both sides of the identity.

Three independent routes to the same series for a profile ``pi``:

* :func:`enumerate_cpp_series` counts cylindric plane partitions with a
  transfer-matrix recursion over partitions;
* :func:`enumerate_pairs_series` generates ``(gamma, ALCD)`` pairs one by one;
* :func:`borodin_rhs_series` expands the hook product.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Sequence

from .diagram import boxes_up_to_hook, hook
from .partitions import (
    Profile,
    add_horizontal_strips,
    inversions,
    partitions_of,
    partitions_up_to,
    remove_horizontal_strips,
)


@dataclass(frozen=True)
class TruncatedSeries:
    """Integer power series modulo ``z^(N+1)``."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a truncated series needs at least the constant coefficient")
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    @classmethod
    def one(cls, N: int) -> "TruncatedSeries":
        return cls((1,) + (0,) * N)

    @classmethod
    def from_counts(cls, counts: Sequence[int]) -> "TruncatedSeries":
        return cls(tuple(counts))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, w: int) -> int:
        return self.coeffs[w]

    def __iter__(self):
        return iter(self.coeffs)

    def _check(self, other: "TruncatedSeries"):
        if other.order != self.order:
            raise ValueError(f"truncation orders differ: {self.order} vs {other.order}")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        return TruncatedSeries(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        N = self.order
        out = [0] * (N + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j in range(N + 1 - i):
                    out[i + j] += a * other.coeffs[j]
        return TruncatedSeries(tuple(out))

    def times_geometric(self, h: int) -> "TruncatedSeries":
        """Multiply by ``1/(1 - z^h)``."""
        if h < 1:
            raise ValueError("geometric factor needs h >= 1")
        out = list(self.coeffs)
        for w in range(h, len(out)):
            out[w] += out[w - h]
        return TruncatedSeries(tuple(out))

    def times_binomial(self, h: int) -> "TruncatedSeries":
        """Multiply by ``1 - z^h``."""
        out = list(self.coeffs)
        for w in range(len(out) - 1, h - 1, -1):
            out[w] -= out[w - h]
        return TruncatedSeries(tuple(out))

    def first_mismatch(self, other: "TruncatedSeries") -> int | None:
        self._check(other)
        for w, (a, b) in enumerate(zip(self.coeffs, other.coeffs)):
            if a != b:
                return w
        return None


def hook_product(hooks: Iterable[int], N: int) -> TruncatedSeries:
    """``prod 1/(1 - z^h)`` over ``hooks``, truncated at ``z^N``."""
    s = TruncatedSeries.one(N)
    for h in hooks:
        if h <= N:
            s = s.times_geometric(h)
    return s


def _transfer(pi: Profile, N: int, starts) -> TruncatedSeries:
    """Trace of the product of the step matrices, restricted to the given start slices.

    The state after ``k`` steps maps each slice ``mu^k`` to the series of
    weights ``|mu^1| + ... + |mu^k|`` of the partial sequences reaching it.
    """
    total = [0] * (N + 1)
    for rho in starts:
        state = {rho: [1] + [0] * N}
        for k in range(1, pi.T + 1):
            nxt: dict = defaultdict(lambda: [0] * (N + 1))
            for mu, poly in state.items():
                low = next(w for w, c in enumerate(poly) if c)
                if pi[k] == 1:
                    succ = add_horizontal_strips(mu, N - low - sum(mu))
                else:
                    succ = remove_horizontal_strips(mu)
                for lam in succ:
                    shift = sum(lam)
                    target = nxt[lam]
                    for w in range(low, N + 1 - shift):
                        if poly[w]:
                            target[w + shift] += poly[w]
            state = {mu: poly for mu, poly in nxt.items() if any(poly)}
        if rho in state:
            for w, c in enumerate(state[rho]):
                total[w] += c
    return TruncatedSeries(tuple(total))


def enumerate_cpp_series(pi: Profile, N: int) -> TruncatedSeries:
    pi.require_cylindric()
    return _transfer(pi, N, partitions_up_to(N))


def enumerate_rpp_series(pi: Profile, N: int) -> TruncatedSeries:
    """Sequences with ``mu^0 = mu^T = ()``: reverse plane partitions of shape ``pi``."""
    if pi.T == 0:
        return TruncatedSeries.one(N)
    return _transfer(pi, N, [()])


def _label_weights(hooks: Sequence[int], budget: int):
    """Weight of every labelling of boxes with the given hooks, up to ``budget``."""
    def rec(t, used):
        if t == len(hooks):
            yield used
            return
        h = hooks[t]
        w = used
        while w <= budget:
            yield from rec(t + 1, w)
            w += h
    yield from rec(0, 0)


def enumerate_pairs_series(pi: Profile, N: int) -> TruncatedSeries:
    """Count pairs ``(gamma, d)`` by weight ``T*|gamma| + |d|``, one pair at a time."""
    pi.require_cylindric()
    T = pi.T
    hooks = [hook(pi, c) for c in boxes_up_to_hook(pi, N)]
    alcd_counts = [0] * (N + 1)
    for w in _label_weights(hooks, N):
        alcd_counts[w] += 1
    out = [0] * (N + 1)
    for g in range(N // T + 1):
        for _ in partitions_of(g):
            for w in range(N + 1 - T * g):
                out[T * g + w] += alcd_counts[w]
    return TruncatedSeries(tuple(out))


def borodin_rhs_series(pi: Profile, N: int) -> TruncatedSeries:
    """``prod_{n>=1} 1/(1 - z^(nT)) * prod_boxes 1/(1 - z^hook)``."""
    pi.require_cylindric()
    T = pi.T
    free = [n * T for n in range(1, N // T + 1)]
    return hook_product(free + [hook(pi, c) for c in boxes_up_to_hook(pi, N)], N)


def stanley_rhs_series(pi: Profile, N: int) -> TruncatedSeries:
    return hook_product([j - i for i, j in inversions(pi)], N)
