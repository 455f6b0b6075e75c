"""Integer partitions, horizontal strips, binary profiles and cylindric plane partitions.

Partitions are plain tuples of positive integers in weakly decreasing order;
``()`` is the empty partition.  Profiles are 1-indexed binary strings.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable, Sequence

Partition = tuple[int, ...]


def partition(parts: Iterable[int]) -> Partition:
    """Validate ``parts`` and return the canonical tuple (trailing zeros stripped)."""
    parts = tuple(int(p) for p in parts)
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    if any(p <= 0 for p in parts):
        raise ValueError(f"partition parts must be positive: {parts}")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"partition must be weakly decreasing: {parts}")
    return parts


def size(lam: Partition) -> int:
    return sum(lam)


def conjugate(lam: Sequence[int]) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def contains(outer: Sequence[int], inner: Sequence[int]) -> bool:
    if len(inner) > len(outer):
        return False
    return all(a >= b for a, b in zip(outer, inner))


def is_horizontal_strip(outer: Sequence[int], inner: Sequence[int]) -> bool:
    """True iff ``outer/inner`` is a horizontal strip (at most one box per column)."""
    if not contains(outer, inner):
        return False
    oc, ic = conjugate(outer), conjugate(inner)
    ic = ic + (0,) * (len(oc) - len(ic))
    return all(a - b in (0, 1) for a, b in zip(oc, ic))


@lru_cache(maxsize=None)
def add_horizontal_strips(mu: Partition, max_size: int) -> tuple[Partition, ...]:
    """All ``lam`` with ``lam/mu`` a horizontal strip of size at most ``max_size``.

    Uses interlacing: lam_1 >= mu_1 >= lam_2 >= mu_2 >= ... >= lam_{l+1} >= 0.
    """
    if max_size < 0:
        return ()
    ranges = [range(mu[0], mu[0] + max_size + 1)] if mu else [range(0, max_size + 1)]
    for t in range(1, len(mu) + 1):
        upper = mu[t - 1]
        lower = mu[t] if t < len(mu) else 0
        ranges.append(range(lower, upper + 1))
    base = sum(mu)
    out = []
    for parts in product(*ranges):
        if sum(parts) - base <= max_size:
            out.append(partition(parts))
    return tuple(sorted(out, key=lambda p: (sum(p), p)))


@lru_cache(maxsize=None)
def remove_horizontal_strips(lam: Partition) -> tuple[Partition, ...]:
    """All ``mu`` contained in ``lam`` with ``lam/mu`` a horizontal strip (``lam`` included)."""
    ranges = [range(lam[t + 1] if t + 1 < len(lam) else 0, lam[t] + 1) for t in range(len(lam))]
    out = [partition(parts) for parts in product(*ranges)]
    return tuple(sorted(out, key=lambda p: (sum(p), p)))


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n``, largest first part first."""
    def gen(rest, cap):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail
    return tuple(gen(n, n))


def partitions_up_to(n: int) -> list[Partition]:
    return [p for k in range(n + 1) for p in partitions_of(k)]


def format_partition(lam: Sequence[int]) -> str:
    return "[" + ",".join(str(p) for p in lam) + "]"


@dataclass(frozen=True)
class Profile:
    """A binary string ``pi_1 ... pi_T``; positions are 1-indexed and periodic."""

    bits: str

    def __post_init__(self):
        if any(b not in "01" for b in self.bits):
            raise ValueError(f"profile must be a 0/1 string, got {self.bits!r}")

    def __str__(self):
        return self.bits

    def __len__(self):
        return len(self.bits)

    @property
    def T(self) -> int:
        return len(self.bits)

    @property
    def zeros(self) -> int:
        return self.bits.count("0")

    @property
    def ones(self) -> int:
        return self.bits.count("1")

    @property
    def is_cylindric(self) -> bool:
        return self.zeros >= 1 and self.ones >= 1

    def require_cylindric(self) -> "Profile":
        if not self.is_cylindric:
            raise ValueError(f"profile {self.bits!r} needs at least one 0 and one 1")
        return self

    def __getitem__(self, k: int) -> int:
        """Bit at 1-indexed position ``k``, extended periodically to all integers."""
        return int(self.bits[(k - 1) % self.T])


def parse_profile(text: str) -> Profile:
    """Parse a profile used cylindrically: rejects strings without both a 0 and a 1."""
    return Profile(text.strip()).require_cylindric()


def partition_to_profile(lam: Sequence[int]) -> Profile:
    """Minimal profile of ``lam`` read from the top-right corner to the bottom-left."""
    lam = tuple(lam)
    out = []
    for t in range(len(lam) - 1, -1, -1):
        nxt = lam[t + 1] if t + 1 < len(lam) else 0
        out.append("1" * (lam[t] - nxt) + "0")
    return Profile("".join(out))


def profile_to_partition(pi: Profile) -> Partition:
    """Inverse reading: each 0 is a part equal to the number of 1s before it."""
    ones = 0
    parts = []
    for b in pi.bits:
        if b == "1":
            ones += 1
        else:
            parts.append(ones)
    return partition(sorted(parts, reverse=True))


def inversions(pi: Profile) -> list[tuple[int, int]]:
    bits = pi.bits
    return [(i + 1, j + 1) for i in range(len(bits)) for j in range(i + 1, len(bits))
            if bits[i] == "1" and bits[j] == "0"]


def profile_covers(pi: Profile, pi2: Profile) -> bool:
    """True iff ``pi2`` is obtained from ``pi`` by swapping an adjacent ``01`` into ``10``."""
    if len(pi) != len(pi2) or pi.ones != pi2.ones:
        raise ValueError(f"incomparable strings {pi} and {pi2}")
    diff = [k for k in range(len(pi)) if pi.bits[k] != pi2.bits[k]]
    if len(diff) != 2 or diff[1] != diff[0] + 1:
        return False
    i = diff[0]
    return pi.bits[i:i + 2] == "01" and pi2.bits[i:i + 2] == "10"


def rotate_profile(pi: Profile) -> Profile:
    """sigma(pi)_i = pi_{i+1}, cyclically."""
    return Profile(pi.bits[1:] + pi.bits[:1])


def reverse_complement(pi: Profile) -> Profile:
    return Profile("".join("1" if b == "0" else "0" for b in reversed(pi.bits)))


@dataclass(frozen=True)
class CPP:
    """Cylindric plane partition: slices ``(mu^0, ..., mu^T)`` with ``mu^0 == mu^T``."""

    profile: Profile
    slices: tuple[Partition, ...]

    def __post_init__(self):
        object.__setattr__(self, "slices", tuple(partition(s) for s in self.slices))
        problem = cpp_violation(self.profile, self.slices)
        if problem:
            raise ValueError(problem)

    @property
    def weight(self) -> int:
        return cpp_weight(self)

    def __str__(self):
        return "[" + ",".join(format_partition(s) for s in self.slices) + "]"


def cpp_violation(pi: Profile, slices: Sequence[Partition]) -> str | None:
    """Describe the first violated CPP condition, or ``None`` when valid."""
    if not pi.is_cylindric:
        return f"profile {pi.bits!r} needs at least one 0 and one 1"
    if len(slices) != pi.T + 1:
        return f"expected {pi.T + 1} slices for profile {pi.bits}, got {len(slices)}"
    if slices[0] != slices[-1]:
        return f"first slice {format_partition(slices[0])} differs from last {format_partition(slices[-1])}"
    for k in range(1, pi.T + 1):
        prev, cur = slices[k - 1], slices[k]
        if pi[k] == 1 and not is_horizontal_strip(cur, prev):
            return f"slice {k}: {format_partition(cur)}/{format_partition(prev)} is not a horizontal strip"
        if pi[k] == 0 and not is_horizontal_strip(prev, cur):
            return f"slice {k}: {format_partition(prev)}/{format_partition(cur)} is not a horizontal strip"
    return None


def cpp_weight(c: CPP) -> int:
    return sum(sum(s) for s in c.slices[1:])


def cpp_refined_weight(c: CPP) -> tuple[int, ...]:
    return tuple(sum(s) for s in c.slices[1:])


def constant_cpp(pi: Profile, gamma: Partition) -> CPP:
    return CPP(pi, (gamma,) * (pi.T + 1))


def rotate_cpp(c: CPP) -> CPP:
    s = c.slices
    return CPP(rotate_profile(c.profile), s[1:] + (s[1],))


def reflect_cpp(c: CPP) -> CPP:
    """Read the slices backwards; the profile becomes its reverse complement."""
    return CPP(reverse_complement(c.profile), tuple(reversed(c.slices)))


def iter_cpps(pi: Profile, max_weight: int):
    """Yield every CPP with profile ``pi`` and weight at most ``max_weight``.

    Plain depth-first generation; the series module has a faster counter.
    """
    pi.require_cylindric()
    T = pi.T

    def extend(slices, weight):
        k = len(slices)
        if k == T + 1:
            if slices[-1] == slices[0]:
                yield CPP(pi, tuple(slices))
            return
        prev = slices[-1]
        if pi[k] == 1:
            nexts = add_horizontal_strips(prev, max_weight - weight - sum(prev))
        else:
            nexts = remove_horizontal_strips(prev)
        for nxt in nexts:
            if weight + sum(nxt) <= max_weight:
                yield from extend(slices + [nxt], weight + sum(nxt))

    for start in partitions_up_to(max_weight):
        yield from extend([start], 0)
