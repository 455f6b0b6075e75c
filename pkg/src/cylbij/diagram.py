"""Cylindric diagrams and arbitrarily labelled cylindric diagrams (ALCDs).

A box of the cylindric diagram over a profile ``pi`` has coordinates
``(i, j, k)`` with ``pi_i = 1``, ``pi_j = 0`` and winding number ``k``.  Most
computations unroll the box to the pair ``(i, J)`` with ``J = j + k*T > i``,
i.e. a 1-step and a later 0-step of the periodically extended boundary.
Shifting both entries by ``T`` gives the same box.

In the unrolled picture the hook of ``(i, J)`` consists of the arm boxes
``(i, J')`` for 0-positions ``i < J' <= J`` and the leg boxes ``(I', J)`` for
1-positions ``i < I' < J``.  The box ``(i, J)`` lies on diagonal
``ones(1..i) + zeros(1..J-1)`` (taken mod ``T`` in ``1..T``); diagonal ``d``
runs below the boundary vertex between positions ``d`` and ``d+1``, i.e. the
slice ``mu^d`` of a cylindric plane partition.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple

from .partitions import Profile, reverse_complement, rotate_profile


class CylCoord(NamedTuple):
    i: int
    j: int
    k: int


class Cover:
    """Prefix counts and step lookups for the periodic extension of a profile."""

    def __init__(self, pi: Profile):
        pi.require_cylindric()
        self.pi = pi
        self.T = pi.T
        self.n = pi.zeros
        self.m = pi.ones
        self.one_pos = [t for t in range(1, self.T + 1) if pi[t] == 1]
        self.zero_pos = [t for t in range(1, self.T + 1) if pi[t] == 0]
        self._ones = [0]
        for t in range(1, self.T + 1):
            self._ones.append(self._ones[-1] + pi[t])

    def ones(self, t: int) -> int:
        """Number of 1s among positions ``1..t`` (negative for ``t < 0``)."""
        q, r = divmod(t, self.T)
        return q * self.m + self._ones[r]

    def zeros(self, t: int) -> int:
        q, r = divmod(t, self.T)
        return q * self.n + (r - self._ones[r])

    def nth_one(self, c: int) -> int:
        """The position ``t`` with ``pi_t = 1`` and ``ones(t) = c``."""
        q, r = divmod(c - 1, self.m)
        return q * self.T + self.one_pos[r]

    def nth_zero(self, c: int) -> int:
        q, r = divmod(c - 1, self.n)
        return q * self.T + self.zero_pos[r]

    def wrap(self, d: int) -> int:
        """Reduce a position to ``1..T``."""
        return (d - 1) % self.T + 1

    # boxes

    def unroll(self, c: CylCoord) -> tuple[int, int]:
        return c.i, c.j + c.k * self.T

    def normalize(self, i: int, J: int) -> CylCoord:
        shift = (i - 1) // self.T
        i, J = i - shift * self.T, J - shift * self.T
        j = self.wrap(J)
        return CylCoord(i, j, (J - j) // self.T)

    def diagonal(self, i: int, J: int) -> int:
        return self.wrap(self.ones(i) + self.zeros(J - 1))

    def hook_boxes(self, i: int, J: int) -> list[tuple[int, int]]:
        """Unrolled boxes in the hook of ``(i, J)``, the box itself included."""
        arm = [(i, t) for t in range(i + 1, J + 1) if self.pi[t] == 0]
        leg = [(t, J) for t in range(i + 1, J) if self.pi[t] == 1]
        return arm + leg

    # faces of the growth diagram: apex on diagonal d at depth s below the boundary

    def face_to_box(self, d: int, s: int) -> CylCoord:
        i = self.nth_one(self.ones(d) - s)
        J = self.nth_zero(self.zeros(d) + s + 1)
        return self.normalize(i, J)

    def box_to_face(self, c: CylCoord) -> tuple[int, int]:
        i, J = self.unroll(c)
        d = self.ones(i) + self.zeros(J - 1)
        s = self.zeros(J - 1) - self.zeros(d)
        return self.wrap(d), s


def check_coord(pi: Profile, c: CylCoord) -> CylCoord:
    """Return ``c`` as a CylCoord, raising ``ValueError`` naming the violated constraint."""
    c = CylCoord(*c)
    T = pi.T
    if not (1 <= c.i <= T and 1 <= c.j <= T):
        raise ValueError(f"{tuple(c)}: positions must lie in 1..{T}")
    if pi[c.i] != 1:
        raise ValueError(f"{tuple(c)}: pi_{c.i} != 1 in profile {pi}")
    if pi[c.j] != 0:
        raise ValueError(f"{tuple(c)}: pi_{c.j} != 0 in profile {pi}")
    if c.k < (1 if c.j < c.i else 0):
        raise ValueError(f"{tuple(c)}: winding number k out of range")
    return c


def hook(pi: Profile, c: CylCoord) -> int:
    c = check_coord(pi, c)
    return c.j - c.i + c.k * pi.T


def boxes_up_to_hook(pi: Profile, N: int) -> list[CylCoord]:
    T = pi.T
    out = []
    for i in range(1, T + 1):
        if pi[i] != 1:
            continue
        for j in range(1, T + 1):
            if pi[j] != 0:
                continue
            k = 1 if j < i else 0
            while j - i + k * T <= N:
                out.append(CylCoord(i, j, k))
                k += 1
    return sorted(out, key=lambda c: (c.k, c.i, c.j))


def hook_contains(pi: Profile, outer: CylCoord, b: CylCoord) -> bool:
    """True iff box ``b`` lies in the hook of box ``outer``."""
    T = pi.T
    a, A = outer.i, outer.j + outer.k * T
    i, J = b.i, b.j + b.k * T
    if i == a and J <= A:
        return True
    if (A - J) % T == 0:
        shift = (A - J) // T
        return a <= i + shift * T < A
    return False


@dataclass(frozen=True)
class ALCD:
    """Finitely supported labelling of the boxes of a cylindric diagram.

    ``labels`` holds ``(coord, label)`` pairs with positive labels, sorted by
    coordinate; absent boxes carry label 0.
    """

    profile: Profile
    labels: tuple[tuple[CylCoord, int], ...] = ()

    def __post_init__(self):
        self.profile.require_cylindric()
        merged: dict[CylCoord, int] = {}
        for c, lab in self.labels:
            c = check_coord(self.profile, c)
            if lab < 0:
                raise ValueError(f"{tuple(c)}: labels must be non-negative")
            if c in merged:
                raise ValueError(f"{tuple(c)}: duplicate coordinate")
            merged[c] = int(lab)
        object.__setattr__(self, "labels", tuple(sorted((c, v) for c, v in merged.items() if v)))

    @classmethod
    def from_mapping(cls, profile: Profile, labels: Mapping[CylCoord, int] | Iterable = ()):
        items = labels.items() if isinstance(labels, Mapping) else labels
        return cls(profile, tuple((CylCoord(*c), v) for c, v in items))

    def as_dict(self) -> dict[CylCoord, int]:
        return dict(self.labels)

    def label(self, c: CylCoord) -> int:
        return self.as_dict().get(CylCoord(*c), 0)

    def __bool__(self):
        return bool(self.labels)


def alcd_weight(d: ALCD) -> int:
    return sum(lab * hook(d.profile, c) for c, lab in d.labels)


def depth(d: ALCD) -> int:
    return max((c.k + 1 for c, _ in d.labels), default=0)


def cohook_weight(d: ALCD, b: CylCoord) -> int:
    b = check_coord(d.profile, b)
    return sum(lab for c, lab in d.labels if hook_contains(d.profile, c, b))


def diag_weights(d: ALCD) -> tuple[int, ...]:
    """``(|diag(1)|, ..., |diag(T)|)``: each label counted once per hook box on the diagonal."""
    cover = Cover(d.profile)
    out = [0] * d.profile.T
    for c, lab in d.labels:
        for i, J in cover.hook_boxes(*cover.unroll(c)):
            out[cover.diagonal(i, J) - 1] += lab
    return tuple(out)


def diag_weight(d: ALCD, k: int) -> int:
    if not 1 <= k <= d.profile.T:
        raise ValueError(f"diagonal index {k} outside 1..{d.profile.T}")
    return diag_weights(d)[k - 1]


def corner(pi: Profile, i: int) -> CylCoord:
    """Coordinates of the inside-corner box between positions ``i`` and ``i+1``."""
    cover = Cover(pi)
    return cover.normalize(i, i + 1)


def _swap_positions(pi: Profile, i: int) -> Profile:
    T = pi.T
    bits = list(pi.bits)
    a, b = (i - 1) % T, i % T
    bits[a], bits[b] = bits[b], bits[a]
    return Profile("".join(bits))


def _readdress(cover_to: Cover, labels, i: int) -> tuple[tuple[CylCoord, int], ...]:
    T = cover_to.T

    def tau(p):
        r = (p - i) % T
        return p + 1 if r == 0 else p - 1 if r == 1 else p

    out = []
    for c, lab in labels:
        a, J = c.i, c.j + c.k * T
        out.append((cover_to.normalize(tau(a), tau(J)), lab))
    return tuple(out)


def remove_inside_corner(d2: ALCD, i: int) -> tuple[int, ALCD]:
    """Remove the inside corner between positions ``i`` and ``i+1``.

    Returns ``(m, d)`` where ``m`` is the corner label and ``d`` lives on the
    profile with bits ``i, i+1`` swapped from ``10`` to ``01``.  Every other box
    keeps its place in the plane; boxes in the corner's row or column lose one
    from their hook length.
    """
    pi2 = d2.profile
    if not (pi2[i] == 1 and pi2[i + 1] == 0):
        raise ValueError(f"not an inside corner: positions {i},{i + 1} of {pi2} are not 1,0")
    c0 = corner(pi2, i)
    m = 0
    rest = []
    for c, lab in d2.labels:
        if c == c0:
            m = lab
        else:
            rest.append((c, lab))
    pi = _swap_positions(pi2, i)
    return m, ALCD(pi, _readdress(Cover(pi), rest, i))


def add_inside_corner(m: int, d: ALCD, i: int) -> ALCD:
    """Inverse of :func:`remove_inside_corner`."""
    pi = d.profile
    if not (pi[i] == 0 and pi[i + 1] == 1):
        raise ValueError(f"cannot add inversion here: positions {i},{i + 1} of {pi} are not 0,1")
    if m < 0:
        raise ValueError("corner label must be non-negative")
    pi2 = _swap_positions(pi, i)
    labels = _readdress(Cover(pi2), d.labels, i)
    if m:
        labels += ((corner(pi2, i), m),)
    return ALCD(pi2, labels)


def rotate_alcd(d: ALCD) -> ALCD:
    """Carry ``d`` to the rotated profile; every box keeps its hook length."""
    pi = rotate_profile(d.profile)
    cover = Cover(pi)
    T = pi.T
    return ALCD(pi, tuple((cover.normalize(c.i - 1, c.j + c.k * T - 1), lab) for c, lab in d.labels))


def reflect_alcd(d: ALCD) -> ALCD:
    """Read positions backwards: ``(i, j, k) -> (T+1-j, T+1-i, k)`` over the reverse complement."""
    T = d.profile.T
    return ALCD(reverse_complement(d.profile),
                tuple((CylCoord(T + 1 - c.j, T + 1 - c.i, c.k), lab) for c, lab in d.labels))


def iter_alcds(pi: Profile, max_weight: int):
    """Yield every ALCD over ``pi`` with weight at most ``max_weight``."""
    boxes = boxes_up_to_hook(pi, max_weight)
    hooks = [hook(pi, c) for c in boxes]

    def rec(t, budget, chosen):
        if t == len(boxes):
            yield ALCD(pi, tuple(chosen))
            return
        h = hooks[t]
        for lab in range(budget // h + 1):
            if lab:
                chosen.append((boxes[t], lab))
            yield from rec(t + 1, budget - lab * h, chosen)
            if lab:
                chosen.pop()

    yield from rec(0, max_weight, [])
