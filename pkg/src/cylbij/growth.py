"""Cylindric growth diagrams over the quotient poset G(n, m).

Plane convention: ``(x, y)`` is covered by ``(x+1, y)`` and ``(x, y+1)``, and
``(x, y) ~ (x+n, y-m)``.  The upper boundary starts at ``v_0 = (0, 0)``; a 1 in
the profile steps to ``(x, y+1)`` (up), a 0 steps to ``(x-1, y)`` (down), so
``v_T = (-n, m) ~ v_0``.

Everything weakly below the boundary is addressed as ``(d, s)``: the vertex
``v_d - s*(1, 1)`` on diagonal ``d`` (in ``1..T``) at depth ``s``.  The face
with apex ``(d, s)`` has bottom ``(d, s+1)`` and side vertices
``(d-1, s + [pi_d = 0])`` and ``(d+1, s + [pi_{d+1} = 1])``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

from .diagram import ALCD, Cover
from .local_rule import LocalRuleError, burge_down, burge_up
from .partitions import CPP, Partition, Profile, cpp_weight, format_partition, is_horizontal_strip


class CylVertex(NamedTuple):
    x: int
    y: int


def canonical(v, n: int, m: int) -> CylVertex:
    """Representative with ``0 <= x < n`` of the class of ``v`` in G(n, m)."""
    q = v[0] // n
    return CylVertex(v[0] - q * n, v[1] + q * m)


def covers(v, n: int, m: int) -> tuple[list[CylVertex], list[CylVertex]]:
    """``(upper covers, lower covers)`` of ``v``; the two entries of a list may coincide."""
    x, y = v
    up = [canonical((x + 1, y), n, m), canonical((x, y + 1), n, m)]
    down = [canonical((x - 1, y), n, m), canonical((x, y - 1), n, m)]
    return up, down


def face_vertices(v) -> tuple[CylVertex, CylVertex, CylVertex, CylVertex]:
    """``(u; v1, v2; w)`` for the unit square above ``u`` in the plane."""
    x, y = v
    return CylVertex(x, y), CylVertex(x + 1, y), CylVertex(x, y + 1), CylVertex(x + 1, y + 1)


def side_vertices(pi: Profile, d: int, s: int) -> tuple[tuple[int, int], tuple[int, int]]:
    """The lower covers of vertex ``(d, s)``: ``w - (0,1)`` and ``w - (1,0)``."""
    T = pi.T
    left = ((d - 2) % T + 1, s + (pi[d] == 0))
    right = (d % T + 1, s + (pi[d + 1] == 1))
    return left, right


class StabilizationError(RuntimeError):
    pass


@dataclass(frozen=True, eq=True)
class GrowthDiagram:
    """Vertex labels on rows ``0..rows`` and face labels on rows ``0..rows-1``.

    Row ``rows`` is constant ``gamma``; below it every vertex is ``gamma`` and
    every face is 0.
    """

    profile: Profile
    vertices: dict = field(hash=False)
    faces: dict = field(hash=False)
    gamma: Partition
    rows: int

    def plane_vertex(self, d: int, s: int) -> CylVertex:
        cover = Cover(self.profile)
        x, y = -cover.zeros(d) - s, cover.ones(d) - s
        return canonical((x, y), cover.n, cover.m)


def _fill_row(pi: Profile, known: dict, s: int, apex_row: int, compute, order: str) -> None:
    """Fill row ``s`` vertex by vertex once both side vertices of its face are known.

    The face used for diagonal ``d`` has its apex at ``(d, apex_row)``.
    """
    T = pi.T
    pending = list(range(1, T + 1))
    if order == "reverse":
        pending.reverse()
    while pending:
        progressed = False
        for d in list(pending):
            left, right = side_vertices(pi, d, apex_row)
            if left in known and right in known:
                known[(d, s)] = compute(d, left, right)
                pending.remove(d)
                progressed = True
        if not progressed:
            raise RuntimeError(f"no fillable vertex in row {s}; profile {pi} has a cyclic dependency")


def from_cpp(c: CPP, order: str = "forward") -> GrowthDiagram:
    """Grow the diagram downward from the upper boundary with the forward rule."""
    pi = c.profile
    T = pi.T
    vertices = {(d, 0): c.slices[d] for d in range(1, T + 1)}
    faces = {}
    limit = cpp_weight(c) + 2
    s = 0
    while len({vertices[(d, s)] for d in range(1, T + 1)}) > 1:
        if s >= limit:
            raise StabilizationError(f"no constant row within {limit} sweeps for {c}")

        def down(d, left, right, s=s):
            ell, nu = burge_down(vertices[left], vertices[right], vertices[(d, s)])
            faces[(d, s)] = ell
            return nu

        _fill_row(pi, vertices, s + 1, s, down, order)
        s += 1
    return GrowthDiagram(pi, vertices, faces, vertices[(T, s)], s)


def from_pair(gamma: Partition, d: ALCD, order: str = "forward") -> GrowthDiagram:
    """Build the diagram from a stable label and face labels, filling upward."""
    pi = d.profile
    T = pi.T
    cover = Cover(pi)
    faces = {}
    for c, lab in d.labels:
        faces[cover.box_to_face(c)] = lab
    rows = max((s + 1 for _, s in faces), default=0)
    for s in range(rows):
        for dd in range(1, T + 1):
            faces.setdefault((dd, s), 0)
    vertices = {(dd, rows): gamma for dd in range(1, T + 1)}
    for s in range(rows - 1, -1, -1):

        def up(dd, left, right, s=s):
            return burge_up(vertices[left], vertices[right], faces[(dd, s)], vertices[(dd, s + 1)])

        _fill_row(pi, vertices, s, s, up, order)
    return GrowthDiagram(pi, vertices, faces, gamma, rows)


def read_cpp(g: GrowthDiagram) -> CPP:
    T = g.profile.T
    top = [g.vertices[(d, 0)] for d in range(1, T + 1)]
    return CPP(g.profile, (top[-1],) + tuple(top))


def read_pair(g: GrowthDiagram) -> tuple[Partition, ALCD]:
    cover = Cover(g.profile)
    labels = tuple((cover.face_to_box(dd, s), lab) for (dd, s), lab in g.faces.items() if lab)
    return g.gamma, ALCD(g.profile, labels)


def validate(g: GrowthDiagram) -> list[str]:
    """Every violated growth-diagram condition, one message each."""
    pi = g.profile
    T = pi.T
    out = []
    for (d, s), lam in sorted(g.vertices.items()):
        for nb in side_vertices(pi, d, s):
            if nb in g.vertices and not is_horizontal_strip(lam, g.vertices[nb]):
                out.append(f"condition 1: edge {(d, s)} > {nb}: "
                           f"{format_partition(lam)}/{format_partition(g.vertices[nb])} is not a horizontal strip")
    bottom = {g.vertices.get((d, g.rows)) for d in range(1, T + 1)}
    if bottom != {g.gamma}:
        out.append(f"condition 2: row {g.rows} is not constant {format_partition(g.gamma)}")
    for s in range(g.rows):
        for d in range(1, T + 1):
            left, right = side_vertices(pi, d, s)
            lam, mu = g.vertices[(d, s)], g.vertices[(d, s + 1)]
            ell = g.faces.get((d, s), 0)
            try:
                ok = burge_up(g.vertices[left], g.vertices[right], ell, mu) == lam
            except LocalRuleError:
                ok = False
            if not ok:
                out.append(f"condition 3: face {(d, s)} with label {ell} does not satisfy the local rule")
    return out


def path_profile(pi: Profile, depths) -> Profile:
    """Profile of the path through vertices ``(d, depths[d-1])``, d = 1..T."""
    T = pi.T
    bits = []
    for d in range(1, T + 1):
        prev = depths[(d - 2) % T]
        gap = prev - depths[d - 1]
        if gap == (pi[d] == 0):
            bits.append("1")
        elif gap == -(pi[d] == 1):
            bits.append("0")
        else:
            raise ValueError(f"depths {list(depths)} do not trace a path at step {d}")
    return Profile("".join(bits))


def path_cpp(g: GrowthDiagram, depths) -> CPP:
    """Read the labels along a path below the upper boundary."""
    T = g.profile.T
    labels = [g.vertices.get((d, s), g.gamma) if s <= g.rows else g.gamma
              for d, s in zip(range(1, T + 1), depths)]
    return CPP(path_profile(g.profile, depths), (labels[-1],) + tuple(labels))


def render(g: GrowthDiagram) -> str:
    """ASCII table: one line of vertex labels per depth, face labels in between."""
    T = g.profile.T
    cells = [[format_partition(g.vertices[(d, s)]) for d in range(1, T + 1)] for s in range(g.rows + 1)]
    width = max(len(x) for row in cells for x in row) + 2
    lines = [f"profile {g.profile}   gamma {format_partition(g.gamma)}   rows {g.rows}",
             "diag  " + "".join(str(d).center(width) for d in range(1, T + 1))]
    for s in range(g.rows + 1):
        lines.append(f"s={s:<3} " + "".join(x.center(width) for x in cells[s]))
        if s < g.rows:
            lines.append("face  " + "".join(str(g.faces[(d, s)]).center(width) for d in range(1, T + 1)))
    return "\n".join(lines)
