"""Halves: quadrangulations with a marked edge whose other vertices have degree >= 3.

Two constructions connect halves with quadrangulations that have parallel
edges.  ``extract_half`` cuts one region out of a parallel class and keeps a
single bounding edge.  ``double_half`` glues a half to a copy of itself
rotated by a half turn (``x`` onto the copy of ``y`` and vice versa, the
marked edge onto its copy) and adds a second copy of the marked edge, which
gives an irreducible quadrangulation of order ``2n - 2`` with a double edge.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .canonical import CanonicalCode, rooted_code
from .errors import (
    BridgeMarkedEdge,
    InvalidHalf,
    LowDegreeInterior,
    MultipleMarkedEdges,
    NotAQuadrangulation,
    NotParallel,
    ResultNotHalf,
)
from .planemap import ParallelClass, PlaneMap


@dataclass(frozen=True)
class Half:
    map: PlaneMap
    v: int
    w: int
    marked_edge: int

    @property
    def order(self) -> int:
        return self.map.num_vertices

    @property
    def marked_darts(self) -> tuple[int, int]:
        """(dart at v, dart at w) of the marked edge."""
        d = 2 * self.marked_edge
        if int(self.map.vertex_of[d]) == self.v:
            return d, d + 1
        return d + 1, d

    def code(self, reflect: bool = True) -> CanonicalCode:
        """Invariant of the map together with its (unordered) marked edge."""
        return rooted_code(self.map, self.marked_darts, reflect)

    def degree_sum(self) -> int:
        return self.map.degree(self.v) + self.map.degree(self.w)


def validate_half(m: PlaneMap, v: int, w: int) -> Half:
    if not m.is_quadrangulation():
        raise NotAQuadrangulation(repr(m))
    vof = m.vertex_of
    between = [d >> 1 for d in m.rotation(v) if int(vof[d ^ 1]) == w]
    if v == w or not between:
        raise InvalidHalf(f"vertices {v} and {w} are not adjacent")
    if len(between) > 1:
        raise MultipleMarkedEdges(f"{len(between)} edges join {v} and {w}")
    deg = m.degrees
    low = [z for z in m.vertices() if z not in (v, w) and deg[z] < 3]
    if low:
        raise LowDegreeInterior(f"unmarked vertices of degree < 3: {low}")
    return Half(m, v, w, between[0])


def _choose_region(cls: ParallelClass, strategy) -> int:
    if strategy == "fewest":
        sizes = cls.region_sizes()
        return sizes.index(min(sizes))
    i = int(strategy)
    if not 0 <= i < cls.k:
        raise IndexError(f"region index {i} out of range for k={cls.k}")
    return i


def extract_half(g: PlaneMap, cls: ParallelClass | None = None, strategy="fewest") -> Half:
    """Half spanned by one region of a parallel class.

    Keeps the region's interior and the endpoints, drops every parallel edge
    except the one starting the region counterclockwise at ``cls.v``.
    ``strategy`` is ``"fewest"`` (ties to the lowest index) or a region index.
    """
    if not g.is_quadrangulation():
        raise NotAQuadrangulation(repr(g))
    if cls is None:
        classes = g.parallel_classes()
        if not classes:
            raise NotParallel("map has no parallel edges")
        cls = classes[0]
    if cls.k < 2:
        raise NotParallel("a parallel class needs at least two edges")
    i = _choose_region(cls, strategy)
    keep_vertices = set(cls.regions[i]) | {cls.v, cls.w}
    sub, table = g._induced(keep_vertices)
    kept = cls.edges[i]
    drop = [int(table[2 * e]) >> 1 for e in cls.edges if e != kept]
    h, table2 = sub._delete(drop)
    dv = int(table2[table[cls.darts[i]]])
    v = int(h.vertex_of[dv])
    w = int(h.vertex_of[dv ^ 1])
    try:
        return validate_half(h, v, w)
    except (InvalidHalf, NotAQuadrangulation) as exc:
        raise ResultNotHalf(f"extracted map is not a half: {exc}") from exc


def double_half(half: Half, side: int = 0, return_marks: bool = False):
    """Glue ``half`` to its half-turn copy and double the marked edge.

    ``side`` 0 puts the new edge in the face on the left of the marked edge
    read from ``v`` to ``w``; side 1 uses the other incident face.  With
    ``return_marks`` the result is ``(P, x, y, edges)`` where ``x`` and ``y``
    are the merged vertices and ``edges`` the two parallel edges.
    """
    f = half.map
    if side not in (0, 1):
        raise ValueError("side must be 0 or 1")
    try:
        validate_half(f, half.v, half.w)
    except (InvalidHalf, NotAQuadrangulation) as exc:
        raise InvalidHalf(str(exc)) from exc
    mx, my = half.marked_darts
    if side == 1:
        mx, my = my, mx
    fid = f.face_of
    if fid[mx] == fid[my]:
        raise BridgeMarkedEdge("the marked edge has the same face on both sides")
    n = f.num_darts
    rx, ry = f.rotation_from(mx), f.rotation_from(my)
    # merged y / x' and merged x / y'; the copy of the marked edge becomes the new edge
    cyc_y = [my] + ry[1:] + [mx + n] + [t + n for t in rx[1:]]
    cyc_x = [mx] + [t + n for t in ry[1:]] + [my + n] + rx[1:]
    sigma = np.concatenate([f.sigma, f.sigma + n])
    for cyc in (cyc_y, cyc_x):
        for i, d in enumerate(cyc):
            sigma[d] = cyc[(i + 1) % len(cyc)]
    p = PlaneMap(sigma)
    if return_marks:
        vof = p.vertex_of
        return p, int(vof[mx]), int(vof[my]), (mx >> 1, (mx + n) >> 1)
    return p


def double_half_both(half: Half) -> list[PlaneMap]:
    return [double_half(half, side) for side in (0, 1)]


def halves_of(q: PlaneMap, reflect: bool = True) -> Iterator[Half]:
    """Every half obtained by marking one single edge of ``q``, up to symmetry."""
    if not q.is_quadrangulation():
        return
    deg = q.degrees
    low = {z for z in q.vertices() if deg[z] < 3}
    if len(low) > 2:
        return
    vof = q.vertex_of
    found: dict[CanonicalCode, Half] = {}
    for e in range(q.num_edges):
        v, w = int(vof[2 * e]), int(vof[2 * e + 1])
        if not low <= {v, w}:
            continue
        try:
            h = validate_half(q, v, w)
        except InvalidHalf:
            continue
        found.setdefault(h.code(reflect), h)
    for c in sorted(found):
        yield found[c]
