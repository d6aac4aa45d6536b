"""Connected plane maps stored as rotation systems.

A map on ``e`` edges has darts ``0..2e-1``; edge ``i`` owns darts ``2i`` and
``2i + 1`` so the edge involution is ``d ^ 1``.  ``sigma[d]`` is the next dart
counterclockwise around the vertex of ``d``.  Faces are the orbits of
``phi = sigma o alpha`` (first alpha, then sigma); the face of ``phi`` through
``d`` lies on the right of ``d``.  Corner ``c`` is the angle at the vertex of
``c`` swept counterclockwise from ``c`` to ``sigma[c]``.

The map with one vertex and no edge is represented by an empty ``sigma``.
"""
from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, Iterable, Mapping, Sequence

import numpy as np

from . import _kernels
from .errors import (
    CornersNotOnSameFace,
    DisconnectedResult,
    MalformedPairing,
    NotAQuadrangulation,
    NotConnected,
    NotGenusZero,
    UnknownVertex,
)


def alpha(d: int) -> int:
    return d ^ 1


@dataclass(frozen=True)
class ParallelClass:
    """All ``k >= 2`` non-loop edges joining ``v`` and ``w``.

    ``edges`` and ``darts`` follow the counterclockwise rotation at ``v``.
    ``regions[i]`` is the set of vertices strictly inside the region swept
    counterclockwise at ``v`` from ``edges[i]`` to ``edges[(i + 1) % k]``.
    """

    v: int
    w: int
    edges: tuple[int, ...]
    darts: tuple[int, ...]
    regions: tuple[frozenset[int], ...]

    @property
    def k(self) -> int:
        return len(self.edges)

    @property
    def endpoints(self) -> tuple[int, int]:
        return (self.v, self.w)

    def region_sizes(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.regions)


class PlaneMap:
    """Immutable connected map on the sphere (loops and multi-edges allowed)."""

    __slots__ = ("_sigma", "__dict__")

    def __init__(self, sigma: Sequence[int] | np.ndarray, check: bool = True):
        arr = np.array(sigma, dtype=np.int64).reshape(-1)
        arr.flags.writeable = False
        self._sigma = arr
        if check:
            self._validate()

    # construction -------------------------------------------------------

    @classmethod
    def single_vertex(cls) -> PlaneMap:
        return cls(np.empty(0, dtype=np.int64))

    @classmethod
    def from_rotation(
        cls,
        rotation: Sequence[Sequence[Hashable]],
        pairing: Mapping[Hashable, Hashable] | Iterable[tuple[Hashable, Hashable]],
        return_vertex_map: bool = False,
    ):
        """Build from per-vertex counterclockwise dart cycles and an edge pairing.

        Darts and vertices are renumbered densely; with ``return_vertex_map``
        the result is ``(map, vertex_map)`` where ``vertex_map[i]`` is the new
        id of ``rotation[i]``.  An empty cycle is only allowed for the
        one-vertex map.
        """
        if isinstance(pairing, Mapping):
            pairs = dict(pairing)
        else:
            pairs = {}
            for a, b in pairing:
                if a in pairs or b in pairs:
                    raise MalformedPairing(f"dart paired twice: {a!r} / {b!r}")
                pairs[a] = b
                pairs[b] = a
        seen = []
        for cyc in rotation:
            seen.extend(cyc)
        if len(set(seen)) != len(seen):
            raise MalformedPairing("a dart appears in more than one rotation slot")
        if set(seen) != set(pairs):
            raise MalformedPairing("rotation darts and pairing darts differ")
        for a, b in pairs.items():
            if a == b or pairs.get(b) != a:
                raise MalformedPairing(f"pairing is not a fixed-point-free involution at {a!r}")
        if not seen:
            if len(rotation) != 1:
                raise NotConnected("a map without edges must have exactly one vertex")
            m = cls.single_vertex()
            return (m, [0]) if return_vertex_map else m
        if any(len(cyc) == 0 for cyc in rotation):
            raise NotConnected("isolated vertex")
        # number darts edge by edge following the rotation listing
        index: dict[Hashable, int] = {}
        for d in seen:
            if d not in index:
                index[d] = len(index)
                index[pairs[d]] = len(index)
        sigma = np.empty(len(seen), dtype=np.int64)
        for cyc in rotation:
            for i, d in enumerate(cyc):
                sigma[index[d]] = index[cyc[(i + 1) % len(cyc)]]
        m = cls(sigma).with_layout([index[cyc[0]] for cyc in rotation])
        if return_vertex_map:
            vof = m.vertex_of
            return m, [int(vof[index[cyc[0]]]) for cyc in rotation]
        return m

    @classmethod
    def from_edge_rotation(cls, rotation: Sequence[Sequence[Hashable]], return_vertex_map: bool = False):
        """Build from per-vertex lists of edge labels; each label occurs twice."""
        occ: dict[Hashable, list[tuple[int, int]]] = defaultdict(list)
        darts = []
        for v, cyc in enumerate(rotation):
            row = []
            for i, lbl in enumerate(cyc):
                occ[lbl].append((v, i))
                row.append((lbl, len(occ[lbl]) - 1))
            darts.append(row)
        bad = [lbl for lbl, o in occ.items() if len(o) != 2]
        if bad:
            raise MalformedPairing(f"edge labels not used exactly twice: {bad!r}")
        pairing = [((lbl, 0), (lbl, 1)) for lbl in occ]
        return cls.from_rotation(darts, pairing, return_vertex_map)

    def _validate(self) -> None:
        s = self._sigma
        n = s.shape[0]
        if n % 2:
            raise MalformedPairing("odd number of darts")
        if n and (s.min() < 0 or s.max() >= n or len(np.unique(s)) != n):
            raise MalformedPairing("sigma is not a permutation of the darts")
        if not self.is_connected():
            raise NotConnected("dart set is not transitive under sigma and alpha")
        chi = self.num_vertices - self.num_edges + self.num_faces
        if chi != 2:
            raise NotGenusZero(f"Euler characteristic {chi}, expected 2")

    def with_layout(self, first_darts: Sequence[int]) -> PlaneMap:
        """Copy remembering an external vertex order and where each rotation starts.

        Serializers list vertices and rotations this way; everything else,
        equality included, ignores the layout.  Editing drops it.
        """
        first = tuple(int(d) for d in first_darts)
        if self.num_darts == 0:
            if first not in ((), (0,)):
                raise ValueError("the one-vertex map has no darts")
            return self
        vs = sorted(int(self.vertex_of[d]) for d in first)
        if vs != list(range(self.num_vertices)):
            raise ValueError("layout must name one dart at every vertex")
        out = PlaneMap(self._sigma, check=False)
        out.__dict__["layout"] = first
        return out

    @cached_property
    def layout(self) -> tuple[int, ...]:
        """First dart of each vertex in serialization order (default: by vertex id)."""
        return tuple(int(d) for d in self._first_dart)

    # basic data ---------------------------------------------------------

    @property
    def sigma(self) -> np.ndarray:
        return self._sigma

    @property
    def num_darts(self) -> int:
        return int(self._sigma.shape[0])

    @property
    def num_edges(self) -> int:
        return self.num_darts // 2

    @cached_property
    def phi(self) -> np.ndarray:
        out = _kernels.face_perm(self._sigma)
        out.flags.writeable = False
        return out

    @cached_property
    def _vertex_data(self):
        if self.num_darts == 0:
            return np.empty(0, dtype=np.int64), 1
        return _kernels.orbit_ids(self._sigma)

    @cached_property
    def _face_data(self):
        if self.num_darts == 0:
            return np.empty(0, dtype=np.int64), 1
        return _kernels.orbit_ids(self.phi)

    @property
    def vertex_of(self) -> np.ndarray:
        """Vertex id of every dart (vertices numbered by their least dart)."""
        return self._vertex_data[0]

    @property
    def face_of(self) -> np.ndarray:
        return self._face_data[0]

    @property
    def num_vertices(self) -> int:
        return int(self._vertex_data[1])

    @property
    def num_faces(self) -> int:
        return int(self._face_data[1])

    # short aliases used throughout the proofs' bookkeeping
    n = num_vertices
    e = num_edges
    f = num_faces

    def vertices(self) -> range:
        return range(self.num_vertices)

    def edge_darts(self, edge: int) -> tuple[int, int]:
        return (2 * edge, 2 * edge + 1)

    def endpoints(self, edge: int) -> tuple[int, int]:
        vof = self.vertex_of
        return (int(vof[2 * edge]), int(vof[2 * edge + 1]))

    def is_loop(self, edge: int) -> bool:
        u, v = self.endpoints(edge)
        return u == v

    def has_loops(self) -> bool:
        vof = self.vertex_of
        return bool(np.any(vof[0::2] == vof[1::2]))

    def is_connected(self) -> bool:
        n = self.num_darts
        if n == 0:
            return True
        s = self._sigma
        seen = np.zeros(n, dtype=bool)
        seen[0] = True
        stack = [0]
        count = 1
        while stack:
            d = stack.pop()
            for t in (int(s[d]), d ^ 1):
                if not seen[t]:
                    seen[t] = True
                    count += 1
                    stack.append(t)
        return count == n

    def rotation_from(self, d: int) -> list[int]:
        out = [int(d)]
        s = self._sigma
        x = int(s[d])
        while x != d:
            out.append(x)
            x = int(s[x])
        return out

    @cached_property
    def _first_dart(self) -> np.ndarray:
        vof = self.vertex_of
        first = np.full(self.num_vertices, -1, dtype=np.int64)
        for d in range(self.num_darts - 1, -1, -1):
            first[vof[d]] = d
        return first

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.num_vertices:
            raise UnknownVertex(v)

    def rotation(self, v: int) -> list[int]:
        """Darts at ``v`` in counterclockwise order, starting at the least one."""
        self._check_vertex(v)
        if self.num_darts == 0:
            return []
        return self.rotation_from(int(self._first_dart[v]))

    def rotations(self) -> list[list[int]]:
        return [self.rotation(v) for v in self.vertices()]

    def neighbors(self, v: int) -> list[int]:
        vof = self.vertex_of
        return [int(vof[d ^ 1]) for d in self.rotation(v)]

    def faces(self) -> list[list[int]]:
        """Face boundary walks as dart lists (orbits of ``phi``)."""
        fid = self.face_of
        phi = self.phi
        out: list[list[int]] = [[] for _ in range(self.num_faces)]
        if self.num_darts == 0:
            return out
        done = np.zeros(self.num_darts, dtype=bool)
        for d in range(self.num_darts):
            if not done[d]:
                walk = []
                x = d
                while not done[x]:
                    done[x] = True
                    walk.append(x)
                    x = int(phi[x])
                out[fid[d]] = walk
        return out

    def face_lengths(self) -> list[int]:
        if self.num_darts == 0:
            return [0]
        return np.bincount(self.face_of, minlength=self.num_faces).tolist()

    def corner_face(self, c: int) -> int:
        return int(self.face_of[self._sigma[c]])

    # degrees ------------------------------------------------------------

    @cached_property
    def degrees(self) -> np.ndarray:
        if self.num_darts == 0:
            return np.zeros(1, dtype=np.int64)
        return np.bincount(self.vertex_of, minlength=self.num_vertices)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return int(self.degrees[v])

    def min_degree(self) -> int:
        return int(self.degrees.min())

    def degree_histogram(self) -> dict[int, int]:
        vals, counts = np.unique(self.degrees, return_counts=True)
        return {int(a): int(b) for a, b in zip(vals, counts)}

    # parallel edges -----------------------------------------------------

    @cached_property
    def _parallel_classes(self) -> tuple[ParallelClass, ...]:
        vof = self.vertex_of
        fid = self.face_of
        groups: dict[tuple[int, int], list[int]] = defaultdict(list)
        for e in range(self.num_edges):
            u, v = int(vof[2 * e]), int(vof[2 * e + 1])
            if u != v:
                groups[(min(u, v), max(u, v))].append(e)
        out = []
        for (v, w), edges in sorted(groups.items()):
            if len(edges) < 2:
                continue
            eset = set(edges)
            at_v = [d for d in self.rotation(v) if (d >> 1) in eset]
            cls_edges = tuple(d >> 1 for d in at_v)
            regions = []
            for d in at_v:
                start = self.corner_face(d)
                seen = {start}
                queue = deque([start])
                while queue:
                    face = queue.popleft()
                    for x in self._face_darts[face]:
                        if (x >> 1) in eset:
                            continue
                        g = int(fid[x ^ 1])
                        if g not in seen:
                            seen.add(g)
                            queue.append(g)
                verts = {int(vof[x]) for face in seen for x in self._face_darts[face]}
                verts.discard(v)
                verts.discard(w)
                regions.append(frozenset(verts))
            out.append(ParallelClass(v, w, cls_edges, tuple(at_v), tuple(regions)))
        return tuple(out)

    @cached_property
    def _face_darts(self) -> list[list[int]]:
        return self.faces()

    def parallel_classes(self) -> list[ParallelClass]:
        return list(self._parallel_classes)

    def has_parallel_edges(self) -> bool:
        if "_parallel_classes" in self.__dict__:
            return bool(self._parallel_classes)
        vof = self.vertex_of
        u, v = vof[0::2], vof[1::2]
        ok = u != v
        lo, hi = np.minimum(u, v)[ok], np.maximum(u, v)[ok]
        keys = lo * self.num_vertices + hi
        return len(np.unique(keys)) != keys.shape[0]

    def multiplicity(self, u: int, v: int) -> int:
        vof = self.vertex_of
        return sum(
            1
            for d in self.rotation(u)
            if int(vof[d ^ 1]) == v
        ) // (2 if u == v else 1)

    # predicates ---------------------------------------------------------

    def is_quadrangulation(self) -> bool:
        if self.num_darts == 0 or self.has_loops():
            return False
        return all(x == 4 for x in self.face_lengths())

    def _faces_repeat_edges(self) -> bool:
        fid = self.face_of
        return bool(np.any(fid[0::2] == fid[1::2]))

    def is_simple_quadrangulation(self) -> bool:
        return (
            self.is_quadrangulation()
            and not self.has_parallel_edges()
            and not self._faces_repeat_edges()
        )

    def _require_quadrangulation(self) -> None:
        if not self.is_quadrangulation():
            raise NotAQuadrangulation(repr(self))

    def is_irreducible(self) -> bool:
        """Quadrangulation that is the 3-vertex path or has minimum degree 3."""
        self._require_quadrangulation()
        if self.min_degree() == 3:
            return True
        if self.num_vertices != 3:
            return False
        from .canonical import is_isomorphic
        from .fixtures import P2

        return is_isomorphic(self, P2())

    def is_parallel_irreducible(self) -> bool:
        return self.is_irreducible() and self.has_parallel_edges()

    def adjacent_degree_check(self, bound: int = 3) -> bool:
        """Every edge ``xy`` has ``deg(x) + deg(y) >= bound``."""
        self._require_quadrangulation()
        if self.num_darts == 0:
            return True
        deg = self.degrees
        vof = self.vertex_of
        sums = deg[vof[0::2]] + deg[vof[1::2]]
        return bool(np.all(sums >= bound))

    # editing ------------------------------------------------------------

    def relabel(self, perm: Sequence[int] | np.ndarray) -> PlaneMap:
        """Rename dart ``d`` to ``perm[d]``; ``perm`` must commute with alpha."""
        p = np.asarray(perm, dtype=np.int64)
        if np.any(p[0::2] ^ 1 != p[1::2]):
            raise MalformedPairing("relabelling does not respect the edge involution")
        out = np.empty_like(self._sigma)
        out[p] = p[self._sigma]
        return PlaneMap(out, check=False)

    def _restrict(self, keep: np.ndarray) -> tuple[PlaneMap, np.ndarray]:
        """Sub-map on the kept darts (closed under alpha), rotations restricted.

        Returns the map and the old-to-new dart table (-1 for dropped darts).
        """
        keep = np.asarray(keep, dtype=bool)
        old = np.flatnonzero(keep)
        new_of = np.full(self.num_darts, -1, dtype=np.int64)
        new_of[old] = np.arange(old.shape[0])
        s = self._sigma
        out = np.empty(old.shape[0], dtype=np.int64)
        for i, d in enumerate(old):
            x = int(s[d])
            while not keep[x]:
                x = int(s[x])
            out[i] = new_of[x]
        return PlaneMap(out, check=False), new_of

    def induced_submap(self, vertices: Iterable[int]) -> PlaneMap:
        return self._induced(vertices)[0]

    def _induced(self, vertices: Iterable[int]) -> tuple[PlaneMap, np.ndarray]:
        S = set(int(v) for v in vertices)
        if not S:
            raise DisconnectedResult("empty vertex subset")
        for v in S:
            self._check_vertex(v)
        vof = self.vertex_of
        inside = np.zeros(self.num_vertices, dtype=bool)
        inside[list(S)] = True
        keep = inside[vof] & inside[vof[np.arange(self.num_darts) ^ 1]]
        kept_vertices = set(vof[keep].tolist())
        if len(S) > 1 and kept_vertices != S:
            raise DisconnectedResult(f"vertices {sorted(S - kept_vertices)} become isolated")
        sub, table = self._restrict(keep)
        if not sub.is_connected():
            raise DisconnectedResult("induced submap is disconnected")
        return sub, table

    def delete_edges(self, edges: Iterable[int]) -> PlaneMap:
        return self._delete(edges)[0]

    def _delete(self, edges: Iterable[int]) -> tuple[PlaneMap, np.ndarray]:
        dead = set(int(x) for x in edges)
        keep = np.array([(d >> 1) not in dead for d in range(self.num_darts)], dtype=bool)
        if self.num_darts and not keep.any():
            if self.num_vertices == 1:
                return PlaneMap.single_vertex(), np.full(self.num_darts, -1)
            raise DisconnectedResult("deleting every edge leaves isolated vertices")
        vof = self.vertex_of
        if len(set(vof[keep].tolist())) != self.num_vertices:
            raise DisconnectedResult("a vertex loses all its edges")
        sub, table = self._restrict(keep)
        if not sub.is_connected():
            raise DisconnectedResult("deleting the edges disconnects the map")
        return sub, table

    def add_edge(self, a: int | None, b: int | None) -> PlaneMap:
        """Insert an edge from corner ``a`` to corner ``b`` (same face).

        ``a == b`` inserts a loop bounding an empty monogon at that corner.
        The new edge gets darts ``2e`` (at ``a``) and ``2e + 1`` (at ``b``).
        """
        n = self.num_darts
        x, y = n, n + 1
        if n == 0:
            if a is not None or b is not None:
                raise CornersNotOnSameFace("the one-vertex map has a single corner, pass None")
            return PlaneMap([1, 0], check=False)
        if self.corner_face(a) != self.corner_face(b):
            raise CornersNotOnSameFace(f"corners {a} and {b} lie on different faces")
        s = np.concatenate([self._sigma, [0, 0]])
        if a == b:
            s[a], s[x], s[y] = x, y, self._sigma[a]
        else:
            s[a], s[x] = x, self._sigma[a]
            s[b], s[y] = y, self._sigma[b]
        return PlaneMap(s, check=False)

    def add_pendant(self, a: int | None) -> PlaneMap:
        """Attach a new degree-1 vertex at corner ``a`` (dart ``2e`` at ``a``)."""
        n = self.num_darts
        if n == 0:
            return PlaneMap([0, 1], check=False)
        s = np.concatenate([self._sigma, [self._sigma[a], n + 1]])
        s[a] = n
        return PlaneMap(s, check=False)

    def dual(self) -> PlaneMap:
        """Dual map; its vertex rotation is ``alpha o sigma``, an exact involution."""
        if self.num_darts == 0:
            return self
        return PlaneMap(self._sigma ^ 1, check=False)

    def mirror(self) -> PlaneMap:
        out = np.empty_like(self._sigma)
        out[self._sigma] = np.arange(self.num_darts)
        return PlaneMap(out, check=False)

    # dunder -------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PlaneMap):
            return NotImplemented
        return np.array_equal(self._sigma, other._sigma)

    def __hash__(self) -> int:
        return hash(self._sigma.tobytes())

    def __repr__(self) -> str:
        return (
            f"PlaneMap(n={self.num_vertices}, e={self.num_edges}, f={self.num_faces}, "
            f"sigma={self._sigma.tolist()})"
        )
