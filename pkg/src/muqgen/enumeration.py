"""Isomorph-free generation of plane multigraphs and multiquadrangulations.

Connected plane maps are grown edge by edge from the one-vertex map, either
by joining two corners of one face or by hanging a pendant vertex in a
corner, and deduplicated per level by canonical code.  Quadrangulations of
order ``n`` are the radial maps of the ``n - 2``-edge maps.
"""
from __future__ import annotations

import logging
import os
import re
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Callable, Iterable, Iterator

import numpy as np

from . import _kernels
from .canonical import CanonicalCode, canonical_code, code_bytes_to_map, _pack
from .errors import UnknownPredicate
from .planemap import PlaneMap

log = logging.getLogger(__name__)

_DTYPE = np.uint8  # dart labels fit in a byte up to 127 edges
_MAX_EDGES = 126


def default_jobs() -> int:
    return int(os.environ.get("MUQGEN_JOBS", "1"))


def _first_level(reflect: bool) -> set[bytes]:
    seed = PlaneMap.single_vertex()
    out = set()
    for child in (seed.add_edge(None, None), seed.add_pendant(None)):
        code, _ = _kernels.canonical(child.sigma, reflect)
        out.add(code.astype(_DTYPE).tobytes())
    return out


def _expand(parents: np.ndarray, reflect: bool) -> set[bytes]:
    out: set[bytes] = set()
    for sigma in parents:
        codes = _kernels.child_codes(sigma.astype(np.int64), reflect).astype(_DTYPE)
        width = codes.shape[1]
        raw = codes.tobytes()
        out.update(raw[i : i + width] for i in range(0, len(raw), width))
    return out


def _expand_chunk(args) -> set[bytes]:
    parents, reflect = args
    return _expand(parents, reflect)


def _as_array(codes: Iterable[bytes], width: int) -> np.ndarray:
    codes = sorted(codes)
    if not codes:
        return np.empty((0, width), dtype=_DTYPE)
    return np.frombuffer(b"".join(codes), dtype=_DTYPE).reshape(len(codes), width)


class LevelCheckpoint:
    """Directory of finished levels (``level_K[_mirror].npy``) plus partial progress.

    A partial file records how many parents of the level under construction
    were expanded and the codes found so far, so an interrupted run resumes
    without repeating work.
    """

    def __init__(self, path: str | os.PathLike, reflect: bool = True, every: int = 20000):
        self.path = Path(path)
        self.path.mkdir(parents=True, exist_ok=True)
        self.tag = "" if reflect else "_sensed"
        self.every = every

    def _level_file(self, k: int) -> Path:
        return self.path / f"level_{k}{self.tag}.npy"

    def _partial_file(self, k: int) -> Path:
        return self.path / f"partial_{k}{self.tag}.npz"

    def load_level(self, k: int) -> np.ndarray | None:
        p = self._level_file(k)
        return np.load(p) if p.exists() else None

    def save_level(self, k: int, arr: np.ndarray) -> None:
        tmp = self._level_file(k).with_suffix(".tmp.npy")
        np.save(tmp, arr)
        tmp.replace(self._level_file(k))
        self._partial_file(k).unlink(missing_ok=True)

    def load_partial(self, k: int) -> tuple[int, set[bytes]]:
        p = self._partial_file(k)
        if not p.exists():
            return 0, set()
        with np.load(p) as z:
            done = int(z["done"])
            codes = z["codes"]
        return done, {row.tobytes() for row in codes}

    def save_partial(self, k: int, done: int, codes: set[bytes], width: int) -> None:
        tmp = self.path / f"partial_{k}{self.tag}.tmp.npz"
        np.savez(tmp, done=np.array(done), codes=_as_array(codes, width))
        tmp.replace(self._partial_file(k))


def plane_multigraph_codes(
    k: int,
    reflect: bool = True,
    jobs: int | None = None,
    checkpoint: LevelCheckpoint | None = None,
    progress: Callable[[int, int, int, int], None] | None = None,
) -> np.ndarray:
    """Sorted canonical codes (one row per class) of connected plane maps with ``k`` edges.

    ``progress(level, parents_done, parents_total, found)`` is called as the
    search advances.
    """
    if k < 0:
        raise ValueError("edge count must be non-negative")
    if k > _MAX_EDGES:
        raise ValueError(f"at most {_MAX_EDGES} edges supported")
    if k == 0:
        return np.empty((1, 0), dtype=_DTYPE)
    jobs = default_jobs() if jobs is None else jobs
    level = None
    start = 1
    if checkpoint is not None:
        for j in range(k, 0, -1):
            level = checkpoint.load_level(j)
            if level is not None:
                start = j
                break
    if level is None:
        level = _as_array(_first_level(reflect), 2)
        start = 1
        if checkpoint is not None:
            checkpoint.save_level(1, level)
    for j in range(start + 1, k + 1):
        level = _next_level(level, j, reflect, jobs, checkpoint, progress)
        if checkpoint is not None:
            checkpoint.save_level(j, level)
        log.info("level %d: %d maps", j, len(level))
    return level


def _next_level(parents, j, reflect, jobs, checkpoint, progress) -> np.ndarray:
    width = 2 * j
    total = len(parents)
    done, found = (0, set()) if checkpoint is None else checkpoint.load_partial(j)
    step = checkpoint.every if checkpoint is not None else max(total, 1)
    if jobs > 1:
        step = min(step, max(1, total // (4 * jobs)) if total else 1)
    pool = ProcessPoolExecutor(jobs) if jobs > 1 else None
    try:
        while done < total:
            stop = min(total, done + step)
            batch = parents[done:stop]
            if pool is None:
                found |= _expand(batch, reflect)
            else:
                chunks = np.array_split(batch, jobs)
                for part in pool.map(_expand_chunk, [(c, reflect) for c in chunks if len(c)]):
                    found |= part
            done = stop
            if checkpoint is not None and done < total:
                checkpoint.save_partial(j, done, found, width)
            if progress is not None:
                progress(j, done, total, len(found))
    finally:
        if pool is not None:
            pool.shutdown()
    return _as_array(found, width)


def enumerate_plane_multigraphs(k: int, reflect: bool = True, jobs: int | None = None) -> Iterator[PlaneMap]:
    """Every connected plane map with ``k`` edges, one per class, in code order.

    Loops and parallel edges are allowed.  With ``reflect=False`` a map and
    its mirror image count as different.
    """
    if k == 0:
        yield PlaneMap.single_vertex()
        return
    for row in plane_multigraph_codes(k, reflect, jobs):
        yield PlaneMap(row.astype(np.int64), check=False)


def radial_graph(h: PlaneMap) -> PlaneMap:
    """Vertex-face incidence map of ``h``.

    Radial dart ``2c`` leaves the vertex of corner ``c`` towards the face
    containing that corner, and ``2c + 1`` is its partner at the face vertex.
    The result is a quadrangulation with ``e(h) + 2`` vertices.
    """
    if h.num_darts == 0:
        raise ValueError("the one-vertex map has no radial map")
    return PlaneMap(_kernels.radial(h.sigma), check=False)


def muq_codes(n: int, reflect: bool = True, jobs: int | None = None,
              checkpoint: LevelCheckpoint | None = None, progress=None) -> list[bytes]:
    """Sorted packed canonical codes of all quadrangulations of order ``n``."""
    if n < 3:
        raise ValueError("quadrangulations have at least 3 vertices")
    rows = plane_multigraph_codes(n - 2, reflect, jobs, checkpoint, progress)
    seen = set()
    for row in rows:
        code, _ = _kernels.canonical(_kernels.radial(row.astype(np.int64)), reflect)
        seen.add(_pack(code))
    return sorted(seen)


def enumerate_muqs(n: int, reflect: bool = True, jobs: int | None = None, **kw) -> Iterator[PlaneMap]:
    """All multiquadrangulations of order ``n`` up to isomorphism, sorted by code.

    Each map is yielded in canonical form.
    """
    for data in muq_codes(n, reflect, jobs, **kw):
        yield code_bytes_to_map(data)


_MINDEG = re.compile(r"^min-degree>=(\d+)$")
_PREDICATES: dict[str, Callable[[PlaneMap], bool]] = {
    "has-parallel": PlaneMap.has_parallel_edges,
    "simple": PlaneMap.is_simple_quadrangulation,
    "irreducible": PlaneMap.is_irreducible,
    "parallel-irreducible": PlaneMap.is_parallel_irreducible,
}


def predicate(name: str) -> Callable[[PlaneMap], bool]:
    if name in _PREDICATES:
        return _PREDICATES[name]
    m = _MINDEG.match(name)
    if m:
        d = int(m.group(1))
        return lambda q: q.min_degree() >= d
    raise UnknownPredicate(
        f"unknown predicate {name!r}; expected one of {sorted(_PREDICATES)} or min-degree>=D"
    )


def filter_maps(stream: Iterable[PlaneMap], name: str) -> Iterator[PlaneMap]:
    keep = predicate(name)
    return (m for m in stream if keep(m))


def rooted_count(maps: Iterable[PlaneMap], reflect: bool) -> int:
    """Number of rooted maps represented by one map per class.

    Each class contributes ``2e / |Aut+|`` when mirror images are distinct and
    ``4e / |Aut|`` when they are identified.
    """
    from fractions import Fraction

    from .canonical import automorphism_count

    total = Fraction(0)
    for m in maps:
        factor = 4 if reflect else 2
        total += Fraction(factor * m.num_edges, automorphism_count(m, reflect))
    if total.denominator != 1:
        raise ArithmeticError(f"non-integral rooted count {total}")
    return int(total)


def code_of(m: PlaneMap, reflect: bool = True) -> CanonicalCode:
    return canonical_code(m, reflect)
