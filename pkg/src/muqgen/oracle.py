"""Brute-force enumeration of small quadrangulations.

Independent of the growth/radial pipeline: it builds every embedding of every
candidate multigraph and keeps the spherical all-quadrilateral ones.
Candidates are connected loopless bipartite multigraphs with ``2n - 4``
edges (a plane graph whose faces all have even length is bipartite), given
as black-by-white multiplicity matrices whose rows and columns are both in
non-increasing lexicographic order; every matrix has a row and column
permutation of that form, so no isomorphism class is lost.
"""
from __future__ import annotations

import itertools
from typing import Iterator

import numpy as np

from .canonical import canonical_code
from .errors import OrderTooLargeForOracle
from .planemap import PlaneMap

MAX_ORDER = 7


def _rows(width: int, total: int, upper: tuple[int, ...] | None) -> Iterator[tuple[int, ...]]:
    """Non-zero rows of ``width`` entries summing to ``total``, lex <= ``upper``."""

    def rec(prefix, left, tight):
        i = len(prefix)
        if i == width:
            if left == 0:
                yield tuple(prefix)
            return
        hi = left
        if tight and upper is not None:
            hi = min(hi, upper[i])
        for x in range(hi, -1, -1):
            yield from rec(prefix + [x], left - x, tight and upper is not None and x == upper[i])

    if total > 0:
        yield from rec([], total, upper is not None)


def _matrices(a: int, b: int, edges: int) -> Iterator[np.ndarray]:
    def rec(rows, left):
        if len(rows) == a:
            if left == 0:
                yield np.array(rows)
            return
        remaining = a - len(rows)
        prev = rows[-1] if rows else None
        for s in range(1, left - (remaining - 1) + 1):
            if remaining == 1 and s != left:
                continue
            for row in _rows(b, s, prev):
                yield from rec(rows + [row], left - s)

    for m in rec([], edges):
        cols = [tuple(m[:, j]) for j in range(b)]
        if any(sum(c) == 0 for c in cols):
            continue
        if any(cols[j] < cols[j + 1] for j in range(b - 1)):
            continue
        if _connected(m):
            yield m


def _connected(m: np.ndarray) -> bool:
    a, b = m.shape
    seen = {0}
    stack = [0]
    while stack:
        x = stack.pop()
        if x < a:
            nbrs = [a + j for j in range(b) if m[x, j]]
        else:
            nbrs = [i for i in range(a) if m[i, x - a]]
        for y in nbrs:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == a + b


def _cyclic_orders(darts: list[int], bundle_of: dict[int, int] | None = None) -> list[tuple[int, ...]]:
    """Cyclic orders of ``darts`` read from ``darts[0]``.

    With ``bundle_of`` the darts of each parallel bundle must appear in
    increasing order; relabelling the edges inside a bundle reaches this
    from any embedding, so one representative per relabelling orbit survives.
    """
    first, rest = darts[0], darts[1:]
    out = []
    for p in itertools.permutations(rest):
        cyc = (first,) + p
        if bundle_of is not None:
            last: dict[int, int] = {}
            ok = True
            for d in cyc:
                g = bundle_of[d]
                if last.get(g, -1) > d:
                    ok = False
                    break
                last[g] = d
            if not ok:
                continue
        out.append(cyc)
    return out


def _quad_faces(sigma: list[int]) -> bool:
    n = len(sigma)
    seen = [False] * n
    for d in range(n):
        if seen[d]:
            continue
        length = 0
        x = d
        while not seen[x]:
            seen[x] = True
            length += 1
            x = sigma[x ^ 1]
        if length != 4:
            return False
    return True


def _embeddings(m: np.ndarray) -> Iterator[list[int]]:
    a, b = m.shape
    at: list[list[int]] = [[] for _ in range(a + b)]
    bundle_of: dict[int, int] = {}
    e = 0
    for i in range(a):
        for j in range(b):
            for _ in range(int(m[i, j])):
                at[i].append(2 * e)
                at[a + j].append(2 * e + 1)
                bundle_of[2 * e] = i * b + j
                e += 1
    sigma = [0] * (2 * e)
    choices = [_cyclic_orders(at[i], bundle_of) for i in range(a)]
    choices += [_cyclic_orders(at[a + j]) for j in range(b)]
    for choice in itertools.product(*choices):
        for cyc in choice:
            for i, d in enumerate(cyc):
                sigma[d] = cyc[(i + 1) % len(cyc)]
        if _quad_faces(sigma):
            yield list(sigma)


def brute_force_muqs(n: int, reflect: bool = True) -> list[PlaneMap]:
    """All quadrangulations of order ``n`` (3 <= n <= 7), sorted by canonical code."""
    if n < 3:
        raise ValueError("quadrangulations have at least 3 vertices")
    if n > MAX_ORDER:
        raise OrderTooLargeForOracle(f"brute force is limited to order {MAX_ORDER}")
    edges = 2 * n - 4
    found = {}
    for a in range(1, n // 2 + 1):
        for m in _matrices(a, n - a, edges):
            for sigma in _embeddings(m):
                pm = PlaneMap(sigma)  # validates connectivity and genus 0
                code = canonical_code(pm, reflect)
                found.setdefault(code, pm)
    return [found[c] for c in sorted(found)]
