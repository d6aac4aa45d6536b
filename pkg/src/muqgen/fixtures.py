"""Hand-encoded small maps used as named reference objects.

P2, C4, Q3 and Q4 are the quadrangulations of order at most 4.  CUBE and F10
are the simple quadrangulations of minimum degree 3 on 8 and 10 vertices
(F10 is the pseudo-double wheel: an 8-cycle with one hub inside joined to
every other rim vertex and one hub outside joined to the rest).  P14 doubles
CUBE along an edge.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Hashable, Mapping, Sequence

from .planemap import PlaneMap


def from_neighbor_rotation(adj: Mapping[Hashable, Sequence[Hashable]]) -> PlaneMap:
    """Simple-graph helper: ``adj[v]`` lists the neighbours of ``v`` counterclockwise."""
    keys = list(adj)
    rotation = [[frozenset((v, u)) for u in adj[v]] for v in keys]
    return PlaneMap.from_edge_rotation(rotation)


@lru_cache(maxsize=None)
def K2() -> PlaneMap:
    return PlaneMap([0, 1])


@lru_cache(maxsize=None)
def LOOP() -> PlaneMap:
    return PlaneMap([1, 0])


@lru_cache(maxsize=None)
def P2() -> PlaneMap:
    return PlaneMap.from_edge_rotation([["a"], ["a", "b"], ["b"]])


@lru_cache(maxsize=None)
def C4() -> PlaneMap:
    return PlaneMap.from_edge_rotation([["a", "d"], ["b", "a"], ["c", "b"], ["d", "c"]])


@lru_cache(maxsize=None)
def Q3() -> PlaneMap:
    # double edge p, q between V and O; one pendant vertex in each of the two regions
    return PlaneMap.from_edge_rotation([["p", "a", "q"], ["p", "c", "q"], ["a"], ["c"]])


@lru_cache(maxsize=None)
def Q4() -> PlaneMap:
    # hub joined to x1, x3 once and to x2 twice, the double edge separating x1 from x3
    return PlaneMap.from_edge_rotation([["a", "b", "c", "d"], ["a"], ["b", "d"], ["c"]])


@lru_cache(maxsize=None)
def CUBE() -> PlaneMap:
    adj = {}
    for j in range(4):
        adj[("o", j)] = [("o", (j + 1) % 4), ("i", j), ("o", (j - 1) % 4)]
    for j in range(4):
        adj[("i", j)] = [("o", j), ("i", (j + 1) % 4), ("i", (j - 1) % 4)]
    return from_neighbor_rotation(adj)


@lru_cache(maxsize=None)
def F10() -> PlaneMap:
    adj = {"A": [("r", i) for i in (0, 2, 4, 6)], "B": [("r", i) for i in (7, 5, 3, 1)]}
    for i in range(8):
        nxt, prv = ("r", (i + 1) % 8), ("r", (i - 1) % 8)
        adj[("r", i)] = [nxt, "A", prv] if i % 2 == 0 else ["B", nxt, prv]
    return from_neighbor_rotation(adj)


@lru_cache(maxsize=None)
def P14() -> PlaneMap:
    from .halves import double_half, validate_half

    cube = CUBE()
    u, v = cube.endpoints(0)
    return double_half(validate_half(cube, u, v))


ALL = {"K2": K2, "LOOP": LOOP, "P2": P2, "C4": C4, "Q3": Q3, "Q4": Q4, "CUBE": CUBE, "F10": F10, "P14": P14}
