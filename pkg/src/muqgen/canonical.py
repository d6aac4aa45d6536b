"""Canonical codes for connected plane maps.

For a start dart ``d0`` and a sense (``sigma`` or its inverse) the darts are
labelled in breadth-first discovery order, each newly met dart immediately
followed by its partner, so alpha stays ``x ^ 1`` under the new labels.  The
code is the relabelled rotation; its lexicographic minimum over all starts
(and both senses when mirror images are identified) is a complete invariant.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from . import _kernels
from .planemap import PlaneMap


def _pack(code: np.ndarray) -> bytes:
    # dart count first so codes of different sizes order by size
    n = code.shape[0]
    return n.to_bytes(2, "big") + code.astype(">u2").tobytes()


@dataclass(frozen=True, order=True)
class CanonicalCode:
    data: bytes
    reflect: bool = field(default=True, compare=True)

    def hex(self) -> str:
        return self.data.hex()

    def to_map(self) -> PlaneMap:
        """The canonical representative this code spells out."""
        return code_bytes_to_map(self.data)

    def __str__(self) -> str:
        return self.hex()


def code_bytes_to_map(data: bytes) -> PlaneMap:
    n = int.from_bytes(data[:2], "big")
    sigma = np.frombuffer(data[2:], dtype=">u2").astype(np.int64)
    if sigma.shape[0] != n:
        raise ValueError("corrupt canonical code")
    return PlaneMap(sigma, check=False)


def canonical_code(m: PlaneMap, reflect: bool = True) -> CanonicalCode:
    code, _ = _kernels.canonical(m.sigma, reflect)
    return CanonicalCode(_pack(code), reflect)


def canonical_form(m: PlaneMap, reflect: bool = True) -> PlaneMap:
    """Relabelled copy equal for all maps in one isomorphism class.

    With ``reflect`` the result may be the mirror image of ``m``.
    """
    code, _ = _kernels.canonical(m.sigma, reflect)
    return PlaneMap(code, check=False)


def automorphism_count(m: PlaneMap, reflect: bool = True) -> int:
    """Number of (start dart, sense) pairs reaching the minimal code.

    This is the order of the orientation-preserving automorphism group, or
    with ``reflect`` of the full group including mirror symmetries.  The
    one-vertex map reports 1.
    """
    _, count = _kernels.canonical(m.sigma, reflect)
    return int(count)


def rooted_code(m: PlaneMap, starts: Iterable[int], reflect: bool = True) -> CanonicalCode:
    """Minimal code over the given start darts only (a marked-dart invariant)."""
    st = np.asarray(sorted(set(int(d) for d in starts)), dtype=np.int64)
    if st.size == 0:
        raise ValueError("no start darts")
    code, _ = _kernels.canonical_from(m.sigma, st, reflect)
    return CanonicalCode(_pack(code), reflect)


def is_isomorphic(a: PlaneMap, b: PlaneMap, reflect: bool = True) -> bool:
    if (a.num_darts, a.num_vertices, a.num_faces) != (b.num_darts, b.num_vertices, b.num_faces):
        return False
    return canonical_code(a, reflect) == canonical_code(b, reflect)


def is_chiral(m: PlaneMap) -> bool:
    """True when ``m`` is not isomorphic to its mirror image."""
    return canonical_code(m, reflect=False) != canonical_code(m.mirror(), reflect=False)
