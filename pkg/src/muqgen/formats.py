"""Text rotation-system documents and plantri's binary planar_code.

rotsys: one block per map, a header ``n=<N> e=<E>`` followed by lines
``v: e_id e_id ...`` giving each vertex's edges in counterclockwise order
(vertices 1-based, a loop listed twice).  Blank lines and ``#`` comments are
ignored.

planar_code: the header ``>>planar_code<<`` then, per map, one byte ``n``
and for every vertex its neighbours clockwise as 1-based bytes closed by 0.
"""
from __future__ import annotations

import itertools
import re
from collections import defaultdict
from typing import Iterable

from .canonical import canonical_code, canonical_form
from .errors import (
    AmbiguousMultiedgePairing,
    BadHeader,
    FormatError,
    InconsistentIncidence,
    MapError,
    NonPlanarPairing,
    NotConnected,
    NotGenusZero,
    RotsysSyntaxError,
    TruncatedRecord,
)
from .planemap import PlaneMap

PLANAR_CODE_HEADER = b">>planar_code<<"
_MAX_COMPLETIONS = 200_000

_HEADER = re.compile(r"^n=(\d+)\s+e=(\d+)$")
_VERTEX = re.compile(r"^(\d+)\s*:(.*)$")


# rotsys -------------------------------------------------------------------

def emit_rotsys(maps: Iterable[PlaneMap], normalize: bool = True) -> str:
    """Serialize maps; ``normalize`` first relabels each into canonical form.

    Normalization preserves orientation, so ``parse_rotsys`` returns a map
    isomorphic to the input without identifying mirror images.
    """
    blocks = []
    for m in maps:
        if normalize:
            m = canonical_form(m, reflect=False)
        lines = [f"n={m.num_vertices} e={m.num_edges}"]
        if m.num_darts == 0:
            blocks.append(lines[0] + "\n1:\n")
            continue
        for i, d0 in enumerate(m.layout):
            ids = " ".join(str((d >> 1) + 1) for d in m.rotation_from(d0))
            lines.append(f"{i + 1}: {ids}")
        blocks.append("\n".join(lines) + "\n")
    return "\n".join(blocks)


def parse_rotsys(text: str) -> list[PlaneMap]:
    out = []
    current = None  # (lineno, n, e, rows)

    def finish():
        if current is None:
            return
        lineno, n, e, rows = current
        missing = [v for v in range(1, n + 1) if v not in rows]
        if missing:
            raise RotsysSyntaxError(f"map declared n={n} lacks vertex lines {missing}", lineno)
        rotation = [rows[v] for v in range(1, n + 1)]
        counts = defaultdict(int)
        for row in rotation:
            for lbl in row:
                counts[lbl] += 1
        bad = sorted(lbl for lbl, c in counts.items() if c != 2)
        if bad:
            raise InconsistentIncidence(f"map at line {lineno}: edge ids not used exactly twice: {bad}")
        if len(counts) != e:
            raise InconsistentIncidence(f"map at line {lineno}: declared e={e}, found {len(counts)} edges")
        try:
            out.append(PlaneMap.from_edge_rotation(rotation))
        except MapError as exc:
            raise FormatError(f"map at line {lineno}: {exc}") from exc

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        h = _HEADER.match(line)
        if h:
            finish()
            current = (lineno, int(h.group(1)), int(h.group(2)), {})
            continue
        v = _VERTEX.match(line)
        if not v:
            raise RotsysSyntaxError(f"cannot parse {raw!r}", lineno)
        if current is None:
            raise RotsysSyntaxError("vertex line before any header", lineno)
        vid = int(v.group(1))
        rows = current[3]
        if not 1 <= vid <= current[1]:
            raise RotsysSyntaxError(f"vertex {vid} outside 1..{current[1]}", lineno)
        if vid in rows:
            raise RotsysSyntaxError(f"vertex {vid} listed twice", lineno)
        rows[vid] = v.group(2).split()
    finish()
    return out


# planar_code --------------------------------------------------------------

def emit_planar_code(maps: Iterable[PlaneMap]) -> bytes:
    buf = bytearray(PLANAR_CODE_HEADER)
    for m in maps:
        n = m.num_vertices
        if n > 255:
            raise FormatError("planar_code orders above 255 are not supported")
        buf.append(n)
        if m.num_darts == 0:
            buf.append(0)
            continue
        vof = m.vertex_of
        label = {int(vof[d0]): i + 1 for i, d0 in enumerate(m.layout)}
        for d0 in m.layout:
            rot = m.rotation_from(d0)
            cw = rot[:1] + rot[1:][::-1]
            buf.extend(label[int(vof[d ^ 1])] for d in cw)
            buf.append(0)
    return bytes(buf)


def _read_records(data: bytes) -> list[list[list[int]]]:
    if not data.startswith(PLANAR_CODE_HEADER):
        raise BadHeader("missing >>planar_code<< header")
    pos = len(PLANAR_CODE_HEADER)
    records = []
    while pos < len(data):
        n = data[pos]
        pos += 1
        if n == 0:
            raise FormatError("planar_code orders above 255 are not supported")
        adj = []
        for v in range(n):
            row = []
            while True:
                if pos >= len(data):
                    raise TruncatedRecord(f"record {len(records)} ends inside vertex {v + 1}")
                x = data[pos]
                pos += 1
                if x == 0:
                    break
                if x > n:
                    raise FormatError(f"record {len(records)}: neighbour {x} exceeds n={n}")
                row.append(x - 1)
            adj.append(row)
        records.append(adj)
    return records


def _bundle_options(u, v, slots_u, slots_v):
    """Candidate dart pairings for the edges between ``u`` and ``v``."""
    if u == v:
        if len(slots_u) % 2:
            raise InconsistentIncidence(f"vertex {u + 1} lists itself an odd number of times")
        return list(_perfect_matchings(slots_u))
    if len(slots_u) != len(slots_v):
        raise InconsistentIncidence(
            f"vertices {u + 1} and {v + 1} disagree on their number of edges"
        )
    k = len(slots_u)
    # non-crossing parallel edges meet v in the reverse of their order at u
    rev = slots_v[::-1]
    return [list(zip(slots_u, rev[s:] + rev[:s])) for s in range(k)]


def _perfect_matchings(items):
    if not items:
        yield []
        return
    a = items[0]
    for i in range(1, len(items)):
        rest = items[1:i] + items[i + 1 :]
        for m in _perfect_matchings(rest):
            yield [(a, items[i])] + m


def _reconstruct(adj: list[list[int]], quad_tiebreak: bool = True, reflect: bool = True) -> PlaneMap:
    n = len(adj)
    if n == 1 and not adj[0]:
        return PlaneMap.single_vertex()
    # counterclockwise dart slots (v, i)
    ccw = [row[:1] + row[1:][::-1] for row in adj]
    slots = defaultdict(list)
    for u, row in enumerate(ccw):
        for i, x in enumerate(row):
            slots[(u, x)].append((u, i))
    bundles = []
    for (u, v), su in slots.items():
        if u < v:
            bundles.append(_bundle_options(u, v, su, slots.get((v, u), [])))
        elif u == v:
            bundles.append(_bundle_options(u, u, su, su))
        elif (v, u) not in slots:
            raise InconsistentIncidence(f"vertex {u + 1} lists {v + 1} but not conversely")
    total = 1
    for b in bundles:
        total *= len(b)
    if total > _MAX_COMPLETIONS:
        raise AmbiguousMultiedgePairing(f"{total} candidate pairings, refusing to search")
    valid = {}
    for choice in itertools.product(*bundles):
        pairing = [pair for bundle in choice for pair in bundle]
        try:
            m = PlaneMap.from_rotation(
                [[(u, i) for i in range(len(row))] for u, row in enumerate(ccw)], pairing
            )
        except (NotGenusZero, NotConnected):
            continue
        except MapError as exc:
            raise FormatError(str(exc)) from exc
        valid.setdefault(canonical_code(m, reflect), m)
    if not valid:
        raise NonPlanarPairing("no pairing of the repeated neighbours gives a plane embedding")
    if len(valid) > 1 and quad_tiebreak:
        # several plane completions: a quadrangulation file means the all-quadrilateral one
        quads = {c: m for c, m in valid.items() if m.is_quadrangulation()}
        if len(quads) == 1:
            valid = quads
    if len(valid) > 1:
        raise AmbiguousMultiedgePairing(f"{len(valid)} non-isomorphic plane completions")
    return next(iter(valid.values()))


def parse_planar_code(data: bytes, quad_tiebreak: bool = True, reflect: bool = True) -> list[PlaneMap]:
    """Decode every record, keeping the file's vertex order as the map layout.

    Repeated neighbours leave the dart pairing open; the genus-0 completion
    is used when it is unique up to isomorphism (mirror images identified
    when ``reflect``; neighbour lists alone cannot tell some chiral pairs
    apart).  With ``quad_tiebreak`` a
    unique all-quadrilateral completion also settles the choice (a pendant
    vertex inside a double edge is otherwise free to sit on either side).
    """
    return [_reconstruct(adj, quad_tiebreak, reflect) for adj in _read_records(data)]


def is_planar_code(data: bytes) -> bool:
    return data.startswith(b">>planar_code")


def read_maps(data: bytes) -> list[PlaneMap]:
    """Parse either format, sniffing the planar_code header."""
    if is_planar_code(data):
        return parse_planar_code(data)
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise FormatError("input is neither planar_code nor UTF-8 text") from exc
    return parse_rotsys(text)


def write_maps(maps: Iterable[PlaneMap], fmt: str = "rotsys") -> bytes:
    if fmt == "rotsys":
        return emit_rotsys(maps).encode()
    if fmt == "planar_code":
        return emit_planar_code(maps)
    raise ValueError(f"unknown format {fmt!r}")
