"""Runnable checks of the order bounds for irreducible quadrangulations.

Every check returns a :class:`Report`; reports only depend on the
enumeration output, so reruns are byte-identical.  Failing checks raise a
:class:`~muqgen.errors.VerificationError` carrying the witnesses' canonical
codes.
"""
from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping

from .canonical import canonical_code, is_isomorphic
from .enumeration import LevelCheckpoint, enumerate_muqs
from .errors import ConstructionFailed, CounterexampleFound, CountMismatch, FixtureMismatch
from .fixtures import CUBE, F10, P2
from .halves import double_half, halves_of
from .planemap import PlaneMap

log = logging.getLogger(__name__)

# simple quadrangulations with minimum degree 3, orders 8..10
KNOWN_SIMPLE_IRREDUCIBLE = {8: 1, 9: 0, 10: 1}
ACCEPTANCE_MAX_N = 11


@dataclass
class CensusRecord:
    n: int
    total: int = 0
    simple: int = 0
    parallel: int = 0
    irreducible: int = 0
    parallel_irreducible: int = 0
    simple_irreducible: int = 0
    min_degree: Counter = field(default_factory=Counter)

    COLUMNS = ("n", "total", "simple", "parallel", "irreducible",
               "parallel_irreducible", "simple_irreducible",
               "mindeg1", "mindeg2", "mindeg3")

    def add(self, q: PlaneMap) -> None:
        self.total += 1
        simple = q.is_simple_quadrangulation()
        parallel = q.has_parallel_edges()
        irred = q.is_irreducible()
        self.simple += simple
        self.parallel += parallel
        self.irreducible += irred
        self.parallel_irreducible += irred and parallel
        self.simple_irreducible += irred and simple
        self.min_degree[q.min_degree()] += 1

    def row(self) -> list[int]:
        return [self.n, self.total, self.simple, self.parallel, self.irreducible,
                self.parallel_irreducible, self.simple_irreducible,
                self.min_degree[1], self.min_degree[2], self.min_degree[3]]


def census_record(n: int, jobs: int | None = None, **kw) -> CensusRecord:
    rec = CensusRecord(n)
    for q in enumerate_muqs(n, jobs=jobs, **kw):
        rec.add(q)
    return rec


def census(n_range: Iterable[int], jobs: int | None = None) -> list[CensusRecord]:
    return [census_record(n, jobs) for n in n_range]


def census_table(records: Iterable[CensusRecord]) -> str:
    lines = ["\t".join(CensusRecord.COLUMNS)]
    lines += ["\t".join(str(x) for x in r.row()) for r in records]
    return "\n".join(lines) + "\n"


@dataclass
class Report:
    check: str
    lines: list[str] = field(default_factory=list)
    witnesses: dict[str, list[str]] = field(default_factory=dict)
    maps: list[PlaneMap] = field(default_factory=list)

    def say(self, line: str) -> None:
        log.info("%s: %s", self.check, line)
        self.lines.append(line)

    def text(self) -> str:
        out = [f"# {self.check}"] + self.lines
        for name, codes in self.witnesses.items():
            out += [f"witness {name} {c}" for c in codes]
        return "\n".join(out) + "\n"


def _hex(q: PlaneMap) -> str:
    return canonical_code(q).hex()


def verify_min_order_8(n_max: int = 7, jobs: int | None = None) -> Report:
    """Below order 8 the only irreducible quadrangulation is the 3-vertex path."""
    if n_max > 7:
        raise ValueError("n_max must be at most 7")
    rep = Report("min8")
    p2 = P2()
    for n in range(3, n_max + 1):
        irr = [q for q in enumerate_muqs(n, jobs=jobs) if q.is_irreducible()]
        bad = [q for q in irr if q.min_degree() == 3 or not is_isomorphic(q, p2)]
        rep.witnesses[f"n={n}"] = [_hex(q) for q in irr]
        if bad:
            raise CounterexampleFound(f"irreducible of order {n} besides P2", [_hex(q) for q in bad])
        if n == 3 and len(irr) != 1:
            raise CountMismatch("P2 missing at order 3")
        rep.say(f"n={n} irreducible={len(irr)} min_degree_3=0")
    rep.say("PASS")
    return rep


def verify_two_irreducibles(jobs: int | None = None) -> Report:
    """Orders 8, 9, 10 carry 1, 0, 1 irreducibles: CUBE and F10, both simple."""
    rep = Report("two-irreducibles")
    fixtures = {8: CUBE(), 10: F10()}
    for n, expected in KNOWN_SIMPLE_IRREDUCIBLE.items():
        irr = [q for q in enumerate_muqs(n, jobs=jobs) if q.is_irreducible()]
        rep.witnesses[f"n={n}"] = [_hex(q) for q in irr]
        if len(irr) != expected:
            raise CountMismatch(f"order {n}: {len(irr)} irreducibles, expected {expected}",
                                [_hex(q) for q in irr])
        for q in irr:
            if not q.is_simple_quadrangulation():
                raise FixtureMismatch(f"order {n} irreducible is not simple", [_hex(q)])
            if not is_isomorphic(q, fixtures[n]):
                raise FixtureMismatch(f"order {n} irreducible differs from the fixture", [_hex(q)])
        rep.say(f"n={n} irreducible={len(irr)} simple={len(irr)}")
    rep.say("PASS")
    return rep


def check_no_parallel_irreducible(
    maps_by_order: Mapping[int, Iterable[PlaneMap]] | Iterable[tuple[int, Iterable[PlaneMap]]],
    rep: Report | None = None,
) -> Report:
    """Scan quadrangulations order by order and fail on any parallel irreducible."""
    rep = rep if rep is not None else Report("theorem1")
    pairs = maps_by_order.items() if isinstance(maps_by_order, Mapping) else maps_by_order
    for n, maps in pairs:
        total = 0
        hits = []
        for q in maps:
            total += 1
            if q.min_degree() >= 3 and q.has_parallel_edges():
                hits.append(q)
        if hits:
            rep.maps.extend(hits)
            raise CounterexampleFound(
                f"order {n}: {len(hits)} parallel irreducible(s)", [_hex(q) for q in hits]
            )
        rep.say(f"n={n} total={total} parallel_irreducible=0")
    return rep


def verify_theorem1(
    n_max: int = ACCEPTANCE_MAX_N,
    jobs: int | None = None,
    stretch: bool = False,
    checkpoint_dir: str | None = None,
    progress: Callable[[int, int, int, int], None] | None = None,
) -> Report:
    """No irreducible quadrangulation with parallel edges has fewer than ``n_max + 1`` vertices."""
    if n_max > ACCEPTANCE_MAX_N and not stretch:
        raise ValueError(f"orders above {ACCEPTANCE_MAX_N} need stretch mode")
    rep = Report("theorem1")
    ck = LevelCheckpoint(checkpoint_dir) if checkpoint_dir else None

    def orders():
        for n in range(3, n_max + 1):
            kw = {"checkpoint": ck, "progress": progress} if n > ACCEPTANCE_MAX_N else {}
            yield n, enumerate_muqs(n, jobs=jobs, **kw)

    check_no_parallel_irreducible(orders(), rep)
    rep.say("PASS")
    return rep


def verify_upper_bound_14() -> Report:
    """Doubling CUBE yields a parallel irreducible quadrangulation of order 14."""
    rep = Report("upper14")
    cube = CUBE()
    halves = list(halves_of(cube))
    if not halves:
        raise ConstructionFailed("CUBE has no half")
    h = halves[0]
    for side in (0, 1):
        p, x, y, edges = double_half(h, side, return_marks=True)
        ok = (
            p.num_vertices == 14
            and p.num_edges == 2 * 14 - 4
            and p.is_quadrangulation()
            and p.has_parallel_edges()
            and p.is_irreducible()
            and p.degree(x) == p.degree(y) == h.degree_sum()
        )
        if not ok:
            raise ConstructionFailed(f"doubling on side {side} failed", [_hex(p)])
        classes = p.parallel_classes()
        sizes = [c.region_sizes() for c in classes]
        rep.say(f"side={side} n={p.num_vertices} e={p.num_edges} deg_x={p.degree(x)} "
                f"deg_y={p.degree(y)} classes={sizes}")
        rep.witnesses.setdefault("P14", []).append(_hex(p))
        rep.maps.append(p)
    rep.say("PASS")
    return rep


CHECKS = {
    "min8": verify_min_order_8,
    "two-irreducibles": verify_two_irreducibles,
    "theorem1": verify_theorem1,
    "upper14": verify_upper_bound_14,
}
