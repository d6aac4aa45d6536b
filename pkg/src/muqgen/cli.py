"""Command line interface.

Exit codes: 0 success, 1 verification counterexample (or ``iso`` answering
no), 2 usage error, 3 input error (malformed document, or a map unfit for
the requested operation).
"""
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import __version__
from .canonical import canonical_code, is_isomorphic
from .enumeration import default_jobs, enumerate_muqs, filter_maps, radial_graph
from .errors import FormatError, MapError, MuqError, NotParallel, UnknownPredicate, VerificationError
from .formats import emit_rotsys, read_maps, write_maps
from .halves import double_half, double_half_both, extract_half, halves_of, validate_half
from .verify import ACCEPTANCE_MAX_N, CHECKS, census, census_table

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_USAGE, EXIT_FORMAT = 0, 1, 2, 3


class _Usage(Exception):
    pass


def _read_input(path: str | None) -> list:
    if path in (None, "-"):
        data = sys.stdin.buffer.read()
    else:
        data = Path(path).read_bytes()
    return read_maps(data)


def _write(data: bytes, path: str | None) -> None:
    if path in (None, "-"):
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
    else:
        Path(path).write_bytes(data)


def cmd_enumerate(args) -> int:
    stream = enumerate_muqs(args.n, jobs=args.jobs)
    for name in args.filter or []:
        stream = filter_maps(stream, name)
    if args.count_only:
        _write(f"{sum(1 for _ in stream)}\n".encode(), args.output)
    else:
        _write(write_maps(stream, args.format), args.output)
    return EXIT_OK


def cmd_census(args) -> int:
    records = census(range(args.min_n, args.max_n + 1), jobs=args.jobs)
    _write(census_table(records).encode(), args.output)
    return EXIT_OK


def _progress(level, done, total, found):
    print(f"level {level}: {done}/{total} parents, {found} maps", file=sys.stderr, flush=True)


def cmd_verify(args) -> int:
    names = list(CHECKS) if args.check == "all" else [args.check]
    out = []
    status = EXIT_OK
    for name in names:
        kwargs = {}
        if name in ("min8", "theorem1") and args.max_n is not None:
            kwargs["n_max"] = args.max_n
        if name in ("min8", "two-irreducibles", "theorem1"):
            kwargs["jobs"] = args.jobs
        if name == "theorem1":
            if args.max_n is not None and args.max_n > ACCEPTANCE_MAX_N and not args.stretch:
                raise _Usage(f"--max-n above {ACCEPTANCE_MAX_N} requires --stretch")
            kwargs["stretch"] = args.stretch
            kwargs["checkpoint_dir"] = args.checkpoint
            kwargs["progress"] = _progress if args.stretch else None
        try:
            rep = CHECKS[name](**kwargs)
        except VerificationError as exc:
            out.append(f"# {name}\nFAIL {exc}\n" + "".join(f"witness {w}\n" for w in exc.witnesses))
            status = EXIT_COUNTEREXAMPLE
            continue
        out.append(rep.text())
        if name == "upper14":
            out.append(emit_rotsys(rep.maps[:1]))
    _write("".join(out).encode(), args.output)
    return status


def cmd_canon(args) -> int:
    lines = [canonical_code(m, not args.no_reflect).hex() for m in _read_input(args.input)]
    _write(("\n".join(lines) + "\n").encode() if lines else b"", args.output)
    return EXIT_OK


def cmd_iso(args) -> int:
    a = _read_input(args.first)
    b = _read_input(args.second)
    if len(a) != 1 or len(b) != 1:
        raise _Usage("iso expects exactly one map per input")
    same = is_isomorphic(a[0], b[0], not args.no_reflect)
    _write(b"isomorphic\n" if same else b"not isomorphic\n", args.output)
    return EXIT_OK if same else EXIT_COUNTEREXAMPLE


def cmd_radial(args) -> int:
    maps = [radial_graph(m) for m in _read_input(args.input)]
    _write(write_maps(maps, args.format), args.output)
    return EXIT_OK


def cmd_dual(args) -> int:
    maps = [m.dual() for m in _read_input(args.input)]
    _write(write_maps(maps, args.format), args.output)
    return EXIT_OK


def cmd_double(args) -> int:
    out = []
    for m in _read_input(args.input):
        if args.marked:
            v, w = args.marked
            halves = [validate_half(m, v - 1, w - 1)]
        else:
            halves = list(halves_of(m))
        for h in halves:
            out.extend(double_half_both(h) if args.side == "both" else [double_half(h, int(args.side))])
    _write(write_maps(out, args.format), args.output)
    return EXIT_OK


def cmd_extract(args) -> int:
    out = []
    strategy = args.region if args.region == "fewest" else int(args.region)
    for m in _read_input(args.input):
        classes = m.parallel_classes()
        if not classes:
            raise NotParallel("map has no parallel edges")
        if args.parallel_class >= len(classes):
            raise _Usage(f"map has {len(classes)} parallel classes")
        cls = classes[args.parallel_class]
        out.append(extract_half(m, cls, strategy).map)
    _write(write_maps(out, args.format), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="muqgen", description="Plane multiquadrangulation toolkit",
                                allow_abbrev=False)
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, fmt=True):
        sp.add_argument("-o", "--output", default=None, help="output file (default stdout)")
        if fmt:
            sp.add_argument("--format", choices=["rotsys", "planar_code"], default="rotsys")

    def jobs(sp):
        sp.add_argument("--jobs", type=int, default=None,
                        help="worker processes (default $MUQGEN_JOBS or 1)")

    sp = sub.add_parser("enumerate", help="all quadrangulations of one order")
    sp.add_argument("-n", type=int, required=True)
    sp.add_argument("--filter", action="append",
                    help="min-degree>=D, has-parallel, simple, irreducible, parallel-irreducible")
    sp.add_argument("--count-only", action="store_true")
    common(sp)
    jobs(sp)
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("census", help="tab-separated counts per order")
    sp.add_argument("--min-n", type=int, default=3)
    sp.add_argument("--max-n", type=int, required=True)
    common(sp, fmt=False)
    jobs(sp)
    sp.set_defaults(func=cmd_census)

    sp = sub.add_parser("verify", help="run a verification check")
    sp.add_argument("check", choices=[*CHECKS, "all"])
    sp.add_argument("--max-n", type=int, default=None)
    sp.add_argument("--stretch", action="store_true", help="allow orders above the acceptance range")
    sp.add_argument("--checkpoint", default=None, help="directory for resumable level files")
    common(sp, fmt=False)
    jobs(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("canon", help="hex canonical code of each map")
    sp.add_argument("input", nargs="?")
    sp.add_argument("--no-reflect", action="store_true", help="distinguish mirror images")
    common(sp, fmt=False)
    sp.set_defaults(func=cmd_canon)

    sp = sub.add_parser("iso", help="test two single-map documents for isomorphism")
    sp.add_argument("first")
    sp.add_argument("second")
    sp.add_argument("--no-reflect", action="store_true")
    common(sp, fmt=False)
    sp.set_defaults(func=cmd_iso)

    for name, func, text in (("radial", cmd_radial, "radial (vertex-face) map"),
                             ("dual", cmd_dual, "dual map")):
        sp = sub.add_parser(name, help=text)
        sp.add_argument("input", nargs="?")
        common(sp)
        sp.set_defaults(func=func)

    sp = sub.add_parser("double", help="double halves into parallel irreducibles")
    sp.add_argument("input", nargs="?")
    sp.add_argument("--marked", type=int, nargs=2, metavar=("V", "W"),
                    help="marked vertices (1-based); default: every half up to symmetry")
    sp.add_argument("--side", choices=["0", "1", "both"], default="0")
    common(sp)
    sp.set_defaults(func=cmd_double)

    sp = sub.add_parser("extract", help="extract a half from a parallel class")
    sp.add_argument("input", nargs="?")
    sp.add_argument("--parallel-class", type=int, default=0)
    sp.add_argument("--region", default="fewest", help="'fewest' or a region index")
    common(sp)
    sp.set_defaults(func=cmd_extract)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if getattr(args, "jobs", None) is None and hasattr(args, "jobs"):
        args.jobs = default_jobs()
    try:
        return args.func(args)
    except (_Usage, UnknownPredicate, ValueError) as exc:
        if isinstance(exc, FormatError):
            print(f"muqgen: format error: {exc}", file=sys.stderr)
            return EXIT_FORMAT
        print(f"muqgen: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (FormatError, MapError, UnicodeDecodeError) as exc:
        print(f"muqgen: format error: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    except MuqError as exc:
        print(f"muqgen: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    except OSError as exc:
        print(f"muqgen: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
