import subprocess
import sys

import pytest

from muqgen import emit_planar_code, emit_rotsys, is_isomorphic, parse_rotsys
from muqgen import verify as verify_mod
from muqgen.cli import main
from muqgen.fixtures import C4, CUBE, P14


def run(capsysbinary, *argv):
    code = main(list(argv))
    out = capsysbinary.readouterr()
    return code, out.out, out.err


def test_enumerate_count_only(capsysbinary):
    assert run(capsysbinary, "enumerate", "-n", "3", "--count-only")[:2] == (0, b"1\n")
    assert run(capsysbinary, "enumerate", "-n", "4", "--count-only")[:2] == (0, b"3\n")


def test_enumerate_filters_and_formats(capsysbinary, tmp_path):
    code, out, _ = run(capsysbinary, "enumerate", "-n", "8", "--filter", "irreducible")
    assert code == 0
    (m,) = parse_rotsys(out.decode())
    assert is_isomorphic(m, CUBE())
    target = tmp_path / "q6.pc"
    assert run(capsysbinary, "enumerate", "-n", "6", "--format", "planar_code", "-o", str(target))[0] == 0
    assert target.read_bytes().startswith(b">>planar_code<<")
    code, out, _ = run(capsysbinary, "enumerate", "-n", "7", "--filter", "min-degree>=2",
                       "--filter", "simple", "--count-only")
    assert (code, out) == (0, b"3\n")


def test_usage_errors(capsysbinary):
    assert run(capsysbinary, "enumerate", "-n", "5", "--filter", "bogus")[0] == 2
    assert run(capsysbinary, "verify", "theorem1", "--max-n", "12")[0] == 2
    assert run(capsysbinary, "canon", "/nonexistent/file")[0] == 2
    with pytest.raises(SystemExit) as err:
        main(["frobnicate"])
    assert err.value.code == 2


def test_format_errors(capsysbinary, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("n=2 e=1\n1: 1\nnot a line\n")
    code, _, err = run(capsysbinary, "canon", str(bad))
    assert code == 3 and b"line 3" in err
    trunc = tmp_path / "trunc.pc"
    trunc.write_bytes(b">>planar_code<<\x03\x02\x00")
    assert run(capsysbinary, "dual", str(trunc))[0] == 3


def test_canon_iso_dual_radial(capsysbinary, tmp_path):
    cube = tmp_path / "cube.txt"
    cube.write_text(emit_rotsys([CUBE()], normalize=False))
    c4 = tmp_path / "c4.pc"
    c4.write_bytes(emit_planar_code([C4()]))
    code, out, _ = run(capsysbinary, "canon", str(cube))
    assert code == 0 and len(out.split()) == 1
    assert run(capsysbinary, "iso", str(cube), str(cube))[:2] == (0, b"isomorphic\n")
    assert run(capsysbinary, "iso", str(cube), str(c4))[:2] == (1, b"not isomorphic\n")
    code, out, _ = run(capsysbinary, "dual", str(c4))
    (d,) = parse_rotsys(out.decode())
    assert (d.num_vertices, d.num_edges) == (2, 4)
    code, out, _ = run(capsysbinary, "radial", str(cube))
    (r,) = parse_rotsys(out.decode())
    assert (r.num_vertices, r.num_edges) == (14, 24)


def test_double_and_extract(capsysbinary, tmp_path):
    cube = tmp_path / "cube.txt"
    cube.write_text(emit_rotsys([CUBE()]))
    code, out, _ = run(capsysbinary, "double", str(cube), "--side", "both")
    maps = parse_rotsys(out.decode())
    assert code == 0 and len(maps) == 2
    assert all(is_isomorphic(m, P14()) for m in maps)
    p14 = tmp_path / "p14.txt"
    p14.write_bytes(out)
    code, out, _ = run(capsysbinary, "extract", str(p14))
    assert code == 0 and all(is_isomorphic(m, CUBE()) for m in parse_rotsys(out.decode()))
    (m,) = parse_rotsys(emit_rotsys([CUBE()]))
    v, w = m.endpoints(0)
    code, out, _ = run(capsysbinary, "double", str(cube), "--marked", str(v + 1), str(w + 1))
    assert code == 0 and is_isomorphic(parse_rotsys(out.decode())[0], P14())
    assert run(capsysbinary, "double", str(cube), "--marked", "1", "1")[0] == 3
    assert run(capsysbinary, "extract", str(cube))[0] == 3


def test_verify_commands(capsysbinary):
    code, out, _ = run(capsysbinary, "verify", "upper14")
    text = out.decode()
    assert code == 0 and "PASS" in text
    (witness,) = parse_rotsys(text[text.index("\nn=14 e=24\n"):])
    assert witness.is_parallel_irreducible()
    code, out, _ = run(capsysbinary, "verify", "theorem1", "--max-n", "8")
    assert code == 0
    assert out.decode().splitlines()[1:] == [f"n={n} total={t} parallel_irreducible=0"
                                             for n, t in [(3, 1), (4, 3), (5, 7), (6, 30), (7, 124), (8, 733)]] + ["PASS"]


def test_verify_counterexample_exit_code(capsysbinary, monkeypatch):
    def boom(**kw):
        from muqgen.errors import CounterexampleFound
        raise CounterexampleFound("injected", ["00"])

    monkeypatch.setitem(verify_mod.CHECKS, "upper14", boom)
    code, out, _ = run(capsysbinary, "verify", "upper14")
    assert code == 1 and b"witness 00" in out


def test_stretch_mode_checkpoints(capsysbinary, monkeypatch, tmp_path):
    # shrink the acceptance ceiling so orders 7 and 8 go through the stretch path
    monkeypatch.setattr(verify_mod, "ACCEPTANCE_MAX_N", 6)
    monkeypatch.setattr("muqgen.cli.ACCEPTANCE_MAX_N", 6)
    code, out, err = run(capsysbinary, "verify", "theorem1", "--max-n", "8", "--stretch",
                         "--checkpoint", str(tmp_path))
    assert code == 0 and b"PASS" in out
    assert b"level" in err
    assert any(p.name.startswith("level_") for p in tmp_path.iterdir())


def test_census(capsysbinary):
    code, out, _ = run(capsysbinary, "census", "--max-n", "5")
    assert code == 0
    assert out.decode().splitlines()[-1].split("\t")[:4] == ["5", "7", "1", "6"]


def _cli(*argv):
    return subprocess.run([sys.executable, "-m", "muqgen", *argv], capture_output=True, check=True).stdout


def test_runs_are_byte_identical_across_jobs():
    one = _cli("enumerate", "-n", "9", "--jobs", "1")
    assert one == _cli("enumerate", "-n", "9", "--jobs", "1")
    assert one == _cli("enumerate", "-n", "9", "--jobs", "4")
    assert _cli("enumerate", "-n", "8", "--format", "planar_code", "--jobs", "4") == _cli(
        "enumerate", "-n", "8", "--format", "planar_code"
    )
