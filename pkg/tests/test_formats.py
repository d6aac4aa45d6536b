import pytest

from muqgen import (
    canonical_code,
    emit_planar_code,
    emit_rotsys,
    is_isomorphic,
    parse_planar_code,
    parse_rotsys,
    read_maps,
    write_maps,
)
from muqgen.errors import (
    AmbiguousMultiedgePairing,
    BadHeader,
    FormatError,
    InconsistentIncidence,
    NonPlanarPairing,
    RotsysSyntaxError,
    TruncatedRecord,
)
from muqgen.fixtures import C4, CUBE, F10, P2, P14, Q3

from conftest import muqs, muqs_upto

HEADER = b">>planar_code<<"


def cube_planar_code():
    # cube, vertices 1..8 (outer square 1-4, inner 5-8), neighbours clockwise
    rows = [[2, 4, 5], [3, 1, 6], [4, 2, 7], [1, 3, 8],
            [1, 8, 6], [2, 5, 7], [3, 6, 8], [4, 7, 5]]
    body = bytes([8]) + b"".join(bytes(r) + b"\0" for r in rows)
    return HEADER + body


def test_p2_document():
    (m,) = parse_rotsys("n=3 e=2\n1: a\n2: a b\n3: b\n")
    assert is_isomorphic(m, P2())


def test_repeated_edge_id_rejected():
    with pytest.raises(InconsistentIncidence):
        parse_rotsys("n=4 e=4\n1: p a q\n2: p c q\n3: a a\n4: c\n")


def test_rotsys_syntax_errors_carry_line_numbers():
    with pytest.raises(RotsysSyntaxError) as err:
        parse_rotsys("n=2 e=1\n1: 1\nhello\n")
    assert err.value.lineno == 3
    with pytest.raises(RotsysSyntaxError):
        parse_rotsys("1: 1\n")
    with pytest.raises(RotsysSyntaxError):
        parse_rotsys("n=2 e=1\n1: 1\n")
    with pytest.raises(InconsistentIncidence):
        parse_rotsys("n=2 e=2\n1: 1\n2: 1\n")
    with pytest.raises(FormatError):
        parse_rotsys("n=2 e=2\n1: a b c d\n2: a c b d\n")


def test_emit_order4():
    text = emit_rotsys(muqs(4))
    assert text.count("n=4 e=4") == 3
    assert emit_rotsys(parse_rotsys(text)) == text


def test_rotsys_comments_and_single_vertex():
    text = emit_rotsys(muqs(3)) + "\n# a comment\n"
    (m,) = parse_rotsys(text)
    assert is_isomorphic(m, P2())
    from muqgen import PlaneMap

    single = emit_rotsys([PlaneMap.single_vertex()])
    assert single == "n=1 e=0\n1:\n"
    (s,) = parse_rotsys(single)
    assert s.num_darts == 0


def test_rotsys_roundtrip_all_small():
    maps = list(muqs_upto(8))
    text = emit_rotsys(maps)
    back = parse_rotsys(text)
    assert [canonical_code(m, False) for m in back] == [canonical_code(m, False) for m in maps]
    assert emit_rotsys(back) == text


def test_planar_code_cube_file_exact():
    data = cube_planar_code()
    (m,) = parse_planar_code(data)
    assert is_isomorphic(m, CUBE())
    assert emit_planar_code([m]) == data


def test_planar_code_roundtrip_fixtures():
    maps = [C4(), CUBE(), F10(), P14(), Q3()]
    back = parse_planar_code(emit_planar_code(maps))
    assert [is_isomorphic(a, b) for a, b in zip(maps, back)] == [True] * 5


def test_format_duality_all_small():
    maps = list(muqs_upto(8))
    via = parse_planar_code(emit_planar_code(parse_rotsys(emit_rotsys(maps))))
    assert [canonical_code(m) for m in via] == [canonical_code(m) for m in maps]
    assert emit_planar_code(via) == emit_planar_code(parse_rotsys(emit_rotsys(maps)))


def test_planar_code_errors():
    with pytest.raises(BadHeader):
        parse_planar_code(b"<<planar_code>>\x01\x00")
    with pytest.raises(TruncatedRecord):
        parse_planar_code(HEADER + bytes([3, 2, 0, 1]))
    with pytest.raises(FormatError):
        parse_planar_code(HEADER + bytes([2, 3, 0, 1, 0]))
    with pytest.raises(InconsistentIncidence):
        parse_planar_code(HEADER + bytes([3, 2, 0, 3, 0, 2, 0]))


def test_interleaved_pairing_is_non_planar():
    # vertex 1 sees 2,3,2,3 clockwise: the two double edges would cross
    data = HEADER + bytes([3, 2, 3, 2, 3, 0, 1, 1, 0, 1, 1, 0])
    with pytest.raises(NonPlanarPairing):
        parse_planar_code(data)


def test_ambiguous_pairing_is_reported():
    amb = 0
    for q in muqs(9):
        try:
            back = parse_planar_code(emit_planar_code([q]))[0]
        except AmbiguousMultiedgePairing:
            amb += 1
            continue
        assert is_isomorphic(back, q)
    assert amb == 4


def test_read_write_sniffing():
    maps = [C4(), CUBE()]
    for fmt in ("rotsys", "planar_code"):
        back = read_maps(write_maps(maps, fmt))
        assert all(is_isomorphic(a, b) for a, b in zip(maps, back))
    with pytest.raises(ValueError):
        write_maps(maps, "graph6")
    with pytest.raises(FormatError):
        read_maps(b"\xff\xfe\x00")
