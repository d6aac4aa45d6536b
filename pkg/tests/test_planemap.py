import numpy as np
import pytest

from muqgen import PlaneMap, is_isomorphic
from muqgen.errors import (
    CornersNotOnSameFace,
    DisconnectedResult,
    MalformedPairing,
    NotAQuadrangulation,
    NotConnected,
    NotGenusZero,
    UnknownVertex,
)
from muqgen.fixtures import C4, CUBE, F10, K2, LOOP, P2, P14, Q3, Q4


def nef(m):
    return m.num_vertices, m.num_edges, m.num_faces


def test_construct_basic_counts():
    assert nef(C4()) == (4, 4, 2)
    assert nef(P2()) == (3, 2, 1)
    assert nef(CUBE()) == (8, 12, 6)
    assert nef(PlaneMap.single_vertex()) == (1, 0, 1)


def test_from_rotation_with_explicit_pairing():
    rot = [[0, 7], [1, 2], [3, 4], [5, 6]]
    pairing = [(0, 1), (2, 3), (4, 5), (6, 7)]
    m = PlaneMap.from_rotation(rot, pairing)
    assert nef(m) == (4, 4, 2)
    assert is_isomorphic(m, C4())


def test_cross_paired_double_edge_is_not_planar():
    # two vertices, four edges, pairing a b c d at u with a c b d at v: torus
    with pytest.raises(NotGenusZero):
        PlaneMap.from_edge_rotation([["a", "b", "c", "d"], ["a", "c", "b", "d"]])


def test_malformed_inputs():
    with pytest.raises(MalformedPairing):
        PlaneMap.from_rotation([[0, 1], [2]], [(0, 1)])
    with pytest.raises(MalformedPairing):
        PlaneMap([0, 0])
    with pytest.raises(NotConnected):
        PlaneMap.from_edge_rotation([["a"], ["a"], ["b"], ["b"]])


def test_faces():
    (f,) = P2().faces()
    assert len(f) == 4
    assert sorted(C4().face_lengths()) == [4, 4]
    assert CUBE().face_lengths() == [4] * 6
    for m in (P2(), C4(), CUBE(), Q3(), LOOP()):
        assert sum(m.face_lengths()) == 2 * m.num_edges


def test_p2_face_walk_visits_middle_twice():
    m = P2()
    (f,) = m.faces()
    walk = [int(m.vertex_of[d]) for d in f]
    mid = int(np.argmax(m.degrees))
    assert walk.count(mid) == 2


def test_degrees():
    m = P2()
    assert sorted(m.degrees.tolist()) == [1, 1, 2]
    assert m.min_degree() == 1
    assert C4().min_degree() == 2
    assert CUBE().min_degree() == 3
    assert LOOP().degree(0) == 2
    with pytest.raises(UnknownVertex):
        P2().degree(7)
    with pytest.raises(KeyError):
        P2().degree(-1)


def test_parallel_classes():
    assert C4().parallel_classes() == []
    (cls,) = Q3().parallel_classes()
    assert cls.k == 2
    assert all(len(r) >= 1 for r in cls.regions)
    (cls,) = P14().parallel_classes()
    assert cls.k == 2
    assert sorted(cls.region_sizes()) == [6, 6]
    assert P14().multiplicity(*cls.endpoints) == 2


def test_quadrangulation_predicates():
    assert P2().is_quadrangulation() and not P2().is_simple_quadrangulation()
    assert C4().is_quadrangulation() and C4().is_simple_quadrangulation()
    assert Q4().is_quadrangulation() and not Q4().is_simple_quadrangulation()
    assert not LOOP().is_quadrangulation()
    assert not K2().is_quadrangulation()
    assert not PlaneMap.single_vertex().is_quadrangulation()


def test_irreducible():
    assert P2().is_irreducible()
    assert not C4().is_irreducible()
    assert CUBE().is_irreducible() and F10().is_irreducible()
    assert P14().is_parallel_irreducible()
    assert not CUBE().is_parallel_irreducible()
    with pytest.raises(NotAQuadrangulation):
        K2().is_irreducible()


def test_adjacent_degree_check():
    assert P2().adjacent_degree_check()
    assert CUBE().adjacent_degree_check()
    with pytest.raises(NotAQuadrangulation):
        LOOP().adjacent_degree_check()


def test_induced_submap():
    cube = CUBE()
    assert is_isomorphic(cube.induced_submap(cube.vertices()), cube)
    c4 = C4()
    opposite = [v for v in c4.vertices() if v not in c4.neighbors(0)]
    with pytest.raises(DisconnectedResult):
        c4.induced_submap(opposite)


def test_induced_on_p14_region_keeps_both_parallel_edges():
    p = P14()
    (cls,) = p.parallel_classes()
    sub = p.induced_submap(set(cls.regions[0]) | {cls.v, cls.w})
    assert sub.num_vertices == 8
    # one copy's 12 edges plus the second parallel edge
    assert sub.num_edges == 13
    (sub_cls,) = sub.parallel_classes()
    assert sub_cls.k == 2


def test_dual():
    d = C4().dual()
    assert nef(d) == (2, 4, 4)
    (cls,) = d.parallel_classes()
    assert cls.k == 4
    assert CUBE().dual().dual() == CUBE()
    assert is_isomorphic(P2().dual(), PlaneMap.from_edge_rotation([["a", "a", "b", "b"]]))


def test_delete_merges_faces():
    q = Q3()
    for e in range(q.num_edges):
        try:
            r = q.delete_edges([e])
        except DisconnectedResult:
            continue
        fq = q.face_of
        la, lb = (q.face_lengths()[fq[d]] for d in q.edge_darts(e))
        assert r.num_faces == q.num_faces - 1
        assert sorted(r.face_lengths()) == sorted(
            [x for i, x in enumerate(q.face_lengths()) if i not in (fq[2 * e], fq[2 * e + 1])]
            + [la + lb - 2]
        )


def test_delete_parallel_edge_of_digon_map():
    # two vertices, two parallel edges: two digons merge into one face of length 2
    m = PlaneMap.from_edge_rotation([["a", "b"], ["b", "a"]])
    assert m.face_lengths() == [2, 2]
    r = m.delete_edges([0])
    assert r.face_lengths() == [2]
    with pytest.raises(DisconnectedResult):
        P2().delete_edges([0])


def test_add_edge_and_pendant():
    c4 = C4()
    f0 = [d for d in range(c4.num_darts) if c4.corner_face(d) == 0]
    g = c4.add_edge(f0[0], f0[1])
    assert nef(g) == (4, 5, 3)
    assert is_isomorphic(g.delete_edges([4]), c4)
    other = next(d for d in range(c4.num_darts) if c4.corner_face(d) != c4.corner_face(f0[0]))
    with pytest.raises(CornersNotOnSameFace):
        c4.add_edge(f0[0], other)
    loop = c4.add_edge(0, 0)
    assert loop.has_loops() and 1 in loop.face_lengths()
    assert nef(c4.add_pendant(0)) == (5, 5, 2)
    assert PlaneMap.single_vertex().add_edge(None, None) == LOOP()
    assert PlaneMap.single_vertex().add_pendant(None) == K2()


def test_relabel_and_mirror():
    cube = CUBE()
    rng = np.random.default_rng(1)
    edges = rng.permutation(cube.num_edges)
    flips = rng.integers(0, 2, cube.num_edges)
    perm = np.empty(cube.num_darts, dtype=np.int64)
    perm[0::2] = 2 * edges + flips
    perm[1::2] = perm[0::2] ^ 1
    r = cube.relabel(perm)
    assert r != cube and is_isomorphic(r, cube, reflect=False)
    with pytest.raises(MalformedPairing):
        cube.relabel(np.roll(np.arange(cube.num_darts), 1))
    assert cube.mirror().mirror() == cube
