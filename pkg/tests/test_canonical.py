import itertools
import random

import numpy as np
import pytest

from muqgen import (
    CanonicalCode,
    PlaneMap,
    automorphism_count,
    canonical_code,
    canonical_form,
    is_chiral,
    is_isomorphic,
    radial_graph,
)
from muqgen.fixtures import C4, CUBE, F10, K2, LOOP, P2, P14, Q3, Q4

from conftest import multigraphs, muqs


def brute_automorphisms(m, reflect):
    """Count dart permutations commuting with alpha and sending sigma to sigma (or its inverse)."""
    s = m.sigma.tolist()
    inv = [0] * len(s)
    for d, t in enumerate(s):
        inv[t] = d
    targets = [s, inv] if reflect else [s]
    count = 0
    for p in itertools.permutations(range(len(s))):
        if any(p[d ^ 1] != p[d] ^ 1 for d in range(len(s))):
            continue
        for t in targets:
            if all(p[s[d]] == t[p[d]] for d in range(len(s))):
                count += 1
    return count


def random_relabel(m, seed):
    rng = np.random.default_rng(seed)
    e = m.num_edges
    perm = np.empty(2 * e, dtype=np.int64)
    perm[0::2] = 2 * rng.permutation(e) + rng.integers(0, 2, e)
    perm[1::2] = perm[0::2] ^ 1
    return m.relabel(perm)


@pytest.mark.parametrize("fixture", [K2, LOOP, P2, C4, Q3, Q4])
@pytest.mark.parametrize("reflect", [True, False])
def test_automorphism_count_matches_brute_force(fixture, reflect):
    m = fixture()
    assert automorphism_count(m, reflect) == brute_automorphisms(m, reflect)


def test_automorphism_examples():
    assert automorphism_count(C4(), True) == 16
    assert automorphism_count(K2(), False) == 2
    # swapping the end edges and reflecting across the path axis: 4 in total
    assert automorphism_count(P2(), True) == 4
    assert automorphism_count(P2(), False) == 2


def test_fixture_symmetry_under_both_regimes():
    table = {CUBE: (48, 24), F10: (16, 8), P14: (8, 4)}
    for fixture, (both, oriented) in table.items():
        m = fixture()
        assert automorphism_count(m, True) == both
        assert automorphism_count(m, False) == oriented
        assert not is_chiral(m)


def test_automorphism_count_divides_darts_times_senses():
    for k in range(1, 5):
        for m in multigraphs(k):
            assert (2 * m.num_darts) % automorphism_count(m, True) == 0
            assert m.num_darts % automorphism_count(m, False) == 0


@pytest.mark.parametrize("fixture", [C4, Q3, Q4, CUBE, F10, P14])
def test_code_invariant_under_relabelling(fixture):
    m = fixture()
    for seed in range(5):
        r = random_relabel(m, seed)
        assert canonical_code(r) == canonical_code(m)
        assert canonical_code(r, False) == canonical_code(m, False)


def test_distinct_fixtures_have_distinct_codes():
    assert canonical_code(Q3()) != canonical_code(Q4())
    assert not is_isomorphic(CUBE(), F10())
    assert not is_isomorphic(P2(), C4())
    assert is_isomorphic(CUBE(), random_relabel(CUBE(), 7))


def test_code_roundtrip_and_form():
    for m in (P2(), Q3(), CUBE(), LOOP(), PlaneMap.single_vertex()):
        c = canonical_code(m)
        assert isinstance(c, CanonicalCode)
        assert is_isomorphic(c.to_map(), m)
        assert canonical_form(m) == c.to_map()
        assert canonical_code(canonical_form(m)) == c


def test_codes_totally_ordered_and_hex():
    codes = sorted(canonical_code(q) for q in muqs(6))
    assert codes == sorted(set(codes))
    assert all(a < b for a, b in zip(codes, codes[1:]))
    assert bytes.fromhex(codes[0].hex()) == codes[0].data


def test_mirror_identified_only_with_reflect():
    chiral = [m for m in multigraphs(5) if is_chiral(m)]
    assert chiral
    for m in chiral:
        assert canonical_code(m) == canonical_code(m.mirror())
        assert canonical_code(m, False) != canonical_code(m.mirror(), False)
    for m in multigraphs(4):
        assert canonical_code(m) == canonical_code(m.mirror())


def test_radial_of_dual_pair_agree():
    for k in range(1, 6):
        for h in multigraphs(k):
            assert canonical_code(radial_graph(h)) == canonical_code(radial_graph(h.dual()))


def test_isomorphism_is_transitive_on_random_triples():
    maps = list(muqs(6))
    rng = random.Random(3)
    for _ in range(200):
        a, b, c = (rng.choice(maps) for _ in range(3))
        b2 = random_relabel(a, rng.randrange(100)) if rng.random() < 0.5 else b
        if is_isomorphic(a, b2) and is_isomorphic(b2, c):
            assert is_isomorphic(a, c)
        assert is_isomorphic(a, a)
        assert is_isomorphic(a, b2) == is_isomorphic(b2, a)
