"""Classification tests: colorful witnesses, vibrancy, switcher detection
with the canonical rotation, greedy disjoint packings with their maximality
certificate, and dominant partitions."""

from collections import Counter
from itertools import combinations

import numpy as np
import pytest

from zsforest import ColoredClique, Residue
from zsforest.classify import (ColorfulWitness, NoDominantColor, SwitcherQuad,
                               _subset_switcher, _switcher_mask,
                               colorful_witness, dominant_partition,
                               is_switcher, maximal_disjoint_switchers,
                               vibrant_vertices)
from zsforest.randomgen import random_coloring, splitmix64


def mono(order, modulus, color=0):
    m = np.full((order, order), color, dtype=np.int16)
    np.fill_diagonal(m, 0)
    return ColoredClique(order, modulus, m)


def quad_clique(colors, p):
    """K_4 whose cycle 0-1-2-3-0 has the given consecutive edge colors;
    both diagonals get color 0."""
    e1, e2, e3, e4 = colors
    return ColoredClique.from_pairs(4, p, {
        (0, 1): e1, (1, 2): e2, (2, 3): e3, (3, 0): e4,
        (0, 2): 0, (1, 3): 0})


def canonical_inequality_holds(k, quad):
    d1, d2, d3, d4 = quad.vertices
    p = k.modulus
    left = (k.value(d4, d1) + k.value(d1, d2)) % p
    right = (k.value(d2, d3) + k.value(d3, d4)) % p
    return left != right


# ---------------------------------------------------------------------------
# colorful vertices and vibrancy
# ---------------------------------------------------------------------------

def test_colorful_witness_monochromatic_absent():
    k = mono(10, 2)
    for v in range(10):
        assert colorful_witness(k, v, 1) is None


def test_colorful_witness_boundary():
    # vertex 0 sees three 1s and six 2s; b=3 admits color 1 (3 <= 3 <= 6)
    # and rejects color 2 only at the top end check (6 <= 6 passes), so the
    # lowest qualifying color is 1
    m = np.full((10, 10), 2, dtype=np.int16)
    np.fill_diagonal(m, 0)
    for u in (1, 2, 3):
        m[0, u] = m[u, 0] = 1
    k = ColoredClique(10, 3, m)
    w = colorful_witness(k, 0, 3)
    assert w == ColorfulWitness(0, Residue(1, 3), 3)


def test_colorful_witness_small_clique_absent():
    k = mono(4, 2)
    for v in range(4):
        assert colorful_witness(k, v, 2) is None


def test_colorful_witness_rejects_bad_args():
    k = mono(4, 2)
    with pytest.raises(ValueError):
        colorful_witness(k, 0, 0)
    with pytest.raises(ValueError):
        colorful_witness(k, 4, 1)


def test_vibrant_vertices_monochromatic_empty():
    for p in (2, 3, 5):
        assert vibrant_vertices(mono(12, p), p) == []


def test_vibrant_vertices_single_off_color_edge():
    m = np.zeros((4, 4), dtype=np.int16)
    m[0, 1] = m[1, 0] = 1
    k = ColoredClique(4, 2, m)
    ws = vibrant_vertices(k, 2)
    assert [w.vertex for w in ws] == [0, 1]
    assert len(ws) >= 1  # vibrant for p=2


def test_vibrant_vertices_against_histogram_recount():
    k = random_coloring(22, 3, seed=2024)
    b = 3 * 3 - 5
    expect = []
    for v in range(22):
        hist = Counter(int(k.matrix[v, u]) for u in range(22) if u != v)
        best = None
        for c in range(3):
            if b <= hist.get(c, 0) <= 22 - b - 1:
                best = (v, c, hist[c])
                break
        if best is not None:
            expect.append(best)
    got = [(w.vertex, w.color.value, w.degree_in_color)
           for w in vibrant_vertices(k, 3)]
    assert got == expect
    assert len(got) >= 2  # this seed is vibrant for p=3


# ---------------------------------------------------------------------------
# switchers
# ---------------------------------------------------------------------------

def test_switcher_first_pairing_rotates():
    k = quad_clique((1, 0, 0, 0), 3)
    got = is_switcher(k, (0, 1, 2, 3))
    assert got == SwitcherQuad((1, 2, 3, 0))
    assert canonical_inequality_holds(k, got)


def test_switcher_monochromatic_absent():
    assert is_switcher(mono(4, 3), (0, 1, 2, 3)) is None
    assert is_switcher(mono(6, 2), (5, 1, 4, 2)) is None


def test_switcher_second_pairing_kept_as_given():
    # first pairing balances (1+2 = 0+0 mod 3), second does not (2+0 != 0+1)
    k = quad_clique((1, 2, 0, 0), 3)
    got = is_switcher(k, (0, 1, 2, 3))
    assert got == SwitcherQuad((0, 1, 2, 3))
    assert canonical_inequality_holds(k, got)


def test_switcher_rejects_degenerate_quads():
    k = mono(5, 2)
    with pytest.raises(ValueError):
        is_switcher(k, (0, 1, 2, 2))
    with pytest.raises(ValueError):
        is_switcher(k, (0, 1, 2))
    with pytest.raises(ValueError):
        is_switcher(k, (0, 1, 2, 5))


def test_every_returned_quad_satisfies_canonical_inequality():
    for i in range(200):
        k = random_coloring(6, 2 + i % 4, seed=i)
        for quad in combinations(range(6), 4):
            got = is_switcher(k, quad)
            if got is not None:
                assert canonical_inequality_holds(k, got)
                assert set(got.vertices) == set(quad)


def test_disjoint_switchers_monochromatic_empty():
    assert maximal_disjoint_switchers(mono(8, 3), 2) == []


def test_disjoint_switchers_two_separated_flips():
    m = np.zeros((8, 8), dtype=np.int16)
    m[0, 1] = m[1, 0] = 1
    m[4, 5] = m[5, 4] = 1
    k = ColoredClique(8, 3, m)
    got = maximal_disjoint_switchers(k, 2)
    assert len(got) == 2
    assert set(got[0].vertices) == {0, 1, 2, 3}
    assert set(got[1].vertices) == {4, 5, 6, 7}
    for quad in got:
        assert canonical_inequality_holds(k, quad)


def test_disjoint_switchers_exhaustion_below_limit():
    k = quad_clique((1, 0, 0, 0), 3)
    got = maximal_disjoint_switchers(k, 2)
    assert len(got) == 1
    assert maximal_disjoint_switchers(k, 0) == []


def test_switcher_mask_matches_direct_scan():
    for i in range(60):
        k = random_coloring(4 + i % 6, 2 + i % 3, seed=500 + i)
        subs, mask = _switcher_mask(k)
        for row, flag in zip(subs, mask):
            direct = _subset_switcher(k, tuple(int(x) for x in row))
            assert (direct is not None) == bool(flag)


def test_greedy_maximality_certificate():
    # when the greedy stalls below the limit, the unused remainder is
    # switcher-free; verified by an exhaustive scan
    stalled = 0
    for i in range(150):
        order = 8 + i % 5
        k = random_coloring(order, 2 + i % 2, seed=9_000 + i)
        got = maximal_disjoint_switchers(k, order)  # limit beyond reach
        used = {v for q in got for v in q.vertices}
        unused = [v for v in range(order) if v not in used]
        stalled += 1
        for sub in combinations(unused, 4):
            assert _subset_switcher(k, sub) is None
    assert stalled == 150


def test_greedy_respects_limit_and_disjointness():
    for i in range(100):
        k = random_coloring(12, 3, seed=40_000 + i)
        for limit in (1, 2, 3):
            got = maximal_disjoint_switchers(k, limit)
            assert len(got) <= limit
            seen = set()
            for q in got:
                assert not seen & set(q.vertices)
                seen |= set(q.vertices)


# ---------------------------------------------------------------------------
# dominant partitions
# ---------------------------------------------------------------------------

def test_dominant_partition_monochromatic():
    part = dominant_partition(mono(6, 2), 2)
    assert part.slack == 2
    assert part.largest == Residue(0, 2)
    assert part.classes == {Residue(0, 2): tuple(range(6))}

    part = dominant_partition(mono(12, 3, color=2), 3)
    assert part.largest == Residue(2, 3)
    assert part.classes[Residue(2, 3)] == tuple(range(12))


def test_dominant_partition_five_one_split():
    # all edges color 0 except vertex 5 sees color 1 on four of its five
    m = np.zeros((6, 6), dtype=np.int16)
    for i in range(4):
        m[i, 5] = m[5, i] = 1
    k = ColoredClique(6, 2, m)
    part = dominant_partition(k, 2)
    assert part.classes[Residue(0, 2)] == (0, 1, 2, 3, 4)
    assert part.classes[Residue(1, 2)] == (5,)
    assert part.largest == Residue(0, 2)


def test_dominant_partition_tie_breaks_low():
    k = ColoredClique.from_pairs(4, 2, {
        (0, 1): 0, (0, 2): 1, (0, 3): 0,
        (1, 2): 0, (1, 3): 1, (2, 3): 1})
    part = dominant_partition(k, 2)
    assert part.classes[Residue(0, 2)] == (0, 1)
    assert part.classes[Residue(1, 2)] == (2, 3)
    assert part.largest == Residue(0, 2)


def test_dominant_partition_balanced_vertex_fails():
    k = ColoredClique.from_pairs(4, 3, {
        (0, 1): 0, (0, 2): 1, (0, 3): 2,
        (1, 2): 2, (1, 3): 1, (2, 3): 0})
    with pytest.raises(NoDominantColor) as err:
        dominant_partition(k, 3)
    assert err.value.vertex == 0


def build_dominant_instance(order, p, seed):
    """Random coloring guaranteed to admit a dominant partition.

    Class sizes: one big class plus smaller ones totalling at most 3p-5;
    cross edges take the color of the smaller side, so every vertex keeps
    its foreign degree under the tolerance.
    """
    stream = splitmix64(seed)
    slack = 3 * p - 4
    budget = slack - 1
    sizes = []
    while budget - sum(sizes) > 0 and len(sizes) < p - 1:
        if next(stream) % 3 == 0:
            break
        sizes.append(1 + next(stream) % max(1, budget - sum(sizes)))
    sizes.append(order - sum(sizes))
    sizes.sort()
    colors = sorted({next(stream) % p for _ in range(len(sizes))})
    while len(colors) < len(sizes):
        colors = sorted(set(colors) | {next(stream) % p})
    verts = list(range(order))
    for i in range(order - 1, 0, -1):  # seeded shuffle
        j = next(stream) % (i + 1)
        verts[i], verts[j] = verts[j], verts[i]
    assign = {}
    expect = {}
    pos = 0
    for size, color in zip(sizes, colors):
        members = verts[pos:pos + size]
        for v in members:
            assign[v] = (size, color)
        expect[color] = tuple(sorted(members))
        pos += size
    m = np.zeros((order, order), dtype=np.int16)
    for u in range(order):
        for v in range(u + 1, order):
            cu, cv = assign[u], assign[v]
            c = min(cu, cv)[1]  # smaller class wins; sizes are distinct keys
            m[u, v] = m[v, u] = c
    return ColoredClique(order, p, m), expect


def test_dominant_partition_recovers_planted_classes():
    for p in (2, 3, 5):
        slack = 3 * p - 4
        for i in range(200):
            order = 2 * slack + 2 + i % 10
            k, expect = build_dominant_instance(order, p, seed=31 * p + i)
            part = dominant_partition(k, p)
            got = {r.value: vs for r, vs in part.classes.items()}
            assert got == expect
            sizes = sorted(len(v) for v in part.classes.values())
            assert len(part.classes[part.largest]) == sizes[-1]


def test_dominant_partition_quadratic_counting():
    # planted instances satisfy the two counting consequences
    for p in (2, 3):
        slack = 3 * p - 4
        for i in range(300):
            order = 2 * slack + 2 + i % 12
            k, _ = build_dominant_instance(order, p, seed=777 * p + i)
            part = dominant_partition(k, p)
            sq = sum(len(v) ** 2 for v in part.classes.values())
            biggest = max(len(v) for v in part.classes.values())
            assert sq >= order * order - 2 * slack * order
            assert biggest >= order - 2 * slack
