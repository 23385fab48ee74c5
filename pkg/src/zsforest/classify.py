"""Coloring-side structure detection.

The constructive cases are driven entirely by properties of the host
coloring: which vertices see many colors (colorful/vibrant), whether many
disjoint four-cycles can have their sum toggled (switchers), and how vertices
cluster by their overwhelmingly most frequent color (dominant partition).
Everything here is read-only analysis of a ColoredClique; scans are
vectorized but must return exactly what the lexicographic sequential scan
would.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Mapping, Optional, Sequence

import numpy as np

from .core import ColoredClique, Residue, ZeroSumError


class NoDominantColor(ZeroSumError):
    """Some vertex has no unique heavily-represented color; callers fall
    back to brute force."""

    def __init__(self, vertex: int, message: str):
        super().__init__(message)
        self.vertex = vertex


@dataclass(frozen=True)
class ColorfulWitness:
    """A vertex together with a color it sees often but not too often:
    b <= degree_in_color <= order - b - 1 for the b it was computed with."""

    vertex: int
    color: Residue
    degree_in_color: int


@dataclass(frozen=True)
class SwitcherQuad:
    """Four vertices traversed cyclically, labeled so that
    chi(d4 d1) + chi(d1 d2) != chi(d2 d3) + chi(d3 d4)."""

    vertices: tuple[int, int, int, int]


@dataclass(frozen=True)
class DominantPartition:
    """Vertex classes by unique dominant color on a sub-clique.

    slack is the tolerance 3p-4: a vertex belongs to G_r when at least
    order - slack of its incident edges have color r. largest is the color
    of a maximum class, lowest color winning ties.
    """

    slack: int
    classes: Mapping[Residue, tuple[int, ...]]
    largest: Residue


def _color_counts(k: ColoredClique, v: int) -> np.ndarray:
    row = np.delete(k.matrix[v], v)
    return np.bincount(row, minlength=k.modulus)


def colorful_witness(k: ColoredClique, v: int, b: int
                     ) -> Optional[ColorfulWitness]:
    """Witness for the lowest color with b <= count <= order-b-1 at v."""
    if b < 1:
        raise ValueError(f"b must be >= 1, got {b}")
    if not 0 <= v < k.order:
        raise ValueError(f"vertex {v} not in K_{k.order}")
    counts = _color_counts(k, v)
    hi = k.order - b - 1
    for c, cnt in enumerate(counts):
        if b <= cnt <= hi:
            return ColorfulWitness(vertex=v, color=Residue(c, k.modulus),
                                   degree_in_color=int(cnt))
    return None


def vibrant_vertices(k: ColoredClique, p: int) -> list[ColorfulWitness]:
    """Witnesses for every (3p-5)-colorful vertex, ascending.

    The coloring is vibrant for p exactly when the list has >= p-1 entries.
    """
    if p < 2:
        raise ValueError(f"p must be >= 2, got {p}")
    b = 3 * p - 5
    out = []
    for v in range(k.order):
        w = colorful_witness(k, v, b)
        if w is not None:
            out.append(w)
    return out


def _quad_check(k: ColoredClique, quad: Sequence[int]
                ) -> Optional[SwitcherQuad]:
    d1, d2, d3, d4 = quad
    p = k.modulus
    m = k.matrix
    e1 = int(m[d1, d2])
    e2 = int(m[d2, d3])
    e3 = int(m[d3, d4])
    e4 = int(m[d4, d1])
    if (e1 + e2) % p != (e3 + e4) % p:
        # rotate so the unequal pairing sits in canonical position
        return SwitcherQuad((d2, d3, d4, d1))
    if (e2 + e3) % p != (e4 + e1) % p:
        return SwitcherQuad((d1, d2, d3, d4))
    return None


def is_switcher(k: ColoredClique, quad: Sequence[int]
                ) -> Optional[SwitcherQuad]:
    """Test one cyclic order of four vertices; both consecutive pairings.

    The returned quad is rotated so its own labeling satisfies the canonical
    inequality chi(d4 d1) + chi(d1 d2) != chi(d2 d3) + chi(d3 d4).
    """
    if len(quad) != 4 or len(set(quad)) != 4:
        raise ValueError(f"need 4 distinct vertices, got {tuple(quad)}")
    for v in quad:
        if not 0 <= v < k.order:
            raise ValueError(f"vertex {v} not in K_{k.order}")
    return _quad_check(k, quad)


# the three cycle structures of a sorted 4-subset {a,b,c,d}
_CYCLE_ORDERS = ((0, 1, 2, 3), (0, 1, 3, 2), (0, 2, 1, 3))


def _subset_switcher(k: ColoredClique, subset: Sequence[int]
                     ) -> Optional[SwitcherQuad]:
    for order in _CYCLE_ORDERS:
        got = _quad_check(k, tuple(subset[i] for i in order))
        if got is not None:
            return got
    return None


_QUAD_INDEX: dict[int, np.ndarray] = {}


def _quad_subsets(n: int) -> np.ndarray:
    # shared across cliques of the same order; C(n,4) grows fast
    subs = _QUAD_INDEX.get(n)
    if subs is None:
        subs = np.array(list(combinations(range(n), 4)), dtype=np.int64)
        if len(_QUAD_INDEX) > 8:
            _QUAD_INDEX.clear()
        _QUAD_INDEX[n] = subs
    return subs


def _switcher_mask(k: ColoredClique) -> tuple[np.ndarray, np.ndarray]:
    """(subsets, mask): all 4-subsets lexicographically and whether each
    contains a switcher under any cycle structure. Cached on the clique."""
    cached = k._cache.get("switcher_mask")
    if cached is not None:
        return cached
    n = k.order
    if n < 4:
        subs = np.empty((0, 4), dtype=np.int64)
        mask = np.zeros(0, dtype=bool)
        k._cache["switcher_mask"] = (subs, mask)
        return subs, mask
    subs = _quad_subsets(n)
    p = k.modulus
    m = k.matrix.astype(np.int32)
    mask = np.zeros(len(subs), dtype=bool)
    for order in _CYCLE_ORDERS:
        q = [subs[:, i] for i in order]
        e1 = m[q[0], q[1]]
        e2 = m[q[1], q[2]]
        e3 = m[q[2], q[3]]
        e4 = m[q[3], q[0]]
        mask |= (e1 + e2) % p != (e3 + e4) % p
        mask |= (e2 + e3) % p != (e4 + e1) % p
    k._cache["switcher_mask"] = (subs, mask)
    return subs, mask


def maximal_disjoint_switchers(k: ColoredClique, limit: int
                               ) -> list[SwitcherQuad]:
    """Greedy vertex-disjoint switcher collection, capped at limit.

    Scans 4-subsets in lexicographic order, testing all three cycle
    structures of each. When the result is shorter than limit it is maximal:
    the vertices not used by it induce a switcher-free sub-clique.
    """
    if limit <= 0:
        return []
    subs, mask = _switcher_mask(k)
    rows = subs[mask]
    used = np.zeros(k.order, dtype=bool)
    out: list[SwitcherQuad] = []
    while len(out) < limit and len(rows):
        free = ~used[rows].any(axis=1)
        pos = int(np.argmax(free))
        if not free[pos]:
            break
        row = rows[pos]
        quad = _subset_switcher(k, tuple(int(x) for x in row))
        out.append(quad)
        used[row] = True
        rows = rows[free]
    return out


def dominant_partition(k_prime: ColoredClique, p: int) -> DominantPartition:
    """Partition vertices by their unique dominant color.

    A color r is dominant at v when at least order - (3p-4) of v's incident
    edges are colored r. Exactly one color must qualify at every vertex.

    Raises:
        NoDominantColor: some vertex has zero or several qualifying colors.
    """
    if p < 2:
        raise ValueError(f"p must be >= 2, got {p}")
    slack = 3 * p - 4
    threshold = k_prime.order - slack
    classes: dict[Residue, list[int]] = {}
    for v in range(k_prime.order):
        counts = _color_counts(k_prime, v)
        qualifying = [c for c in range(k_prime.modulus)
                      if counts[c] >= threshold]
        if len(qualifying) != 1:
            raise NoDominantColor(
                v, f"vertex {v} has {len(qualifying)} colors at "
                   f"count >= {threshold}")
        classes.setdefault(Residue(qualifying[0], k_prime.modulus),
                           []).append(v)
    largest = min(classes, key=lambda r: (-len(classes[r]), r.value))
    return DominantPartition(
        slack=slack,
        classes={r: tuple(vs) for r, vs in classes.items()},
        largest=largest)
