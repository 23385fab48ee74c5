"""The four constructive cases and their dispatcher.

Every case returns a CaseReport whose embedding is zero-sum by construction
and whose auxiliary certificate lets :func:`verify_report` recheck the whole
argument from scratch. The dispatcher tries the cases in a fixed order
(each one re-validates its own preconditions) and optionally falls back to
the exhaustive backtracker.

Case summary:

* BushyVibrant: anchor the selected leaf parents on colorful vertices,
  reserve a same-color and an other-color target per selected leaf, and let
  the sumset walk decide each leaf between its two targets.
* BushyNonvibrant: strip colorful vertices, partition the rest by dominant
  color, and grow the forest greedily inside the largest class along
  single-color edges.
* NonbushySwitchable: pin each degree-2 triple across a switcher four-cycle
  so the center vertex has two placements with different edge sums; the
  sumset walk picks the combination hitting zero.
* NonbushyNonswitchable: remove a maximal (short) switcher packing; the rest
  of the clique must then be one-colored, where any placement works.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

import numpy as np

from .classify import (ColorfulWitness, NoDominantColor, SwitcherQuad,
                       dominant_partition, maximal_disjoint_switchers,
                       vibrant_vertices)
from .core import (ColoredClique, DegreeTwoTriples, DivisibilityViolation,
                   Embedding, Forest, InsufficientTriples, LeafFamilies,
                   NotBushy, PreconditionFailed, Residue, ZeroSumError,
                   edge_sum, is_bushy, require_prime, select_degree2_triples,
                   select_leaf_families)
from .oracle import brute_zero_sum
from .sumset import iterated_sumset, target_choice

log = logging.getLogger(__name__)

CASE_BUSHY_VIBRANT = "BushyVibrant"
CASE_BUSHY_NONVIBRANT = "BushyNonvibrant"
CASE_NONBUSHY_SWITCHABLE = "NonbushySwitchable"
CASE_NONBUSHY_NONSWITCHABLE = "NonbushyNonswitchable"
CASE_FALLBACK = "BruteForceFallback"


class SelectionExhausted(ZeroSumError):
    """Target-set selection ran out of candidates; only reachable when the
    colorful-witness preconditions were violated."""


class GreedyStuck(ZeroSumError):
    """The one-color greedy found no continuation; cannot happen once the
    dominant class exceeds the forest by the full tolerance."""


class NoZeroSumCopy(ZeroSumError):
    """No zero-sum copy was produced (and, if the fallback ran, none exists)."""


class MonochromaticityViolated(ZeroSumError):
    """A certified switcher-free remainder was not one-colored.

    For odd p that falsifies the structural guarantee the case rests on
    (deriving it divides 2*chi(e) = 2*chi(f) by 2), so it is logged loudly
    before the dispatcher moves on. For p = 2 the division is vacuous and
    two-class cut colorings genuinely evade every switcher test, so there
    this is an expected, quiet outcome."""


@dataclass(frozen=True)
class TargetSets:
    """Anchor hosts plus one same-color and one other-color target per
    selected leaf.

    parent_hosts maps each selected parent to its anchor vertex u_i. For
    family i, same_color[i][j] is a host whose edge to u_i carries the
    anchor's witness color, other_color[i][j] one whose edge does not; the
    j-th selected leaf of the family will land on one of the two. All listed
    vertices and anchors are pairwise distinct.
    """

    parent_hosts: Mapping[int, int]
    same_color: tuple[tuple[int, ...], ...]
    other_color: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class BushyVibrantCert:
    witnesses: tuple[ColorfulWitness, ...]
    families: LeafFamilies
    targets: TargetSets
    picks: tuple[int, ...]


@dataclass(frozen=True)
class MonochromaticCert:
    color: Residue
    class_vertices: tuple[int, ...]
    subclique: tuple[int, ...]


@dataclass(frozen=True)
class SwitcherCert:
    triples: DegreeTwoTriples
    quads: tuple[SwitcherQuad, ...]
    picks: tuple[int, ...]


@dataclass(frozen=True)
class MonoSubcliqueCert:
    removed_quads: tuple[SwitcherQuad, ...]
    remainder: tuple[int, ...]
    color: Residue


@dataclass(frozen=True)
class CaseReport:
    """What the dispatcher decided and what the chosen case produced."""

    bushy: bool
    vibrant: bool
    switchable: bool
    case_used: str
    embedding: Embedding
    auxiliary: object


def _entry_checks(f: Forest, k: ColoredClique, p: int, context: str) -> None:
    # Divisibility is deliberately not required here: the two sumset-driven
    # cases steer the total to zero for any edge count, and the dispatcher
    # enforces p | e(F) before guaranteeing existence.
    require_prime(p, context)
    if p != k.modulus:
        raise ValueError(f"{context}: p={p} but clique modulus {k.modulus}")
    if f.edge_count == 0:
        raise ValueError(f"{context}: forest has no edges")


def _classification_flags(f: Forest, k: ColoredClique, p: int
                          ) -> tuple[bool, bool, bool]:
    bushy = is_bushy(f, p)
    vibrant = len(vibrant_vertices(k, p)) >= p - 1
    switchable = len(maximal_disjoint_switchers(k, p - 1)) == p - 1
    return bushy, vibrant, switchable


# ---------------------------------------------------------------------------
# target-set selection (bushy + vibrant machinery)
# ---------------------------------------------------------------------------

def select_target_sets(k: ColoredClique, witnesses: Sequence[ColorfulWitness],
                       fam: LeafFamilies) -> TargetSets:
    """Reserve, for each selected leaf, one same-color and one other-color
    host adjacent to the family's anchor.

    Anchors are the first m witnesses (m = number of families). Selection is
    inductive and lowest-index first; the availability bound
    pool >= (3p-5) - 2*(leaves placed so far) - (m-1) >= family count
    is re-derived at each step and SelectionExhausted raised if the coloring
    does not honor it (possible only when the witnesses are not genuinely
    colorful for this clique).
    """
    p = k.modulus
    m = len(fam.parents)
    if len(witnesses) < m:
        raise SelectionExhausted(
            f"{m} leaf families but only {len(witnesses)} colorful witnesses")
    anchors = list(witnesses)[:m]
    anchor_hosts = [w.vertex for w in anchors]
    if len(set(anchor_hosts)) != m:
        raise SelectionExhausted("anchor vertices are not distinct")
    used: set[int] = set(anchor_hosts)
    same: list[tuple[int, ...]] = []
    other: list[tuple[int, ...]] = []
    placed = 0
    for i, count in enumerate(fam.counts):
        u = anchors[i].vertex
        x = anchors[i].color.value
        bound = (3 * p - 5) - placed - (m - 1)
        if bound < count:
            raise SelectionExhausted(
                f"availability bound {bound} below family size {count}")
        row = k.matrix[u]
        pool_same = [v for v in range(k.order)
                     if v != u and v not in used and int(row[v]) == x]
        pool_other = [v for v in range(k.order)
                      if v != u and v not in used and int(row[v]) != x]
        if len(pool_same) < bound or len(pool_other) < bound:
            raise SelectionExhausted(
                f"anchor {u} pools ({len(pool_same)}, {len(pool_other)}) "
                f"under the guaranteed bound {bound}")
        xs = tuple(pool_same[:count])
        ys = tuple(pool_other[:count])
        same.append(xs)
        other.append(ys)
        used.update(xs)
        used.update(ys)
        placed += 2 * count
    hosts = dict(zip(fam.parents, anchor_hosts))
    return TargetSets(parent_hosts=hosts, same_color=tuple(same),
                      other_color=tuple(other))


def embed_bushy_vibrant(f: Forest, k: ColoredClique, p: int) -> CaseReport:
    """Anchor selected-leaf parents on colorful vertices and resolve each
    selected leaf between its two reserved targets via the sumset walk.

    Requires a bushy forest, at least p-1 colorful vertices, and a host of
    order at least n + p - 1.
    """
    _entry_checks(f, k, p, "embed_bushy_vibrant")
    bushy, vibrant, switchable = _classification_flags(f, k, p)
    if not bushy:
        raise PreconditionFailed(
            f"forest has {f.degree_count(1)} leaves, needs {2 * (p - 1)}")
    if k.order < f.n + (p - 1):
        raise PreconditionFailed(
            f"host order {k.order} below {f.n + p - 1}")
    wits = vibrant_vertices(k, p)
    if len(wits) < p - 1:
        raise PreconditionFailed(
            f"{len(wits)} colorful vertices, vibrancy needs {p - 1}")
    fam = select_leaf_families(f, p)
    targets = select_target_sets(k, wits[:p - 1], fam)
    m = len(fam.parents)

    selected = {leaf for group in fam.selected for leaf in group}
    reserved = set(targets.parent_hosts.values())
    for xs, ys in zip(targets.same_color, targets.other_color):
        reserved.update(xs)
        reserved.update(ys)

    mapping = [-1] * f.n
    for parent in fam.parents:
        mapping[parent] = targets.parent_hosts[parent]
    free = (h for h in range(k.order) if h not in reserved)
    for v in range(f.n):
        if v in selected or v in targets.parent_hosts:
            continue
        mapping[v] = next(free)

    s = 0
    for u, v in f.edges:
        if u in selected or v in selected:
            continue
        s += k.value(mapping[u], mapping[v])

    pairs = []
    slots = []
    for i in range(m):
        u = targets.parent_hosts[fam.parents[i]]
        for j, leaf in enumerate(fam.selected[i]):
            xh = targets.same_color[i][j]
            yh = targets.other_color[i][j]
            pairs.append([Residue(k.value(u, xh), p),
                          Residue(k.value(u, yh), p)])
            slots.append((leaf, xh, yh))
    w = iterated_sumset(pairs)
    picks = target_choice(w, Residue((-s) % p, p))
    if picks is None:  # impossible: p-1 two-element sets cover Z_p
        raise SelectionExhausted("zero target unreachable from leaf pairs")
    for (leaf, xh, yh), pick in zip(slots, picks):
        mapping[leaf] = xh if pick == 0 else yh

    emb = Embedding(pattern=f, host=k, mapping=tuple(mapping))
    cert = BushyVibrantCert(witnesses=tuple(wits[:m]), families=fam,
                            targets=targets, picks=tuple(picks))
    return CaseReport(bushy=bushy, vibrant=vibrant, switchable=switchable,
                      case_used=CASE_BUSHY_VIBRANT, embedding=emb,
                      auxiliary=cert)


# ---------------------------------------------------------------------------
# non-vibrant: one-color greedy inside the dominant class
# ---------------------------------------------------------------------------

def _monochromatic_greedy(f: Forest, k: ColoredClique, hosts: Sequence[int],
                          color: int) -> list[int]:
    """Grow each tree from its lowest leaf along color-matching edges."""
    free = sorted(hosts)
    mat = k.matrix
    mapping = [-1] * f.n
    for comp in f.components():
        root = min(v for v in comp if f.degree(v) == 1)
        order = [root]
        parent: dict[int, int] = {root: -1}
        i = 0
        while i < len(order):
            u = order[i]
            i += 1
            for nb in f.neighbors(u):
                if nb not in parent:
                    parent[nb] = u
                    order.append(nb)
        for v in order:
            if parent[v] < 0:
                if not free:
                    raise GreedyStuck("no free host for a component root")
                h = free.pop(0)
            else:
                anchor = mapping[parent[v]]
                h = next((c for c in free if mat[anchor, c] == color), None)
                if h is None:
                    raise GreedyStuck(
                        f"no free host continues color {color} from "
                        f"{anchor}")
                free.remove(h)
            mapping[v] = h
    return mapping


def embed_bushy_nonvibrant(f: Forest, k: ColoredClique, p: int) -> CaseReport:
    """One-colored copy inside the largest dominant class.

    Attempted whenever the class can hold the forest at all; guaranteed only
    when it exceeds the forest order by the tolerance 3p-4, so a greedy jam
    surfaces as GreedyStuck and sends the dispatcher onward.
    """
    _entry_checks(f, k, p, "embed_bushy_nonvibrant")
    bushy, vibrant, switchable = _classification_flags(f, k, p)
    if vibrant:
        raise PreconditionFailed(
            f"coloring is vibrant for p={p}; this case needs the opposite")
    colorful = {w.vertex for w in vibrant_vertices(k, p)}
    keep = [v for v in range(k.order) if v not in colorful]
    if not keep:
        raise PreconditionFailed("every vertex is colorful")
    sub, labels = k.induced(keep)
    try:
        part = dominant_partition(sub, p)
    except NoDominantColor as err:
        raise PreconditionFailed(f"no dominant partition: {err}") from err
    class_local = part.classes[part.largest]
    class_hosts = [labels[v] for v in class_local]
    if len(class_hosts) < f.n:
        raise PreconditionFailed(
            f"largest dominant class has {len(class_hosts)} vertices, "
            f"forest needs {f.n}")
    color = part.largest.value
    if (color * f.edge_count) % p != 0:
        raise DivisibilityViolation(
            f"one-colored copy in color {color} sums to "
            f"{(color * f.edge_count) % p}, not 0")
    mapping = _monochromatic_greedy(f, k, class_hosts, color)
    emb = Embedding(pattern=f, host=k, mapping=tuple(mapping))
    cert = MonochromaticCert(color=part.largest,
                             class_vertices=tuple(class_hosts),
                             subclique=labels)
    return CaseReport(bushy=bushy, vibrant=vibrant, switchable=switchable,
                      case_used=CASE_BUSHY_NONVIBRANT, embedding=emb,
                      auxiliary=cert)


# ---------------------------------------------------------------------------
# switchable: degree-2 triples across switcher four-cycles
# ---------------------------------------------------------------------------

def embed_nonbushy_switchable(f: Forest, k: ColoredClique, p: int
                              ) -> CaseReport:
    """Pin p-1 degree-2 triples across disjoint switchers; each center picks
    between two diagonal placements whose edge sums differ, and the sumset
    walk steers the total to zero.

    Requires p-1 disjoint degree-2 triples in the forest, p-1 disjoint
    switchers in the coloring, and host order at least n + p - 1.
    """
    _entry_checks(f, k, p, "embed_nonbushy_switchable")
    bushy, vibrant, switchable = _classification_flags(f, k, p)
    if k.order < f.n + (p - 1):
        raise PreconditionFailed(
            f"host order {k.order} below {f.n + p - 1}")
    try:
        triples = select_degree2_triples(f, p)
    except InsufficientTriples as err:
        raise PreconditionFailed(str(err)) from err
    quads = maximal_disjoint_switchers(k, p - 1)
    if len(quads) < p - 1:
        raise PreconditionFailed(
            f"only {len(quads)} disjoint switchers, need {p - 1}")

    centers = [t for t, _ in triples.triples]
    pinned: dict[int, int] = {}
    for (t, (a, b)), quad in zip(triples.triples, quads):
        d1, d2, d3, d4 = quad.vertices
        pinned[a] = d2
        pinned[b] = d4

    quad_verts = {v for q in quads for v in q.vertices}
    mapping = [-1] * f.n
    for v, h in pinned.items():
        mapping[v] = h
    free = (h for h in range(k.order) if h not in quad_verts)
    center_set = set(centers)
    for v in range(f.n):
        if v in center_set or v in pinned:
            continue
        mapping[v] = next(free)

    s = 0
    for u, v in f.edges:
        if u in center_set or v in center_set:
            continue
        s += k.value(mapping[u], mapping[v])

    options = []
    for quad in quads:
        d1, d2, d3, d4 = quad.vertices
        via_d1 = (k.value(d4, d1) + k.value(d1, d2)) % p
        via_d3 = (k.value(d2, d3) + k.value(d3, d4)) % p
        options.append([Residue(via_d1, p), Residue(via_d3, p)])
    w = iterated_sumset(options)
    picks = target_choice(w, Residue((-s) % p, p))
    if picks is None:  # impossible: switcher property makes each pair distinct
        raise SelectionExhausted("zero target unreachable from switchers")
    for center, quad, pick in zip(centers, quads, picks):
        d1, _, d3, _ = quad.vertices
        mapping[center] = d1 if pick == 0 else d3

    emb = Embedding(pattern=f, host=k, mapping=tuple(mapping))
    cert = SwitcherCert(triples=triples, quads=tuple(quads),
                        picks=tuple(picks))
    return CaseReport(bushy=bushy, vibrant=vibrant, switchable=switchable,
                      case_used=CASE_NONBUSHY_SWITCHABLE, embedding=emb,
                      auxiliary=cert)


# ---------------------------------------------------------------------------
# non-switchable: strip short packings, use the one-colored remainder
# ---------------------------------------------------------------------------

def embed_nonbushy_nonswitchable(f: Forest, k: ColoredClique, p: int
                                 ) -> CaseReport:
    """Remove a maximal switcher packing of size at most p-2; for odd p the
    remaining clique is then necessarily one-colored and any placement in
    it works.

    The one-coloredness is scanned, not assumed. For odd p a violation
    would contradict the maximality certificate and is logged as such; for
    p = 2 switcher-free cut colorings exist and the scan simply rejects
    them back to the dispatcher.
    """
    _entry_checks(f, k, p, "embed_nonbushy_nonswitchable")
    bushy, vibrant, switchable = _classification_flags(f, k, p)
    quads = maximal_disjoint_switchers(k, p - 1)
    if len(quads) > p - 2:
        raise PreconditionFailed(
            f"found {len(quads)} disjoint switchers: classified switchable")
    removed = {v for q in quads for v in q.vertices}
    remainder = [v for v in range(k.order) if v not in removed]
    if len(remainder) < f.n:
        raise PreconditionFailed(
            f"remainder has {len(remainder)} vertices, forest needs {f.n}")
    if len(remainder) < 5:
        raise PreconditionFailed(
            f"remainder of {len(remainder)} vertices is too small to force "
            f"one-coloredness")
    sub = k.matrix[np.ix_(remainder, remainder)]
    iu = np.triu_indices(len(remainder), 1)
    colors = np.unique(sub[iu])
    if len(colors) != 1:
        if p != 2:
            log.error(
                "switcher-free remainder on %d vertices uses %d colors; "
                "this contradicts the structural guarantee behind the "
                "non-switchable case (remainder=%r)",
                len(remainder), len(colors), remainder)
        raise MonochromaticityViolated(
            f"switcher-free remainder carries {len(colors)} colors")
    color = int(colors[0])
    if (color * f.edge_count) % p != 0:
        raise DivisibilityViolation(
            f"one-colored copy in color {color} sums to "
            f"{(color * f.edge_count) % p}, not 0")
    mapping = tuple(remainder[:f.n])
    emb = Embedding(pattern=f, host=k, mapping=mapping)
    cert = MonoSubcliqueCert(removed_quads=tuple(quads),
                             remainder=tuple(remainder),
                             color=Residue(color, p))
    return CaseReport(bushy=bushy, vibrant=vibrant, switchable=switchable,
                      case_used=CASE_NONBUSHY_NONSWITCHABLE, embedding=emb,
                      auxiliary=cert)


# ---------------------------------------------------------------------------
# dispatch
# ---------------------------------------------------------------------------

_CASE_ORDER = (embed_bushy_vibrant, embed_bushy_nonvibrant,
               embed_nonbushy_switchable, embed_nonbushy_nonswitchable)

_RECOVERABLE = (PreconditionFailed, SelectionExhausted, GreedyStuck,
                MonochromaticityViolated)


def find_zero_sum_copy(f: Forest, k: ColoredClique, p: int,
                       allow_fallback: bool = True) -> CaseReport:
    """Try the four constructive cases in fixed order; optionally fall back
    to exhaustive search.

    At guarantee scale (n >= 3p^2 - 12p + 11 and host order >= n + 9p - 12)
    one of the four cases succeeds and the fallback is never consulted.

    Raises:
        DivisibilityViolation: p does not divide the edge count.
        NoZeroSumCopy: nothing found; with fallback enabled this is a proof
            of absence, without it only that the constructive cases failed.
    """
    _entry_checks(f, k, p, "find_zero_sum_copy")
    if f.edge_count % p != 0:
        raise DivisibilityViolation(
            f"{p} does not divide edge count {f.edge_count}; no zero-sum "
            f"guarantee exists")
    if k.order < f.n:
        raise NoZeroSumCopy(
            f"host K_{k.order} cannot contain a forest on {f.n} vertices")
    for case in _CASE_ORDER:
        try:
            return case(f, k, p)
        except _RECOVERABLE:
            continue
    if allow_fallback:
        emb = brute_zero_sum(f, k, p)
        if emb is not None:
            bushy, vibrant, switchable = _classification_flags(f, k, p)
            return CaseReport(bushy=bushy, vibrant=vibrant,
                              switchable=switchable,
                              case_used=CASE_FALLBACK, embedding=emb,
                              auxiliary=None)
        raise NoZeroSumCopy("exhaustive search found no zero-sum copy")
    raise NoZeroSumCopy(
        "all constructive cases failed and the fallback is disabled")


# ---------------------------------------------------------------------------
# verification
# ---------------------------------------------------------------------------

def _verify_common(r: CaseReport) -> bool:
    emb = r.embedding
    if not emb.is_injective():
        return False
    if edge_sum(emb).value != 0:
        return False
    return True


def _verify_bushy_vibrant(r: CaseReport) -> bool:
    f = r.embedding.pattern
    k = r.embedding.host
    p = k.modulus
    cert: BushyVibrantCert = r.auxiliary
    fam = cert.families
    mp = r.embedding.mapping
    b = 3 * p - 5
    m = len(fam.parents)
    if not (len(cert.witnesses) == m == len(fam.counts) == len(fam.selected)):
        return False
    if sum(fam.counts) != p - 1:
        return False
    if len(cert.picks) != p - 1:
        return False

    all_targets: set[int] = set()
    for i, parent in enumerate(fam.parents):
        wit = cert.witnesses[i]
        u = cert.targets.parent_hosts.get(parent)
        if u is None or wit.vertex != u or mp[parent] != u:
            return False
        row = k.matrix[u]
        cnt = int(np.count_nonzero(np.delete(row, u) == wit.color.value))
        if cnt != wit.degree_in_color or not b <= cnt <= k.order - b - 1:
            return False
        xs = cert.targets.same_color[i]
        ys = cert.targets.other_color[i]
        if len(xs) != fam.counts[i] or len(ys) != fam.counts[i]:
            return False
        for x in xs:
            if int(row[x]) != wit.color.value:
                return False
        for y in ys:
            if int(row[y]) == wit.color.value:
                return False
        all_targets.update(xs)
        all_targets.update(ys)

    anchors = set(cert.targets.parent_hosts.values())
    if len(anchors) != m or anchors & all_targets:
        return False
    if len(all_targets) != 2 * (p - 1):
        return False

    slot = 0
    selected = set()
    for i, parent in enumerate(fam.parents):
        for j, leaf in enumerate(fam.selected[i]):
            selected.add(leaf)
            if f.degree(leaf) != 1 or f.neighbors(leaf) != (parent,):
                return False
            xh = cert.targets.same_color[i][j]
            yh = cert.targets.other_color[i][j]
            want = xh if cert.picks[slot] == 0 else yh
            if mp[leaf] != want:
                return False
            slot += 1
    for v in range(f.n):
        if v in selected or v in cert.targets.parent_hosts:
            continue
        if mp[v] in all_targets or mp[v] in anchors:
            return False
    return True


def _verify_monochromatic(r: CaseReport) -> bool:
    f = r.embedding.pattern
    k = r.embedding.host
    p = k.modulus
    cert: MonochromaticCert = r.auxiliary
    mp = r.embedding.mapping
    cls = set(cert.class_vertices)
    subset = set(cert.subclique)
    if not cls <= subset:
        return False
    if any(h not in cls for h in mp):
        return False
    for u, v in f.edges:
        if k.value(mp[u], mp[v]) != cert.color.value:
            return False
    threshold = len(cert.subclique) - (3 * p - 4)
    for v in cert.class_vertices:
        cnt = sum(1 for u in cert.subclique
                  if u != v and k.value(u, v) == cert.color.value)
        if cnt < threshold:
            return False
    return True


def _canonical_switcher_holds(k: ColoredClique, quad: SwitcherQuad) -> bool:
    d1, d2, d3, d4 = quad.vertices
    p = k.modulus
    left = (k.value(d4, d1) + k.value(d1, d2)) % p
    right = (k.value(d2, d3) + k.value(d3, d4)) % p
    return left != right


def _verify_switcher(r: CaseReport) -> bool:
    f = r.embedding.pattern
    k = r.embedding.host
    p = k.modulus
    cert: SwitcherCert = r.auxiliary
    mp = r.embedding.mapping
    if not (len(cert.triples.triples) == len(cert.quads) == len(cert.picks)
            == p - 1):
        return False
    seen_forest: set[int] = set()
    seen_host: set[int] = set()
    for (t, (a, bb)), quad, pick in zip(cert.triples.triples, cert.quads,
                                        cert.picks):
        if f.degree(t) != 2 or f.neighbors(t) != (a, bb):
            return False
        group = {t, a, bb}
        if group & seen_forest:
            return False
        seen_forest |= group
        verts = set(quad.vertices)
        if len(verts) != 4 or verts & seen_host:
            return False
        seen_host |= verts
        if not _canonical_switcher_holds(k, quad):
            return False
        d1, d2, d3, d4 = quad.vertices
        if mp[a] != d2 or mp[bb] != d4:
            return False
        if mp[t] != (d1 if pick == 0 else d3):
            return False
    quad_verts = {v for q in cert.quads for v in q.vertices}
    for v in range(f.n):
        if v in seen_forest:
            continue
        if mp[v] in quad_verts:
            return False
    return True


def _verify_mono_subclique(r: CaseReport) -> bool:
    f = r.embedding.pattern
    k = r.embedding.host
    p = k.modulus
    cert: MonoSubcliqueCert = r.auxiliary
    mp = r.embedding.mapping
    if len(cert.removed_quads) > p - 2:
        return False
    removed = set()
    for quad in cert.removed_quads:
        verts = set(quad.vertices)
        if len(verts) != 4 or verts & removed:
            return False
        if not _canonical_switcher_holds(k, quad):
            return False
        removed |= verts
    rem = set(cert.remainder)
    if rem & removed or rem | removed != set(range(k.order)):
        return False
    if len(rem) < 5 or len(rem) < f.n:
        return False
    rem_sorted = sorted(rem)
    for i, u in enumerate(rem_sorted):
        for v in rem_sorted[i + 1:]:
            if k.value(u, v) != cert.color.value:
                return False
    return all(h in rem for h in mp)


_VERIFIERS = {
    CASE_BUSHY_VIBRANT: (BushyVibrantCert, _verify_bushy_vibrant),
    CASE_BUSHY_NONVIBRANT: (MonochromaticCert, _verify_monochromatic),
    CASE_NONBUSHY_SWITCHABLE: (SwitcherCert, _verify_switcher),
    CASE_NONBUSHY_NONSWITCHABLE: (MonoSubcliqueCert, _verify_mono_subclique),
}


def verify_report(r: CaseReport) -> bool:
    """Recheck a report from scratch: injectivity, zero sum, and every
    case-specific certificate invariant. Never raises; any inconsistency,
    malformed field, or unknown case yields False."""
    try:
        if not _verify_common(r):
            return False
        if r.case_used == CASE_FALLBACK:
            return r.auxiliary is None
        entry = _VERIFIERS.get(r.case_used)
        if entry is None:
            return False
        cert_type, checker = entry
        if not isinstance(r.auxiliary, cert_type):
            return False
        return bool(checker(r))
    except Exception:
        return False
