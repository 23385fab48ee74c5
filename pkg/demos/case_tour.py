"""One host per constructive case.

The first three hosts are engineered so the dispatcher lands on a different
case each time. The fourth invokes the switcher-removal engine directly:
whenever its preconditions hold, a dominant class also covers the forest, so
the dispatcher prefers the greedy one-colored case and never needs it. The
last host defeats every constructive case and exercises the exhaustive
fallback.
"""

import numpy as np

from zsforest import ColoredClique, find_zero_sum_copy
from zsforest.embedder import embed_nonbushy_nonswitchable
from zsforest.extremal import star_lower_bound_coloring
from zsforest.patterns import path, star
from zsforest.randomgen import random_bushy_tree, random_coloring


def near_mono(order, p, recolor):
    m = np.zeros((order, order), dtype=np.int16)
    for (u, v), c in recolor.items():
        m[u, v] = m[v, u] = c
    return ColoredClique(order, p, m)


if __name__ == "__main__":
    p = 3

    # many leaves + colorful vertices: anchored leaf resolution
    bushy = random_bushy_tree(10, p, seed=4)
    rep = find_zero_sum_copy(bushy, random_coloring(12, p, seed=4), p)
    print(f"bushy tree, random K_12      -> {rep.case_used}")

    # mono-dominated coloring: greedy one-colored copy
    rep = find_zero_sum_copy(bushy, near_mono(12, p, {}), p)
    print(f"bushy tree, all-zero K_12    -> {rep.case_used}")

    # two half-and-half vertices kill every dominant color and seed two
    # disjoint switchers; the path's degree-2 triples get pinned on them
    half = {(j, 14): 1 for j in range(8)}
    half.update({(j, 15): 1 for j in range(8)})
    rep = find_zero_sum_copy(path(7), near_mono(16, p, half), p)
    print(f"P_7, two mixed vertices K_16 -> {rep.case_used}")

    # one mixed vertex: every switcher meets it, so the packing is a single
    # quad; removing that quad leaves a one-colored remainder for the path
    host = near_mono(12, p, {(j, 11): 1 for j in range(6)})
    rep = embed_nonbushy_nonswitchable(path(7), host, p)
    print(f"P_7, one mixed vertex K_12   -> {rep.case_used} (direct)")

    # star-free circulant at one vertex short of the exact value: only the
    # exhaustive search can certify what happens
    host = star_lower_bound_coloring(4, p)
    try:
        rep = find_zero_sum_copy(star(3), host, p)
        print(f"K_1,3, star-free K_5         -> {rep.case_used}")
    except Exception as err:
        print(f"K_1,3, star-free K_5         -> {type(err).__name__}: {err}")
