"""Brute-force ground truth, independent of the closed-form machinery.

Enumeration is an exhaustive scan over all vertex subsets, so it is
deliberately dumb and capped (SUBSET_SCAN_CAP); the exact chromatic search is
a backtracking search over canonical colourings capped at SEARCH_CAP.  The
closed-form modules are tested against these functions, never the other way
around.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, groupby

from .colouring import Colouring
from .graphs import (
    CapacityError,
    Graph,
    InputError,
    bits,
    cb_sides,
    is_maximal_cb,
    is_maximal_star,
    is_star_set,
)
from .powers import Biclique, cyclic_reach

SUBSET_SCAN_CAP = 22  # 2^22 subset scans still finish in minutes
SEARCH_CAP = 14       # exact chromatic backtracking


def _check_scan_cap(g: Graph) -> None:
    if g.n > SUBSET_SCAN_CAP:
        raise CapacityError(
            f"subset scan is capped at n <= {SUBSET_SCAN_CAP}, got n={g.n}")


@lru_cache(maxsize=None)
def _maximal_cb_masks(g: Graph) -> tuple[int, ...]:
    adj = g.adj
    out = []
    for m in range(3, 1 << g.n):
        if m.bit_count() < 2:
            continue
        if cb_sides(adj, m) is not None and is_maximal_cb(adj, m):
            out.append(m)
    return tuple(out)


@lru_cache(maxsize=None)
def _maximal_star_masks(g: Graph) -> tuple[int, ...]:
    adj = g.adj
    out = []
    for m in range(3, 1 << g.n):
        if m.bit_count() < 2:
            continue
        if is_star_set(adj, m) and is_maximal_star(adj, m):
            out.append(m)
    return tuple(out)


def maximal_bicliques(g: Graph) -> list[Biclique]:
    """All maximal complete-bipartite vertex sets of g (>= 1 edge each),
    sorted by vertex list.  Exhaustive subset scan, n <= SUBSET_SCAN_CAP."""
    _check_scan_cap(g)
    out = [Biclique(tuple(bits(m)), _shape(g, m)) for m in _maximal_cb_masks(g)]
    out.sort(key=lambda b: b.vertices)
    return out


def maximal_stars(g: Graph) -> list[tuple[int, ...]]:
    """All maximal induced-star vertex sets of g, sorted.  Maximality is
    under inclusion among stars, so a P3 inside a C4 still counts."""
    _check_scan_cap(g)
    return sorted(tuple(bits(m)) for m in _maximal_star_masks(g))


def _shape(g: Graph, m: int) -> str:
    from .graphs import induced_shape

    return induced_shape(g, tuple(bits(m)))


def _colour_tuple(colouring, n: int) -> tuple[int, ...]:
    colours = tuple(colouring.colours if isinstance(colouring, Colouring)
                    else colouring)
    if len(colours) != n:
        raise InputError(f"colouring has {len(colours)} entries for n={n}")
    return colours


def verify_colouring(g: Graph, colouring, mode: str = "biclique",
                     hyperedges=None):
    """None if no hyperedge is monochromatic, else the lexicographically
    smallest monochromatic hyperedge as a witness.

    Hyperedges default to the oracle enumeration for the requested mode
    (biclique or star); callers with a generated power graph can pass the
    closed-form family instead to dodge the subset-scan cap.
    """
    colours = _colour_tuple(colouring, g.n)
    if hyperedges is None:
        if mode == "biclique":
            hyperedges = maximal_bicliques(g)
        elif mode == "star":
            hyperedges = maximal_stars(g)
        else:
            raise InputError(f"unknown mode {mode!r}")
    sets = sorted(tuple(getattr(h, "vertices", h)) for h in hyperedges)
    for vs in sets:
        first = colours[vs[0]]
        if all(colours[v] == first for v in vs[1:]):
            return vs
    return None


# ---------------------------------------------------------------------------
# exact chromatic search

def exact_chromatic(g: Graph, mode: str = "biclique") -> tuple[int, Colouring]:
    """Least c admitting a colouring with no monochromatic hyperedge, with
    one such colouring.  Backtracking over canonical colourings: vertex 0 is
    fixed to colour 0 and a vertex may use at most one colour id beyond those
    already in use, which breaks colour-permutation symmetry."""
    if g.n > SEARCH_CAP:
        raise CapacityError(
            f"exact search is capped at n <= {SEARCH_CAP}, got n={g.n}")
    if g.n == 0:
        return 0, Colouring((), 0)
    if mode == "biclique":
        sets = [b.vertices for b in maximal_bicliques(g)]
    elif mode == "star":
        sets = list(maximal_stars(g))
    else:
        raise InputError(f"unknown mode {mode!r}")
    by_last: list[list[tuple[int, ...]]] = [[] for _ in range(g.n)]
    for vs in sets:
        by_last[vs[-1]].append(vs)

    colours = [-1] * g.n

    def violates(v: int) -> bool:
        col = colours[v]
        for vs in by_last[v]:
            if all(colours[u] == col for u in vs):
                return True
        return False

    def search(v: int, used: int, limit: int) -> bool:
        if v == g.n:
            return True
        for col in range(min(used + 1, limit)):
            colours[v] = col
            if not violates(v) and search(v + 1, max(used, col + 1), limit):
                return True
        colours[v] = -1
        return False

    for c in range(1, g.n + 1):
        if search(0, 0, c):
            found = tuple(colours)
            assert max(found) + 1 == c  # ascending c makes the first hit tight
            return c, Colouring(found, c)
    raise AssertionError("all-distinct colouring must always succeed")


# ---------------------------------------------------------------------------
# monochromatic-P3 and block analysis

@lru_cache(maxsize=None)
def _induced_p3s_with_reach(g: Graph) -> tuple[tuple[tuple[int, int, int], int], ...]:
    """Sorted induced P3 triples with cyclic reach (sum of the two edge
    reaches about the centre), computed with g.n as the cycle length.

    Enumerated as non-adjacent neighbour pairs of each centre; an induced P3
    has exactly one centre, so no triple repeats."""
    out = []
    for centre in range(g.n):
        nb = list(bits(g.adj[centre]))
        for x, y in combinations(nb, 2):
            if g.adj[x] >> y & 1:
                continue
            triple = tuple(sorted((x, centre, y)))
            reach = (cyclic_reach(g.n, centre, x)
                     + cyclic_reach(g.n, centre, y))
            out.append((triple, reach))
    out.sort()
    return tuple(out)


def find_mono_p3(g: Graph, colouring, reach_in=None):
    """First (by vertex triple) monochromatic induced P3 with its reach, or
    None.  Reach is cyclic, meaningful when g is a power of a cycle; pass
    reach_in to restrict the search to specific reach values."""
    colours = _colour_tuple(colouring, g.n)
    wanted = None if reach_in is None else set(reach_in)
    for triple, reach in _induced_p3s_with_reach(g):
        if wanted is not None and reach not in wanted:
            continue
        a, b, c = triple
        if colours[a] == colours[b] == colours[c]:
            return triple, reach
    return None


def block_profile(colouring, cyclic: bool = True) -> list[tuple[int, int]]:
    """Maximal monochromatic runs as (colour, size) in index order.

    In cyclic mode a wrap-around run (first and last runs sharing a colour)
    is merged into one block, reported at the position of the trailing run.
    """
    colours = tuple(colouring.colours if isinstance(colouring, Colouring)
                    else colouring)
    runs = [(c, len(list(grp))) for c, grp in groupby(colours)]
    if cyclic and len(runs) >= 2 and runs[0][0] == runs[-1][0]:
        merged = (runs[0][0], runs[0][1] + runs[-1][1])
        runs = runs[1:-1] + [merged]
    return runs
