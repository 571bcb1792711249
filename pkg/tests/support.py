"""Shared test-side checkers.

These deliberately take different routes than the library: BFS bipartition
instead of forced-neighbourhood masks, nested has_edge loops instead of
bitset algebra, a second truth-table walker for CNF.  Closed forms and the
oracle are both tested against these, so a shared bug would have to be made
twice in different styles.
"""

from __future__ import annotations

import random
from itertools import combinations, product

from hypothesis import strategies as st

from bicliques.graphs import Graph
from bicliques.reduction import CnfFormula, normalize


@st.composite
def graph_strategy(draw, min_n: int = 1, max_n: int = 10):
    """Arbitrary graph drawn as a single edge bitmask so shrinking works."""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = list(combinations(range(n), 2))
    mask = draw(st.integers(min_value=0, max_value=(1 << len(pairs)) - 1))
    edges = [p for i, p in enumerate(pairs) if mask >> i & 1]
    return Graph.from_edges(n, edges)


def bfs_complete_bipartite(g: Graph, vs):
    """Bipartition of the subgraph induced by vs if it is complete bipartite
    with at least one edge, else None.  BFS 2-colouring from the smallest
    vertex, then a full edge audit."""
    vs = sorted(vs)
    if len(vs) < 2:
        return None
    inside = set(vs)
    side = {vs[0]: 0}
    queue = [vs[0]]
    while queue:
        v = queue.pop()
        for u in g.neighbours(v):
            if u in inside and u not in side:
                side[u] = 1 - side[v]
                queue.append(u)
    if len(side) != len(vs):
        return None  # disconnected, cannot be complete bipartite with an edge
    a = tuple(v for v in vs if side[v] == 0)
    b = tuple(v for v in vs if side[v] == 1)
    if not a or not b:
        return None
    for x, y in combinations(vs, 2):
        if g.has_edge(x, y) == (side[x] == side[y]):
            return None
    return a, b


def is_star_by_loops(g: Graph, vs) -> bool:
    vs = list(vs)
    if len(vs) < 2:
        return False
    for c in vs:
        rest = [v for v in vs if v != c]
        if all(g.has_edge(c, v) for v in rest) and \
                not any(g.has_edge(x, y) for x, y in combinations(rest, 2)):
            return True
    return False


def brute_maximal_cb_sets(g: Graph) -> set[tuple[int, ...]]:
    """All maximal complete-bipartite sets by scanning every subset and then
    discarding those properly contained in another."""
    found = [vs for r in range(2, g.n + 1)
             for vs in combinations(range(g.n), r)
             if bfs_complete_bipartite(g, vs) is not None]
    return {vs for vs in found
            if not any(set(vs) < set(other) for other in found)}


def brute_maximal_star_sets(g: Graph) -> set[tuple[int, ...]]:
    found = [vs for r in range(2, g.n + 1)
             for vs in combinations(range(g.n), r)
             if is_star_by_loops(g, vs)]
    return {vs for vs in found
            if not any(set(vs) < set(other) for other in found)}


def random_graph(rng: random.Random, n: int, p: float = 0.4,
                 label: str | None = None) -> Graph:
    edges = [(i, j) for i, j in combinations(range(n), 2) if rng.random() < p]
    return Graph.from_edges(n, edges, label)


def greedy_proper_colouring(g: Graph) -> tuple[int, ...]:
    colours: list[int] = []
    for v in range(g.n):
        taken = {colours[u] for u in g.neighbours(v) if u < v}
        c = 0
        while c in taken:
            c += 1
        colours.append(c)
    return tuple(colours)


def truth_table_sat(f: CnfFormula) -> bool:
    """Independent satisfiability check via itertools.product."""
    for values in product((False, True), repeat=f.num_vars):
        if all(any((lit > 0) == values[abs(lit) - 1] for lit in clause)
               for clause in f.clauses):
            return True
    return False


def brute_ab_exists(n: int, k: int):
    """First (a, b) with n = a*k + b*(k+1), a+b even >= 2, by scanning b."""
    for b in range(n // (k + 1) + 1):
        rem = n - b * (k + 1)
        if rem % k:
            continue
        a = rem // k
        if (a + b) % 2 == 0 and a + b >= 2:
            return a, b
    return None


def random_normalized_formula(rng: random.Random, max_vars: int = 6,
                              max_clauses: int = 8) -> CnfFormula:
    """Random formula that is already normalized: distinct variables per
    clause (no tautologies) and clause pairs sharing at most one literal,
    enforced by rejection; unused variables are compacted by normalize."""
    nv = rng.randint(2, max_vars)
    m = rng.randint(1, max_clauses)
    clauses: list[tuple[int, ...]] = []
    for _ in range(m):
        for _attempt in range(60):
            size = rng.choice((1, 2, 3, 3, 3))
            chosen = rng.sample(range(1, nv + 1), min(size, nv))
            clause = tuple(v if rng.random() < 0.5 else -v for v in chosen)
            if all(len(set(clause) & set(c)) <= 1 for c in clauses):
                clauses.append(clause)
                break
    return normalize(CnfFormula.of(nv, clauses))


def random_raw_formula(rng: random.Random) -> CnfFormula:
    """Unrestricted small formula: tautologies, duplicate literals, and
    clause-pair conflicts all allowed, to exercise every normalize path.
    Kept to 3 variables and 4 clauses so the normalized result stays within
    reach of the independent truth-table walker (at most 3 + 3*4 variables)."""
    nv = rng.randint(1, 3)
    m = rng.randint(1, 4)
    clauses = []
    for _ in range(m):
        size = rng.randint(1, 3)
        clause = tuple((1 if rng.random() < 0.5 else -1) * rng.randint(1, nv)
                       for _ in range(size))
        clauses.append(clause)
    return CnfFormula.of(nv, clauses)
