"""Graph core: bitset adjacency, structural predicates, JSON and DOT output.

Vertices are dense indices 0..n-1.  Adjacency is one Python int per vertex,
bit u of adj[v] set iff {u, v} is an edge, so subset predicates run
word-parallel on arbitrary-width ints.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations


class InputError(ValueError):
    """Bad user-supplied data: indices out of range, malformed files, ..."""


class CapacityError(RuntimeError):
    """Request exceeds a named brute-force size cap."""


def bits(mask: int):
    """Yield the set bit positions of mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def vertex_set(vertices, n: int | None = None) -> tuple[int, ...]:
    """Normalize to a strictly increasing vertex tuple.

    Duplicates, negatives, and (when n is given) out-of-range indices raise
    InputError.
    """
    vs = tuple(sorted(vertices))
    for prev, cur in zip(vs, vs[1:]):
        if prev == cur:
            raise InputError(f"duplicate vertex {cur}")
    if vs and vs[0] < 0:
        raise InputError(f"negative vertex {vs[0]}")
    if vs and n is not None and vs[-1] >= n:
        raise InputError(f"vertex {vs[-1]} out of range for n={n}")
    return vs


@dataclass(frozen=True)
class Graph:
    """Immutable undirected simple graph on vertices 0..n-1."""

    n: int
    adj: tuple[int, ...]
    label: str | None = None

    def __post_init__(self):
        if self.n < 0:
            raise InputError("vertex count must be non-negative")
        if len(self.adj) != self.n:
            raise InputError(
                f"adjacency has {len(self.adj)} rows for {self.n} vertices")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise InputError(f"vertex {v} has a neighbour outside [0, {self.n})")
            if row >> v & 1:
                raise InputError(f"self-loop at vertex {v}")
        for v in range(self.n):
            for u in bits(self.adj[v]):
                if not self.adj[u] >> v & 1:
                    raise InputError(f"asymmetric adjacency between {v} and {u}")

    @staticmethod
    def from_edges(n: int, edges, label: str | None = None) -> "Graph":
        adj = [0] * n
        for i, j in edges:
            if not (0 <= i < n and 0 <= j < n):
                raise InputError(f"edge ({i}, {j}) out of range for n={n}")
            if i == j:
                raise InputError(f"self-loop edge ({i}, {j})")
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        return Graph(n, tuple(adj), label)

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adj[i] >> j & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbours(self, v: int):
        return bits(self.adj[v])

    def edges(self) -> list[tuple[int, int]]:
        """Edge list, each pair once with i < j, lexicographically sorted."""
        return [(i, j) for i in range(self.n) for j in bits(self.adj[i]) if i < j]

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2


def induced_subgraph(g: Graph, s) -> Graph:
    """Subgraph induced by vertex set s, relabelled 0..|s|-1 in sorted order."""
    vs = vertex_set(s, g.n)
    index = {v: i for i, v in enumerate(vs)}
    adj = [0] * len(vs)
    for i, v in enumerate(vs):
        for u in bits(g.adj[v]):
            j = index.get(u)
            if j is not None:
                adj[i] |= 1 << j
    return Graph(len(vs), tuple(adj))


# ---------------------------------------------------------------------------
# structural predicates (mask level, shared by the enumeration modules)

def cb_sides(adj, smask: int):
    """Bipartition masks if smask induces a complete bipartite graph with at
    least one edge, else None.

    The partition of a connected complete bipartite graph is forced: the side
    not containing the lowest vertex v0 must be exactly N(v0) inside the set.
    Returns (side containing the lowest vertex, other side).
    """
    v0 = (smask & -smask).bit_length() - 1
    b = adj[v0] & smask
    if not b:
        return None
    a = smask & ~b
    for x in bits(a):
        if adj[x] & smask != b:
            return None
    for y in bits(b):
        if adj[y] & smask != a:
            return None
    return a, b


def is_maximal_cb(adj, smask: int) -> bool:
    """True if no single vertex extends smask to a larger complete bipartite
    set.  Only neighbours of the set can extend it (an isolated addition is
    never complete bipartite), so the scan is restricted to those."""
    ext = 0
    for v in bits(smask):
        ext |= adj[v]
    ext &= ~smask
    for w in bits(ext):
        if cb_sides(adj, smask | (1 << w)) is not None:
            return False
    return True


def is_star_set(adj, smask: int) -> bool:
    """True if smask induces a star K_{1,q} with q >= 1: some centre adjacent
    to every other vertex, the rest pairwise non-adjacent."""
    for c in bits(smask):
        cbit = 1 << c
        rest = smask ^ cbit
        if rest and adj[c] & smask == rest:
            if all(adj[x] & smask == cbit for x in bits(rest)):
                return True
    return False


def is_maximal_star(adj, smask: int) -> bool:
    ext = 0
    for v in bits(smask):
        ext |= adj[v]
    ext &= ~smask
    for w in bits(ext):
        if is_star_set(adj, smask | (1 << w)):
            return False
    return True


def is_complete_bipartite(g: Graph, s):
    """Whether s induces a complete bipartite subgraph with >= 1 edge.

    Returns (True, (side_a, side_b)) with the side containing the smallest
    vertex first and both sides sorted, or (False, None).
    """
    vs = vertex_set(s, g.n)
    if len(vs) < 2:
        raise InputError("complete-bipartite test needs at least two vertices")
    sides = cb_sides(g.adj, mask_of(vs))
    if sides is None:
        return False, None
    a, b = sides
    return True, (tuple(bits(a)), tuple(bits(b)))


def contains_k4(g: Graph):
    """Lexicographically first 4-clique, or None."""
    for quad in combinations(range(g.n), 4):
        if all(g.adj[i] >> j & 1 for i, j in combinations(quad, 2)):
            return quad
    return None


def contains_induced_c4(g: Graph):
    """Lexicographically first induced 4-cycle, or None.

    A 4-set induces C4 iff it spans exactly 4 edges with every degree 2.
    """
    for quad in combinations(range(g.n), 4):
        deg = [0] * 4
        m = 0
        for (p, i), (q, j) in combinations(enumerate(quad), 2):
            if g.adj[i] >> j & 1:
                m += 1
                deg[p] += 1
                deg[q] += 1
        if m == 4 and max(deg) == 2:
            return quad
    return None


def induced_shape(g: Graph, s) -> str:
    """Classify the subgraph induced by s: "P2", "P3", "C4", or "OTHER"."""
    vs = tuple(s)
    if len(vs) == 2:
        return "P2" if g.has_edge(vs[0], vs[1]) else "OTHER"
    pairs = [(i, j) for i, j in combinations(vs, 2) if g.has_edge(i, j)]
    if len(vs) == 3 and len(pairs) == 2:
        return "P3"
    if len(vs) == 4 and len(pairs) == 4:
        deg: dict[int, int] = {}
        for i, j in pairs:
            deg[i] = deg.get(i, 0) + 1
            deg[j] = deg.get(j, 0) + 1
        if max(deg.values()) == 2:
            return "C4"
    return "OTHER"


# ---------------------------------------------------------------------------
# serialization

def graph_to_dict(g: Graph) -> dict:
    d: dict = {"n": g.n, "edges": [[i, j] for i, j in g.edges()]}
    if g.label is not None:
        d["label"] = g.label
    return d


def graph_from_dict(d: dict) -> Graph:
    if not isinstance(d, dict) or "n" not in d or "edges" not in d:
        raise InputError('graph object needs "n" and "edges" keys')
    n = d["n"]
    if not isinstance(n, int):
        raise InputError('"n" must be an integer')
    edges = d["edges"]
    if not isinstance(edges, list):
        raise InputError('"edges" must be a list of pairs')
    pairs = []
    for e in edges:
        if not (isinstance(e, list) and len(e) == 2
                and all(isinstance(x, int) for x in e)):
            raise InputError(f"malformed edge entry {e!r}")
        pairs.append((e[0], e[1]))
    label = d.get("label")
    if label is not None and not isinstance(label, str):
        raise InputError('"label" must be a string')
    return Graph.from_edges(n, pairs, label)


def read_graph(path: str) -> Graph:
    try:
        with open(path) as fh:
            d = json.load(fh)
    except json.JSONDecodeError as e:
        raise InputError(f"{path}: line {e.lineno}: {e.msg}") from e
    return graph_from_dict(d)


def write_graph(g: Graph, path: str) -> None:
    with open(path, "w") as fh:
        json.dump(graph_to_dict(g), fh, indent=1)
        fh.write("\n")


# colour ids 0.. map onto this fixed palette (mod 8) in DOT output
DOT_PALETTE = (
    "#4477aa",  # 0 blue
    "#ee6677",  # 1 red
    "#228833",  # 2 green
    "#ccbb44",  # 3 yellow
    "#66ccee",  # 4 cyan
    "#aa3377",  # 5 purple
    "#ee8866",  # 6 orange
    "#bbbbbb",  # 7 grey
)


def write_dot(g: Graph, colours=None) -> str:
    """Graphviz source for g; vertices filled by colour id when given."""
    if colours is not None and len(colours) != g.n:
        raise InputError(f"colouring has {len(colours)} entries for n={g.n}")
    name = json.dumps(g.label or "g")
    lines = [f"graph {name} {{"]
    lines.append("  node [shape=circle, style=filled];")
    for v in range(g.n):
        if colours is None:
            lines.append(f'  {v} [fillcolor="white"];')
        else:
            fill = DOT_PALETTE[colours[v] % len(DOT_PALETTE)]
            lines.append(f'  {v} [fillcolor="{fill}"];')
    for i, j in g.edges():
        lines.append(f"  {i} -- {j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
