"""Power-graph generators and closed-form biclique / star enumerations,
checked against the subset-scan oracle and independent test-side scanners."""

from itertools import combinations

import pytest

import support
from bicliques.graphs import InputError, induced_shape, is_complete_bipartite
from bicliques.oracle import maximal_bicliques, maximal_stars
from bicliques.powers import (
    Biclique,
    circulant,
    cycle_bicliques,
    cycle_induced_p3s,
    cycle_stars,
    cyclic_reach,
    path_bicliques,
    path_stars,
    power_cycle,
    power_path,
)


def test_cyclic_reach():
    assert cyclic_reach(11, 0, 1) == 1
    assert cyclic_reach(11, 0, 10) == 1
    assert cyclic_reach(11, 2, 8) == 5
    assert cyclic_reach(10, 0, 5) == 5


def test_power_path_structure():
    g = power_path(4, 1)
    assert g.label == "P_4^1"
    assert g.edges() == [(0, 1), (1, 2), (2, 3)]
    assert power_path(6, 2).edge_count == 9
    # n <= k+1 is complete
    k4 = power_path(4, 3)
    assert k4.edge_count == 6
    assert power_path(1, 5).edge_count == 0


def test_power_cycle_structure():
    g = power_cycle(5, 1)
    assert g.label == "C_5^1"
    assert all(g.degree(v) == 2 for v in range(5))
    assert g.has_edge(0, 4) and not g.has_edge(0, 2)
    # n <= 2k+1 is complete
    assert power_cycle(5, 2).edge_count == 10
    assert power_cycle(2, 1).edges() == [(0, 1)]
    big = power_cycle(11, 4)
    assert big.edge_count == 44
    assert all(big.degree(v) == 8 for v in range(11))


def test_power_param_validation():
    for bad in ((0, 1), (3, 0), (-2, 2)):
        with pytest.raises(InputError):
            power_path(*bad)
        with pytest.raises(InputError):
            power_cycle(*bad)


def test_circulant_matches_cycle_power():
    for n, k in ((8, 2), (11, 3), (7, 1)):
        assert circulant(n, range(1, k + 1)).adj == power_cycle(n, k).adj
    g = circulant(13, (1, 5))
    assert g.label == "C_13(1,5)"
    for i, j in combinations(range(13), 2):
        assert g.has_edge(i, j) == (cyclic_reach(13, i, j) in (1, 5))
    # distances reduce mod n: 7 = -1 mod 8
    assert circulant(8, [7]).adj == power_cycle(8, 1).adj
    with pytest.raises(InputError):
        circulant(6, [6])
    with pytest.raises(InputError):
        circulant(6, [])
    with pytest.raises(InputError):
        circulant(6, [-1])


def test_path_bicliques_frozen_examples():
    assert [b.vertices for b in path_bicliques(5, 1)] == \
        [(0, 1, 2), (1, 2, 3), (2, 3, 4)]
    assert all(b.shape == "P3" for b in path_bicliques(5, 1))
    # complete: every edge is its own maximal biclique
    assert [(b.vertices, b.shape) for b in path_bicliques(3, 2)] == \
        [((0, 1), "P2"), ((0, 2), "P2"), ((1, 2), "P2")]
    # middle range k+2 <= n <= 2k mixes maximal edges and P3s
    assert [(b.vertices, b.shape) for b in path_bicliques(5, 3)] == [
        ((0, 1, 4), "P3"), ((0, 2, 4), "P3"), ((0, 3, 4), "P3"),
        ((1, 2), "P2"), ((1, 3), "P2"), ((2, 3), "P2")]


def test_cycle_bicliques_frozen_examples():
    b112 = cycle_bicliques(11, 2)
    assert len(b112) == 33
    assert all(b.shape == "P3" for b in b112)
    assert {b.shape for b in cycle_bicliques(11, 3)} == {"P3", "C4"}
    b114 = cycle_bicliques(11, 4)
    assert {b.shape for b in b114} == {"C4"}
    assert (0, 3, 6, 9) in [b.vertices for b in b114]


def test_path_shape_ranges():
    for k in range(1, 7):
        for n in range(1, 51):
            shapes = {b.shape for b in path_bicliques(n, k)}
            if n == 1:
                assert shapes == set()
            elif n <= k + 1:
                assert shapes == {"P2"}
            elif n <= 2 * k:
                assert shapes == {"P2", "P3"}
            else:
                assert shapes == {"P3"}


def test_cycle_shape_ranges():
    for k in range(1, 7):
        for n in range(1, 51):
            shapes = {b.shape for b in cycle_bicliques(n, k)}
            if n == 1:
                assert shapes == set()
            elif n <= 2 * k + 1:
                assert shapes == {"P2"}
            elif n <= 3 * k + 1:
                assert shapes == {"C4"}
            elif n <= 4 * k:
                assert shapes == {"P3", "C4"}
            else:
                assert shapes == {"P3"}


def test_cycle_p3_reaches():
    for k in (1, 2, 3, 4):
        for n in range(2 * k + 2, 8 * k):
            for triple, reach in cycle_induced_p3s(n, k):
                assert k + 1 <= reach <= 2 * k
                g = power_cycle(n, k)
                centre = [v for v in triple
                          if all(g.has_edge(v, u) for u in triple if u != v)]
                assert len(centre) == 1
                others = [v for v in triple if v != centre[0]]
                assert reach == sum(cyclic_reach(n, centre[0], u)
                                    for u in others)
            if n >= 3 * k + 2:
                # a P3 of full reach 2k exists whenever the range is nonempty
                assert any(r == 2 * k for _, r in cycle_induced_p3s(n, k))
    assert cycle_induced_p3s(5, 2) == []


def _as_family(bicliques):
    return [(b.vertices, b.shape) for b in bicliques]


def test_closed_form_matches_oracle_small_grid():
    for k in range(1, 4):
        for n in range(1, 11):
            pg = power_path(n, k)
            assert _as_family(path_bicliques(n, k)) == _as_family(maximal_bicliques(pg))
            assert path_stars(n, k) == maximal_stars(pg)
            cg = power_cycle(n, k)
            assert _as_family(cycle_bicliques(n, k)) == _as_family(maximal_bicliques(cg))
            assert cycle_stars(n, k) == maximal_stars(cg)


def test_closed_form_outputs_are_maximal_cb_by_independent_checker():
    cases = [
        (power_cycle(12, 3), cycle_bicliques(12, 3)),
        (power_cycle(13, 4), cycle_bicliques(13, 4)),
        (power_path(12, 3), path_bicliques(12, 3)),
    ]
    for g, fam in cases:
        assert fam
        for b in fam:
            assert support.bfs_complete_bipartite(g, b.vertices) is not None
            assert induced_shape(g, b.vertices) == b.shape
            for w in range(g.n):
                if w in b.vertices:
                    continue
                bigger = tuple(sorted(b.vertices + (w,)))
                assert support.bfs_complete_bipartite(g, bigger) is None


def test_stars_vs_bicliques():
    # path powers: identical families
    for k in (1, 2, 3):
        for n in range(2, 13):
            assert path_stars(n, k) == [b.vertices for b in path_bicliques(n, k)]
    # far range of cycles: identical families
    for k in (1, 2, 3):
        for n in range(4 * k + 1, 4 * k + 8):
            assert cycle_stars(n, k) == [b.vertices for b in cycle_bicliques(n, k)]
    # C4-only range: stars are the P3s inside the C4s, not the C4s
    stars = cycle_stars(11, 4)
    assert stars and all(len(s) == 3 for s in stars)
    assert stars == [t for t, _ in cycle_induced_p3s(11, 4)]
    assert stars != [b.vertices for b in cycle_bicliques(11, 4)]


def test_biclique_record_fields():
    b = cycle_bicliques(11, 2)[0]
    assert isinstance(b, Biclique)
    assert b.reach is not None and b.shape == "P3"
    g = power_cycle(11, 2)
    assert is_complete_bipartite(g, b.vertices)[0]
    # C4 entries never carry a reach
    assert all(x.reach is None for x in cycle_bicliques(11, 4))
