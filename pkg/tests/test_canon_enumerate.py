from __future__ import annotations

import random

import networkx as nx
import pytest
from hypothesis import given

from conftest import graph_with_perm, graphs
from zagreb.canon import canonical_code, canonical_form, is_isomorphic
from zagreb.constructions import complete, cycle, path, petersen
from zagreb.counting import clique_number, contains_subgraph, is_connected
from zagreb.enumerate import (
    Constraints,
    EnumerationError,
    check_size,
    dedupe_iso,
    enumerate_graphs,
    enumerate_labeled,
    iso_classes,
    partition_range,
)
from zagreb.graph import Graph

# number of graphs on n unlabeled vertices, n = 1..7
CLASS_COUNTS = [1, 2, 4, 11, 34, 156, 1044]
CONNECTED_COUNTS = [1, 1, 2, 6, 21, 112, 853]


def _atlas_codes(n: int) -> set[bytes]:
    out = set()
    for ng in nx.graph_atlas_g():
        if ng.number_of_nodes() == n:
            g = Graph.from_edges(n, ng.edges())
            out.add(canonical_code(g))
    return out


@given(graph_with_perm())
def test_code_invariant_under_relabeling(gp):
    g, perm = gp
    assert canonical_code(g.relabel(perm)) == canonical_code(g)
    assert canonical_form(g.relabel(perm)) == canonical_form(g)


@given(graphs(max_n=8))
def test_canonical_form_is_isomorphic_copy(g):
    h = canonical_form(g)
    assert nx.is_isomorphic(nx.Graph(g.edges()) if g.m else nx.empty_graph(g.n), nx.Graph(h.edges()) if h.m else nx.empty_graph(h.n))
    assert sorted(h.degrees) == sorted(g.degrees)


def test_code_separates_networkx_atlas_classes():
    # the atlas lists each class once, so distinct entries must get distinct codes
    for n in range(1, 8):
        assert len(_atlas_codes(n)) == CLASS_COUNTS[n - 1]


@pytest.mark.parametrize("n", range(1, 8))
def test_iso_class_counts(n):
    classes = iso_classes(n)
    assert len(classes) == CLASS_COUNTS[n - 1]
    assert sum(is_connected(g) for g in classes) == CONNECTED_COUNTS[n - 1]


def test_iso_classes_agree_with_atlas_at_7():
    assert {canonical_code(g) for g in iso_classes(7)} == _atlas_codes(7)


def test_labeled_dedupe_oracle_at_6():
    labeled = list(enumerate_labeled(6))
    assert len(labeled) == 2**15
    reps = dedupe_iso(labeled)
    assert [canonical_code(g) for g in reps] == [canonical_code(g) for g in iso_classes(6)]


def test_is_isomorphic_hard_cases():
    assert is_isomorphic(petersen(), petersen().relabel([3, 1, 4, 0, 5, 9, 2, 6, 8, 7]))
    assert not is_isomorphic(cycle(6), Graph.disjoint_union(cycle(3), cycle(3)))
    assert not is_isomorphic(path(4), Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)]))


def test_random_relabelings_on_larger_graphs():
    rng = random.Random(7)
    for _ in range(20):
        n = rng.randint(9, 14)
        g = Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.3])
        code = canonical_code(g)
        for _ in range(5):
            perm = list(range(n))
            rng.shuffle(perm)
            assert canonical_code(g.relabel(perm)) == code


def test_constraints_filter():
    cons = Constraints(connected=True, forbid=(complete(3),))
    got = list(enumerate_graphs(6, cons))
    assert got and all(is_connected(g) and not contains_subgraph(complete(3), g) for g in got)
    oracle = [ng for ng in nx.graph_atlas_g() if ng.number_of_nodes() == 6 and nx.is_connected(ng) and nx.triangles(ng) == dict.fromkeys(ng, 0)]
    assert len(got) == len(oracle) == 19
    assert all(clique_number(g) == 3 for g in enumerate_graphs(5, Constraints(clique_eq=3)))
    assert all(g.m == 4 for g in enumerate_graphs(5, Constraints(edges=4)))
    assert len(list(enumerate_graphs(4, Constraints(contains=(cycle(4),))))) == 3


def test_labeled_mode_counts():
    assert sum(1 for _ in enumerate_graphs(4, mode="labeled")) == 64
    assert sum(1 for _ in enumerate_graphs(5, Constraints(edges=3), mode="labeled")) == 120


def test_size_limits():
    check_size(7)
    check_size(8, allow_n8=True)
    with pytest.raises(EnumerationError, match="opt-in"):
        check_size(8)
    with pytest.raises(EnumerationError):
        check_size(9, allow_n8=True)
    with pytest.raises(EnumerationError):
        list(enumerate_graphs(4, mode="bogus"))


@pytest.mark.parametrize("total,parts", [(10, 3), (5, 8), (0, 2), (1 << 15, 4)])
def test_partition_range_covers_exactly(total, parts):
    ranges = partition_range(total, parts)
    flat = [i for a, b in ranges for i in range(a, b)]
    assert flat == list(range(total))
    sizes = [b - a for a, b in ranges]
    assert max(sizes) - min(sizes) <= 1
