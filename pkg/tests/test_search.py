from __future__ import annotations

import pytest

from zagreb.canon import canonical_code
from zagreb.constructions import BookPattern, complete, kite, path, star, turan
from zagreb.counting import clique_number, is_connected
from zagreb.enumerate import Constraints, EnumerationError, enumerate_labeled
from zagreb.graph import from_graph6
from zagreb.indices import registry_lookup
from zagreb.rng import draw, random_graph, random_graphs, splitmix64
from zagreb.search import Objective, SearchSpec, population, search

M2 = Objective.of(registry_lookup("M2"))


def _labeled_oracle(spec: SearchSpec):
    vals = {}
    for g in enumerate_labeled(spec.n):
        if spec.constraints.accepts(g):
            vals.setdefault(canonical_code(g), spec.objective(g))
    if not vals:
        return None, set()
    best = (max if spec.direction == "max" else min)(vals.values())
    return best, {c for c, v in vals.items() if v == best}


SPECS = [
    SearchSpec(5, M2, Constraints(forbid=(complete(3),))),
    SearchSpec(5, Objective.of(BookPattern(0, 1, 1)), Constraints(connected=True, clique_eq=3), "min"),
    SearchSpec(5, Objective.of(registry_lookup("HM1")), Constraints(edges=6)),
    SearchSpec(4, Objective.of(path(3)), Constraints(contains=(star(4),)), "min"),
    SearchSpec(6, Objective.of(registry_lookup("F")), Constraints(triangle_free=True, connected=True)),
]


@pytest.mark.parametrize("spec", SPECS, ids=lambda s: f"n{s.n}-{s.objective.name}-{s.direction}")
def test_search_matches_labeled_oracle(spec):
    rep = search(spec)
    best, codes = _labeled_oracle(spec)
    assert rep.optimum == best
    assert {canonical_code(from_graph6(w)) for w in rep.witnesses} == codes


@pytest.mark.parametrize("spec", SPECS, ids=lambda s: f"n{s.n}-{s.objective.name}-{s.direction}")
def test_witnesses_revalidate(spec):
    rep = search(spec)
    pop = population(spec.n, spec.constraints)
    better = (lambda a, b: a > b) if spec.direction == "max" else (lambda a, b: a < b)
    for w in rep.witnesses:
        g = from_graph6(w)
        assert spec.constraints.accepts(g) and spec.objective(g) == rep.optimum
    assert not any(better(spec.objective(g), rep.optimum) for g in pop)


def test_threads_do_not_change_report():
    spec = SearchSpec(7, M2, Constraints(forbid=(complete(4),)))
    serial = search(spec, workers=1).to_dict()
    assert search(spec, workers=3).to_dict() == serial
    assert search(spec, workers=8).to_dict() == serial


def test_relabeled_constraint_graph():
    spec = SearchSpec(6, M2, Constraints(forbid=(path(4),)))
    moved = SearchSpec(6, M2, Constraints(forbid=(path(4).relabel([2, 0, 3, 1]),)))
    a, b = search(spec), search(moved)
    assert a.optimum == b.optimum and a.witnesses == b.witnesses


def test_report_fields_and_names():
    rep = search(SearchSpec(6, M2, Constraints(forbid=(complete(4),))))
    assert rep.optimum == 192 and rep.has_witness(turan(6, 3)) and len(rep.witnesses) == 1
    assert rep.matched_construction == "turan(6,3)"
    d = rep.to_dict()
    assert "elapsed" not in d and "elapsed" in rep.to_dict(include_elapsed=True)
    assert d["optimum"] == 192 and d["feasible_count"] == rep.feasible_count <= d["enumerated_count"] == 156


def test_empty_search_space():
    rep = search(SearchSpec(4, M2, Constraints(clique_eq=5)))
    assert rep.empty and rep.optimum is None and rep.witnesses == []
    assert rep.to_dict()["empty_search_space"] is True


def test_bad_specs():
    with pytest.raises(ValueError):
        SearchSpec(3, M2, Constraints(forbid=(complete(4),)))
    with pytest.raises(ValueError):
        SearchSpec(3, M2, direction="sideways")
    with pytest.raises(ValueError):
        Objective()
    with pytest.raises(EnumerationError):
        search(SearchSpec(8, M2))


def test_extremal_graphs_are_in_their_search_spaces():
    for n in range(3, 8):
        for k in range(2, n):
            assert Constraints(forbid=(complete(k + 1),)).accepts(turan(n, k))
        for k in range(2, n + 1):
            g = kite(n, k)
            assert Constraints(connected=True, clique_eq=k).accepts(g)
            assert is_connected(g) and clique_number(g) == k


def test_splitmix64_reference_value():
    # first output of the reference SplitMix64 generator seeded with 0
    assert splitmix64(0) == 0xE220A8397B1DCDAF


def test_random_graphs_are_reproducible():
    a = random_graphs(1, 50, 7, 12)
    assert a == random_graphs(1, 50, 7, 12)
    assert a != random_graphs(2, 50, 7, 12)
    assert all(7 <= g.n <= 12 for g in a)
    assert random_graph(1, 17, 7, 12) == a[17]
    assert draw(5, 3, 2) == splitmix64((splitmix64(5) + (3 << 32) + 2) % (1 << 64))
    # rough edge density check: 1/2 with plenty of slack
    pairs = sum(g.n * (g.n - 1) // 2 for g in a)
    assert 0.4 < sum(g.m for g in a) / pairs < 0.6
    with pytest.raises(ValueError):
        random_graph(1, 0, 5, 4)
