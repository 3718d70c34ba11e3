from __future__ import annotations

from fractions import Fraction

import pytest

from zagreb.constructions import bull, complete, cycle, path, star
from zagreb.graph import from_graph6
from zagreb.canon import is_isomorphic
from zagreb.suites import (
    SuiteError,
    a0pp_indices,
    asymptotic_report,
    asymptotic_row,
    verify_generalized_kite_min,
    verify_gentur,
    verify_kite_min,
    verify_quasiclique_max,
    verify_trianglefree_bipartite,
    verify_xu_max,
)


def test_a0pp_membership():
    labels = {d.label for d in a0pp_indices()}
    assert {"M1", "M2", "F", "HM1", "RM2", "EM1", "B1", "B2", "chi_r:2", "M_rs:2,1"} <= labels
    assert not labels & {"HM2", "HF", "R_r:2", "M_rs:2,2", "chi_r:3", "M_rs:3,1"}


def test_small_suites_pass():
    for rep in (verify_xu_max(5), verify_gentur(6), verify_quasiclique_max(5), verify_trianglefree_bipartite(5)):
        assert rep.passed, (rep.suite, [c.to_dict() for c in rep.failures][:3])
        assert rep.summary()["asserted"] > 0


def test_bipartite_reports_optimal_m():
    rep = verify_trianglefree_bipartite(5)
    om = rep.extra["optimal_m"]
    assert om["M2"][5] == [2]
    assert all(om[label][n] for label in om for n in om[label])


def test_kite_suite_exception():
    rep = verify_kite_min(5)
    assert rep.passed
    exc = [c for c in rep.checks if "exception" in c.label]
    assert exc and all(c.optimum == 0 for c in exc)
    for c in exc:
        assert any(is_isomorphic(from_graph6(w), star(c.params["n"])) for w in c.witnesses)


def test_genkite_suite():
    assert verify_generalized_kite_min(cycle(4), 6).passed
    rep = verify_generalized_kite_min(complete(3), 5)
    assert rep.passed and "agrees_with_clique_number_3" in rep.extra


@pytest.mark.parametrize("h", [bull(), path(3), star(4)])
def test_genkite_rejects_non_transitive(h):
    with pytest.raises(SuiteError, match="vertex-transitive"):
        verify_generalized_kite_min(h, 6)


def test_suite_size_limits():
    with pytest.raises(SuiteError):
        verify_xu_max(8)
    with pytest.raises(SuiteError):
        verify_generalized_kite_min(cycle(5), 4)


@pytest.mark.parametrize("case,k,m", [("ii", 5, 2), ("ii", 3, 1), ("iii", 3, 2), ("iii", 4, 3)])
def test_asymptotic_exact_ratio(case, k, m):
    row = asymptotic_row(case, k=k, n=200)
    assert row.exact_ratio == Fraction(200 - m, 200) ** 2
    assert row.value == m * m * (200 - m) ** 2


def test_asymptotic_polarity_rows():
    for q in (3, 5, 7):
        row = asymptotic_row("iv", q=q)
        assert 0 < row.ratio < 2 and row.params["n"] == q * q + q + 1
    assert abs(asymptotic_row("ii", k=5, n=200).ratio - 0.9801) < 1e-12
    rows = asymptotic_report()
    assert {r.case for r in rows} == {"ii", "iii", "iv"}
    with pytest.raises(SuiteError):
        asymptotic_row("v")


def test_suite_reports_are_deterministic():
    assert verify_quasiclique_max(5).to_dict() == verify_quasiclique_max(5, workers=2).to_dict()
