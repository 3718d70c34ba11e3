"""Acceptance criteria, one test each.

Every test records a PASS/FAIL line; pytest prints them in its terminal
summary, and ``python3 tests/test_acceptance.py`` prints them directly.
"""

from __future__ import annotations

import random
import sys
import time
from fractions import Fraction
from itertools import product
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from tests_support import RESULTS  # noqa: E402
from zagreb.books import class_weights, tuple_count_closed, tuple_count_enum  # noqa: E402
from zagreb.canon import canonical_code, is_isomorphic  # noqa: E402
from zagreb.cli import default_threads  # noqa: E402
from zagreb.constructions import BookPattern, bull, complete, cycle, path, polarity_graph, star  # noqa: E402
from zagreb.counting import count_subgraphs  # noqa: E402
from zagreb.enumerate import Constraints, iso_classes  # noqa: E402
from zagreb.graph import from_graph6  # noqa: E402
from zagreb.identities import check_b111_inequality, check_decomposition, check_decomposition_exhaustive, check_s12_identity, S12_P4_VARIANT, S12_PRINTED  # noqa: E402
from zagreb.indices import registry_lookup, standard_registry  # noqa: E402
from zagreb.rng import random_graphs  # noqa: E402
from zagreb.search import Objective, SearchSpec, search  # noqa: E402
from zagreb.suites import (  # noqa: E402
    SuiteError,
    asymptotic_row,
    verify_generalized_kite_min,
    verify_gentur,
    verify_kite_min,
    verify_quasiclique_max,
    verify_trianglefree_bipartite,
    verify_xu_max,
)

WORKERS = default_threads()
SEED = 1


def record(num: int, title: str, ok: bool, detail: str) -> None:
    line = f"{num:>2} [{'PASS' if ok else 'FAIL'}] {title}: {detail}"
    RESULTS[f"{num} {title}"] = line
    print(line)
    assert ok, line


def _failures(checks) -> list[str]:
    return [f"{c.label} {c.params}: {c.note}" for c in checks if c.asserted and not c.passed]


def test_01_decomposition_identity():
    t0 = time.perf_counter()
    exh = check_decomposition_exhaustive(6)
    rnd = check_decomposition(500, (7, 12), SEED)
    took = time.perf_counter() - t0
    ok = exh.holds and rnd.holds and len(exh.indices) == 32 and rnd.graphs_checked == 500 and took < 300
    record(1, "decomposition identity", ok, f"{len(exh.indices)} indices, {exh.graphs_checked} classes n<=6 + {rnd.graphs_checked} random graphs, {len(exh.discrepancies) + len(rnd.discrepancies)} mismatches, {took:.1f}s")


def test_02_class_weights():
    k2, p3, p4, k3 = BookPattern(0, 0, 0), BookPattern(0, 0, 1), BookPattern(0, 1, 1), BookPattern(1, 0, 0)
    m2 = dict(class_weights(registry_lookup("M2")).classes)
    m1 = dict(class_weights(registry_lookup("M1")).classes)
    negative = [d.label for d in standard_registry() if not class_weights(d).is_nonnegative()]
    ok = m2 == {k2: 1, p3: 2, p4: 1, k3: 3} and m1 == {k2: 2, p3: 2} and not negative
    record(2, "M2/M1 class weights, non-negativity", ok, f"M2={ {str(k): int(v) for k, v in m2.items()} } M1={ {str(k): int(v) for k, v in m1.items()} } negative={negative}")


def test_03_tuple_counts():
    mismatches = checked = 0
    for g in random_graphs(SEED, 200, 2, 12):
        for u in range(g.n):
            for v in g.neighbors(u):
                for t, p, q in product(range(4), repeat=3):
                    checked += 1
                    mismatches += tuple_count_closed(g, u, v, t, p, q) != tuple_count_enum(g, u, v, t, p, q)
    record(3, "closed-form tuple counts", mismatches == 0, f"{checked} (edge, t, p, q) cases on 200 graphs, {mismatches} mismatches")


def test_04_xu_maximization():
    rep = verify_xu_max(7, WORKERS)
    checks = [c for c in rep.checks if c.label.startswith("M2 max")]
    bad = _failures(checks)
    ok = not bad and len(checks) == sum(n - 2 for n in range(3, 8))
    record(4, "M2 max over K_{k+1}-free is T(n,k)", ok, f"{len(checks)} (n,k) pairs, 2<=k<n<=7, failures={bad[:3]}")


def test_05_generalized_turan():
    rep = verify_gentur(7, WORKERS)
    bad = _failures(rep.checks)
    record(5, "K_4-free maxima attained by T(n,3)", not bad and rep.checks != [], f"{len(rep.checks)} checks (B_1(1,1), S_12, small-degree indices; 5<=n<=7), failures={bad[:3]}")


def test_06_triangle_free_bipartite():
    rep = verify_trianglefree_bipartite(7, WORKERS)
    bad = _failures(rep.checks)
    om = rep.extra["optimal_m"]
    reported = all(om[label][n] for label in om for n in om[label])
    sample = {k: om[k][7] for k in ("M2", "F", "RM2")}
    record(6, "triangle-free maxima are complete bipartite", not bad and reported, f"{len(om)} monotone indices x n<=7, optimal m at n=7: {sample}, failures={bad[:3]}")


def test_07_kite_minimization():
    rep = verify_kite_min(7, WORKERS)
    pattern_checks = [c for c in rep.checks if "pattern" in c.params]
    bad = _failures(pattern_checks)
    exc = [c for c in pattern_checks if "exception" in c.label]
    exc_ok = bool(exc) and all(c.optimum == 0 and any(is_isomorphic(from_graph6(w), star(c.params["n"])) for w in c.witnesses) for c in exc)
    index_bad = _failures([c for c in rep.checks if "index" in c.params])
    record(7, "book-count minima attained by Ki(n,k)", not bad and exc_ok, f"{len(pattern_checks)} (n,k,pattern) checks, exception (k=2, B_0(1,1)) star/0 at n=4..7: {exc_ok}; index checks failing: {len(index_bad)}; failures={bad[:3]}")


def test_08_generalized_kite():
    details, ok = [], True
    for name, h in (("K3", complete(3)), ("C4", cycle(4)), ("C5", cycle(5))):
        rep = verify_generalized_kite_min(h, 7, WORKERS)
        ok &= rep.passed
        details.append(f"{name}:{len([c for c in rep.checks if c.asserted])} checks {'ok' if rep.passed else 'FAILED'}")
    rejected = []
    for name, h in (("bull", bull()), ("P3", path(3))):
        try:
            verify_generalized_kite_min(h, 7, WORKERS)
        except SuiteError:
            rejected.append(name)
    ok &= rejected == ["bull", "P3"]
    record(8, "book-count minima attained by Ki(n,H)", ok, f"{', '.join(details)}; rejected non-transitive: {rejected}")


def test_09_b111_inequality():
    rep = check_b111_inequality(7)
    record(9, "B_1(1,1) <= 2C(n-3,2)K_3 + H5 on K_4-free graphs", rep.holds and rep.checked > 0, f"{rep.checked} K_4-free classes 5<=n<=7, {len(rep.counterexamples)} violations")


def test_10_s12_bull():
    first = check_s12_identity(7)
    second = check_s12_identity(7)
    same = {k: v.to_dict() for k, v in first.items()} == {k: v.to_dict() for k, v in second.items()}
    lhs, rhs = S12_PRINTED.sides(bull())
    rhs_p4 = S12_P4_VARIANT.sides(bull())[1]
    g6 = bull().to_graph6()
    listed = any(is_isomorphic(from_graph6(r["graph6"]), bull()) for r in first["printed"].counterexamples)
    ok = (lhs, rhs, rhs_p4) == (4, 2, 6) and listed and same
    record(10, "S_12 identity counterexample on the bull", ok, f"bull {g6}: LHS {lhs}, printed RHS {rhs}, P_4-variant RHS {rhs_p4}; in report: {listed}; deterministic: {same}")


def test_11_quasi_clique():
    rep = verify_quasiclique_max(7, WORKERS)
    bad = _failures(rep.checks)
    record(11, "M2 max with m edges is K_n^m", not bad, f"{len(rep.checks)} (n,m) pairs, n<=7, failures={bad[:3]}")


def test_12_polarity_and_asymptotics():
    parts, ok = [], True
    c4 = cycle(4)
    for q in (3, 5, 7):
        g = polarity_graph(q)
        good = g.n == q * q + q + 1 and g.m == q * (q + 1) ** 2 // 2 and set(g.degrees) <= {q, q + 1} and count_subgraphs(c4, g) == 0
        row = asymptotic_row("iv", q=q)
        good &= 0 < row.ratio < 2
        ok &= good
        parts.append(f"q={q}: n={g.n} m={g.m} ratio(iv)={row.ratio:.4f}")
    for case, k in (("ii", 5), ("iii", 3)):
        m = (k - 1) // 2 if case == "ii" else k - 1
        row = asymptotic_row(case, k=k, n=200)
        good = row.exact_ratio == (1 - Fraction(m, 200)) ** 2
        ok &= good
        parts.append(f"({case}) k={k} m={m}: {row.exact_ratio} = {row.ratio:.4f}")
    record(12, "polarity graphs and asymptotic ratios", ok, "; ".join(parts))


def test_13_infrastructure():
    round_trip = all(from_graph6(g.to_graph6()) == g for n in range(1, 7) for g in iso_classes(n))
    rng = random.Random(SEED)
    invariant = True
    for g in random_graphs(SEED + 1, 100, 4, 12):
        code = canonical_code(g)
        for _ in range(100):
            perm = list(range(g.n))
            rng.shuffle(perm)
            if canonical_code(g.relabel(perm)) != code:
                invariant = False
    counts = (len(iso_classes(6)), len(iso_classes(7)))
    spec = SearchSpec(7, Objective.of(registry_lookup("M2")), Constraints(forbid=(complete(4),)))
    threads_ok = search(spec, 1).to_dict() == search(spec, 2).to_dict() == search(spec, 4).to_dict()
    ok = round_trip and invariant and counts == (156, 1044) and threads_ok
    record(13, "graph6, canonical codes, enumeration, threads", ok, f"round trip {round_trip}, relabel invariance {invariant}, classes n=6,7: {counts}, thread-independent search {threads_ok}")


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
