"""Brute-force checks of linear identities and inequalities among subgraph counts."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence, Union

from zagreb.books import WeightTable, class_weights, decompose_eval
from zagreb.canon import canonical_code, canonical_form
from zagreb.constructions import bull, complete, double_star, gem, path
from zagreb.counting import count_subgraphs
from zagreb.enumerate import Constraints, check_size, iso_classes
from zagreb.graph import Graph
from zagreb.indices import IndexDef, eval_index, fmt_rational, standard_registry
from zagreb.rng import random_graphs

H5 = gem()
B111 = bull()
S12 = double_star(1, 2)
K3 = complete(3)
K4 = complete(4)
P4 = path(4)


@dataclass(frozen=True)
class Coef:
    """``const + per_n * n + per_n2 * n^2 + per_binom * C(n - 3, 2)``."""

    const: Fraction = Fraction(0)
    per_n: Fraction = Fraction(0)
    per_n2: Fraction = Fraction(0)
    per_binom: Fraction = Fraction(0)

    def at(self, n: int) -> Fraction:
        binom = comb(n - 3, 2) if n >= 3 else 0
        return Fraction(self.const) + self.per_n * n + self.per_n2 * n * n + self.per_binom * binom

    def __str__(self) -> str:
        parts = []
        for c, s in ((self.const, ""), (self.per_n, "n"), (self.per_n2, "n^2"), (self.per_binom, "C(n-3,2)")):
            if c:
                parts.append(f"{c}{'*' + s if s else ''}")
        return "(" + " + ".join(parts or ["0"]) + ")"


Source = Union[Graph, IndexDef, None]


@dataclass(frozen=True)
class Term:
    """``coef * value``, where value is N(pattern, G), an index of G, or 1 when ``source`` is None."""

    coef: Coef
    source: Source = None

    def value(self, g: Graph) -> Fraction:
        c = self.coef.at(g.n)
        if self.source is None:
            return c
        if not c:
            return Fraction(0)
        if isinstance(self.source, IndexDef):
            return c * eval_index(self.source, g)
        return c * count_subgraphs(self.source, g)


@dataclass(frozen=True)
class LinearCountExpr:
    lhs: tuple[Term, ...]
    relation: str
    rhs: tuple[Term, ...]
    label: str = ""

    def __post_init__(self) -> None:
        if self.relation not in ("=", "<="):
            raise ValueError("relation must be '=' or '<='")

    def sides(self, g: Graph) -> tuple[Fraction, Fraction]:
        return sum((t.value(g) for t in self.lhs), Fraction(0)), sum((t.value(g) for t in self.rhs), Fraction(0))

    def holds_on(self, g: Graph) -> bool:
        a, b = self.sides(g)
        return a == b if self.relation == "=" else a <= b


def term(coef: int | Fraction | Coef, source: Source = None) -> Term:
    return Term(coef if isinstance(coef, Coef) else Coef(const=Fraction(coef)), source)


@dataclass
class ExprReport:
    label: str
    relation: str
    holds: bool
    checked: int
    counterexamples: list[dict] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "relation": self.relation,
            "holds": self.holds,
            "checked": self.checked,
            "violations": len(self.counterexamples),
            "counterexamples": self.counterexamples,
        }


def check_expr(
    expr: LinearCountExpr,
    constraints: Constraints | None = None,
    n_max: int = 7,
    n_min: int = 1,
    graphs: Iterable[Graph] | None = None,
) -> ExprReport:
    """Evaluate both sides on every class representative with n_min <= n <= n_max (or on ``graphs``)."""
    if graphs is None:
        check_size(n_max)
        graphs = (g for n in range(n_min, n_max + 1) for g in iso_classes(n) if constraints is None or constraints.accepts(g))
    bad = []
    checked = 0
    for g in graphs:
        checked += 1
        a, b = expr.sides(g)
        ok = a == b if expr.relation == "=" else a <= b
        if not ok:
            bad.append((g.n, canonical_code(g), {"graph6": g.to_graph6(), "n": g.n, "lhs": fmt_rational(a), "rhs": fmt_rational(b)}))
    bad.sort(key=lambda x: (x[0], x[1]))
    return ExprReport(expr.label, expr.relation, not bad, checked, [c for _, _, c in bad])


B111_INEQUALITY = LinearCountExpr(
    (term(1, B111),),
    "<=",
    (Term(Coef(per_binom=Fraction(2)), K3), term(1, H5)),
    "N(B_1(1,1)) <= 2 C(n-3,2) N(K_3) + N(H5)",
)

S12_PRINTED = LinearCountExpr(
    (term(2, S12),),
    "=",
    (Term(Coef(const=Fraction(-4), per_n=Fraction(1)), K3), term(1, B111)),
    "2 N(S_{1,2}) = (n-4) N(K_3) + N(B_1(1,1))",
)

S12_P4_VARIANT = LinearCountExpr(
    (term(2, S12),),
    "=",
    (Term(Coef(const=Fraction(-4), per_n=Fraction(1)), P4), term(1, B111)),
    "2 N(S_{1,2}) = (n-4) N(P_4) + N(B_1(1,1))",
)

_K4_FREE = Constraints(forbid=(K4,))


def check_b111_inequality(n_max: int = 7) -> ExprReport:
    return check_expr(B111_INEQUALITY, _K4_FREE, n_max, n_min=5)


def check_s12_identity(n_max: int = 7) -> dict[str, ExprReport]:
    """Both readings of the S_{1,2} counting identity over K_4-free graphs, 5 <= n <= n_max."""
    return {
        "printed": check_expr(S12_PRINTED, _K4_FREE, n_max, n_min=5),
        "p4_variant": check_expr(S12_P4_VARIANT, _K4_FREE, n_max, n_min=5),
    }


@dataclass
class DecompositionReport:
    trials: int
    n_range: tuple[int, int]
    seed: int
    indices: list[str]
    graphs_checked: int
    discrepancies: list[dict] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.discrepancies

    def to_dict(self) -> dict:
        return {
            "trials": self.trials,
            "n_range": list(self.n_range),
            "seed": self.seed,
            "indices": self.indices,
            "graphs_checked": self.graphs_checked,
            "holds": self.holds,
            "discrepancies": self.discrepancies,
        }


def _counts_for(tables: Sequence[WeightTable], g: Graph) -> dict:
    pats = {p for t in tables for p in t.classes if p.vertex_count <= g.n}
    return {p: count_subgraphs(p.graph(), g) for p in pats}


def _compare(indices, tables, graphs) -> tuple[int, list[dict]]:
    bad = []
    checked = 0
    for g in graphs:
        checked += 1
        counts = _counts_for(tables, g)
        for d, t in zip(indices, tables):
            via_books = sum((w * counts.get(p, 0) for p, w in t.classes.items()), Fraction(0))
            direct = eval_index(d, g)
            if via_books != direct:
                bad.append({"index": d.label, "graph6": g.to_graph6(), "books": fmt_rational(via_books), "direct": fmt_rational(direct)})
    return checked, bad


def check_decomposition(
    trials: int = 500, n_range: tuple[int, int] = (7, 12), seed: int = 1, indices: list[IndexDef] | None = None
) -> DecompositionReport:
    """Book-weighted counts vs. direct evaluation on seeded random graphs, exactly."""
    indices = indices or standard_registry()
    tables = [class_weights(d) for d in indices]
    graphs = random_graphs(seed, trials, *n_range)
    checked, bad = _compare(indices, tables, graphs)
    return DecompositionReport(trials, tuple(n_range), seed, [d.label for d in indices], checked, bad)


def check_decomposition_exhaustive(n_max: int = 6, indices: list[IndexDef] | None = None) -> DecompositionReport:
    """Same comparison on every isomorphism class with n <= n_max."""
    check_size(n_max)
    indices = indices or standard_registry()
    tables = [class_weights(d) for d in indices]
    graphs = [g for n in range(1, n_max + 1) for g in iso_classes(n)]
    checked, bad = _compare(indices, tables, graphs)
    return DecompositionReport(0, (1, n_max), 0, [d.label for d in indices], checked, bad)


def mutation_self_test(indices: list[IndexDef] | None = None, n_max: int = 5) -> list[dict]:
    """Bump each class weight by one and find a graph exposing the change.

    Classes on at most ``n_max`` vertices are searched for among all graphs with
    n <= n_max; larger classes are tested on the pattern graph itself.  Returns
    the mutations that went undetected (expected: none).
    """
    indices = indices or standard_registry()
    small = [g for n in range(1, n_max + 1) for g in iso_classes(n)]
    missed = []
    for d in indices:
        table = class_weights(d)
        for pat in table.classes:
            bumped = dict(table.classes)
            bumped[pat] += 1
            mutant = WeightTable(table.ordered, bumped, table.provenance)
            pool = small if pat.vertex_count <= n_max else [pat.graph()]
            if all(decompose_eval(mutant, g) == eval_index(d, g) for g in pool):
                missed.append({"index": d.label, "pattern": [pat.t, pat.p, pat.q]})
    return missed


def verify_identities(n_max: int = 7, trials: int = 500, seed: int = 1, n_range: tuple[int, int] = (7, 12)) -> dict:
    """Run every identity check; ``passed`` reflects only the checks expected to hold."""
    b111 = check_b111_inequality(n_max)
    s12 = check_s12_identity(n_max)
    exhaustive = check_decomposition_exhaustive(min(n_max, 6))
    randomized = check_decomposition(trials, n_range, seed)
    missed = mutation_self_test()
    bull_g6 = canonical_form(B111).to_graph6()
    bull_row = next((c for c in s12["printed"].counterexamples if c["graph6"] == bull_g6), None)
    lhs, rhs = S12_PRINTED.sides(B111)
    rhs_p4 = S12_P4_VARIANT.sides(B111)[1]
    # the printed S_{1,2} identity is expected to fail; we only require the bull row to reproduce
    bull_ok = bull_row is not None and (lhs, rhs, rhs_p4) == (4, 2, 6)
    return {
        "passed": b111.holds and exhaustive.holds and randomized.holds and not missed and bull_ok,
        "b111_inequality": b111.to_dict(),
        "s12_identity": {k: v.to_dict() for k, v in s12.items()},
        "s12_bull": {
            "lhs": fmt_rational(lhs),
            "rhs_printed": fmt_rational(rhs),
            "rhs_p4_variant": fmt_rational(rhs_p4),
            "in_printed_violations": bull_row is not None,
        },
        "decomposition_exhaustive": exhaustive.to_dict(),
        "decomposition_random": randomized.to_dict(),
        "mutation_undetected": missed,
    }

