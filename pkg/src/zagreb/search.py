"""Exact constrained optimization over all small graphs.

Every objective and constraint is isomorphism-invariant, so the search runs
over one canonical representative per isomorphism class.  Work is split into
contiguous ranges of the (canonically sorted) population; each worker keeps a
local optimum and witness list, and the merge is the max/min monoid with
witness union, re-sorted by canonical code.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Union

from zagreb.canon import canonical_code
from zagreb.constructions import BookPattern, known_constructions
from zagreb.counting import count_subgraphs
from zagreb.enumerate import Constraints, check_size, iso_classes, partition_range
from zagreb.graph import Graph, from_graph6
from zagreb.indices import IndexDef, eval_index, fmt_rational


@dataclass(frozen=True)
class Objective:
    """Either an index value or the copy count of a pattern graph."""

    index: IndexDef | None = None
    pattern: Graph | None = None
    name: str = ""

    def __post_init__(self) -> None:
        if (self.index is None) == (self.pattern is None):
            raise ValueError("objective needs exactly one of index or pattern")

    @classmethod
    def of(cls, target: Union[IndexDef, BookPattern, Graph], name: str = "") -> Objective:
        if isinstance(target, IndexDef):
            return cls(index=target, name=name or target.label)
        if isinstance(target, BookPattern):
            return cls(pattern=target.graph(), name=name or str(target))
        return cls(pattern=target, name=name or f"N(g6:{target.to_graph6()})")

    def __call__(self, g: Graph) -> Fraction:
        if self.index is not None:
            return eval_index(self.index, g)
        return Fraction(_count(self.pattern, g))

    def to_dict(self) -> dict:
        if self.index is not None:
            return {"index": self.index.label}
        return {"pattern": self.pattern.to_graph6(), "name": self.name}


@dataclass(frozen=True)
class SearchSpec:
    n: int
    objective: Objective
    constraints: Constraints = Constraints()
    direction: str = "max"
    allow_n8: bool = False

    def __post_init__(self) -> None:
        if self.direction not in ("max", "min"):
            raise ValueError(f"direction must be 'max' or 'min', got {self.direction!r}")
        for h in self.constraints.forbid + self.constraints.contains:
            if h.n > self.n:
                raise ValueError("constraint graphs must have at most n vertices")

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "objective": self.objective.to_dict(),
            "direction": self.direction,
            "constraints": self.constraints.to_dict(),
        }


@dataclass
class SearchReport:
    spec: SearchSpec
    optimum: Fraction | None
    witnesses: list[str]
    enumerated_count: int
    feasible_count: int
    elapsed: float = 0.0
    witness_names: list[str | None] = field(default_factory=list)

    @property
    def empty(self) -> bool:
        return self.feasible_count == 0

    @property
    def matched_construction(self) -> str | None:
        return next((name for name in self.witness_names if name), None)

    def has_witness(self, g: Graph) -> bool:
        code = canonical_code(g)
        return any(canonical_code(from_graph6(w)) == code for w in self.witnesses)

    def to_dict(self, include_elapsed: bool = False) -> dict:
        out = {
            "spec": self.spec.to_dict(),
            "empty_search_space": self.empty,
            "optimum": None if self.optimum is None else fmt_rational(self.optimum),
            "witnesses": self.witnesses,
            "witness_constructions": self.witness_names,
            "matched_construction": self.matched_construction,
            "enumerated_count": self.enumerated_count,
            "feasible_count": self.feasible_count,
        }
        if include_elapsed:
            out["elapsed"] = round(self.elapsed, 3)
        return out


@lru_cache(maxsize=200_000)
def _count(h: Graph, g: Graph) -> int:
    return count_subgraphs(h, g)


@lru_cache(maxsize=256)
def population(n: int, constraints: Constraints, allow_n8: bool = False) -> tuple[Graph, ...]:
    """Canonical class representatives satisfying ``constraints``, sorted by code."""
    check_size(n, allow_n8)
    return tuple(g for g in iso_classes(n) if constraints.accepts(g))


def _scan(spec: SearchSpec, start: int, stop: int) -> tuple[Fraction | None, list[Graph]]:
    pop = population(spec.n, spec.constraints, spec.allow_n8)
    best: Fraction | None = None
    wit: list[Graph] = []
    better = (lambda a, b: a > b) if spec.direction == "max" else (lambda a, b: a < b)
    for g in pop[start:stop]:
        val = spec.objective(g)
        if best is None or better(val, best):
            best, wit = val, [g]
        elif val == best:
            wit.append(g)
    return best, wit


def _merge(spec: SearchSpec, parts: list[tuple[Fraction | None, list[Graph]]]):
    best: Fraction | None = None
    wit: list[Graph] = []
    for val, ws in parts:
        if val is None:
            continue
        if best is None or (val > best if spec.direction == "max" else val < best):
            best, wit = val, list(ws)
        elif val == best:
            wit.extend(ws)
    wit.sort(key=canonical_code)
    return best, wit


@lru_cache(maxsize=None)
def _construction_codes(n: int) -> tuple[tuple[str, bytes], ...]:
    return tuple((name, canonical_code(g)) for name, g in known_constructions(n))


def _name_witness(g: Graph) -> str | None:
    code = canonical_code(g)
    return next((name for name, c in _construction_codes(g.n) if c == code), None)


def search(spec: SearchSpec, workers: int = 1) -> SearchReport:
    """Exact optimum of the objective over all n-vertex graphs satisfying the constraints."""
    t0 = time.perf_counter()
    check_size(spec.n, spec.allow_n8)
    pop = population(spec.n, spec.constraints, spec.allow_n8)
    ranges = partition_range(len(pop), workers)
    if workers > 1 and len(ranges) > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            parts = list(ex.map(_scan, [spec] * len(ranges), [a for a, _ in ranges], [b for _, b in ranges]))
    else:
        parts = [_scan(spec, a, b) for a, b in ranges]
    best, wit = _merge(spec, parts)
    return SearchReport(
        spec=spec,
        optimum=best,
        witnesses=[g.to_graph6() for g in wit],
        enumerated_count=len(iso_classes(spec.n)),
        feasible_count=len(pop),
        elapsed=time.perf_counter() - t0,
        witness_names=[_name_witness(g) for g in wit],
    )
