"""Exhaustive enumeration of small graphs, labeled or one per isomorphism class."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from zagreb.canon import canonical_code, canonical_form
from zagreb.counting import clique_number, contains_subgraph, is_connected
from zagreb.graph import Graph

MAX_EXHAUSTIVE_N = 7
OPT_IN_N = 8

_TRIANGLE = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])


class EnumerationError(ValueError):
    pass


@dataclass(frozen=True)
class Constraints:
    """A conjunction of graph properties; unset fields impose nothing."""

    connected: bool = False
    forbid: tuple[Graph, ...] = ()
    clique_eq: int | None = None
    clique_le: int | None = None
    contains: tuple[Graph, ...] = ()
    edges: int | None = None
    triangle_free: bool = False

    def accepts(self, g: Graph) -> bool:
        if self.edges is not None and g.m != self.edges:
            return False
        if self.connected and not is_connected(g):
            return False
        if self.triangle_free and contains_subgraph(_TRIANGLE, g):
            return False
        if self.clique_eq is not None or self.clique_le is not None:
            w = clique_number(g)
            if self.clique_eq is not None and w != self.clique_eq:
                return False
            if self.clique_le is not None and w > self.clique_le:
                return False
        for f in self.forbid:
            if contains_subgraph(f, g):
                return False
        for h in self.contains:
            if not contains_subgraph(h, g):
                return False
        return True

    def to_dict(self) -> dict:
        return {
            "connected": self.connected,
            "forbid": [f.to_graph6() for f in self.forbid],
            "clique_eq": self.clique_eq,
            "clique_le": self.clique_le,
            "contains": [h.to_graph6() for h in self.contains],
            "edges": self.edges,
            "triangle_free": self.triangle_free,
        }


def check_size(n: int, allow_n8: bool = False) -> None:
    limit = OPT_IN_N if allow_n8 else MAX_EXHAUSTIVE_N
    if not 1 <= n <= limit:
        hint = " (n=8 needs the explicit opt-in)" if n == OPT_IN_N else ""
        raise EnumerationError(f"exhaustive enumeration supports 1 <= n <= {limit}, got {n}{hint}")


def labeled_word_count(n: int) -> int:
    return 1 << (n * (n - 1) // 2)


def partition_range(total: int, parts: int) -> list[tuple[int, int]]:
    """Split ``range(total)`` into ``parts`` contiguous, disjoint, near-equal ranges."""
    parts = max(1, min(parts, total)) if total else 1
    step, extra = divmod(total, parts)
    out = []
    start = 0
    for i in range(parts):
        stop = start + step + (1 if i < extra else 0)
        out.append((start, stop))
        start = stop
    return out


def enumerate_labeled(
    n: int, constraints: Constraints | None = None, start: int = 0, stop: int | None = None
) -> Iterator[Graph]:
    """Labeled graphs whose edge words lie in ``[start, stop)``, in word order."""
    total = labeled_word_count(n)
    stop = total if stop is None else min(stop, total)
    want_m = constraints.edges if constraints else None
    for word in range(start, stop):
        if want_m is not None and word.bit_count() != want_m:
            continue
        g = Graph.from_edge_word(n, word)
        if constraints is None or constraints.accepts(g):
            yield g


@lru_cache(maxsize=None)
def iso_classes(n: int) -> tuple[Graph, ...]:
    """One canonical-form representative per isomorphism class, sorted by canonical code.

    Built by vertex extension: every n-vertex graph is some (n-1)-vertex class
    representative plus a new vertex with an arbitrary neighbourhood.
    """
    if n == 1:
        return (Graph.empty(1),)
    found: dict[bytes, Graph] = {}
    for base in iso_classes(n - 1):
        for nb in range(1 << (n - 1)):
            g = base.add_vertex(nb)
            code = canonical_code(g)
            if code not in found:
                found[code] = canonical_form(g)
    return tuple(found[c] for c in sorted(found))


def enumerate_graphs(
    n: int,
    constraints: Constraints | None = None,
    mode: str = "iso-classes",
    allow_n8: bool = False,
) -> Iterator[Graph]:
    """All n-vertex graphs satisfying ``constraints``, in deterministic order.

    ``mode="labeled"`` walks every edge word; ``mode="iso-classes"`` yields one
    canonical representative per isomorphism class.
    """
    check_size(n, allow_n8)
    if mode == "labeled":
        yield from enumerate_labeled(n, constraints)
    elif mode == "iso-classes":
        for g in iso_classes(n):
            if constraints is None or constraints.accepts(g):
                yield g
    else:
        raise EnumerationError(f"unknown enumeration mode {mode!r}")


def dedupe_iso(graphs: Sequence[Graph] | Iterator[Graph]) -> list[Graph]:
    """Canonical representatives of the distinct classes in ``graphs``, sorted by code."""
    found: dict[bytes, Graph] = {}
    for g in graphs:
        code = canonical_code(g)
        if code not in found:
            found[code] = canonical_form(g)
    return [found[c] for c in sorted(found)]
