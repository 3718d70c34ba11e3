"""Decomposition of edge-polynomial indices into weighted generalized-book counts.

For an ordered edge (u, v), the monomial d(u)^a d(v)^b counts pairs of
sequences of neighbours of u (length a) and of v (length b).  Grouping the
sequences by their image sets U, V gives a tuple (T, P, Q) with T = U & V,
P = U - V - {v}, Q = V - U - {u}; a set of size k is the image of exactly
surj(a, k) sequences, and U is T | P with or without v.  Hence

    d(u)^a d(v)^b = sum_{t,p,q} phi(a,t,p) phi(b,t,q) N_uv(t,p,q),
    phi(a,t,p)    = surj(a, t+p) + surj(a, t+p+1),

where N_uv(t,p,q) counts the tuples at (u, v).  Each tuple spans a copy of
B_t(p,q); converting tuple counts to copy counts divides out how many tuples
span the same copy, which we get by brute force on the pattern graph itself.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Mapping

from zagreb.canon import canonical_code
from zagreb.constructions import BookPattern, book
from zagreb.counting import count_subgraphs
from zagreb.graph import Graph, GraphError, bits
from zagreb.indices import IndexDef, IndexSpecError, SymmetricPoly

Triple = tuple[int, int, int]


@lru_cache(maxsize=None)
def surj(a: int, k: int) -> int:
    """Number of surjections from an a-set onto a k-set (surj(0, 0) = 1)."""
    if a < 0 or k < 0:
        raise ValueError("surj needs non-negative arguments")
    return sum((-1) ** i * comb(k, i) * (k - i) ** a for i in range(k + 1))


def phi(a: int, t: int, p: int) -> int:
    """Sequences of length a whose image is T | P, with or without the other rootlet."""
    return surj(a, t + p) + surj(a, t + p + 1)


def _poly_of(f: IndexDef | SymmetricPoly) -> SymmetricPoly:
    if isinstance(f, IndexDef):
        if f.edge_poly is None:
            raise IndexSpecError(f"{f.label} is a vertex count, not an edge polynomial")
        return f.edge_poly
    return f


def ordered_weights(f: IndexDef | SymmetricPoly) -> dict[Triple, Fraction]:
    """Nonzero weights over ordered tuple types (t, p, q)."""
    poly = _poly_of(f)
    out: dict[Triple, Fraction] = {}
    half = Fraction(1, 2)
    for (a, b), c in poly.terms.items():
        for t in range(min(a, b) + 1):
            for p in range(a - t + 1):
                fa = phi(a, t, p)
                if not fa:
                    continue
                for q in range(b - t + 1):
                    fb = phi(b, t, q)
                    if fb:
                        key = (t, p, q)
                        out[key] = out.get(key, 0) + half * c * fa * fb
    return {k: v for k, v in sorted(out.items()) if v}


def _check_edge(g: Graph, u: int, v: int) -> None:
    if u == v or not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")


def tuple_count_closed(g: Graph, u: int, v: int, t: int, p: int, q: int) -> int:
    """Tuples (T, P, Q) at the ordered edge (u, v), in closed form from d(u), d(v) and the codegree."""
    _check_edge(g, u, v)
    du, dv = g.degree(u), g.degree(v)
    c = (g.adj[u] & g.adj[v]).bit_count()
    only_u = du - 1 - c
    total = 0
    for i in range(min(c - t, p) + 1):
        total += comb(c - t, i) * comb(only_u, p - i) * comb(dv - 1 - t - i, q)
    return comb(c, t) * total


def tuple_count_enum(g: Graph, u: int, v: int, t: int, p: int, q: int) -> int:
    """Same count as :func:`tuple_count_closed`, by explicit subset enumeration."""
    _check_edge(g, u, v)
    common = bits(g.adj[u] & g.adj[v])
    nu = [w for w in g.neighbors(u) if w != v]
    nv = [w for w in g.neighbors(v) if w != u]
    count = 0
    for tset in combinations(common, t):
        ts = set(tset)
        for pset in combinations([w for w in nu if w not in ts], p):
            taken = ts.union(pset)
            count += comb(sum(1 for w in nv if w not in taken), q)
    return count


def _subsets(mask: int):
    sub = mask
    while True:
        yield sub
        if not sub:
            return
        sub = (sub - 1) & mask


@lru_cache(maxsize=None)
def spanning_tuple_multiplicities(b: Graph) -> dict[Triple, int]:
    """For each type (t, p, q), the tuples (u, v, T, P, Q) in b generating exactly E(b)."""
    out: dict[Triple, int] = {}
    for u in range(b.n):
        for v in bits(b.adj[u]):
            cm = b.adj[u] & b.adj[v]
            nu = b.adj[u] & ~(1 << v)
            nv = b.adj[v] & ~(1 << u)
            for ts in _subsets(cm):
                for ps in _subsets(nu & ~ts):
                    for qs in _subsets(nv & ~ts & ~ps):
                        rows = [0] * b.n
                        rows[u] |= 1 << v
                        rows[v] |= 1 << u
                        for w in bits(ts | ps):
                            rows[u] |= 1 << w
                            rows[w] |= 1 << u
                        for w in bits(ts | qs):
                            rows[v] |= 1 << w
                            rows[w] |= 1 << v
                        if tuple(rows) == b.adj:
                            key = (ts.bit_count(), ps.bit_count(), qs.bit_count())
                            out[key] = out.get(key, 0) + 1
    return dict(sorted(out.items()))


@dataclass(frozen=True)
class WeightTable:
    """Decomposition weights for one polynomial.

    ``ordered`` maps tuple types (t, p, q) to their weights; ``classes`` maps
    canonical patterns (p <= q) to the coefficient of the copy count of that
    isomorphism class.
    """

    ordered: Mapping[Triple, Fraction]
    classes: Mapping[BookPattern, Fraction]
    provenance: str = ""
    codes: Mapping[BookPattern, bytes] = field(default_factory=dict, compare=False)

    def is_nonnegative(self) -> bool:
        return all(w >= 0 for w in self.classes.values())

    def rows(self) -> list[tuple[BookPattern, Fraction]]:
        return sorted(self.classes.items(), key=lambda kv: (kv[0].vertex_count, kv[0].t, kv[0].p, kv[0].q))


def class_weights(f: IndexDef | SymmetricPoly) -> WeightTable:
    ordered = ordered_weights(f)
    candidates = {BookPattern(*o).canonical() for o in ordered}
    classes: dict[BookPattern, Fraction] = {}
    for pat in sorted(candidates):
        mult = spanning_tuple_multiplicities(pat.graph())
        w = sum((ordered.get(o, 0) * k for o, k in mult.items()), Fraction(0))
        if w:
            classes[pat] = w
    name = f.label if isinstance(f, IndexDef) else str(f)
    rows = sorted(classes.items(), key=lambda kv: (kv[0].vertex_count, kv[0].t, kv[0].p, kv[0].q))
    return WeightTable(dict(ordered), dict(rows), name, {pat: canonical_code(pat.graph()) for pat, _ in rows})


def decompose_eval(f: IndexDef | SymmetricPoly | WeightTable, g: Graph) -> Fraction:
    """``sum_B w(B) * N(B, G)`` with copy counts from the generic subgraph counter."""
    table = f if isinstance(f, WeightTable) else class_weights(f)
    total = Fraction(0)
    for pat, w in table.classes.items():
        if pat.vertex_count <= g.n:
            total += w * count_subgraphs(pat.graph(), g)
    return total


def count_book_by_tuples(g: Graph, pattern: BookPattern) -> int:
    """N(B_t(p,q), G) from closed-form tuple counts; an alternative to subgraph search."""
    pat = pattern.canonical()
    mult = spanning_tuple_multiplicities(pat.graph())
    per_copy = sum(mult.values())
    total = 0
    for u in range(g.n):
        for v in bits(g.adj[u]):
            for (t, p, q) in mult:
                total += tuple_count_closed(g, u, v, t, p, q)
    copies, rem = divmod(total, per_copy)
    assert rem == 0
    return copies


def monomial_by_tuples(g: Graph, u: int, v: int, a: int, b: int) -> int:
    """``d(u)^a d(v)^b`` re-assembled from tuple counts at the ordered edge (u, v)."""
    total = 0
    for t in range(min(a, b) + 1):
        for p in range(a - t + 1):
            for q in range(b - t + 1):
                w = phi(a, t, p) * phi(b, t, q)
                if w:
                    total += w * tuple_count_closed(g, u, v, t, p, q)
    return total
