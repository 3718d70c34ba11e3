"""Generators for the named graph families, plus pattern-name parsing."""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import comb
from typing import Iterator

from zagreb.counting import is_connected, iter_embeddings
from zagreb.graph import Graph, GraphError, from_graph6


class ConstructionError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class BookPattern:
    """The generalized book B_t(p, q): rootlets u, v; t pages; p leaves at u, q at v."""

    t: int
    p: int
    q: int

    def __post_init__(self) -> None:
        if min(self.t, self.p, self.q) < 0:
            raise ConstructionError("book parameters must be non-negative")

    def canonical(self) -> BookPattern:
        return self if self.p <= self.q else BookPattern(self.t, self.q, self.p)

    @property
    def vertex_count(self) -> int:
        return self.t + self.p + self.q + 2

    @property
    def edge_count(self) -> int:
        return 2 * self.t + self.p + self.q + 1

    def graph(self) -> Graph:
        return book(self.t, self.p, self.q)

    def __str__(self) -> str:
        return f"B_{self.t}({self.p},{self.q})"


def canonical_patterns(max_tpq: int, max_vertices: int | None = None) -> list[BookPattern]:
    """Canonical patterns (p <= q) with t, p, q <= max_tpq, sorted by (vertex count, t, p, q)."""
    out = [
        BookPattern(t, p, q)
        for t in range(max_tpq + 1)
        for p in range(max_tpq + 1)
        for q in range(p, max_tpq + 1)
        if max_vertices is None or t + p + q + 2 <= max_vertices
    ]
    return sorted(out, key=lambda b: (b.vertex_count, b.t, b.p, b.q))


def book(t: int, p: int, q: int) -> Graph:
    """Vertices: u=0, v=1, pages 2..t+1, then the p leaves of u, then the q leaves of v."""
    if min(t, p, q) < 0:
        raise ConstructionError("book parameters must be non-negative")
    edges = [(0, 1)]
    nxt = 2
    for _ in range(t):
        edges += [(0, nxt), (1, nxt)]
        nxt += 1
    for _ in range(p):
        edges.append((0, nxt))
        nxt += 1
    for _ in range(q):
        edges.append((1, nxt))
        nxt += 1
    return Graph.from_edges(nxt, edges)


def double_star(p: int, q: int) -> Graph:
    return book(0, p, q)


def star(n: int) -> Graph:
    """K_{1,n-1}, centre 0."""
    _need(n >= 1, "star needs n >= 1")
    return Graph.from_edges(n, [(0, i) for i in range(1, n)])


def path(n: int) -> Graph:
    _need(n >= 1, "path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    _need(n >= 3, "cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    _need(n >= 1, "complete graph needs n >= 1")
    return Graph.from_edges(n, [(i, j) for j in range(n) for i in range(j)])


def complete_multipartite(sizes: list[int]) -> Graph:
    _need(all(s >= 0 for s in sizes) and sum(sizes) >= 1, "part sizes must be >= 0 with a positive total")
    part = [i for i, s in enumerate(sizes) for _ in range(s)]
    n = len(part)
    return Graph.from_edges(n, [(i, j) for j in range(n) for i in range(j) if part[i] != part[j]])


def complete_bipartite(a: int, b: int) -> Graph:
    return complete_multipartite([a, b])


def turan_parts(n: int, k: int) -> list[int]:
    _need(1 <= k <= n, f"Turan graph needs 1 <= k <= n, got n={n}, k={k}")
    base, extra = divmod(n, k)
    return [base + 1] * extra + [base] * (k - extra)


def turan(n: int, k: int) -> Graph:
    """Balanced complete k-partite graph T(n, k)."""
    return complete_multipartite(turan_parts(n, k))


def quasi_clique_shape(m: int) -> tuple[int, int]:
    """The unique (a, b) with m = C(a, 2) + b and 0 <= b < a."""
    _need(m >= 0, "edge count must be non-negative")
    a = 1
    while comb(a + 1, 2) <= m:
        a += 1
    return a, m - comb(a, 2)


def quasi_clique(n: int, m: int) -> Graph:
    """K_n^m: a K_a, one vertex joined to b clique vertices, the rest isolated."""
    _need(0 <= m <= comb(n, 2), f"quasi-clique needs 0 <= m <= C(n,2), got n={n}, m={m}")
    a, b = quasi_clique_shape(m)
    _need(n >= a + (1 if b else 0), f"no quasi-clique with m={m} on n={n} vertices")
    edges = [(i, j) for j in range(a) for i in range(j)]
    edges += [(i, a) for i in range(b)]
    return Graph.from_edges(n, edges)


def kite(n: int, k: int) -> Graph:
    """Ki(n, k): K_k on 0..k-1 with a path on k..n-1 hanging from vertex k-1."""
    _need(1 <= k <= n, f"kite needs 1 <= k <= n, got n={n}, k={k}")
    return generalized_kite(n, complete(k), k - 1)


def generalized_kite(n: int, h: Graph, attach: int = 0) -> Graph:
    """Ki(n, H): H plus a path of n - |V(H)| vertices whose endpoint joins ``attach``."""
    _need(n >= h.n, "generalized kite needs n >= |V(H)|")
    _need(0 <= attach < h.n, "attach vertex not in H")
    edges = h.edges()
    prev = attach
    for w in range(h.n, n):
        edges.append((prev, w))
        prev = w
    return Graph.from_edges(n, edges)


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    d = 2
    while d * d <= q:
        if q % d == 0:
            return False
        d += 1
    return True


def projective_points(q: int) -> list[tuple[int, int, int]]:
    """Normalized homogeneous coordinates of the points of PG(2, q)."""
    pts = [(1, a, b) for a in range(q) for b in range(q)]
    pts += [(0, 1, a) for a in range(q)]
    pts.append((0, 0, 1))
    return pts


def polarity_edges(q: int) -> Iterator[tuple[int, int]]:
    """Stream the edges of the orthogonal-polarity graph over GF(q), for any prime q."""
    _need(is_prime(q), f"polarity graph needs a prime q, got {q}")
    pts = projective_points(q)
    for j, y in enumerate(pts):
        for i in range(j):
            x = pts[i]
            if (x[0] * y[0] + x[1] * y[1] + x[2] * y[2]) % q == 0:
                yield i, j


def polarity_degrees(q: int) -> list[int]:
    deg = [0] * (q * q + q + 1)
    for i, j in polarity_edges(q):
        deg[i] += 1
        deg[j] += 1
    return deg


def polarity_graph(q: int) -> Graph:
    """C4-free graph on the q^2+q+1 points of PG(2, q); x ~ y iff x . y = 0, x != y."""
    _need(is_prime(q), f"polarity graph needs a prime q, got {q}")
    n = q * q + q + 1
    _need(n <= 64, f"q={q} gives {n} vertices; use polarity_edges for q > 7")
    return Graph.from_edges(n, polarity_edges(q))


def automorphism_orbits(h: Graph) -> list[int]:
    """Vertex orbits of Aut(h) as bitsets, from the full automorphism set."""
    parent = list(range(h.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for img in iter_embeddings(h, h):
        for v, w in enumerate(img):
            a, b = find(v), find(w)
            if a != b:
                parent[max(a, b)] = min(a, b)
    orbits: dict[int, int] = {}
    for v in range(h.n):
        orbits[find(v)] = orbits.get(find(v), 0) | 1 << v
    return [orbits[r] for r in sorted(orbits)]


def is_vertex_transitive(h: Graph) -> bool:
    if len(set(h.degrees)) > 1:
        return False
    return len(automorphism_orbits(h)) == 1


def bull() -> Graph:
    return book(1, 1, 1)


def gem() -> Graph:
    """P_4 plus a vertex adjacent to every path vertex."""
    return Graph.from_edges(5, [(0, 1), (1, 2), (2, 3)] + [(i, 4) for i in range(4)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


_NAMED = {"bull": bull, "gem": gem, "H5": gem, "petersen": petersen}


def parse_pattern(text: str) -> Graph:
    """Pattern graph from a CLI name.

    Accepts ``K3`` (complete), ``P4`` (path on 4 vertices), ``C5``, ``S5`` (star on
    5 vertices), ``S_1_2`` (double star), ``K_2_3`` (complete bipartite),
    ``book:t,p,q``, ``bull``, ``gem``/``H5``, ``petersen`` and ``g6:<graph6>``.
    """
    s = text.strip()
    if s.startswith("g6:"):
        return from_graph6(s[3:])
    if s.startswith("book:"):
        try:
            t, p, q = (int(x) for x in s[5:].split(","))
        except ValueError as exc:
            raise ConstructionError(f"book pattern needs three integers: {text!r}") from exc
        return book(t, p, q)
    if s in _NAMED:
        return _NAMED[s]()
    m = re.fullmatch(r"([KPCS])(\d+)", s)
    if m:
        kind, n = m.group(1), int(m.group(2))
        return {"K": complete, "P": path, "C": cycle, "S": star}[kind](n)
    m = re.fullmatch(r"S_(\d+)_(\d+)", s)
    if m:
        return double_star(int(m.group(1)), int(m.group(2)))
    m = re.fullmatch(r"K_(\d+)_(\d+)", s)
    if m:
        return complete_bipartite(int(m.group(1)), int(m.group(2)))
    try:
        return from_graph6(s)
    except GraphError:
        raise ConstructionError(f"unrecognized pattern {text!r}") from None


def known_constructions(n: int) -> list[tuple[str, Graph]]:
    """Named n-vertex constructions used to label search witnesses, in priority order."""
    out: list[tuple[str, Graph]] = []
    for k in range(1, n + 1):
        out.append((f"turan({n},{k})", turan(n, k)))
    for k in range(1, n + 1):
        out.append((f"kite({n},{k})", kite(n, k)))
    out.append((f"star({n})", star(n)))
    out.append((f"path({n})", path(n)))
    if n >= 3:
        out.append((f"cycle({n})", cycle(n)))
    for a in range(0, n // 2 + 1):
        out.append((f"complete_bipartite({a},{n - a})", complete_bipartite(a, n - a)))
    for m in range(comb(n, 2) + 1):
        a, b = quasi_clique_shape(m)
        if n >= a + (1 if b else 0):
            out.append((f"quasi_clique({n},{m})", quasi_clique(n, m)))
    return out


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise ConstructionError(msg)


__all__ = [
    "BookPattern",
    "book",
    "bull",
    "canonical_patterns",
    "complete",
    "complete_bipartite",
    "complete_multipartite",
    "cycle",
    "double_star",
    "gem",
    "generalized_kite",
    "is_vertex_transitive",
    "kite",
    "parse_pattern",
    "path",
    "petersen",
    "polarity_edges",
    "polarity_graph",
    "quasi_clique",
    "star",
    "turan",
]
