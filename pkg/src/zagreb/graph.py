"""Immutable small simple graphs stored as adjacency bitsets, plus graph6 I/O."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 64
_G6_HEADER = ">>graph6<<"


class GraphError(ValueError):
    """Raised for malformed graphs or graph6 strings."""


def pair_index(i: int, j: int) -> int:
    """Position of the pair {i, j} in graph6 (column-major upper triangle) order."""
    if i > j:
        i, j = j, i
    return j * (j - 1) // 2 + i


def iter_pairs(n: int) -> Iterator[tuple[int, int]]:
    """Vertex pairs (i, j), i < j, in graph6 order."""
    for j in range(1, n):
        for i in range(j):
            yield i, j


@dataclass(frozen=True)
class Graph:
    """A simple graph on vertices ``0..n-1``.

    ``adj[v]`` is an integer whose bit ``u`` is set iff ``u`` and ``v`` are adjacent.
    Instances are immutable and hashable; derived quantities are cached.
    """

    n: int
    adj: tuple[int, ...] = field(repr=False)

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_VERTICES:
            raise GraphError(f"vertex count must be in 1..{MAX_VERTICES}, got {self.n}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"row {v} references vertices outside 0..{self.n - 1}")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            r = row
            while r:
                low = r & -r
                u = low.bit_length() - 1
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")
                r ^= low

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @classmethod
    def from_edge_word(cls, n: int, word: int) -> Graph:
        """Graph whose edge set is the bits of ``word`` (bit k = k-th pair in graph6 order)."""
        rows = [0] * n
        k = 0
        for j in range(1, n):
            for i in range(j):
                if word >> k & 1:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
                k += 1
        return cls(n, tuple(rows))

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.adj)

    @cached_property
    def m(self) -> int:
        return sum(self.degrees) // 2

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.degrees[v]

    @property
    def max_degree(self) -> int:
        return max(self.degrees)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return bits(self.adj[v])

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def edge_word(self) -> int:
        word = 0
        for k, (i, j) in enumerate(iter_pairs(self.n)):
            if self.adj[i] >> j & 1:
                word |= 1 << k
        return word

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabel needs a permutation of 0..n-1")
        rows = [0] * self.n
        for v in range(self.n):
            row = 0
            for u in bits(self.adj[v]):
                row |= 1 << perm[u]
            rows[perm[v]] = row
        return Graph(self.n, tuple(rows))

    def add_edge(self, u: int, v: int) -> Graph:
        return Graph.from_edges(self.n, self.edges() + [(u, v)])

    def remove_edge(self, u: int, v: int) -> Graph:
        if not self.has_edge(u, v):
            raise GraphError(f"edge ({u}, {v}) not present")
        rows = list(self.adj)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.n, tuple(rows))

    def add_vertex(self, neighbours: int) -> Graph:
        """Graph with a new vertex ``n`` joined to the vertex bitset ``neighbours``."""
        new = self.n
        rows = [row | (1 << new) if neighbours >> v & 1 else row for v, row in enumerate(self.adj)]
        rows.append(neighbours)
        return Graph(self.n + 1, tuple(rows))

    def disjoint_union(self, other: Graph) -> Graph:
        shift = self.n
        return Graph(self.n + other.n, self.adj + tuple(row << shift for row in other.adj))

    def to_graph6(self) -> str:
        return to_graph6(self)

    def __str__(self) -> str:
        return f"Graph(n={self.n}, m={self.m}, g6={to_graph6(self)!r})"


def bits(x: int) -> list[int]:
    """Indices of the set bits of ``x`` in increasing order."""
    out = []
    while x:
        low = x & -x
        out.append(low.bit_length() - 1)
        x ^= low
    return out


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))


def to_graph6(g: Graph) -> str:
    out = [_encode_n(g.n)]
    acc = 0
    width = 0
    for i, j in iter_pairs(g.n):
        acc = acc << 1 | (g.adj[i] >> j & 1)
        width += 1
        if width == 6:
            out.append(chr(acc + 63))
            acc = width = 0
    if width:
        out.append(chr((acc << (6 - width)) + 63))
    return "".join(out)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    if not s:
        raise GraphError("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(not 0 <= d <= 63 for d in data):
        raise GraphError(f"invalid graph6 character in {text!r}")
    if data[0] == 63:
        if len(data) < 4 or data[1] == 63:
            raise GraphError("graph6 sizes above 258047 are not supported")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    else:
        n = data[0]
        body = data[1:]
    npairs = n * (n - 1) // 2
    if len(body) != (npairs + 5) // 6:
        raise GraphError(f"graph6 body length {len(body)} does not match n={n}")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))
