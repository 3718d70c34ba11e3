"""Isomorphism-invariant canonical codes.

Colour refinement to an equitable ordered partition, then individualization of
a vertex from the first smallest non-singleton cell, recursively.  Each
discrete leaf partition gives a vertex ordering; the code is the smallest
adjacency word over all leaves.  Cells whose vertices are pairwise twins are
branched on only once, since any permutation inside such a cell is an
automorphism.  Good for n <= 12; larger graphs work but may be slow.
"""

from __future__ import annotations

from functools import lru_cache

from zagreb.graph import Graph

CanonicalCode = bytes


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    while True:
        masks = [sum(1 << v for v in c) for c in cells]
        out: list[list[int]] = []
        split = False
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            by_sig: dict[tuple[int, ...], list[int]] = {}
            for v in c:
                row = adj[v]
                by_sig.setdefault(tuple((row & m).bit_count() for m in masks), []).append(v)
            if len(by_sig) == 1:
                out.append(c)
            else:
                split = True
                out.extend(by_sig[s] for s in sorted(by_sig))
        if not split:
            return out
        cells = out


def _all_twins(adj: tuple[int, ...], cell: list[int]) -> bool:
    for a in range(len(cell)):
        x = cell[a]
        for b in range(a + 1, len(cell)):
            y = cell[b]
            if (adj[x] ^ adj[y]) & ~((1 << x) | (1 << y)):
                return False
    return True


def _word(adj: tuple[int, ...], order: list[int]) -> int:
    word = 0
    for j in range(1, len(order)):
        row = adj[order[j]]
        for i in range(j):
            word = word << 1 | (row >> order[i] & 1)
    return word


def _canonical_order(g: Graph) -> tuple[int, list[int]]:
    adj = g.adj
    best: list = [None, None]

    def search(cells: list[list[int]]) -> None:
        cells = _refine(adj, cells)
        target = -1
        for i, c in enumerate(cells):
            if len(c) > 1 and (target < 0 or len(c) < len(cells[target])):
                target = i
        if target < 0:
            order = [c[0] for c in cells]
            w = _word(adj, order)
            if best[0] is None or w < best[0]:
                best[0], best[1] = w, order
            return
        cell = cells[target]
        branch = cell[:1] if _all_twins(adj, cell) else cell
        for v in branch:
            rest = [u for u in cell if u != v]
            search(cells[:target] + [[v], rest] + cells[target + 1:])

    search([list(range(g.n))])
    return best[0], best[1]


@lru_cache(maxsize=65536)
def _canon(g: Graph) -> tuple[bytes, Graph]:
    word, order = _canonical_order(g)
    npairs = g.n * (g.n - 1) // 2
    code = bytes([g.n]) + word.to_bytes((npairs + 7) // 8, "big")
    perm = [0] * g.n
    for pos, v in enumerate(order):
        perm[v] = pos
    return code, g.relabel(perm)


def canonical_code(g: Graph) -> CanonicalCode:
    """Byte string equal for two graphs iff they are isomorphic."""
    return _canon(g)[0]


def canonical_form(g: Graph) -> Graph:
    """The relabeling of ``g`` realizing its canonical code."""
    return _canon(g)[1]


def is_isomorphic(a: Graph, b: Graph) -> bool:
    return a.n == b.n and a.m == b.m and canonical_code(a) == canonical_code(b)
