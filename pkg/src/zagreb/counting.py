"""Subgraph counting, containment, clique number and connectivity on bitset graphs.

Embeddings of a pattern H are counted by backtracking over the *core* of H
(vertices that are not pendant leaves) in a connected search order, pruning
candidates by neighbourhood intersection and minimum degree.  Pendant leaves
and isolated vertices of H are never branched on: once the core is placed,
their injective placements are counted combinatorially.  This keeps books and
double stars cheap even when G is dense.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import comb, factorial, perm
from typing import Iterator

from zagreb.graph import Graph, bits


@lru_cache(maxsize=4096)
def _plan(h: Graph):
    deg = h.degrees
    leaf_of: dict[int, int] = {}
    for w in range(h.n):
        if deg[w] == 1:
            (x,) = bits(h.adj[w])
            if deg[x] >= 2 or w > x:
                leaf_of[w] = x
    free = sum(1 for w in range(h.n) if deg[w] == 0)
    core = [v for v in range(h.n) if deg[v] > 0 and v not in leaf_of]

    order: list[int] = []
    placed = 0
    remaining = set(core)
    while remaining:
        attached = [v for v in remaining if h.adj[v] & placed]
        pool = attached or remaining
        v = max(pool, key=lambda v: ((h.adj[v] & placed).bit_count(), deg[v], -v))
        order.append(v)
        placed |= 1 << v
        remaining.discard(v)

    pos = {v: i for i, v in enumerate(order)}
    backs = tuple(tuple(pos[u] for u in bits(h.adj[v]) if u in pos and pos[u] < i) for i, v in enumerate(order))
    leaf_counts = Counter(pos[x] for x in leaf_of.values())
    groups = tuple(sorted(leaf_counts.items()))
    need_deg = tuple(deg[v] for v in order)
    return order, backs, need_deg, groups, free


def _falling(a: int, k: int) -> int:
    return perm(a, k) if 0 <= k <= a else 0


def _place_leaves(groups: list[tuple[int, int]]) -> int:
    """Injective placements of leaf groups; group i needs ``need`` vertices from ``mask``."""
    if len(groups) == 1:
        need, mask = groups[0]
        return _falling(mask.bit_count(), need)
    if len(groups) == 2:
        (s1, m1), (s2, m2) = groups
        both = (m1 & m2).bit_count()
        only1 = (m1 & ~m2).bit_count()
        only2 = (m2 & ~m1).bit_count()
        total = 0
        for i in range(min(both, s1) + 1):
            total += comb(both, i) * comb(only1, s1 - i) * comb(only2 + both - i, s2)
        return total * factorial(s1) * factorial(s2)

    k = len(groups)
    union = 0
    for _, mask in groups:
        union |= mask
    sig_counts: Counter[int] = Counter()
    for w in bits(union):
        sig = 0
        for i, (_, mask) in enumerate(groups):
            if mask >> w & 1:
                sig |= 1 << i
        sig_counts[sig] += 1
    classes = sorted(sig_counts.items())

    @lru_cache(maxsize=None)
    def go(idx: int, rem: tuple[int, ...]) -> int:
        if not any(rem):
            return 1
        if idx == len(classes):
            return 0
        sig, avail = classes[idx]
        members = [i for i in range(k) if sig >> i & 1 and rem[i]]
        total = 0

        def spread(j: int, left: int, rem_now: list[int], ways: int) -> None:
            nonlocal total
            if j == len(members):
                total += ways * go(idx + 1, tuple(rem_now))
                return
            g = members[j]
            for x in range(min(left, rem_now[g]) + 1):
                rem_now[g] -= x
                spread(j + 1, left - x, rem_now, ways * comb(left, x))
                rem_now[g] += x

        spread(0, avail, list(rem), 1)
        return total

    result = go(0, tuple(need for need, _ in groups))
    for need, _ in groups:
        result *= factorial(need)
    return result


def _embed(h: Graph, g: Graph, first_only: bool) -> int:
    if h.n > g.n:
        return 0
    order, backs, need_deg, groups, free = _plan(h)
    gadj = g.adj
    full = g.full_mask
    top = max(need_deg, default=0)
    degmask = [0] * (top + 1)
    for v, d in enumerate(g.degrees):
        for x in range(min(d, top) + 1):
            degmask[x] |= 1 << v
    k = len(order)
    img = [0] * k
    plain_tail = not groups and not free

    def leaves(used: int) -> int:
        todo = [(need, gadj[img[p]] & ~used) for p, need in groups]
        if free:
            todo.append((free, full & ~used))
        if not todo:
            return 1
        return _place_leaves(todo)

    def rec(i: int, used: int) -> int:
        if i == k:
            return leaves(used)
        cand = full
        for j in backs[i]:
            cand &= gadj[img[j]]
        cand &= degmask[need_deg[i]] & ~used
        if plain_tail and i == k - 1:
            return 1 if first_only and cand else cand.bit_count()
        total = 0
        while cand:
            low = cand & -cand
            img[i] = low.bit_length() - 1
            total += rec(i + 1, used | low)
            if first_only and total:
                return total
            cand ^= low
        return total

    return rec(0, 0)


def _too_big(h: Graph, g: Graph) -> bool:
    return h.n > g.n or h.m > g.m or h.max_degree > g.max_degree


def count_embeddings(h: Graph, g: Graph) -> int:
    """Number of injective edge-preserving maps V(h) -> V(g)."""
    if _too_big(h, g):
        return 0
    return _embed(h, g, first_only=False)


@lru_cache(maxsize=4096)
def automorphism_count(h: Graph) -> int:
    return count_embeddings(h, h)


def count_subgraphs(h: Graph, g: Graph) -> int:
    """Number of (not necessarily induced) copies of h in g."""
    if _too_big(h, g):
        return 0
    emb = count_embeddings(h, g)
    aut = automorphism_count(h)
    q, r = divmod(emb, aut)
    assert r == 0, "embedding count not divisible by automorphism count"
    return q


def contains_subgraph(h: Graph, g: Graph) -> bool:
    if _too_big(h, g):
        return False
    return _embed(h, g, first_only=True) > 0


def iter_embeddings(h: Graph, g: Graph) -> Iterator[tuple[int, ...]]:
    """Yield every embedding as a tuple ``img`` with ``img[x]`` the image of vertex x.

    Plain backtracking with no leaf shortcuts; used for automorphism orbits and
    as a cross-check of :func:`count_embeddings`.
    """
    if h.n > g.n:
        return
    order = []
    placed = 0
    remaining = set(range(h.n))
    while remaining:
        attached = [v for v in remaining if h.adj[v] & placed]
        v = min(attached or remaining)
        order.append(v)
        placed |= 1 << v
        remaining.discard(v)
    img = [-1] * h.n

    def rec(i: int, used: int) -> Iterator[tuple[int, ...]]:
        if i == h.n:
            yield tuple(img)
            return
        x = order[i]
        cand = g.full_mask & ~used
        for y in bits(h.adj[x]):
            if img[y] >= 0:
                cand &= g.adj[img[y]]
        for v in bits(cand):
            img[x] = v
            yield from rec(i + 1, used | 1 << v)
        img[x] = -1

    yield from rec(0, 0)


def is_connected(g: Graph) -> bool:
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == g.full_mask


def components(g: Graph) -> list[int]:
    """Vertex bitsets of the connected components, ordered by smallest vertex."""
    out = []
    left = g.full_mask
    while left:
        seen = frontier = left & -left
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~seen
            seen |= frontier
        out.append(seen)
        left &= ~seen
    return out


def clique_number(g: Graph) -> int:
    """Order of a maximum clique (branch and bound with a popcount bound)."""
    adj = g.adj
    best = 0

    def expand(size: int, cand: int) -> None:
        nonlocal best
        if not cand:
            if size > best:
                best = size
            return
        while cand:
            if size + cand.bit_count() <= best:
                return
            low = cand & -cand
            expand(size + 1, cand & adj[low.bit_length() - 1])
            cand ^= low

    expand(0, g.full_mask)
    return best
