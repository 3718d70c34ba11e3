"""Counter-based random graphs, reproducible across implementations.

Word ``j`` of trial ``i`` under seed ``s`` is

    key  = splitmix64(s mod 2^64)
    word = splitmix64((key + (i << 32) + j) mod 2^64)

with the standard SplitMix64 finalizer.  Word 0 picks the vertex count
``n_lo + word mod (n_hi - n_lo + 1)``; word ``k + 1`` decides the k-th vertex
pair in graph6 order, present iff its top bit is set (edge probability 1/2).
"""

from __future__ import annotations

from zagreb.graph import Graph

_MASK = (1 << 64) - 1


def splitmix64(x: int) -> int:
    z = (x + 0x9E3779B97F4A7C15) & _MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


def draw(seed: int, trial: int, j: int) -> int:
    key = splitmix64(seed & _MASK)
    return splitmix64((key + (trial << 32) + j) & _MASK)


def random_graph(seed: int, trial: int, n_lo: int, n_hi: int) -> Graph:
    if not 1 <= n_lo <= n_hi:
        raise ValueError("need 1 <= n_lo <= n_hi")
    n = n_lo + draw(seed, trial, 0) % (n_hi - n_lo + 1)
    word = 0
    for k in range(n * (n - 1) // 2):
        if draw(seed, trial, k + 1) >> 63:
            word |= 1 << k
    return Graph.from_edge_word(n, word)


def random_graphs(seed: int, trials: int, n_lo: int, n_hi: int) -> list[Graph]:
    return [random_graph(seed, i, n_lo, n_hi) for i in range(trials)]
