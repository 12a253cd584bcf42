"""Independent recomputation paths for cross-checking the main constructions.

Everything here deliberately avoids the code paths it is used to check:
clique enumeration is generic graph search with no corner calculus, the edge
oracle uses only conjugate arithmetic, partition counting uses the recurrence
with generalized pentagonal numbers, and edge decompositions are recovered by
scanning all corner pairs instead of reading columns off the conjugate
difference.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

import networkx as nx

from .graph import PartitionGraph, adjacency_by_conjugate
from .partitions import (
    Corner,
    Partition,
    addable_corners,
    apply_transfer,
    as_partition,
    is_admissible,
    removable_corners,
)


def maximal_cliques_reference(g: PartitionGraph) -> list[tuple[int, ...]]:
    """Facets by generic maximal-clique enumeration (Bron-Kerbosch via networkx)."""
    nxg = nx.Graph()
    nxg.add_nodes_from(range(len(g.vertices)))
    nxg.add_edges_from(g.edges())
    return sorted(tuple(sorted(clique)) for clique in nx.find_cliques(nxg))


def all_cliques_reference(g: PartitionGraph) -> list[tuple[int, ...]]:
    """Every nonempty clique, by direct recursive extension over vertex ids."""
    out: list[tuple[int, ...]] = []

    def extend(clique: tuple[int, ...], candidates: frozenset[int]) -> None:
        out.append(clique)
        for vid in sorted(candidates):
            if vid > clique[-1]:
                extend(clique + (vid,), candidates & g.adjacency_sets[vid])

    for start in range(len(g.vertices)):
        extend((start,), g.adjacency_sets[start])
    out.sort(key=lambda clique: (len(clique), clique))
    return out


def edges_by_conjugate_scan(g: PartitionGraph) -> list[tuple[int, int]]:
    """Edge set recomputed by testing every vertex pair with the conjugate rule."""
    edges = []
    for i, j in itertools.combinations(range(len(g.vertices)), 2):
        if adjacency_by_conjugate(g.vertices[i], g.vertices[j]) is not None:
            edges.append((i, j))
    return edges


def edge_decompositions_by_scan(lam: Partition, mu: Partition) -> list[tuple[Corner, Corner]]:
    """All (c, a) with apply_transfer(lam, c, a) == mu, by scanning corner pairs."""
    lam = as_partition(lam)
    mu = as_partition(mu)
    out = []
    for c in removable_corners(lam):
        for a in addable_corners(lam):
            if c.row != a.row and is_admissible(lam, c, a) and apply_transfer(lam, c, a) == mu:
                out.append((c, a))
    return out


@lru_cache(maxsize=None)
def partition_count(n: int) -> int:
    """p(n) by the recurrence over generalized pentagonal numbers."""
    if n < 0:
        return 0
    if n == 0:
        return 1
    total = 0
    k = 1
    while True:
        pent1 = k * (3 * k - 1) // 2
        pent2 = k * (3 * k + 1) // 2
        if pent1 > n and pent2 > n:
            break
        sign = -1 if k % 2 == 0 else 1
        if pent1 <= n:
            total += sign * partition_count(n - pent1)
        if pent2 <= n:
            total += sign * partition_count(n - pent2)
        k += 1
    return total
