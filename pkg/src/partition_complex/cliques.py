"""The clique complex of the transfer graph.

Simplices are cliques of the transfer graph, handled as sorted tuples of
vertex ids.  The module classifies triangles and larger cliques by their
shared corner, builds the canonical cover out of full star- and top-simplices,
derives the maximal simplices from the classification, and counts simplices
per dimension.

Classification vocabulary: a clique is star-type at a vertex lam when every
other member is lam with one fixed removable corner moved somewhere, and
top-type when every other member is lam with some cell moved to one fixed
addable corner.
"""

from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .graph import PartitionGraph, build_graph, edge_decompositions
from .partitions import (
    ADDABLE,
    Corner,
    InadmissibleTransferError,
    InvalidPartitionError,
    Partition,
    REMOVABLE,
    addable_corners,
    apply_transfer,
    as_partition,
    height,
    removable_corners,
    _validated_addable,
    _validated_removable,
)

STAR = "star"
TOP = "top"
SMALL = "small"
NOT_TRIANGLE = "none"


class NotACliqueError(ValueError):
    """A vertex set that is not pairwise adjacent."""


class TheoremViolationError(AssertionError):
    """A machine-checked structural claim failed on concrete data."""


@dataclass(frozen=True)
class TriangleClass:
    """Classification of a path mu1 - lam - mu2: star/top with its corner, or none."""

    kind: str
    corner: Optional[Corner] = None

    @property
    def is_triangle(self) -> bool:
        return self.kind != NOT_TRIANGLE


@dataclass(frozen=True)
class CliqueClass:
    """Classification of a clique: the witnessing base vertex and fixed corner."""

    kind: str
    base: Optional[Partition] = None
    corner: Optional[Corner] = None


@dataclass(frozen=True)
class CoverMember:
    """A full star- or top-simplex, deduplicated by vertex set.

    vertices: sorted vertex ids.  provenances: every (kind, base vertex id,
    corner) description that produced this vertex set; coinciding star and top
    descriptions are all retained.
    """

    vertices: tuple[int, ...]
    provenances: tuple[tuple[str, int, Corner], ...]


@dataclass(frozen=True)
class FVector:
    """Simplex counts per dimension; counts[p] is the number of p-simplices."""

    counts: tuple[int, ...]

    @property
    def euler_characteristic(self) -> int:
        return sum((-1) ** p * f for p, f in enumerate(self.counts))


def star_fiber(lam: Iterable[int], c) -> list[Partition]:
    """All results of moving the cell at removable corner c elsewhere."""
    lam = as_partition(lam)
    c = _validated_removable(lam, c)
    out = []
    for a in addable_corners(lam):
        if a.row == c.row:
            continue
        try:
            out.append(apply_transfer(lam, c, a))
        except InadmissibleTransferError:
            continue
    return out


def top_fiber(lam: Iterable[int], a) -> list[Partition]:
    """All results of moving some removable cell of lam to addable corner a."""
    lam = as_partition(lam)
    a = _validated_addable(lam, a)
    out = []
    for c in removable_corners(lam):
        if c.row == a.row:
            continue
        try:
            out.append(apply_transfer(lam, c, a))
        except InadmissibleTransferError:
            continue
    return out


def classify_triangle(lam: Iterable[int], mu1: Iterable[int], mu2: Iterable[int]) -> TriangleClass:
    """Decide whether the path mu1 - lam - mu2 closes into a triangle.

    The verdict is read off the transfer decompositions: the triangle closes
    iff some decompositions of the two edges share the removable corner
    (star) or the addable corner (top).
    """
    lam = as_partition(lam)
    mu1 = as_partition(mu1)
    mu2 = as_partition(mu2)
    if mu1 == mu2:
        raise InvalidPartitionError(f"triangle arms must differ, got {mu1} twice")
    decomps1 = edge_decompositions(lam, mu1)
    decomps2 = edge_decompositions(lam, mu2)
    if not decomps1 or not decomps2:
        missing = mu1 if not decomps1 else mu2
        raise InvalidPartitionError(f"{missing} is not adjacent to {lam}")
    for c1, a1 in decomps1:
        for c2, a2 in decomps2:
            if c1 == c2:
                return TriangleClass(STAR, c1)
            if a1 == a2:
                return TriangleClass(TOP, a1)
    return TriangleClass(NOT_TRIANGLE)


def _check_clique(g: PartitionGraph, ids: Sequence[int]) -> tuple[int, ...]:
    vertex_count = len(g.vertices)
    for vid in ids:
        if not 0 <= vid < vertex_count:
            raise NotACliqueError(f"unknown vertex id {vid}")
    sorted_ids = tuple(sorted(set(ids)))
    if len(sorted_ids) != len(ids):
        raise NotACliqueError(f"repeated vertices in {tuple(ids)}")
    for i, j in itertools.combinations(sorted_ids, 2):
        if j not in g.adjacency_sets[i]:
            raise NotACliqueError(f"{g.vertices[i]} and {g.vertices[j]} are not adjacent")
    return sorted_ids


def classify_clique(g: PartitionGraph, ids: Sequence[int]) -> CliqueClass:
    """Classify a clique of ids as star- or top-type at its lowest vertex.

    For a clique of size >= 3 the witness (base, corner) satisfies: every
    member is the base or lies in the base's fiber at that corner.  Cliques
    of size <= 2 carry no forced type and come back as SMALL.
    """
    sorted_ids = _check_clique(g, ids)
    if len(sorted_ids) <= 2:
        return CliqueClass(SMALL)
    base_id = min(sorted_ids, key=lambda vid: g.heights[vid])
    base = g.vertices[base_id]
    decomps = []
    for vid in sorted_ids:
        if vid == base_id:
            continue
        pairs = edge_decompositions(base, g.vertices[vid])
        if not pairs:
            raise NotACliqueError(f"{g.vertices[vid]} is not adjacent to {base}")
        decomps.append(pairs)
    for choice in itertools.product(*decomps):
        removables = {c for c, _ in choice}
        if len(removables) == 1:
            return CliqueClass(STAR, base, next(iter(removables)))
        addables = {a for _, a in choice}
        if len(addables) == 1:
            return CliqueClass(TOP, base, next(iter(addables)))
    raise TheoremViolationError(
        f"clique {[g.vertices[v] for v in sorted_ids]} shares no corner at {base}"
    )


def canonical_cover(g: PartitionGraph) -> list[CoverMember]:
    """All full star- and top-simplices with nonempty fiber, deduplicated.

    Dedup is by vertex set; every producing description is kept as a
    provenance.  Members are sorted by vertex tuple, so member ids (list
    positions) are deterministic.
    """
    found: dict[tuple[int, ...], list[tuple[str, int, Corner]]] = {}
    for base_id, lam in enumerate(g.vertices):
        for c in removable_corners(lam):
            fiber = star_fiber(lam, c)
            if fiber:
                vertices = tuple(sorted([base_id] + [g.index[mu] for mu in fiber]))
                found.setdefault(vertices, []).append((STAR, base_id, c))
        for a in addable_corners(lam):
            fiber = top_fiber(lam, a)
            if fiber:
                vertices = tuple(sorted([base_id] + [g.index[mu] for mu in fiber]))
                found.setdefault(vertices, []).append((TOP, base_id, a))
    return [
        CoverMember(vertices, tuple(provenances))
        for vertices, provenances in sorted(found.items())
    ]


def full_star_simplex(g: PartitionGraph, lam: Iterable[int], c) -> tuple[int, ...]:
    """Vertex ids of {lam} union its star fiber at c, sorted."""
    lam = as_partition(lam)
    members = [g.vertex_id(lam)] + [g.vertex_id(mu) for mu in star_fiber(lam, c)]
    return tuple(sorted(members))


def full_top_simplex(g: PartitionGraph, lam: Iterable[int], a) -> tuple[int, ...]:
    """Vertex ids of {lam} union its top fiber at a, sorted."""
    lam = as_partition(lam)
    members = [g.vertex_id(lam)] + [g.vertex_id(mu) for mu in top_fiber(lam, a)]
    return tuple(sorted(members))


def maximal_simplices(
    g: PartitionGraph, cover: Optional[list[CoverMember]] = None
) -> list[tuple[int, ...]]:
    """Facets of the clique complex, derived from the classification.

    They are: full star- or top-simplices with fiber size >= 2, edges whose
    two fibers both have size 1, and isolated vertices as singletons (the
    last case only arises when the graph has a vertex with no moves at all).
    """
    if cover is None:
        cover = canonical_cover(g)
    facets = {member.vertices for member in cover if len(member.vertices) >= 3}
    for i, j in g.edges():
        lam = g.vertices[i]
        mu = g.vertices[j]
        pairs = edge_decompositions(lam, mu)
        assert pairs, "every edge must decompose as a transfer"
        c, a = pairs[0]
        if len(star_fiber(lam, c)) == 1 and len(top_fiber(lam, a)) == 1:
            facets.add((i, j))
    for vid in range(len(g.vertices)):
        if not g.adjacency[vid]:
            facets.add((vid,))
    return sorted(facets)


def enumerate_simplices(
    g: PartitionGraph,
    include_simplices: bool = False,
    facets: Optional[list[tuple[int, ...]]] = None,
):
    """Count every clique exactly once by enumerating subsets of facets.

    Returns the FVector, or (FVector, per-dimension simplex lists) when
    include_simplices is set.  Subsets are deduplicated one dimension at a
    time through integer keys packing the sorted ids.
    """
    if facets is None:
        facets = maximal_simplices(g)
    width = max(1, (len(g.vertices) - 1).bit_length())
    max_size = max((len(facet) for facet in facets), default=0)
    counts = []
    collected: list[list[tuple[int, ...]]] = []
    for size in range(1, max_size + 1):
        seen: set[int] = set()
        bucket: list[tuple[int, ...]] = []
        for facet in facets:
            if len(facet) < size:
                continue
            for combo in itertools.combinations(facet, size):
                key = 1
                for vid in combo:
                    key = (key << width) | vid
                if key not in seen:
                    seen.add(key)
                    if include_simplices:
                        bucket.append(combo)
        counts.append(len(seen))
        if include_simplices:
            bucket.sort()
            collected.append(bucket)
    fvector = FVector(tuple(counts))
    if include_simplices:
        return fvector, collected
    return fvector


def fvector_by_fiber_counting(g: PartitionGraph) -> FVector:
    """Independent f-vector: count cliques at their minimum-height vertex.

    Every clique of size >= 3 contains a unique lowest vertex lam, and its
    other members form a subset of size >= 2 of one height-raising fiber of
    lam, determined uniquely.  So the count in each size is a sum of
    binomials over (vertex, corner) pairs, with edges and vertices counted
    directly.  Shares nothing with the facet machinery.
    """
    counts = [len(g.vertices), g.edge_count()]
    higher: list[int] = []
    for lam in g.vertices:
        base_height = height(lam)
        fibers = [star_fiber(lam, c) for c in removable_corners(lam)]
        fibers += [top_fiber(lam, a) for a in addable_corners(lam)]
        for fiber in fibers:
            raising = sum(1 for mu in fiber if height(mu) > base_height)
            for k in range(2, raising + 1):
                while len(higher) < k - 1:
                    higher.append(0)
                higher[k - 2] += math.comb(raising, k)
    counts.extend(higher)
    while counts and counts[-1] == 0:
        counts.pop()
    return FVector(tuple(counts))


def euler_characteristic(n: int) -> tuple[int, int]:
    """(chi, chi - 1) for the clique complex on partitions of n."""
    g = build_graph(n)
    fvector = enumerate_simplices(g)
    chi = fvector.euler_characteristic
    return chi, chi - 1


def format_facet_lines(facets: Iterable[tuple[int, ...]]) -> str:
    """One facet per line as space-separated 1-based vertex ids."""
    return "".join(
        " ".join(str(vid + 1) for vid in facet) + "\n" for facet in facets
    )


def write_facets(facets: Iterable[tuple[int, ...]], path: str | os.PathLike) -> None:
    """Write format_facet_lines output to a file."""
    with open(path, "w", newline="\n") as handle:
        handle.write(format_facet_lines(facets))


def read_facets(path: str | os.PathLike) -> list[tuple[int, ...]]:
    """Read a facet file written by write_facets back into 0-based id tuples."""
    facets = []
    with open(path) as handle:
        for line in handle:
            line = line.strip()
            if not line:
                continue
            facets.append(tuple(sorted(int(token) - 1 for token in line.split())))
    return facets
