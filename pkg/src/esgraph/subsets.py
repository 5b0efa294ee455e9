"""Edge subsets as integer bitmasks.

Bit ``k`` of a mask is set when edge ``e_{k+1}`` belongs to the subset.  Within
each cardinality ``s`` subsets are ranked lexicographically by their sorted
edge-index lists, giving the ``(s, i)`` coordinates used in reports.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import Iterable, NamedTuple

from .errors import DomainError, ResourceLimitError
from .graph import Graph

MAX_MASK_BITS = 64


class SubsetIndex(NamedTuple):
    s: int
    i: int

    def __str__(self) -> str:
        return f"({self.s},{self.i})"


def popcount(mask: int) -> int:
    return mask.bit_count()


def full_mask(eps: int) -> int:
    return (1 << eps) - 1


def mask_from_edges(indices: Iterable[int]) -> int:
    """Mask from 0-based edge indices."""
    m = 0
    for k in indices:
        m |= 1 << k
    return m


def mask_edges(mask: int) -> list[int]:
    """0-based edge indices of ``mask`` in increasing order."""
    out = []
    k = 0
    while mask:
        if mask & 1:
            out.append(k)
        mask >>= 1
        k += 1
    return out


def format_mask(mask: int) -> str:
    return "{" + ",".join(f"e{k + 1}" for k in mask_edges(mask)) + "}"


def mask_hex(mask: int) -> str:
    return hex(mask)


def check_width(eps: int) -> None:
    if eps > MAX_MASK_BITS:
        raise ResourceLimitError(f"edge masks hold at most {MAX_MASK_BITS} edges, got {eps}")


def mask_to_index(mask: int, eps: int) -> SubsetIndex:
    if mask <= 0:
        raise DomainError("the empty subset has no (s,i) index")
    if mask >> eps:
        raise DomainError(f"mask {mask_hex(mask)} has bits beyond {eps} edges")
    elems = mask_edges(mask)
    s = len(elems)
    rank = 0
    prev = -1
    for pos, c in enumerate(elems):
        remaining = s - pos - 1
        # subsets sharing the prefix but with a smaller element at this position
        for x in range(prev + 1, c):
            rank += comb(eps - 1 - x, remaining)
        prev = c
    return SubsetIndex(s, rank + 1)


def index_to_mask(idx: SubsetIndex | tuple[int, int], eps: int) -> int:
    s, i = idx
    if not 1 <= s <= eps:
        raise DomainError(f"cardinality {s} outside 1..{eps}")
    total = comb(eps, s)
    if not 1 <= i <= total:
        raise DomainError(f"rank {i} outside 1..{total} for {s}-subsets of {eps} edges")
    rank = i - 1
    mask = 0
    x = 0
    for remaining in range(s - 1, -1, -1):
        while True:
            block = comb(eps - 1 - x, remaining)
            if rank < block:
                break
            rank -= block
            x += 1
        mask |= 1 << x
        x += 1
    return mask


@lru_cache(maxsize=512)
def neighbor_masks(g: Graph) -> tuple[int, ...]:
    """Edge-neighbourhood mask of every edge of ``g``, in edge order."""
    check_width(g.epsilon)
    out = []
    for u, v in g.edges:
        m = 0
        for k in g.incident_edges[u]:
            m |= 1 << k
        for k in g.incident_edges[v]:
            m |= 1 << k
        out.append(m)
    # an edge is not its own neighbour
    return tuple(m & ~(1 << k) for k, m in enumerate(out))


def edge_neighborhood(g: Graph, k: int) -> int:
    if not 0 <= k < g.epsilon:
        raise DomainError(f"edge index {k + 1} out of range 1..{g.epsilon}")
    return neighbor_masks(g)[k]


def _neighborhood(nbrs: tuple[int, ...], mask: int) -> int:
    out = 0
    k = 0
    while mask:
        if mask & 1:
            out |= nbrs[k]
        mask >>= 1
        k += 1
    return out


def _check_subset(g: Graph, mask: int, what: str = "subset") -> None:
    if mask <= 0:
        raise DomainError(f"{what} must be nonempty")
    if mask >> g.epsilon:
        raise DomainError(f"{what} {mask_hex(mask)} uses edges beyond e{g.epsilon}")


def subset_neighborhood(g: Graph, mask: int) -> int:
    """N(S): every edge adjacent to at least one edge of S (may overlap S)."""
    _check_subset(g, mask)
    return _neighborhood(neighbor_masks(g), mask)


def subsets_adjacent(g: Graph, s_mask: int, t_mask: int) -> bool:
    """Adjacency of two distinct vertices of the edge-set graph.

    S and T are adjacent when some edge of S shares an endpoint with some
    edge of T.  Overlap alone does not make them adjacent.
    """
    _check_subset(g, s_mask, "S")
    _check_subset(g, t_mask, "T")
    if s_mask == t_mask:
        raise DomainError("a subset is not adjacent to itself")
    return bool(_neighborhood(neighbor_masks(g), s_mask) & t_mask)
