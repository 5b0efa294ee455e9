"""Connected edge domination and the maximum-degree vertices of edge-set graphs.

An edge subset ``X`` is edge dominating when every edge outside ``X`` is
adjacent to an edge of ``X``; it is a connected edge dominating (CED) set
when the subgraph formed by the edges of ``X`` is connected as well.  The
CED-index counts the CED sets of minimum cardinality.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterator

import numpy as np

from .errors import DomainError, ResourceLimitError
from .esg import degree_profile
from .graph import Graph
from .subsets import format_mask, full_mask, mask_edges, neighbor_masks, subset_neighborhood

CED_SEARCH_MAX_EPSILON = 20
CED_CENSUS_MAX_EPSILON = 16


def _check(g: Graph, mask: int) -> None:
    if mask <= 0:
        raise DomainError("edge subset must be nonempty")
    if mask >> g.epsilon:
        raise DomainError(f"subset uses edges beyond e{g.epsilon}")


def is_edge_dominating(g: Graph, mask: int) -> bool:
    _check(g, mask)
    return (mask | subset_neighborhood(g, mask)) == full_mask(g.epsilon)


def edges_connected(g: Graph, mask: int) -> bool:
    """Whether the subgraph formed by the edges of ``mask`` is connected."""
    _check(g, mask)
    nbrs = neighbor_masks(g)
    reached = mask & -mask
    frontier = reached
    while frontier:
        grow = 0
        for k in mask_edges(frontier):
            grow |= nbrs[k]
        frontier = grow & mask & ~reached
        reached |= frontier
    return reached == mask


def is_ced(g: Graph, mask: int) -> bool:
    return is_edge_dominating(g, mask) and edges_connected(g, mask)


def connected_edge_subsets(g: Graph, size: int) -> Iterator[int]:
    """Every connected edge subset of exactly ``size`` edges, each once.

    Connected edge subsets of ``g`` are the connected vertex subsets of its
    line graph; they are grown from their smallest edge by extension sets,
    so no subset is produced twice.
    """
    nbrs = neighbor_masks(g)
    eps = g.epsilon

    def extend(sub: int, ext: int, closed: int, root: int) -> Iterator[int]:
        if sub.bit_count() == size:
            yield sub
            return
        while ext:
            w = ext & -ext
            ext ^= w
            k = w.bit_length() - 1
            # exclusive neighbours of w: outside sub and not adjacent to sub
            fresh = nbrs[k] & ~closed & ~((1 << (root + 1)) - 1)
            yield from extend(sub | w, ext | fresh, closed | nbrs[k] | w, root)

    for root in range(eps):
        start = 1 << root
        above = ~((1 << (root + 1)) - 1)
        yield from extend(start, nbrs[root] & above, nbrs[root] | start, root)


def _lex_key(mask: int) -> list[int]:
    return mask_edges(mask)


@dataclass(frozen=True)
class CedReport:
    ced_number: int
    ced_index: int
    smallest_sets: list[int]
    all_ced_count: int | None = field(default=None)

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "ced_number": self.ced_number,
            "ced_index": self.ced_index,
            "smallest_sets": [format_mask(m) for m in self.smallest_sets],
        }
        if self.all_ced_count is not None:
            out["all_ced_count"] = self.all_ced_count
        return out


def smallest_ced_sets(g: Graph) -> tuple[int, list[int]]:
    """Minimum CED cardinality and the minimum CED sets in lex order."""
    if g.epsilon < 1:
        raise DomainError("an edgeless graph has no edge dominating set")
    if g.epsilon > CED_SEARCH_MAX_EPSILON:
        raise ResourceLimitError(f"CED search limited to {CED_SEARCH_MAX_EPSILON} edges")
    full = full_mask(g.epsilon)
    for size in range(1, g.epsilon + 1):
        found = [m for m in connected_edge_subsets(g, size) if (m | subset_neighborhood(g, m)) == full]
        if found:
            return size, sorted(found, key=_lex_key)
    raise DomainError(f"{g.label()} has no connected edge dominating set (disconnected?)")


def all_ced_masks(g: Graph) -> np.ndarray:
    """Boolean array over all masks: is the mask a CED set."""
    eps = g.epsilon
    if eps > CED_CENSUS_MAX_EPSILON:
        raise ResourceLimitError(f"full CED census limited to {CED_CENSUS_MAX_EPSILON} edges")
    from .esg import all_neighborhoods

    masks = np.arange(1 << eps, dtype=np.uint64)
    dominating = (masks | all_neighborhoods(g)) == np.uint64(full_mask(eps))
    dominating[0] = False
    out = np.zeros(1 << eps, dtype=bool)
    for m in np.nonzero(dominating)[0]:
        out[m] = edges_connected(g, int(m))
    return out


def ced_report(g: Graph, census: bool | None = None) -> CedReport:
    """Minimum CED sets of ``g``; ``census`` adds the count of all CED sets.

    By default the census runs whenever the graph is within its guard.
    """
    number, sets = smallest_ced_sets(g)
    if census is None:
        census = g.epsilon <= CED_CENSUS_MAX_EPSILON
    total = int(all_ced_masks(g).sum()) if census else None
    return CedReport(number, len(sets), sets, total)


def max_degree_vertex_count(g: Graph) -> int:
    return degree_profile(g).max_count


def superset_closure(flags: np.ndarray, eps: int) -> np.ndarray:
    """Mark every mask that contains at least one flagged mask."""
    up = flags.copy()
    for k in range(eps):
        step = 1 << k
        view = up.reshape(-1, 2 * step)
        view[:, step:] |= view[:, :step]
    return up


def ced_superset_violations(g: Graph, limit: int = 1) -> list[tuple[int, int]]:
    """Pairs ``(X, S)`` with ``X`` a CED set, ``S`` containing ``X`` and ``deg(S)`` below the maximum."""
    prof = degree_profile(g)
    ced = all_ced_masks(g)
    covered = superset_closure(ced, g.epsilon)
    bad = np.nonzero(covered & (prof.degrees != prof.Delta))[0]
    out = []
    for s in bad[:limit]:
        s = int(s)
        sub = s
        while sub:
            if ced[sub]:
                out.append((sub, s))
                break
            sub = (sub - 1) & s
    return out


def verify_ced_superset_property(g: Graph) -> bool:
    return not ced_superset_violations(g)
