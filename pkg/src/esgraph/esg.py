"""Edge-set graphs, set-graphs and their degree structure.

The vertices of the edge-set graph of ``G`` are the nonempty edge subsets of
``G``; two subsets are adjacent when an edge of one shares an endpoint with
an edge of the other.  Vertex ``S`` is stored under its mask value, so the
vertex with index ``k`` in an explicit adjacency matrix is mask ``k + 1``.

The degree of ``S`` has a closed form.  With ``N(S)`` the union of the edge
neighbourhoods of the edges in ``S``, a subset ``T`` is adjacent to ``S``
exactly when it meets ``N(S)``, so

    deg(S) = 2**eps - 2**(eps - |N(S)|) - [S meets N(S)]

where the last term removes ``S`` itself from the count.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Any, NamedTuple

import numpy as np

from .errors import DomainError, ResourceLimitError
from .graph import Graph, edges_adjacent, is_connected
from .subsets import (
    check_width,
    format_mask,
    full_mask,
    mask_hex,
    mask_to_index,
    neighbor_masks,
    subset_neighborhood,
    subsets_adjacent,
)

EXPLICIT_MAX_EPSILON = 12
SWEEP_MAX_EPSILON = 22
SET_GRAPH_MAX_N = 16
SET_GRAPH_EXPLICIT_MAX_N = 12

EXPLICIT = "explicit"
IMPLICIT = "implicit"


def _require_host(g: Graph) -> None:
    if g.epsilon < 1:
        raise DomainError("the edge-set graph of an edgeless graph is empty")
    if not is_connected(g):
        raise DomainError(f"host graph {g.label()} is disconnected")


def _require_sweep(eps: int) -> None:
    if eps > SWEEP_MAX_EPSILON:
        raise ResourceLimitError(f"a full sweep over 2^{eps}-1 subsets exceeds the guard of {SWEEP_MAX_EPSILON} edges")


# ---------------------------------------------------------------------------
# vectorised neighbourhoods and degrees
# ---------------------------------------------------------------------------

def all_neighborhoods(g: Graph) -> np.ndarray:
    """``N(S)`` for every mask ``S`` in ``0 .. 2**eps - 1`` (entry 0 is empty)."""
    eps = g.epsilon
    _require_sweep(eps)
    nbrs = neighbor_masks(g)
    out = np.zeros(1 << eps, dtype=np.uint64)
    for k in range(eps):
        lo = 1 << k
        out[lo : 2 * lo] = out[:lo] | np.uint64(nbrs[k])
    return out


def analytic_degrees(g: Graph) -> np.ndarray:
    """Closed-form degree of every mask; entry 0 (the empty set) is set to 0."""
    eps = g.epsilon
    nbhd = all_neighborhoods(g)
    masks = np.arange(1 << eps, dtype=np.uint64)
    size = np.bitwise_count(nbhd).astype(np.int64)
    overlap = ((nbhd & masks) != 0).astype(np.int64)
    deg = (1 << eps) - np.left_shift(np.int64(1), eps - size) - overlap
    deg[0] = 0
    return deg


def subset_degree(g: Graph, mask: int) -> int:
    """Degree of the vertex ``S`` of the edge-set graph, in closed form."""
    eps = g.epsilon
    nbhd = subset_neighborhood(g, mask)
    return (1 << eps) - (1 << (eps - nbhd.bit_count())) - (1 if nbhd & mask else 0)


# ---------------------------------------------------------------------------
# the edge-set graph
# ---------------------------------------------------------------------------

class EdgeSetGraph:
    """Edge-set graph of a connected host.

    ``mode="explicit"`` materialises the adjacency matrix by counting adjacent
    edge pairs between every two subsets; ``mode="implicit"`` answers queries
    from neighbourhood masks.  Both modes give the same graph.
    """

    def __init__(self, host: Graph, mode: str = IMPLICIT):
        if mode not in (EXPLICIT, IMPLICIT):
            raise DomainError(f"unknown build mode {mode!r}")
        _require_host(host)
        check_width(host.epsilon)
        if mode == EXPLICIT and host.epsilon > EXPLICIT_MAX_EPSILON:
            raise ResourceLimitError(
                f"explicit edge-set graph limited to {EXPLICIT_MAX_EPSILON} edges, host has {host.epsilon}"
            )
        self.host = host
        self.mode = mode
        self._matrix: np.ndarray | None = None
        if mode == EXPLICIT:
            self._matrix = _pair_count_adjacency(host)

    @property
    def epsilon(self) -> int:
        return self.host.epsilon

    @property
    def order(self) -> int:
        return (1 << self.epsilon) - 1

    def vertices(self) -> range:
        return range(1, 1 << self.epsilon)

    @property
    def adjacency_matrix(self) -> np.ndarray:
        if self._matrix is None:
            raise DomainError("adjacency matrix is only materialised in explicit mode")
        return self._matrix

    def adjacent(self, s_mask: int, t_mask: int) -> bool:
        if self._matrix is not None:
            if s_mask == t_mask:
                raise DomainError("a subset is not adjacent to itself")
            for m in (s_mask, t_mask):
                if not 0 < m < 1 << self.epsilon:
                    raise DomainError(f"{mask_hex(m)} is not a vertex")
            return bool(self._matrix[s_mask - 1, t_mask - 1])
        return subsets_adjacent(self.host, s_mask, t_mask)

    def degree(self, mask: int) -> int:
        if self._matrix is not None:
            return int(self._matrix[mask - 1].sum())
        return subset_degree(self.host, mask)

    def degrees(self) -> np.ndarray:
        """Degree array indexed by mask (entry 0 unused and zero)."""
        if self._matrix is not None:
            out = np.zeros(1 << self.epsilon, dtype=np.int64)
            out[1:] = self._matrix.sum(axis=1)
            return out
        return analytic_degrees(self.host)

    def is_connected(self) -> bool:
        if self._matrix is not None:
            return _matrix_connected(self._matrix)
        if self.epsilon == 1:
            return True
        # every subset with a nonempty neighbourhood is adjacent to the full edge set
        return bool(np.all(np.bitwise_count(all_neighborhoods(self.host)[1:]) > 0))

    def to_graph(self) -> Graph:
        """Plain :class:`Graph` copy; vertex ``k`` is mask ``k + 1``."""
        if self._matrix is not None:
            rows, cols = np.nonzero(np.triu(self._matrix, 1))
            pairs = tuple(zip(rows.tolist(), cols.tolist()))
        else:
            _require_explicit_size(self.epsilon)
            nbhd = all_neighborhoods(self.host)
            masks = np.arange(1 << self.epsilon, dtype=np.uint64)
            pairs_list = []
            for s in range(1, 1 << self.epsilon):
                later = masks[s + 1 :]
                hits = np.nonzero(later & nbhd[s])[0] + s + 1
                pairs_list.extend((s - 1, int(t) - 1) for t in hits)
            pairs = tuple(pairs_list)
        return Graph(self.order, pairs, name=f"Gamma({self.host.label()})")

    def singleton_subgraph(self) -> Graph:
        """Subgraph induced on the singletons ``{e1}, ..., {e_eps}``, vertex k = e_{k+1}."""
        eps = self.epsilon
        pairs = tuple(
            (i, j)
            for i in range(eps)
            for j in range(i + 1, eps)
            if self.adjacent(1 << i, 1 << j)
        )
        return Graph(eps, pairs, name=f"singletons({self.host.label()})")

    def to_dot(self) -> str:
        _require_explicit_size(self.epsilon)
        eps = self.epsilon
        g = self.to_graph()
        lines = [f'graph "Gamma_{self.host.label()}" {{']
        for mask in sorted(self.vertices(), key=lambda m: mask_to_index(m, eps)):
            s, i = mask_to_index(mask, eps)
            lines.append(f'  v{mask} [label="{format_mask(mask)}\\n({s},{i})"];')
        for a, b in g.edges:
            lines.append(f"  v{a + 1} -- v{b + 1};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict[str, Any]:
        _require_explicit_size(self.epsilon)
        eps = self.epsilon
        g = self.to_graph()
        verts = []
        for mask in sorted(self.vertices(), key=lambda m: mask_to_index(m, eps)):
            s, i = mask_to_index(mask, eps)
            verts.append({"mask_hex": mask_hex(mask), "subset": format_mask(mask), "s": s, "i": i})
        return {
            "host": self.host.label(),
            "epsilon": eps,
            "order": self.order,
            "size": g.epsilon,
            "vertices": verts,
            "edges": [[mask_hex(a + 1), mask_hex(b + 1)] for a, b in g.edges],
        }


def _require_explicit_size(eps: int) -> None:
    if eps > EXPLICIT_MAX_EPSILON:
        raise ResourceLimitError(f"materialising the edge-set graph is limited to {EXPLICIT_MAX_EPSILON} edges")


def _membership(eps: int) -> np.ndarray:
    """Row ``k`` is the 0/1 indicator vector of mask ``k + 1``."""
    masks = np.arange(1, 1 << eps, dtype=np.int64)
    return ((masks[:, None] >> np.arange(eps)) & 1).astype(np.float32)


def _line_matrix(g: Graph) -> np.ndarray:
    eps = g.epsilon
    line = np.zeros((eps, eps), dtype=np.float32)
    for i in range(eps):
        for j in range(eps):
            if i != j and edges_adjacent(g, i, j):
                line[i, j] = 1.0
    return line


def _pair_count_adjacency(g: Graph) -> np.ndarray:
    """Adjacency by counting adjacent edge pairs across every two subsets."""
    member = _membership(g.epsilon)
    counts = member @ _line_matrix(g) @ member.T
    adj = counts > 0.5
    np.fill_diagonal(adj, False)
    return adj


def _matrix_connected(adj: np.ndarray) -> bool:
    n = adj.shape[0]
    if n <= 1:
        return True
    seen = np.zeros(n, dtype=bool)
    seen[0] = True
    frontier = np.zeros(n, dtype=bool)
    frontier[0] = True
    while frontier.any():
        reach = adj[frontier].any(axis=0) & ~seen
        seen |= reach
        frontier = reach
    return bool(seen.all())


def build_edge_set_graph(g: Graph, mode: str = IMPLICIT) -> EdgeSetGraph:
    return EdgeSetGraph(g, mode)


BRUTE_FORCE_MAX_EPSILON = 14


def brute_force_degrees(g: Graph, chunk: int = 1024) -> np.ndarray:
    """Degrees from adjacent-edge-pair counts between every two subsets.

    Same rule as the explicit build, evaluated a block of rows at a time so
    the full matrix is never held.  Entry 0 is unused.
    """
    eps = g.epsilon
    _require_host(g)
    if eps > BRUTE_FORCE_MAX_EPSILON:
        raise ResourceLimitError(f"brute-force degrees limited to {BRUTE_FORCE_MAX_EPSILON} edges")
    line = _line_matrix(g)
    member = _membership(eps)
    out = np.zeros(1 << eps, dtype=np.int64)
    for lo in range(0, member.shape[0], chunk):
        block = member[lo : lo + chunk]
        adj = (block @ line @ member.T) > 0.5
        rows = np.arange(block.shape[0])
        adj[rows, rows + lo] = False
        out[lo + 1 : lo + 1 + block.shape[0]] = adj.sum(axis=1)
    return out


# ---------------------------------------------------------------------------
# degree profile
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DegreeProfile:
    host: Graph
    degrees: np.ndarray
    delta: int
    Delta: int
    max_count: int
    degree_sum: int
    eulerian: bool
    gamma_connected: bool

    @property
    def epsilon(self) -> int:
        return self.host.epsilon

    def degree(self, mask: int) -> int:
        return int(self.degrees[mask])

    def items(self):
        """``(mask, degree)`` pairs in mask order."""
        return ((m, int(self.degrees[m])) for m in range(1, 1 << self.epsilon))

    def max_degree_masks(self) -> list[int]:
        return [int(m) for m in np.nonzero(self.degrees[1:] == self.Delta)[0] + 1]

    def odd_degree_masks(self) -> list[int]:
        return [int(m) for m in np.nonzero(self.degrees[1:] % 2 == 1)[0] + 1]

    def to_json(self) -> dict[str, Any]:
        eps = self.epsilon
        rows = []
        for mask in sorted(range(1, 1 << eps), key=lambda m: mask_to_index(m, eps)):
            s, i = mask_to_index(mask, eps)
            rows.append(
                {"mask_hex": mask_hex(mask), "subset": format_mask(mask), "s": s, "i": i, "degree": self.degree(mask)}
            )
        return {
            "host": self.host.label(),
            "epsilon": eps,
            "delta": self.delta,
            "Delta": self.Delta,
            "max_count": self.max_count,
            "degree_sum": self.degree_sum,
            "eulerian": self.eulerian,
            "degrees": rows,
        }


def profile_from_degrees(g: Graph, degrees: np.ndarray, gamma_connected: bool) -> DegreeProfile:
    body = degrees[1:]
    Delta = int(body.max())
    return DegreeProfile(
        host=g,
        degrees=degrees,
        delta=int(body.min()),
        Delta=Delta,
        max_count=int(np.count_nonzero(body == Delta)),
        degree_sum=int(body.sum()),
        eulerian=bool(gamma_connected and np.all(body % 2 == 0)),
        gamma_connected=gamma_connected,
    )


def degree_profile(g: Graph) -> DegreeProfile:
    esg = EdgeSetGraph(g, IMPLICIT)
    _require_sweep(g.epsilon)
    return profile_from_degrees(g, esg.degrees(), esg.is_connected())


def min_degree_witness(g: Graph) -> tuple[int, int]:
    """Singleton ``{e}`` for the first edge of least edge-degree, with its degree."""
    _require_host(g)
    nbrs = neighbor_masks(g)
    k = min(range(g.epsilon), key=lambda j: (nbrs[j].bit_count(), j))
    mask = 1 << k
    return mask, subset_degree(g, mask)


def is_complete_esg(g: Graph) -> bool:
    prof = degree_profile(g)
    return prof.delta == (1 << g.epsilon) - 2


# ---------------------------------------------------------------------------
# set-graphs
# ---------------------------------------------------------------------------

class SetGraph:
    """Graph on the nonempty subsets of an n-set, adjacent when they intersect."""

    def __init__(self, n: int):
        if not 1 <= n <= SET_GRAPH_MAX_N:
            raise ResourceLimitError(f"set-graph size must be in 1..{SET_GRAPH_MAX_N}, got {n}")
        self.n = n

    @property
    def order(self) -> int:
        return (1 << self.n) - 1

    def adjacent(self, a: int, b: int) -> bool:
        if a == b:
            raise DomainError("a subset is not adjacent to itself")
        return bool(a & b)

    def degrees(self) -> np.ndarray:
        """Closed-form degree per mask (entry 0 unused)."""
        masks = np.arange(1 << self.n, dtype=np.uint64)
        size = np.bitwise_count(masks).astype(np.int64)
        deg = (1 << self.n) - np.left_shift(np.int64(1), self.n - size) - 1
        deg[0] = 0
        return deg

    def adjacency_matrix(self) -> np.ndarray:
        if self.n > SET_GRAPH_EXPLICIT_MAX_N:
            raise ResourceLimitError(f"explicit set-graph limited to n <= {SET_GRAPH_EXPLICIT_MAX_N}")
        member = _membership(self.n)
        adj = (member @ member.T) > 0.5
        np.fill_diagonal(adj, False)
        return adj

    def to_graph(self) -> Graph:
        rows, cols = np.nonzero(np.triu(self.adjacency_matrix(), 1))
        return Graph(self.order, tuple(zip(rows.tolist(), cols.tolist())), name=f"setgraph:{self.n}")


def build_set_graph(n: int) -> SetGraph:
    return SetGraph(n)


def set_graph_degree_inclusion_exclusion(n: int, k: int) -> int:
    """Degree of a k-subset vertex by inclusion-exclusion over its k elements.

    The subsets meeting ``A = {a_1..a_k}`` form the union of the families
    ``S_j`` of subsets containing ``a_j``; any ``|J|`` of these families
    intersect in ``2**(n - |J|)`` subsets.  The vertex itself is removed.
    """
    union = sum((-1) ** (j - 1) * comb(k, j) * (1 << (n - j)) for j in range(1, k + 1))
    return union - 1


def set_graph_degree(n: int, k: int) -> int:
    if not 1 <= n <= SET_GRAPH_MAX_N:
        raise ResourceLimitError(f"set-graph size must be in 1..{SET_GRAPH_MAX_N}, got {n}")
    if not 1 <= k <= n:
        raise DomainError(f"cardinality {k} outside 1..{n}")
    closed = (1 << n) - (1 << (n - k)) - 1
    ie = set_graph_degree_inclusion_exclusion(n, k)
    if closed != ie:  # pragma: no cover - the identity is exact
        raise AssertionError(f"set-graph degree mismatch n={n} k={k}: {closed} != {ie}")
    return closed


def set_graph_degree_sum(n: int) -> int:
    return sum(comb(n, k) * set_graph_degree(n, k) for k in range(1, n + 1))


class DegreeSumComparison(NamedTuple):
    esg_sum: int
    setgraph_sum: int
    esg_exceeds: bool


def compare_degree_sums(g: Graph) -> DegreeSumComparison:
    if g.epsilon < 2:
        raise DomainError("degree-sum comparison needs at least 2 edges")
    esg_sum = degree_profile(g).degree_sum
    set_sum = int(SetGraph(g.epsilon).degrees()[1:].sum())
    return DegreeSumComparison(esg_sum, set_sum, esg_sum > set_sum)


def max_degree_characterization(g: Graph) -> np.ndarray:
    """Boolean per mask: the closed form reaches ``2**eps - 2`` exactly when
    ``N(S)`` is the whole edge set, or ``S = {e}`` with ``e`` adjacent to every
    other edge (then ``|N(S)| = eps - 1`` and ``S`` is outside ``N(S)``)."""
    eps = g.epsilon
    nbhd = all_neighborhoods(g)
    full = np.uint64(full_mask(eps))
    hit = nbhd == full
    for k, m in enumerate(neighbor_masks(g)):
        if m.bit_count() == eps - 1:
            hit[1 << k] = True
    hit[0] = False
    return hit

