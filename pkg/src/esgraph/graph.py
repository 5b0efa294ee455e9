"""Immutable simple graphs, the standard families and classical utilities.

Vertices are ``0 .. nu-1`` and edges are kept in construction order; that
order fixes the bit position of every edge in an edge mask.  Reports use
1-based labels ``v1..`` and ``e1..``.
"""

from __future__ import annotations

import itertools
import re
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Iterator

from .errors import (
    DomainError,
    InvalidOrderError,
    IsomorphismUndecided,
    ParseError,
    ResourceLimitError,
)

HAMILTONIAN_MAX_ORDER = 10
ISOMORPHISM_MAX_ORDER = 12
CANONICAL_MAX_ORDER = 8
ENUMERATION_MAX_ORDER = 7

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: tuple[Edge, ...]
    name: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        if self.vertex_count < 0:
            raise DomainError("vertex count must be nonnegative")
        normalized = []
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise DomainError(f"self-loop at vertex {u + 1}")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise DomainError(f"edge ({u + 1},{v + 1}) has an endpoint out of range")
            e = (min(u, v), max(u, v))
            if e in seen:
                raise DomainError(f"duplicate edge ({e[0] + 1},{e[1] + 1})")
            seen.add(e)
            normalized.append(e)
        object.__setattr__(self, "edges", tuple(normalized))

    @property
    def epsilon(self) -> int:
        return len(self.edges)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        deg = [0] * self.vertex_count
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return tuple(deg)

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def incident_edges(self) -> tuple[tuple[int, ...], ...]:
        inc: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for k, (u, v) in enumerate(self.edges):
            inc[u].append(k)
            inc[v].append(k)
        return tuple(tuple(x) for x in inc)

    def label(self) -> str:
        return self.name or edge_list_label(self)

    def __str__(self) -> str:
        return self.label()


def edge_list_label(g: Graph) -> str:
    body = ",".join(f"{u + 1}-{v + 1}" for u, v in g.edges)
    return f"graph[{g.vertex_count}]:{body}"


def degree_sequence(g: Graph) -> tuple[int, ...]:
    return tuple(sorted(g.degrees))


# ---------------------------------------------------------------------------
# standard families
# ---------------------------------------------------------------------------

def make_path(n: int) -> Graph:
    """P_n with e_i = v_i v_{i+1}, labeled left to right."""
    if n < 2:
        raise InvalidOrderError(f"path needs at least 2 vertices, got {n}")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)), name=f"path:{n}")


def make_cycle(n: int) -> Graph:
    """C_n labeled clockwise, e_i = v_i v_{i+1} and e_n = v_n v_1."""
    if n < 3:
        raise InvalidOrderError(f"cycle needs at least 3 vertices, got {n}")
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)), name=f"cycle:{n}")


def make_star(m: int) -> Graph:
    """K_{1,m}: centre is vertex 0 and e_i joins it to vertex i."""
    if m < 1:
        raise InvalidOrderError(f"star needs at least 1 leaf, got {m}")
    return Graph(m + 1, tuple((0, i) for i in range(1, m + 1)), name=f"star:{m}")


def make_complete(n: int) -> Graph:
    if n < 1:
        raise InvalidOrderError(f"complete graph needs at least 1 vertex, got {n}")
    return Graph(n, tuple(itertools.combinations(range(n), 2)), name=f"complete:{n}")


FAMILIES = {
    "path": make_path,
    "cycle": make_cycle,
    "star": make_star,
    "complete": make_complete,
}

_FAMILY_RE = re.compile(r"^\s*([a-z]+)\s*:\s*(-?\d+)\s*$")


def from_family(spec: str) -> Graph:
    """Build a graph from a family spec such as ``"cycle:5"``."""
    m = _FAMILY_RE.match(spec)
    if not m or m.group(1) not in FAMILIES:
        raise ParseError(f"not a family spec: {spec!r} (expected path:N, cycle:N, star:M or complete:N)")
    return FAMILIES[m.group(1)](int(m.group(2)))


def parse_edge_list(text: str, name: str = "") -> Graph:
    """Parse the edge-list format: header ``nu eps`` then one ``u v`` per line (1-based)."""
    rows = [line.split() for line in text.splitlines() if line.strip()]
    if not rows:
        raise ParseError("empty edge list")
    try:
        header = [int(x) for x in rows[0]]
        body = [tuple(int(x) for x in r) for r in rows[1:]]
    except ValueError as exc:
        raise ParseError(f"non-integer token: {exc}") from None
    if len(header) != 2:
        raise ParseError("header must be 'nu eps'")
    nu, eps = header
    if len(body) != eps:
        raise ParseError(f"header announces {eps} edges, found {len(body)}")
    if any(len(r) != 2 for r in body):
        raise ParseError("every edge line must hold exactly two vertex indices")
    try:
        return Graph(nu, tuple((u - 1, v - 1) for u, v in body), name=name)
    except DomainError as exc:
        raise ParseError(str(exc)) from None


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.vertex_count} {g.epsilon}"]
    lines += [f"{u + 1} {v + 1}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def load_graph(source: str) -> Graph:
    """Resolve a CLI input: a family spec, or else a path to an edge-list file."""
    if _FAMILY_RE.match(source):
        return from_family(source)
    path = Path(source)
    if not path.is_file():
        raise ParseError(f"{source!r} is neither a family spec nor a readable file")
    return parse_edge_list(path.read_text(encoding="utf-8"), name=path.name)


# ---------------------------------------------------------------------------
# classical utilities
# ---------------------------------------------------------------------------

def _check_edge(g: Graph, k: int) -> None:
    if not 0 <= k < g.epsilon:
        raise DomainError(f"edge index {k + 1} out of range 1..{g.epsilon}")


def edges_adjacent(g: Graph, i: int, j: int) -> bool:
    """True iff the distinct edges ``i`` and ``j`` (0-based) share an endpoint."""
    _check_edge(g, i)
    _check_edge(g, j)
    if i == j:
        raise DomainError("an edge is not adjacent to itself")
    return bool(set(g.edges[i]) & set(g.edges[j]))


def line_graph(g: Graph) -> Graph:
    if g.epsilon == 0:
        raise DomainError("line graph of an edgeless graph is empty")
    pairs = []
    for i, j in itertools.combinations(range(g.epsilon), 2):
        if set(g.edges[i]) & set(g.edges[j]):
            pairs.append((i, j))
    return Graph(g.epsilon, tuple(pairs), name=f"L({g.label()})")


def components(g: Graph) -> list[list[int]]:
    seen = [False] * g.vertex_count
    comps = []
    for start in range(g.vertex_count):
        if seen[start]:
            continue
        seen[start] = True
        stack, comp = [start], []
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in g.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    # the null graph has no component and is treated as connected
    return len(components(g)) <= 1


def is_eulerian(g: Graph) -> bool:
    return is_connected(g) and all(d % 2 == 0 for d in g.degrees)


def count_hamiltonian_cycles(g: Graph) -> int:
    """Count undirected Hamiltonian cycles.

    Each cycle is counted once: it starts at vertex 0 and is only accepted in
    the orientation whose second vertex is smaller than its last vertex.
    """
    n = g.vertex_count
    if n > HAMILTONIAN_MAX_ORDER:
        raise ResourceLimitError(f"Hamiltonian enumeration limited to {HAMILTONIAN_MAX_ORDER} vertices")
    if n < 3:
        return 0
    adj = g.adjacency
    count = 0
    path = [0]
    used = [False] * n
    used[0] = True

    def extend() -> None:
        nonlocal count
        last = path[-1]
        if len(path) == n:
            if 0 in adj[last] and path[1] < last:
                count += 1
            return
        for w in sorted(adj[last]):
            if not used[w]:
                used[w] = True
                path.append(w)
                extend()
                path.pop()
                used[w] = False

    extend()
    return count


def triangle_count(g: Graph) -> int:
    adj = g.adjacency
    return sum(1 for u, v in g.edges for w in adj[u] & adj[v] if w > v)


def fingerprint(g: Graph) -> tuple:
    return (g.vertex_count, g.epsilon, degree_sequence(g), triangle_count(g))


def find_isomorphism(g1: Graph, g2: Graph) -> dict[int, int] | None:
    """Backtracking search for a vertex bijection g1 -> g2 preserving adjacency."""
    if fingerprint(g1) != fingerprint(g2):
        return None
    n = g1.vertex_count
    a1, a2 = g1.adjacency, g2.adjacency
    d1, d2 = g1.degrees, g2.degrees
    # most constrained vertices first, breadth-first so later picks touch mapped ones
    order: list[int] = []
    for comp in components(g1):
        root = max(comp, key=lambda v: (d1[v], -v))
        frontier, seen = [root], {root}
        while frontier:
            u = frontier.pop(0)
            order.append(u)
            for w in sorted(a1[u], key=lambda v: (-d1[v], v)):
                if w not in seen:
                    seen.add(w)
                    frontier.append(w)
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def assign(pos: int) -> bool:
        if pos == n:
            return True
        u = order[pos]
        for cand in range(n):
            if cand in used or d2[cand] != d1[u]:
                continue
            if all((w in a1[u]) == (mapping[w] in a2[cand]) for w in mapping):
                mapping[u] = cand
                used.add(cand)
                if assign(pos + 1):
                    return True
                del mapping[u]
                used.discard(cand)
        return False

    return dict(mapping) if assign(0) else None


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    """Exact isomorphism test for graphs with at most 12 vertices.

    Larger graphs are only refuted by fingerprint; when their fingerprints
    agree :class:`IsomorphismUndecided` is raised instead of guessing.
    """
    if fingerprint(g1) != fingerprint(g2):
        return False
    if max(g1.vertex_count, g2.vertex_count) > ISOMORPHISM_MAX_ORDER:
        raise IsomorphismUndecided(
            f"fingerprints agree and order exceeds {ISOMORPHISM_MAX_ORDER}; exact search not attempted"
        )
    return find_isomorphism(g1, g2) is not None


def canonical_form(g: Graph) -> tuple[int, tuple[Edge, ...]]:
    """Lexicographically smallest sorted edge list over all vertex relabelings."""
    n = g.vertex_count
    if n > CANONICAL_MAX_ORDER:
        raise ResourceLimitError(f"canonical form limited to {CANONICAL_MAX_ORDER} vertices")
    best = None
    for perm in itertools.permutations(range(n)):
        relabeled = tuple(sorted((min(perm[u], perm[v]), max(perm[u], perm[v])) for u, v in g.edges))
        if best is None or relabeled < best:
            best = relabeled
    return n, best or ()


def enumerate_connected_graphs(
    nu_max: int,
    eps_max: int | None = None,
    *,
    include_trivial: bool = False,
    nu_min: int = 1,
) -> Iterator[Graph]:
    """Yield every connected graph with ``nu_min <= nu <= nu_max`` up to isomorphism.

    Graphs come from the networkx atlas, which lists each isomorphism class
    on up to seven vertices exactly once, ordered by (nu, eps).  ``K_1`` is
    skipped unless ``include_trivial`` is set.
    """
    if nu_max > ENUMERATION_MAX_ORDER:
        raise ResourceLimitError(f"graph enumeration limited to {ENUMERATION_MAX_ORDER} vertices")
    from networkx.generators.atlas import graph_atlas_g

    for idx, h in enumerate(graph_atlas_g()):
        nu = h.number_of_nodes()
        if nu > nu_max:
            break
        if nu < nu_min or nu == 0:
            continue
        eps = h.number_of_edges()
        if eps_max is not None and eps > eps_max:
            continue
        if eps == 0 and not include_trivial:
            continue
        g = Graph(nu, tuple(sorted((min(u, v), max(u, v)) for u, v in h.edges())), name=f"atlas:{idx}")
        if is_connected(g):
            yield g


def count_connected_classes_brute_force(nu: int) -> int:
    """Count connected graphs on exactly ``nu`` vertices by canonical dedupe of all labeled graphs."""
    pairs = list(itertools.combinations(range(nu), 2))
    classes = set()
    for bits in range(1 << len(pairs)):
        g = Graph(nu, tuple(p for k, p in enumerate(pairs) if bits >> k & 1))
        if is_connected(g):
            classes.add(canonical_form(g))
    return len(classes)


def to_networkx(g: Graph):
    import networkx as nx

    h = nx.Graph()
    h.add_nodes_from(range(g.vertex_count))
    h.add_edges_from(g.edges)
    return h


def degree_histogram(g: Graph) -> dict[int, int]:
    return dict(sorted(Counter(g.degrees).items()))


EDGE_GROWTH_MAX_EPSILON = 9


def _wl_hash(g: Graph) -> str:
    import networkx as nx

    return nx.weisfeiler_lehman_graph_hash(to_networkx(g), iterations=3)


def connected_graphs_by_edges(eps_max: int, eps_min: int = 1) -> list[Graph]:
    """All connected graphs with ``eps_min <= eps <= eps_max`` edges, one per isomorphism class.

    Grown one edge at a time from ``K_2``: every connected graph with
    ``m + 1`` edges arises from one with ``m`` edges by adding a chord or a
    pendant edge (drop a non-bridge edge, or a leaf edge).  Classes are
    bucketed by a Weisfeiler-Lehman hash and separated by exact search.
    Output is ordered by (eps, nu) and then by discovery.
    """
    if eps_max > EDGE_GROWTH_MAX_EPSILON:
        raise ResourceLimitError(f"edge-growth enumeration limited to {EDGE_GROWTH_MAX_EPSILON} edges")
    if eps_max < 1:
        return []
    layers: list[list[Graph]] = [[Graph(2, ((0, 1),))]]
    for _ in range(2, eps_max + 1):
        buckets: dict[str, list[Graph]] = {}
        found: list[Graph] = []
        for g in layers[-1]:
            n = g.vertex_count
            present = set(g.edges)
            candidates = [
                Graph(n, g.edges + ((u, v),)) for u, v in itertools.combinations(range(n), 2) if (u, v) not in present
            ]
            candidates += [Graph(n + 1, g.edges + ((u, n),)) for u in range(n)]
            for h in candidates:
                key = _wl_hash(h)
                bucket = buckets.setdefault(key, [])
                if any(are_isomorphic(h, other) for other in bucket):
                    continue
                bucket.append(h)
                found.append(h)
        layers.append(found)
    out = []
    for eps, layer in enumerate(layers, start=1):
        if eps < eps_min:
            continue
        for k, g in enumerate(sorted(layer, key=lambda h: h.vertex_count)):
            out.append(Graph(g.vertex_count, g.edges, name=f"conn{eps}:{k}"))
    return out


def random_connected_graph(rng, nu: int, eps: int) -> Graph:
    """Random connected graph: a random spanning tree plus random chords.

    ``rng`` is a :class:`random.Random`; pass a seeded one for reproducibility.
    """
    if nu < 1 or not nu - 1 <= eps <= nu * (nu - 1) // 2:
        raise DomainError(f"no connected simple graph with {nu} vertices and {eps} edges")
    order = list(range(nu))
    rng.shuffle(order)
    edges = set()
    for k in range(1, nu):
        u, v = order[k], order[rng.randrange(k)]
        edges.add((min(u, v), max(u, v)))
    rest = [p for p in itertools.combinations(range(nu), 2) if p not in edges]
    edges.update(rng.sample(rest, eps - len(edges)))
    return Graph(nu, tuple(sorted(edges)))
