"""Edge-degrees of edges and vertices, and the total edge-degree of a graph."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .errors import DomainError
from .graph import Graph


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.vertex_count:
        raise DomainError(f"vertex index {v + 1} out of range 1..{g.vertex_count}")


def edge_degree_at_vertex(g: Graph, e: int, v: int) -> int:
    """Number of other edges meeting edge ``e`` at its endpoint ``v``."""
    if not 0 <= e < g.epsilon:
        raise DomainError(f"edge index {e + 1} out of range 1..{g.epsilon}")
    if v not in g.edges[e]:
        raise DomainError(f"v{v + 1} is not an endpoint of e{e + 1}")
    return sum(1 for k in g.incident_edges[v] if k != e)


def general_edge_degree(g: Graph, e: int) -> int:
    """``deg(u) + deg(v) - 2`` for ``e = uv``: the number of edges adjacent to ``e``."""
    if not 0 <= e < g.epsilon:
        raise DomainError(f"edge index {e + 1} out of range 1..{g.epsilon}")
    u, v = g.edges[e]
    return edge_degree_at_vertex(g, e, u) + edge_degree_at_vertex(g, e, v)


def edge_degree_of_vertex(g: Graph, v: int) -> int:
    _check_vertex(g, v)
    return sum(edge_degree_at_vertex(g, e, v) for e in g.incident_edges[v])


def total_edge_degree(g: Graph) -> int:
    return sum(edge_degree_of_vertex(g, v) for v in range(g.vertex_count))


@dataclass(frozen=True)
class EdgeDegreeReport:
    per_edge_at_endpoint: dict[tuple[int, int], int]
    general: dict[int, int]
    per_vertex: dict[int, int]
    total: int

    def to_json(self) -> dict[str, Any]:
        return {
            "per_edge_at_endpoint": [
                {"edge": e + 1, "vertex": v + 1, "value": d}
                for (e, v), d in sorted(self.per_edge_at_endpoint.items())
            ],
            "general": {str(e + 1): d for e, d in sorted(self.general.items())},
            "per_vertex": {str(v + 1): d for v, d in sorted(self.per_vertex.items())},
            "total": self.total,
        }


def edge_degree_report(g: Graph) -> EdgeDegreeReport:
    at_end = {}
    for e, (u, v) in enumerate(g.edges):
        at_end[(e, u)] = edge_degree_at_vertex(g, e, u)
        at_end[(e, v)] = edge_degree_at_vertex(g, e, v)
    general = {e: general_edge_degree(g, e) for e in range(g.epsilon)}
    per_vertex = {v: edge_degree_of_vertex(g, v) for v in range(g.vertex_count)}
    return EdgeDegreeReport(at_end, general, per_vertex, sum(per_vertex.values()))
