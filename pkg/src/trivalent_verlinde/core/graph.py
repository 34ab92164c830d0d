"""Trivalent multigraph model, validation and structural queries."""

import logging
from collections import Counter
from collections.abc import Mapping
from dataclasses import dataclass, field
from enum import Enum
from types import MappingProxyType

import networkx as nx

from ..exceptions import (
    DegreeError,
    DisconnectedGraphError,
    EdgeEndpointError,
    GenusMismatchError,
    GraphCountError,
    GraphValidationError,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TrivalentGraph:
    """
    Connected 3-regular multigraph with loops, dual to a trinion decomposition.

    Edge ids are the positions in ``edges``; endpoints are stored as
    ``(min, max)`` so an edge is an unordered pair and a loop is ``(v, v)``.
    Instances are not validated on construction; use :func:`validate`.
    """

    genus: int
    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    edge_names: Mapping[int, str] = field(
        default_factory=dict, compare=False, hash=False
    )

    def __post_init__(self) -> None:
        normalized = tuple((min(u, v), max(u, v)) for u, v in self.edges)
        object.__setattr__(self, "edges", normalized)
        object.__setattr__(
            self, "edge_names", MappingProxyType(dict(self.edge_names))
        )

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def edge_ids(self) -> range:
        return range(len(self.edges))

    @property
    def vertices(self) -> range:
        return range(self.vertex_count)

    @property
    def betti_number(self) -> int:
        """First Betti number of a connected graph."""
        return self.edge_count - self.vertex_count + 1

    def endpoints(self, edge: int) -> tuple[int, int]:
        return self.edges[edge]

    def is_loop(self, edge: int) -> bool:
        u, v = self.edges[edge]
        return u == v

    def loops(self) -> tuple[int, ...]:
        return tuple(e for e in self.edge_ids if self.is_loop(e))

    def degree(self, vertex: int) -> int:
        """Incidence count of a vertex; a loop counts twice."""
        return sum((u == vertex) + (v == vertex) for u, v in self.edges)

    def name_of(self, edge: int) -> str:
        return self.edge_names.get(edge, f"e{edge}")

    def edge_by_name(self, name: str) -> int:
        for edge, edge_name in self.edge_names.items():
            if edge_name == name:
                return edge
        raise KeyError(name)

    def has_names(self, names: set[str]) -> bool:
        return names <= set(self.edge_names.values())

    def to_networkx(self) -> nx.MultiGraph:
        """Build a networkx multigraph keyed by edge id."""
        graph = nx.MultiGraph()
        graph.add_nodes_from(self.vertices)
        for edge, (u, v) in enumerate(self.edges):
            graph.add_edge(u, v, key=edge)
        return graph

    def to_dict(self) -> dict[str, object]:
        return {
            "genus": self.genus,
            "vertex_count": self.vertex_count,
            "edges": [list(pair) for pair in self.edges],
            "edge_names": {str(e): n for e, n in sorted(self.edge_names.items())},
        }


@dataclass(frozen=True)
class VertexTriple:
    """A vertex with the multiset of its three incident edge ids."""

    vertex: int
    edges: tuple[int, int, int]

    def __post_init__(self) -> None:
        if len(self.edges) != 3:
            raise ValueError(f"Vertex {self.vertex} has {len(self.edges)} incidences")

    @property
    def distinct_edges(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.edges)))

    @property
    def loop_edge(self) -> int | None:
        counts = Counter(self.edges)
        return next((e for e, c in counts.items() if c == 2), None)


class GraphViolation(Enum):
    """Invariants of a trivalent graph, in the order they are checked."""

    ENDPOINT_RANGE = "endpoint_range"
    DEGREE = "degree"
    DISCONNECTED = "disconnected"
    VERTEX_COUNT = "vertex_count"
    EDGE_COUNT = "edge_count"
    BETTI_NUMBER = "betti_number"


_VIOLATION_ERRORS: dict[GraphViolation, type[GraphValidationError]] = {
    GraphViolation.ENDPOINT_RANGE: EdgeEndpointError,
    GraphViolation.DEGREE: DegreeError,
    GraphViolation.DISCONNECTED: DisconnectedGraphError,
    GraphViolation.VERTEX_COUNT: GraphCountError,
    GraphViolation.EDGE_COUNT: GraphCountError,
    GraphViolation.BETTI_NUMBER: GenusMismatchError,
}


@dataclass(frozen=True)
class ValidationResult:
    """Outcome of :func:`validate`."""

    valid: bool
    violation: GraphViolation | None = None
    message: str = ""

    def raise_for_violation(self) -> None:
        if self.violation is not None:
            raise _VIOLATION_ERRORS[self.violation](self.message)


def validate(graph: TrivalentGraph) -> ValidationResult:
    """Check every trivalent-graph invariant and report the first violation."""
    for edge, (u, v) in enumerate(graph.edges):
        if not (0 <= u < graph.vertex_count and 0 <= v < graph.vertex_count):
            return ValidationResult(
                False,
                GraphViolation.ENDPOINT_RANGE,
                f"Edge {edge} has endpoint outside 0..{graph.vertex_count - 1}",
            )

    for vertex in graph.vertices:
        degree = graph.degree(vertex)
        if degree != 3:
            return ValidationResult(
                False,
                GraphViolation.DEGREE,
                f"Vertex {vertex} has degree {degree}, expected 3",
            )

    if graph.vertex_count == 0 or not nx.is_connected(graph.to_networkx()):
        return ValidationResult(
            False, GraphViolation.DISCONNECTED, "Graph is not connected"
        )

    if graph.vertex_count != 2 * graph.genus - 2:
        return ValidationResult(
            False,
            GraphViolation.VERTEX_COUNT,
            f"Genus {graph.genus} needs {2 * graph.genus - 2} vertices, "
            f"found {graph.vertex_count}",
        )

    if graph.edge_count != 3 * graph.genus - 3:
        return ValidationResult(
            False,
            GraphViolation.EDGE_COUNT,
            f"Genus {graph.genus} needs {3 * graph.genus - 3} edges, "
            f"found {graph.edge_count}",
        )

    if graph.betti_number != graph.genus or graph.genus < 2:
        return ValidationResult(
            False,
            GraphViolation.BETTI_NUMBER,
            f"First Betti number {graph.betti_number} does not match genus "
            f"{graph.genus} (genus must be at least 2)",
        )

    return ValidationResult(True)


def ensure_valid(graph: TrivalentGraph) -> TrivalentGraph:
    """Raise the violation-specific error if the graph is invalid."""
    validate(graph).raise_for_violation()
    return graph


def vertex_triples(graph: TrivalentGraph) -> tuple[VertexTriple, ...]:
    """One triple per vertex; a loop's edge id appears twice."""
    incidences: list[list[int]] = [[] for _ in graph.vertices]
    for edge, (u, v) in enumerate(graph.edges):
        incidences[u].append(edge)
        incidences[v].append(edge)
    return tuple(
        VertexTriple(vertex, tuple(sorted(edges)))  # type: ignore[arg-type]
        for vertex, edges in enumerate(incidences)
    )


def bridges(graph: TrivalentGraph) -> frozenset[int]:
    """Edges whose removal disconnects the graph; loops never qualify."""
    multiplicity = Counter(pair for pair in graph.edges if pair[0] != pair[1])
    simple = nx.Graph()
    simple.add_nodes_from(graph.vertices)
    simple.add_edges_from(multiplicity)
    bridge_pairs = {
        (min(u, v), max(u, v))
        for u, v in nx.bridges(simple)
        if multiplicity[(min(u, v), max(u, v))] == 1
    }
    return frozenset(e for e, pair in enumerate(graph.edges) if pair in bridge_pairs)


def is_connected_without(graph: TrivalentGraph, edge: int) -> bool:
    """Whether the graph stays connected once ``edge`` is removed."""
    remaining = graph.to_networkx()
    u, v = graph.edges[edge]
    remaining.remove_edge(u, v, key=edge)
    return nx.is_connected(remaining)


def parity_rank(graph: TrivalentGraph) -> int:
    """
    Rank over GF(2) of the vertex parity conditions.

    Loops contribute an even amount at their vertex, so only the loop-free
    incidence matrix matters; its rank is V minus its component count.
    """
    loop_free = nx.Graph()
    loop_free.add_nodes_from(graph.vertices)
    loop_free.add_edges_from(pair for pair in graph.edges if pair[0] != pair[1])
    return graph.vertex_count - nx.number_connected_components(loop_free)
