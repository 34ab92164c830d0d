"""Admissible integer weights on trivalent graphs."""

import itertools
import logging
from collections import deque
from collections.abc import Iterator, Mapping
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from ..config import EngineConfig, resolve_config
from ..exceptions import (
    EdgeSetMismatchError,
    Gamma0NamingError,
    LabelRangeError,
    WeightCountLimitError,
)
from .contraction import fusion_count_contraction
from .generator import gamma0_names
from .graph import TrivalentGraph, VertexTriple, bridges, vertex_triples

logger = logging.getLogger(__name__)

Scale = Literal["action", "weight"]


@dataclass(frozen=True, order=True)
class WeightVector:
    """
    Integer labels a(E) = 2k * w(E) in {0..k}, indexed by edge id.

    Ordering is lexicographic on ``labels`` within a level.
    """

    level: int
    labels: tuple[int, ...]

    def label(self, edge: int) -> int:
        return self.labels[edge]

    def as_dict(self) -> dict[int, int]:
        return dict(enumerate(self.labels))

    def weights(self) -> tuple[Fraction, ...]:
        """The rational weights w(E) = a(E) / 2k in [0, 1/2]."""
        return tuple(Fraction(a, 2 * self.level) for a in self.labels)

    @classmethod
    def from_mapping(cls, level: int, labels: Mapping[int, int]) -> "WeightVector":
        return cls(level, tuple(labels[e] for e in sorted(labels)))

    def to_dict(self) -> dict[str, object]:
        return {"level": self.level, "labels": list(self.labels)}


@dataclass(frozen=True)
class ActionPoint:
    """Point of the action cube, one rational coordinate per edge id."""

    coordinates: tuple[Fraction, ...]
    scale: Scale = "action"

    @property
    def dimension(self) -> int:
        return len(self.coordinates)


@dataclass(frozen=True)
class AdmissibilityResult:
    """Outcome of :func:`is_admissible`, naming the first failed condition."""

    admissible: bool
    condition: int | None = None
    location: str = ""

    def __bool__(self) -> bool:
        return self.admissible


@dataclass(frozen=True)
class AbelianSplit:
    """Partition of the Gamma_0 weights into Abelian and non-Abelian parts."""

    abelian: tuple[WeightVector, ...]
    non_abelian: tuple[WeightVector, ...]

    @property
    def abelian_count(self) -> int:
        return len(self.abelian)

    @property
    def non_abelian_count(self) -> int:
        return len(self.non_abelian)


def check_labels(graph: TrivalentGraph, weight: WeightVector) -> None:
    """Labels must cover the edge set exactly and lie in {0..k}."""
    if weight.level < 1:
        raise LabelRangeError(f"Level must be >= 1, got {weight.level}")
    if len(weight.labels) != graph.edge_count:
        raise EdgeSetMismatchError(
            f"Weight has {len(weight.labels)} labels, graph has "
            f"{graph.edge_count} edges"
        )
    for edge, a in enumerate(weight.labels):
        if not 0 <= a <= weight.level:
            raise LabelRangeError(
                f"Label {a} on edge {graph.name_of(edge)} outside 0..{weight.level}"
            )


def triple_failure(labels: tuple[int, int, int], level: int) -> int | None:
    """First failed vertex condition (1, 2 or 3) for a label triple, else None."""
    a, b, c = labels
    if (a + b + c) % 2:
        return 1
    if a + b + c > 2 * level:
        return 2
    for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
        if not abs(x - y) <= z <= x + y:
            return 3
    return None


def _triple_labels(triple: VertexTriple, labels: tuple[int, ...]) -> tuple[int, int, int]:
    l, m, n = triple.edges
    return labels[l], labels[m], labels[n]


def is_admissible(
    graph: TrivalentGraph,
    weight: WeightVector,
    enforce_condition0: bool = True,
) -> AdmissibilityResult:
    """
    Check conditions 0-3 in integer labels.

    Condition 0: even label on every bridge. At each vertex (a loop counted
    twice): 1 even sum, 2 sum at most 2k, 3 triangle inequalities.
    """
    check_labels(graph, weight)
    if enforce_condition0:
        for edge in sorted(bridges(graph)):
            if weight.labels[edge] % 2:
                return AdmissibilityResult(False, 0, f"bridge {graph.name_of(edge)}")
    for triple in vertex_triples(graph):
        failed = triple_failure(_triple_labels(triple, weight.labels), weight.level)
        if failed is not None:
            return AdmissibilityResult(False, failed, f"vertex {triple.vertex}")
    return AdmissibilityResult(True)


def _search_order(graph: TrivalentGraph) -> list[int]:
    """Edges in breadth-first order from vertex 0, tree edges first per vertex."""
    incident: list[list[int]] = [[] for _ in graph.vertices]
    for edge, (u, v) in enumerate(graph.edges):
        incident[u].append(edge)
        if v != u:
            incident[v].append(edge)

    order: list[int] = []
    seen_edges: set[int] = set()
    seen_vertices = {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for edge in sorted(incident[u], key=lambda e: (graph.is_loop(e), e)):
            if edge in seen_edges:
                continue
            seen_edges.add(edge)
            order.append(edge)
            a, b = graph.edges[edge]
            other = b if a == u else a
            if other not in seen_vertices:
                seen_vertices.add(other)
                queue.append(other)
    return order


def _partial_feasible(assigned: list[int], level: int) -> bool:
    """Whether a vertex with two known labels can still be completed."""
    a, b = assigned
    low = abs(a - b)
    high = min(a + b, 2 * level - a - b, level)
    if low > high:
        return False
    # some c in [low, high] with a + b + c even; low already has that parity
    return True


def _iter_admissible(
    graph: TrivalentGraph, level: int, enforce_condition0: bool
) -> Iterator[tuple[int, ...]]:
    order = _search_order(graph)
    triples = vertex_triples(graph)
    slots_at: list[list[tuple[int, int]]] = [[] for _ in graph.edge_ids]
    for triple in triples:
        for slot, edge in enumerate(triple.edges):
            slots_at[edge].append((triple.vertex, slot))
    bridge_set = bridges(graph) if enforce_condition0 else frozenset()

    labels: list[int | None] = [None] * graph.edge_count

    def vertex_ok(vertex: int) -> bool:
        known = [labels[e] for e in triples[vertex].edges if labels[e] is not None]
        if len(known) == 3:
            return triple_failure(tuple(known), level) is None  # type: ignore[arg-type]
        if len(known) == 2:
            return _partial_feasible(known, level)  # type: ignore[arg-type]
        return True

    def extend(position: int) -> Iterator[tuple[int, ...]]:
        if position == len(order):
            yield tuple(labels)  # type: ignore[arg-type]
            return
        edge = order[position]
        step = 2 if edge in bridge_set else 1
        touched = {vertex for vertex, _ in slots_at[edge]}
        for a in range(0, level + 1, step):
            labels[edge] = a
            if all(vertex_ok(v) for v in touched):
                yield from extend(position + 1)
        labels[edge] = None

    yield from extend(0)


def enumerate_weights(
    graph: TrivalentGraph,
    level: int,
    config: EngineConfig | None = None,
    enforce_condition0: bool = True,
) -> list[WeightVector]:
    """
    All admissible weights of ``graph`` at ``level``, in lexicographic order.

    The size is checked against ``config.max_weight_count`` via contraction
    before any labeling is visited; the result is never truncated.
    """
    config = resolve_config(config)
    if level < 1:
        raise LabelRangeError(f"Level must be >= 1, got {level}")

    expected = fusion_count_contraction(graph, level, config)
    if expected > config.max_weight_count:
        raise WeightCountLimitError(
            f"{expected} admissible weights exceed the cap of {config.max_weight_count}"
        )

    found = sorted(
        WeightVector(level, labels)
        for labels in _iter_admissible(graph, level, enforce_condition0)
    )
    logger.debug(
        f"Enumerated {len(found)} weights (genus {graph.genus}, level {level}, "
        f"condition 0 {'on' if enforce_condition0 else 'off'})"
    )
    return found


def count_weights(
    graph: TrivalentGraph,
    level: int,
    config: EngineConfig | None = None,
    verify: bool = False,
) -> int:
    """
    Size of the admissible weight set.

    Args:
        graph: Validated trivalent graph
        level: Level k >= 1
        config: Engine configuration
        verify: Also enumerate and compare with the contraction count

    Returns:
        Number of admissible weights
    """
    count = fusion_count_contraction(graph, level, config)
    if verify:
        enumerated = len(enumerate_weights(graph, level, config))
        if enumerated != count:
            raise AssertionError(
                f"Enumeration found {enumerated} weights, contraction {count}"
            )
    return count


def unrestricted_label_space_size(graph: TrivalentGraph, level: int) -> int:
    """|W_g^k| = (k+1)^(3g-3)."""
    return (level + 1) ** graph.edge_count


def iter_label_space(graph: TrivalentGraph, level: int) -> Iterator[WeightVector]:
    """Every labeling in {0..k}^E, admissible or not, in lexicographic order."""
    for labels in itertools.product(range(level + 1), repeat=graph.edge_count):
        yield WeightVector(level, labels)


def scale_weight(weight: WeightVector, factor: int) -> WeightVector:
    """Multiply labels and level by ``factor``."""
    return WeightVector(weight.level * factor, tuple(a * factor for a in weight.labels))


def weight_to_action_point(
    weight: WeightVector,
    scale: Scale | None = None,
    config: EngineConfig | None = None,
) -> ActionPoint:
    """
    Exact coordinates of a weight.

    ``"action"`` gives c = 2w = a/k in [0, 1]; ``"weight"`` gives w = a/2k.
    Without ``scale`` the convention is ``config.scale``.
    """
    if scale is None:
        scale = resolve_config(config).scale
    denominator = weight.level if scale == "action" else 2 * weight.level
    return ActionPoint(
        tuple(Fraction(a, denominator) for a in weight.labels), scale
    )


def abelian_filter(
    graph: TrivalentGraph, level: int, config: EngineConfig | None = None
) -> AbelianSplit:
    """
    Split the admissible weights of Gamma_0 into Abelian and non-Abelian ones.

    Abelian weights vanish on every c_i and agree on each pair (a_i, a'_i).
    """
    names = gamma0_names(graph.genus)
    required = set(names["a"]) | set(names["a_prime"]) | set(names["c"])
    if not graph.has_names(required):
        missing = sorted(required - set(graph.edge_names.values()))
        raise Gamma0NamingError(f"Graph lacks Gamma_0 edge names: {missing}")

    c_edges = [graph.edge_by_name(n) for n in names["c"]]
    pairs = [
        (graph.edge_by_name(f"a{i}"), graph.edge_by_name(f"a'{i}"))
        for i in range(2, graph.genus)
    ]

    abelian: list[WeightVector] = []
    non_abelian: list[WeightVector] = []
    for weight in enumerate_weights(graph, level, config):
        is_abelian = all(weight.labels[e] == 0 for e in c_edges) and all(
            weight.labels[a] == weight.labels[b] for a, b in pairs
        )
        (abelian if is_abelian else non_abelian).append(weight)

    logger.info(
        f"Gamma_0 genus {graph.genus} level {level}: {len(abelian)} Abelian, "
        f"{len(non_abelian)} non-Abelian weights"
    )
    return AbelianSplit(tuple(abelian), tuple(non_abelian))


def condition0_redundancy_check(
    graph: TrivalentGraph, level: int, config: EngineConfig | None = None
) -> bool:
    """Whether dropping the bridge-evenness condition changes the weight set."""
    with_condition = enumerate_weights(graph, level, config, enforce_condition0=True)
    without = enumerate_weights(graph, level, config, enforce_condition0=False)
    return with_condition == without
