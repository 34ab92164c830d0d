"""
Stabilizer tags, fibre presentations and fibre invariants of admissible weights.

An edge label is central when it is 0 or k (monodromy +1 or -1). A vertex is
reducible when one of its Clebsch-Gordan constraints is tight.
"""

import logging

import networkx as nx

from ..config import EngineConfig, resolve_config
from ..core.graph import TrivalentGraph, VertexTriple, vertex_triples
from ..core.weights import WeightVector, check_labels, enumerate_weights
from ..utils.linalg import cokernel_invariants, integer_rank, quaternion_rotation
from ..utils.parallel import ordered_map
from .models import (
    EdgeSides,
    FiberClassification,
    FiberInvariants,
    FiberPresentation,
    FiberStatus,
    GroupTag,
)

logger = logging.getLogger(__name__)

# Base points of SU2 edge factors; the rank is maximized over both families
_BASE_POINT_FAMILIES = (0, 1)


def _is_central(label: int, level: int) -> bool:
    return label == 0 or label == level


def edge_group(weight: WeightVector, edge: int) -> GroupTag:
    """SU2 for a central label, U1 otherwise."""
    if _is_central(weight.labels[edge], weight.level):
        return GroupTag.SU2
    return GroupTag.U1


def _tight(labels: tuple[int, int, int], level: int) -> bool:
    a, b, c = labels
    if a + b + c == 2 * level:
        return True
    return any(
        z == abs(x - y) or z == x + y for x, y, z in ((a, b, c), (b, c, a), (c, a, b))
    )


def vertex_group(weight: WeightVector, triple: VertexTriple) -> GroupTag:
    """SU2 if all three labels are central, U1 if a constraint is tight, else Z2."""
    labels = tuple(weight.labels[e] for e in triple.edges)
    if all(_is_central(a, weight.level) for a in labels):
        return GroupTag.SU2
    if _tight(labels, weight.level):  # type: ignore[arg-type]
        return GroupTag.U1
    return GroupTag.Z2


def weight_components(
    graph: TrivalentGraph, weight: WeightVector
) -> tuple[tuple[int, tuple[int, ...]], ...]:
    """Connected components of each equal-label subgraph, as (label, edge ids)."""
    components = []
    for label in sorted(set(weight.labels)):
        subgraph = nx.MultiGraph()
        for edge, (u, v) in enumerate(graph.edges):
            if weight.labels[edge] == label:
                subgraph.add_edge(u, v, key=edge)
        for nodes in nx.connected_components(subgraph):
            keys = subgraph.subgraph(nodes).edges(keys=True)
            edges = sorted(key for _, _, key in keys)
            components.append((label, tuple(edges)))
    return tuple(sorted(components))


def fiber_presentation(graph: TrivalentGraph, weight: WeightVector) -> FiberPresentation:
    """
    Tag every edge and vertex; edge (u, v) with u <= v is twisted by u on the
    left and v on the right, a loop by its vertex on both sides.
    """
    check_labels(graph, weight)
    presentation = FiberPresentation(
        graph=graph,
        weight=weight,
        edge_tags=tuple(edge_group(weight, e) for e in graph.edge_ids),
        vertex_tags=tuple(vertex_group(weight, t) for t in vertex_triples(graph)),
        sides=tuple(EdgeSides(e, u, v) for e, (u, v) in enumerate(graph.edges)),
        components=weight_components(graph, weight),
    )
    violations = check_inclusion_rules(presentation)
    assert not violations, f"Admissible weight broke inclusion rules: {violations}"
    return presentation


def check_inclusion_rules(presentation: FiberPresentation) -> list[str]:
    """
    Violations of the filtration rules, empty when consistent.

    Edge tags are U1 or SU2; a vertex tag is contained in each incident
    edge tag; two SU2 slots at a vertex force the third slot and the vertex
    to SU2.
    """
    found = []
    for edge, tag in enumerate(presentation.edge_tags):
        if tag is GroupTag.Z2:
            found.append(f"edge {edge} tagged Z2")
    for triple in vertex_triples(presentation.graph):
        vertex_tag = presentation.vertex_tags[triple.vertex]
        slot_tags = [presentation.edge_tags[e] for e in triple.edges]
        for edge, tag in zip(triple.edges, slot_tags, strict=True):
            if not vertex_tag.is_subgroup_of(tag):
                found.append(
                    f"vertex {triple.vertex} tag {vertex_tag.value} not in edge "
                    f"{edge} tag {tag.value}"
                )
        if slot_tags.count(GroupTag.SU2) >= 2 and (
            slot_tags.count(GroupTag.SU2) < 3 or vertex_tag is not GroupTag.SU2
        ):
            found.append(f"vertex {triple.vertex} has two SU2 edges but is not all SU2")
    return found


def _base_quaternion(edge: int, family: int) -> tuple[int, int, int, int]:
    return (
        1 + 2 * edge + family,
        3 + edge + family,
        5 + 3 * edge,
        7 + family + edge * edge,
    )


def _embedding(vertex_tag: GroupTag, edge_tag: GroupTag) -> list[list[int]]:
    """Tangent map of a vertex group into an edge group, circles along the first axis."""
    if edge_tag is GroupTag.SU2:
        if vertex_tag is GroupTag.SU2:
            return [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
        return [[1], [0], [0]]
    if vertex_tag is GroupTag.SU2:
        raise AssertionError("SU2 vertex acting on a U1 edge")
    return [[1]]


def _matmul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    columns = list(zip(*b, strict=True))
    return [
        [sum(x * y for x, y in zip(row, col, strict=True)) for col in columns]
        for row in a
    ]


def linearized_action(
    presentation: FiberPresentation, family: int = 0
) -> list[list[int]]:
    """
    Integer matrix of the vertex action at the base points, one row per edge
    tangent direction and one column per vertex tangent direction.

    An SU2 edge with base point q contributes n X_left - n R(q) X_right; a U1
    edge contributes x_left - x_right. Loops sum both sides.
    """
    offsets = []
    column_count = 0
    for tag in presentation.vertex_tags:
        offsets.append(column_count)
        column_count += tag.dimension

    rows: list[list[int]] = []
    for sides, edge_tag in zip(presentation.sides, presentation.edge_tags, strict=True):
        block = [[0] * column_count for _ in range(edge_tag.dimension)]
        if edge_tag is GroupTag.SU2:
            n, rotation = quaternion_rotation(_base_quaternion(sides.edge, family))
            left_map = [[n if i == j else 0 for j in range(3)] for i in range(3)]
            right_map = [[-x for x in row] for row in rotation]
        else:
            left_map, right_map = [[1]], [[-1]]

        for vertex, side_map in ((sides.left, left_map), (sides.right, right_map)):
            vertex_tag = presentation.vertex_tags[vertex]
            if vertex_tag.dimension == 0:
                continue
            contribution = _matmul(side_map, _embedding(vertex_tag, edge_tag))
            for i, row in enumerate(contribution):
                for j, value in enumerate(row):
                    block[i][offsets[vertex] + j] += value
        rows.extend(block)
    return rows


def fiber_dimension(presentation: FiberPresentation) -> int:
    """Sum of edge group dimensions minus the rank of the linearized action."""
    column_count = presentation.vertex_dimension
    rank = max(
        integer_rank(linearized_action(presentation, family), column_count)
        for family in _BASE_POINT_FAMILIES
    )
    return presentation.edge_dimension - rank


def _torus_incidence(presentation: FiberPresentation) -> tuple[list[list[int]], int]:
    """Edge-by-U1-vertex incidence of the circle actions on U1 edges."""
    circle_vertices = [
        v for v, tag in enumerate(presentation.vertex_tags) if tag is GroupTag.U1
    ]
    column = {v: i for i, v in enumerate(circle_vertices)}
    rows = []
    for sides in presentation.sides:
        row = [0] * len(circle_vertices)
        if sides.left in column:
            row[column[sides.left]] += 1
        if sides.right in column:
            row[column[sides.right]] -= 1
        rows.append(row)
    return rows, len(circle_vertices)


def fiber_invariants(presentation: FiberPresentation) -> FiberInvariants:
    """
    Dimension always; (t, p, s) and H1 only on the torus strata.

    All edges U1 with vertices in {Z2, U1} is a torus of rank
    #edges - rank(incidence); with no U1 vertex that rank is 3g-3.
    Anything with an SU2 factor is partial.
    """
    dimension = fiber_dimension(presentation)
    torus = all(tag is GroupTag.U1 for tag in presentation.edge_tags) and all(
        tag is not GroupTag.SU2 for tag in presentation.vertex_tags
    )
    if not torus:
        return FiberInvariants(dimension=dimension, status=FiberStatus.PARTIAL)

    rows, column_count = _torus_incidence(presentation)
    free_rank, _ = cokernel_invariants(rows, column_count)
    t = len(presentation.edge_tags) - integer_rank(rows, column_count)
    invariants = FiberInvariants(
        dimension=dimension,
        status=FiberStatus.EXACT,
        t=t,
        p=0,
        s=0,
        h1_free=free_rank,
        h1_torsion2=0,
    )
    if not invariants.consistent():
        logger.warning(
            f"Torus stratum inconsistency for labels {presentation.weight.labels}: "
            f"dimension {dimension}, t {t}, H1 free {free_rank}"
        )
    return invariants


def classify_weights(
    graph: TrivalentGraph, level: int, config: EngineConfig | None = None
) -> FiberClassification:
    """Classify every admissible weight of ``graph`` at ``level``."""
    config = resolve_config(config)
    weights = enumerate_weights(graph, level, config)

    def classify(
        weight: WeightVector,
    ) -> tuple[FiberPresentation, FiberInvariants, list[str]]:
        presentation = fiber_presentation(graph, weight)
        invariants = fiber_invariants(presentation)
        found = check_inclusion_rules(presentation)
        if not invariants.consistent():
            found.append(f"labels {weight.labels}: exact invariants inconsistent")
        if not 0 <= invariants.dimension <= graph.edge_count:
            found.append(
                f"labels {weight.labels}: dimension {invariants.dimension} out of range"
            )
        return presentation, invariants, found

    classification = FiberClassification(
        graph=graph, level=level, entries=ordered_map(classify, weights, config.workers)
    )
    logger.info(
        f"Classified {len(weights)} weights (genus {graph.genus}, level {level}): "
        f"{classification.exact_count} exact, {classification.partial_count} partial, "
        f"dimensions {classification.dimension_histogram}"
    )
    return classification
