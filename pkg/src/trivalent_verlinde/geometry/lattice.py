"""Lattice points of the moment polytope and the N_k / k^(3g-3) asymptotics."""

import logging
from collections.abc import Sequence
from fractions import Fraction

from ..config import EngineConfig, resolve_config
from ..core.canonical import canonical_certificate
from ..core.contraction import fusion_count_contraction
from ..core.graph import TrivalentGraph, parity_rank, vertex_triples
from ..core.verlinde import verlinde_asymptotic_constant
from ..core.weights import (
    WeightVector,
    iter_label_space,
    unrestricted_label_space_size,
)
from ..exceptions import BudgetExceededError, InputValidationError, LabelRangeError
from ..reports.models import AsymptoticsReport, AsymptoticsRow
from .polytope import polytope_of_graph

logger = logging.getLogger(__name__)


def parity_lattice_points(
    graph: TrivalentGraph, level: int, config: EngineConfig | None = None
) -> list[WeightVector]:
    """
    Points c in (1/k)Z^(3g-3) of the polytope whose vertex label sums are even.

    Returned as integer labelings a = k c, in lexicographic order. The whole
    label space is scanned, so it must fit ``enumeration_label_space_limit``.
    """
    config = resolve_config(config)
    if level < 1:
        raise LabelRangeError(f"Level must be >= 1, got {level}")
    space = unrestricted_label_space_size(graph, level)
    if space > config.enumeration_label_space_limit:
        raise BudgetExceededError(
            f"Label space of {space} points exceeds the scan limit of "
            f"{config.enumeration_label_space_limit}"
        )

    polytope = polytope_of_graph(graph, "action")
    scaled = [
        (row, bound * level)
        for row, bound in zip(polytope.rows, polytope.action_bounds, strict=True)
    ]
    triples = vertex_triples(graph)

    points = []
    for weight in iter_label_space(graph, level):
        labels = weight.labels
        if any(sum(labels[e] for e in t.edges) % 2 for t in triples):
            continue
        if all(
            sum(a * x for a, x in zip(row, labels, strict=True)) <= bound
            for row, bound in scaled
        ):
            points.append(weight)
    return points


def density_factor(graph: TrivalentGraph) -> Fraction:
    """Share of lattice points that meet every vertex parity condition."""
    return Fraction(1, 2 ** parity_rank(graph))


def ratio_trend(ratios: Sequence[Fraction]) -> str:
    """Monotonicity of a sequence: decreasing, increasing, constant or mixed."""
    pairs = list(zip(ratios, ratios[1:]))
    if all(a > b for a, b in pairs):
        return "decreasing"
    if all(a < b for a, b in pairs):
        return "increasing"
    if all(a == b for a, b in pairs):
        return "constant"
    return "mixed"


def lattice_asymptotics(
    graph: TrivalentGraph,
    levels: Sequence[int],
    config: EngineConfig | None = None,
    volume_estimate: float | None = None,
) -> AsymptoticsReport:
    """
    Table of (k, N_k, N_k / k^(3g-3)) with exact ratios, sorted by k.

    N_k comes from contraction. The report carries the predicted limit of
    the ratio, the parity density factor and, when given, the measured
    volume so the two can be compared.
    """
    config = resolve_config(config)
    if not levels:
        raise InputValidationError("Asymptotics need at least one level")

    rows = []
    for level in sorted(set(levels)):
        count = fusion_count_contraction(graph, level, config)
        rows.append(
            AsymptoticsRow(level, count, Fraction(count, level**graph.edge_count))
        )

    report = AsymptoticsReport(
        graph=canonical_certificate(graph).text,
        genus=graph.genus,
        rows=rows,
        trend=ratio_trend([row.ratio for row in rows]),
        predicted_limit=verlinde_asymptotic_constant(graph.genus, config),
        density_factor=density_factor(graph),
        volume_estimate=volume_estimate,
    )
    logger.info(
        f"Asymptotics genus {graph.genus}: last ratio "
        f"{float(rows[-1].ratio):.6f}, trend {report.trend}, predicted limit "
        f"{report.predicted_limit:.6f}"
    )
    return report
