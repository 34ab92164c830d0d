"""Moment polytope of a trivalent graph as an integer inequality system."""

import logging
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ..config import EngineConfig, resolve_config
from ..core.graph import TrivalentGraph, vertex_triples
from ..core.weights import ActionPoint, Scale
from ..exceptions import DimensionMismatchError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Polytope:
    """
    Inequalities ``rows @ x <= bounds`` over one coordinate per edge.

    Box rows come first. Bounds are in action units (c in [0, 1]); in the
    ``"weight"`` scale every bound is halved so that x = c / 2.
    """

    dimension: int
    rows: tuple[tuple[int, ...], ...]
    action_bounds: tuple[int, ...]
    box_row_count: int
    scale: Scale = "action"

    @property
    def bounds(self) -> tuple[Fraction, ...]:
        divisor = 1 if self.scale == "action" else 2
        return tuple(Fraction(b, divisor) for b in self.action_bounds)

    @property
    def box_upper(self) -> Fraction:
        return Fraction(1) if self.scale == "action" else Fraction(1, 2)

    @property
    def vertex_rows(self) -> tuple[tuple[int, ...], ...]:
        return self.rows[self.box_row_count :]

    def with_scale(self, scale: Scale) -> "Polytope":
        return Polytope(
            self.dimension, self.rows, self.action_bounds, self.box_row_count, scale
        )

    def as_arrays(self, include_box: bool = False) -> tuple[np.ndarray, np.ndarray]:
        """Float arrays (A, b) for vectorized membership tests."""
        start = 0 if include_box else self.box_row_count
        matrix = np.array(self.rows[start:], dtype=np.float64).reshape(
            -1, self.dimension
        )
        bounds = np.array([float(b) for b in self.bounds[start:]], dtype=np.float64)
        return matrix, bounds


def _unit(dimension: int, index: int, coefficient: int = 1) -> list[int]:
    row = [0] * dimension
    row[index] = coefficient
    return row


def polytope_of_graph(
    graph: TrivalentGraph,
    scale: Scale | None = None,
    config: EngineConfig | None = None,
) -> Polytope:
    """
    Box plus, at each vertex (a loop counted twice), the triangle
    inequalities and the sum bound c_l + c_m + c_n <= 2.

    ``scale`` defaults to ``config.scale``.

    At a loop vertex this reduces to 0 <= c_other <= 2 c_loop and
    2 c_loop + c_other <= 2. Duplicate rows are dropped.
    """
    if scale is None:
        scale = resolve_config(config).scale
    dimension = graph.edge_count
    rows: list[tuple[int, ...]] = []
    bounds: list[int] = []
    seen: set[tuple[tuple[int, ...], int]] = set()

    def add(row: list[int], bound: int) -> None:
        key = (tuple(row), bound)
        if key in seen or not any(row):
            return
        seen.add(key)
        rows.append(key[0])
        bounds.append(bound)

    for edge in graph.edge_ids:
        add(_unit(dimension, edge, -1), 0)
        add(_unit(dimension, edge), 1)
    box_row_count = len(rows)

    for triple in vertex_triples(graph):
        l, m, n = triple.edges
        for x, y, z in ((l, m, n), (m, n, l), (n, l, m)):
            row = [0] * dimension
            row[z] += 1
            row[x] -= 1
            row[y] -= 1
            add(row, 0)
        total = [0] * dimension
        for edge in triple.edges:
            total[edge] += 1
        add(total, 2)

    polytope = Polytope(dimension, tuple(rows), tuple(bounds), box_row_count, scale)
    logger.debug(
        f"Polytope for genus {graph.genus}: {len(rows) - box_row_count} vertex "
        f"rows, {box_row_count} box rows"
    )
    return polytope


def contains(polytope: Polytope, point: ActionPoint) -> bool:
    """Exact rational membership test, boundary included."""
    if point.dimension != polytope.dimension:
        raise DimensionMismatchError(
            f"Point of dimension {point.dimension} tested against polytope of "
            f"dimension {polytope.dimension}"
        )
    if point.scale != polytope.scale:
        polytope = polytope.with_scale(point.scale)
    for row, bound in zip(polytope.rows, polytope.bounds, strict=True):
        value = sum(
            (a * x for a, x in zip(row, point.coordinates, strict=True) if a),
            Fraction(0),
        )
        if value > bound:
            return False
    return True
