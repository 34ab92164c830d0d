"""Data models for Bohr-Sommerfeld fibre presentations."""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any

from ..core.graph import TrivalentGraph
from ..core.weights import WeightVector


class GroupTag(Enum):
    """Stabilizer groups, filtered Z2 < U1 < SU2."""

    Z2 = "Z2"
    U1 = "U1"
    SU2 = "SU2"

    @property
    def dimension(self) -> int:
        return {"Z2": 0, "U1": 1, "SU2": 3}[self.value]

    @property
    def order(self) -> int:
        return {"Z2": 0, "U1": 1, "SU2": 2}[self.value]

    def is_subgroup_of(self, other: "GroupTag") -> bool:
        return self.order <= other.order


class FiberStatus(Enum):
    """Whether (t, p, s) and H1 are certified."""

    EXACT = "exact"
    PARTIAL = "partial"


@dataclass(frozen=True)
class EdgeSides:
    """Vertices twisting an edge factor from the left and right (equal for a loop)."""

    edge: int
    left: int
    right: int

    @property
    def is_loop(self) -> bool:
        return self.left == self.right


@dataclass(frozen=True)
class FiberPresentation:
    """Edge groups modulo the twisting action of vertex groups."""

    graph: TrivalentGraph
    weight: WeightVector
    edge_tags: tuple[GroupTag, ...]
    vertex_tags: tuple[GroupTag, ...]
    sides: tuple[EdgeSides, ...]
    # (label, edge ids) per connected component of an equal-label subgraph
    components: tuple[tuple[int, tuple[int, ...]], ...] = ()

    @property
    def level(self) -> int:
        return self.weight.level

    @property
    def edge_dimension(self) -> int:
        return sum(tag.dimension for tag in self.edge_tags)

    @property
    def vertex_dimension(self) -> int:
        return sum(tag.dimension for tag in self.vertex_tags)

    def to_dict(self) -> dict[str, Any]:
        return {
            "level": self.level,
            "labels": list(self.weight.labels),
            "edge_tags": [tag.value for tag in self.edge_tags],
            "vertex_tags": [tag.value for tag in self.vertex_tags],
            "sides": [[s.edge, s.left, s.right] for s in self.sides],
        }


@dataclass(frozen=True)
class FiberInvariants:
    """Dimension, and (t, p, s) with H1 = Z^t + Z2^p when exact."""

    dimension: int
    status: FiberStatus
    t: int | None = None
    p: int | None = None
    s: int | None = None
    h1_free: int | None = None
    h1_torsion2: int | None = None

    @property
    def is_exact(self) -> bool:
        return self.status is FiberStatus.EXACT

    def consistent(self) -> bool:
        """dimension = t + 3p + 2s and H1 = (t, p) whenever exact."""
        if not self.is_exact:
            return True
        assert self.t is not None and self.p is not None and self.s is not None
        return (
            self.dimension == self.t + 3 * self.p + 2 * self.s
            and self.h1_free == self.t
            and self.h1_torsion2 == self.p
        )


@dataclass
class FiberClassification:
    """All admissible weights of one graph and level, classified."""

    graph: TrivalentGraph
    level: int
    entries: list[tuple[FiberPresentation, FiberInvariants, list[str]]] = field(
        default_factory=list
    )

    @property
    def exact_count(self) -> int:
        return sum(1 for _, inv, _ in self.entries if inv.is_exact)

    @property
    def partial_count(self) -> int:
        return len(self.entries) - self.exact_count

    @property
    def dimension_histogram(self) -> dict[int, int]:
        histogram: dict[int, int] = {}
        for _, invariants, _ in self.entries:
            histogram[invariants.dimension] = histogram.get(invariants.dimension, 0) + 1
        return dict(sorted(histogram.items()))

    @property
    def violations(self) -> list[str]:
        return [v for _, _, found in self.entries for v in found]
