"""Report records emitted by the command-line suites."""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, ClassVar

LEVEL_CONVENTION = "denominator k+2"


@dataclass
class CountReport:
    """Reconciliation of enumeration, contraction and formula counts."""

    csv_header: ClassVar[tuple[str, ...]] = (
        "genus",
        "level",
        "graph",
        "count_enumeration",
        "count_contraction",
        "count_formula",
        "formula_radius",
        "agreement",
    )
    level_convention: ClassVar[str] = LEVEL_CONVENTION

    genus: int
    level: int
    graph: str | None
    count_enumeration: int | None
    count_contraction: int
    count_formula: int
    formula_radius: float
    agreement: bool = False

    # Per-graph detail, keyed by certificate text; not serialized
    contraction_by_graph: dict[str, int] = field(default_factory=dict, repr=False)
    enumeration_by_graph: dict[str, int] = field(default_factory=dict, repr=False)

    def __post_init__(self) -> None:
        self.agreement = self.compute_agreement()

    def compute_agreement(self) -> bool:
        """True iff every present count, per graph and overall, is equal."""
        counts = {self.count_contraction, self.count_formula}
        if self.count_enumeration is not None:
            counts.add(self.count_enumeration)
        counts.update(self.contraction_by_graph.values())
        counts.update(self.enumeration_by_graph.values())
        return len(counts) == 1 and self.formula_radius < 0.5

    @property
    def ok(self) -> bool:
        return self.agreement

    def to_dict(self) -> dict[str, Any]:
        return {
            "genus": self.genus,
            "level": self.level,
            "graph": self.graph,
            "count_enumeration": self.count_enumeration,
            "count_contraction": self.count_contraction,
            "count_formula": self.count_formula,
            "formula_radius": self.formula_radius,
            "agreement": self.agreement,
        }

    def csv_rows(self) -> list[list[Any]]:
        row = self.to_dict()
        return [[row[name] for name in self.csv_header]]


@dataclass
class GraphReport:
    """One isomorphism class in canonical form."""

    csv_header: ClassVar[tuple[str, ...]] = (
        "genus",
        "certificate",
        "loops",
        "bridges",
        "edges",
    )

    genus: int
    certificate: str
    edges: list[tuple[int, int]]
    edge_names: dict[int, str]
    bridges: list[int]
    loops: list[int]
    text: str

    @property
    def ok(self) -> bool:
        return True

    def to_dict(self) -> dict[str, Any]:
        return {
            "genus": self.genus,
            "certificate": self.certificate,
            "edges": [list(pair) for pair in self.edges],
            "edge_names": {str(e): n for e, n in sorted(self.edge_names.items())},
            "bridges": self.bridges,
            "loops": self.loops,
            "text": self.text,
        }

    def csv_rows(self) -> list[list[Any]]:
        edges = " ".join(f"{u}-{v}" for u, v in self.edges)
        return [[self.genus, self.certificate, len(self.loops), len(self.bridges), edges]]


@dataclass
class WeightsReport:
    """The admissible weight list of one graph at one level."""

    genus: int
    level: int
    graph: str
    edge_ids: list[int]
    weights: list[tuple[int, ...]]
    condition0_redundant: bool | None = None

    @property
    def csv_header(self) -> tuple[str, ...]:
        return (*(f"e{e}" for e in self.edge_ids), "admissible")

    @property
    def count(self) -> int:
        return len(self.weights)

    @property
    def ok(self) -> bool:
        return self.condition0_redundant is not False

    def to_dict(self) -> dict[str, Any]:
        return {
            "genus": self.genus,
            "level": self.level,
            "graph": self.graph,
            "count": self.count,
            "condition0_redundant": self.condition0_redundant,
            "weights": [
                {str(e): a for e, a in zip(self.edge_ids, labels, strict=True)}
                for labels in self.weights
            ],
        }

    def csv_rows(self) -> list[list[Any]]:
        return [[*labels, True] for labels in self.weights]


@dataclass
class VolumeReport:
    """Monte Carlo volume of one polytope beside the zeta-normalized value."""

    csv_header: ClassVar[tuple[str, ...]] = (
        "graph",
        "genus",
        "mean",
        "stderr",
        "samples",
        "seed",
        "paper_value",
    )

    graph: str
    genus: int
    mean: float
    stderr: float
    samples: int
    seed: int
    zeta_value: float
    # Whether the zeta-normalized value lies outside 3 standard errors
    zeta_value_discrepancy: bool = False
    consistent: bool = True

    @property
    def ok(self) -> bool:
        return self.consistent

    def to_dict(self) -> dict[str, Any]:
        return {
            "graph": self.graph,
            "genus": self.genus,
            "mean": self.mean,
            "stderr": self.stderr,
            "samples": self.samples,
            "seed": self.seed,
            "paper_value": self.zeta_value,
            "paper_value_discrepancy": self.zeta_value_discrepancy,
            "consistent": self.consistent,
        }

    def csv_rows(self) -> list[list[Any]]:
        row = self.to_dict()
        return [[row[name] for name in self.csv_header]]


@dataclass
class AsymptoticsRow:
    level: int
    count: int
    ratio: Fraction


@dataclass
class AsymptoticsReport:
    """Lattice counts N_k against k^(3g-3) for one graph."""

    csv_header: ClassVar[tuple[str, ...]] = ("k", "count", "ratio_num", "ratio_den")

    graph: str
    genus: int
    rows: list[AsymptoticsRow]
    trend: str
    predicted_limit: float
    density_factor: Fraction
    volume_estimate: float | None = None

    @property
    def ok(self) -> bool:
        return True

    @property
    def limit_over_volume(self) -> float | None:
        """Predicted lattice limit divided by the measured volume."""
        if not self.volume_estimate:
            return None
        return self.predicted_limit / self.volume_estimate

    def to_dict(self) -> dict[str, Any]:
        return {
            "graph": self.graph,
            "genus": self.genus,
            "trend": self.trend,
            "predicted_limit": self.predicted_limit,
            "density_factor": str(self.density_factor),
            "volume_estimate": self.volume_estimate,
            "limit_over_volume": self.limit_over_volume,
            "rows": [
                {
                    "k": row.level,
                    "count": row.count,
                    "ratio_num": row.ratio.numerator,
                    "ratio_den": row.ratio.denominator,
                    "ratio": float(row.ratio),
                }
                for row in self.rows
            ],
        }

    def csv_rows(self) -> list[list[Any]]:
        return [
            [row.level, row.count, row.ratio.numerator, row.ratio.denominator]
            for row in self.rows
        ]


@dataclass
class FiberReport:
    """Classification of one admissible weight."""

    csv_header: ClassVar[tuple[str, ...]] = (
        "graph",
        "level",
        "labels",
        "edge_tags",
        "vertex_tags",
        "dimension",
        "status",
        "t",
        "p",
        "s",
        "h1_free",
        "h1_torsion2",
    )

    graph: str
    level: int
    labels: tuple[int, ...]
    edge_tags: list[str]
    vertex_tags: list[str]
    dimension: int
    status: str
    t: int | None = None
    p: int | None = None
    s: int | None = None
    h1_free: int | None = None
    h1_torsion2: int | None = None
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict[str, Any]:
        data: dict[str, Any] = {
            "graph": self.graph,
            "level": self.level,
            "labels": list(self.labels),
            "edge_tags": self.edge_tags,
            "vertex_tags": self.vertex_tags,
            "dimension": self.dimension,
            "status": self.status,
            "violations": self.violations,
        }
        if self.status == "exact":
            data.update(
                {
                    "t": self.t,
                    "p": self.p,
                    "s": self.s,
                    "h1": {"free": self.h1_free, "torsion2": self.h1_torsion2},
                }
            )
        return data

    def csv_rows(self) -> list[list[Any]]:
        return [
            [
                self.graph,
                self.level,
                " ".join(map(str, self.labels)),
                " ".join(self.edge_tags),
                " ".join(self.vertex_tags),
                self.dimension,
                self.status,
                self.t,
                self.p,
                self.s,
                self.h1_free,
                self.h1_torsion2,
            ]
        ]


@dataclass
class KummerRow:
    """One (g, k) point of the Abelian oracle grid."""

    csv_header: ClassVar[tuple[str, ...]] = (
        "g",
        "k",
        "theta_rank",
        "kummer_rank",
        "orbit_count",
        "match",
    )

    genus: int
    level: int
    theta_rank: int
    kummer_rank: int
    orbit_count: int
    free_orbits: int
    fixed_points: int
    decomposition_ok: bool

    @property
    def match(self) -> bool:
        return self.orbit_count == self.kummer_rank

    @property
    def ok(self) -> bool:
        return self.match and self.decomposition_ok

    def to_dict(self) -> dict[str, Any]:
        return {
            "g": self.genus,
            "k": self.level,
            "theta_rank": self.theta_rank,
            "kummer_rank": self.kummer_rank,
            "orbit_count": self.orbit_count,
            "free_orbits": self.free_orbits,
            "fixed_points": self.fixed_points,
            "decomposition_ok": self.decomposition_ok,
            "match": self.match,
        }

    def csv_rows(self) -> list[list[Any]]:
        return [
            [
                self.genus,
                self.level,
                self.theta_rank,
                self.kummer_rank,
                self.orbit_count,
                self.match,
            ]
        ]


@dataclass
class AbelianComparison:
    """Gamma_0 Abelian weight count beside the Kummer and theta ranks."""

    csv_header: ClassVar[tuple[str, ...]] = (
        "g",
        "k",
        "abelian_count",
        "non_abelian_count",
        "kummer_rank",
        "theta_rank",
        "counts_equal",
    )

    genus: int
    level: int
    abelian_count: int
    non_abelian_count: int
    kummer_rank: int
    theta_rank: int

    @property
    def counts_equal(self) -> bool:
        return self.abelian_count == self.kummer_rank

    @property
    def ok(self) -> bool:
        # reported, never asserted
        return True

    def to_dict(self) -> dict[str, Any]:
        return {
            "g": self.genus,
            "k": self.level,
            "abelian_count": self.abelian_count,
            "non_abelian_count": self.non_abelian_count,
            "kummer_rank": self.kummer_rank,
            "theta_rank": self.theta_rank,
            "counts_equal": self.counts_equal,
        }

    def csv_rows(self) -> list[list[Any]]:
        row = self.to_dict()
        return [[row[name] for name in self.csv_header]]
