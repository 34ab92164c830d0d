"""Closed-form and brute-force counts for the Jacobian and Kummer models."""

import itertools
import logging
from collections.abc import Iterator, Sequence
from dataclasses import dataclass

from ..config import EngineConfig, resolve_config
from ..core.generator import gamma0
from ..core.weights import abelian_filter
from ..exceptions import BudgetExceededError, GenusRangeError, LabelRangeError
from ..reports.models import AbelianComparison, KummerRow

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AbelianModel:
    """Torsion points (Z_m)^g of a Jacobian with the involution x -> -x."""

    genus: int
    modulus: int

    @property
    def size(self) -> int:
        return self.modulus**self.genus

    def points(self) -> Iterator[tuple[int, ...]]:
        return itertools.product(range(self.modulus), repeat=self.genus)

    def involution(self, point: tuple[int, ...]) -> tuple[int, ...]:
        return tuple((-x) % self.modulus for x in point)

    def is_fixed(self, point: tuple[int, ...]) -> bool:
        return self.involution(point) == point

    def expected_fixed_points(self) -> int:
        """2^g for even modulus, only the origin otherwise."""
        return 2**self.genus if self.modulus % 2 == 0 else 1


def _check(genus: int, level: int, min_genus: int) -> None:
    if genus < min_genus:
        raise GenusRangeError(f"Genus must be >= {min_genus}, got {genus}")
    if level < 1:
        raise LabelRangeError(f"Level must be >= 1, got {level}")


def theta_rank(genus: int, level: int) -> int:
    """Rank k^g of the level-k theta functions on the Jacobian."""
    _check(genus, level, 1)
    return level**genus


def kummer_even_rank(genus: int, level: int) -> int:
    """2^(g-1) (k^g + 1), the number of even theta functions of level 2k."""
    _check(genus, level, 2)
    return 2 ** (genus - 1) * (level**genus + 1)


def kummer_orbit_counts(
    genus: int, level: int, config: EngineConfig | None = None
) -> tuple[int, int]:
    """
    Orbits of (Z_2k)^g under negation, by explicit enumeration.

    Returns:
        (free orbits, fixed points)

    Raises:
        BudgetExceededError: If (2k)^g exceeds ``config.kummer_budget``
    """
    config = resolve_config(config)
    _check(genus, level, 2)
    model = AbelianModel(genus, 2 * level)
    if model.size > config.kummer_budget:
        raise BudgetExceededError(
            f"(Z_{model.modulus})^{genus} has {model.size} points, budget is "
            f"{config.kummer_budget}"
        )

    fixed = 0
    free = 0
    for point in model.points():
        partner = model.involution(point)
        if partner == point:
            fixed += 1
        elif point < partner:
            free += 1
    logger.debug(f"(Z_{model.modulus})^{genus}: {free} free orbits, {fixed} fixed points")
    return free, fixed


def kummer_orbit_bruteforce(
    genus: int, level: int, config: EngineConfig | None = None
) -> int:
    """Total orbit count, to be compared with :func:`kummer_even_rank`."""
    free, fixed = kummer_orbit_counts(genus, level, config)
    return free + fixed


def decomposition_check(
    genus: int, level: int, config: EngineConfig | None = None
) -> bool:
    """
    Check that free orbits ((2k)^g - 2^g)/2 plus 2^g fixed points give
    2^(g-1)(k^g + 1), both as arithmetic and against the enumeration.
    """
    expected_free = ((2 * level) ** genus - 2**genus) // 2
    expected_fixed = 2**genus
    arithmetic = expected_free + expected_fixed == kummer_even_rank(genus, level)
    free, fixed = kummer_orbit_counts(genus, level, config)
    return arithmetic and free == expected_free and fixed == expected_fixed


def kummer_row(genus: int, level: int, config: EngineConfig | None = None) -> KummerRow:
    free, fixed = kummer_orbit_counts(genus, level, config)
    return KummerRow(
        genus=genus,
        level=level,
        theta_rank=theta_rank(genus, level),
        kummer_rank=kummer_even_rank(genus, level),
        orbit_count=free + fixed,
        free_orbits=free,
        fixed_points=fixed,
        decomposition_ok=decomposition_check(genus, level, config),
    )


def kummer_grid(
    genera: Sequence[int], levels: Sequence[int], config: EngineConfig | None = None
) -> list[KummerRow]:
    """One row per (g, k), ordered by genus then level."""
    rows = [kummer_row(g, k, config) for g in sorted(genera) for k in sorted(levels)]
    mismatches = [(r.genus, r.level) for r in rows if not r.ok]
    if mismatches:
        logger.error(f"Kummer oracle mismatches at {mismatches}")
    return rows


def abelian_comparison(
    genus: int, level: int, config: EngineConfig | None = None
) -> AbelianComparison:
    """
    Gamma_0 Abelian weight count beside the Kummer and theta ranks.

    The counts generally differ for k >= 2; the comparison is reported,
    not asserted.
    """
    split = abelian_filter(gamma0(genus), level, config)
    comparison = AbelianComparison(
        genus=genus,
        level=level,
        abelian_count=split.abelian_count,
        non_abelian_count=split.non_abelian_count,
        kummer_rank=kummer_even_rank(genus, level),
        theta_rank=theta_rank(genus, level),
    )
    logger.info(
        f"Genus {genus} level {level}: {comparison.abelian_count} Abelian weights, "
        f"Kummer rank {comparison.kummer_rank}"
    )
    return comparison
