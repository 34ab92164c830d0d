"""
Verlinde numbers by certified trigonometric evaluation, and their
reconciliation with contraction and enumeration counts.

Level k weights correspond to the trigonometric sum with denominator k+2.
"""

import logging
from dataclasses import dataclass

from mpmath.ctx_iv import MPIntervalContext
from mpmath.ctx_mp import MPContext

from ..config import EngineConfig, resolve_config
from ..exceptions import (
    GenusRangeError,
    InputValidationError,
    LabelRangeError,
    PrecisionError,
)
from ..reports.models import CountReport
from .canonical import canonical_certificate
from .contraction import fusion_count_contraction
from .generator import enumerate_trivalent_graphs
from .graph import TrivalentGraph
from .weights import enumerate_weights, unrestricted_label_space_size

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class VerlindeValue:
    """Nearest integer to the trigonometric sum, with its certified distance."""

    value: int
    radius: float
    precision_bits: int


def _check_arguments(genus: int, level: int) -> None:
    if genus < 2:
        raise GenusRangeError(f"Verlinde rank needs genus >= 2, got {genus}")
    if level < 1:
        raise LabelRangeError(f"Level must be >= 1, got {level}")


def _interval_sum(genus: int, level: int, bits: int):  # type: ignore[no-untyped-def]
    """Enclosure of ((k+2)/2)^(g-1) * sum_n sin(n pi/(k+2))^-(2g-2)."""
    iv = MPIntervalContext()
    iv.prec = bits
    m = level + 2
    power = 2 * genus - 2
    total = iv.mpf(0)
    for n in range(1, m):
        total += 1 / iv.sin(iv.pi * n / m) ** power
    return (iv.mpf(m) / 2) ** (genus - 1) * total


def _certify(enclosure, bits: int) -> tuple[int, float]:  # type: ignore[no-untyped-def]
    """Nearest integer to an enclosure and the largest endpoint distance to it."""
    mp = MPContext()
    mp.prec = bits
    low_raw, high_raw = enclosure._mpi_
    low, high = mp.mpf(low_raw), mp.mpf(high_raw)
    nearest = int(mp.nint((low + high) / 2))
    radius = max(abs(low - nearest), abs(high - nearest))
    return nearest, float(radius)


def verlinde_rank(
    genus: int, level: int, config: EngineConfig | None = None
) -> VerlindeValue:
    """
    Evaluate the Verlinde number for ``genus`` at ``level`` with a certified radius.

    The enclosure is computed with interval arithmetic, doubling the working
    precision until the distance to the nearest integer is below
    ``config.rounding_tolerance`` or ``config.max_precision_bits`` is reached.

    Args:
        genus: Genus g >= 2
        level: Level k >= 1
        config: Engine configuration

    Returns:
        VerlindeValue with the integer, radius and final precision

    Raises:
        PrecisionError: If the radius stays at or above 1/2
    """
    _check_arguments(genus, level)
    config = resolve_config(config)

    bits = config.precision_bits
    while True:
        nearest, radius = _certify(_interval_sum(genus, level, bits), bits)
        if radius < config.rounding_tolerance or bits >= config.max_precision_bits:
            break
        bits = min(2 * bits, config.max_precision_bits)

    if radius >= 0.5:
        raise PrecisionError(
            f"Verlinde sum for genus {genus}, level {level} not certified at "
            f"{bits} bits (radius {radius})"
        )
    if radius >= config.rounding_tolerance:
        logger.warning(
            f"Verlinde sum for genus {genus}, level {level}: radius {radius} "
            f"above tolerance {config.rounding_tolerance}"
        )
    return VerlindeValue(nearest, radius, bits)


def verlinde_closed_form_genus2(level: int) -> int:
    """Genus-2 Verlinde number (k+2)((k+2)^2 - 1)/6."""
    if level < 1:
        raise LabelRangeError(f"Level must be >= 1, got {level}")
    m = level + 2
    return m * (m * m - 1) // 6


def zeta_series(s: int, terms: int, bits: int = 64) -> tuple[float, float]:
    """
    Direct summation of zeta(s) for integer s >= 2.

    Returns the partial sum corrected by the midpoint of the integral tail
    bounds, and the half-width of those bounds as an error bound.
    """
    if s < 2:
        raise ValueError(f"Zeta series diverges for s={s}")
    mp = MPContext()
    mp.prec = bits
    partial = mp.fsum(mp.mpf(n) ** -s for n in range(1, terms + 1))
    tail_low = mp.mpf(terms + 1) ** (1 - s) / (s - 1)
    tail_high = mp.mpf(terms) ** (1 - s) / (s - 1)
    value = partial + (tail_low + tail_high) / 2
    return float(value), float((tail_high - tail_low) / 2)


def verlinde_asymptotic_constant(genus: int, config: EngineConfig | None = None) -> float:
    """Leading coefficient 2 zeta(2g-2) / (2^(g-1) pi^(2g-2)) of the count in k."""
    if genus < 2:
        raise GenusRangeError(f"Asymptotic constant needs genus >= 2, got {genus}")
    config = resolve_config(config)
    zeta, _ = zeta_series(2 * genus - 2, config.zeta_terms)
    mp = MPContext()
    return float(2 * zeta / (2 ** (genus - 1) * mp.pi ** (2 * genus - 2)))


def _enumeration_feasible(
    graph: TrivalentGraph, level: int, config: EngineConfig
) -> bool:
    return (
        unrestricted_label_space_size(graph, level)
        <= config.enumeration_label_space_limit
    )


def verify_rank_identity(
    genus: int,
    level: int,
    config: EngineConfig | None = None,
    graphs: list[TrivalentGraph] | None = None,
) -> CountReport:
    """
    Reconcile the three counts of admissible weights.

    Contraction runs on every graph (every isomorphism class of ``genus``
    unless ``graphs`` is given); enumeration runs on those whose label space
    fits ``config.enumeration_label_space_limit``. Errors propagate; no
    partial report is returned.
    """
    config = resolve_config(config)
    _check_arguments(genus, level)
    if graphs is None:
        graphs = enumerate_trivalent_graphs(genus, config)
    if not graphs:
        raise InputValidationError("Verification needs at least one graph")
    for graph in graphs:
        if graph.genus != genus:
            raise GenusRangeError(
                f"Graph of genus {graph.genus} passed to genus {genus} verification"
            )

    formula = verlinde_rank(genus, level, config)
    contraction: dict[str, int] = {}
    enumeration: dict[str, int] = {}
    for graph in graphs:
        key = canonical_certificate(graph).text
        contraction[key] = fusion_count_contraction(graph, level, config)
        if _enumeration_feasible(graph, level, config):
            enumeration[key] = len(enumerate_weights(graph, level, config))

    first = next(iter(contraction))
    report = CountReport(
        genus=genus,
        level=level,
        graph=first if len(graphs) == 1 else None,
        count_enumeration=enumeration.get(first),
        count_contraction=contraction[first],
        count_formula=formula.value,
        formula_radius=formula.radius,
        contraction_by_graph=contraction,
        enumeration_by_graph=enumeration,
    )
    log = logger.info if report.agreement else logger.error
    log(
        f"Genus {genus} level {level}: formula {formula.value}, contraction "
        f"{sorted(set(contraction.values()))} over {len(contraction)} graphs, "
        f"enumeration on {len(enumeration)} graphs, agreement {report.agreement}"
    )
    return report
