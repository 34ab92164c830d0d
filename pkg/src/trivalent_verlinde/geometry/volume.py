"""Reproducible Monte Carlo volume of a moment polytope."""

import logging
import math
from dataclasses import dataclass

import numpy as np
from mpmath.ctx_mp import MPContext

from ..config import EngineConfig, resolve_config
from ..core.verlinde import zeta_series
from ..exceptions import GenusRangeError, InputValidationError
from ..utils.parallel import ordered_map
from .polytope import Polytope

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class VolumeEstimate:
    """Hit-rate volume estimate; stderr is sample sd / sqrt(samples)."""

    mean: float
    stderr: float
    samples: int
    seed: int
    hits: int

    def agrees_with(self, value: float, sigmas: float = 3.0) -> bool:
        return abs(self.mean - value) <= sigmas * self.stderr

    def agrees_with_estimate(self, other: "VolumeEstimate", sigmas: float = 3.0) -> bool:
        """Agreement within ``sigmas`` combined standard errors."""
        combined = math.hypot(self.stderr, other.stderr)
        return abs(self.mean - other.mean) <= sigmas * combined


def _chunk_sizes(samples: int, chunk_size: int) -> list[int]:
    full, rest = divmod(samples, chunk_size)
    return [chunk_size] * full + ([rest] if rest else [])


def volume_mc(
    polytope: Polytope,
    samples: int,
    seed: int | None = None,
    config: EngineConfig | None = None,
) -> VolumeEstimate:
    """
    Estimate the Euclidean volume by uniform sampling of the coordinate box.

    Samples are split into fixed-size chunks, each with its own child of
    ``SeedSequence(seed)``; chunks may run on several workers and the exact
    integer hit counts are summed, so the result depends only on
    (samples, seed, chunk size).

    Args:
        polytope: Inequality system to measure
        samples: Number of uniform points, at least ``config.mc_min_samples``
        seed: Root seed, ``config.seed`` when omitted
        config: Engine configuration (chunk size, workers)

    Returns:
        VolumeEstimate in the polytope's own scale
    """
    config = resolve_config(config)
    if seed is None:
        seed = config.seed
    if samples < config.mc_min_samples:
        raise InputValidationError(
            f"Monte Carlo needs at least {config.mc_min_samples} samples, got {samples}"
        )

    matrix, bounds = polytope.as_arrays()
    box_upper = float(polytope.box_upper)
    box_volume = box_upper**polytope.dimension
    sizes = _chunk_sizes(samples, config.mc_chunk_size)
    children = np.random.SeedSequence(seed).spawn(len(sizes))

    def count_hits(job: tuple[int, np.random.SeedSequence]) -> int:
        size, child = job
        rng = np.random.default_rng(child)
        points = rng.random((size, polytope.dimension)) * box_upper
        inside = np.all(points @ matrix.T <= bounds, axis=1)
        return int(np.count_nonzero(inside))

    hits = sum(ordered_map(count_hits, list(zip(sizes, children)), config.workers))

    rate = hits / samples
    sample_sd = math.sqrt(rate * (1.0 - rate) * samples / (samples - 1))
    estimate = VolumeEstimate(
        mean=box_volume * rate,
        stderr=box_volume * sample_sd / math.sqrt(samples),
        samples=samples,
        seed=seed,
        hits=hits,
    )
    logger.info(
        f"Volume estimate {estimate.mean:.6f} +/- {estimate.stderr:.6f} "
        f"({hits}/{samples} hits, {len(sizes)} chunks)"
    )
    return estimate


def zeta_volume_value(genus: int, config: EngineConfig | None = None) -> float:
    """2 zeta(2g-2) / (2 pi)^(g-1), with zeta by direct series summation."""
    if genus < 2:
        raise GenusRangeError(f"Volume value needs genus >= 2, got {genus}")
    config = resolve_config(config)
    zeta, _ = zeta_series(2 * genus - 2, config.zeta_terms)
    mp = MPContext()
    return float(2 * zeta / (2 * mp.pi) ** (genus - 1))
