"""
Trivalent Verlinde - exact counting of SU(2) level-k admissible weights.

Enumerates trivalent graphs up to isomorphism, counts admissible edge
labellings by enumeration and by tensor contraction, and checks the counts
against the Verlinde formula, the polytope volume and the Abelian oracles.
"""

from .config import EngineConfig
from .core.generator import enumerate_trivalent_graphs, gamma0
from .core.graph import TrivalentGraph
from .core.verlinde import verify_rank_identity, verlinde_rank
from .core.weights import WeightVector, enumerate_weights, is_admissible
from .exceptions import (
    GraphValidationError,
    InputValidationError,
    PrecisionError,
    ResourceLimitError,
    TrivalentVerlindeError,
)

__version__ = "0.1.0"
__all__ = [
    "EngineConfig",
    "TrivalentGraph",
    "WeightVector",
    "enumerate_trivalent_graphs",
    "gamma0",
    "enumerate_weights",
    "is_admissible",
    "verlinde_rank",
    "verify_rank_identity",
    "TrivalentVerlindeError",
    "InputValidationError",
    "GraphValidationError",
    "ResourceLimitError",
    "PrecisionError",
]
