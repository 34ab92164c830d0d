"""Configuration management using Pydantic."""

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

SUPPORTED_GENUS_CEILING = 6


class EngineConfig(BaseModel):
    """Configuration for the counting engine."""

    # Graph generation
    max_genus: int = Field(default=5, ge=2, le=SUPPORTED_GENUS_CEILING)

    # Enumeration budgets
    max_weight_count: int = Field(default=2_000_000, ge=1)
    enumeration_label_space_limit: int = Field(default=5_000_000, ge=1)

    # Trigonometric evaluation
    precision_bits: int = Field(default=128, ge=53, le=4096)
    max_precision_bits: int = Field(default=2048, ge=53, le=16384)
    rounding_tolerance: float = Field(default=1e-6, gt=0.0, lt=0.5)
    zeta_terms: int = Field(default=200_000, ge=1000)

    # Tensor contraction
    contraction_max_entries: int = Field(default=2**24, ge=1)

    # Monte Carlo sampling
    mc_chunk_size: int = Field(default=65_536, ge=1024)
    mc_min_samples: int = Field(default=10_000, ge=1)

    # Abelian oracle
    kummer_budget: int = Field(default=2_000_000, ge=1)

    # Execution
    workers: int = Field(default=1, ge=1)
    seed: int = Field(default=0, ge=0)

    # Coordinates: "action" is c = a/k, "weight" is w = a/2k
    scale: Literal["action", "weight"] = "action"

    @field_validator("rounding_tolerance")
    @classmethod
    def validate_rounding_tolerance(cls, v: float) -> float:
        """A certified nearest integer needs a radius well below one half."""
        if v >= 0.25:
            raise ValueError("rounding_tolerance must be below 0.25")
        return v

    @model_validator(mode="after")
    def validate_precision_range(self) -> "EngineConfig":
        """Ensure the precision ceiling is not below the starting precision."""
        if self.max_precision_bits < self.precision_bits:
            raise ValueError("max_precision_bits must be >= precision_bits")
        return self

    model_config = ConfigDict(validate_assignment=True)


DEFAULT_CONFIG = EngineConfig()


def resolve_config(config: EngineConfig | None) -> EngineConfig:
    """Return the given configuration or the shared default."""
    return config if config is not None else DEFAULT_CONFIG
