"""Pytest configuration and shared fixtures."""

import json
from pathlib import Path
from typing import Any

import pytest

from trivalent_verlinde import EngineConfig, TrivalentGraph, gamma0

GOLDEN_DIR = Path(__file__).parent / "fixtures" / "golden"


@pytest.fixture
def config() -> EngineConfig:
    """Default engine configuration with a small Monte Carlo floor."""
    return EngineConfig(mc_min_samples=1_000)


@pytest.fixture
def theta() -> TrivalentGraph:
    """Genus 2 theta graph: three parallel edges between two vertices."""
    return TrivalentGraph(genus=2, vertex_count=2, edges=((0, 1), (0, 1), (0, 1)))


@pytest.fixture
def dumbbell() -> TrivalentGraph:
    """Genus 2 dumbbell, which is Gamma_0(2): two loops joined by a bridge."""
    return gamma0(2)


@pytest.fixture
def gamma0_genus3() -> TrivalentGraph:
    return gamma0(3)


@pytest.fixture
def golden() -> dict[str, Any]:
    """Reference values shared by unit and integration tests."""
    with open(GOLDEN_DIR / "reference_values.json") as f:
        data: dict[str, Any] = json.load(f)
    return data


@pytest.fixture
def golden_dir() -> Path:
    return GOLDEN_DIR
