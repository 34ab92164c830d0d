"""Jacobian and Kummer oracles."""

from .oracle import abelian_comparison, kummer_even_rank, kummer_grid, theta_rank

__all__ = ["abelian_comparison", "kummer_even_rank", "kummer_grid", "theta_rank"]
