"""Moment polytope, Monte Carlo volume and lattice-point asymptotics."""

from .polytope import Polytope, polytope_of_graph

__all__ = ["Polytope", "polytope_of_graph"]
