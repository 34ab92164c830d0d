"""Graphs, admissible weights and the three ways of counting them."""

from .contraction import fusion_count_contraction
from .graph import TrivalentGraph
from .verlinde import verlinde_rank

__all__ = ["TrivalentGraph", "fusion_count_contraction", "verlinde_rank"]
