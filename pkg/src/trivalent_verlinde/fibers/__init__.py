"""Classification of the fibres over admissible weights."""

from .classify import classify_weights
from .models import FiberInvariants, FiberStatus, GroupTag

__all__ = ["classify_weights", "FiberInvariants", "FiberStatus", "GroupTag"]
