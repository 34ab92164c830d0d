"""Report records and their JSON / CSV serialization."""

from .emit import emit

__all__ = ["emit"]
