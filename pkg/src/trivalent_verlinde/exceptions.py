"""Custom exceptions for the counting engine."""


class TrivalentVerlindeError(Exception):
    """Base exception for all engine errors."""


class InputValidationError(TrivalentVerlindeError):
    """Raised when an argument violates a documented precondition."""


class GraphValidationError(InputValidationError):
    """Raised when a graph is not a connected trivalent multigraph of its genus."""


class EdgeEndpointError(GraphValidationError):
    """Raised when an edge refers to a vertex that does not exist."""


class DegreeError(GraphValidationError):
    """Raised when a vertex does not have incidence exactly 3."""


class DisconnectedGraphError(GraphValidationError):
    """Raised when the graph has more than one connected component."""


class GraphCountError(GraphValidationError):
    """Raised when vertex or edge counts do not match 2g-2 and 3g-3."""


class GenusMismatchError(GraphValidationError):
    """Raised when the first Betti number differs from the declared genus."""


class GenusRangeError(InputValidationError):
    """Raised when a genus lies outside the supported range."""


class WeightError(InputValidationError):
    """Raised when a weight labeling does not fit its graph or level."""


class LabelRangeError(WeightError):
    """Raised when a label lies outside {0..k} or the level is below 1."""


class EdgeSetMismatchError(WeightError):
    """Raised when the labeled edge set differs from the graph's edge set."""


class DimensionMismatchError(InputValidationError):
    """Raised when a point and a polytope live in different dimensions."""


class Gamma0NamingError(InputValidationError):
    """Raised when a graph lacks the a_i / a'_i / c_i edge naming."""


class GraphFormatError(InputValidationError):
    """Raised when graph text cannot be parsed."""


class ReportFormatError(TrivalentVerlindeError):
    """Raised when a report is emitted in an unsupported format."""


class ResourceLimitError(TrivalentVerlindeError):
    """Raised when a computation would exceed a configured budget."""


class WeightCountLimitError(ResourceLimitError):
    """Raised when an enumeration would produce more weights than allowed."""


class ContractionWidthError(ResourceLimitError):
    """Raised when an intermediate tensor exceeds the memory bound."""


class BudgetExceededError(ResourceLimitError):
    """Raised when a brute-force search space exceeds its budget."""


class PrecisionError(TrivalentVerlindeError):
    """Raised when a floating evaluation cannot certify its nearest integer."""
