"""Exception types raised by the solvers and loaders."""


class MinCostIDError(Exception):
    """Base class for all package errors."""


class GraphError(MinCostIDError, ValueError):
    """Malformed graph input (cycle, bad index, asymmetric bidirected edge...)."""


class PreconditionError(MinCostIDError, ValueError):
    """An algorithm was called on an input outside its domain."""


class InfeasibleError(MinCostIDError):
    """No finite-cost intervention identifies the target."""


class ResourceLimitError(MinCostIDError):
    """A configured search budget (hedges, partitions, subsets) was exceeded."""
