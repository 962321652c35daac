"""Exception hierarchy shared by all solvers."""


class TardyError(Exception):
    """Base class for every error raised by this package."""


class InvalidInstance(TardyError, ValueError):
    """Job data violates the domain rules (negative values, bad ids, ...)."""


class InstanceOverflow(InvalidInstance):
    """Sums over the instance do not fit the 62-bit headroom."""


class EmptyInstance(TardyError, ValueError):
    pass


class TooLarge(TardyError):
    """Instance exceeds the size cap of an exhaustive method."""


class NonUniformWeights(TardyError, ValueError):
    pass


class BudgetExceeded(TardyError):
    """A solver ran past its work budget (nodes, states, lattice points)."""


class FormulationBug(TardyError, AssertionError):
    """A model solution did not map to a feasible schedule.

    This signals a defect in a builder or solver, never a bad input.
    """
