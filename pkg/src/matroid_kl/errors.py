"""Exception hierarchy shared by every module in the package."""


class MatroidKLError(Exception):
    """Base class for all errors raised by matroid_kl."""


class InvalidArgument(MatroidKLError, ValueError):
    pass


class InvalidPartition(InvalidArgument):
    pass


class DivisibilityError(MatroidKLError, ArithmeticError):
    """An exact division left a remainder; some upstream identity is broken."""


class ResourceLimit(MatroidKLError):
    pass


class LatticeError(MatroidKLError, ValueError):
    """An explicit lattice of flats failed validation."""


class ConsistencyError(MatroidKLError, RuntimeError):
    """A computed result violated a self-check (degree bound, defect, positivity)."""
