"""Exception types shared across the package."""


class DiffChainError(Exception):
    """Base class for all errors raised by this package."""


class RangeError(DiffChainError):
    """An element index is outside the carrier 0..n-1."""


class CycleError(DiffChainError):
    """A cover relation contains a directed cycle."""


class NotUpsetError(DiffChainError):
    """A set that must be upward closed is not."""


class NotDecreasingError(DiffChainError):
    """A chain that must decrease under inclusion does not."""


class TargetMismatchError(DiffChainError):
    """A difference chain does not evaluate to the required target set."""


class NotSublatticeError(DiffChainError):
    """A family of sets is not a bounded sublattice of the upset lattice."""


class CapacityError(DiffChainError):
    """A construction would exceed a configured size guard."""


class AlphabetMismatchError(DiffChainError):
    """Two automata or homomorphisms disagree on their alphabets."""
