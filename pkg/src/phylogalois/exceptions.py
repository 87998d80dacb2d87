"""Exception types raised across the package."""


class PhyloGaloisError(Exception):
    """Base class for all package errors."""


class InputError(PhyloGaloisError, ValueError):
    """Malformed or inconsistent input (bad taxa, mismatched n, parse errors)."""


class BoundExceededError(PhyloGaloisError):
    """A brute-force routine was asked to run above its stated size bound."""

    def __init__(self, what, n, bound):
        super().__init__(f"{what}: n={n} exceeds the brute-force bound {bound}")
        self.n = n
        self.bound = bound


class InvalidNetworkError(InputError):
    """The graph is not a valid unrooted phylogenetic network."""


class NotOneNestedError(InputError):
    """A 1-nested network was required."""


class NotCircularError(InputError):
    """A circular split system was required."""


class KalmansonError(InputError):
    """A distance vector violates the Kalmanson condition for a given order."""

    def __init__(self, message, quadruple=None):
        super().__init__(message)
        self.quadruple = quadruple
