"""Exception types raised by the library.

Each validation or precondition failure has its own class so callers can
match on the exact condition; messages carry the witness data in text and,
where useful, as attributes.
"""

from __future__ import annotations


class FinitopError(Exception):
    """Base class for all library errors."""


# --- topology / preorder validation ---------------------------------------

class TopologyError(FinitopError):
    """A subset family fails the topology axioms."""


class MissingEmptyOrFull(TopologyError):
    pass


class NotClosedUnderUnion(TopologyError):
    def __init__(self, a, b):
        self.pair = (a, b)
        super().__init__(f"union of {sorted(a)} and {sorted(b)} is not in the family")


class NotClosedUnderIntersection(TopologyError):
    def __init__(self, a, b):
        self.pair = (a, b)
        super().__init__(
            f"intersection of {sorted(a)} and {sorted(b)} is not in the family"
        )


class CarrierTooLarge(FinitopError):
    pass


class CarrierTooLargeForSearch(FinitopError):
    pass


class NotReflexive(FinitopError):
    def __init__(self, point):
        self.point = point
        super().__init__(f"relation is not reflexive at point {point}")


class NotTransitive(FinitopError):
    def __init__(self, x, y, z):
        self.triple = (x, y, z)
        super().__init__(f"transitivity fails on {x} <= {y} <= {z}")


class InvalidPartition(FinitopError):
    pass


# --- groups ----------------------------------------------------------------

class InvalidGroupTable(FinitopError):
    pass


class InvalidHomomorphism(FinitopError):
    pass


class CarrierMismatch(FinitopError):
    pass


class UnknownSpec(FinitopError):
    pass


class OrderTooLarge(FinitopError):
    pass


class NotASubgroup(FinitopError):
    pass


# --- operation preconditions -----------------------------------------------

class NotSurjective(FinitopError):
    pass


class NotSemitopological(FinitopError):
    pass


class DomainNotSemitopological(FinitopError):
    pass


class NotTopologyPreserving(FinitopError):
    pass


# --- enumeration / verifier -------------------------------------------------

class SizeTooLarge(FinitopError):
    pass


class UnknownTarget(FinitopError):
    pass


class UnknownSuite(FinitopError):
    pass


class BoundsTooLarge(FinitopError):
    pass
