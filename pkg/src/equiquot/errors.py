"""Exception hierarchy.

Every error carries an ``exit_code`` so the command line can map failures
to the documented statuses (1 verdict failure, 2 input error, 3 budget).
"""


class EquiquotError(Exception):
    exit_code = 2


class InvalidInput(EquiquotError, ValueError):
    exit_code = 2


class ElementNotInGroup(InvalidInput):
    pass


class NotASubgroup(InvalidInput):
    pass


class PointNotInSet(InvalidInput):
    pass


class GroupMismatch(InvalidInput):
    pass


class ActionNotHomomorphism(InvalidInput):
    pass


class HypothesesViolated(InvalidInput):
    pass


class TorsionInSecondFactor(InvalidInput):
    pass


class DataNotExact(InvalidInput):
    pass


class DifferentialError(InvalidInput):
    """Bidegree mismatch, ``d∘d ≠ 0``, or a differential that is not torsion-valued."""


class BudgetExceeded(EquiquotError):
    exit_code = 3


class VerificationFailure(EquiquotError):
    """An exhaustive check failed; this indicates a bug, never bad luck."""

    exit_code = 1


class ModulusSearchFailure(EquiquotError):
    exit_code = 1


class Mismatch(VerificationFailure):
    pass
