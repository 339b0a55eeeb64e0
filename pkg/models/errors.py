"""Exceptions raised by the verification library."""


class VerificationError(Exception):
    """Base class for all verifier errors."""


class DomainError(VerificationError, ValueError):
    """Input outside the domain of an operation (precondition violated)."""


class NonUnitDivisorError(DomainError):
    """Divisor whose leading coefficient is not a unit of the coefficient ring."""


class InexactDivisionError(VerificationError):
    """A division that a hypothesis requires to be exact left a remainder."""


class NonIntegralTermError(VerificationError):
    """A summand that must be an integer is not."""


class ConsistencyError(VerificationError):
    """Two independent computations of the same value disagree."""
