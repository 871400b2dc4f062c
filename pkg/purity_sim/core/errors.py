"""
core/errors.py — Exception hierarchy shared by every module.

Each class carries the process exit code the CLI reports for it:
  2 usage / input domain, 3 invalid spectrum or zero gap,
  4 resource cap exceeded, 5 verification failed.
"""


class PuritySimError(Exception):
    """Base class for all simulator errors."""

    exit_code: int = 1


class DomainError(PuritySimError, ValueError):
    """An argument lies outside the operation's input domain."""

    exit_code = 2


class InconsistentInputError(DomainError):
    """Arguments are individually valid but cannot come from one object (e.g. λ, μ of different tableaux)."""


class SpectrumError(PuritySimError, ValueError):
    """The probability spectrum is malformed."""

    exit_code = 3


class GapError(SpectrumError):
    """The spectrum has p_d == p_{d-1}, so no bound can be evaluated."""

    exit_code = 3


class ResourceLimitError(PuritySimError, RuntimeError):
    """An exhaustive computation would exceed its configured cap."""

    exit_code = 4


class VerificationError(PuritySimError, AssertionError):
    """Two independent computations disagree, or a checked bound failed."""

    exit_code = 5
