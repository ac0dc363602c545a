"""Exception hierarchy shared by the numerical kernels and the CLI."""

import enum
from dataclasses import dataclass


class PoleKind(str, enum.Enum):
    GAMMA_POLE = "gamma_pole"
    ZETA_POLE = "zeta_pole"


@dataclass(frozen=True)
class PoleInfo:
    location: complex
    kind: PoleKind


class MalmstenError(ArithmeticError):
    """Base class for every numerical failure raised by this package."""


class DomainError(MalmstenError, ValueError):
    """Argument lies outside the region where an operation is defined."""


class PoleError(DomainError):
    """Argument sits on a pole (of Gamma, zeta, or a prefactor)."""

    def __init__(self, message, info=None):
        super().__init__(message)
        self.info = info


class NearPoleError(PoleError):
    """A divisor is too close to zero for a trustworthy quotient."""


class ConvergenceError(MalmstenError):
    """An iteration ran out of budget before meeting its tolerance."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class NonFiniteError(MalmstenError):
    """An integrand returned inf or nan at an interior node."""
