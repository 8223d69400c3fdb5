"""Exception types shared across the package.

Numerical preconditions are enforced loudly: operations raise instead of
returning Inf/NaN, so a trace that went wrong stays diagnosable.
"""

from __future__ import annotations


class SimulrootsError(Exception):
    """Base class for all errors raised by this package."""


class DistinctnessViolation(SimulrootsError):
    """Two components of an approximation vector are (numerically) coincident."""


class SingularDenominator(SimulrootsError):
    """An iteration denominator dropped below the singularity tolerance."""

    def __init__(self, index: int, magnitude: float):
        self.index = index
        self.magnitude = magnitude
        super().__init__(
            f"denominator for component {index} has modulus {magnitude:.3e}"
        )


class ShiftedCollision(SimulrootsError):
    """A Weierstrass-shifted difference z_i - z_j - W_i is numerically zero."""

    def __init__(self, i: int, j: int, magnitude: float):
        self.i = i
        self.j = j
        self.magnitude = magnitude
        super().__init__(
            f"shifted difference for components ({i}, {j}) has modulus {magnitude:.3e}"
        )


class DomainError(SimulrootsError, ValueError):
    """Argument lies outside the interval on which a certificate function is defined."""


class NegativeDenominator(SimulrootsError):
    """A denominator factor that must be positive inside the nominal domain is not.

    Raised only when domain checks passed, so it signals an implementation bug
    rather than bad input.
    """


class Inapplicable(SimulrootsError):
    """A corollary or prior-work condition does not apply to the given (n, p)."""


class BracketFailure(SimulrootsError):
    """Bisection endpoints do not straddle a sign change."""


class CertificateNotSatisfied(SimulrootsError):
    """An operation requiring a satisfied certificate was called without one."""


class CertificateDegenerate(SimulrootsError):
    """Certificate quantities violate theta * lambda**2 < 1, so the disk ratio is undefined."""


class DegenerateBound(SimulrootsError):
    """A posteriori bound undefined because theta_k * lambda_k >= 1."""


class OracleFailure(SimulrootsError):
    """The high-precision reference solver did not meet its residual target."""


class MatchingAmbiguous(SimulrootsError):
    """Two root assignments have nearly identical total cost.

    Carries both assignments so the caller can report them.
    """

    def __init__(self, assignment_a, assignment_b, cost_a: float, cost_b: float):
        self.assignment_a = tuple(assignment_a)
        self.assignment_b = tuple(assignment_b)
        self.cost_a = cost_a
        self.cost_b = cost_b
        super().__init__(
            f"assignments {self.assignment_a} and {self.assignment_b} differ in "
            f"cost by less than 1e-15 relative ({cost_a:.17g} vs {cost_b:.17g})"
        )


class InsufficientData(SimulrootsError):
    """Too few error values above the noise floor to estimate a convergence order."""


class PostStepCollision(UserWarning):
    """Warning: a step produced a vector violating pairwise distinctness.

    Warning-grade by design; the degenerate iterate is still returned so the
    caller can display it.
    """
