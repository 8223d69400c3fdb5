"""Simultaneous-iteration kernel.

Weierstrass corrections W_i(z) = f(z_i) / prod_{j != i} (z_i - z_j), the
separation quantities d_i(z) and delta(z), the scalar quality measure
E(z) = ||W(z)/d(z)||_p, and one-step maps for the three iterations:

  Weierstrass        z_i' = z_i - W_i(z)
  Ehrlich            z_i' = z_i - f(z_i) / (f'(z_i) - f(z_i) * sum_{j!=i} 1/(z_i - z_j))
  Ehrlich (BS form)  z_i' = z_i - W_i / (1 + sum_{j!=i} W_j / (z_i - z_j))
  Nourein            z_i' = z_i - W_i / (1 + sum_{j!=i} W_j / (z_i - z_j - W_i))

The two Ehrlich forms are algebraically identical; the BS form is the public
default since it needs no derivative evaluations.  Steps are total-step: every
component reads the same input vector, never a partially updated one.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .errors import (
    DistinctnessViolation,
    PostStepCollision,
    ShiftedCollision,
    SingularDenominator,
)
from .poly import MonicPolynomial, evaluate, evaluate_derivative

# Absolute floors below which a configuration is treated as degenerate.  The
# theorems guarantee well-definedness under their hypotheses; outside them we
# fail loudly instead of producing Inf/NaN.
DISTINCTNESS_TOL = 1e-30
DENOMINATOR_TOL = 1e-30


class Method(str, Enum):
    """The iteration selector used throughout the library and the CLI."""

    WEIERSTRASS = "weierstrass"
    EHRLICH = "ehrlich"
    EHRLICH_DERIVATIVE = "ehrlich-derivative"
    NOUREIN = "nourein"


@dataclass(frozen=True)
class ApproximationVector:
    """A point of C^n with pairwise-distinct components; the iterate."""

    points: tuple[complex, ...]

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(complex(p) for p in self.points))

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, i):
        return self.points[i]


Pointlike = "ApproximationVector | Sequence[complex]"


def as_points(z) -> tuple[complex, ...]:
    """Normalize an ApproximationVector or plain sequence to a tuple of complex."""
    if isinstance(z, ApproximationVector):
        return z.points
    return tuple(complex(p) for p in z)


@dataclass(frozen=True)
class NormParameter:
    """Holder norm index p in [1, inf] with its dual q, 1/p + 1/q = 1.

    All p in {1, inf} degeneracies flow through inv_p / inv_q: the exponent
    1/q is taken to be 0 when q = inf, so x**(1/q) evaluates to 1 for x > 0.
    """

    p: float
    q: float
    inv_p: float
    inv_q: float

    @classmethod
    def of(cls, p) -> "NormParameter":
        if isinstance(p, str):
            text = p.strip().lower()
            p = math.inf if text in ("inf", "infinity", "oo") else float(text)
        p = float(p)
        if math.isnan(p) or p < 1.0:
            raise ValueError(f"norm parameter p must lie in [1, inf], got {p}")
        if math.isinf(p):
            q = 1.0
        elif p == 1.0:
            q = math.inf
        else:
            q = p / (p - 1.0)
        inv_p = 0.0 if math.isinf(p) else 1.0 / p
        inv_q = 0.0 if math.isinf(q) else 1.0 / q
        return cls(p=p, q=q, inv_p=inv_p, inv_q=inv_q)

    def norm(self, values: Iterable) -> float:
        """The p-norm of a vector of real or complex scalars."""
        mags = [abs(v) for v in values]
        if not mags:
            return 0.0
        if math.isinf(self.p):
            return max(mags)
        if self.p == 1.0:
            return math.fsum(mags)
        return math.fsum(m**self.p for m in mags) ** (1.0 / self.p)

    def label(self) -> str:
        return "inf" if math.isinf(self.p) else format(self.p, "g")


@dataclass(frozen=True)
class StepQuantities:
    """Everything one step of any method needs to know about an iterate."""

    corrections: tuple[complex, ...]
    separations: tuple[float, ...]
    min_separation: float
    quality: float  # E(z) = ||W/d||_p
    correction_norm: float  # ||W(z)||_p


def separations(z) -> tuple[tuple[float, ...], float]:
    """Per-component nearest-neighbour distances d_i(z) and their minimum delta(z)."""
    points = as_points(z)
    n = len(points)
    if n < 2:
        raise ValueError("separations requires at least two components")
    d = []
    for i in range(n):
        d.append(min(abs(points[i] - points[j]) for j in range(n) if j != i))
    return tuple(d), min(d)


def _require_distinct(points: tuple[complex, ...]) -> None:
    n = len(points)
    for i in range(n):
        for j in range(i + 1, n):
            if abs(points[i] - points[j]) <= DISTINCTNESS_TOL:
                raise DistinctnessViolation(
                    f"components {i} and {j} coincide: "
                    f"|z_{i} - z_{j}| = {abs(points[i] - points[j]):.3e}"
                )


def weierstrass_corrections(f: MonicPolynomial, z) -> tuple[complex, ...]:
    """W_i(z) = f(z_i) / prod_{j != i} (z_i - z_j) for each component."""
    points = as_points(z)
    if len(points) != f.degree:
        raise ValueError(
            f"approximation vector has {len(points)} components "
            f"for a degree-{f.degree} polynomial"
        )
    _require_distinct(points)
    out = []
    for i, zi in enumerate(points):
        denom = 1.0 + 0.0j
        for j, zj in enumerate(points):
            if j != i:
                denom *= zi - zj
        out.append(evaluate(f, zi) / denom)
    return tuple(out)


def quality_measure(f: MonicPolynomial, z, norm: NormParameter) -> float:
    """E(z): the p-norm of the vector (|W_1|/d_1, ..., |W_n|/d_n)."""
    w = weierstrass_corrections(f, z)
    d, _ = separations(z)
    return norm.norm(abs(wi) / di for wi, di in zip(w, d))


def step_quantities(f: MonicPolynomial, z, norm: NormParameter) -> StepQuantities:
    """Corrections, separations, E(z) and ||W||_p in one pass."""
    w = weierstrass_corrections(f, z)
    d, delta = separations(z)
    return StepQuantities(
        corrections=w,
        separations=d,
        min_separation=delta,
        quality=norm.norm(abs(wi) / di for wi, di in zip(w, d)),
        correction_norm=norm.norm(w),
    )


def _warn_on_collision(points: tuple[complex, ...]) -> None:
    n = len(points)
    for i in range(n):
        for j in range(i + 1, n):
            if abs(points[i] - points[j]) <= DISTINCTNESS_TOL:
                warnings.warn(
                    f"step produced coincident components {i} and {j}",
                    PostStepCollision,
                    stacklevel=3,
                )
                return


def step_weierstrass(f: MonicPolynomial, z) -> tuple[complex, ...]:
    """One total step z' = z - W(z)."""
    points = as_points(z)
    w = weierstrass_corrections(f, points)
    out = tuple(zi - wi for zi, wi in zip(points, w))
    _warn_on_collision(out)
    return out


def step_ehrlich_derivative(f: MonicPolynomial, z) -> tuple[complex, ...]:
    """One Ehrlich step in derivative form."""
    points = as_points(z)
    if len(points) != f.degree:
        raise ValueError("component count does not match polynomial degree")
    _require_distinct(points)
    out = []
    for i, zi in enumerate(points):
        fi = evaluate(f, zi)
        if fi == 0:
            out.append(zi)
            continue
        recip_sum = sum(1.0 / (zi - zj) for j, zj in enumerate(points) if j != i)
        denom = evaluate_derivative(f, zi) - fi * recip_sum
        if abs(denom) <= DENOMINATOR_TOL:
            raise SingularDenominator(i, abs(denom))
        out.append(zi - fi / denom)
    out = tuple(out)
    _warn_on_collision(out)
    return out


def step_ehrlich(f: MonicPolynomial, z) -> tuple[complex, ...]:
    """One Ehrlich step in Boersch-Supan form (Weierstrass corrections only)."""
    points = as_points(z)
    w = weierstrass_corrections(f, points)
    out = []
    for i, zi in enumerate(points):
        if w[i] == 0:
            out.append(zi)
            continue
        denom = 1.0 + sum(
            w[j] / (zi - zj) for j, zj in enumerate(points) if j != i
        )
        if abs(denom) <= DENOMINATOR_TOL:
            raise SingularDenominator(i, abs(denom))
        out.append(zi - w[i] / denom)
    out = tuple(out)
    _warn_on_collision(out)
    return out


def step_nourein(f: MonicPolynomial, z) -> tuple[complex, ...]:
    """One Nourein step: Boersch-Supan with Weierstrass-shifted differences."""
    points = as_points(z)
    w = weierstrass_corrections(f, points)
    out = []
    for i, zi in enumerate(points):
        if w[i] == 0:
            out.append(zi)
            continue
        denom = 1.0 + 0.0j
        for j, zj in enumerate(points):
            if j == i:
                continue
            shifted = zi - zj - w[i]
            if abs(shifted) <= DISTINCTNESS_TOL:
                raise ShiftedCollision(i, j, abs(shifted))
            denom += w[j] / shifted
        if abs(denom) <= DENOMINATOR_TOL:
            raise SingularDenominator(i, abs(denom))
        out.append(zi - w[i] / denom)
    out = tuple(out)
    _warn_on_collision(out)
    return out


STEP_FUNCTIONS = {
    Method.WEIERSTRASS: step_weierstrass,
    Method.EHRLICH: step_ehrlich,
    Method.EHRLICH_DERIVATIVE: step_ehrlich_derivative,
    Method.NOUREIN: step_nourein,
}


def step(method: Method, f: MonicPolynomial, z) -> tuple[complex, ...]:
    """One step of the selected method."""
    return STEP_FUNCTIONS[Method(method)](f, z)
