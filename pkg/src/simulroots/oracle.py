"""Ground truth for desk-scale verification.

Reference roots are computed by running the Weierstrass iteration in software
extended precision (mpmath, >= 128 bits) from points equally spaced on the
Cauchy circle of radius 1 + max|c_i|, rotated by a small irrational angle so
symmetric configurations cannot stall.  Only this module pays the extended
precision cost; the iteration kernels stay in double precision.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from statistics import median
from typing import Sequence

import mpmath
import numpy as np
from scipy.optimize import linear_sum_assignment

from .errors import InsufficientData, MatchingAmbiguous, OracleFailure
from .poly import MonicPolynomial
from .simul import NormParameter

DEFAULT_PRECISION_BITS = 128
MIN_ROOT_SEPARATION = 1e-6

# Ratios are trusted only while errors sit two decades above the double
# precision saturation level of the iterates.
NOISE_FLOOR = 1e-13


@dataclass(frozen=True)
class ReferenceRoots:
    """Roots of f at extended precision, with residuals as evidence."""

    roots: tuple  # mpmath.mpc values
    residuals: tuple[float, ...]
    precision_bits: int

    @property
    def as_complex(self) -> tuple[complex, ...]:
        return tuple(complex(r) for r in self.roots)


@dataclass(frozen=True)
class OrderEstimate:
    """Empirical convergence order from an error sequence.

    ratios holds (k, rho_k) with rho_k = ln(e_{k+1}/e_k) / ln(e_k/e_{k-1}),
    computed only where all three errors sit above the noise floor; plateau
    is their median.
    """

    ratios: tuple[tuple[int, float], ...]
    plateau: float


def _mp_eval(coeffs, x):
    acc = mpmath.mpc(1)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _weierstrass_sweep(coeffs, z, n):
    out = []
    max_step = mpmath.mpf(0)
    for i in range(n):
        denom = mpmath.mpc(1)
        for j in range(n):
            if j != i:
                denom *= z[i] - z[j]
        w = _mp_eval(coeffs, z[i]) / denom
        out.append(z[i] - w)
        max_step = max(max_step, abs(w))
    return out, max_step


def reference_roots(
    f: MonicPolynomial,
    precision_bits: int = DEFAULT_PRECISION_BITS,
    max_iterations: int = 2000,
    restarts: int = 8,
    seed: int = 0,
) -> ReferenceRoots:
    """All n roots of f at >= 128-bit working precision.

    Runs the Weierstrass iteration to residual convergence; on stagnation the
    start circle is re-rotated and jittered from a seeded generator.  The
    residual target is 1e-30 relative to the coefficient magnitudes.  Also
    verifies the roots are separated by more than 1e-6, since everything this
    oracle certifies presupposes simple zeros.
    """
    n = f.degree
    bits = max(precision_bits, DEFAULT_PRECISION_BITS)
    coeff_scale = max(1.0, max(abs(c) for c in f.coefficients))
    target = 1e-30 * coeff_scale
    rng = random.Random(seed)
    with mpmath.workprec(bits + 16):
        coeffs = [mpmath.mpc(c) for c in f.coefficients]
        radius = mpmath.mpf(1) + max(abs(c) for c in coeffs)
        step_tol = mpmath.mpf(2) ** (-bits + 8) * radius
        for attempt in range(restarts):
            angle = mpmath.mpf(1) / mpmath.sqrt(2) + attempt * mpmath.mpf(
                rng.uniform(0.1, 0.9)
            )
            z = [
                radius * mpmath.exp(mpmath.mpc(0, 1) * (2 * mpmath.pi * i / n + angle))
                for i in range(n)
            ]
            previous = mpmath.inf
            stalled = 0
            for _ in range(max_iterations):
                z, max_step = _weierstrass_sweep(coeffs, z, n)
                if max_step < step_tol:
                    break
                if max_step > previous * mpmath.mpf("0.99999"):
                    stalled += 1
                    if stalled > 50:
                        break
                else:
                    stalled = 0
                previous = max_step
            residuals = [abs(_mp_eval(coeffs, zi)) for zi in z]
            if max(residuals) <= target:
                separation = min(
                    abs(z[i] - z[j]) for i in range(n) for j in range(i + 1, n)
                )
                if separation <= MIN_ROOT_SEPARATION:
                    raise OracleFailure(
                        f"reference roots separated by only {float(separation):.3e}; "
                        "the certificates presuppose simple, well-separated zeros"
                    )
                return ReferenceRoots(
                    roots=tuple(z),
                    residuals=tuple(float(r) for r in residuals),
                    precision_bits=bits,
                )
    raise OracleFailure(
        f"residual target {target:.3e} not met within {restarts} restarts "
        f"of {max_iterations} iterations"
    )


def match_to_roots(points: Sequence[complex], ref: ReferenceRoots) -> tuple[int, ...]:
    """Minimal-total-distance assignment of vector components to roots.

    Solved as a full assignment problem; raises MatchingAmbiguous when some
    transposition changes the total cost by less than 1e-15 relative.
    """
    roots = ref.as_complex
    n = len(roots)
    if len(points) != n:
        raise ValueError("component and root counts differ")
    cost = np.array(
        [[abs(complex(p) - r) for r in roots] for p in points], dtype=float
    )
    rows, cols = linear_sum_assignment(cost)
    assignment = [0] * n
    for r, c in zip(rows, cols):
        assignment[r] = int(c)
    total = float(cost[rows, cols].sum())
    scale = max(total, float(cost.max()), 1e-300)
    for i in range(n):
        for j in range(i + 1, n):
            swapped = (
                total
                - cost[i, assignment[i]]
                - cost[j, assignment[j]]
                + cost[i, assignment[j]]
                + cost[j, assignment[i]]
            )
            if swapped - total < 1e-15 * scale:
                other = list(assignment)
                other[i], other[j] = other[j], other[i]
                raise MatchingAmbiguous(assignment, other, total, swapped)
    return tuple(assignment)


def true_errors(
    iterates: Sequence[Sequence[complex]],
    ref: ReferenceRoots,
    norm: NormParameter,
) -> list[float]:
    """||z^k - xi||_p per iterate, with xi matched once on the final iterate.

    Distances are formed at the oracle's precision, so errors are measured
    faithfully down to the double rounding floor of the iterates themselves.
    """
    if not iterates:
        return []
    assignment = match_to_roots(tuple(iterates[-1]), ref)
    out = []
    with mpmath.workprec(ref.precision_bits):
        for z in iterates:
            dists = [
                float(abs(mpmath.mpc(complex(zi)) - ref.roots[assignment[i]]))
                for i, zi in enumerate(z)
            ]
            out.append(norm.norm(dists))
    return out


def estimate_order(
    errors: Sequence[float], noise_floor: float = NOISE_FLOOR
) -> OrderEstimate:
    """Empirical convergence order of a decreasing error sequence.

    A ratio rho_k needs e_{k-1}, e_k, e_{k+1} all above the noise floor; at
    least one such triple (three usable errors) is required, otherwise
    InsufficientData is raised.
    """
    usable = [e is not None and e > noise_floor for e in errors]
    ratios = []
    for k in range(1, len(errors) - 1):
        if not (usable[k - 1] and usable[k] and usable[k + 1]):
            continue
        down_prev = math.log(errors[k] / errors[k - 1])
        down_next = math.log(errors[k + 1] / errors[k])
        if down_prev == 0.0:
            continue
        ratios.append((k, down_next / down_prev))
    if not ratios:
        raise InsufficientData(
            f"no error triple above the noise floor {noise_floor:.3e} "
            f"in sequence of length {len(errors)}"
        )
    return OrderEstimate(
        ratios=tuple(ratios), plateau=float(median(r for _, r in ratios))
    )
