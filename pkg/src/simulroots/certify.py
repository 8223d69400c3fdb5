"""Convergence certificates checkable at the initial point alone.

Each iteration comes with a gauge function phi on an explicit interval
[0, domain_bound): if the quality measure E(z0) lies in the interval and
phi(E(z0)) clears 1 (strictly for localization, non-strictly for Ehrlich and
Nourein), convergence is guaranteed, with a definite order when the
inequality is strict.  The companion functions psi and mu supply the decay
and scale factors of the geometric error bounds.

Everything here is pure real arithmetic in double precision.  The constants

    a = (n - 1)**(1/q),  b = 2**(1/q),  m = a + b + 1,  1/p + 1/q = 1

are bundled in MethodParams; the p in {1, inf} degeneracies (x**0 == 1) are
handled once, in NormParameter.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

import numpy as np
from scipy.optimize import bisect

from .errors import (
    BracketFailure,
    DomainError,
    Inapplicable,
    NegativeDenominator,
)
from .poly import MonicPolynomial
from .simul import Method, NormParameter, quality_measure

__all__ = [
    "MethodParams",
    "Certificate",
    "CorollaryFamily",
    "ThresholdEquation",
    "PriorWork",
    "contraction_factor_localization",
    "contraction_factor_ehrlich",
    "contraction_factor_nourein",
    "bound_factors_ehrlich",
    "bound_factors_nourein",
    "localization_domain_bound",
    "ehrlich_domain_bound",
    "nourein_domain_bound",
    "certify_localization",
    "certify_ehrlich",
    "certify_nourein",
    "certify",
    "corollary_threshold",
    "threshold_offset_for_slope",
    "solve_l1_threshold",
    "l1_equation_lhs",
    "majorant_dominance",
    "DominanceResult",
    "linear_threshold_peak",
    "lp_radius_contraction_ehrlich",
    "lp_radius_contraction_nourein",
    "condition_ehrlich_inf",
    "condition_nourein_inf",
    "prior_condition",
]


@dataclass(frozen=True)
class MethodParams:
    """Degree- and norm-derived constants shared by all certificate functions."""

    n: int
    norm: NormParameter
    a: float
    b: float
    m: float

    @classmethod
    def for_degree(cls, n: int, norm: NormParameter) -> "MethodParams":
        if n < 2:
            raise ValueError(f"degree must be >= 2, got {n}")
        a = float(n - 1) ** norm.inv_q
        b = 2.0**norm.inv_q
        return cls(n=n, norm=norm, a=a, b=b, m=a + b + 1.0)


def _power_n_minus_1(t, n: int):
    """(1 + t)**(n - 1), via exp((n-1) log1p t) for large n.

    These powers approach e**((n-1) t) and dominate certificate sensitivity;
    the log route avoids pow-loop error accumulation once n - 1 > 30.
    """
    if n - 1 > 30:
        return np.exp((n - 1) * np.log1p(t))
    return (1.0 + t) ** (n - 1)


# --------------------------------------------------------------------------
# Gauge functions.  The *_raw variants assume their argument is already inside
# the domain and accept numpy arrays; the public scalar wrappers validate.
# --------------------------------------------------------------------------


def _localization_raw(x, params: MethodParams):
    a = params.a
    b = params.b
    a_dual = float(params.n - 1) ** params.norm.inv_p
    shrink = 1.0 - b * x
    return (
        (a * x) / ((1.0 - x) * shrink)
        * _power_n_minus_1(x / (a_dual * shrink), params.n)
    )


def _ehrlich_raw(x, params: MethodParams):
    a = params.a
    b = params.b
    first = 1.0 - (a + 1.0) * x
    second = 1.0 - (a + b) * x
    return (
        (a * x * x) / (first * second)
        * _power_n_minus_1((a * x) / ((params.n - 1) * second), params.n)
    )


def _nourein_raw(x, params: MethodParams):
    a = params.a
    b = params.b
    m = params.m
    quad1 = 1.0 - m * x + b * x * x
    quad2 = 1.0 - (a + 2.0) * x + x * x
    return (
        (a * a * x**3) / (quad1 * quad2)
        * _power_n_minus_1(a * (x - x * x) / ((params.n - 1) * quad1), params.n)
    )


def localization_domain_bound(params: MethodParams) -> float:
    """Right endpoint 1 / 2**(1/q) of the localization gauge's domain."""
    return 1.0 / params.b


def ehrlich_domain_bound(params: MethodParams) -> float:
    """Right endpoint 1 / (a + b); since b >= 1 this also keeps 1 - (a+1)x > 0."""
    return 1.0 / (params.a + params.b)


def nourein_domain_bound(params: MethodParams) -> float:
    """Smaller root 2 / (m + sqrt(m**2 - 4b)) of b x**2 - m x + 1 = 0."""
    m = params.m
    return 2.0 / (m + math.sqrt(m * m - 4.0 * params.b))


def _check_domain(x: float, bound: float, what: str) -> None:
    if not (0.0 <= x < bound):
        raise DomainError(f"{what} requires 0 <= x < {bound:.17g}, got {x:.17g}")


def contraction_factor_localization(x: float, params: MethodParams) -> float:
    """Gauge for the zero-localization certificate, defined on [0, 1/2**(1/q))."""
    _check_domain(x, localization_domain_bound(params), "localization gauge")
    return float(_localization_raw(x, params))


def contraction_factor_ehrlich(x: float, params: MethodParams) -> float:
    """Gauge for the Ehrlich certificate, defined on [0, 1/(a+b))."""
    _check_domain(x, ehrlich_domain_bound(params), "Ehrlich gauge")
    # b >= 1 makes 1/(a+b) <= 1/(a+1); assert rather than assume.
    first = 1.0 - (params.a + 1.0) * x
    if first <= 0.0:
        raise NegativeDenominator(
            f"1 - (a+1)x = {first:.3e} <= 0 inside the nominal Ehrlich domain"
        )
    return float(_ehrlich_raw(x, params))


def contraction_factor_nourein(x: float, params: MethodParams) -> float:
    """Gauge for the Nourein certificate, defined up to the smaller root of
    b x**2 - m x + 1."""
    _check_domain(x, nourein_domain_bound(params), "Nourein gauge")
    quad1 = 1.0 - params.m * x + params.b * x * x
    quad2 = 1.0 - (params.a + 2.0) * x + x * x
    if quad1 <= 0.0 or quad2 <= 0.0:
        raise NegativeDenominator(
            f"quadratic factors ({quad1:.3e}, {quad2:.3e}) not positive "
            "inside the nominal Nourein domain"
        )
    return float(_nourein_raw(x, params))


def bound_factors_ehrlich(x: float, params: MethodParams) -> tuple[float, float]:
    """Decay and scale factors (theta, mu) of the Ehrlich error bounds.

    theta(x) = (1 - (a+b) x) / (1 - a x),  mu(x) = 1 / (1 - a x).
    """
    _check_domain(x, ehrlich_domain_bound(params), "Ehrlich bound factors")
    denom = 1.0 - params.a * x
    return (1.0 - (params.a + params.b) * x) / denom, 1.0 / denom


def bound_factors_nourein(x: float, params: MethodParams) -> tuple[float, float]:
    """Decay and scale factors (theta, mu) of the Nourein error bounds.

    theta(x) = (1 - m x + b x**2) / (1 - (a+1) x),  mu(x) = (1 - x) / (1 - (a+1) x).
    """
    bound = min(nourein_domain_bound(params), 1.0 / (params.a + 1.0))
    _check_domain(x, bound, "Nourein bound factors")
    denom = 1.0 - (params.a + 1.0) * x
    quad1 = 1.0 - params.m * x + params.b * x * x
    return quad1 / denom, (1.0 - x) / denom


# --------------------------------------------------------------------------
# Certificates
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class Certificate:
    """Per-method verdict evaluated at an initial point.

    quality is E(z0); contraction, decay, scale are the gauge and bound
    factors evaluated there, or None when E(z0) falls outside the gauge's
    domain.  guaranteed_order is set only when the certificate earns it:
    2 for the localization condition (always strict), 3 for Ehrlich and 4
    for Nourein when the gauge is strictly below 1.
    """

    method: Method
    params: MethodParams
    quality: float
    domain_bound: float
    contraction: float | None
    decay: float | None
    scale: float | None
    satisfied: bool
    strict: bool
    guaranteed_order: int | None

    def to_json(self) -> dict:
        from .trace import format_float  # deferred: trace owns float formatting

        opt = lambda v: None if v is None else format_float(v)
        return {
            "method": self.method.value,
            "n": self.params.n,
            "p": self.params.norm.label(),
            "a": format_float(self.params.a),
            "b": format_float(self.params.b),
            "m": format_float(self.params.m),
            "quality": format_float(self.quality),
            "domain_bound": format_float(self.domain_bound),
            "contraction": opt(self.contraction),
            "decay": opt(self.decay),
            "scale": opt(self.scale),
            "satisfied": self.satisfied,
            "strict": self.strict,
            "guaranteed_order": self.guaranteed_order,
        }


def _pessimistic(e: float, flag: bool) -> float:
    return math.nextafter(e, math.inf) if flag and e > 0.0 else e


def certify_localization(
    f: MonicPolynomial, z0, norm: NormParameter, pessimistic: bool = False
) -> Certificate:
    """Certificate that f has simple zeros, localized by the inclusion disks.

    Satisfied iff E(z0) < 1/2**(1/q) and the gauge at E(z0) is strictly below
    1.  Under this condition the Weierstrass iteration converges with order 2.
    """
    params = MethodParams.for_degree(f.degree, norm)
    e0 = _pessimistic(quality_measure(f, z0, norm), pessimistic)
    bound = localization_domain_bound(params)
    if e0 < bound:
        lam = contraction_factor_localization(e0, params)
        theta = 1.0 - params.b * e0
        satisfied = lam < 1.0
    else:
        lam = theta = None
        satisfied = False
    return Certificate(
        method=Method.WEIERSTRASS,
        params=params,
        quality=e0,
        domain_bound=bound,
        contraction=lam,
        decay=theta,
        scale=None,
        satisfied=satisfied,
        strict=satisfied,
        guaranteed_order=2 if satisfied else None,
    )


def certify_ehrlich(
    f: MonicPolynomial, z0, norm: NormParameter, pessimistic: bool = False
) -> Certificate:
    """Certificate for Ehrlich's iteration: E(z0) < 1/(a+b) and gauge <= 1."""
    params = MethodParams.for_degree(f.degree, norm)
    e0 = _pessimistic(quality_measure(f, z0, norm), pessimistic)
    bound = ehrlich_domain_bound(params)
    if e0 < bound:
        lam = contraction_factor_ehrlich(e0, params)
        theta, mu = bound_factors_ehrlich(e0, params)
        satisfied = lam <= 1.0
        strict = lam < 1.0
    else:
        lam = theta = mu = None
        satisfied = strict = False
    return Certificate(
        method=Method.EHRLICH,
        params=params,
        quality=e0,
        domain_bound=bound,
        contraction=lam,
        decay=theta,
        scale=mu,
        satisfied=satisfied,
        strict=strict,
        guaranteed_order=3 if strict else None,
    )


def certify_nourein(
    f: MonicPolynomial, z0, norm: NormParameter, pessimistic: bool = False
) -> Certificate:
    """Certificate for Nourein's iteration: E(z0) below the quadratic root and gauge <= 1."""
    params = MethodParams.for_degree(f.degree, norm)
    e0 = _pessimistic(quality_measure(f, z0, norm), pessimistic)
    bound = nourein_domain_bound(params)
    if e0 < bound:
        lam = contraction_factor_nourein(e0, params)
        theta, mu = bound_factors_nourein(e0, params)
        satisfied = lam <= 1.0
        strict = lam < 1.0
    else:
        lam = theta = mu = None
        satisfied = strict = False
    return Certificate(
        method=Method.NOUREIN,
        params=params,
        quality=e0,
        domain_bound=bound,
        contraction=lam,
        decay=theta,
        scale=mu,
        satisfied=satisfied,
        strict=strict,
        guaranteed_order=4 if strict else None,
    )


def certify(
    method: Method, f: MonicPolynomial, z0, norm: NormParameter, pessimistic: bool = False
) -> Certificate:
    """Certificate matching the given iteration method.

    Both Ehrlich forms share one certificate; Weierstrass uses the
    localization condition.
    """
    method = Method(method)
    if method is Method.WEIERSTRASS:
        return certify_localization(f, z0, norm, pessimistic)
    if method in (Method.EHRLICH, Method.EHRLICH_DERIVATIVE):
        return certify_ehrlich(f, z0, norm, pessimistic)
    return certify_nourein(f, z0, norm, pessimistic)


# --------------------------------------------------------------------------
# Corollary thresholds
# --------------------------------------------------------------------------


class CorollaryFamily(Enum):
    """The three families of ready-made initial-condition radii."""

    LP_RADIUS = "lp-radius"      # 1 / (2 (n-1)**(1/q) + 2), any p, n >= 3
    INF_LINEAR = "inf-linear"    # 1 / (1.5 n + 1.8) resp. 1 / (1.4 n + 2.8), p = inf
    L1_CONSTANT = "l1-constant"  # degree-free constants, p = 1


class ThresholdEquation(Enum):
    EHRLICH_L1 = "ehrlich-l1"
    NOUREIN_L1 = "nourein-l1"


def _as_primary_method(method: Method) -> Method:
    method = Method(method)
    if method is Method.EHRLICH_DERIVATIVE:
        return Method.EHRLICH
    if method is Method.WEIERSTRASS:
        raise Inapplicable("corollary thresholds exist for Ehrlich and Nourein only")
    return method


def corollary_threshold(
    method: Method, family: CorollaryFamily, n: int, norm: NormParameter
) -> float:
    """Radius R such that E(z0) <= R certifies convergence under that corollary."""
    method = _as_primary_method(method)
    family = CorollaryFamily(family)
    if n < 2:
        raise Inapplicable(f"degree {n} below 2")
    if family is CorollaryFamily.LP_RADIUS:
        if n < 3:
            raise Inapplicable("the Lp radius 1/(2a+2) requires degree n >= 3")
        a = float(n - 1) ** norm.inv_q
        return 1.0 / (2.0 * a + 2.0)
    if family is CorollaryFamily.INF_LINEAR:
        if not math.isinf(norm.p):
            raise Inapplicable("linear-in-n thresholds are stated for p = inf")
        if method is Method.EHRLICH:
            return 1.0 / (1.5 * n + 1.8)
        return 1.0 / (1.4 * n + 2.8)
    if not norm.p == 1.0:
        raise Inapplicable("the degree-free constants are stated for p = 1")
    which = (
        ThresholdEquation.EHRLICH_L1
        if method is Method.EHRLICH
        else ThresholdEquation.NOUREIN_L1
    )
    return solve_l1_threshold(which)


def threshold_offset_for_slope(A: float, norm: NormParameter) -> float:
    """Offset B such that E(z0) <= 1/(A (n-1)**(1/q) + B) certifies Ehrlich.

    B = 2**(1/q) + exp(1/(A-1)) / (4 (A-1)), valid for every slope A > 1.
    """
    if not A > 1.0:
        raise DomainError(f"slope must exceed 1, got {A}")
    b = 2.0**norm.inv_q
    return b + math.exp(1.0 / (A - 1.0)) / (4.0 * (A - 1.0))


def l1_equation_lhs(which: ThresholdEquation, x: float) -> float:
    """Left-hand side of the defining equation for the p = 1 threshold constants."""
    which = ThresholdEquation(which)
    if which is ThresholdEquation.EHRLICH_L1:
        u = x / (1.0 - 2.0 * x)
        return u * u * math.exp(u)
    quad = 1.0 - 3.0 * x + x * x
    return x**3 / quad**2 * math.exp((x - x * x) / quad)


def _log_l1_equation_lhs(which: ThresholdEquation, x: float) -> float:
    # log of the same left-hand side; finite on the whole open interval, so the
    # bisection never sees an overflowed value.
    if which is ThresholdEquation.EHRLICH_L1:
        return 2.0 * (math.log(x) - math.log(1.0 - 2.0 * x)) + x / (1.0 - 2.0 * x)
    quad = 1.0 - 3.0 * x + x * x
    return 3.0 * math.log(x) - 2.0 * math.log(quad) + (x - x * x) / quad


def l1_interval(which: ThresholdEquation) -> tuple[float, float]:
    """Open interval on which the defining equation has its unique solution."""
    if ThresholdEquation(which) is ThresholdEquation.EHRLICH_L1:
        return 0.0, 0.5
    return 0.0, 2.0 / (3.0 + math.sqrt(5.0))


@lru_cache(maxsize=None)
def solve_l1_threshold(which: ThresholdEquation) -> float:
    """Unique solution of the p = 1 threshold equation, by bisection to 1e-12.

    The equation is solved in log form (log lhs = 0), which has the same root
    and stays finite up to the right endpoint.
    """
    which = ThresholdEquation(which)
    left, right = l1_interval(which)
    lo = left + 1e-13
    hi = right - 1e-13
    f = lambda x: _log_l1_equation_lhs(which, x)
    flo, fhi = f(lo), f(hi)
    if not (flo < 0.0 < fhi):
        raise BracketFailure(
            f"no sign change on ({lo:.3e}, {hi:.3e}): f(lo)={flo:.3e}, f(hi)={fhi:.3e}"
        )
    return float(bisect(f, lo, hi, xtol=1e-12))


# --------------------------------------------------------------------------
# Numerical verification sweeps used by the corollary proofs
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class DominanceResult:
    """Outcome of the majorant sweep phi_1(x; n) < g(x)."""

    holds: bool
    violation: tuple[int, float] | None  # first (n, x) where dominance failed


def majorant_dominance(
    which: ThresholdEquation,
    degrees: range = range(2, 201),
    grid_points: int = 10_000,
) -> DominanceResult:
    """Check phi with p = 1 stays strictly below the equation's left-hand side.

    Swept over a dense grid of the stated interval for every degree in
    `degrees`.  Comparison is done on logarithms: both sides vanish at 0+ and
    blow up at the right endpoint, and the log gap is the well-conditioned
    quantity.
    """
    which = ThresholdEquation(which)
    left, right = l1_interval(which)
    xs = np.linspace(left, right, grid_points + 2)[1:-1]
    norm1 = NormParameter.of(1)
    if which is ThresholdEquation.EHRLICH_L1:
        log_lhs = 2.0 * (np.log(xs) - np.log(1.0 - 2.0 * xs)) + xs / (1.0 - 2.0 * xs)
    else:
        quad = 1.0 - 3.0 * xs + xs * xs
        log_lhs = 3.0 * np.log(xs) - 2.0 * np.log(quad) + (xs - xs * xs) / quad
    for n in degrees:
        params = MethodParams.for_degree(n, norm1)
        if which is ThresholdEquation.EHRLICH_L1:
            phi = _ehrlich_raw(xs, params)
        else:
            phi = _nourein_raw(xs, params)
        log_phi = np.log(phi)
        bad = np.nonzero(~(log_phi < log_lhs))[0]
        if bad.size:
            return DominanceResult(holds=False, violation=(n, float(xs[bad[0]])))
    return DominanceResult(holds=True, violation=None)


def linear_threshold_peak(method: Method, max_degree: int = 500) -> tuple[int, float]:
    """Argmax and max of the gauge along the p = inf linear thresholds.

    Evaluates phi_n at x = 1/(1.5 n + 1.8) (Ehrlich) or 1/(1.4 n + 2.8)
    (Nourein) for n = 2..max_degree.  The max must stay below 1; anything else
    means the linear threshold family is broken, so it raises.
    """
    method = _as_primary_method(method)
    norm = NormParameter.of(math.inf)
    peak_n, peak_value = 2, -math.inf
    for n in range(2, max_degree + 1):
        params = MethodParams.for_degree(n, norm)
        if method is Method.EHRLICH:
            value = contraction_factor_ehrlich(1.0 / (1.5 * n + 1.8), params)
        else:
            value = contraction_factor_nourein(1.0 / (1.4 * n + 2.8), params)
        if value > peak_value:
            peak_n, peak_value = n, value
    if not peak_value < 1.0:
        raise ArithmeticError(
            f"linear threshold gauge reached {peak_value} >= 1 at n={peak_n}"
        )
    return peak_n, peak_value


def lp_radius_contraction_ehrlich(params: MethodParams) -> float:
    """Closed form of the Ehrlich gauge at R = 1/(2a+2):

    a / ((a+1)(a+2-b)) * (1 + a / ((n-1)(a+2-b)))**(n-1).
    """
    a, b, n = params.a, params.b, params.n
    return float(
        a / ((a + 1.0) * (a + 2.0 - b))
        * _power_n_minus_1(a / ((n - 1) * (a + 2.0 - b)), n)
    )


def lp_radius_contraction_nourein(params: MethodParams) -> float:
    """Closed form of the Nourein gauge at R = 1/(2a+2):

    2a^2(a+1) / ((2(a+1)^2 - (2a+1)b)(2a^2+2a+1))
        * (1 + a(2a+1) / ((n-1)(2(a+1)^2 - (2a+1)b)))**(n-1).
    """
    a, b, n = params.a, params.b, params.n
    d1 = 2.0 * (a + 1.0) ** 2 - (2.0 * a + 1.0) * b
    d2 = 2.0 * a * a + 2.0 * a + 1.0
    return float(
        2.0 * a * a * (a + 1.0) / (d1 * d2)
        * _power_n_minus_1(a * (2.0 * a + 1.0) / ((n - 1) * d1), n)
    )


# --------------------------------------------------------------------------
# Printed initial conditions: this paper's p = inf corollaries and the prior
# results they are compared against.
# --------------------------------------------------------------------------


def condition_ehrlich_inf(n: int, C: float) -> bool:
    """The p = inf Ehrlich initial condition on a constant C.

    Holds iff 0 <= C < 1/(n+1) and
    (n-1) C^2 / ((1-nC)(1-(n+1)C)) * ((1-nC)/(1-(n+1)C))**(n-1) < 1.
    """
    if n < 2:
        raise Inapplicable(f"degree {n} below 2")
    if not (0.0 <= C < 1.0 / (n + 1.0)):
        return False
    if C == 0.0:
        return True
    top = 1.0 - n * C
    bot = 1.0 - (n + 1.0) * C
    value = (n - 1.0) * C * C / (top * bot) * (top / bot) ** (n - 1)
    return value < 1.0


def condition_nourein_inf(n: int, C: float) -> bool:
    """The p = inf Nourein initial condition on a constant C.

    Holds iff 0 <= C < 2/(n+2+sqrt((n+2)**2 - 8)) and
    (n-1)^2 C^3 / ((1-(n+1)C+C^2)(1-(n+2)C+2C^2))
        * ((1-(n+1)C+C^2)/(1-(n+2)C+2C^2))**(n-1) < 1.
    """
    if n < 2:
        raise Inapplicable(f"degree {n} below 2")
    bound = 2.0 / (n + 2.0 + math.sqrt((n + 2.0) ** 2 - 8.0))
    if not (0.0 <= C < bound):
        return False
    if C == 0.0:
        return True
    top = 1.0 - (n + 1.0) * C + C * C
    bot = 1.0 - (n + 2.0) * C + 2.0 * C * C
    if top <= 0.0 or bot <= 0.0:
        return False
    value = (n - 1.0) ** 2 * C**3 / (top * bot) * (top / bot) ** (n - 1)
    return value < 1.0


class PriorWork(Enum):
    """Previously published initial conditions used for threshold comparison."""

    PETKOVIC_HERCEG_41 = "petkovic-herceg-4.1"
    PETKOVIC_HERCEG_42 = "petkovic-herceg-4.2"
    ZHENG_HUANG = "zheng-huang"
    NEDIC_2 = "nedic-2"
    NEDIC_3 = "nedic-3"


def _ph_selector(x: float) -> float:
    # piecewise selector used by the Petkovic-Herceg 4.1 side condition,
    # extended continuously to x = 0
    if x <= 0.5:
        return 1.0 + 2.0 * x
    if x < 1.0:
        return 1.0 / (1.0 - x)
    raise DomainError(f"selector defined on (0, 1), got {x}")


def prior_condition(author: PriorWork, n: int, C: float | None = None):
    """Evaluate a prior initial condition exactly as printed.

    Returns a bool for the condition-style results (Petkovic-Herceg 4.1,
    Nedic theorem 2; both need C) and a threshold C(n) for the table-style
    results (Petkovic-Herceg 4.2, Nedic theorem 3).  All are stated for the
    inf-norm measure ||W(z0)|| <= C * delta(z0).
    """
    author = PriorWork(author)
    if author is PriorWork.ZHENG_HUANG:
        raise Inapplicable(
            "the Zheng-Huang statement is cited but not reproduced; "
            "no formula is available to evaluate"
        )
    if n < 2:
        raise Inapplicable(f"degree {n} below 2")

    if author is PriorWork.PETKOVIC_HERCEG_41:
        if C is None:
            raise ValueError("Petkovic-Herceg 4.1 needs a constant C")
        if not condition_ehrlich_inf(n, C):
            return False
        if C == 0.0:
            return True
        top = 1.0 - n * C
        bot = 1.0 - (n + 1.0) * C
        mid = 1.0 - (n - 1.0) * C
        beta = (
            (n - 1.0) * C * C * (1.0 + (n - 1.0) * C) / (top * mid)
            * (top / bot) ** (n - 1)
        )
        if not beta < 1.0:
            return False
        return _ph_selector(beta) < mid / (2.0 * C)

    if author is PriorWork.PETKOVIC_HERCEG_42:
        if n < 3:
            raise Inapplicable("the Petkovic-Herceg table starts at n = 3")
        if n in (3, 4):
            return 1.0 / (n + 4.5)
        return 1.0 / (1.545 * n + 5.0)

    if author is PriorWork.NEDIC_2:
        if C is None:
            raise ValueError("Nedic theorem 2 needs a constant C")
        if not (0.0 < C < 2.0 / (n + 4.0 + math.sqrt(n * n + 8.0 * n))):
            return False
        top = 1.0 - (n + 1.0) * C + C * C
        bot = 1.0 - (n + 2.0) * C + 2.0 * C * C
        if top <= 0.0 or bot <= 0.0:
            return False
        beta = (n - 1.0) ** 2 * C**3 / (top * bot) * (top / bot) ** (n - 1)
        return beta < (1.0 - n * C) / (1.0 + (n - 2.0) * C)

    # Nedic theorem 3 table
    if n < 3:
        raise Inapplicable("the Nedic table starts at n = 3")
    if n <= 23:
        return 1.0 / (1.64 * n + 1.944)
    return 1.0 / (1.42 * n + 8.7)
