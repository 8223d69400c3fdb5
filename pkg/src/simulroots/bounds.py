"""A priori and a posteriori error bounds for Ehrlich and Nourein runs.

With lambda = phi(E(z0)), theta = psi(E(z0)) fixed at the initial point, the
distance of the k-th iterate to the root vector obeys

    ||z^k - xi||_p <= mu(E0 lam**s_k) * theta**k lam**s_k / (1 - theta lam**c_k)
                      * ||W(z0)||_p

with c_k = 3**k, s_k = (3**k - 1)/2 for Ehrlich and c_k = 4**k,
s_k = (4**k - 1)/3 for Nourein, and at any iterate

    ||z^k - xi||_p <= mu(E_k) / (1 - psi(E_k) phi(E_k)) * ||W(z^k)||_p,

which is the natural stopping criterion.  All lam**(c**k) powers are taken in
log space so huge exponents underflow cleanly to zero instead of overflowing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .certify import (
    MethodParams,
    bound_factors_ehrlich,
    bound_factors_nourein,
    contraction_factor_ehrlich,
    contraction_factor_nourein,
)
from .errors import DegenerateBound, DomainError
from .poly import MonicPolynomial
from .simul import Method, NormParameter, step_quantities


@dataclass(frozen=True)
class BoundReport:
    """Error bounds recorded for one iterate, with oracle columns when attached.

    a_priori is undefined at k = 0.  The validity flags are only set when a
    true error is present.  A bound is flagged vacuous when it is not finite
    or exceeds the initial separation scale, i.e. says nothing the starting
    configuration didn't already.
    """

    k: int
    a_priori: float | None
    a_posteriori: float | None
    true_error: float | None = None
    a_priori_valid: bool | None = None
    a_posteriori_valid: bool | None = None
    a_priori_vacuous: bool | None = None
    a_posteriori_vacuous: bool | None = None


def _power_in_logspace(lam: float, exponent: int) -> float:
    """lam**exponent for lam >= 0 and a (possibly astronomically large) integer."""
    if lam == 0.0:
        return 0.0 if exponent > 0 else 1.0
    if lam == 1.0:
        return 1.0
    log_value = float(exponent) * math.log(lam)
    if log_value < -745.0:
        return 0.0
    if log_value > 709.0:
        return math.inf
    return math.exp(log_value)


def _apriori(
    k: int,
    e0: float,
    w0_norm: float,
    params: MethodParams,
    order: int,
    gauge,
    factors,
) -> float:
    if k < 1:
        raise ValueError(f"a priori bound defined for k >= 1, got {k}")
    lam = gauge(e0, params)
    theta, _ = factors(e0, params)
    # s_k = (order**k - 1)/(order - 1) exactly; Python ints carry any k
    c_k = order**k
    s_k = (c_k - 1) // (order - 1)
    lam_s = _power_in_logspace(lam, s_k)
    lam_c = _power_in_logspace(lam, c_k)
    mu_arg = e0 * lam_s
    try:
        _, scale_k = factors(mu_arg, params)
    except DomainError:
        # only reachable for uncertified inputs with lam > 1; the bound is
        # vacuous, report it as such
        return math.inf
    denom = 1.0 - theta * lam_c
    if denom <= 0.0:
        return math.inf
    return scale_k * theta**k * lam_s / denom * w0_norm


def apriori_bound_ehrlich(
    k: int, e0: float, w0_norm: float, params: MethodParams
) -> float:
    """A priori Ehrlich bound on ||z^k - xi||_p from initial data only."""
    return _apriori(
        k, e0, w0_norm, params, 3, contraction_factor_ehrlich, bound_factors_ehrlich
    )


def apriori_bound_nourein(
    k: int, e0: float, w0_norm: float, params: MethodParams
) -> float:
    """A priori Nourein bound on ||z^k - xi||_p from initial data only."""
    return _apriori(
        k, e0, w0_norm, params, 4, contraction_factor_nourein, bound_factors_nourein
    )


def aposteriori_bound(
    method: Method, f: MonicPolynomial, zk, norm: NormParameter
) -> float:
    """A posteriori bound on ||z^k - xi||_p from the current iterate.

    Raises DomainError when the iterate has left the certified region and
    DegenerateBound when theta_k * lambda_k >= 1.
    """
    method = Method(method)
    params = MethodParams.for_degree(f.degree, norm)
    q = step_quantities(f, zk, norm)
    if method in (Method.EHRLICH, Method.EHRLICH_DERIVATIVE):
        lam = contraction_factor_ehrlich(q.quality, params)
        theta, mu = bound_factors_ehrlich(q.quality, params)
    elif method is Method.NOUREIN:
        lam = contraction_factor_nourein(q.quality, params)
        theta, mu = bound_factors_nourein(q.quality, params)
    else:
        raise ValueError("a posteriori bounds exist for Ehrlich and Nourein only")
    if theta * lam >= 1.0:
        raise DegenerateBound(f"theta * lambda = {theta * lam:.6g} >= 1")
    return mu / (1.0 - theta * lam) * q.correction_norm


def is_vacuous(bound: float | None, initial_scale: float) -> bool | None:
    """A bound that is not finite or exceeds the initial separation says nothing."""
    if bound is None:
        return None
    return not math.isfinite(bound) or bound > initial_scale
