"""Iteration driver producing certificate-annotated, reproducible traces.

A run records, per step: the iterate, ||W||_p, E, the a priori and a
posteriori bounds where defined, and (with the oracle attached) the true
error and empirical order ratio.  Identical config and inputs produce a
byte-identical JSON trace: field order is fixed and every float is rendered
as a decimal string with 17 significant digits, which round-trips double
precision exactly.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field

from .bounds import (
    BoundReport,
    aposteriori_bound,
    apriori_bound_ehrlich,
    apriori_bound_nourein,
    is_vacuous,
)
from .certify import Certificate, certify
from .errors import (
    DegenerateBound,
    DomainError,
    InsufficientData,
    SimulrootsError,
)
from .oracle import OrderEstimate, estimate_order, reference_roots, true_errors
from .poly import MonicPolynomial, parse_complex_list
from .simul import (
    Method,
    NormParameter,
    as_points,
    separations,
    step,
    step_quantities,
)

STATUS_CONVERGED = "converged"
STATUS_BUDGET = "budget-exhausted"
STATUS_ERROR = "error"


def format_float(x: float) -> str:
    """Decimal string with 17 significant digits; round-trips binary64."""
    return format(float(x), ".17g")


def _opt(x: float | None) -> str | None:
    return None if x is None else format_float(x)


@dataclass(frozen=True)
class RunConfig:
    """Settings for one solve run."""

    method: Method = Method.EHRLICH
    p: float = math.inf
    max_iters: int = 100
    stop: str = "aposteriori"  # or "wnorm"
    tol: float = 1e-12
    seed: int = 0
    oracle: bool = False
    precision_bits: int = 128

    def __post_init__(self):
        object.__setattr__(self, "method", Method(self.method))
        if self.tol <= 0.0:
            raise ValueError(f"tolerance must be positive, got {self.tol}")
        if self.max_iters < 1:
            raise ValueError(f"max_iters must be >= 1, got {self.max_iters}")
        if self.stop not in ("aposteriori", "wnorm"):
            raise ValueError(f"unknown stop criterion {self.stop!r}")

    @property
    def norm(self) -> NormParameter:
        return NormParameter.of(self.p)


@dataclass(frozen=True)
class TraceRow:
    k: int
    z: tuple[complex, ...]
    correction_norm: float
    quality: float
    a_priori: float | None
    a_posteriori: float | None
    true_error: float | None = None
    order_ratio: float | None = None


@dataclass
class IterationTrace:
    """Full record of one run: certificate up front, one row per iterate."""

    config: RunConfig
    certificate: Certificate
    initial_separation: float
    rows: list[TraceRow] = field(default_factory=list)
    status: str = STATUS_BUDGET
    error: str | None = None
    empirical_order: OrderEstimate | None = None

    @property
    def final_point(self) -> tuple[complex, ...]:
        return self.rows[-1].z

    def bound_reports(self) -> list[BoundReport]:
        """Rows repackaged as bound reports with validity and vacuity flags."""
        out = []
        for row in self.rows:
            valid = lambda b: None if (b is None or row.true_error is None) else (
                b >= row.true_error
            )
            out.append(
                BoundReport(
                    k=row.k,
                    a_priori=row.a_priori,
                    a_posteriori=row.a_posteriori,
                    true_error=row.true_error,
                    a_priori_valid=valid(row.a_priori),
                    a_posteriori_valid=valid(row.a_posteriori),
                    a_priori_vacuous=is_vacuous(row.a_priori, self.initial_separation),
                    a_posteriori_vacuous=is_vacuous(
                        row.a_posteriori, self.initial_separation
                    ),
                )
            )
        return out

    def to_json_obj(self) -> dict:
        rows = [
            {
                "k": row.k,
                "z": [[format_float(c.real), format_float(c.imag)] for c in row.z],
                "correction_norm": format_float(row.correction_norm),
                "quality": format_float(row.quality),
                "a_priori": _opt(row.a_priori),
                "a_posteriori": _opt(row.a_posteriori),
                "true_error": _opt(row.true_error),
                "order_ratio": _opt(row.order_ratio),
            }
            for row in self.rows
        ]
        order = None
        if self.empirical_order is not None:
            order = {
                "ratios": [
                    [k, format_float(r)] for k, r in self.empirical_order.ratios
                ],
                "plateau": format_float(self.empirical_order.plateau),
            }
        return {
            "config": {
                "method": self.config.method.value,
                "p": self.config.norm.label(),
                "max_iters": self.config.max_iters,
                "stop": self.config.stop,
                "tol": format_float(self.config.tol),
                "seed": self.config.seed,
                "oracle": self.config.oracle,
            },
            "certificate": self.certificate.to_json(),
            "initial_separation": format_float(self.initial_separation),
            "status": self.status,
            "error": self.error,
            "rows": rows,
            "empirical_order": order,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), indent=2) + "\n"

    def to_csv(self) -> str:
        n = len(self.rows[0].z) if self.rows else 0
        header = [
            "k",
            "quality",
            "correction_norm",
            "a_priori",
            "a_posteriori",
            "true_error",
            "order_ratio",
        ]
        for i in range(n):
            header += [f"z{i}_re", f"z{i}_im"]
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(header)
        for row in self.rows:
            record = [
                row.k,
                format_float(row.quality),
                format_float(row.correction_norm),
                _opt(row.a_priori) or "",
                _opt(row.a_posteriori) or "",
                _opt(row.true_error) or "",
                _opt(row.order_ratio) or "",
            ]
            for c in row.z:
                record += [format_float(c.real), format_float(c.imag)]
            writer.writerow(record)
        return buffer.getvalue()


def _bounds_available(method: Method) -> bool:
    return Method(method) is not Method.WEIERSTRASS


def run_iteration(f: MonicPolynomial, z0, config: RunConfig) -> IterationTrace:
    """Run the configured iteration from z0 until the stop criterion or budget.

    The stopping default uses the a posteriori bound whenever the iterate is
    inside the certified region, falling back to
    ||W(z^k)||_p <= tol * (1 + max|c_i|) outside it (and always for
    Weierstrass, which has no bound here).
    """
    norm = config.norm
    method = config.method
    cert = certify(method, f, z0, norm)
    points = as_points(z0)
    _, delta0 = separations(points)
    trace = IterationTrace(
        config=config, certificate=cert, initial_separation=delta0
    )
    wnorm_scale = f.coefficient_scale()

    e0 = cert.quality
    w0_norm: float | None = None
    apriori_fn = (
        apriori_bound_nourein if method is Method.NOUREIN else apriori_bound_ehrlich
    )

    z = points
    for k in range(config.max_iters + 1):
        try:
            q = step_quantities(f, z, norm)
        except SimulrootsError as exc:
            trace.status = STATUS_ERROR
            trace.error = f"{type(exc).__name__}: {exc}"
            break
        if w0_norm is None:
            w0_norm = q.correction_norm

        a_post = None
        a_pri = None
        if _bounds_available(method):
            try:
                a_post = aposteriori_bound(method, f, z, norm)
            except (DomainError, DegenerateBound):
                a_post = None
            if k >= 1 and e0 < cert.domain_bound:
                try:
                    a_pri = apriori_fn(k, e0, w0_norm, cert.params)
                except DomainError:
                    a_pri = None
        trace.rows.append(
            TraceRow(
                k=k,
                z=z,
                correction_norm=q.correction_norm,
                quality=q.quality,
                a_priori=a_pri,
                a_posteriori=a_post,
            )
        )

        if config.stop == "aposteriori" and a_post is not None:
            met = a_post <= config.tol
        else:
            met = q.correction_norm <= config.tol * wnorm_scale
        if met:
            trace.status = STATUS_CONVERGED
            break
        if k == config.max_iters:
            trace.status = STATUS_BUDGET
            break
        try:
            z = step(method, f, z)
        except SimulrootsError as exc:
            trace.status = STATUS_ERROR
            trace.error = f"{type(exc).__name__}: {exc}"
            break

    if config.oracle and trace.rows:
        attach_oracle(trace, f)
    return trace


def attach_oracle(trace: IterationTrace, f: MonicPolynomial) -> None:
    """Fill in true errors and order ratios against the reference roots."""
    ref = reference_roots(
        f, precision_bits=trace.config.precision_bits, seed=trace.config.seed
    )
    errors = true_errors([row.z for row in trace.rows], ref, trace.config.norm)
    try:
        estimate = estimate_order(errors)
    except InsufficientData:
        estimate = None
    ratio_at = dict(estimate.ratios) if estimate is not None else {}
    trace.rows = [
        TraceRow(
            k=row.k,
            z=row.z,
            correction_norm=row.correction_norm,
            quality=row.quality,
            a_priori=row.a_priori,
            a_posteriori=row.a_posteriori,
            true_error=errors[i],
            order_ratio=ratio_at.get(row.k),
        )
        for i, row in enumerate(trace.rows)
    ]
    trace.empirical_order = estimate


def parse_point_file(obj) -> tuple[complex, ...]:
    """Initial point format: {"points": [[re, im], ...]} or a bare list."""
    if isinstance(obj, dict):
        if "points" not in obj:
            raise ValueError('point object must carry a "points" list')
        obj = obj["points"]
    return tuple(parse_complex_list(obj))
