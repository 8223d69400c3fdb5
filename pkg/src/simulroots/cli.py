"""Command-line front end: solve, certify, compare, constants.

Exit codes form a stable contract:

    0  success (solve: converged; certify: condition satisfied)
    1  solve: iteration budget exhausted; certify: condition not satisfied
    2  unreadable/malformed input, bad range, coincident initial components
    3  --require-certificate given and the certificate failed
    4  numerical failure during iteration (singular denominator etc.)
"""

from __future__ import annotations

import argparse
import io
import json
import math
import os
import sys

from . import __version__
from .certify import (
    CorollaryFamily,
    ThresholdEquation,
    PriorWork,
    certify,
    corollary_threshold,
    linear_threshold_peak,
    prior_condition,
    solve_l1_threshold,
    threshold_offset_for_slope,
)
from .errors import (
    CertificateNotSatisfied,
    DistinctnessViolation,
    Inapplicable,
    SimulrootsError,
)
from .localize import inclusion_disks
from .poly import polynomial_from_json
from .simul import Method, NormParameter
from .trace import (
    STATUS_BUDGET,
    STATUS_CONVERGED,
    RunConfig,
    format_float,
    parse_point_file,
    run_iteration,
)

EXIT_OK = 0
EXIT_NOT_CONVERGED = 1
EXIT_PARSE = 2
EXIT_CERTIFICATE = 3
EXIT_NUMERICAL = 4


def _read_json(path: str):
    with open(path, "r", encoding="utf-8") as handle:
        return json.load(handle)


def _load_problem(poly_path: str, point_path: str):
    f = polynomial_from_json(_read_json(poly_path))
    z0 = parse_point_file(_read_json(point_path))
    if len(z0) != f.degree:
        raise ValueError(
            f"initial point has {len(z0)} components for degree {f.degree}"
        )
    return f, z0


def _significant(x: float, digits: int = 10) -> str:
    return format(float(x), f".{digits}g")


def _env_precision_bits() -> int:
    raw = os.environ.get("SIMULROOTS_PRECISION_BITS")
    if raw is None:
        return 128
    try:
        bits = int(raw)
    except ValueError as exc:
        raise ValueError(f"SIMULROOTS_PRECISION_BITS={raw!r} is not an integer") from exc
    if bits < 64:
        raise ValueError("SIMULROOTS_PRECISION_BITS must be at least 64")
    return bits


def cmd_solve(args) -> int:
    try:
        f, z0 = _load_problem(args.polynomial, args.point)
        config = RunConfig(
            method=Method(args.method),
            p=NormParameter.of(args.p).p,
            max_iters=args.max_iters,
            stop=args.stop,
            tol=args.tol,
            seed=args.seed,
            oracle=args.oracle,
            precision_bits=_env_precision_bits(),
        )
        cert = certify(config.method, f, z0, config.norm)
    except DistinctnessViolation as exc:
        print(f"error: initial point invalid: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (OSError, ValueError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE

    if args.require_certificate and not cert.satisfied:
        print(json.dumps(cert.to_json(), indent=2))
        print(
            "error: certificate required but not satisfied "
            f"(E = {cert.quality:.6g}, bound = {cert.domain_bound:.6g})",
            file=sys.stderr,
        )
        return EXIT_CERTIFICATE

    try:
        trace = run_iteration(f, z0, config)
    except SimulrootsError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL

    output = trace.to_csv() if args.format == "csv" else trace.to_json()
    print(output, end="")
    if trace.status == STATUS_CONVERGED:
        return EXIT_OK
    if trace.status == STATUS_BUDGET:
        return EXIT_NOT_CONVERGED
    print(f"error: {trace.error}", file=sys.stderr)
    return EXIT_NUMERICAL


def cmd_certify(args) -> int:
    try:
        f, z0 = _load_problem(args.polynomial, args.point)
        norm = NormParameter.of(args.p)
        cert = certify(Method(args.method), f, z0, norm, pessimistic=args.pessimistic)
    except DistinctnessViolation as exc:
        print(f"error: initial point invalid: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (OSError, ValueError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE

    payload = {"certificate": cert.to_json()}
    if args.disks:
        try:
            disks = inclusion_disks(f, z0, norm)
            payload["disks"] = [d.to_json() for d in disks]
        except CertificateNotSatisfied:
            payload["disks"] = None
    print(json.dumps(payload, indent=2))
    return EXIT_OK if cert.satisfied else EXIT_NOT_CONVERGED


def _parse_range(text: str) -> tuple[int, int]:
    for sep in (":", "-", ".."):
        if sep in text:
            lo_text, hi_text = text.split(sep, 1)
            break
    else:
        lo_text = hi_text = text
    lo, hi = int(lo_text), int(hi_text)
    if not (2 <= lo <= hi <= 10_000):
        raise ValueError(f"degree range must lie within [2, 10000], got {text!r}")
    return lo, hi


def _threshold_or_blank(method: Method, family: CorollaryFamily, n, norm):
    try:
        return corollary_threshold(method, family, n, norm)
    except Inapplicable:
        return None


def compare_table(lo: int, hi: int, norm: NormParameter) -> list[dict]:
    """Per-degree admissible thresholds: this library's corollaries vs prior work.

    The "best" columns take the largest applicable radius at each degree; the
    improves columns compare that best against the prior-work table value.
    """
    rows = []
    p_inf = math.isinf(norm.p)
    for n in range(lo, hi + 1):
        row: dict = {"n": n}
        for method, tag in ((Method.EHRLICH, "ehrlich"), (Method.NOUREIN, "nourein")):
            linear = _threshold_or_blank(method, CorollaryFamily.INF_LINEAR, n, norm)
            radius = _threshold_or_blank(method, CorollaryFamily.LP_RADIUS, n, norm)
            l1 = _threshold_or_blank(method, CorollaryFamily.L1_CONSTANT, n, norm)
            candidates = [v for v in (linear, radius, l1) if v is not None]
            row[f"{tag}_linear"] = linear
            row[f"{tag}_lp_radius"] = radius
            row[f"{tag}_l1"] = l1
            row[f"{tag}_best"] = max(candidates) if candidates else None
        if p_inf:
            try:
                row["prior_ph42"] = prior_condition(PriorWork.PETKOVIC_HERCEG_42, n)
            except Inapplicable:
                row["prior_ph42"] = None
            try:
                row["prior_nedic3"] = prior_condition(PriorWork.NEDIC_3, n)
            except Inapplicable:
                row["prior_nedic3"] = None
        else:
            row["prior_ph42"] = None
            row["prior_nedic3"] = None
        row["ehrlich_improves"] = (
            None
            if row["prior_ph42"] is None or row["ehrlich_best"] is None
            else row["ehrlich_best"] >= row["prior_ph42"]
        )
        row["nourein_improves"] = (
            None
            if row["prior_nedic3"] is None or row["nourein_best"] is None
            else row["nourein_best"] >= row["prior_nedic3"]
        )
        rows.append(row)
    return rows


COMPARE_COLUMNS = [
    "n",
    "ehrlich_linear",
    "ehrlich_lp_radius",
    "ehrlich_l1",
    "ehrlich_best",
    "prior_ph42",
    "ehrlich_improves",
    "nourein_linear",
    "nourein_lp_radius",
    "nourein_l1",
    "nourein_best",
    "prior_nedic3",
    "nourein_improves",
]


def compare_csv(rows: list[dict]) -> str:
    buffer = io.StringIO()
    buffer.write(",".join(COMPARE_COLUMNS) + "\n")
    for row in rows:
        cells = []
        for col in COMPARE_COLUMNS:
            value = row[col]
            if value is None:
                cells.append("")
            elif isinstance(value, bool):
                cells.append("true" if value else "false")
            elif isinstance(value, int):
                cells.append(str(value))
            else:
                cells.append(format_float(value))
        buffer.write(",".join(cells) + "\n")
    return buffer.getvalue()


def cmd_compare(args) -> int:
    try:
        lo, hi = _parse_range(args.n_range)
        norm = NormParameter.of(args.p)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    print(compare_csv(compare_table(lo, hi, norm)), end="")
    return EXIT_OK


def cmd_constants(args) -> int:
    ehrlich_peak_n, ehrlich_peak = linear_threshold_peak(Method.EHRLICH)
    nourein_peak_n, nourein_peak = linear_threshold_peak(Method.NOUREIN)
    inf_norm = NormParameter.of(math.inf)
    payload = {
        "ehrlich_l1_radius": _significant(
            solve_l1_threshold(ThresholdEquation.EHRLICH_L1)
        ),
        "nourein_l1_radius": _significant(
            solve_l1_threshold(ThresholdEquation.NOUREIN_L1)
        ),
        "ehrlich_linear_peak": {
            "n": ehrlich_peak_n,
            "value": _significant(ehrlich_peak),
        },
        "nourein_linear_peak": {
            "n": nourein_peak_n,
            "value": _significant(nourein_peak),
        },
        "offset_samples": [
            {
                "slope": _significant(slope),
                "p": "inf",
                "offset": _significant(threshold_offset_for_slope(slope, inf_norm)),
            }
            for slope in (1.5, 2.0, 3.0, 5.0, 10.0)
        ],
    }
    print(json.dumps(payload, indent=2))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="simulroots",
        description=(
            "Simultaneous polynomial zero-finding with semilocal convergence "
            "certificates and guaranteed error bounds"
        ),
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    methods = [m.value for m in Method]

    solve = sub.add_parser("solve", help="run an iteration and emit its trace")
    solve.add_argument("polynomial", help="polynomial JSON file")
    solve.add_argument("point", help="initial point JSON file")
    solve.add_argument("--method", choices=methods, default=Method.EHRLICH.value)
    solve.add_argument("--p", default="inf", help="norm parameter in [1, inf]")
    solve.add_argument("--tol", type=float, default=1e-12)
    solve.add_argument("--max-iters", type=int, default=100)
    solve.add_argument("--stop", choices=["aposteriori", "wnorm"], default="aposteriori")
    solve.add_argument("--format", choices=["json", "csv"], default="json")
    solve.add_argument("--require-certificate", action="store_true")
    solve.add_argument("--oracle", action="store_true", help="attach true errors")
    solve.add_argument("--seed", type=int, default=0)
    solve.set_defaults(func=cmd_solve)

    cert = sub.add_parser("certify", help="evaluate an initial-point certificate")
    cert.add_argument("polynomial")
    cert.add_argument("point")
    cert.add_argument("--method", choices=methods, default=Method.EHRLICH.value)
    cert.add_argument("--p", default="inf")
    cert.add_argument("--disks", action="store_true", help="add inclusion disks")
    cert.add_argument(
        "--pessimistic",
        action="store_true",
        help="bump E(z0) by one ulp before comparing, for boundary honesty",
    )
    cert.set_defaults(func=cmd_certify)

    comp = sub.add_parser("compare", help="threshold table vs prior conditions")
    comp.add_argument("--n-range", default="3:100", help="degree range, e.g. 3:100")
    comp.add_argument("--p", default="inf")
    comp.set_defaults(func=cmd_compare)

    const = sub.add_parser("constants", help="derived constants as JSON")
    const.set_defaults(func=cmd_constants)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
