"""Zero-localization disks and the simple-zeros verdict.

When the localization certificate holds at z0, the n closed disks

    D_i = { z : |z - (z_i0 - W_i(z0))| <= C |W_i(z0)| },
    C = theta * lambda / (1 - theta * lambda**2),

are mutually disjoint and each contains exactly one zero of f.  The condition
is sufficient, not necessary: a False verdict means "not certified", never
"has multiple zeros".
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .certify import Certificate, certify_localization
from .errors import CertificateDegenerate, CertificateNotSatisfied
from .poly import MonicPolynomial
from .simul import NormParameter, weierstrass_corrections

# Disjointness is strict; gaps tighter than this slack are reported (not
# rejected) so near-tangency stays visible.
DISJOINTNESS_SLACK = 1e-14


@dataclass(frozen=True)
class InclusionDisk:
    """Closed disk guaranteed to contain exactly one zero of f."""

    center: complex
    radius: float

    def contains(self, point: complex) -> bool:
        return abs(point - self.center) <= self.radius

    def to_json(self) -> dict:
        from .trace import format_float

        return {
            "center": [format_float(self.center.real), format_float(self.center.imag)],
            "radius": format_float(self.radius),
        }


def inclusion_disks(
    f: MonicPolynomial, z0, norm: NormParameter, certificate: Certificate | None = None
) -> tuple[InclusionDisk, ...]:
    """The n inclusion disks at z0; requires a satisfied localization certificate."""
    cert = certificate if certificate is not None else certify_localization(f, z0, norm)
    if not cert.satisfied:
        raise CertificateNotSatisfied(
            f"localization condition fails at z0: E = {cert.quality:.6g}, "
            f"bound = {cert.domain_bound:.6g}, gauge = {cert.contraction}"
        )
    lam = cert.contraction
    theta = cert.decay
    if not theta * lam * lam < 1.0:
        raise CertificateDegenerate(
            f"theta * lambda**2 = {theta * lam * lam:.6g} >= 1"
        )
    ratio = theta * lam / (1.0 - theta * lam * lam)
    w = weierstrass_corrections(f, z0)
    points = [complex(p) for p in z0]
    return tuple(
        InclusionDisk(center=zi - wi, radius=ratio * abs(wi))
        for zi, wi in zip(points, w)
    )


def certifies_simple_zeros(f: MonicPolynomial, z0, norm: NormParameter) -> bool:
    """True iff the localization condition holds at z0 (a sufficient test)."""
    return certify_localization(f, z0, norm).satisfied


def pairwise_disjoint(
    disks: Sequence[InclusionDisk],
) -> tuple[bool, float]:
    """Strict pairwise disjointness check.

    Returns (verdict, tightest_gap).  A gap below DISJOINTNESS_SLACK still
    counts as disjoint when positive, but the returned gap exposes it.
    """
    tightest = float("inf")
    ok = True
    for i in range(len(disks)):
        for j in range(i + 1, len(disks)):
            gap = (
                abs(disks[i].center - disks[j].center)
                - disks[i].radius
                - disks[j].radius
            )
            tightest = min(tightest, gap)
            if not gap > 0.0:
                ok = False
    return ok, tightest


def match_roots_to_disks(
    disks: Sequence[InclusionDisk], roots: Sequence[complex]
) -> tuple[int, ...]:
    """Assign each disk its nearest root, then verify a perfect matching.

    The certificate guarantees one zero per disk, so nearest-center
    assignment must give a bijection with every root inside its disk; any
    failure signals a bug or an uncertified input.
    """
    if len(disks) != len(roots):
        raise ValueError("disk and root counts differ")
    assignment = []
    for disk in disks:
        distances = [abs(complex(r) - disk.center) for r in roots]
        assignment.append(min(range(len(roots)), key=distances.__getitem__))
    if len(set(assignment)) != len(roots):
        raise CertificateNotSatisfied(
            f"nearest-root assignment {assignment} is not a bijection"
        )
    for disk, idx in zip(disks, assignment):
        if not disk.contains(complex(roots[idx])):
            raise CertificateNotSatisfied(
                f"root {roots[idx]} lies outside its matched disk "
                f"(center {disk.center}, radius {disk.radius:.6g})"
            )
    return tuple(assignment)
