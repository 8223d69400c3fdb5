"""Monic complex polynomials: representation, Horner evaluation, JSON format.

Coefficients are stored low-to-high with the leading 1 implicit, so a degree-n
polynomial carries exactly n stored coefficients:

    f(x) = x**n + c[n-1]*x**(n-1) + ... + c[1]*x + c[0]

Values are immutable after construction and all operations are pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class MonicPolynomial:
    """Degree-n monic polynomial over the complex numbers, n >= 2."""

    coefficients: tuple[complex, ...]

    def __post_init__(self):
        coeffs = tuple(complex(c) for c in self.coefficients)
        if len(coeffs) < 2:
            raise ValueError(f"degree must be >= 2, got {len(coeffs)}")
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coefficients)

    @classmethod
    def from_roots(cls, roots: Iterable[complex]) -> "MonicPolynomial":
        """Expand prod(x - r) into coefficient form.

        The convolution is carried out on Python scalars, so integer-valued
        roots produce exactly representable integer coefficients.
        """
        coeffs: list[complex] = [1.0 + 0.0j]
        for r in roots:
            r = complex(r)
            coeffs = [0.0 + 0.0j] + coeffs
            for i in range(len(coeffs) - 1):
                coeffs[i] -= r * coeffs[i + 1]
        return cls(tuple(coeffs[:-1]))

    def coefficient_scale(self) -> float:
        """1 + max |c_i|, the classical Cauchy bound on root magnitudes."""
        return 1.0 + max(abs(c) for c in self.coefficients)

    def __call__(self, x: complex) -> complex:
        return evaluate(self, x)


@dataclass(frozen=True)
class RootVector:
    """A point of C^n whose components are the zeros of some polynomial."""

    roots: tuple[complex, ...]

    def __post_init__(self):
        object.__setattr__(self, "roots", tuple(complex(r) for r in self.roots))

    def max_residual(self, f: MonicPolynomial) -> float:
        """Largest |f(root)|; small for a genuine root vector of f."""
        return max(abs(evaluate(f, r)) for r in self.roots)


def evaluate(f: MonicPolynomial, x: complex) -> complex:
    """f(x) by Horner's scheme, starting from the implicit leading 1."""
    acc = 1.0 + 0.0j
    for c in reversed(f.coefficients):
        acc = acc * x + c
    return acc


def evaluate_derivative(f: MonicPolynomial, x: complex) -> complex:
    """f'(x) by Horner on the derivative coefficients."""
    n = f.degree
    acc = complex(n)
    for k in range(n - 1, 0, -1):
        acc = acc * x + k * f.coefficients[k]
    return acc


def polynomial_to_json(f: MonicPolynomial) -> dict:
    """JSON object {"degree": n, "coeffs": [[re, im], ...]}, coeffs low-to-high."""
    return {
        "degree": f.degree,
        "coeffs": [[c.real, c.imag] for c in f.coefficients],
    }


def polynomial_from_json(obj: dict) -> MonicPolynomial:
    """Parse the shared polynomial format; raises ValueError on malformed input."""
    if not isinstance(obj, dict):
        raise ValueError("polynomial must be a JSON object")
    try:
        degree = int(obj["degree"])
        coeffs = obj["coeffs"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"polynomial object missing degree/coeffs: {exc}") from exc
    points = parse_complex_list(coeffs)
    if len(points) != degree:
        raise ValueError(
            f"coefficient list length {len(points)} does not match degree {degree}"
        )
    return MonicPolynomial(tuple(points))


def parse_complex_list(items: Sequence) -> list[complex]:
    """Parse a list of [re, im] pairs into complex scalars."""
    out: list[complex] = []
    if not isinstance(items, (list, tuple)):
        raise ValueError("expected a list of [re, im] pairs")
    for item in items:
        if not isinstance(item, (list, tuple)) or len(item) != 2:
            raise ValueError(f"expected [re, im] pair, got {item!r}")
        re, im = item
        out.append(complex(float(re), float(im)))
    return out
