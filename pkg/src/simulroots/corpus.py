"""Desk-scale test corpus: ingestion and the instances shipped with the package.

An instance file is a JSON object

    {
      "name": "...",
      "notes": "...",                      # optional
      "polynomial": {"degree": n, "coeffs": [[re, im], ...]},
      "roots": [[re, im], ...] | null,     # known construction roots, if any
      "initial_points": {"label": [[re, im], ...], ...}
    }

The shipped corpus spans degrees 2..12 and includes clustered- and
multiple-root stress cases whose initial points must fail certification.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .poly import MonicPolynomial, parse_complex_list, polynomial_from_json


@dataclass(frozen=True)
class CorpusInstance:
    name: str
    polynomial: MonicPolynomial
    roots: tuple[complex, ...] | None
    initial_points: dict
    notes: str = ""

    def point(self, label: str = "default") -> tuple[complex, ...]:
        return self.initial_points[label]


def instance_from_json(obj: dict) -> CorpusInstance:
    if not isinstance(obj, dict):
        raise ValueError("corpus instance must be a JSON object")
    try:
        name = str(obj["name"])
        poly = polynomial_from_json(obj["polynomial"])
        points_obj = obj["initial_points"]
    except KeyError as exc:
        raise ValueError(f"corpus instance missing field: {exc}") from exc
    roots = obj.get("roots")
    if roots is not None:
        roots = tuple(parse_complex_list(roots))
        if len(roots) != poly.degree:
            raise ValueError("root count does not match polynomial degree")
    if not isinstance(points_obj, dict) or not points_obj:
        raise ValueError("initial_points must be a non-empty object")
    initial_points = {
        str(label): tuple(parse_complex_list(pts)) for label, pts in points_obj.items()
    }
    for label, pts in initial_points.items():
        if len(pts) != poly.degree:
            raise ValueError(
                f"initial point {label!r} has {len(pts)} components for degree "
                f"{poly.degree}"
            )
    return CorpusInstance(
        name=name,
        polynomial=poly,
        roots=roots,
        initial_points=initial_points,
        notes=str(obj.get("notes", "")),
    )


def load_instance(path) -> CorpusInstance:
    with open(path, "r", encoding="utf-8") as handle:
        return instance_from_json(json.load(handle))


def builtin_corpus() -> dict[str, CorpusInstance]:
    """All instances shipped under simulroots/corpus, keyed by name."""
    out: dict[str, CorpusInstance] = {}
    root = resources.files("simulroots").joinpath("corpus")
    for entry in sorted(root.iterdir(), key=lambda e: e.name):
        if entry.name.endswith(".json"):
            instance = instance_from_json(json.loads(entry.read_text("utf-8")))
            out[instance.name] = instance
    return out


def builtin_corpus_dir() -> Path:
    """Filesystem path of the shipped corpus (for CLI use)."""
    return Path(str(resources.files("simulroots").joinpath("corpus")))
