"""JSON and CSV wire formats.

Vectors are plain JSON arrays (5 numbers; triangular matrices travel as
their 5 parameters a1..a5), 6x6 matrices are row-major arrays of 36
numbers, factor records are small objects.  Floats serialize through
Python's shortest round-trip repr, so dump/load is lossless.
"""

from __future__ import annotations

import csv
import json
from typing import Iterable

import numpy as np

from .cone import triangular, triangular_params
from .group import TripleFactors
from .metric import ContractionRecord, SearchSummary
from .semigroup import InvariantConeElement, SemigroupFactors

CSV_COLUMNS = ("seed_index", "ratio", "violated", "g_json", "x_json", "v_json")


def _as_floats(obj, n: int, what: str) -> np.ndarray:
    if not isinstance(obj, (list, tuple)) or len(obj) != n:
        raise ValueError(f"{what}: expected an array of {n} numbers")
    try:
        return np.array([float(e) for e in obj])
    except (TypeError, ValueError) as exc:
        raise ValueError(f"{what}: expected an array of {n} numbers") from exc


def load_vector5(obj) -> np.ndarray:
    return _as_floats(obj, 5, "vector")


def dump_vector5(x) -> list[float]:
    return [float(e) for e in np.asarray(x, dtype=float)]


def load_pair(obj) -> np.ndarray:
    return _as_floats(obj, 2, "pair")


def dump_pair(u) -> list[float]:
    return [float(u[0]), float(u[1])]


def load_matrix6(obj) -> np.ndarray:
    return _as_floats(obj, 36, "matrix").reshape(6, 6)


def dump_matrix6(g) -> list[float]:
    return [float(e) for e in np.asarray(g, dtype=float).ravel()]


def load_triangular(obj) -> np.ndarray:
    return triangular(_as_floats(obj, 5, "triangular parameters"))


def dump_triangular(A) -> list[float]:
    return [float(e) for e in triangular_params(A)]


def dump_tube_point(z) -> dict:
    z = np.asarray(z, dtype=complex)
    return {"re": [float(e) for e in z.real], "im": [float(e) for e in z.imag]}


def load_tube_point(obj) -> np.ndarray:
    if not isinstance(obj, dict):
        raise ValueError("tube point: expected an object with re/im arrays")
    re = _as_floats(obj.get("re"), 5, "tube point re")
    im = _as_floats(obj.get("im"), 5, "tube point im")
    return re + 1j * im


def dump_triple_factors(f: TripleFactors) -> dict:
    return {"v": dump_vector5(f.v), "L": dump_triangular(f.L), "u": dump_pair(f.u)}


def load_triple_factors(obj) -> TripleFactors:
    if not isinstance(obj, dict):
        raise ValueError("triple factors: expected an object with v/L/u")
    return TripleFactors(
        v=load_vector5(obj.get("v")),
        L=load_triangular(obj.get("L")),
        u=load_pair(obj.get("u")),
    )


def dump_semigroup_factors(f: SemigroupFactors) -> dict:
    return {"v": dump_vector5(f.v), "A": dump_triangular(f.A), "u": dump_pair(f.u)}


def load_semigroup_factors(obj) -> SemigroupFactors:
    if not isinstance(obj, dict):
        raise ValueError("semigroup factors: expected an object with v/A/u")
    return SemigroupFactors(
        v=load_vector5(obj.get("v")),
        A=load_triangular(obj.get("A")),
        u=load_pair(obj.get("u")),
    )


def dump_polar(A, X: InvariantConeElement) -> dict:
    return {
        "A": dump_triangular(A),
        "X": {"v": dump_vector5(X.v), "u": dump_pair(X.u)},
    }


def load_polar(obj) -> tuple[np.ndarray, InvariantConeElement]:
    if not isinstance(obj, dict) or not isinstance(obj.get("X"), dict):
        raise ValueError("polar factors: expected an object with A and X{v,u}")
    X = InvariantConeElement(
        v=load_vector5(obj["X"].get("v")), u=load_pair(obj["X"].get("u"))
    )
    return load_triangular(obj.get("A")), X


def dump_summary(s: SearchSummary) -> dict:
    return {
        "max_ratio": float(s.max_ratio),
        "violation_count": int(s.violation_count),
        "n_samples": int(s.n_samples),
    }


def write_records_csv(fileobj, records: Iterable[ContractionRecord]) -> None:
    """One row per record; matrices and vectors ride along as embedded
    JSON strings so a row is self-contained."""
    w = csv.writer(fileobj, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    compact = {"separators": (",", ":")}
    for r in records:
        w.writerow(
            [
                r.seed_index,
                repr(float(r.ratio)),
                "true" if r.violated else "false",
                json.dumps(dump_matrix6(r.g), **compact),
                json.dumps(dump_vector5(r.x), **compact),
                json.dumps(dump_vector5(r.v), **compact),
            ]
        )
