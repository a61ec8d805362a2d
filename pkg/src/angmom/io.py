"""Deterministic serialization: matrix/state JSON, grid CSV, mesh OBJ.

All numeric output is printed with 17 significant digits and nothing
time-dependent is ever written, so identical inputs produce byte-identical
files.
"""

from __future__ import annotations

import json
import math

import numpy as np

from .su2 import AngularBasis, OperatorMatrix, StateVector
from .wavefield import ShapeMesh

ORDERING = "m-descending"


def fmt(value: float) -> str:
    """17-significant-digit decimal form (round-trips any double)."""
    return format(float(value), ".17g")


def dump_json(obj) -> str:
    """JSON text with floats rendered through fmt (json.dumps would use
    repr, which varies in width)."""
    pieces: list[str] = []
    _write_json(obj, pieces)
    return "".join(pieces)


def _write_json(obj, pieces: list[str]):
    if isinstance(obj, dict):
        pieces.append("{")
        for i, (key, value) in enumerate(obj.items()):
            if i:
                pieces.append(", ")
            pieces.append(json.dumps(key))
            pieces.append(": ")
            _write_json(value, pieces)
        pieces.append("}")
    elif isinstance(obj, (list, tuple)):
        pieces.append("[")
        for i, value in enumerate(obj):
            if i:
                pieces.append(", ")
            _write_json(value, pieces)
        pieces.append("]")
    elif isinstance(obj, bool):
        pieces.append("true" if obj else "false")
    elif isinstance(obj, (int, np.integer)):
        pieces.append(str(int(obj)))
    elif isinstance(obj, (float, np.floating)):
        if not math.isfinite(obj):
            raise ValueError(f"cannot serialize non-finite number {obj!r}")
        pieces.append(fmt(obj))
    elif isinstance(obj, str):
        pieces.append(json.dumps(obj))
    elif obj is None:
        pieces.append("null")
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")


def _complex_rows(array: np.ndarray) -> list:
    if array.ndim == 1:
        return [[entry.real, entry.imag] for entry in array]
    return [_complex_rows(row) for row in array]


def matrix_payload(op: OperatorMatrix, name: str | None = None) -> dict:
    payload = {"l": op.basis.l, "ordering": ORDERING}
    if name is not None:
        payload["op"] = name
    payload["structure"] = {
        "hermitian": op.hermitian,
        "unitary": op.unitary,
        "real": op.real,
    }
    payload["entries"] = _complex_rows(op.entries)
    return payload


def state_payload(state: StateVector) -> dict:
    return {
        "l": state.basis.l,
        "ordering": ORDERING,
        "amplitudes": _complex_rows(state.amplitudes),
    }


def parse_state(payload: dict) -> StateVector:
    """Inverse of state_payload; raises naming the offending field."""
    if not isinstance(payload, dict):
        raise ValueError("state JSON must be an object")
    if "l" not in payload:
        raise ValueError("state JSON is missing the field 'l'")
    l = payload["l"]
    if isinstance(l, bool) or not isinstance(l, int):
        raise ValueError(f"state field 'l' must be an integer, got {l!r}")
    ordering = payload.get("ordering", ORDERING)
    if ordering != ORDERING:
        raise ValueError(f"unsupported state ordering {ordering!r}")
    raw = payload.get("amplitudes")
    if raw is None:
        raise ValueError("state JSON is missing the field 'amplitudes'")
    basis = AngularBasis(l)
    if len(raw) != basis.dimension:
        raise ValueError(
            f"field 'amplitudes' has {len(raw)} entries, expected {basis.dimension}"
        )
    amps = np.empty(basis.dimension, dtype=np.complex128)
    for i, pair in enumerate(raw):
        if (
            not isinstance(pair, (list, tuple))
            or len(pair) != 2
            or not all(isinstance(part, (int, float)) for part in pair)
        ):
            raise ValueError(
                f"amplitudes[{i}] must be a [re, im] number pair, got {pair!r}"
            )
        amps[i] = complex(pair[0], pair[1])
    return StateVector(basis, amps)


def load_state(path: str) -> StateVector:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_state(json.load(handle))


def grid_csv(thetas, phis, values: np.ndarray) -> str:
    """CSV of point evaluations, row-major over the grid."""
    lines = ["theta,phi,re,im"]
    for i, theta in enumerate(thetas):
        for j, phi in enumerate(phis):
            value = values[i, j]
            lines.append(f"{fmt(theta)},{fmt(phi)},{fmt(value.real)},{fmt(value.imag)}")
    return "\n".join(lines) + "\n"


def bench_csv(rows) -> str:
    """CSV of (l, method, wall_time_s, max_defect) benchmark rows."""
    lines = ["l,method,wall_time_s,max_defect"]
    for l, method, seconds, defect in rows:
        lines.append(f"{l},{method},{fmt(seconds)},{fmt(defect)}")
    return "\n".join(lines) + "\n"


def obj_text(mesh: ShapeMesh) -> str:
    """Wavefront OBJ with quad faces split into the material groups
    phase_plus / phase_minus by the dominant sign of each face."""
    lines = [f"# angmom surface l={mesh.l} label={mesh.label or '-'}"]
    for vx, vy, vz in mesh.vertices:
        lines.append(f"v {fmt(vx)} {fmt(vy)} {fmt(vz)}")

    def vertex_id(i: int, j: int) -> int:
        return i * mesh.n_phi + (j % mesh.n_phi) + 1

    plus_faces, minus_faces = [], []
    for i in range(mesh.n_theta - 1):
        for j in range(mesh.n_phi):
            corners = (
                vertex_id(i, j),
                vertex_id(i + 1, j),
                vertex_id(i + 1, j + 1),
                vertex_id(i, j + 1),
            )
            total = (
                mesh.values[i, j % mesh.n_phi]
                + mesh.values[i + 1, j % mesh.n_phi]
                + mesh.values[i + 1, (j + 1) % mesh.n_phi]
                + mesh.values[i, (j + 1) % mesh.n_phi]
            )
            face = "f {} {} {} {}".format(*corners)
            (plus_faces if total >= 0.0 else minus_faces).append(face)
    lines.append("g phase_plus")
    lines.append("usemtl phase_plus")
    lines.extend(plus_faces)
    lines.append("g phase_minus")
    lines.append("usemtl phase_minus")
    lines.extend(minus_faces)
    return "\n".join(lines) + "\n"
