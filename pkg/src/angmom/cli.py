"""Command-line interface.

Subcommands: matrices, rotate, mirror, eval, trig, mesh, verify, bench.
States are specified as --lm L,M, --named L:NAME, or --file state.json and
angles are radians unless --degrees is given. Usage errors exit 2,
validation/numeric errors exit 1 with a one-line diagnostic.
"""

from __future__ import annotations

import argparse
import math
import sys

import numpy as np

from . import bench as bench_mod
from . import io
from .legendre import sh_eval
from .mirror import mirror_general, mirror_x, mirror_y, mirror_z
from .realbasis import named_state
from .rotation import RotationSpec, exp_rotation, rotation_zyz
from .su2 import (
    AngularBasis,
    casimir,
    l_x,
    l_y,
    l_z,
    ladder_minus,
    ladder_plus,
    state,
)
from .wavefield import (
    SphericalPoint,
    evaluate,
    evaluate_grid,
    shape_mesh,
    trig_expansion,
)

VERIFY_TOL = 1e-10

_MATRIX_OPS = {
    "Lx": l_x,
    "Ly": l_y,
    "Lz": l_z,
    "Lplus": ladder_plus,
    "Lminus": ladder_minus,
    "L2": casimir,
    "Px": lambda basis: mirror_x(basis).matrix,
    "Py": lambda basis: mirror_y(basis).matrix,
    "Pz": lambda basis: mirror_z(basis).matrix,
}


def _parse_floats(text: str, count: int, what: str) -> list[float]:
    parts = text.split(",")
    if len(parts) != count:
        raise ValueError(f"{what} must be {count} comma-separated numbers, got {text!r}")
    try:
        values = [float(part) for part in parts]
    except ValueError:
        raise ValueError(f"{what} must be numeric, got {text!r}") from None
    if not all(math.isfinite(v) for v in values):
        raise ValueError(f"{what} must be finite, got {text!r}")
    return values


def _parse_ints(text: str, what: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise ValueError(f"{what} must be comma-separated integers, got {text!r}") from None


def _parse_resolution(text: str) -> tuple[int, int]:
    parts = text.lower().split("x")
    if len(parts) != 2:
        raise ValueError(f"resolution must look like 64x128, got {text!r}")
    try:
        nt, np_ = int(parts[0]), int(parts[1])
    except ValueError:
        raise ValueError(f"resolution must look like 64x128, got {text!r}") from None
    return nt, np_


def _to_radians(values, degrees: bool):
    if not degrees:
        return values
    if isinstance(values, (list, tuple)):
        return [math.radians(v) for v in values]
    return math.radians(values)


def _add_state_options(parser: argparse.ArgumentParser):
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--lm", metavar="L,M", help="eigenstate |l,m>")
    group.add_argument("--named", metavar="L:NAME", help="named real state, e.g. 2:xy")
    group.add_argument("--file", metavar="STATE.json", help="amplitude file")


def _resolve_state(args):
    if args.lm is not None:
        values = _parse_ints(args.lm, "--lm")
        if len(values) != 2:
            raise ValueError(f"--lm must be L,M with two integers, got {args.lm!r}")
        l, m = values
        return state(AngularBasis(l), m), f"{l},{m}"
    if args.named is not None:
        head, sep, name = args.named.partition(":")
        if not sep or not name:
            raise ValueError(f"--named must be L:NAME, got {args.named!r}")
        try:
            l = int(head)
        except ValueError:
            raise ValueError(f"--named l must be an integer, got {head!r}") from None
        return named_state(l, name).vector, f"{l}:{name}"
    return io.load_state(args.file), args.file


def _emit(text: str, path: str | None):
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="angmom",
        description="Angular-momentum matrices, rotations, mirrors, and "
        "spherical-harmonic wavefields",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("matrices", help="operator matrix as JSON")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--op", required=True, choices=sorted(_MATRIX_OPS))
    p.add_argument("-o", "--output")

    p = sub.add_parser("rotate", help="rotation operator, optionally applied")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--axis", choices=("x", "y", "z"))
    p.add_argument("--angle", type=float)
    p.add_argument("--euler", metavar="A,B,C", help="z-y-z Euler angles")
    p.add_argument("--apply", metavar="STATE.json")
    p.add_argument("--degrees", action="store_true")
    p.add_argument("-o", "--output")

    p = sub.add_parser("mirror", help="mirror operator, optionally applied")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--axis", choices=("x", "y", "z"))
    p.add_argument("--dir", metavar="THETA,PHI", help="mirror direction")
    p.add_argument("--apply", metavar="STATE.json")
    p.add_argument("--degrees", action="store_true")
    p.add_argument("-o", "--output")

    p = sub.add_parser("eval", help="wavefunction values at points")
    _add_state_options(p)
    p.add_argument("--point", metavar="THETA,PHI")
    p.add_argument("--grid", metavar="NTxNP")
    p.add_argument("--degrees", action="store_true")
    p.add_argument("-o", "--output")

    p = sub.add_parser("trig", help="closed-form trigonometric expansion")
    _add_state_options(p)
    p.add_argument("-o", "--output")

    p = sub.add_parser("mesh", help="magnitude surface as OBJ")
    _add_state_options(p)
    p.add_argument("--res", metavar="NTxNP", required=True)
    p.add_argument("--gain", type=float, default=1.0)
    p.add_argument("-o", "--output", required=True)

    p = sub.add_parser("verify", help="cross-check against Legendre harmonics")
    p.add_argument("--lmax", type=int, default=10)

    p = sub.add_parser("bench", help="kernel timing report as CSV")
    p.add_argument("--l", required=True, metavar="L1,L2,...")
    p.add_argument("--reps", type=int, required=True)
    p.add_argument("-o", "--output")

    return parser


def _cmd_matrices(args) -> int:
    op = _MATRIX_OPS[args.op](AngularBasis(args.l))
    _emit(io.dump_json(io.matrix_payload(op, args.op)) + "\n", args.output)
    return 0


def _cmd_rotate(args) -> int:
    basis = AngularBasis(args.l)
    if args.euler is not None:
        if args.axis is not None or args.angle is not None:
            raise ValueError("--euler cannot be combined with --axis/--angle")
        alpha, beta, gamma = _to_radians(
            _parse_floats(args.euler, 3, "--euler"), args.degrees
        )
        rot = rotation_zyz(basis, alpha, beta, gamma)
        name = f"Rzyz({io.fmt(alpha)},{io.fmt(beta)},{io.fmt(gamma)})"
    else:
        if args.axis is None or args.angle is None:
            raise ValueError("rotate needs --axis and --angle, or --euler")
        angle = _to_radians(args.angle, args.degrees)
        rot = exp_rotation(basis, RotationSpec(args.axis, angle))
        name = f"R{args.axis}({io.fmt(angle)})"
    if args.apply is not None:
        rotated = rot.apply(io.load_state(args.apply))
        _emit(io.dump_json(io.state_payload(rotated)) + "\n", args.output)
    else:
        _emit(io.dump_json(io.matrix_payload(rot.matrix, name)) + "\n", args.output)
    return 0


def _cmd_mirror(args) -> int:
    basis = AngularBasis(args.l)
    if (args.axis is None) == (args.dir is None):
        raise ValueError("mirror needs exactly one of --axis or --dir")
    if args.axis is not None:
        builder = {"x": mirror_x, "y": mirror_y, "z": mirror_z}[args.axis]
        mir = builder(basis)
        name = f"P{args.axis}"
    else:
        theta, phi = _to_radians(_parse_floats(args.dir, 2, "--dir"), args.degrees)
        mir = mirror_general(basis, theta, phi)
        name = f"P({io.fmt(theta)},{io.fmt(phi)})"
    if args.apply is not None:
        reflected = mir.apply(io.load_state(args.apply))
        _emit(io.dump_json(io.state_payload(reflected)) + "\n", args.output)
    else:
        _emit(io.dump_json(io.matrix_payload(mir.matrix, name)) + "\n", args.output)
    return 0


def _cmd_eval(args) -> int:
    target, _ = _resolve_state(args)
    if (args.point is None) == (args.grid is None):
        raise ValueError("eval needs exactly one of --point or --grid")
    if args.point is not None:
        theta, phi = _to_radians(_parse_floats(args.point, 2, "--point"), args.degrees)
        point = SphericalPoint(theta, phi)
        value = evaluate(target, point)
        text = io.grid_csv(
            [point.theta], [point.phi], np.array([[value]], dtype=np.complex128)
        )
    else:
        n_theta, n_phi = _parse_resolution(args.grid)
        if n_theta < 2 or n_phi < 1:
            raise ValueError(f"grid must be at least 2x1, got {args.grid!r}")
        thetas = np.linspace(0.0, math.pi, n_theta)
        phis = 2.0 * math.pi * np.arange(n_phi) / n_phi
        text = io.grid_csv(thetas, phis, evaluate_grid(target, thetas, phis))
    _emit(text, args.output)
    return 0


def _cmd_trig(args) -> int:
    target, label = _resolve_state(args)
    form = trig_expansion(target)
    terms = [
        {
            "k": k,
            "m": m,
            "theta": "cos" if m % 2 == 0 else "sin",
            "phi": parity,
            "coefficient": coeff,
        }
        for (k, m, parity), coeff in sorted(form.terms.items(),
                                            key=lambda kv: (kv[0][1], kv[0][2], kv[0][0]))
    ]
    payload = {"l": form.l, "state": label, "terms": terms, "formula": form.rendered()}
    _emit(io.dump_json(payload) + "\n", args.output)
    return 0


def _cmd_mesh(args) -> int:
    target, label = _resolve_state(args)
    n_theta, n_phi = _parse_resolution(args.res)
    mesh = shape_mesh(target, n_theta, n_phi, gain=args.gain, label=label)
    _emit(io.obj_text(mesh), args.output)
    return 0


def _cmd_verify(args) -> int:
    if args.lmax < 0:
        raise ValueError(f"--lmax must be non-negative, got {args.lmax}")
    thetas = np.linspace(0.0, math.pi, 50)
    phis = 2.0 * math.pi * np.arange(50) / 50
    worst = 0.0
    for l in range(args.lmax + 1):
        basis = AngularBasis(l)
        for m in range(-l, l + 1):
            algebraic = evaluate_grid(state(basis, m), thetas, phis)
            reference = sh_eval(l, m, thetas[:, None], phis[None, :])
            deviation = float(np.abs(algebraic - reference).max())
            worst = max(worst, deviation)
            print(f"l={l} m={m} max_dev={io.fmt(deviation)}")
    if worst >= VERIFY_TOL:
        print(f"verify: FAIL max deviation {io.fmt(worst)} >= {io.fmt(VERIFY_TOL)}")
        return 1
    print(f"verify: OK lmax={args.lmax} max deviation {io.fmt(worst)}")
    return 0


def _cmd_bench(args) -> int:
    ls = _parse_ints(args.l, "--l")
    rows = bench_mod.run_bench(ls, args.reps)
    _emit(io.bench_csv(rows), args.output)
    return 0


_COMMANDS = {
    "matrices": _cmd_matrices,
    "rotate": _cmd_rotate,
    "mirror": _cmd_mirror,
    "eval": _cmd_eval,
    "trig": _cmd_trig,
    "mesh": _cmd_mesh,
    "verify": _cmd_verify,
    "bench": _cmd_bench,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (ValueError, RuntimeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
