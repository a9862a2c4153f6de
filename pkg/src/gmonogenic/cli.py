"""Command-line front end.

Commands: table, eval, check-cr, solve-char, laplace, cauchy-check.
Inputs are JSON files (or inline JSON starting with "{"); complex
numbers on the command line are "re,im" pairs.  Exit codes: 0 for
success or a passing verification, 1 for a failed verification, 2 for
input or domain errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, Sequence

from . import jsonio
from .algebra import (E1, E2, E3, E4, IJK_I, IJK_J, IJK_K, IjkQuaternion,
                      Quaternion)
from .errors import GMonogenicError
from .mappings import Field, Side, cr_residual
from .pde import apply_fd, char_element, char_poly_in_b, char_scalar, laplace3d, \
    harmonic_solution, roots
from .space import LAPLACE_T0, Point3, Triple

_BASIS_NAMES = ("e1", "e2", "e3", "e4")
_BASIS = (E1, E2, E3, E4)

# Products of basis pairs, row element times column element.
_EXPECTED_TABLE = (
    ("e1", "0", "e3", "0"),
    ("0", "e2", "0", "e4"),
    ("0", "e3", "0", "e1"),
    ("e4", "0", "e2", "0"),
)

_IJK_AXIOM_TOL = 1e-15


def _parse_complex(text: str) -> complex:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"expected re,im but got {text!r}")
    return complex(float(parts[0]), float(parts[1]))


def _parse_point(text: str) -> Point3:
    parts = text.split(",")
    if len(parts) != 3:
        raise ValueError(f"expected x,y,z but got {text!r}")
    return (float(parts[0]), float(parts[1]), float(parts[2]))


@dataclass(frozen=True)
class GridSpec:
    """Axis-aligned box sampled on a regular lattice."""

    bounds: tuple[tuple[float, float], tuple[float, float], tuple[float, float]]
    counts: tuple[int, int, int]

    def __post_init__(self) -> None:
        for (lo, hi), n in zip(self.bounds, self.counts):
            if not lo < hi:
                raise ValueError(f"grid axis needs min < max, got [{lo}, {hi}]")
            if n < 2:
                raise ValueError("grid needs at least 2 samples per axis")

    @classmethod
    def parse(cls, text: str) -> GridSpec:
        axes = text.split(",")
        if len(axes) != 3:
            raise ValueError(f"grid must have 3 axes, got {text!r}")
        bounds = []
        counts = []
        for axis in axes:
            fields = axis.split(":")
            if len(fields) != 3:
                raise ValueError(f"each axis must be min:max:count, got {axis!r}")
            bounds.append((float(fields[0]), float(fields[1])))
            counts.append(int(fields[2]))
        return cls(tuple(bounds), tuple(counts))

    def axis_values(self, k: int) -> list[float]:
        lo, hi = self.bounds[k]
        n = self.counts[k]
        return [lo + i * (hi - lo) / (n - 1) for i in range(n)]

    def points(self) -> Iterator[Point3]:
        for x in self.axis_values(0):
            for y in self.axis_values(1):
                for z in self.axis_values(2):
                    yield (x, y, z)

    def total(self) -> int:
        return self.counts[0] * self.counts[1] * self.counts[2]


@dataclass
class ResidualReport:
    """Per-point residuals over a grid plus their summary."""

    config: dict
    records: list[dict]

    @property
    def max_residual(self) -> float:
        return max(r["residual"] for r in self.records)

    @property
    def mean_residual(self) -> float:
        return sum(r["residual"] for r in self.records) / len(self.records)

    @property
    def argmax_point(self) -> list[float]:
        worst = max(self.records, key=lambda r: r["residual"])
        return worst["point"]

    def to_json(self) -> dict:
        return {
            "config": self.config,
            "summary": {"max": self.max_residual, "mean": self.mean_residual,
                        "count": len(self.records), "argmax": self.argmax_point},
            "records": self.records,
        }


def _load_payload(arg: str) -> object:
    """Inline JSON, a bare preset name, or a path to a JSON file."""
    stripped = arg.strip()
    if stripped.startswith("{"):
        return json.loads(stripped)
    if stripped in jsonio.TRIPLE_PRESETS or stripped in ("laplace3d", "example5"):
        return stripped
    return json.loads(Path(arg).read_text())


def _emit(data: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(data, sort_keys=True))
    else:
        _print_text(data)


def _print_text(data: object, indent: int = 0) -> None:
    pad = "  " * indent
    if isinstance(data, dict):
        for key, value in data.items():
            if isinstance(value, (dict, list)) and value and not _is_flat(value):
                print(f"{pad}{key}:")
                _print_text(value, indent + 1)
            else:
                print(f"{pad}{key}: {_flat(value)}")
    elif isinstance(data, list):
        for item in data:
            if isinstance(item, (dict, list)) and item and not _is_flat(item):
                print(f"{pad}-")
                _print_text(item, indent + 1)
            else:
                print(f"{pad}- {_flat(item)}")
    else:
        print(f"{pad}{_flat(data)}")


def _is_flat(value: object) -> bool:
    if isinstance(value, list):
        return all(isinstance(v, (int, float, str, bool)) for v in value)
    return False


def _flat(value: object) -> str:
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, list):
        return "[" + ", ".join(_flat(v) for v in value) + "]"
    return str(value)


# ----------------------------- commands -----------------------------

def _cmd_table(args: argparse.Namespace) -> int:
    entries = []
    all_exact = True
    for i, left in enumerate(_BASIS):
        for j, right in enumerate(_BASIS):
            product = left * right
            expected_name = _EXPECTED_TABLE[i][j]
            expected = (Quaternion(0, 0, 0, 0) if expected_name == "0"
                        else _BASIS[_BASIS_NAMES.index(expected_name)])
            exact = product == expected
            all_exact = all_exact and exact
            entries.append({"left": _BASIS_NAMES[i], "right": _BASIS_NAMES[j],
                            "expected": expected_name, "exact": exact})
    axioms = []
    i_q = IJK_I.to_quaternion()
    j_q = IJK_J.to_quaternion()
    k_q = IJK_K.to_quaternion()
    minus_one = IjkQuaternion(-1, 0, 0, 0).to_quaternion()
    checks = (
        ("I*I = -1", i_q * i_q, minus_one),
        ("J*J = -1", j_q * j_q, minus_one),
        ("K*K = -1", k_q * k_q, minus_one),
        ("I*J = K", i_q * j_q, k_q),
        ("J*I = -K", j_q * i_q, -k_q),
        ("J*K = I", j_q * k_q, i_q),
        ("K*J = -I", k_q * j_q, -i_q),
        ("K*I = J", k_q * i_q, j_q),
        ("I*K = -J", i_q * k_q, -j_q),
    )
    axioms_pass = True
    for label, got, expected in checks:
        err = got.distance(expected)
        ok = err <= _IJK_AXIOM_TOL
        axioms_pass = axioms_pass and ok
        axioms.append({"axiom": label, "error": err, "ok": ok})
    passed = all_exact and axioms_pass
    _emit({"table": entries, "axioms": axioms, "pass": passed}, args.format)
    return 0 if passed else 1


def _cmd_eval(args: argparse.Namespace) -> int:
    mapping = jsonio.map_from_json(_load_payload(args.map))
    point = _parse_point(args.point)
    value = mapping.eval(point)
    xi1, xi2 = mapping.triple.xi(point)
    _emit({"value": jsonio.quaternion_to_json(value),
           "xi1": [xi1.real, xi1.imag], "xi2": [xi2.real, xi2.imag]},
          args.format)
    return 0


def _counterexample_field() -> tuple[Field, Side, Triple]:
    # xi2 * e1 over the t0 harmonic triple: violates the y-condition with
    # residual |a2 - a1| = 1 regardless of step.
    triple = LAPLACE_T0

    def field(p: Point3) -> Quaternion:
        return Quaternion(triple.xi(p)[1], 0, 0, 0)

    return field, Side.RIGHT, triple


def _cmd_check_cr(args: argparse.Namespace) -> int:
    if args.demo_counterexample:
        field, side, triple = _counterexample_field()
    else:
        if args.map is None:
            raise ValueError("a map file is required unless --demo-counterexample is set")
        mapping = jsonio.map_from_json(_load_payload(args.map))
        field, side, triple = mapping.as_field(), mapping.side, mapping.triple
    grid = GridSpec.parse(args.grid)
    records = []
    for p in grid.points():
        ry, rz = cr_residual(field, side, triple, p, args.step)
        records.append({"point": list(p), "residual": max(ry, rz),
                        "residual_y": ry, "residual_z": rz})
    report = ResidualReport(
        config={"step": args.step, "tol": args.tol, "grid": args.grid,
                "side": side.value}, records=records)
    _emit(report.to_json(), args.format)
    return 0 if report.max_residual <= args.tol else 1


def _cmd_solve_char(args: argparse.Namespace) -> int:
    op = jsonio.operator_from_json(_load_payload(args.pde))
    a_values = [_parse_complex(text) for text in args.a]
    solutions = []
    pairs = []  # (a, b) candidates for one coefficient slot
    worst = 0.0
    for a in a_values:
        poly = char_poly_in_b(op, a)
        found = roots(poly)
        residuals = [abs(char_scalar(op, a, b)) for b in found]
        worst = max(worst, max(residuals))
        solutions.append({
            "a": [a.real, a.imag],
            "roots": [[b.real, b.imag] for b in found],
            "residuals": residuals,
        })
        pairs.extend((a, b) for b in found)
    candidates = []
    for a1, b1 in pairs:
        for a2, b2 in pairs:
            triple = Triple(a1, a2, b1, b2)
            report = triple.validate()
            candidates.append({
                "triple": jsonio.triple_to_json(triple),
                "valid": report.ok,
                "problems": report.problems(),
                "char_norm": char_element(op, triple).norm(),
            })
    _emit({"operator": jsonio.operator_to_json(op), "solutions": solutions,
           "candidate_triples": candidates, "max_root_residual": worst},
          args.format)
    return 0 if worst <= args.tol else 1


def _cmd_laplace(args: argparse.Namespace) -> int:
    fn = jsonio.function_from_json(_load_payload(args.f))
    field = harmonic_solution(fn, _parse_complex(args.t), args.part)
    grid = GridSpec.parse(args.grid)
    op = laplace3d()
    rows = []
    records = []
    for p in grid.points():
        u = field(p)
        residual = apply_fd(op, field, p, args.verify)
        rows.append((p[0], p[1], p[2], u, residual))
        records.append({"point": list(p), "residual": abs(residual)})
    csv_text = "x,y,z,u,fd_residual\n" + "".join(
        f"{x!r},{y!r},{z!r},{u!r},{r!r}\n" for x, y, z, u, r in rows)
    report = ResidualReport(
        config={"t": args.t, "part": args.part, "grid": args.grid,
                "verify_step": args.verify, "tol": args.tol},
        records=records)
    if args.out:
        Path(args.out).write_text(csv_text)
        _emit(report.to_json(), args.format)
    else:
        sys.stdout.write(csv_text)
    return 0 if report.max_residual <= args.tol else 1


def _cmd_cauchy_check(args: argparse.Namespace) -> int:
    mapping = jsonio.map_from_json(_load_payload(args.map))
    point = _parse_point(args.point)
    nodes_list = args.nodes or [32, 64, 128, 256]
    direct = mapping.eval(point)
    table = []
    for nodes in nodes_list:
        err = mapping.cauchy_eval(point, nodes).distance(direct)
        table.append({"nodes": nodes, "error": err})
    final = table[-1]["error"]
    _emit({"value": jsonio.quaternion_to_json(direct), "convergence": table,
           "final_error": final, "tol": args.tol}, args.format)
    return 0 if final <= args.tol else 1


# ----------------------------- parser -----------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gmonogenic",
        description="Monogenic quaternion mappings and PDE solution tools")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text",
                        help="output format (default: text)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", parents=[common],
                       help="print the basis multiplication table and axiom checks")
    p.set_defaults(handler=_cmd_table)

    p = sub.add_parser("eval", parents=[common],
                       help="evaluate a mapping at a point")
    p.add_argument("map", help="map JSON file or inline JSON")
    p.add_argument("--point", required=True, help="evaluation point x,y,z")
    p.set_defaults(handler=_cmd_eval)

    p = sub.add_parser("check-cr", parents=[common],
                       help="Cauchy-Riemann-type residuals over a grid")
    p.add_argument("map", nargs="?", help="map JSON file or inline JSON")
    p.add_argument("--grid", default="-1:1:3,-1:1:3,-1:1:3",
                   help="grid spec min:max:count per axis (default -1:1:3 x3)")
    p.add_argument("--step", type=float, default=1e-5,
                   help="finite-difference step (default 1e-5)")
    p.add_argument("--tol", type=float, default=1e-7,
                   help="pass threshold on the max residual (default 1e-7)")
    p.add_argument("--demo-counterexample", action="store_true",
                   help="check the built-in non-monogenic demo field instead of a map")
    p.set_defaults(handler=_cmd_check_cr)

    p = sub.add_parser("solve-char", parents=[common],
                       help="solve the characteristic equation for b at fixed a")
    p.add_argument("pde", help='operator JSON, file, or preset ("laplace3d", "example5")')
    p.add_argument("--a", action="append", required=True,
                   help="candidate a value re,im (repeatable)")
    p.add_argument("--tol", type=float, default=1e-10,
                   help="pass threshold on root residuals (default 1e-10)")
    p.set_defaults(handler=_cmd_solve_char)

    p = sub.add_parser("laplace", parents=[common],
                       help="generate a harmonic field on a grid as CSV")
    p.add_argument("--f", required=True, help="analytic function JSON file or inline")
    p.add_argument("--t", required=True, help="complex parameter re,im")
    p.add_argument("--part", choices=("re", "im"), default="re")
    p.add_argument("--grid", default="-1:1:5,-1:1:5,-1:1:5",
                   help="grid spec min:max:count per axis (default -1:1:5 x3)")
    p.add_argument("--out", help="CSV output path (omit to print CSV to stdout)")
    p.add_argument("--verify", type=float, default=1e-3,
                   help="finite-difference step for the residual column (default 1e-3)")
    p.add_argument("--tol", type=float, default=1e-6,
                   help="pass threshold on |fd_residual| (default 1e-6)")
    p.set_defaults(handler=_cmd_laplace)

    p = sub.add_parser("cauchy-check", parents=[common],
                       help="compare contour-integral evaluation against direct evaluation")
    p.add_argument("map", help="map JSON file or inline JSON")
    p.add_argument("--point", required=True, help="evaluation point x,y,z")
    p.add_argument("--nodes", action="append", type=int,
                   help="quadrature node count (repeatable; default 32 64 128 256)")
    p.add_argument("--tol", type=float, default=1e-10,
                   help="pass threshold on the final error (default 1e-10)")
    p.set_defaults(handler=_cmd_cauchy_check)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except GMonogenicError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
