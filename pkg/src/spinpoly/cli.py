"""Command-line front end.

Subcommands:

  coeffs    exact series data for one coefficient (JSON or CSV)
  rotate    rotation matrix for (two_j, axis, theta)
  verify    run a named verification suite, exit 1 on failure
  plotdata  uniform-grid coefficient samples as CSV, optional figure
  bench     timing/accuracy comparison of the two rotation routes
  duals     exact Vandermonde matrix, inverse, dual diagonals, metric

Spin always enters as the integer ``--two-j`` (2j), never a fractional
j.  Exit codes: 0 success, 1 verification failure, 2 usage or input
error.  Floats are printed with 17 significant digits (as quoted
strings inside JSON) so identical invocations give identical bytes.
"""

from __future__ import annotations

import argparse
import json
import statistics
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from math import pi

import numpy as np

from .coefficients import coefficient
from .rotation import OracleError, rotation_polynomial, rotation_reference
from .serialize import format_float, fraction_json, polynomial_json
from .vandermonde import build_vandermonde
from .verify import SUITES, run_suite, worker_count

__all__ = ["main"]


def _parse_int_list(text: str) -> list[int]:
    if not text.strip():
        return []
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise ValueError(f"expected a comma-separated integer list, got {text!r}")


def _parse_axis(text: str) -> tuple[float, float, float]:
    parts = text.split(",")
    if len(parts) != 3:
        raise ValueError("axis must be given as x,y,z")
    try:
        x, y, z = (float(p) for p in parts)
    except ValueError:
        raise ValueError(f"axis components must be numbers, got {text!r}")
    return x, y, z


def _coefficient_terms(poly) -> list[tuple[int, float]]:
    return [(m, float(poly.sine_coeffs[m])) for m in sorted(poly.sine_coeffs)]


def _sample_coefficient(poly, thetas: np.ndarray) -> np.ndarray:
    s = np.sin(0.5 * thetas)
    total = np.zeros_like(thetas)
    for m, c in _coefficient_terms(poly):
        total += c * s**m
    if poly.epsilon:
        total *= np.cos(0.5 * thetas)
    return total


def _write(stream, text: str) -> None:
    stream.write(text)
    if not text.endswith("\n"):
        stream.write("\n")


def _cmd_coeffs(args) -> int:
    poly = coefficient(args.two_j, args.k)
    if args.format == "json":
        _write(sys.stdout, json.dumps(polynomial_json(poly), indent=2))
    else:
        lines = ["power,num,den"]
        for m in sorted(poly.sine_coeffs):
            q = poly.sine_coeffs[m]
            lines.append(f"{m},{q.numerator},{q.denominator}")
        _write(sys.stdout, "\n".join(lines))
    return 0


def _complex_cell(z: complex) -> list[str]:
    return [format_float(z.real), format_float(z.imag)]


def _cmd_rotate(args) -> int:
    axis = _parse_axis(args.axis)
    result = rotation_polynomial(args.two_j, axis, args.theta)
    if args.format == "json":
        payload = {
            "two_j": result.two_j,
            "axis": [format_float(c) for c in result.axis],
            "theta": format_float(result.theta),
            "matrix": [[_complex_cell(z) for z in row] for row in result.matrix],
        }
        _write(sys.stdout, json.dumps(payload, indent=2))
    else:
        lines = ["row,col,re,im"]
        for r, row in enumerate(result.matrix):
            for c, z in enumerate(row):
                lines.append(
                    f"{r},{c},{format_float(z.real)},{format_float(z.imag)}"
                )
        _write(sys.stdout, "\n".join(lines))
    return 0


def _cmd_verify(args) -> int:
    report = run_suite(args.suite, args.max_two_j)
    for check in report["checks"]:
        if check["max_deviation"] is not None:
            check["max_deviation"] = format_float(check["max_deviation"])
    if report["max_deviation"] is not None:
        report["max_deviation"] = format_float(report["max_deviation"])
    _write(sys.stdout, json.dumps(report, indent=2))
    return 0 if report["status"] == "pass" else 1


def _cmd_plotdata(args) -> int:
    two_j = args.two_j
    if args.k_list is None:
        k_values = list(range(min(5, two_j) + 1))
    else:
        k_values = _parse_int_list(args.k_list)
        if not k_values:
            raise ValueError("k list must not be empty")
    for k in k_values:
        if k < 0 or k > two_j:
            raise ValueError(f"coefficient index k={k} outside 0..{two_j}")
    if args.samples < 2:
        raise ValueError("samples must be at least 2")
    if not args.theta_min < args.theta_max:
        raise ValueError("theta range must satisfy theta_min < theta_max")

    thetas = np.linspace(args.theta_min, args.theta_max, args.samples)
    polys = {k: coefficient(two_j, k) for k in k_values}
    with ThreadPoolExecutor(max_workers=worker_count()) as pool:
        sampled = list(
            pool.map(lambda k: _sample_coefficient(polys[k], thetas), k_values)
        )
    columns = dict(zip(k_values, sampled))

    lines = ["theta," + ",".join(f"A_{k}" for k in k_values)]
    for i, theta in enumerate(thetas):
        cells = [format_float(theta)]
        cells.extend(format_float(columns[k][i]) for k in k_values)
        lines.append(",".join(cells))
    text = "\n".join(lines) + "\n"

    if args.output:
        with open(args.output, "w", newline="") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)

    if args.figure:
        from .figures import render_coefficient_figure

        render_coefficient_figure(args.figure, thetas, columns, two_j)
    return 0


def _unitarity_defect(matrix: np.ndarray) -> float:
    dim = matrix.shape[0]
    return float(np.max(np.abs(matrix.conj().T @ matrix - np.eye(dim))))


def _cmd_bench(args) -> int:
    if args.repetitions < 1:
        raise ValueError("repetitions must be at least 1")
    two_j_values = _parse_int_list(args.two_j_list)
    results = []
    for two_j in two_j_values:
        if two_j < 0:
            raise ValueError("two_j values must be non-negative")
        rng = np.random.default_rng(7 + two_j)
        v = rng.normal(size=3)
        axis = tuple(v / np.linalg.norm(v))
        theta = float(rng.uniform(-4 * pi, 4 * pi))
        # warm the exact-coefficient cache so timings cover evaluation only
        poly_result = rotation_polynomial(two_j, axis, theta)
        ref_result = rotation_reference(two_j, axis, theta)

        poly_times = []
        for _ in range(args.repetitions):
            start = time.perf_counter()
            rotation_polynomial(two_j, axis, theta)
            poly_times.append(time.perf_counter() - start)
        ref_times = []
        for _ in range(args.repetitions):
            start = time.perf_counter()
            rotation_reference(two_j, axis, theta)
            ref_times.append(time.perf_counter() - start)

        cross = float(np.max(np.abs(poly_result.matrix - ref_result.matrix)))
        results.append(
            {
                "two_j": two_j,
                "dimension": two_j + 1,
                "theta": format_float(theta),
                "polynomial": {
                    "median_seconds": format_float(statistics.median(poly_times)),
                    "max_deviation": format_float(
                        _unitarity_defect(poly_result.matrix)
                    ),
                },
                "eigendecomposition": {
                    "median_seconds": format_float(statistics.median(ref_times)),
                    "max_deviation": format_float(
                        _unitarity_defect(ref_result.matrix)
                    ),
                },
                "cross_difference": format_float(cross),
            }
        )
    payload = {"repetitions": args.repetitions, "results": results}
    _write(sys.stdout, json.dumps(payload, indent=2))
    return 0


def _cmd_duals(args) -> int:
    data = build_vandermonde(args.two_j)
    payload = {
        "two_j": data.two_j,
        "nodes": list(data.nodes),
        "V": [[fraction_json(x) for x in row] for row in data.V],
        "V_inv": [[fraction_json(x) for x in row] for row in data.V_inv],
        "T": [[fraction_json(x) for x in row] for row in data.T],
        "G": [[fraction_json(x) for x in row] for row in data.G],
    }
    _write(sys.stdout, json.dumps(payload, indent=2))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spinpoly",
        description="Rotation operators as exact spin matrix polynomials.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coeffs", help="emit one coefficient polynomial")
    p.add_argument("--two-j", type=int, required=True, dest="two_j")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(handler=_cmd_coeffs)

    p = sub.add_parser("rotate", help="compute a rotation matrix")
    p.add_argument("--two-j", type=int, required=True, dest="two_j")
    p.add_argument("--theta", type=float, required=True)
    p.add_argument("--axis", default="0,0,1", help="unit axis as x,y,z")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(handler=_cmd_rotate)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=SUITES, required=True)
    p.add_argument("--max-two-j", type=int, default=12, dest="max_two_j")
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("plotdata", help="sample coefficients on a theta grid")
    p.add_argument("--two-j", type=int, required=True, dest="two_j")
    p.add_argument(
        "--k-list",
        dest="k_list",
        default=None,
        help="comma-separated coefficient indices (default 0..min(5, 2j))",
    )
    p.add_argument("--theta-min", type=float, default=0.0, dest="theta_min")
    p.add_argument("--theta-max", type=float, default=4 * pi, dest="theta_max")
    p.add_argument("--samples", type=int, default=1024)
    p.add_argument("--output", default=None, help="CSV file (default stdout)")
    p.add_argument("--figure", default=None, help="also render a figure here")
    p.set_defaults(handler=_cmd_plotdata)

    p = sub.add_parser("bench", help="compare both rotation routes")
    p.add_argument(
        "--two-j-list", default="2,8,24,60", dest="two_j_list",
        help="comma-separated two_j values (empty for none)",
    )
    p.add_argument("--repetitions", type=int, default=5)
    p.set_defaults(handler=_cmd_bench)

    p = sub.add_parser("duals", help="emit exact Vandermonde/dual/metric data")
    p.add_argument("--two-j", type=int, required=True, dest="two_j")
    p.set_defaults(handler=_cmd_duals)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except OracleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
