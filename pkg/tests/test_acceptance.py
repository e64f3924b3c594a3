"""Acceptance suite: every exit criterion at its stated tolerance.

Each test prints one pass/fail line (visible with ``pytest -s`` or in
failure output), then asserts.  Tolerances are pinned here and nowhere
else; exact criteria compare rationals.
"""

import json
import math
import subprocess
import sys
import time
from fractions import Fraction

import numpy as np

from spinpoly import (
    cfn,
    cfn_from_vandermonde,
    coefficient,
    coefficient_truncation_route,
    compare_rotation,
    dual_matrices,
    dual_truncation_series,
    evaluate_coefficient,
    metric,
    rotation_polynomial,
    verify_biorthonormality,
    verify_power_reduction,
    verify_second_order_ode,
    verify_trace_identities,
)
from spinpoly.biorthogonal import (
    basis_power,
    dual_function,
    dual_pairing,
    index_range,
)
from spinpoly.spin_algebra import axis_dot_J
from spinpoly.vandermonde import build_vandermonde

TRAPEZOID = getattr(np, "trapezoid", None) or np.trapz


def report(number: int, name: str, ok: bool, extra: str = "") -> None:
    status = "PASS" if ok else "FAIL"
    suffix = f" ({extra})" if extra else ""
    print(f"acceptance {number:02d} {name}: {status}{suffix}")


def frac_rows(den, rows):
    return tuple(tuple(Fraction(x, den) for x in row) for row in rows)


def test_criterion_01_rotation_identity():
    start = time.perf_counter()
    worst_ratio = 0.0
    ok = True
    for two_j in range(1, 13):
        rng = np.random.default_rng(1000 + two_j)
        bound = 1e-9 * (two_j + 1)
        for _ in range(25):
            v = rng.normal(size=3)
            axis = v / np.linalg.norm(v)
            theta = rng.uniform(-4 * math.pi, 4 * math.pi)
            deviation = compare_rotation(two_j, axis, theta)
            worst_ratio = max(worst_ratio, deviation / bound)
            ok = ok and deviation <= bound
    elapsed = time.perf_counter() - start
    report(1, "rotation-identity-vs-oracle", ok,
           f"worst {worst_ratio:.2e} of bound, {elapsed:.1f}s")
    assert ok


def test_criterion_02_route_equivalence():
    start = time.perf_counter()
    ok = all(
        coefficient_truncation_route(two_j, k) == coefficient(two_j, k)
        for two_j in range(17)
        for k in range(two_j + 1)
    )
    elapsed = time.perf_counter() - start
    report(2, "coefficient-route-equivalence", ok, f"{elapsed:.1f}s")
    assert ok


def test_criterion_03_power_reduction_lemma():
    exact_ok = all(verify_power_reduction(two_j) for two_j in range(25))
    float_ok = True
    # residuals scaled by the largest entry: raw entries reach (2j)^(2j+1)
    for two_j in range(11):
        rng = np.random.default_rng(300 + two_j)
        coeffs = [
            -float(Fraction(2 ** (1 + two_j - m)) * cfn(two_j + 2, m + 1))
            for m in range(two_j + 1)
        ]
        for _ in range(5):
            v = rng.normal(size=3)
            s = 2.0 * axis_dot_J(two_j, v / np.linalg.norm(v))
            powers = [np.eye(two_j + 1, dtype=complex)]
            for _ in range(two_j + 1):
                powers.append(powers[-1] @ s)
            rhs = sum(c * powers[m] for m, c in enumerate(coeffs))
            lhs = powers[two_j + 1]
            scale = max(1.0, float(np.max(np.abs(lhs))))
            float_ok = float_ok and (
                float(np.max(np.abs(lhs - rhs))) / scale <= 1e-9
            )
    ok = exact_ok and float_ok
    report(3, "power-reduction-lemma", ok)
    assert ok


KNOWN_V_INV = {
    1: frac_rows(2, [[1, 1], [1, -1]]),
    2: frac_rows(8, [[0, 8, 0], [2, 0, -2], [1, -2, 1]]),
    3: frac_rows(
        48,
        [[-3, 27, 27, -3], [-1, 27, -27, 1], [3, -3, -3, 3], [1, -3, 3, -1]],
    ),
    4: frac_rows(
        384,
        [
            [0, 0, 384, 0, 0],
            [-16, 128, 0, -128, 16],
            [-4, 64, -120, 64, -4],
            [4, -8, 0, 8, -4],
            [1, -4, 6, -4, 1],
        ],
    ),
}

KNOWN_METRIC = {
    1: frac_rows(2, [[1, 0], [0, 1]]),
    2: frac_rows(64, [[5, -2, -3], [-2, 68, -2], [-3, -2, 5]]),
    3: frac_rows(
        2304,
        [
            [20, -120, -60, 16],
            [-120, 1476, 0, -60],
            [-60, 0, 1476, -120],
            [16, -60, -120, 20],
        ],
    ),
    4: frac_rows(
        147456,
        [
            [289, -2340, 486, 1820, -255],
            [-2340, 20560, -7704, -12336, 1820],
            [486, -7704, 161892, -7704, 486],
            [1820, -12336, -7704, 20560, -2340],
            [-255, 1820, 486, -2340, 289],
        ],
    ),
}


def test_criterion_04_golden_matrices():
    ok = True
    for two_j, expected in KNOWN_V_INV.items():
        data = build_vandermonde(two_j)
        ok = ok and data.V_inv == expected
        ok = ok and dual_matrices(two_j) == expected  # T_n is row n+1
        ok = ok and metric(two_j) == KNOWN_METRIC[two_j]
    # the two spotlighted entries, spelled out
    ok = ok and metric(2) == KNOWN_METRIC[2]
    ok = ok and dual_matrices(4)[4] == tuple(
        Fraction(x, 384) for x in (1, -4, 6, -4, 1)
    )
    report(4, "small-spin-golden-matrices", ok)
    assert ok


def test_criterion_05_inverse_row_lemma():
    ok = all(
        cfn_from_vandermonde(two_j, n, l) == cfn(2 * n, 2 * l)
        for two_j in range(2, 17, 2)
        for l in range(1, two_j // 2 + 1)
        for n in range(l, two_j // 2 + 1)
    )
    report(5, "central-factorials-from-inverse-rows", ok)
    assert ok


def test_criterion_06_projector_and_trace_identities():
    ok = all(verify_trace_identities(two_j) for two_j in range(17))
    report(6, "projector-and-trace-identities", ok)
    assert ok


def test_criterion_07_biorthonormality():
    exact_ok = all(verify_biorthonormality(two_j) for two_j in range(21))
    thetas = np.linspace(-math.pi, math.pi, 8193)
    worst = 0.0
    for two_j in range(11):
        for m in index_range(two_j):
            dual = dual_function(two_j, m)
            g = np.zeros_like(thetas)
            for k, c in dual.cos_coeffs.items():
                g += float(c) * np.cos(k * thetas)
            if dual.half_sine_factor:
                g *= np.sin(0.5 * thetas)
            for n in index_range(two_j):
                f = np.sin(0.5 * thetas) ** basis_power(two_j, n)
                numeric = float(TRAPEZOID(g * f, thetas) / (2 * math.pi))
                exact = float(dual_pairing(dual, basis_power(two_j, n)))
                worst = max(worst, abs(numeric - exact))
    ok = exact_ok and worst <= 1e-8
    report(7, "biorthonormality-exact-and-quadrature", ok, f"quad dev {worst:.2e}")
    assert ok


def test_criterion_08_second_order_identity():
    ok = all(
        verify_second_order_ode(two_j, k)
        for two_j in range(2, 13, 2)
        for k in range(1, two_j // 2 + 1)
    )
    report(8, "second-order-differential-identity", ok)
    assert ok


def test_criterion_09_generating_functions():
    printed = {
        0: [1, 2, 2, 2, 2, 2, 2, 2],
        1: [1, 4, 9, 16, 25, 36, 49, 64],
        2: [1, 6, 20, 50, 105, 196, 336, 540],
        3: [1, 8, 35, 112, 294, 672, 1386, 2640],
        4: [1, 10, 54, 210, 660, 1782, 4290, 9438],
        5: [1, 12, 77, 352, 1287, 4004, 11011, 27456],
        6: [1, 14, 104, 546, 2275, 8008, 24752, 68952],
    }
    ok = all(dual_truncation_series(n, 7) == row for n, row in printed.items())
    report(9, "dual-generating-functions", ok)
    assert ok


def test_criterion_10_periodicity_endpoints():
    ok = True
    for two_j in range(17):
        for k in range(two_j + 1):
            poly = coefficient(two_j, k)
            numeric = evaluate_coefficient(poly, 2 * math.pi)
            if k == 0:
                # closed form at theta = 2pi: sine factor vanishes, the
                # cosine factor contributes (-1)^epsilon exactly
                closed = Fraction(-1) ** poly.epsilon * poly.sine_coeffs.get(
                    0, Fraction(0)
                )
                ok = ok and closed == (-1) ** two_j
                ok = ok and abs(numeric - (-1) ** two_j) <= 1e-12
            else:
                ok = ok and abs(numeric) <= 1e-12
    axis = (0.0, 0.6, 0.8)
    for two_j in range(13):
        full = rotation_polynomial(two_j, axis, 4 * math.pi).matrix
        ok = ok and float(np.max(np.abs(full - np.eye(two_j + 1)))) <= 1e-9
    report(10, "periodicity-endpoints", ok)
    assert ok


def _plotdata_rows(args):
    result = subprocess.run(
        [sys.executable, "-m", "spinpoly", "plotdata", *args],
        capture_output=True,
        text=True,
    )
    assert result.returncode == 0, result.stderr
    lines = result.stdout.strip().splitlines()
    return [line.split(",") for line in lines[1:]]


def test_criterion_11_large_spin_plot_data():
    rows = _plotdata_rows(
        ["--two-j", "138", "--k-list", "0", "--samples", "9"]
    )
    bosonic_ok = all(float(row[1]) == 1.0 for row in rows)

    half_pi = repr(math.pi / 2)
    two_pi = repr(2 * math.pi)
    rows = _plotdata_rows(
        [
            "--two-j", "137",
            "--k-list", "0",
            "--theta-min", half_pi,
            "--theta-max", two_pi,
            "--samples", "2",
        ]
    )
    at_half_pi = float(rows[0][1])
    at_two_pi = float(rows[1][1])
    fermionic_ok = (
        abs(at_half_pi - 1.0) <= 1e-12 and abs(at_two_pi - (-1.0)) <= 1e-12
    )
    ok = bosonic_ok and fermionic_ok
    report(
        11,
        "large-spin-plot-data",
        ok,
        f"A_0(pi/2)={at_half_pi:.15f}, A_0(2pi)={at_two_pi:.15f}",
    )
    assert ok


def test_criterion_12_benchmark_report():
    result = subprocess.run(
        [
            sys.executable, "-m", "spinpoly",
            "bench", "--two-j-list", "2,8,24,60", "--repetitions", "2",
        ],
        capture_output=True,
        text=True,
    )
    ok = result.returncode == 0
    worst = 0.0
    if ok:
        payload = json.loads(result.stdout)
        ok = [row["two_j"] for row in payload["results"]] == [2, 8, 24, 60]
        for row in payload["results"]:
            bound = 1e-8 * (row["two_j"] + 1)
            for method in ("polynomial", "eigendecomposition"):
                deviation = float(row[method]["max_deviation"])
                worst = max(worst, deviation / bound)
                ok = ok and deviation <= bound
    report(12, "benchmark-report", ok, f"worst {worst:.2e} of bound")
    assert ok
