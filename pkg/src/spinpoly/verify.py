"""Runnable verification suites aggregating every module's identities.

Each suite returns a report dict (one entry per check with pass/fail,
a work count, and the largest numeric deviation where a tolerance is
involved).  Exact checks compare rationals and report no deviation.
Suites run their checks through a thread pool capped by the
SPINPOLY_THREADS environment variable; results are assembled in a
fixed order regardless of scheduling.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import pi

import numpy as np

from .biorthogonal import (
    basis_power,
    dual_function,
    dual_pairing,
    dual_truncation_series,
    extract_coefficient_fourier,
    harmonic_cap,
    index_range,
    verify_biorthonormality,
)
from .central_factorials import arcsin_power_series, cfn, verify_cfn_recurrence
from .coefficients import (
    closed_form_sine_coefficient,
    coefficient,
    coefficient_truncation_route,
    verify_second_order_ode,
)
from .rotation import compare_rotation, rotation_polynomial
from .spin_algebra import verify_power_reduction
from .vandermonde import (
    build_vandermonde,
    cfn_from_vandermonde,
    verify_trace_identities,
)

__all__ = ["SUITES", "run_suite", "worker_count"]

SUITES = ("cfn", "lemmaB", "lemmaC", "ode", "duals", "biortho", "rotation", "all")

_trapezoid = getattr(np, "trapezoid", None) or np.trapz


def worker_count() -> int:
    raw = os.environ.get("SPINPOLY_THREADS")
    if raw is None:
        return os.cpu_count() or 1
    try:
        value = int(raw)
    except ValueError:
        raise ValueError("SPINPOLY_THREADS must be a positive integer") from None
    if value < 1:
        raise ValueError("SPINPOLY_THREADS must be a positive integer")
    return value


@dataclass
class CheckResult:
    name: str
    passed: bool
    count: int
    max_deviation: float | None = None


def _run_checks(items) -> list[CheckResult]:
    with ThreadPoolExecutor(max_workers=worker_count()) as pool:
        return list(pool.map(lambda fn: fn(), items))


# known closed-form inverse-Vandermonde rows, dual diagonals, and metrics
# for the four smallest nontrivial spins; denominators kept explicit
def _rows(den: int, rows) -> tuple:
    return tuple(tuple(Fraction(x, den) for x in row) for row in rows)


KNOWN_V_INV = {
    1: _rows(2, [[1, 1], [1, -1]]),
    2: _rows(8, [[0, 8, 0], [2, 0, -2], [1, -2, 1]]),
    3: _rows(48, [[-3, 27, 27, -3], [-1, 27, -27, 1], [3, -3, -3, 3], [1, -3, 3, -1]]),
    4: _rows(
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
    1: _rows(2, [[1, 0], [0, 1]]),
    2: _rows(64, [[5, -2, -3], [-2, 68, -2], [-3, -2, 5]]),
    3: _rows(
        48 * 48,
        [
            [20, -120, -60, 16],
            [-120, 1476, 0, -60],
            [-60, 0, 1476, -120],
            [16, -60, -120, 20],
        ],
    ),
    4: _rows(
        384 * 384,
        [
            [289, -2340, 486, 1820, -255],
            [-2340, 20560, -7704, -12336, 1820],
            [486, -7704, 161892, -7704, 486],
            [1820, -12336, -7704, 20560, -2340],
            [-255, 1820, 486, -2340, 289],
        ],
    ),
}


def _suite_cfn(max_two_j: int) -> list[CheckResult]:
    m_max = max(8, 2 * max_two_j)

    def parity() -> CheckResult:
        ok = all(
            cfn(m, n) == 0
            for m in range(m_max + 1)
            for n in range(m_max + 1)
            if (m + n) % 2
        )
        return CheckResult("parity_zero", ok, (m_max + 1) ** 2 // 2)

    def diagonal() -> CheckResult:
        ok = all(cfn(m, m) == 1 for m in range(m_max + 1))
        return CheckResult("diagonal_one", ok, m_max + 1)

    def signs() -> CheckResult:
        count = 0
        for m in range(m_max + 1):
            for n in range(m + 1):
                value = cfn(m, n)
                if value == 0:
                    continue
                count += 1
                if value * (-1) ** ((m - n) // 2) <= 0:
                    return CheckResult("sign_pattern", False, count)
        return CheckResult("sign_pattern", True, count)

    def recurrence() -> CheckResult:
        return CheckResult("recurrence", verify_cfn_recurrence(m_max), m_max)

    def series() -> CheckResult:
        order = 20
        base = arcsin_power_series(1, order).coeffs
        ok = True
        for n in range(2, 7):
            prev = arcsin_power_series(n - 1, order).coeffs
            direct = arcsin_power_series(n, order).coeffs
            conv: dict[int, Fraction] = {}
            for i, a in base.items():
                for l, b in prev.items():
                    if i + l <= order:
                        conv[i + l] = conv.get(i + l, Fraction(0)) + a * b
            ok = ok and conv == direct
            ok = ok and all(c >= 0 for c in direct.values())
        return CheckResult("series_convolution", ok, 5)

    return _run_checks([parity, diagonal, signs, recurrence, series])


def _suite_lemma_b(max_two_j: int) -> list[CheckResult]:
    def reduction() -> CheckResult:
        ok = all(verify_power_reduction(two_j) for two_j in range(max_two_j + 1))
        return CheckResult("power_reduction", ok, max_two_j + 1)

    return _run_checks([reduction])


def _suite_lemma_c(max_two_j: int) -> list[CheckResult]:
    def lemma() -> CheckResult:
        count = 0
        for two_j in range(2, max_two_j + 1, 2):
            j = two_j // 2
            for l in range(1, j + 1):
                for n in range(l, j + 1):
                    count += 1
                    if cfn_from_vandermonde(two_j, n, l) != cfn(2 * n, 2 * l):
                        return CheckResult("cfn_from_inverse_rows", False, count)
        return CheckResult("cfn_from_inverse_rows", True, count)

    return _run_checks([lemma])


def _suite_ode(max_two_j: int) -> list[CheckResult]:
    def ode() -> CheckResult:
        count = 0
        for two_j in range(2, max_two_j + 1, 2):
            for k in range(1, two_j // 2 + 1):
                count += 1
                if not verify_second_order_ode(two_j, k):
                    return CheckResult("second_order_identity", False, count)
        return CheckResult("second_order_identity", True, count)

    def routes() -> CheckResult:
        count = 0
        for two_j in range(max_two_j + 1):
            for k in range(two_j + 1):
                count += 1
                if coefficient_truncation_route(two_j, k) != coefficient(two_j, k):
                    return CheckResult("route_equivalence", False, count)
        return CheckResult("route_equivalence", True, count)

    def stable() -> CheckResult:
        count = 0
        for two_j in range(max_two_j + 1):
            for k in range(two_j % 2, two_j + 1, 2):
                poly = coefficient(two_j, k)
                for m, value in poly.sine_coeffs.items():
                    if m % 2:
                        continue
                    count += 1
                    if closed_form_sine_coefficient(k, m // 2) != value:
                        return CheckResult("j_stable_coefficients", False, count)
        return CheckResult("j_stable_coefficients", True, count)

    return _run_checks([ode, routes, stable])


def _suite_duals(max_two_j: int) -> list[CheckResult]:
    def inverse() -> CheckResult:
        for two_j in range(max_two_j + 1):
            if not verify_trace_identities(two_j):
                return CheckResult("trace_and_projector_identities", False, two_j)
        return CheckResult("trace_and_projector_identities", True, max_two_j + 1)

    def rows() -> CheckResult:
        for two_j in range(max_two_j + 1):
            v_inv = build_vandermonde(two_j).V_inv
            dim = two_j + 1
            for r in range(dim):
                want = Fraction(1 if r == 0 else 0)
                if sum(v_inv[r], Fraction(0)) != want:
                    return CheckResult("inverse_row_sums", False, two_j)
                sign = 1 if r % 2 == 0 else -1  # 1-based odd rows symmetric
                if any(v_inv[r][c] != sign * v_inv[r][dim - 1 - c] for c in range(dim)):
                    return CheckResult("inverse_row_sums", False, two_j)
        return CheckResult("inverse_row_sums", True, max_two_j + 1)

    def golden() -> CheckResult:
        count = 0
        for two_j, expected in KNOWN_V_INV.items():
            if two_j > max_two_j:
                continue
            data = build_vandermonde(two_j)
            count += 1
            if data.V_inv != expected or data.T != expected:
                return CheckResult("small_spin_reference_matrices", False, count)
            if data.G != KNOWN_METRIC[two_j]:
                return CheckResult("small_spin_reference_matrices", False, count)
        return CheckResult("small_spin_reference_matrices", True, count)

    return _run_checks([inverse, rows, golden])


def _dual_values(dual, thetas: np.ndarray) -> np.ndarray:
    total = np.zeros_like(thetas)
    for k, c in dual.cos_coeffs.items():
        total += float(c) * np.cos(k * thetas)
    if dual.half_sine_factor:
        total *= np.sin(0.5 * thetas)
    return total


def _suite_biortho(max_two_j: int) -> list[CheckResult]:
    def exact() -> CheckResult:
        ok = all(verify_biorthonormality(two_j) for two_j in range(max_two_j + 1))
        return CheckResult("biorthonormality", ok, max_two_j + 1)

    def generating() -> CheckResult:
        count = 0
        for two_j in range(max_two_j + 1):
            cap = harmonic_cap(two_j)
            for n in index_range(two_j):
                series = dual_truncation_series(n, cap - n)
                dual = dual_function(two_j, n)
                scale = Fraction((-4) ** n)
                count += 1
                brackets = [dual.cos_coeffs[k] / scale for k in range(n, cap + 1)]
                if brackets != [Fraction(x) for x in series]:
                    return CheckResult("generating_functions", False, count)
        return CheckResult("generating_functions", True, count)

    def projection() -> CheckResult:
        count = 0
        for two_j in range(0, max_two_j + 1, 2):
            j = two_j // 2
            for k in range(0, two_j + 1, 2):
                for n in range(j + 1):
                    count += 1
                    if extract_coefficient_fourier(
                        two_j, k, n
                    ) != closed_form_sine_coefficient(k, n):
                        return CheckResult("fourier_projection", False, count)
        return CheckResult("fourier_projection", True, count)

    def quadrature() -> CheckResult:
        thetas = np.linspace(-pi, pi, 8193)
        worst = 0.0
        count = 0
        for two_j in range(min(max_two_j, 10) + 1):
            for m in index_range(two_j):
                g = _dual_values(dual_function(two_j, m), thetas)
                for n in index_range(two_j):
                    f = np.sin(0.5 * thetas) ** basis_power(two_j, n)
                    numeric = float(_trapezoid(g * f, thetas) / (2.0 * pi))
                    exact_value = float(
                        dual_pairing(dual_function(two_j, m), basis_power(two_j, n))
                    )
                    worst = max(worst, abs(numeric - exact_value))
                    count += 1
        return CheckResult("quadrature_crosscheck", worst <= 1e-8, count, worst)

    return _run_checks([exact, generating, projection, quadrature])


def _suite_rotation(max_two_j: int) -> list[CheckResult]:
    def oracle() -> CheckResult:
        worst = 0.0
        count = 0
        for two_j in range(1, max_two_j + 1):
            rng = np.random.default_rng(2024 + two_j)
            bound = 1e-9 * (two_j + 1)
            for _ in range(25):
                v = rng.normal(size=3)
                axis = v / np.linalg.norm(v)
                theta = rng.uniform(-4 * pi, 4 * pi)
                deviation = compare_rotation(two_j, axis, theta)
                worst = max(worst, deviation)
                count += 1
                if deviation > bound:
                    return CheckResult("oracle_agreement", False, count, worst)
        return CheckResult("oracle_agreement", True, count, worst)

    def group() -> CheckResult:
        worst = 0.0
        count = 0
        for two_j in range(min(max_two_j, 8) + 1):
            rng = np.random.default_rng(4096 + two_j)
            v = rng.normal(size=3)
            axis = v / np.linalg.norm(v)
            for _ in range(5):
                t1, t2 = rng.uniform(-2 * pi, 2 * pi, size=2)
                left = (
                    rotation_polynomial(two_j, axis, t1).matrix
                    @ rotation_polynomial(two_j, axis, t2).matrix
                )
                right = rotation_polynomial(two_j, axis, t1 + t2).matrix
                worst = max(worst, float(np.max(np.abs(left - right))))
                count += 1
        return CheckResult("group_property", worst <= 1e-9, count, worst)

    def periodicity() -> CheckResult:
        worst = 0.0
        for two_j in range(max_two_j + 1):
            axis = (0.6, 0.8, 0.0)
            dim = two_j + 1
            full = rotation_polynomial(two_j, axis, 4 * pi).matrix
            worst = max(worst, float(np.max(np.abs(full - np.eye(dim)))))
            half = rotation_polynomial(two_j, axis, 2 * pi).matrix
            sign = -1.0 if two_j % 2 else 1.0
            worst = max(worst, float(np.max(np.abs(half - sign * np.eye(dim)))))
        return CheckResult("periodicity", worst <= 1e-9, max_two_j + 1, worst)

    def unitarity() -> CheckResult:
        worst = 0.0
        for two_j in range(max_two_j + 1):
            rng = np.random.default_rng(31 + two_j)
            v = rng.normal(size=3)
            axis = v / np.linalg.norm(v)
            theta = rng.uniform(-4 * pi, 4 * pi)
            u = rotation_polynomial(two_j, axis, theta).matrix
            defect = float(np.max(np.abs(u.conj().T @ u - np.eye(two_j + 1))))
            worst = max(worst, defect)
        return CheckResult("unitarity", worst <= 1e-9, max_two_j + 1, worst)

    return _run_checks([oracle, group, periodicity, unitarity])


_SUITE_RUNNERS = {
    "cfn": _suite_cfn,
    "lemmaB": _suite_lemma_b,
    "lemmaC": _suite_lemma_c,
    "ode": _suite_ode,
    "duals": _suite_duals,
    "biortho": _suite_biortho,
    "rotation": _suite_rotation,
}


def run_suite(suite: str, max_two_j: int) -> dict:
    """Run one named suite (or 'all') and build its report."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    if max_two_j < 0:
        raise ValueError("max_two_j must be non-negative")
    results: list[CheckResult] = []
    if suite == "all":
        for name in SUITES[:-1]:
            for res in _SUITE_RUNNERS[name](max_two_j):
                results.append(
                    CheckResult(
                        f"{name}/{res.name}", res.passed, res.count, res.max_deviation
                    )
                )
    else:
        results = _SUITE_RUNNERS[suite](max_two_j)

    passed = sum(1 for r in results if r.passed)
    deviations = [r.max_deviation for r in results if r.max_deviation is not None]
    return {
        "suite": suite,
        "max_two_j": max_two_j,
        "checks": [
            {
                "name": r.name,
                "status": "pass" if r.passed else "fail",
                "count": r.count,
                "max_deviation": r.max_deviation,
            }
            for r in results
        ],
        "counts": {"pass": passed, "fail": len(results) - passed},
        "max_deviation": max(deviations) if deviations else None,
        "status": "pass" if passed == len(results) else "fail",
    }
