"""Angle-dependent coefficients of the spin rotation polynomial.

A rotation by theta about a unit axis, for spin j (passed everywhere as
the integer ``two_j`` = 2j), expands as

    exp(i theta n.J) = sum_{k=0}^{2j} (1/k!) A_k(theta) (2i n.J)^k

where each A_k is cos(theta/2)^epsilon times a polynomial in
sin(theta/2) with non-negative rational coefficients.  ``epsilon`` is 1
exactly when 2j - k is odd.

Two independent constructions are provided: the central-factorial
series for even 2j - k (plus one differentiation for the odd case), and
the truncated arcsin-power route.  They must agree term by term.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, cos, factorial, sin

from .central_factorials import cfn

__all__ = [
    "CoefficientPolynomial",
    "closed_form_sine_coefficient",
    "coefficient",
    "coefficient_cfn_route",
    "coefficient_truncation_route",
    "differentiate_coefficient",
    "epsilon",
    "evaluate_coefficient",
    "verify_second_order_ode",
]


@dataclass(frozen=True)
class CoefficientPolynomial:
    """A_k for spin two_j/2, as cos(theta/2)^epsilon * sum_m c_m sin^m(theta/2).

    ``sine_coeffs`` maps the sine exponent m to its exact coefficient.
    Instances are treated as immutable; do not mutate the mapping.
    """

    two_j: int
    k: int
    epsilon: int
    sine_coeffs: dict[int, Fraction]


def _check_index(two_j: int, k: int) -> None:
    if two_j < 0:
        raise ValueError("two_j must be non-negative")
    if k < 0 or k > two_j:
        raise ValueError(f"coefficient index k={k} outside 0..{two_j}")


def epsilon(two_j: int, k: int) -> int:
    """Parity flag: 0 for even 2j - k, 1 for odd."""
    _check_index(two_j, k)
    return (two_j - k) % 2


def coefficient_cfn_route(two_j: int, k: int) -> CoefficientPolynomial:
    """Direct series for even 2j - k:

        A_k = (k!/2^k) sum_{m=k}^{2j} (2^m/m!) |t(m, k)| sin^m(theta/2)
    """
    _check_index(two_j, k)
    if (two_j - k) % 2:
        raise ValueError(
            "2j - k is odd; this coefficient comes from the derivative route"
        )
    prefactor = Fraction(factorial(k), 2**k)
    coeffs: dict[int, Fraction] = {}
    for m in range(k, two_j + 1, 2):
        value = prefactor * abs(cfn(m, k)) * Fraction(2**m, factorial(m))
        if value:
            coeffs[m] = value
    return CoefficientPolynomial(two_j, k, 0, coeffs)


def differentiate_coefficient(
    poly: CoefficientPolynomial,
) -> CoefficientPolynomial:
    """A_{k-1} = (2/k) dA_k/dtheta, applied once to an even-case series.

    d/dtheta sin^m(theta/2) = (m/2) sin^{m-1}(theta/2) cos(theta/2), so
    the result carries a single cosine factor (epsilon = 1).
    """
    if poly.epsilon != 0:
        raise ValueError("only even-case (epsilon=0) series can be differentiated")
    if poly.k == 0:
        raise ValueError("no coefficient below k=0")
    k = poly.k
    coeffs = {m - 1: Fraction(m, k) * c for m, c in poly.sine_coeffs.items()}
    return CoefficientPolynomial(poly.two_j, k - 1, 1, coeffs)


@lru_cache(maxsize=None)
def coefficient(two_j: int, k: int) -> CoefficientPolynomial:
    """A_k by the appropriate route for the parity of 2j - k."""
    _check_index(two_j, k)
    if (two_j - k) % 2 == 0:
        return coefficient_cfn_route(two_j, k)
    return differentiate_coefficient(coefficient_cfn_route(two_j, k + 1))


def _arcsin_ratio_power_series(k: int, order: int) -> list[Fraction]:
    """x-series of (arcsin(sqrt x)/sqrt x)^k through x^order."""
    return [
        Fraction(factorial(k) * 4**p, factorial(k + 2 * p))
        * abs(cfn(k + 2 * p, k))
        for p in range(order + 1)
    ]


def _inverse_sqrt_series(order: int) -> list[Fraction]:
    """x-series of (1 - x)^(-1/2) through x^order."""
    return [Fraction(comb(2 * p, p), 4**p) for p in range(order + 1)]


def coefficient_truncation_route(two_j: int, k: int) -> CoefficientPolynomial:
    """A_k via the truncated series of Eq.-free form:

        sin^k(theta/2) cos^eps(theta/2)
            * Trunc_N[(1-x)^(-eps/2) (arcsin(sqrt x)/sqrt x)^k]

    at x = sin^2(theta/2), with N = floor(j - k/2).
    """
    _check_index(two_j, k)
    eps = (two_j - k) % 2
    order = (two_j - k) // 2
    series = _arcsin_ratio_power_series(k, order)
    if eps:
        sqrt_part = _inverse_sqrt_series(order)
        series = [
            sum(series[i] * sqrt_part[p - i] for i in range(p + 1))
            for p in range(order + 1)
        ]
    coeffs = {k + 2 * p: c for p, c in enumerate(series) if c}
    return CoefficientPolynomial(two_j, k, eps, coeffs)


def closed_form_sine_coefficient(k: int, n: int) -> Fraction:
    """The j-independent coefficient of sin^{2n}(theta/2) in A_k:

        a_{k,n} = 2^{2n-k} k!/(2n)! |t(2n, k)|

    Zero when 2n < k or the parities of k and 2n differ.
    """
    if k < 0 or n < 0:
        raise ValueError("indices must be non-negative")
    if 2 * n < k:
        return Fraction(0)
    return (
        Fraction(2 ** (2 * n - k) * factorial(k), factorial(2 * n))
        * abs(cfn(2 * n, k))
    )


def evaluate_coefficient(poly: CoefficientPolynomial, theta: float) -> float:
    """Numeric value of A_k(theta).

    All series coefficients are non-negative, so the direct sum is free
    of cancellation and double precision is adequate at any spin.
    """
    s = sin(0.5 * theta)
    total = 0.0
    for m in sorted(poly.sine_coeffs):
        total += float(poly.sine_coeffs[m]) * s**m
    if poly.epsilon:
        total *= cos(0.5 * theta)
    return total


def second_sine_derivative(coeffs: dict[int, Fraction]) -> dict[int, Fraction]:
    """Exact d^2/dtheta^2 of sum c_m sin^m(theta/2), reduced back to a
    pure sine series via cos^2 = 1 - sin^2:

        d^2/dtheta^2 s^m = (m(m-1)/4) s^{m-2} - (m^2/4) s^m
    """
    out: dict[int, Fraction] = {}
    for m, c in coeffs.items():
        if m >= 2:
            out[m - 2] = out.get(m - 2, Fraction(0)) + c * Fraction(m * (m - 1), 4)
        out[m] = out.get(m, Fraction(0)) - c * Fraction(m * m, 4)
    return {m: c for m, c in out.items() if c}


def verify_second_order_ode(two_j: int, k: int) -> bool:
    """Check, as an exact polynomial identity in s = sin(theta/2),

        A_{2k-2} = (4/(2k(2k-1))) A_{2k}''
                   + (-4)^{j-k+1} t(2j+2, 2k) ((2k-2)!/(2j)!) A_{2j}

    for integer spin j = two_j/2 and 1 <= k <= j.  The closing term uses
    the signed central factorial number exactly as defined; a sign
    discrepancy would make this return False rather than be patched over.
    """
    if two_j % 2:
        raise ValueError("the second-order identity is checked for integer spin")
    j = two_j // 2
    if not 1 <= k <= j:
        raise ValueError(f"k={k} outside 1..{j}")
    lhs = coefficient_cfn_route(two_j, 2 * k - 2).sine_coeffs
    second = second_sine_derivative(coefficient_cfn_route(two_j, 2 * k).sine_coeffs)
    scale = Fraction(4, 2 * k * (2 * k - 1))
    rhs = {m: scale * c for m, c in second.items()}
    closing = (
        Fraction((-4) ** (j - k + 1))
        * cfn(two_j + 2, 2 * k)
        * Fraction(factorial(2 * k - 2), factorial(two_j))
    )
    rhs[two_j] = rhs.get(two_j, Fraction(0)) + closing
    rhs = {m: c for m, c in rhs.items() if c}
    return rhs == lhs
