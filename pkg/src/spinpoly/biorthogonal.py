"""Finite biorthogonal systems of sine powers and cosine-sum duals.

For integer spin j the functions f_n = sin^{2n}(theta/2), n = 0..j,
pair with duals

    g_0 = 1 + 2 sum_{k=1}^{j} cos(k theta)
    g_n = (-4)^n sum_{k=n}^{j} (k/n) C(k+n-1, 2n-1) cos(k theta),  n > 0

so that (1/2pi) integral over [-pi, pi] of g_m f_n is delta_{m,n}.  For
semi-integer j the odd powers sin^{2n-1}(theta/2), n = 1..j+1/2, pair
with the same cosine sums times one factor of sin(theta/2), capped at
harmonic j+1/2.

Inner products are closed symbolically: every product reduces to terms
cos(m theta) sin^{2p}(theta/2), whose normalized integral is

    (1/2pi) integral = (-1)^m C(2p, p+m) / 4^p   (zero for m > p),

and odd sine powers integrate to zero outright.  No quadrature enters
the exact path.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .vandermonde import build_vandermonde

__all__ = [
    "DualFunction",
    "basis_power",
    "cos_sine_integral",
    "dual_function",
    "dual_pairing",
    "dual_truncation_series",
    "extract_coefficient_fourier",
    "harmonic_cap",
    "index_range",
    "verify_biorthonormality",
]


@dataclass(frozen=True)
class DualFunction:
    """Dual of one sine power: a cosine-harmonic sum, with an extra
    sin(theta/2) factor in the semi-integer (odd-power) system."""

    two_j: int
    n: int
    cos_coeffs: dict[int, Fraction]
    half_sine_factor: bool


def harmonic_cap(two_j: int) -> int:
    """Highest harmonic in a dual: j for integer spin, j+1/2 otherwise."""
    return (two_j + 1) // 2 if two_j % 2 else two_j // 2


def index_range(two_j: int) -> range:
    """Valid dual/basis indices: 0..j (integer) or 1..j+1/2 (semi-integer)."""
    if two_j % 2:
        return range(1, (two_j + 1) // 2 + 1)
    return range(0, two_j // 2 + 1)


def basis_power(two_j: int, n: int) -> int:
    """Sine exponent of basis function n: 2n or 2n-1 by spin parity."""
    if n not in index_range(two_j):
        raise ValueError(f"index n={n} invalid for two_j={two_j}")
    return 2 * n - 1 if two_j % 2 else 2 * n


def dual_function(two_j: int, n: int) -> DualFunction:
    if n not in index_range(two_j):
        raise ValueError(f"index n={n} invalid for two_j={two_j}")
    cap = harmonic_cap(two_j)
    if n == 0:
        coeffs = {0: Fraction(1)}
        coeffs.update({k: Fraction(2) for k in range(1, cap + 1)})
        return DualFunction(two_j, 0, coeffs, False)
    sign = Fraction((-4) ** n)
    coeffs = {
        k: sign * Fraction(k, n) * comb(k + n - 1, 2 * n - 1)
        for k in range(n, cap + 1)
    }
    return DualFunction(two_j, n, coeffs, bool(two_j % 2))


def dual_truncation_series(n: int, order: int) -> list[int]:
    """Taylor coefficients of (1+x)/(1-x)^(2n+1) through x^order.

    Entry m is the bracket coefficient of harmonic n+m in the dual of
    index n (before the (-4)^n prefactor).
    """
    if n < 0 or order < 0:
        raise ValueError("arguments must be non-negative")
    out = []
    for m in range(order + 1):
        value = comb(m + 2 * n, 2 * n)
        if m >= 1:
            value += comb(m - 1 + 2 * n, 2 * n)
        out.append(value)
    return out


def cos_sine_integral(m: int, p: int) -> Fraction:
    """r with (1/2pi) integral_{-pi}^{pi} cos(m theta) sin^{2p}(theta/2)
    dtheta = r, exactly (-1)^m C(2p, p+m)/4^p; zero beyond harmonic p."""
    if m < 0 or p < 0:
        raise ValueError("arguments must be non-negative")
    if m > p:
        return Fraction(0)
    return Fraction((-1) ** m * comb(2 * p, p + m), 4**p)


def dual_pairing(dual: DualFunction, sine_power: int) -> Fraction:
    """Exact (1/2pi) integral of dual(theta) * sin^sine_power(theta/2).

    Odd total sine powers vanish by theta -> -theta antisymmetry.
    """
    if sine_power < 0:
        raise ValueError("sine_power must be non-negative")
    total = sine_power + (1 if dual.half_sine_factor else 0)
    if total % 2:
        return Fraction(0)
    p = total // 2
    return sum(
        (c * cos_sine_integral(k, p) for k, c in dual.cos_coeffs.items()),
        Fraction(0),
    )


def verify_biorthonormality(two_j: int) -> bool:
    """Exact delta pairing within the system for this spin, plus
    annihilation of every opposite-parity sine power up to 2j."""
    indices = index_range(two_j)
    duals = {m: dual_function(two_j, m) for m in indices}
    for m in indices:
        for n in indices:
            want = Fraction(1 if m == n else 0)
            if dual_pairing(duals[m], basis_power(two_j, n)) != want:
                return False
    opposite = range(1 if two_j % 2 == 0 else 0, two_j + 1, 2)
    for m in indices:
        for power in opposite:
            if dual_pairing(duals[m], power) != 0:
                return False
    return True


def extract_coefficient_fourier(two_j: int, k: int, n: int) -> Fraction:
    """Coefficient of sin^{2n}(theta/2) in A_k by Fourier projection of
    the trace formula through the inverse Vandermonde rows:

        a_{k,n} = (-4)^n (-1)^{k/2} k! sum_{l=n}^{j}
                  (l/n) C(l+n-1, 2n-1) (V^-1)_{k+1, j-l+1}

    with the n = 0 case reducing to a plain row sum.  Integer spin and
    even k only.
    """
    if two_j % 2 or k % 2:
        raise ValueError("integer spin and even k required")
    if k < 0 or k > two_j:
        raise ValueError(f"k={k} outside 0..{two_j}")
    j = two_j // 2
    if not 0 <= n <= j:
        raise ValueError(f"n={n} outside 0..{j}")
    row = build_vandermonde(two_j).V_inv[k]
    phase = Fraction((-1) ** (k // 2) * factorial(k))
    if n == 0:
        return phase * sum(row, Fraction(0))
    total = sum(
        (
            Fraction(l, n) * comb(l + n - 1, 2 * n - 1) * row[j - l]
            for l in range(n, j + 1)
        ),
        Fraction(0),
    )
    return Fraction((-4) ** n) * phase * total
