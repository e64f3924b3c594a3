"""Central factorial numbers of the first kind and arcsin power series.

The numbers t(m, n) are the coefficients of the central factorial
polynomials (OEIS A182867 for even indices, A008956 for odd ones):

    prod_{l=0}^{M-1} (x^2 - l^2)           = sum_k t(2M, 2k) x^{2k}
    x * prod_{l=0}^{M-1} (x^2 - (l+1/2)^2) = sum_k t(2M+1, 2k+1) x^{2k+1}

Mixed-parity values vanish, t(m, m) = 1, and the sign of a nonzero
entry is (-1)^((m-n)/2).  Even-index values are integers; odd-index
values are rationals whose denominator divides a power of 4.

Everything here is computed by expanding the defining products with
exact integer arithmetic.  The recurrence

    t(m, 2k-2) = t(m+2, 2k) + (m^2/4) t(m, 2k)

is implemented only as an independent consistency check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

__all__ = [
    "ArcsinSeries",
    "CentralFactorialTable",
    "arcsin_power_series",
    "cfn",
    "cfn_table",
    "verify_cfn_recurrence",
]


def _monic_from_roots(roots: list[int]) -> tuple[int, ...]:
    """Ascending coefficients of prod (y - r) over the integers."""
    coeffs = [1]
    for r in roots:
        nxt = [0] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i] -= r * c
            nxt[i + 1] += c
        coeffs = nxt
    return tuple(coeffs)


@lru_cache(maxsize=None)
def _even_row(half_m: int) -> tuple[int, ...]:
    # prod_{l=0}^{half_m-1} (y - l^2); entry k is t(2*half_m, 2k)
    return _monic_from_roots([l * l for l in range(half_m)])


@lru_cache(maxsize=None)
def _odd_row(half_m: int) -> tuple[int, ...]:
    # prod_{l=0}^{half_m-1} (y - (2l+1)^2) with y = 4x^2;
    # entry k is t(2*half_m+1, 2k+1) * 4^(half_m-k)
    return _monic_from_roots([(2 * l + 1) ** 2 for l in range(half_m)])


def cfn(m: int, n: int) -> Fraction:
    """Central factorial number of the first kind t(m, n), exact."""
    if m < 0 or n < 0:
        raise ValueError("indices must be non-negative")
    if (m + n) % 2 or n > m:
        return Fraction(0)
    if m % 2 == 0:
        return Fraction(_even_row(m // 2)[n // 2])
    half_m, k = (m - 1) // 2, (n - 1) // 2
    return Fraction(_odd_row(half_m)[k], 4 ** (half_m - k))


@dataclass(frozen=True)
class CentralFactorialTable:
    """All t(m, n) with m <= max_m, keyed by (m, n), zeros included."""

    max_m: int
    entries: dict[tuple[int, int], Fraction]

    def value(self, m: int, n: int) -> Fraction:
        return self.entries.get((m, n), Fraction(0))


def cfn_table(max_m: int) -> CentralFactorialTable:
    if max_m < 0:
        raise ValueError("max_m must be non-negative")
    entries = {
        (m, n): cfn(m, n) for m in range(max_m + 1) for n in range(m + 1)
    }
    return CentralFactorialTable(max_m, entries)


def verify_cfn_recurrence(
    max_m: int, table: CentralFactorialTable | None = None
) -> bool:
    """Check t(m, 2k-2) = t(m+2, 2k) + (m^2/4) t(m, 2k) for even m <= max_m.

    A table may be supplied to validate externally produced values; rows
    beyond its range fall back to direct computation.
    """
    if max_m < 4:
        raise ValueError("recurrence check needs max_m >= 4")
    if table is None:
        table = cfn_table(max_m + 2)

    def val(m: int, n: int) -> Fraction:
        if m <= table.max_m:
            return table.value(m, n)
        return cfn(m, n)

    for m in range(0, max_m + 1, 2):
        for k in range(1, (m + 2) // 2 + 1):
            lhs = val(m, 2 * k - 2)
            rhs = val(m + 2, 2 * k) + Fraction(m * m, 4) * val(m, 2 * k)
            if lhs != rhs:
                return False
    return True


@dataclass(frozen=True)
class ArcsinSeries:
    """Taylor coefficients of (arcsin z)^power through z^order.

    Only nonzero coefficients are stored; they are all non-negative and
    live on exponents of the same parity as ``power``.
    """

    power: int
    order: int
    coeffs: dict[int, Fraction]


def arcsin_power_series(n: int, order: int) -> ArcsinSeries:
    """Exact series of (arcsin z)^n:  coefficient of z^m is
    (n!/2^n) |t(m, n)| 2^m / m!."""
    if n < 0:
        raise ValueError("power must be non-negative")
    if order < n:
        raise ValueError("order must be at least the power")
    prefactor = Fraction(factorial(n), 2**n)
    coeffs: dict[int, Fraction] = {}
    for m in range(n, order + 1, 2):
        value = prefactor * abs(cfn(m, n)) * Fraction(2**m, factorial(m))
        if value:
            coeffs[m] = value
    return ArcsinSeries(n, order, coeffs)
