"""Spin matrices for arbitrary j and the power-reduction identity.

Matrices are dense complex numpy arrays in the basis that diagonalizes
J_z, ordered by eigenvalue m = +j down to -j.  The doubled generator
S = 2 n.J satisfies a degree-(2j+1) polynomial identity whose
coefficients are central factorial numbers; ``verify_power_reduction``
checks it exactly on the integer spectrum and numerically for a
generic axis.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .central_factorials import cfn

__all__ = [
    "axis_dot_J",
    "diagonal_doubled_spin",
    "spin_triple",
    "unit_axis",
    "verify_power_reduction",
]

AXIS_NORM_TOL = 1e-12


def unit_axis(axis) -> np.ndarray:
    """Validate a direction-cosine triple (unit length within 1e-12)."""
    v = np.asarray(axis, dtype=float)
    if v.shape != (3,):
        raise ValueError("axis must have exactly three components")
    if abs(float(v @ v) - 1.0) > AXIS_NORM_TOL:
        raise ValueError(f"axis {tuple(v)} is not unit length")
    return v


def spin_triple(two_j: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(J_x, J_y, J_z) built from the standard ladder operators."""
    if two_j < 0:
        raise ValueError("two_j must be non-negative")
    dim = two_j + 1
    j = two_j / 2.0
    m = j - np.arange(dim)
    jz = np.diag(m).astype(complex)
    # raising operator: <m+1| J_+ |m> = sqrt(j(j+1) - m(m+1))
    raise_amp = np.sqrt(j * (j + 1) - m[1:] * (m[1:] + 1))
    jplus = np.zeros((dim, dim), dtype=complex)
    jplus[np.arange(dim - 1), np.arange(1, dim)] = raise_amp
    jminus = jplus.conj().T
    jx = 0.5 * (jplus + jminus)
    jy = -0.5j * (jplus - jminus)
    return jx, jy, jz


def axis_dot_J(two_j: int, axis) -> np.ndarray:
    """n.J for a unit axis n; Hermitian with spectrum {j, j-1, ..., -j}."""
    n = unit_axis(axis)
    jx, jy, jz = spin_triple(two_j)
    return n[0] * jx + n[1] * jy + n[2] * jz


def diagonal_doubled_spin(two_j: int) -> list[int]:
    """Exact integer diagonal of S = 2 J_z: (2j, 2j-2, ..., -2j)."""
    return [two_j - 2 * i for i in range(two_j + 1)]


def _reduction_coefficients(two_j: int) -> list[Fraction]:
    # S^(2j+1) = sum_m c_m S^m with c_m = -2^(1+2j-m) t(2j+2, m+1)
    return [
        -Fraction(2 ** (1 + two_j - m)) * cfn(two_j + 2, m + 1)
        for m in range(two_j + 1)
    ]


def verify_power_reduction(two_j: int, float_tol: float = 1e-9) -> bool:
    """Check S^(2j+1) = -sum_m 2^(1+2j-m) t(2j+2, m+1) S^m.

    Exact rational check on the diagonal S = 2 J_z, plus a floating
    spot check on a fixed generic axis.  The float residual is scaled
    by the largest entry of S^(2j+1) since the raw entries grow like
    (2j)^(2j+1).
    """
    if two_j < 0:
        raise ValueError("two_j must be non-negative")
    coeffs = _reduction_coefficients(two_j)
    for x in diagonal_doubled_spin(two_j):
        lhs = Fraction(x) ** (two_j + 1)
        rhs = sum(c * Fraction(x) ** m for m, c in enumerate(coeffs))
        if lhs != rhs:
            return False

    rng = np.random.default_rng(11 + two_j)
    v = rng.normal(size=3)
    axis = v / np.linalg.norm(v)
    s = 2.0 * axis_dot_J(two_j, axis)
    dim = two_j + 1
    powers = [np.eye(dim, dtype=complex)]
    for _ in range(two_j + 1):
        powers.append(powers[-1] @ s)
    rhs_f = sum(float(c) * powers[m] for m, c in enumerate(coeffs))
    lhs_f = powers[two_j + 1]
    scale = max(1.0, float(np.max(np.abs(lhs_f))))
    return float(np.max(np.abs(lhs_f - rhs_f))) / scale <= float_tol
