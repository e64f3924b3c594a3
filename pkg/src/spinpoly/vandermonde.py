"""Exact Vandermonde data on the doubled spin spectrum.

The nodes are the eigenvalues of S = 2 J_z, namely the 2j+1 integers
(2j, 2j-2, ..., -2j).  V has rows of node powers, V_{r,c} = x_r^(c-1)
in 1-based terms; its exact inverse comes from Lagrange interpolation
weights.  Rows of V^-1 are the diagonals of the trace-dual matrices
T_n (Trace(T_n S^m) = delta), and G = (V^-1)^T (V^-1) is the metric
that orthonormalizes spin powers under a weighted trace.

Formulas below quote 1-based row/column indices; storage is 0-based,
so (V^-1)_{r,c} is ``V_inv[r-1][c-1]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

__all__ = [
    "ProjectorPair",
    "VandermondeData",
    "build_vandermonde",
    "cfn_from_vandermonde",
    "dual_matrices",
    "metric",
    "projector_pair",
    "verify_trace_identities",
]

Matrix = tuple[tuple[Fraction, ...], ...]


@dataclass(frozen=True)
class VandermondeData:
    two_j: int
    nodes: tuple[int, ...]
    V: tuple[tuple[int, ...], ...]
    V_inv: Matrix
    T: Matrix  # T[n] is the diagonal of the nth dual matrix
    G: Matrix


@dataclass(frozen=True)
class ProjectorPair:
    B: tuple[tuple[int, ...], ...]  # all-ones, rank 1
    P: tuple[tuple[int, ...], ...]  # single 1 in the (1,1) slot


def _lagrange_inverse(nodes: tuple[int, ...]) -> Matrix:
    """Columns are coefficient vectors of the Lagrange basis polynomials."""
    dim = len(nodes)
    cols = []
    for k in range(dim):
        coeffs = [1]
        denom = 1
        for i, x in enumerate(nodes):
            if i == k:
                continue
            denom *= nodes[k] - x
            nxt = [0] * (len(coeffs) + 1)
            for p, c in enumerate(coeffs):
                nxt[p] -= x * c
                nxt[p + 1] += c
            coeffs = nxt
        cols.append([Fraction(c, denom) for c in coeffs])
    return tuple(
        tuple(cols[k][r] for k in range(dim)) for r in range(dim)
    )


@lru_cache(maxsize=None)
def build_vandermonde(two_j: int) -> VandermondeData:
    if two_j < 0:
        raise ValueError("two_j must be non-negative")
    nodes = tuple(two_j - 2 * i for i in range(two_j + 1))
    dim = len(nodes)
    v = tuple(tuple(x**c for c in range(dim)) for x in nodes)
    v_inv = _lagrange_inverse(nodes)
    g = tuple(
        tuple(
            sum(v_inv[i][k] * v_inv[i][l] for i in range(dim))
            for l in range(dim)
        )
        for k in range(dim)
    )
    return VandermondeData(two_j, nodes, v, v_inv, v_inv, g)


def dual_matrices(two_j: int) -> Matrix:
    """Diagonals of T_0 ... T_2j; T_n is row n+1 of the inverse."""
    return build_vandermonde(two_j).T


def metric(two_j: int) -> Matrix:
    return build_vandermonde(two_j).G


def projector_pair(two_j: int) -> ProjectorPair:
    dim = two_j + 1
    ones = tuple(tuple(1 for _ in range(dim)) for _ in range(dim))
    p = tuple(
        tuple(1 if r == 0 and c == 0 else 0 for c in range(dim))
        for r in range(dim)
    )
    return ProjectorPair(ones, p)


def _mat_mul(a, b):
    rows, inner, cols = len(a), len(b), len(b[0])
    return tuple(
        tuple(sum(a[r][i] * b[i][c] for i in range(inner)) for c in range(cols))
        for r in range(rows)
    )


def _transpose(a):
    return tuple(tuple(row[c] for row in a) for c in range(len(a[0])))


def verify_trace_identities(
    two_j: int, data: VandermondeData | None = None
) -> bool:
    """Exact check of the projector and trace orthonormality identities:

      B = V P V^T,  P = V^-1 B (V^-1)^T,
      Trace(T_n S^m) = delta_{n,m},
      Trace(B S^m G S^n) = delta_{m,n},
      Trace[(V^-1 S^n V) P (V^-1 S^m V)^T] = delta_{m,n},

    with S the exact diagonal 2 J_z.  A corrupted ``data`` argument
    makes this return False, which the fault-injection tests rely on.
    """
    if data is None:
        data = build_vandermonde(two_j)
    dim = two_j + 1
    nodes = data.nodes
    pair = projector_pair(two_j)

    identity = tuple(
        tuple(Fraction(1 if r == c else 0) for c in range(dim)) for r in range(dim)
    )
    if _mat_mul(data.V, data.V_inv) != identity:
        return False

    if _mat_mul(_mat_mul(data.V, pair.P), _transpose(data.V)) != pair.B:
        return False
    recovered_p = _mat_mul(_mat_mul(data.V_inv, pair.B), _transpose(data.V_inv))
    if recovered_p != tuple(tuple(Fraction(x) for x in row) for row in pair.P):
        return False

    # node powers: powers[m][r] = x_r^m
    powers = [[1] * dim]
    for _ in range(two_j):
        powers.append([p * x for p, x in zip(powers[-1], nodes)])

    # w_m = V^-1 @ powers[m]; this is both the vector of Trace(T_n S^m)
    # values and the first column of V^-1 S^m V
    w = []
    for m in range(dim):
        w.append(
            [
                sum(data.V_inv[r][c] * powers[m][c] for c in range(dim))
                for r in range(dim)
            ]
        )
        if any(
            w[m][r] != (1 if r == m else 0) for r in range(dim)
        ):
            return False

    # metric forms
    for m in range(dim):
        gv = [
            sum(data.G[k][l] * powers[m][l] for l in range(dim))
            for k in range(dim)
        ]
        for n in range(dim):
            trace_bg = sum(powers[n][k] * gv[k] for k in range(dim))
            if trace_bg != (1 if m == n else 0):
                return False
            trace_proj = sum(w[n][r] * w[m][r] for r in range(dim))
            if trace_proj != (1 if m == n else 0):
                return False
    return True


def cfn_from_vandermonde(two_j: int, n: int, l: int) -> Fraction:
    """Central factorial number from inverse-Vandermonde row data:

        t(2n, 2l) = (2n)! 2^{2l} sum_{m=1}^{j+1-n}
                    (V^-1)_{2l+1, m} ((j+1-m)/n) C(j+n-m, 2n-1)

    for integer j = two_j/2, 1 <= l <= j, l <= n <= j.
    """
    if two_j % 2:
        raise ValueError("integer spin required")
    j = two_j // 2
    if not 1 <= l <= j:
        raise ValueError(f"l={l} outside 1..{j}")
    if not l <= n <= j:
        raise ValueError(f"n={n} outside {l}..{j}")
    v_inv = build_vandermonde(two_j).V_inv
    total = sum(
        v_inv[2 * l][m - 1]
        * Fraction(j + 1 - m, n)
        * comb(j + n - m, 2 * n - 1)
        for m in range(1, j + 2 - n)
    )
    return Fraction(factorial(2 * n) * 4**l) * total
