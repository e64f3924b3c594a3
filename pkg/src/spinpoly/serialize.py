"""Deterministic JSON/CSV encodings shared by the CLI.

Rationals are emitted as {"num": "...", "den": "..."} decimal strings
with positive denominator and gcd(num, den) = 1 (Fraction guarantees
both).  Floats are printed with 17 significant digits so identical
invocations produce byte-identical output.
"""

from __future__ import annotations

from fractions import Fraction

from .coefficients import CoefficientPolynomial

__all__ = ["format_float", "fraction_json", "polynomial_json"]


def format_float(x: float) -> str:
    return format(float(x), ".17g")


def fraction_json(q: Fraction) -> dict[str, str]:
    q = Fraction(q)
    return {"num": str(q.numerator), "den": str(q.denominator)}


def polynomial_json(poly: CoefficientPolynomial) -> dict:
    terms = [
        {"power": m, **fraction_json(poly.sine_coeffs[m])}
        for m in sorted(poly.sine_coeffs)
    ]
    return {
        "two_j": poly.two_j,
        "k": poly.k,
        "epsilon": poly.epsilon,
        "terms": terms,
    }
