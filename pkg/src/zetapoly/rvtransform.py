"""Zeta polynomials from self-inversive numerators.

Given a self-inversive U of degree e and d > e, the Taylor coefficients of
U(z)/(1-z)^d are values H(n) of a degree d-1 polynomial H.  H satisfies

    H(x) = (-1)^(d-1) H(-d+e-x),

vanishes at x = -1, ..., -(d-e-1), and its remaining zeros sit on the
symmetry line Re x = -(d-e)/2 of that functional equation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional

from mpmath import mp, mpf

from .exactcore import RatPoly, is_self_inversive


@dataclass(frozen=True)
class ZetaPolyRecord:
    weight: Optional[int]
    e: int
    d: int
    H: RatPoly
    Q: RatPoly  # H with the trivial zeros stripped
    critical_line: Fraction

    def to_json_dict(self) -> dict:
        return {
            "weight": self.weight,
            "e": self.e,
            "d": self.d,
            "H": self.H.coeff_strings(),
            "Q": self.Q.coeff_strings(),
            "critical_line": str(self.critical_line),
            "functional_equation": "exact",
        }


@dataclass(frozen=True)
class ScaledPoly:
    """poly together with a power of 2*pi: the true object is (2pi)^(-log_scale) * poly."""

    poly: RatPoly
    log_scale: int


def series_coefficients(U: RatPoly, d: int, N: int) -> List[Fraction]:
    """First N+1 Taylor coefficients of U(z)/(1-z)^d: the convolution
    c_n = sum_j u_j C(n-j+d-1, d-1)."""
    if d < 1:
        raise ValueError("d must be >= 1")
    if N < 0:
        raise ValueError("N must be >= 0")
    out = []
    for n in range(N + 1):
        c = Fraction(0)
        for j, u in enumerate(U.coeffs):
            if j > n:
                break
            c += u * math.comb(n - j + d - 1, d - 1)
        out.append(c)
    return out


def _lagrange_interpolate(points) -> RatPoly:
    """Exact interpolating polynomial through (x_i, y_i)."""
    result = RatPoly.zero()
    xs = [p[0] for p in points]
    for i, (xi, yi) in enumerate(points):
        if yi == 0:
            continue
        num = RatPoly((yi,))
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j != i:
                num = num * RatPoly((-xj, 1))
                denom *= xi - xj
        result = result + num * (1 / denom)
    return result


def functional_equation_defect(H: RatPoly, d: int, e: int) -> RatPoly:
    """H(x) - (-1)^(d-1) H(-d+e-x); zero iff the functional equation holds."""
    reflected = H.compose(RatPoly((e - d, -1)))
    return H - (-1) ** (d - 1) * reflected


def rv_polynomial(U: RatPoly, d: int, weight: Optional[int] = None) -> ZetaPolyRecord:
    """Interpolate H from the exact series coefficients of U(z)/(1-z)^d and
    verify all its contracts before returning the record."""
    if U.is_zero():
        raise ValueError("U must be nonzero")
    e = U.degree
    if d <= e:
        raise ValueError(f"d = {d} must exceed deg U = {e}")
    if not is_self_inversive(U):
        raise ValueError("U must be self-inversive: U(1/z) z^e == U(z)")
    coeffs = series_coefficients(U, d, 2 * d)
    H = _lagrange_interpolate([(Fraction(n), coeffs[n]) for n in range(d)])
    if H.degree != d - 1:
        raise RuntimeError(f"interpolant degree {H.degree} != d-1 = {d - 1}")
    for n in range(2 * d + 1):
        if H(Fraction(n)) != coeffs[n]:
            raise RuntimeError(f"H({n}) disagrees with the series coefficient")
    if not functional_equation_defect(H, d, e).is_zero():
        raise RuntimeError("functional equation fails")
    strip = RatPoly.one()
    for j in range(1, d - e):
        if H(Fraction(-j)) != 0:
            raise RuntimeError(f"missing trivial zero at -{j}")
        strip = strip * RatPoly((j, 1))
    Q, rem = divmod(H, strip)
    if not rem.is_zero():
        raise RuntimeError("trivial-zero factor does not divide H")
    if Q.degree != e:
        raise RuntimeError(f"deg Q = {Q.degree} != e = {e}")
    return ZetaPolyRecord(
        weight=weight,
        e=e,
        d=d,
        H=H,
        Q=Q,
        critical_line=Fraction(-(d - e), 2),
    )


def zeta_projective_space(k: int) -> ScaledPoly:
    """s(s-1)...(s-k), carrying the symbolic prefactor (2 pi)^-(k+1)."""
    if k < 0:
        raise ValueError("k must be >= 0")
    poly = RatPoly.x()
    for j in range(1, k + 1):
        poly = poly * RatPoly((-j, 1))
    return ScaledPoly(poly=poly, log_scale=k + 1)


def gamma_c(s, prec_bits: int = 128):
    """The finite complex gamma factor (2 pi)^(-s) Gamma(s) for real s > 0."""
    with mp.workprec(prec_bits + 16):
        s = mpf(s)
        if s <= 0:
            raise ValueError("s must be positive")
        return (2 * mp.pi) ** (-s) * mp.gamma(s)
