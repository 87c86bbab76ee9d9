"""Exact Sturm-sequence certificates for unit-circle and critical-line zero
claims, plus floating-point root extraction for reports.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional

from mpmath import mp, mpc, mpf

from .exactcore import RatPoly, is_self_inversive
from .habiro import chebyshev_T


class SymmetryError(ValueError):
    pass


class RootConvergenceError(RuntimeError):
    def __init__(self, message, roots):
        super().__init__(message)
        self.roots = roots


@dataclass(frozen=True)
class SturmChain:
    squarefree_input: RatPoly
    polys: tuple  # squarefree part, derivative, then negated remainders


@dataclass(frozen=True)
class Certificate:
    kind: str  # "unit_circle" | "critical_line"
    passed: bool
    counted_roots: int
    expected_roots: int
    witness: str

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind,
            "passed": self.passed,
            "expected": self.expected_roots,
            "counted": self.counted_roots,
            "witness": self.witness,
        }


def sturm_chain(p: RatPoly) -> SturmChain:
    if p.is_zero():
        raise ValueError("zero polynomial")
    sf = p.squarefree_part()
    chain = [sf, sf.derivative()]
    while not chain[-1].is_zero():
        chain.append(-(chain[-2] % chain[-1]))
    chain.pop()
    return SturmChain(squarefree_input=sf, polys=tuple(chain))


def _sign_at(q: RatPoly, x: Optional[Fraction], end: int) -> int:
    """Sign of q at x, or at -inf/+inf when x is None (end = -1 or +1)."""
    if q.is_zero():
        return 0
    if x is None:
        s = 1 if q.leading() > 0 else -1
        if end < 0 and q.degree % 2 == 1:
            s = -s
        return s
    v = q(Fraction(x))
    return (v > 0) - (v < 0)


def _variations(chain: SturmChain, x: Optional[Fraction], end: int) -> int:
    signs = [s for s in (_sign_at(q, x, end) for q in chain.polys) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_count(p: RatPoly, a: Optional[Fraction], b: Optional[Fraction]) -> int:
    """Number of distinct real roots of p in (a, b]; None means -inf / +inf."""
    chain = sturm_chain(p)
    if chain.squarefree_input.degree == 0:
        return 0
    va = _variations(chain, a, -1)
    vb = _variations(chain, b, +1)
    return va - vb


def chebyshev_basis_decompose(U: RatPoly) -> RatPoly:
    """The unique V with z^(-e/2) U(z) = V(z + 1/z), for self-inversive U of
    even degree e, via the basis z^j + z^(-j) = T_j(z + 1/z)."""
    e = U.degree
    half = e // 2
    V = RatPoly((U[half],))
    for j in range(1, half + 1):
        V = V + U[half + j] * chebyshev_T(j)
    # reconstruction guard: z^half V((z^2+1)/z) must recover U exactly
    rec = RatPoly.zero()
    zsq1 = RatPoly((1, 0, 1))
    for i, v in enumerate(V.coeffs):
        rec = rec + v * zsq1**i * RatPoly.monomial(half - i)
    if rec != U:
        raise RuntimeError("Chebyshev-basis expansion failed to reconstruct input")
    return V


def unit_circle_certify(U: RatPoly) -> Certificate:
    """Certify that all complex zeros of a self-inversive U lie on the unit
    circle and none is real: V (with U = z^(e/2) V(z+1/z)) must be squarefree
    with exactly e/2 real roots strictly inside (-2, 2)."""
    if U.is_zero():
        raise ValueError("zero polynomial")
    e = U.degree
    if e % 2 != 0:
        raise ValueError("degree must be even")
    if not is_self_inversive(U):
        raise ValueError("U must be self-inversive: U(1/z) z^e == U(z)")
    half = e // 2
    if e == 0:
        return Certificate("unit_circle", True, 0, 0, "constant, trivially certified")
    V = chebyshev_basis_decompose(U)
    squarefree = V.gcd(V.derivative()).degree == 0
    count = sturm_count(V, Fraction(-2), Fraction(2))
    if V(Fraction(2)) == 0:
        count -= 1
    endpoints_clear = V(Fraction(2)) != 0 and V(Fraction(-2)) != 0
    passed = squarefree and endpoints_clear and count == half
    return Certificate(
        kind="unit_circle",
        passed=passed,
        counted_roots=count,
        expected_roots=half,
        witness=f"V(t), deg {half}",
    )


def _nonpositive_real_roots_with_multiplicity(A: RatPoly) -> int:
    """Multiplicity-weighted count of real roots <= 0, by peeling squarefree
    layers."""
    total = 0
    B = A
    while B.degree > 0:
        sf = B.squarefree_part()
        total += sturm_count(sf, None, Fraction(0))
        B = B // sf
    return total


def critical_line_certify(Q: RatPoly, c: Fraction, sign: int) -> Certificate:
    """Certify that all zeros of Q lie on the vertical line Re x = c.

    Q must satisfy Q(2c - x) = sign * Q(x) exactly.  Substituting x = c + u
    gives Q(c+u) = A(u^2) (sign +) or u A(u^2) (sign -); the zeros of Q are
    on the line iff every root of A is real and <= 0.
    """
    if Q.is_zero():
        raise ValueError("zero polynomial")
    c = Fraction(c)
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    R = Q.compose(RatPoly((c, 1)))
    mirrored = R.compose(RatPoly((0, -1)))
    if mirrored != sign * R:
        raise SymmetryError(f"Q(2c - x) != {sign:+d} Q(x) at c = {c}")
    offset = 0 if sign == 1 else 1
    for i in range(1 - offset, R.degree + 1, 2):
        if R[i] != 0:
            raise SymmetryError("parity decomposition left a mixed term")
    A = RatPoly(R[2 * i + offset] for i in range((R.degree - offset) // 2 + 1))
    # reconstruction guard
    rec = RatPoly.zero()
    for i, co in enumerate(A.coeffs):
        rec = rec + co * RatPoly.monomial(2 * i + offset)
    if rec.compose(RatPoly((-c, 1))) != Q:
        raise RuntimeError("even/odd decomposition failed to reconstruct input")
    if A.degree <= 0:
        counted = offset
        return Certificate(
            "critical_line", counted == Q.degree, counted, Q.degree,
            "A constant, trivially certified",
        )
    counted = 2 * _nonpositive_real_roots_with_multiplicity(A) + offset
    passed = counted == Q.degree
    return Certificate(
        kind="critical_line",
        passed=passed,
        counted_roots=counted,
        expected_roots=Q.degree,
        witness=f"A(v), deg {A.degree}",
    )


# ---------------------------------------------------------------------
# floating-point roots (presentation only)
# ---------------------------------------------------------------------


def _as_mpc_coeffs(p, prec: int) -> List:
    if isinstance(p, RatPoly):
        return [mpf(c.numerator) / c.denominator for c in p.coeffs]
    return [mpc(c) for c in p]


def _poly_eval(coeffs, z):
    acc = mpc(0)
    for c in reversed(coeffs):
        acc = acc * z + c
    return acc


def roots_numeric(p, prec_bits: int = 128) -> List:
    """All complex roots by Aberth simultaneous iteration from a perturbed
    circle, with a Newton polish.  Accepts a RatPoly or a coefficient list
    (constant first).  Guarantees |p(root)| < 2^(-prec_bits/2) * max |coeff|.
    """
    with mp.workprec(prec_bits + 64):
        coeffs = _as_mpc_coeffs(p, prec_bits + 64)
        while coeffs and abs(coeffs[-1]) == 0:
            coeffs.pop()
        if len(coeffs) <= 1:
            raise ValueError("polynomial must have positive degree")
        roots = []
        # deflate exact zeros at the origin
        while abs(coeffs[0]) == 0:
            roots.append(mpc(0))
            coeffs = coeffs[1:]
        n = len(coeffs) - 1
        if n > 0:
            deriv = [i * c for i, c in enumerate(coeffs)][1:]
            radius = (1 + (abs(coeffs[0] / coeffs[-1])) ** (mpf(1) / n)) / 2
            zs = [
                radius * mp.e ** (mpc(0, 1) * (2 * mp.pi * (i + mpf("0.25")) / n + mpf("0.003") * i))
                for i in range(n)
            ]
            tol = mpf(2) ** (-(prec_bits + 24))
            scale = max(abs(c) for c in coeffs)
            for _ in range(200):
                moved = mpf(0)
                for i in range(n):
                    pv = _poly_eval(coeffs, zs[i])
                    dv = _poly_eval(deriv, zs[i])
                    if dv == 0:
                        zs[i] += mpf("1e-8") * (1 + abs(zs[i]))
                        moved = max(moved, mpf(1))
                        continue
                    newton = pv / dv
                    repulse = mpc(0)
                    for j in range(n):
                        if j != i:
                            repulse += 1 / (zs[i] - zs[j])
                    denom = 1 - newton * repulse
                    step = newton if denom == 0 else newton / denom
                    zs[i] -= step
                    moved = max(moved, abs(step))
                if moved < tol:
                    break
            for i in range(n):
                for _ in range(6):
                    pv = _poly_eval(coeffs, zs[i])
                    dv = _poly_eval(deriv, zs[i])
                    if dv == 0 or abs(pv) == 0:
                        break
                    zs[i] -= pv / dv
            roots.extend(zs)
            bound = mpf(2) ** (-(prec_bits // 2)) * scale
            bad = [z for z in zs if abs(_poly_eval(coeffs, z)) >= bound]
            if bad:
                raise RootConvergenceError(
                    f"{len(bad)} root(s) failed the residual bound", roots
                )
        return [mpc(z) for z in roots]


def roots_json(roots) -> list:
    return [{"re": float(z.real), "im": float(z.imag)} for z in roots]
