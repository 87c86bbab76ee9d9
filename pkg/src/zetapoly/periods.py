"""Period-polynomial spaces from the slash-action relations, parity split,
odd period polynomials for one-dimensional weights, and the quotient by the
fixed degree-10 factor z(z^2-4)(z^2-1/4)(z^2-1)^2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List

from .exactcore import RatPoly, is_self_inversive
from .modforms import ONE_DIM_WEIGHTS, UnsupportedWeightError


class DivisibilityError(ValueError):
    """The odd period polynomial was not divisible by the fixed factor."""


@dataclass(frozen=True)
class MoebiusGen:
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a * self.d - self.b * self.c != 1:
            raise ValueError("determinant must be 1")


S_GEN = MoebiusGen(0, -1, 1, 0)  # z -> -1/z
U_GEN = MoebiusGen(1, -1, 1, 0)  # z -> 1 - 1/z


@dataclass(frozen=True)
class PeriodSpace:
    w: int
    parity: str  # "all" | "even" | "odd"
    basis: tuple  # of RatPoly


@dataclass(frozen=True)
class CFIQuotient:
    weight: int
    e: int
    U_poly: RatPoly


def slash_action(r: RatPoly, g: MoebiusGen, w: int) -> RatPoly:
    """(r|_w g)(z) = (cz+d)^w r((az+b)/(cz+d)), exact for deg r <= w."""
    if w < 0 or w % 2 != 0:
        raise ValueError("w must be a nonnegative even integer")
    if r.degree > w:
        raise ValueError(f"degree {r.degree} exceeds w = {w}")
    num = RatPoly((g.b, g.a))  # a z + b
    den = RatPoly((g.d, g.c))  # c z + d
    num_pows = [RatPoly.one()]
    den_pows = [RatPoly.one()]
    for _ in range(w):
        num_pows.append(num_pows[-1] * num)
        den_pows.append(den_pows[-1] * den)
    out = RatPoly.zero()
    for j, c in enumerate(r.coeffs):
        if c != 0:
            out = out + c * num_pows[j] * den_pows[w - j]
    return out


def _relation_image(r: RatPoly, w: int) -> List[Fraction]:
    """Stacked coefficient vector of r|_w(1+S) and r|_w(1+U+U^2)."""
    rel_s = r + slash_action(r, S_GEN, w)
    ru = slash_action(r, U_GEN, w)
    ruu = slash_action(ru, U_GEN, w)
    rel_u = r + ru + ruu
    vec = [rel_s[i] for i in range(w + 1)]
    vec += [rel_u[i] for i in range(w + 1)]
    return vec


def _rational_nullspace(rows: List[List[Fraction]], ncols: int) -> List[List[Fraction]]:
    """Basis of the right nullspace, by exact Gauss-Jordan elimination."""
    mat = [list(row) for row in rows]
    pivots = []  # (row, col)
    row = 0
    for col in range(ncols):
        pivot = None
        for r in range(row, len(mat)):
            if mat[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            continue
        mat[row], mat[pivot] = mat[pivot], mat[row]
        inv = 1 / mat[row][col]
        mat[row] = [v * inv for v in mat[row]]
        for r in range(len(mat)):
            if r != row and mat[r][col] != 0:
                fac = mat[r][col]
                mat[r] = [v - fac * p for v, p in zip(mat[r], mat[row])]
        pivots.append((row, col))
        row += 1
    pivot_cols = [c for _, c in pivots]
    free_cols = [c for c in range(ncols) if c not in pivot_cols]
    basis = []
    for fc in free_cols:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for prow, pcol in pivots:
            vec[pcol] = -mat[prow][fc]
        basis.append(vec)
    return basis


def relations_kernel(w: int, parity: str = "all") -> PeriodSpace:
    """Exact kernel of r -> (r|_w(1+S), r|_w(1+U+U^2)) on the parity-restricted
    monomial span inside polynomials of degree <= w."""
    if w < 2 or w % 2 != 0:
        raise ValueError("w must be an even integer >= 2")
    if parity not in ("all", "even", "odd"):
        raise ValueError("parity must be all, even, or odd")
    if parity == "even":
        exps = [j for j in range(w + 1) if j % 2 == 0]
    elif parity == "odd":
        exps = [j for j in range(w + 1) if j % 2 == 1]
    else:
        exps = list(range(w + 1))
    cols = [_relation_image(RatPoly.monomial(j), w) for j in exps]
    nrows = 2 * (w + 1)
    rows = [[cols[c][r] for c in range(len(exps))] for r in range(nrows)]
    basis = []
    for vec in _rational_nullspace(rows, len(exps)):
        coeffs = [Fraction(0)] * (w + 1)
        for x, j in zip(vec, exps):
            coeffs[j] = x
        basis.append(RatPoly(coeffs))
    return PeriodSpace(w, parity, tuple(basis))


def odd_period_polynomial(k: int) -> RatPoly:
    """Generator of the odd kernel at w = k-2, scaled to primitive integer
    coefficients with positive leading coefficient (dim S_k = 1 weights only)."""
    if k not in ONE_DIM_WEIGHTS:
        raise UnsupportedWeightError(
            f"weight {k} not supported: the odd kernel is one-dimensional only "
            f"for weights {ONE_DIM_WEIGHTS}"
        )
    space = relations_kernel(k - 2, "odd")
    if len(space.basis) != 1:
        raise RuntimeError(f"odd kernel at w={k - 2} has dimension {len(space.basis)}")
    return space.basis[0].primitive_integer()


def cfi_divisor() -> RatPoly:
    """z(z^2-4)(z^2-1/4)(z^2-1)^2, expanded exactly."""
    z = RatPoly.x()
    return (
        z
        * (z * z - 4)
        * (z * z - Fraction(1, 4))
        * (z * z - 1) ** 2
    )


def cfi_quotient(rminus: RatPoly, k: int) -> CFIQuotient:
    """Exact quotient U = rminus / [z(z^2-4)(z^2-1/4)(z^2-1)^2].

    Fails with DivisibilityError on nonzero remainder; the result must be
    self-inversive of degree e = k-12.
    """
    w = k - 2
    if k < 12:
        raise ValueError("weight must be >= 12")
    if rminus.degree > w:
        raise ValueError("input degree exceeds w = k-2")
    quot, rem = divmod(rminus, cfi_divisor())
    if not rem.is_zero():
        raise DivisibilityError(
            "input is not divisible by z(z^2-4)(z^2-1/4)(z^2-1)^2; "
            "not an eigenform odd period polynomial"
        )
    e = w - 10
    if quot.degree != e:
        raise RuntimeError(f"quotient degree {quot.degree} != expected {e}")
    if not is_self_inversive(quot):
        raise RuntimeError("quotient is not self-inversive")
    return CFIQuotient(weight=k, e=e, U_poly=quot)


def periods_json_dict(k: int) -> dict:
    """JSON payload {weight, w, e, r_minus, U} with rational-string coefficients."""
    rminus = odd_period_polynomial(k)
    q = cfi_quotient(rminus, k)
    return {
        "weight": k,
        "w": k - 2,
        "e": q.e,
        "r_minus": rminus.coeff_strings(),
        "U": q.U_poly.coeff_strings(),
    }
