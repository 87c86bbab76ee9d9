"""Truncated Habiro-ring arithmetic modulo (q)_N = (1-q)(1-q^2)...(1-q^N),
evaluation at roots of unity in cyclotomic integer rings, and the toric and
Chebyshev systems of commuting Frobenius lifts.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exactcore import RatPoly


class LevelError(ValueError):
    pass


# ---------------------------------------------------------------------
# cyclotomic machinery
# ---------------------------------------------------------------------


@lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> RatPoly:
    """The m-th cyclotomic polynomial, by exact division of x^m - 1."""
    if m < 1:
        raise ValueError("m must be >= 1")
    if m == 1:
        return RatPoly((-1, 1))
    num = RatPoly.monomial(m) - 1
    for d in range(1, m):
        if m % d == 0:
            num, rem = divmod(num, cyclotomic_poly(d))
            assert rem.is_zero()
    return num


def _euler_phi(m: int) -> int:
    return cyclotomic_poly(m).degree if m > 1 else 1


@dataclass(frozen=True)
class CycloInt:
    """Element of Z[x]/Phi_m(x): the value of a Habiro element at a primitive
    m-th root of unity."""

    conductor: int
    coords: tuple  # ints, degree < phi(m), trailing zeros stripped

    @classmethod
    def from_poly(cls, m: int, poly: RatPoly) -> "CycloInt":
        red = poly % cyclotomic_poly(m)
        coords = []
        for c in red.coeffs:
            if c.denominator != 1:
                raise ValueError("non-integer coordinate")
            coords.append(int(c))
        return cls(conductor=m, coords=tuple(coords))

    def as_poly(self) -> RatPoly:
        return RatPoly(self.coords)

    def involution(self) -> "CycloInt":
        """Image under zeta -> zeta^(-1), i.e. x -> x^(m-1) mod Phi_m."""
        m = self.conductor
        if m == 1:
            return self
        image = _substitute_power(self.as_poly(), m - 1)
        return CycloInt.from_poly(m, image)

    def to_json_dict(self) -> dict:
        return {"conductor": self.conductor, "coords": list(self.coords)}


# ---------------------------------------------------------------------
# truncated Habiro elements
# ---------------------------------------------------------------------


@lru_cache(maxsize=None)
def qpochhammer(n: int) -> RatPoly:
    """(q)_n = (1-q)(1-q^2)...(1-q^n)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return RatPoly.one()
    return qpochhammer(n - 1) * (RatPoly.one() - RatPoly.monomial(n))


@dataclass(frozen=True)
class HabiroTrunc:
    """Residue class modulo (q)_N; the residue is an integer polynomial of
    degree < N(N+1)/2."""

    level: int
    residue: RatPoly

    @classmethod
    def make(cls, level: int, poly: RatPoly) -> "HabiroTrunc":
        if level < 1:
            raise LevelError("level must be >= 1")
        red = poly % qpochhammer(level)
        for c in red.coeffs:
            assert c.denominator == 1
        return cls(level=level, residue=red)

    def _check(self, other: "HabiroTrunc"):
        if self.level != other.level:
            raise LevelError("levels differ; reduce first")

    def __add__(self, other):
        if isinstance(other, int):
            other = HabiroTrunc.make(self.level, RatPoly((other,)))
        self._check(other)
        return HabiroTrunc.make(self.level, self.residue + other.residue)

    def __sub__(self, other):
        if isinstance(other, int):
            other = HabiroTrunc.make(self.level, RatPoly((other,)))
        self._check(other)
        return HabiroTrunc.make(self.level, self.residue - other.residue)

    def __mul__(self, other):
        if isinstance(other, int):
            return HabiroTrunc.make(self.level, self.residue * other)
        self._check(other)
        return HabiroTrunc.make(self.level, self.residue * other.residue)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = habiro_one(self.level)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def reduce_level(self, m: int) -> "HabiroTrunc":
        if m > self.level:
            raise LevelError("cannot raise the level")
        return HabiroTrunc.make(m, self.residue)

    def to_json_dict(self) -> dict:
        n = self.level
        return {
            "level": n,
            "modulus_degree": n * (n + 1) // 2,
            "residue": [int(c) for c in self.residue.coeffs],
        }


def habiro_one(N: int) -> HabiroTrunc:
    return HabiroTrunc.make(N, RatPoly.one())


def habiro_q(N: int) -> HabiroTrunc:
    return HabiroTrunc.make(N, RatPoly.x())


def habiro_r(N: int) -> HabiroTrunc:
    """r = 1 + q + sum_{n>=1} q^n (q)_n; terms with n >= N vanish mod (q)_N."""
    acc = RatPoly((1, 1))
    for n in range(1, N):
        acc = acc + RatPoly.monomial(n) * qpochhammer(n)
    return HabiroTrunc.make(N, acc)


def habiro_qinv(N: int) -> HabiroTrunc:
    """q^(-1) = 1 + sum_{n>=1} q^n (q)_n; the inverse property is verified."""
    acc = RatPoly.one()
    for n in range(1, N):
        acc = acc + RatPoly.monomial(n) * qpochhammer(n)
    out = HabiroTrunc.make(N, acc)
    if habiro_q(N) * out != habiro_one(N):
        raise RuntimeError("q * q^(-1) != 1 mod (q)_N")
    return out


def eval_at_root(x: HabiroTrunc, m: int) -> CycloInt:
    """Value in Z[x]/Phi_m at a primitive m-th root of unity.

    Well-defined only when Phi_m divides (q)_level, i.e. level >= m.
    """
    if m < 1:
        raise ValueError("conductor must be >= 1")
    if x.level < m:
        raise LevelError(f"level {x.level} too small for conductor {m}")
    return CycloInt.from_poly(m, x.residue)


# ---------------------------------------------------------------------
# lambda-structures
# ---------------------------------------------------------------------


@lru_cache(maxsize=None)
def chebyshev_T(k: int) -> RatPoly:
    """Monic (k >= 1) integer polynomial with T_k(q + 1/q) = q^k + q^(-k):
    T_0 = 2, T_1 = r, T_{k+1} = r T_k - T_{k-1}."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return RatPoly((2,))
    if k == 1:
        return RatPoly.x()
    return RatPoly.x() * chebyshev_T(k - 1) - chebyshev_T(k - 2)


def _substitute_power(poly: RatPoly, k: int) -> RatPoly:
    out = [Fraction(0)] * (poly.degree * k + 1 if poly.coeffs else 1)
    for i, c in enumerate(poly.coeffs):
        out[i * k] += c
    return RatPoly(out)


def psi_toric(x: HabiroTrunc, k: int) -> HabiroTrunc:
    """The ring endomorphism with psi^k(q) = q^k, at the same level."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return HabiroTrunc.make(x.level, _substitute_power(x.residue, k))


def psi_toric_divisibility_holds(k: int, N: int) -> bool:
    """Check that Phi_d^(floor(N/d)) divides prod_{j<=N} (1 - q^(kj)) for all
    d <= N; this is what makes psi_toric well-defined on the quotient."""
    prod = RatPoly.one()
    for j in range(1, N + 1):
        prod = prod * (RatPoly.one() - RatPoly.monomial(k * j))
    for d in range(1, N + 1):
        phi = cyclotomic_poly(d)
        body = prod
        for _ in range(N // d):
            body, rem = divmod(body, phi)
            if not rem.is_zero():
                return False
    return True


def psi_chebyshev(p: RatPoly, k: int) -> RatPoly:
    """The endomorphism of Z[r] fixing Z with psi^k(r) = T_k(r): p -> p o T_k."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return p.compose(chebyshev_T(k))


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def frobenius_congruence_check(p: int, x: RatPoly) -> bool:
    """True iff psi^p(x) == x^p mod p in Z[r] (Chebyshev structure)."""
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    defect = psi_chebyshev(x, p) - x**p
    return all(c.denominator == 1 and int(c) % p == 0 for c in defect.coeffs)


def frobenius_congruence_toric(p: int, x: HabiroTrunc) -> bool:
    """True iff psi^p(x) == x^p mod p in Z[q]/((q)_N) (toric structure)."""
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    defect = (psi_toric(x, p) - x**p).residue
    return all(c.denominator == 1 and int(c) % p == 0 for c in defect.coeffs)


def substitute_r(p: RatPoly, x: HabiroTrunc) -> HabiroTrunc:
    """Evaluate an integer polynomial at a Habiro element (Horner)."""
    acc = HabiroTrunc.make(x.level, RatPoly.zero())
    for c in reversed(p.coeffs):
        if c.denominator != 1:
            raise ValueError("polynomial must have integer coefficients")
        acc = acc * x + int(c)
    return acc


def chebyshev_compatibility_check(k: int, N: int) -> bool:
    """psi_toric(r, k) == T_k(r) mod (q)_N, i.e. q^k + q^(-k) = T_k(q + 1/q)."""
    if k < 1 or N < 1:
        raise ValueError("k and N must be >= 1")
    r = habiro_r(N)
    return psi_toric(r, k) == substitute_r(chebyshev_T(k), r)


def involution_invariance_check(p: RatPoly, m: int) -> bool:
    """Whether the value of p(r) at a primitive m-th root of unity is fixed by
    zeta -> zeta^(-1)."""
    if m < 1:
        raise ValueError("m must be >= 1")
    value = eval_at_root(substitute_r(p, habiro_r(m)), m)
    return value == value.involution()


def fixed_seed_elements(count: int = 20, max_degree: int = 5, seed: int = 20260823):
    """Deterministic pseudo-random integer polynomials in r for the
    reproducible congruence batteries."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        deg = rng.randint(1, max_degree)
        coeffs = [rng.randint(-9, 9) for _ in range(deg + 1)]
        p = RatPoly(coeffs)
        if not p.is_zero():
            out.append(p)
    return out


def habiro_battery(level: int) -> dict:
    """Named boolean results of the full verification battery at one level."""
    if level < 1:
        raise LevelError("level must be >= 1")
    results = {}
    r = habiro_r(level)
    q = habiro_q(level)
    qinv = habiro_qinv(level)
    results["r_equals_q_plus_qinv"] = r == q + qinv
    results["q_times_qinv_is_one"] = q * qinv == habiro_one(level)
    results["eval_r_at_roots_of_unity"] = all(
        eval_at_root(habiro_r(m), m)
        == CycloInt.from_poly(m, RatPoly.x() + RatPoly.monomial(m - 1 if m > 1 else 1))
        for m in range(1, min(level, 24) + 1)
    )
    results["chebyshev_composition"] = all(
        psi_chebyshev(chebyshev_T(b), a) == chebyshev_T(a * b)
        for a in range(1, 9)
        for b in range(1, 9)
    )
    elements = fixed_seed_elements()
    results["frobenius_chebyshev"] = all(
        frobenius_congruence_check(p, x)
        for p in (2, 3, 5, 7, 11)
        for x in [RatPoly.x()] + elements
    )
    results["frobenius_toric"] = all(
        frobenius_congruence_toric(p, x) for p in (2, 3, 5) for x in (q, r)
    )
    results["toric_multiplicativity"] = all(
        psi_toric(psi_toric(r, a), b) == psi_toric(r, a * b)
        for a in (2, 3)
        for b in (2, 3)
    )
    results["toric_divisibility_lemma"] = all(
        psi_toric_divisibility_holds(k, min(level, 8)) for k in (2, 3)
    )
    results["chebyshev_compatibility"] = all(
        chebyshev_compatibility_check(k, level) for k in range(1, 9)
    )
    probe = [RatPoly.x(), RatPoly((1, -3, 1)), RatPoly((2, 0, 1, 1))]
    results["involution_invariance"] = all(
        involution_invariance_check(p, m)
        for m in range(1, min(level, 12) + 1)
        for p in probe
    )
    if level >= 4:
        results["q_witness_not_invariant"] = all(
            eval_at_root(habiro_q(m), m)
            != eval_at_root(habiro_q(m), m).involution()
            for m in (3, 4)
        )
    return results
