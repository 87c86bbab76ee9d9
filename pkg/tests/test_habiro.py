import pytest

from zetapoly.exactcore import RatPoly
from zetapoly.habiro import (
    CycloInt,
    HabiroTrunc,
    LevelError,
    chebyshev_T,
    chebyshev_compatibility_check,
    cyclotomic_poly,
    eval_at_root,
    fixed_seed_elements,
    frobenius_congruence_check,
    frobenius_congruence_toric,
    habiro_one,
    habiro_q,
    habiro_qinv,
    habiro_r,
    involution_invariance_check,
    psi_chebyshev,
    psi_toric,
    psi_toric_divisibility_holds,
    substitute_r,
)


def P(*coeffs):
    return RatPoly(coeffs)


class TestCyclotomic:
    def test_phi1(self):
        assert cyclotomic_poly(1) == P(-1, 1)

    def test_phi4(self):
        assert cyclotomic_poly(4) == P(1, 0, 1)

    def test_phi12(self):
        assert cyclotomic_poly(12) == P(1, 0, -1, 0, 1)

    def test_product_over_divisors(self):
        for m in (6, 8, 10, 15):
            prod = RatPoly.one()
            for d in range(1, m + 1):
                if m % d == 0:
                    prod = prod * cyclotomic_poly(d)
            assert prod == RatPoly.monomial(m) - 1


class TestHabiroR:
    def test_level1_collapses_to_2(self):
        assert habiro_r(1).residue == P(2)

    def test_level2(self):
        assert habiro_r(2).residue == P(1, 2, -1)

    def test_projective_compatibility(self):
        assert habiro_r(5).reduce_level(2) == habiro_r(2)
        for n in range(1, 10):
            for m in range(1, n):
                assert habiro_r(n).reduce_level(m) == habiro_r(m)


class TestHabiroQinv:
    def test_level2(self):
        qinv = habiro_qinv(2)
        assert qinv.residue == P(1, 1, -1)
        assert habiro_q(2) * qinv == habiro_one(2)

    @pytest.mark.parametrize("n", range(1, 13))
    def test_inverse_at_all_levels(self, n):
        assert habiro_q(n) * habiro_qinv(n) == habiro_one(n)

    @pytest.mark.parametrize("n", range(1, 13))
    def test_r_identity(self, n):
        assert habiro_r(n) == habiro_q(n) + habiro_qinv(n)


class TestEvalAtRoot:
    def test_conductor_1(self):
        assert eval_at_root(habiro_r(5), 1) == CycloInt(1, (2,))

    def test_conductor_4_vanishes(self):
        assert eval_at_root(habiro_r(5), 4) == CycloInt(4, ())

    def test_conductor_3(self):
        assert eval_at_root(habiro_r(5), 3) == CycloInt(3, (-1,))

    def test_level_too_small(self):
        with pytest.raises(LevelError):
            eval_at_root(habiro_r(3), 4)

    def test_representative_independence(self):
        # shifting the representative by a multiple of (q)_N leaves the value fixed
        from zetapoly.habiro import qpochhammer

        x = habiro_r(6)
        shifted = HabiroTrunc.make(6, x.residue + qpochhammer(6) * P(3, -2, 1))
        assert eval_at_root(shifted, 5) == eval_at_root(x, 5)


class TestChebyshev:
    def test_t1(self):
        assert chebyshev_T(1) == RatPoly.x()

    def test_t2(self):
        assert chebyshev_T(2) == P(-2, 0, 1)

    def test_t3(self):
        assert chebyshev_T(3) == P(0, -3, 0, 1)

    def test_defining_q_identity(self):
        # T_k(q + 1/q) = q^k + q^(-k), checked as a Laurent identity cleared by q^k
        for k in range(1, 9):
            # q^k * T_k(q + 1/q) with q + 1/q -> (q^2+1)/q
            acc = RatPoly.zero()
            for i, c in enumerate(chebyshev_T(k).coeffs):
                acc = acc + c * P(1, 0, 1) ** i * RatPoly.monomial(k - i)
            assert acc == RatPoly.monomial(2 * k) + 1


class TestPsiToric:
    def test_q_to_qk(self):
        assert psi_toric(habiro_q(6), 2) == HabiroTrunc.make(6, RatPoly.monomial(2))

    def test_identity(self):
        x = habiro_r(8)
        assert psi_toric(x, 1) == x

    def test_composition(self):
        q = habiro_q(10)
        assert psi_toric(psi_toric(q, 2), 3) == psi_toric(q, 6)

    def test_multiplicativity_on_r_level12(self):
        r = habiro_r(12)
        for a in (2, 3, 4):
            for b in (2, 3):
                if a * b <= 8:
                    assert psi_toric(psi_toric(r, a), b) == psi_toric(r, a * b)

    def test_divisibility_lemma(self):
        for k in (2, 3, 5):
            assert psi_toric_divisibility_holds(k, 8)

    def test_frobenius_toric(self):
        for p in (2, 3, 5):
            assert frobenius_congruence_toric(p, habiro_q(12))
            assert frobenius_congruence_toric(p, habiro_r(12))

    def test_commutes_with_reduction(self):
        x = habiro_r(10)
        assert psi_toric(x, 3).reduce_level(6) == psi_toric(x.reduce_level(6), 3)


class TestPsiChebyshev:
    def test_psi2_of_r(self):
        assert psi_chebyshev(RatPoly.x(), 2) == P(-2, 0, 1)

    def test_commuting_composition(self):
        r = RatPoly.x()
        assert psi_chebyshev(psi_chebyshev(r, 3), 2) == psi_chebyshev(r, 6)
        assert psi_chebyshev(psi_chebyshev(r, 2), 3) == psi_chebyshev(r, 6)

    def test_ring_homomorphism(self):
        p = P(0, 0, 1)  # r^2
        assert psi_chebyshev(p, 4) == chebyshev_T(4) ** 2

    def test_chebyshev_semigroup(self):
        for a in range(1, 9):
            for b in range(1, 9):
                assert psi_chebyshev(chebyshev_T(b), a) == chebyshev_T(a * b)


class TestFrobenius:
    def test_generator_p2(self):
        assert frobenius_congruence_check(2, RatPoly.x())

    def test_generator_p3(self):
        assert frobenius_congruence_check(3, RatPoly.x())

    def test_quadratic_p5(self):
        assert frobenius_congruence_check(5, P(1, 1, 1))

    def test_composite_rejected(self):
        with pytest.raises(ValueError):
            frobenius_congruence_check(4, RatPoly.x())

    def test_fixed_seed_battery(self):
        elements = fixed_seed_elements()
        assert len(elements) == 20
        assert elements == fixed_seed_elements()  # deterministic
        for p in (2, 3, 5, 7, 11):
            for x in elements:
                assert frobenius_congruence_check(p, x)


class TestCompatibility:
    def test_k1(self):
        assert chebyshev_compatibility_check(1, 6)

    def test_k2_level6(self):
        assert chebyshev_compatibility_check(2, 6)

    def test_k5_level8(self):
        assert chebyshev_compatibility_check(5, 8)

    def test_all_k_level12(self):
        for k in range(1, 9):
            assert chebyshev_compatibility_check(k, 12)


class TestInvolution:
    def test_r_at_4(self):
        assert involution_invariance_check(RatPoly.x(), 4)

    def test_constant(self):
        for m in (1, 2, 5, 7):
            assert involution_invariance_check(P(17), m)

    def test_q_not_invariant(self):
        for m in (3, 4):
            v = eval_at_root(habiro_q(m), m)
            assert v != v.involution()

    def test_polynomials_in_r_invariant(self):
        for m in range(1, 13):
            for p in (RatPoly.x(), P(1, -3, 1), P(2, 0, 1, 1)):
                assert involution_invariance_check(p, m)


class TestReductionCoherence:
    def test_ops_commute_with_reduction(self):
        a = habiro_r(9)
        b = habiro_q(9) * habiro_q(9) + 3
        for m in (2, 4, 7):
            assert (a + b).reduce_level(m) == a.reduce_level(m) + b.reduce_level(m)
            assert (a * b).reduce_level(m) == a.reduce_level(m) * b.reduce_level(m)

    def test_eval_commutes_with_reduction(self):
        x = habiro_r(10)
        for m in (1, 2, 3, 4, 5):
            assert eval_at_root(x, m) == eval_at_root(x.reduce_level(6), m)

    def test_json_shapes(self):
        d = habiro_r(4).to_json_dict()
        assert d["level"] == 4 and d["modulus_degree"] == 10
        assert all(isinstance(c, int) for c in d["residue"])
        c = eval_at_root(habiro_r(5), 4).to_json_dict()
        assert c == {"conductor": 4, "coords": []}
