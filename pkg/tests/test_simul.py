import cmath
import math
import random

import pytest

from simulroots.errors import (
    DistinctnessViolation,
    PostStepCollision,
    ShiftedCollision,
    SingularDenominator,
)
from simulroots.poly import MonicPolynomial
from simulroots.simul import (
    ApproximationVector,
    Method,
    NormParameter,
    quality_measure,
    separations,
    step,
    step_ehrlich,
    step_ehrlich_derivative,
    step_nourein,
    step_quantities,
    step_weierstrass,
    weierstrass_corrections,
)

from oracles import mp_step_ehrlich_derivative, mp_step_nourein, mp_step_weierstrass, mp_weierstrass

QUAD = MonicPolynomial((-1, 0))  # x^2 - 1
INF = NormParameter.of(math.inf)
ONE = NormParameter.of(1)


def random_instance(rng, degree, e_target, norm=INF):
    """Roots well separated in an annulus, z perturbed until E(z) < e_target."""
    while True:
        roots = []
        while len(roots) < degree:
            r = cmath.rect(rng.uniform(0.4, 2.2), rng.uniform(0, 2 * math.pi))
            if all(abs(r - s) > 0.5 for s in roots):
                roots.append(r)
            elif rng.random() < 0.05:
                roots = []
        f = MonicPolynomial.from_roots(roots)
        scale = 0.2
        for _ in range(60):
            z = tuple(
                r + scale * cmath.rect(1.0, rng.uniform(0, 2 * math.pi))
                for r in roots
            )
            try:
                if quality_measure(f, z, norm) < e_target:
                    return f, z
            except DistinctnessViolation:
                pass
            scale *= 0.7
        # pathological draw; try a fresh root set


class TestWeierstrassCorrections:
    def test_root_vector_gives_zero(self):
        assert weierstrass_corrections(QUAD, (1, -1)) == (0j, 0j)

    def test_hand_value(self):
        w = weierstrass_corrections(QUAD, (2, 0))
        assert w[0] == pytest.approx(1.5)
        assert w[1] == pytest.approx(0.5)

    def test_matches_product_form_oracle(self):
        f = MonicPolynomial.from_roots([1, 2, 3])
        z = (1.1, 1.9, 3.2)
        expected = mp_weierstrass(f.coefficients, z)
        got = weierstrass_corrections(f, z)
        for g, e in zip(got, expected):
            assert g == pytest.approx(e, rel=1e-13)

    def test_coincident_rejected(self):
        with pytest.raises(DistinctnessViolation):
            weierstrass_corrections(QUAD, (1.0, 1.0))

    def test_count_mismatch_rejected(self):
        with pytest.raises(ValueError):
            weierstrass_corrections(QUAD, (1.0, 2.0, 3.0))


class TestSeparations:
    def test_direct_distances(self):
        d, delta = separations((0, 1, 3))
        assert d == (1.0, 1.0, 2.0)
        assert delta == 1.0

    def test_coincident_points_give_zero(self):
        d, delta = separations((0, 0))
        assert d == (0.0, 0.0)
        assert delta == 0.0

    def test_complex_moduli(self):
        d, delta = separations((1 + 1j, 1 - 1j, 4))
        assert d[0] == pytest.approx(2.0)
        assert d[1] == pytest.approx(2.0)
        assert d[2] == pytest.approx(math.sqrt(10))
        assert delta == pytest.approx(2.0)


class TestQualityMeasure:
    def test_root_vector_is_zero(self):
        assert quality_measure(QUAD, (1, -1), INF) == 0.0

    def test_inf_norm(self):
        assert quality_measure(QUAD, (2, 0), INF) == pytest.approx(0.75)

    def test_one_norm(self):
        assert quality_measure(QUAD, (2, 0), ONE) == pytest.approx(1.0)

    def test_zero_iff_root_vector(self):
        rng = random.Random(5)
        for _ in range(20):
            f, z = random_instance(rng, 4, 0.2)
            assert quality_measure(f, z, INF) > 0
        # and zero exactly on a representable root vector
        f = MonicPolynomial.from_roots([2, -3, 5, 7])
        assert quality_measure(f, (2, -3, 5, 7), INF) == 0.0


class TestSteps:
    def test_weierstrass_hand_value(self):
        assert step_weierstrass(QUAD, (2, 0)) == (0.5 + 0j, -0.5 + 0j)

    def test_weierstrass_matches_oracle_on_chebyshev(self):
        f = MonicPolynomial((0.125, 0, -1, 0))
        z = (0.95, 0.4, -0.36, -0.9)
        expected = mp_step_weierstrass(f.coefficients, z)
        for g, e in zip(step_weierstrass(f, z), expected):
            assert g == pytest.approx(e, rel=1e-12)

    def test_ehrlich_derivative_hand_value(self):
        got = step_ehrlich_derivative(QUAD, (2, 0))
        assert got[0] == pytest.approx(0.8)
        assert got[1] == pytest.approx(-2.0)

    def test_ehrlich_forms_agree_on_hand_case(self):
        assert step_ehrlich(QUAD, (2, 0)) == pytest.approx(
            step_ehrlich_derivative(QUAD, (2, 0))
        )

    def test_ehrlich_derivative_matches_mpmath_oracle(self):
        f = MonicPolynomial.from_roots([1, 2, 3])
        z = (1.1, 1.9, 3.2)
        expected = mp_step_ehrlich_derivative(f.coefficients, z)
        for g, e in zip(step_ehrlich_derivative(f, z), expected):
            assert g == pytest.approx(e, rel=1e-12)

    def test_nourein_hand_case_matches_oracle(self):
        z = (1.2, -0.8)
        expected = mp_step_nourein(QUAD.coefficients, z)
        for g, e in zip(step_nourein(QUAD, z), expected):
            assert g == pytest.approx(e, rel=1e-13)

    def test_nourein_reduces_quality_with_fourth_order_signature(self):
        f = MonicPolynomial.from_roots([-2, -1, 0, 1, 2])
        z = (-2.06, -0.93, 0.05, 0.94, 2.07)
        e_values = [quality_measure(f, z, INF)]
        for _ in range(2):
            z = step_nourein(f, z)
            e_values.append(quality_measure(f, z, INF))
        assert e_values[1] < e_values[0]
        assert e_values[2] < e_values[1]
        ratio = math.log(e_values[2] / e_values[1]) / math.log(e_values[1] / e_values[0])
        assert 3.0 <= ratio <= 5.5

    @pytest.mark.parametrize("stepper", [step_weierstrass, step_ehrlich, step_ehrlich_derivative, step_nourein])
    def test_fixed_point_at_root_vector(self, stepper):
        f = MonicPolynomial.from_roots([1, -2, 4])
        z = (1 + 0j, -2 + 0j, 4 + 0j)
        assert stepper(f, z) == z

    @pytest.mark.parametrize("method", list(Method))
    def test_translation_equivariance(self, method):
        rng = random.Random(11)
        f, z = random_instance(rng, 4, 0.15)
        a = 0.7 - 0.3j
        shifted = MonicPolynomial.from_roots(
            [r + a for r in _roots_of(f)]
        )
        base = step(method, f, z)
        moved = step(method, shifted, tuple(zi + a for zi in z))
        for b, m in zip(base, moved):
            assert m == pytest.approx(b + a, rel=1e-12, abs=1e-12)

    @pytest.mark.parametrize("method", list(Method))
    def test_permutation_equivariance(self, method):
        rng = random.Random(13)
        f, z = random_instance(rng, 5, 0.15)
        perm = [3, 0, 4, 1, 2]
        base = step(method, f, z)
        permuted = step(method, f, tuple(z[i] for i in perm))
        for k, i in enumerate(perm):
            assert permuted[k] == pytest.approx(base[i], rel=1e-12, abs=1e-14)


def _roots_of(f):
    from simulroots.oracle import reference_roots

    return reference_roots(f).as_complex


class TestWernerEquivalence:
    def test_forms_agree_on_random_instances(self):
        rng = random.Random(101)
        for _ in range(50):
            f, z = random_instance(rng, rng.randint(2, 6), 0.1)
            bs = step_ehrlich(f, z)
            deriv = step_ehrlich_derivative(f, z)
            for a, b in zip(bs, deriv):
                assert abs(a - b) <= 1e-10 * max(abs(a), abs(b), 1e-12)


class TestErrorPaths:
    def test_singular_denominator_both_ehrlich_forms(self):
        # at z = (i, 0) on x^2 - 1 the component-0 denominator vanishes exactly
        with pytest.raises(SingularDenominator) as info:
            step_ehrlich(QUAD, (1j, 0))
        assert info.value.index == 0
        with pytest.raises(SingularDenominator):
            step_ehrlich_derivative(QUAD, (1j, 0))

    def test_shifted_collision(self):
        # z1 - z2 = W1 exactly: (1.25, 0.5) on x^2 - 1
        with pytest.raises(ShiftedCollision) as info:
            step_nourein(QUAD, (1.25, 0.5))
        assert (info.value.i, info.value.j) == (0, 1)

    def test_post_step_collision_warns_but_returns(self):
        # Weierstrass step maps (i, -i) on x^2 - 1 to (0, 0)
        with pytest.warns(PostStepCollision):
            out = step_weierstrass(QUAD, (1j, -1j))
        assert out == (0j, 0j)


class TestNormParameter:
    def test_duals(self):
        assert NormParameter.of(1).q == math.inf
        assert NormParameter.of(math.inf).q == 1.0
        assert NormParameter.of(2).q == 2.0
        assert NormParameter.of(1.5).q == pytest.approx(3.0)

    def test_degenerate_exponents(self):
        one = NormParameter.of(1)
        assert 7.0**one.inv_q == 1.0
        inf = NormParameter.of("inf")
        assert inf.inv_q == 1.0

    def test_rejects_bad_p(self):
        with pytest.raises(ValueError):
            NormParameter.of(0.5)
        with pytest.raises(ValueError):
            NormParameter.of(float("nan"))

    def test_norms(self):
        two = NormParameter.of(2)
        assert two.norm([3, 4]) == pytest.approx(5.0)
        assert NormParameter.of(1).norm([3, -4]) == pytest.approx(7.0)
        assert NormParameter.of(math.inf).norm([3, -4]) == pytest.approx(4.0)


def test_step_quantities_bundle():
    q = step_quantities(QUAD, (2, 0), INF)
    assert q.corrections == (1.5 + 0j, 0.5 - 0j)
    assert q.separations == (2.0, 2.0)
    assert q.min_separation == 2.0
    assert q.quality == pytest.approx(0.75)
    assert q.correction_norm == pytest.approx(1.5)


def test_approximation_vector_is_sequence_like():
    v = ApproximationVector((1, 2j))
    assert len(v) == 2
    assert list(v) == [1 + 0j, 2j]
    assert v[1] == 2j
