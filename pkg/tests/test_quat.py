import math

import pytest

from rot4 import (
    EPS_ALG,
    GibbsSingular,
    I,
    J,
    K,
    NotUnit,
    ONE,
    Quaternion,
    Vec3,
    conj,
    dot4,
    gibbs_from_unit,
    mul,
    norm_sq,
    polar,
    rodrigues_compose,
    unit_from_gibbs,
)
from conftest import comp_diff, comp_diff_up_to_sign, rand_unit_quat

R2 = 1.0 / math.sqrt(2.0)


class TestMul:
    def test_table(self):
        assert mul(I, J).components() == (0, 0, 0, 1)
        assert mul(J, I).components() == (0, 0, 0, -1)
        assert mul(J, K).components() == (0, 1, 0, 0)
        assert mul(K, I).components() == (0, 0, 1, 0)
        for e in (I, J, K):
            assert mul(e, e).components() == (-1, 0, 0, 0)

    def test_identity(self, rng):
        for _ in range(20):
            x = rand_unit_quat(rng)
            assert comp_diff(mul(x, ONE), x) == 0.0
            assert comp_diff(mul(ONE, x), x) == 0.0

    def test_left_factor_of_worked_composition(self):
        # (1+j)/sqrt2 * (1+i)/sqrt2 = (1+i+j-k)/2
        got = mul(Quaternion.of(R2, 0, R2, 0), Quaternion.of(R2, R2, 0, 0))
        expected = Quaternion.of(0.5, 0.5, 0.5, -0.5)
        assert comp_diff(got, expected) < 1e-15


class TestConjNorm:
    def test_conj_examples(self):
        assert conj(Quaternion.of(1, 1, 0, 0)).components() == (1, -1, 0, 0)
        assert conj(Quaternion(5.0)).components() == (5, 0, 0, 0)

    def test_conj_involution_and_antihomomorphism(self, rng):
        for _ in range(200):
            x = Quaternion.from_array(rng.standard_normal(4))
            y = Quaternion.from_array(rng.standard_normal(4))
            assert comp_diff(conj(conj(x)), x) == 0.0
            assert comp_diff(conj(mul(x, y)), mul(conj(y), conj(x))) <= EPS_ALG * 10

    def test_norm_sq_examples(self):
        assert norm_sq(Quaternion.of(1, 1, 1, 1)) == 4.0
        assert abs(norm_sq(Quaternion.of(R2, R2, 0, 0)) - 1.0) < 1e-15

    def test_norm_multiplicative(self, rng):
        for _ in range(1000):
            x = Quaternion.from_array(rng.standard_normal(4))
            y = Quaternion.from_array(rng.standard_normal(4))
            bound = EPS_ALG * (1 + norm_sq(x)) * (1 + norm_sq(y))
            assert abs(norm_sq(mul(x, y)) - norm_sq(x) * norm_sq(y)) <= bound

    def test_associativity(self, rng):
        for _ in range(1000):
            x, y, z = (Quaternion.from_array(rng.standard_normal(4)) for _ in range(3))
            lhs = mul(mul(x, y), z)
            rhs = mul(x, mul(y, z))
            scale = max(1.0, math.sqrt(norm_sq(x) * norm_sq(y) * norm_sq(z)))
            assert comp_diff(lhs, rhs) <= EPS_ALG * scale


class TestDot4:
    def test_orthogonal_basis(self):
        assert dot4(ONE, I) == 0.0

    def test_fixed_plane_spanners_orthogonal(self):
        assert dot4(Quaternion.of(0, 1, -1, 0), Quaternion.of(1, 0, 0, 1)) == 0.0

    def test_equals_scalar_of_product_with_conjugate(self, rng):
        for _ in range(200):
            x = Quaternion.from_array(rng.standard_normal(4))
            y = Quaternion.from_array(rng.standard_normal(4))
            assert abs(dot4(x, y) - mul(x, conj(y)).s) <= EPS_ALG * 100
            assert dot4(x, y) == dot4(y, x)
        x = rand_unit_quat(rng)
        assert abs(dot4(x, x) - norm_sq(x)) < 1e-15


class TestPolar:
    def test_quarter_turn(self):
        form = polar(Quaternion.of(R2, R2, 0, 0))
        assert abs(form.half_angle - math.pi / 4) < 1e-15
        assert comp_diff(Quaternion(0, form.axis), I) < 1e-15
        assert not form.axis_degenerate

    def test_degenerate(self):
        form = polar(ONE)
        assert form.half_angle == 0.0
        assert form.axis_degenerate
        form = polar(-ONE)
        assert form.half_angle == math.pi
        assert form.axis_degenerate

    def test_third_turn(self):
        form = polar(Quaternion.of(0.5, 0.5, 0.5, -0.5))
        assert abs(form.half_angle - math.pi / 3) < 1e-15
        s3 = 1.0 / math.sqrt(3.0)
        assert comp_diff(Quaternion(0, form.axis), Quaternion.of(0, s3, s3, -s3)) < 1e-15

    def test_round_trip(self, rng):
        for _ in range(500):
            a = rand_unit_quat(rng)
            if a.v.norm() <= 10e-9:
                continue
            form = polar(a)
            assert comp_diff_up_to_sign(form.to_quaternion(), a) <= 1e-9
            # reconstruction is sign-exact: half_angle in [0, pi] keeps sin >= 0
            assert comp_diff(form.to_quaternion(), a) <= 1e-9

    def test_rejects_non_unit(self):
        with pytest.raises(NotUnit):
            polar(Quaternion.of(1, 1, 0, 0))


class TestGibbs:
    def test_examples(self):
        assert comp_diff(Quaternion(0, gibbs_from_unit(Quaternion.of(R2, R2, 0, 0))), I) < 1e-15
        assert gibbs_from_unit(ONE).components() == (0, 0, 0)
        with pytest.raises(GibbsSingular):
            gibbs_from_unit(I)

    def test_unit_from_gibbs(self):
        assert comp_diff(unit_from_gibbs(Vec3()), ONE) == 0.0
        assert comp_diff(unit_from_gibbs(Vec3(1, 0, 0)), Quaternion.of(R2, R2, 0, 0)) < 1e-15
        got = unit_from_gibbs(Vec3(1, 1, -1))
        assert comp_diff(got, Quaternion.of(0.5, 0.5, 0.5, -0.5)) < 1e-15

    def test_round_trip(self, rng):
        count = 0
        while count < 300:
            a = rand_unit_quat(rng)
            if abs(a.s) <= 10e-9:
                continue
            count += 1
            back = unit_from_gibbs(gibbs_from_unit(a))
            assert comp_diff_up_to_sign(back, a) <= 1e-12


class TestRodrigues:
    def test_identity(self, rng):
        g = Vec3(*rng.standard_normal(3))
        assert comp_diff(Quaternion(0, rodrigues_compose(Vec3(), g)), Quaternion(0, g)) == 0.0

    def test_quarter_turns(self):
        # oracle: (1+j)(1+i)/2 = (1+i+j-k)/2, whose Gibbs vector is i+j-k
        got = rodrigues_compose(Vec3(1, 0, 0), Vec3(0, 1, 0))
        assert got.components() == (1.0, 1.0, -1.0)

    def test_half_turn_is_singular(self):
        with pytest.raises(GibbsSingular):
            rodrigues_compose(Vec3(0, 0, 1), Vec3(0, 0, 1))

    def test_matches_quaternion_product(self, rng):
        done = 0
        while done < 1000:
            g1 = Vec3(*rng.standard_normal(3))
            g2 = Vec3(*rng.standard_normal(3))
            if abs(1.0 - g2.dot(g1)) <= 0.1:
                continue
            done += 1
            composed = rodrigues_compose(g1, g2)
            oracle = gibbs_from_unit(mul(unit_from_gibbs(g2), unit_from_gibbs(g1)))
            assert comp_diff(Quaternion(0, composed), Quaternion(0, oracle)) <= 1e-10


class TestConstructors:
    def test_reject_non_finite(self):
        with pytest.raises(ValueError):
            Vec3(float("nan"), 0, 0)
        with pytest.raises(ValueError):
            Quaternion(float("inf"))

    def test_operator_sugar_matches_functions(self, rng):
        x = rand_unit_quat(rng)
        y = rand_unit_quat(rng)
        assert comp_diff(x * y, mul(x, y)) == 0.0
        assert comp_diff(2.0 * x, x * 2.0) == 0.0
        assert comp_diff((x + y) - y, x) <= 1e-15
