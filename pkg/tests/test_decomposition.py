import math

import numpy as np
import pytest

from grover_decomp import (CallCounter, NonIntegralM, OutOfRange, TargetSet,
                           ThetaInconsistent, apply_oracle,
                           check_reduced_operator_unitarity,
                           dense_kernel_matrix, even_odd_split,
                           f_coefficients, grover_iterate, initial_state,
                           reduced_state_I, reduced_state_II, rotation_phase,
                           solve, stepwise_expansion, target_amplitudes)

ALPHA_2 = math.acos(-5 + 2 * math.sqrt(5))
THETA_2 = math.pi / 5
S5 = math.sqrt(5)
V_T = complex(2 * (S5 - 1), math.sqrt(5 * S5 - 11) * (S5 + 1)) / math.sqrt(8)


def random_case(rng):
    n = int(rng.integers(1, 9))
    size = 1 << n
    m = int(rng.integers(1, size + 1))
    targets = TargetSet(n, tuple(sorted(
        rng.choice(size, size=m, replace=False).tolist())))
    alpha = float(rng.uniform(0.1, math.pi))
    k = int(rng.integers(1, 11))
    return targets, alpha, rotation_phase(targets.lam, alpha), k


class TestFCoefficients:
    def test_base_values(self):
        coeffs = f_coefficients(2.17, 1)
        np.testing.assert_array_equal(coeffs.f, [0.0, 1.0])

    def test_theta_zero_linear(self):
        coeffs = f_coefficients(0.0, 5)
        np.testing.assert_allclose(coeffs.f, [0, 1, 2, 3, 4, 5], atol=1e-12)

    def test_one_step(self):
        coeffs = f_coefficients(THETA_2, 2)
        assert coeffs.f[2] == pytest.approx(2 * math.cos(THETA_2), abs=1e-15)
        assert coeffs.f[2] == pytest.approx((1 + S5) / 2, abs=1e-12)

    def test_derived_gh(self):
        theta = 0.83
        coeffs = f_coefficients(theta, 4)
        f = coeffs.f
        assert coeffs.g_k == pytest.approx(f[4] * 2 * math.cos(theta) - f[3])
        assert coeffs.h_k == pytest.approx(-f[4])

    def test_recurrence_identity(self):
        # f_{j-1}^2 - f_j f_{j-2} = 1 for all j
        rng = np.random.default_rng(47)
        for _ in range(10):
            theta = rng.uniform(0, math.pi)
            f = f_coefficients(theta, 50).f
            for j in range(2, 51):
                assert f[j - 1] ** 2 - f[j] * f[j - 2] == pytest.approx(
                    1.0, abs=1e-8)

    def test_negative_k(self):
        with pytest.raises(OutOfRange):
            f_coefficients(0.5, -1)


class TestReducedStates:
    def test_form_i_worked_example(self):
        t = TargetSet(3, (0,))
        out = reduced_state_I(3, t, ALPHA_2, THETA_2, 2)
        expected = np.zeros(8, dtype=complex)
        expected[0] = V_T
        np.testing.assert_allclose(out, expected, atol=1e-10)

    def test_form_ii_worked_entries(self):
        t = TargetSet(3, (0,))
        out = reduced_state_II(3, t, ALPHA_2, THETA_2, 2)
        ct = math.cos(THETA_2)
        top = (4 * ct ** 2 - 2 * ct * np.exp(-1j * ALPHA_2) - 1) / math.sqrt(8)
        rest = (4 * ct ** 2 - 2 * ct - 1) / math.sqrt(8)
        assert out[0] == pytest.approx(top, abs=1e-12)
        np.testing.assert_allclose(out[1:], rest, atol=1e-12)

    def test_trivial_theta_alpha_zero(self):
        t = TargetSet(2, (1,))
        for k in (1, 3, 6):
            np.testing.assert_allclose(
                reduced_state_I(2, t, 0.0, 0.0, k), initial_state(2),
                atol=1e-12)
            np.testing.assert_allclose(
                reduced_state_II(2, t, 0.0, 0.0, k), initial_state(2),
                atol=1e-12)

    def test_agree_with_iteration(self):
        rng = np.random.default_rng(53)
        for _ in range(30):
            targets, alpha, theta, k = random_case(rng)
            phi_it = grover_iterate(initial_state(targets.n), targets, alpha,
                                    k)
            np.testing.assert_allclose(
                reduced_state_I(targets.n, targets, alpha, theta, k), phi_it,
                atol=1e-9)
            np.testing.assert_allclose(
                reduced_state_II(targets.n, targets, alpha, theta, k), phi_it,
                atol=1e-9)

    def test_unit_norm(self):
        rng = np.random.default_rng(59)
        for _ in range(20):
            targets, alpha, theta, k = random_case(rng)
            for fn in (reduced_state_I, reduced_state_II):
                out = fn(targets.n, targets, alpha, theta, k)
                assert np.linalg.norm(out) == pytest.approx(1.0, abs=1e-10)

    def test_single_oracle_call(self):
        t = TargetSet(4, (3, 7))
        counter = CallCounter()
        reduced_state_II(4, t, 0.8, rotation_phase(t.lam, 0.8), 7, counter)
        assert counter.count == 1
        counter = CallCounter()
        reduced_state_I(4, t, 0.8, rotation_phase(t.lam, 0.8), 7, counter)
        assert counter.count == 1

    def test_theta_inconsistent_warns(self):
        t = TargetSet(3, (0,))
        with pytest.warns(ThetaInconsistent):
            reduced_state_II(3, t, ALPHA_2, THETA_2 + 0.3, 2)

    def test_adjoint_kernel_equals_oracle_on_uniform(self):
        # kernel^dag on the uniform state reduces to the oracle with -alpha
        rng = np.random.default_rng(61)
        for _ in range(20):
            targets, alpha, _, _ = random_case(rng)
            g = dense_kernel_matrix(targets.n, targets, alpha)
            phi0 = initial_state(targets.n)
            lhs = g.conj().T @ phi0
            rhs = apply_oracle(phi0, targets, -alpha)
            np.testing.assert_allclose(lhs, rhs, atol=1e-10)


class TestStepwiseExpansion:
    def test_k2(self):
        exp = stepwise_expansion(2)
        assert sorted(exp.kernel_terms) == [-1, 1]
        assert list(exp.identity_terms) == [0]
        assert exp.identity_pi_flag

    def test_k3(self):
        exp = stepwise_expansion(3)
        assert sorted(exp.kernel_terms) == [-2, 0, 2]
        assert sorted(exp.identity_terms) == [-1, 1]

    def test_k6(self):
        exp = stepwise_expansion(6)
        assert sorted(exp.kernel_terms) == [-5, -3, -1, 1, 3, 5]
        assert sorted(exp.identity_terms) == [-4, -2, 0, 2, 4]

    @pytest.mark.parametrize("k", range(1, 7))
    def test_sums_match_recurrence(self, k):
        theta = 0.7
        coeffs = f_coefficients(theta, k)
        exp = stepwise_expansion(k)
        assert exp.kernel_sum(theta) == pytest.approx(coeffs.f[k], abs=1e-12)
        assert exp.identity_sum(theta) == pytest.approx(coeffs.f[k - 1],
                                                        abs=1e-12)

    @pytest.mark.parametrize("k", [0, 7])
    def test_out_of_range(self, k):
        with pytest.raises(OutOfRange):
            stepwise_expansion(k)


class TestEvenOddSplit:
    def test_even_base(self):
        t = TargetSet(3, (0,))
        theta = rotation_phase(t.lam, 1.1)
        out = even_odd_split(3, t, 1.1, theta, 1, "even")
        expected = grover_iterate(initial_state(3), t, 1.1, 2)
        np.testing.assert_allclose(out, expected, atol=1e-10)

    def test_odd_base(self):
        t = TargetSet(3, (0,))
        theta = rotation_phase(t.lam, 1.1)
        out = even_odd_split(3, t, 1.1, theta, 1, "odd")
        expected = grover_iterate(initial_state(3), t, 1.1, 3)
        np.testing.assert_allclose(out, expected, atol=1e-10)

    def test_unit_norm(self):
        rng = np.random.default_rng(67)
        for _ in range(20):
            targets, alpha, theta, k = random_case(rng)
            parity = "even" if k % 2 == 0 else "odd"
            half = k // 2 if parity == "even" else (k - 1) // 2
            if parity == "even" and half == 0:
                continue
            out = even_odd_split(targets.n, targets, alpha, theta, half,
                                 parity)
            assert np.linalg.norm(out) == pytest.approx(1.0, abs=1e-10)

    def test_bad_parity(self):
        t = TargetSet(2, (0,))
        with pytest.raises(OutOfRange):
            even_odd_split(2, t, 0.5, rotation_phase(t.lam, 0.5), 1, "both")


class TestTargetAmplitudes:
    def test_exact_params(self):
        pair = target_amplitudes(1 / 8, ALPHA_2, THETA_2, 2, 8)
        assert abs(pair.v_t) ** 2 == pytest.approx(1.0, abs=1e-12)
        assert pair.v_nt == pytest.approx(0.0, abs=1e-12)
        assert pair.v_t == pytest.approx(V_T, abs=1e-12)

    def test_normalization(self):
        rng = np.random.default_rng(71)
        for _ in range(50):
            n = int(rng.integers(1, 9))
            size = 1 << n
            m = int(rng.integers(1, size + 1))
            alpha = rng.uniform(0.1, math.pi)
            theta = rotation_phase(m / size, alpha)
            k = int(rng.integers(1, 11))
            pair = target_amplitudes(m / size, alpha, theta, k, size)
            total = m * abs(pair.v_t) ** 2 + (size - m) * abs(pair.v_nt) ** 2
            assert total == pytest.approx(1.0, abs=1e-10)

    def test_non_integral_m(self):
        with pytest.raises(NonIntegralM):
            target_amplitudes(0.3, 1.0, 1.0, 2, 8)


class TestReducedOperatorUnitarity:
    def test_n1_unitary(self):
        p = solve(1 / 2)
        t = TargetSet(1, (0,))
        assert check_reduced_operator_unitarity(1, t, p.alpha, p.theta, p.k)

    def test_n3_not_unitary(self):
        p = solve(1 / 8)
        t = TargetSet(3, (0,))
        assert not check_reduced_operator_unitarity(3, t, p.alpha, p.theta,
                                                    p.k)

    def test_alpha_zero_collapses_to_identity(self):
        t = TargetSet(3, (0,))
        assert check_reduced_operator_unitarity(3, t, 0.0, 0.0, 4)
