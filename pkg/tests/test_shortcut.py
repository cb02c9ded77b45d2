import math

import numpy as np
import pytest

from grover_decomp import (TargetSet, TooLargeForDense, build_shortcut,
                           dense_kernel_matrix, grover_iterate, initial_state,
                           is_unitary, iterative_matrix_power, solve,
                           verify_shortcut)
from grover_decomp.golden import load_fixture

S5 = math.sqrt(5)
V_T = complex(2 * (S5 - 1), math.sqrt(5 * S5 - 11) * (S5 + 1)) / math.sqrt(8)


@pytest.fixture(scope="module")
def worked_case():
    params = solve(1 / 8)
    targets = TargetSet(3, (0,))
    c = build_shortcut(3, targets, params)
    g2 = iterative_matrix_power(3, targets, params.alpha, params.k)
    return c, g2


class TestBuildShortcut:
    def test_matches_golden_matrix(self, worked_case):
        c, _ = worked_case
        fx = load_fixture("shortcut_matrix")
        np.testing.assert_allclose(c.matrix, fx["matrix"], atol=1e-10)

    def test_closed_form_rows(self, worked_case):
        c, _ = worked_case
        np.testing.assert_allclose(c.matrix[0], V_T / math.sqrt(8),
                                   atol=1e-10)
        row1 = np.full(8, -1 / (2 * math.sqrt(14)))
        row1[0] = math.sqrt(7) / math.sqrt(8)
        np.testing.assert_allclose(c.matrix[1], row1, atol=1e-10)
        row7 = np.zeros(8)
        row7[6], row7[7] = 1 / math.sqrt(2), -1 / math.sqrt(2)
        np.testing.assert_allclose(c.matrix[7], row7, atol=1e-10)

    def test_unitary(self, worked_case):
        c, _ = worked_case
        assert is_unitary(c.matrix)

    def test_maps_uniform_to_final(self, worked_case):
        c, _ = worked_case
        out = c.matrix @ initial_state(3)
        expected = np.zeros(8, dtype=complex)
        expected[0] = V_T
        np.testing.assert_allclose(out, expected, atol=1e-10)

    def test_single_oracle_call(self, worked_case):
        c, _ = worked_case
        assert c.oracle_calls == 1

    def test_basis_completeness(self, worked_case):
        c, _ = worked_case
        for basis in (c.basis_in, c.basis_out):
            np.testing.assert_allclose(basis.T @ basis.conj(), np.eye(8),
                                       atol=1e-10)

    @pytest.mark.parametrize("m", [1, 2, 3, 4])
    @pytest.mark.parametrize("c_extra", [0, 1, 2])
    def test_sweep_single_target(self, m, c_extra):
        n = m + c_extra
        targets = TargetSet(n, (0,))
        params = solve(targets.lam)
        op = build_shortcut(n, targets, params)
        assert is_unitary(op.matrix)
        expected = grover_iterate(initial_state(n), targets, params.alpha,
                                  params.k)
        np.testing.assert_allclose(op.matrix @ initial_state(n), expected,
                                   atol=1e-10)

    def test_multi_target(self):
        targets = TargetSet(4, (2, 5))
        params = solve(targets.lam)
        op = build_shortcut(4, targets, params)
        assert is_unitary(op.matrix)
        expected = grover_iterate(initial_state(4), targets, params.alpha,
                                  params.k)
        np.testing.assert_allclose(op.matrix @ initial_state(4), expected,
                                   atol=1e-10)

    def test_non_exact_params_warn(self):
        targets = TargetSet(3, (0,))
        from grover_decomp.params import SearchParams, rotation_phase
        alpha = 2.0  # not the matching phase for k=2
        bad = SearchParams(lam=1 / 8, k=2, alpha=alpha,
                           theta=rotation_phase(1 / 8, alpha))
        with pytest.warns(UserWarning, match="not exact"):
            op = build_shortcut(3, targets, bad)
        assert is_unitary(op.matrix)  # fallback completion stays unitary

    def test_dense_cap(self):
        with pytest.raises(TooLargeForDense):
            build_shortcut(13, TargetSet(13, (0,)), solve(2 ** -13))


class TestIterativeMatrixPower:
    def test_matches_golden(self, worked_case):
        _, g2 = worked_case
        fx = load_fixture("iterated_kernel")
        np.testing.assert_allclose(g2, fx["matrix"], atol=1e-10)

    def test_closed_form_entries(self, worked_case):
        _, g2 = worked_case
        root = math.sqrt(5 * S5 - 11)
        a = V_T / math.sqrt(8)
        b = complex(2 - 2 * S5, root * (1 + S5)) / 8
        c = complex(610 - 274 * S5, root * (137 - 55 * S5)) / 8
        d = complex(-102 + 46 * S5, -root * (23 - 9 * S5)) / 8
        np.testing.assert_allclose(g2[0], a, atol=1e-10)
        np.testing.assert_allclose(g2[1:, 0], b, atol=1e-10)
        np.testing.assert_allclose(np.diag(g2)[1:], c, atol=1e-10)
        assert g2[1, 2] == pytest.approx(d, abs=1e-10)
        assert g2[5, 3] == pytest.approx(d, abs=1e-10)

    def test_k_zero(self):
        out = iterative_matrix_power(2, TargetSet(2, (0,)), 1.1, 0)
        np.testing.assert_array_equal(out, np.eye(4))

    def test_k_one(self):
        targets = TargetSet(3, (1,))
        np.testing.assert_allclose(
            iterative_matrix_power(3, targets, 0.9, 1),
            dense_kernel_matrix(3, targets, 0.9), atol=1e-14)


class TestVerifyShortcut:
    def test_all_checks_pass(self, worked_case):
        report = verify_shortcut(*worked_case)
        assert report.passed
        assert set(report.checks) == {
            "first_row_equal", "row_sums_zero", "first_row_sum",
            "unitarity", "same_final_state"}

    def test_against_itself(self, worked_case):
        c, _ = worked_case
        assert verify_shortcut(c, c.matrix).passed

    def test_wrong_power_fails_final_state(self, worked_case):
        c, _ = worked_case
        g1 = iterative_matrix_power(3, c.targets, c.params.alpha, 1)
        report = verify_shortcut(c, g1)
        assert not report.checks["same_final_state"]
