"""The shortcut unitary: a dense operator mapping the uniform state
directly to the k-step final state, built from one oracle call.

Input basis: Gram-Schmidt completion of the uniform state seeded by the
canonical vectors in index order.  Output basis: the single-oracle final
state completed the same way.  Summing the outer products of matched
basis pairs gives a unitary whose action on the uniform state equals k
kernel iterations.
"""

import warnings
from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionMismatch, OutOfRange, TooLargeForDense
from .linalg import DEFAULT_TOL, complete_basis, gram_schmidt_complete
from .operators import (CallCounter, TargetSet, DENSE_CAP,
                        dense_kernel_matrix, initial_state)
from .decomposition import reduced_state_II, target_amplitudes
from .params import SearchParams


@dataclass
class ShortcutOperator:
    matrix: np.ndarray
    params: SearchParams
    targets: TargetSet
    basis_in: np.ndarray    # rows: input orthonormal basis
    basis_out: np.ndarray   # rows: output orthonormal basis
    oracle_calls: int = 0


@dataclass
class VerificationReport:
    """Named boolean checks plus max residuals for each."""
    checks: dict = field(default_factory=dict)
    residuals: dict = field(default_factory=dict)

    def record(self, name: str, residual: float, tol: float):
        self.residuals[name] = residual
        self.checks[name] = residual <= tol

    @property
    def passed(self) -> bool:
        return all(self.checks.values())


def build_shortcut(n: int, targets: TargetSet,
                   params: SearchParams) -> ShortcutOperator:
    """Assemble the shortcut unitary for the given solved parameters.

    Exactly one oracle invocation is spent (inside the single-oracle
    final-state form); everything else is classical basis completion.
    """
    if n > DENSE_CAP:
        raise TooLargeForDense(f"n={n} exceeds dense cap {DENSE_CAP}")
    size = targets.size
    counter = CallCounter()
    phi0 = initial_state(n)
    phi_k = reduced_state_II(n, targets, params.alpha, params.theta,
                             params.k, counter)

    amps = target_amplitudes(targets.lam, params.alpha, params.theta,
                             params.k, size)
    if abs(amps.v_nt) > DEFAULT_TOL:
        warnings.warn(
            f"parameters are not exact (|v_nt| = {abs(amps.v_nt):.3e}); "
            f"output basis falls back to generic completion",
            stacklevel=2)

    # Canonical seeds in index order; the last one is redundant and the
    # completion drops whichever seed degenerates.
    basis_in = gram_schmidt_complete(
        phi0, np.eye(size, dtype=complex)[:-1])
    basis_out = complete_basis(phi_k)
    if basis_out.shape[0] != size:
        raise DimensionMismatch(
            f"output completion produced {basis_out.shape[0]} vectors, "
            f"expected {size}")

    matrix = np.zeros((size, size), dtype=complex)
    for out_v, in_v in zip(basis_out, basis_in):
        matrix += np.outer(out_v, in_v.conj())
    return ShortcutOperator(matrix=matrix, params=params, targets=targets,
                            basis_in=basis_in, basis_out=basis_out,
                            oracle_calls=counter.count)


def iterative_matrix_power(n: int, targets: TargetSet, alpha: float,
                           k: int) -> np.ndarray:
    """Dense kernel matrix raised to the k-th power by repeated
    multiplication; the brute-force reference for the shortcut."""
    if n > DENSE_CAP:
        raise TooLargeForDense(f"n={n} exceeds dense cap {DENSE_CAP}")
    size = 1 << n
    if k < 0:
        raise OutOfRange(f"k must be >= 0, got {k}")
    out = np.eye(size, dtype=complex)
    if k == 0:
        return out
    g = dense_kernel_matrix(n, targets, alpha)
    for _ in range(k):
        out = g @ out
    return out


def verify_shortcut(c: ShortcutOperator, g_pow: np.ndarray,
                    tol: float = DEFAULT_TOL) -> VerificationReport:
    """Cross-check the shortcut against the iterated dense kernel.

    Checks: (a) first rows agree; (b) every non-first row of both sums
    to zero; (c) first-row sums of both equal sqrt(N)*v_t; (d) both are
    unitary; (e) both map the uniform state to the same final state.
    """
    matrix = c.matrix
    if matrix.shape != g_pow.shape:
        raise DimensionMismatch(
            f"shape mismatch: {matrix.shape} vs {g_pow.shape}")
    size = matrix.shape[0]
    report = VerificationReport()

    report.record("first_row_equal",
                  np.abs(matrix[0] - g_pow[0]).max(), tol)
    row_sums_c = matrix[1:].sum(axis=1)
    row_sums_g = g_pow[1:].sum(axis=1)
    report.record("row_sums_zero",
                  max(np.abs(row_sums_c).max(), np.abs(row_sums_g).max()),
                  tol)
    amps = target_amplitudes(c.targets.lam, c.params.alpha, c.params.theta,
                             c.params.k, size)
    expected_sum = np.sqrt(size) * amps.v_t
    report.record("first_row_sum",
                  max(abs(matrix[0].sum() - expected_sum),
                      abs(g_pow[0].sum() - expected_sum)), tol)
    eye = np.eye(size)
    report.record("unitarity",
                  max(np.abs(matrix.conj().T @ matrix - eye).max(),
                      np.abs(g_pow.conj().T @ g_pow - eye).max()), tol)
    phi0 = np.full(size, 1.0 / np.sqrt(size), dtype=complex)
    report.record("same_final_state",
                  np.abs(matrix @ phi0 - g_pow @ phi0).max(), tol)
    return report
