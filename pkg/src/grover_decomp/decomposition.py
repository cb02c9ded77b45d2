"""Additive decomposition of the k-fold iterated kernel.

The k-step state can be rewritten as a linear combination of a single
kernel application and the identity (form I), or of a single oracle
application with phase -alpha and the identity (form II), with real
coefficients generated by a three-term recurrence in theta.  Both forms
are identities whenever cos(theta) = 1 - lambda*(1 - cos(alpha)).
"""

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .errors import NonIntegralM, OutOfRange, ThetaInconsistent
from .linalg import is_unitary
from .operators import (CallCounter, TargetSet, apply_diffusion, apply_oracle,
                        dense_kernel_matrix, grover_iterate, initial_state)

_THETA_TOL = 1e-10


@dataclass(frozen=True)
class DecompositionCoeffs:
    """The recurrence sequence f_0..f_k and the derived g_k, h_k.

    f_0 = 0, f_1 = 1, f_j = 2 cos(theta) f_{j-1} - f_{j-2}; for k >= 1,
    g_k = f_k f_2 - f_{k-1} and h_k = -f_k.
    """
    f: np.ndarray
    g_k: float
    h_k: float
    theta: float


@dataclass(frozen=True)
class AmplitudePair:
    """Per-target and per-non-target amplitudes of the final state."""
    v_t: complex
    v_nt: complex


def f_coefficients(theta: float, k: int) -> DecompositionCoeffs:
    """Run the recurrence up to f_k and derive g_k, h_k."""
    if k < 0:
        raise OutOfRange(f"k must be >= 0, got {k}")
    f = np.zeros(k + 1)
    if k >= 1:
        f[1] = 1.0
    two_cos = 2.0 * math.cos(theta)
    for j in range(2, k + 1):
        f[j] = two_cos * f[j - 1] - f[j - 2]
    if k >= 1:
        g_k = f[k] * two_cos - f[k - 1]  # f_2 = 2 cos(theta)
        h_k = -f[k]
    else:
        g_k, h_k = 1.0, 0.0  # k=0: the identity
    return DecompositionCoeffs(f=f, g_k=g_k, h_k=h_k, theta=theta)


def _warn_if_theta_inconsistent(targets: TargetSet, alpha: float,
                                theta: float) -> None:
    gap = abs(math.cos(theta) - (1.0 - targets.lam * (1.0 - math.cos(alpha))))
    if gap > _THETA_TOL:
        warnings.warn(
            f"theta={theta} off the matching relation by {gap:.3e}; "
            f"the decomposition identity will not hold",
            ThetaInconsistent, stacklevel=3)


def reduced_state_I(n: int, targets: TargetSet, alpha: float, theta: float,
                    k: int, counter: CallCounter | None = None) -> np.ndarray:
    """Form I: [f_k * kernel - f_{k-1} * I] applied to the uniform state.

    Costs a single kernel application (one oracle, one diffusion) plus a
    scaled add, independent of k.
    """
    if k < 1:
        raise OutOfRange(f"k must be >= 1, got {k}")
    _warn_if_theta_inconsistent(targets, alpha, theta)
    coeffs = f_coefficients(theta, k)
    phi0 = initial_state(n)
    phi1 = apply_diffusion(apply_oracle(phi0, targets, alpha, counter), alpha)
    return coeffs.f[k] * phi1 - coeffs.f[k - 1] * phi0


def reduced_state_II(n: int, targets: TargetSet, alpha: float, theta: float,
                     k: int, counter: CallCounter | None = None) -> np.ndarray:
    """Form II: [g_k * I + h_k * oracle(-alpha)] applied to the uniform
    state.  A single oracle call with phase -alpha; no diffusion."""
    if k < 1:
        raise OutOfRange(f"k must be >= 1, got {k}")
    _warn_if_theta_inconsistent(targets, alpha, theta)
    coeffs = f_coefficients(theta, k)
    phi0 = initial_state(n)
    phi_u = apply_oracle(phi0, targets, -alpha, counter)
    return coeffs.g_k * phi0 + coeffs.h_k * phi_u


@dataclass(frozen=True)
class StepwiseExpansion:
    """Phase terms of the explicit k-step decomposition.

    Each entry m in `kernel_terms` (resp. `identity_terms`) stands for a
    phase factor e^{i m theta} multiplying the kernel (resp. identity);
    the identity coefficient additionally carries an e^{i pi} factor,
    kept symbolic in `identity_pi_flag`.
    """
    k: int
    kernel_terms: tuple
    identity_terms: tuple
    identity_pi_flag: bool

    def kernel_sum(self, theta: float) -> float:
        return sum(math.cos(m * theta) for m in self.kernel_terms)

    def identity_sum(self, theta: float) -> float:
        return sum(math.cos(m * theta) for m in self.identity_terms)


def stepwise_expansion(k: int) -> StepwiseExpansion:
    """Explicit phase-term table for k = 1..6.

    The kernel terms sum to f_k(theta) and the identity terms to
    f_{k-1}(theta) for any theta.
    """
    if not 1 <= k <= 6:
        raise OutOfRange(f"k must be in 1..6, got {k}")
    # f_k is a sum of e^{i m theta} with m stepping by 2 from -(k-1) to k-1
    kernel_terms = tuple(range(k - 1, -k, -2))
    identity_terms = tuple(range(k - 2, -(k - 1), -2))
    exp = StepwiseExpansion(k=k, kernel_terms=kernel_terms,
                            identity_terms=identity_terms,
                            identity_pi_flag=True)
    for theta in (0.3, 1.1, 2.9):
        coeffs = f_coefficients(theta, k)
        assert abs(exp.kernel_sum(theta) - coeffs.f[k]) < 1e-12
        assert abs(exp.identity_sum(theta) - coeffs.f[k - 1]) < 1e-12
    return exp


def even_odd_split(n: int, targets: TargetSet, alpha: float, theta: float,
                   k: int, parity: str,
                   counter: CallCounter | None = None) -> np.ndarray:
    """Base decomposition schemes.

    even: e^{ik theta}|phi_k> + e^{-ik theta}|phi_k> - |phi_0>, equal to
    |phi_{2k}>; odd: the same with phi_{k+1} and phi_1, equal to
    |phi_{2k+1}>.  Each |phi_j> is computed by plain iteration.
    """
    if k < 0 or (parity == "even" and k < 1):
        raise OutOfRange(f"k={k} invalid for parity={parity!r}")
    _warn_if_theta_inconsistent(targets, alpha, theta)
    phi0 = initial_state(n)
    two_cos_k = 2.0 * math.cos(k * theta)
    if parity == "even":
        phi_k = grover_iterate(phi0, targets, alpha, k, counter)
        return two_cos_k * phi_k - phi0
    if parity == "odd":
        phi_k1 = grover_iterate(phi0, targets, alpha, k + 1, counter)
        phi_1 = grover_iterate(phi0, targets, alpha, 1, counter)
        return two_cos_k * phi_k1 - phi_1
    raise OutOfRange(f"parity must be 'even' or 'odd', got {parity!r}")


def target_amplitudes(lam: float, alpha: float, theta: float, k: int,
                      size: int) -> AmplitudePair:
    """Closed-form amplitudes v_t = (g_k + h_k e^{-i alpha})/sqrt(N) and
    v_nt = (g_k + h_k)/sqrt(N)."""
    m = lam * size
    if abs(m - round(m)) > 1e-9:
        raise NonIntegralM(f"lambda*N = {m} is not an integer")
    coeffs = f_coefficients(theta, k)
    root_n = math.sqrt(size)
    v_t = (coeffs.g_k + coeffs.h_k * np.exp(-1j * alpha)) / root_n
    v_nt = (coeffs.g_k + coeffs.h_k) / root_n
    return AmplitudePair(v_t=complex(v_t), v_nt=complex(v_nt))


def check_reduced_operator_unitarity(n: int, targets: TargetSet, alpha: float,
                                     theta: float, k: int,
                                     tol: float = 1e-10) -> bool:
    """Whether the dense form-I operator f_k*kernel - f_{k-1}*I is
    unitary.  It preserves the norm of the uniform state for any n, but
    is a unitary matrix only for n = 1 (or trivially when it collapses
    to the identity)."""
    coeffs = f_coefficients(theta, k)
    g = dense_kernel_matrix(n, targets, alpha)
    op = coeffs.f[k] * g - coeffs.f[k - 1] * np.eye(targets.size)
    return is_unitary(op, tol)
