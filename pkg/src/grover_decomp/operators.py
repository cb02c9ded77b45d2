"""Oracle, diffusion and kernel operators.

The oracle multiplies marked amplitudes by e^{i alpha}; the diffusion is
a rank-one modification about the uniform state.  One kernel step is
diffusion(-alpha) after oracle(alpha).  State application is matrix-free
(O(N) per step); a dense assembly is provided for verification.
"""

import math
import os
from dataclasses import dataclass

import numpy as np

from .errors import (DimensionMismatch, OutOfRange, TooLargeForDense)
from .params import rotation_phase

DENSE_CAP = 12          # 4096 x 4096 complex
DEFAULT_MAX_QUBITS = 26


def max_qubits() -> int:
    """Matrix-free qubit cap; override with GROVER_DECOMP_MAX_N."""
    return int(os.environ.get("GROVER_DECOMP_MAX_N", DEFAULT_MAX_QUBITS))


@dataclass(frozen=True)
class TargetSet:
    """Marked basis states in an n-qubit register (N = 2^n)."""
    n: int
    indices: tuple

    def __post_init__(self):
        object.__setattr__(self, "indices", tuple(self.indices))
        if self.n < 1:
            raise OutOfRange(f"n must be >= 1, got {self.n}")
        if not self.indices:
            raise OutOfRange("at least one target index required")
        if list(self.indices) != sorted(set(self.indices)):
            raise OutOfRange("target indices must be strictly increasing")
        if self.indices[0] < 0 or self.indices[-1] >= self.size:
            raise OutOfRange(
                f"target indices must lie in [0, {self.size})")

    @property
    def size(self) -> int:
        return 1 << self.n

    @property
    def m(self) -> int:
        return len(self.indices)

    @property
    def lam(self) -> float:
        return self.m / self.size


@dataclass
class CallCounter:
    """Counts oracle invocations; pass one per computation, not shared."""
    count: int = 0

    def tick(self):
        self.count += 1


@dataclass(frozen=True)
class KernelSpectrum:
    """Unit-modulus eigenvalue pair e^{+-i theta} of the 2x2 kernel."""
    eps_plus: complex
    eps_minus: complex
    theta: float


@dataclass(frozen=True)
class TwoDimAmplitudes:
    """Success amplitude on |T> and failure amplitude on |R>."""
    d_k: complex
    u_k: complex


def initial_state(n: int) -> np.ndarray:
    """Uniform superposition over all 2^n basis states."""
    if n < 1:
        raise OutOfRange(f"n must be >= 1, got {n}")
    if n > max_qubits():
        raise TooLargeForDense(
            f"n={n} exceeds matrix-free cap {max_qubits()} "
            f"(set GROVER_DECOMP_MAX_N to raise)")
    size = 1 << n
    return np.full(size, 1.0 / math.sqrt(size), dtype=complex)


def _check_state(state, targets: TargetSet) -> np.ndarray:
    state = np.asarray(state, dtype=complex)
    if state.shape != (targets.size,):
        raise DimensionMismatch(
            f"state has shape {state.shape}, expected ({targets.size},)")
    return state


def apply_oracle(state, targets: TargetSet, alpha: float,
                 counter: CallCounter | None = None) -> np.ndarray:
    """Multiply marked amplitudes by e^{i alpha}; O(M) on a copy."""
    state = _check_state(state, targets).copy()
    idx = list(targets.indices)
    state[idx] *= np.exp(1j * alpha)
    if counter is not None:
        counter.tick()
    return state


def apply_diffusion(state, alpha: float) -> np.ndarray:
    """e^{-i alpha} * state + (1 - e^{-i alpha}) <phi0|state> |phi0>.

    One inner product and one scaled add; no Hadamard products are
    materialized.
    """
    state = np.asarray(state, dtype=complex)
    if state.ndim != 1:
        raise DimensionMismatch(f"expected a vector, got shape {state.shape}")
    size = state.shape[0]
    # <phi0|state> with phi0 uniform: mean * sqrt(N)
    overlap = state.sum() / math.sqrt(size)
    out = np.exp(-1j * alpha) * state
    out += (1.0 - np.exp(-1j * alpha)) * overlap / math.sqrt(size)
    return out


def grover_iterate(state, targets: TargetSet, alpha: float, k: int,
                   counter: CallCounter | None = None) -> np.ndarray:
    """Apply the kernel (diffusion after oracle) k times; O(kN)."""
    state = _check_state(state, targets)
    if k < 0:
        raise OutOfRange(f"k must be >= 0, got {k}")
    for _ in range(k):
        state = apply_diffusion(apply_oracle(state, targets, alpha, counter),
                                alpha)
    return state


def dense_kernel_matrix(n: int, targets: TargetSet, alpha: float) -> np.ndarray:
    """Dense N x N kernel matrix W(-alpha) U(alpha); for verification."""
    if n > DENSE_CAP:
        raise TooLargeForDense(f"n={n} exceeds dense cap {DENSE_CAP}")
    size = 1 << n
    u = np.ones(size, dtype=complex)
    u[list(targets.indices)] = np.exp(1j * alpha)
    m = np.full((size, size), (1.0 - np.exp(-1j * alpha)) / size,
                dtype=complex)
    m += np.exp(-1j * alpha) * np.eye(size)
    return m * u[np.newaxis, :]


def two_dim_kernel(lam: float, alpha: float) -> np.ndarray:
    """The kernel restricted to span{|R>, |T>} as a 2x2 matrix."""
    if not 0.0 < lam <= 1.0:
        raise OutOfRange(f"lambda must be in (0, 1], got {lam}")
    em = np.exp(-1j * alpha)
    ep = np.exp(1j * alpha)
    off = math.sqrt(lam * (1.0 - lam))
    return np.array([[1.0 - (1.0 - em) * lam, -(1.0 - ep) * off],
                     [(1.0 - em) * off, 1.0 - (1.0 - ep) * lam]],
                    dtype=complex)


def kernel_eigenvalues(lam: float, alpha: float) -> KernelSpectrum:
    """Eigenvalues e^{+-i theta} of the 2x2 kernel, in closed form."""
    if not 0.0 < lam <= 1.0:
        raise OutOfRange(f"lambda must be in (0, 1], got {lam}")
    x = lam * (1.0 - math.cos(alpha))
    re = 1.0 - x
    im = math.sqrt(max(0.0, x * (2.0 - x)))
    return KernelSpectrum(eps_plus=complex(re, im),
                          eps_minus=complex(re, -im),
                          theta=rotation_phase(lam, alpha))


def two_dim_amplitudes(lam: float, alpha: float, k: int) -> TwoDimAmplitudes:
    """Closed-form success/failure amplitudes after k kernel steps.

    d_k is the overlap with the uniform target superposition |T>, u_k
    with its complement |R>.
    """
    if not 0.0 < lam <= 1.0:
        raise OutOfRange(f"lambda must be in (0, 1], got {lam}")
    if k < 0:
        raise OutOfRange(f"k must be >= 0, got {k}")
    theta = rotation_phase(lam, alpha)
    half = theta / 2.0
    if abs(math.sin(half)) < 1e-15:
        # theta = 0 means the kernel acts as the identity on span{|R>,|T>}
        return TwoDimAmplitudes(d_k=complex(math.sqrt(lam)),
                                u_k=complex(math.sqrt(1.0 - lam)))
    d_k = (math.sqrt(lam) / math.sin(half)) * (
        math.sin((k + 0.5) * theta)
        - (1.0 + np.exp(-1j * alpha)) * math.sin(k * theta)
        / (2.0 * math.cos(half)))
    u_k = (math.sqrt(1.0 - lam) / math.cos(half)) * math.cos((k + 0.5) * theta)
    return TwoDimAmplitudes(d_k=complex(d_k), u_k=complex(u_k))
