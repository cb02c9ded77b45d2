"""Randomized and golden verification suites, shared by the CLI and the
test suite.  Deterministic given the seed."""

import math
from dataclasses import dataclass, field

import numpy as np

from . import golden
from .linalg import is_unitary
from .operators import (CallCounter, TargetSet, dense_kernel_matrix,
                        grover_iterate, initial_state, kernel_eigenvalues,
                        two_dim_kernel)
from .decomposition import even_odd_split, reduced_state_I, reduced_state_II
from .params import rotation_phase, solve
from .shortcut import build_shortcut, iterative_matrix_power, verify_shortcut


@dataclass
class SuiteResult:
    name: str
    passed: bool
    max_residual: float
    detail: str = ""


@dataclass
class VerifyOutcome:
    results: list = field(default_factory=list)

    def add(self, name: str, residual: float, tol: float, detail: str = ""):
        self.results.append(
            SuiteResult(name=name, passed=bool(residual <= tol),
                        max_residual=float(residual), detail=detail))

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)


def _random_case(rng):
    n = int(rng.integers(1, 9))
    size = 1 << n
    m = int(rng.integers(1, size + 1))
    indices = sorted(rng.choice(size, size=m, replace=False).tolist())
    targets = TargetSet(n=n, indices=tuple(indices))
    alpha = float(rng.uniform(0.1, math.pi))
    k = int(rng.integers(1, 11))
    theta = rotation_phase(targets.lam, alpha)
    return targets, alpha, theta, k


def identity_suite(seed: int, cases: int = 200, tol: float = 1e-9,
                   theta_offset: float = 0.0) -> VerifyOutcome:
    """The four computation paths agree entrywise and have unit norm.

    `theta_offset` deliberately breaks the matching relation; with a
    nonzero offset the suite is expected to fail (negative control).
    """
    import warnings
    rng = np.random.default_rng(seed)
    out = VerifyOutcome()
    worst_path = worst_norm = worst_count = 0.0
    for _ in range(cases):
        targets, alpha, theta, k = _random_case(rng)
        theta += theta_offset
        n = targets.n
        counter_it = CallCounter()
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            phi_it = grover_iterate(initial_state(n), targets, alpha, k,
                                    counter_it)
            phi_i = reduced_state_I(n, targets, alpha, theta, k)
            counter_ii = CallCounter()
            phi_ii = reduced_state_II(n, targets, alpha, theta, k, counter_ii)
            if k % 2 == 0:
                phi_split = even_odd_split(n, targets, alpha, theta, k // 2,
                                           "even")
            else:
                phi_split = even_odd_split(n, targets, alpha, theta,
                                           (k - 1) // 2, "odd")
        for phi in (phi_i, phi_ii, phi_split):
            worst_path = max(worst_path, np.abs(phi - phi_it).max())
        for phi in (phi_it, phi_i, phi_ii, phi_split):
            worst_norm = max(worst_norm,
                             abs(np.linalg.norm(phi) - 1.0))
        worst_count = max(worst_count,
                          abs(counter_it.count - k), abs(counter_ii.count - 1))
    out.add("identity_paths_agree", worst_path, tol)
    out.add("identity_unit_norm", worst_norm, 1e-10)
    out.add("identity_oracle_counts", worst_count, 0.0)
    return out


def spectral_suite(seed: int, cases: int = 60) -> VerifyOutcome:
    """Eigen-relations of the kernel and the 2x2 spectrum."""
    rng = np.random.default_rng(seed)
    out = VerifyOutcome()
    worst_k1 = worst_kmax = worst_spec = worst_props = 0.0
    for _ in range(cases):
        targets, alpha, theta, _ = _random_case(rng)
        n, lam = targets.n, targets.lam
        g = dense_kernel_matrix(n, targets, alpha)
        phi0 = initial_state(n)
        # G + G^dag has the uniform state as eigenvector, eigenvalue 2cos(theta)
        resid = (g + g.conj().T) @ phi0 - 2.0 * math.cos(theta) * phi0
        worst_k1 = max(worst_k1, np.linalg.norm(resid))
        gk = np.eye(targets.size, dtype=complex)
        for k in range(1, 13):
            gk = g @ gk
            resid = (gk + gk.conj().T) @ phi0 \
                - 2.0 * math.cos(k * theta) * phi0
            worst_kmax = max(worst_kmax, np.linalg.norm(resid))
        spec = kernel_eigenvalues(lam, alpha)
        direct = np.linalg.eigvals(two_dim_kernel(lam, alpha))
        direct = direct[np.argsort(-direct.imag)]
        worst_spec = max(worst_spec,
                         abs(direct[0] - spec.eps_plus),
                         abs(direct[1] - spec.eps_minus))
        worst_props = max(worst_props,
                          abs(abs(spec.eps_plus) - 1.0),
                          abs(abs(spec.eps_minus) - 1.0),
                          abs(spec.eps_plus * spec.eps_minus - 1.0))
    out.add("eigen_relation_k1", worst_k1, 1e-10)
    out.add("eigen_relation_k_up_to_12", worst_kmax, 1e-9)
    out.add("spectrum_vs_direct_solve", worst_spec, 1e-12)
    out.add("spectrum_unit_modulus_product", worst_props, 1e-12)
    return out


def unitarity_suite(seed: int, cases: int = 40) -> VerifyOutcome:
    """Dense kernel matrices are unitary; matrix-free application agrees
    with dense powers."""
    rng = np.random.default_rng(seed)
    out = VerifyOutcome()
    all_unitary = True
    worst = 0.0
    for _ in range(cases):
        targets, alpha, _, k = _random_case(rng)
        g = dense_kernel_matrix(targets.n, targets, alpha)
        all_unitary &= is_unitary(g)
        gk = iterative_matrix_power(targets.n, targets, alpha, k)
        phi0 = initial_state(targets.n)
        worst = max(worst, np.abs(
            gk @ phi0 - grover_iterate(phi0, targets, alpha, k)).max())
    out.add("dense_kernel_unitary", 0.0 if all_unitary else 1.0, 0.0)
    out.add("matrix_free_vs_dense", worst, 1e-10)
    return out


def golden_suite(tol: float = 1e-10) -> VerifyOutcome:
    """Reproduce the checked-in n=3 single-target closed forms."""
    out = VerifyOutcome()
    targets = TargetSet(n=3, indices=(0,))
    params = solve(1 / 8)

    fx = golden.load_fixture("final_state")
    phi_k = grover_iterate(initial_state(3), targets, params.alpha, params.k)
    out.add("golden_final_state", np.abs(phi_k - fx["matrix"][0]).max(), tol)

    fx = golden.load_fixture("shortcut_matrix")
    c = build_shortcut(3, targets, params)
    out.add("golden_shortcut_matrix",
            np.abs(c.matrix - fx["matrix"]).max(), tol)

    fx = golden.load_fixture("iterated_kernel")
    g2 = iterative_matrix_power(3, targets, params.alpha, params.k)
    out.add("golden_iterated_kernel", np.abs(g2 - fx["matrix"]).max(), tol)

    report = verify_shortcut(c, g2)
    out.add("golden_shortcut_cross_checks",
            max(report.residuals.values()), tol)
    return out


def run_all(seed: int, theta_offset: float = 0.0) -> VerifyOutcome:
    out = VerifyOutcome()
    out.results += identity_suite(seed, theta_offset=theta_offset).results
    out.results += spectral_suite(seed + 1).results
    out.results += unitarity_suite(seed + 2).results
    out.results += golden_suite().results
    return out
