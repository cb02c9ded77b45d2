"""Complex vector/matrix primitives: Gram-Schmidt completion, unitarity
checks and Kronecker products.

All routines operate on plain numpy arrays with dtype complex128 and are
pure functions of their inputs.
"""

import numpy as np

from .errors import DegenerateSeed, DimensionMismatch, NonSquare

DEFAULT_TOL = 1e-10
DEGENERACY_TOL = 1e-8


def as_complex_vector(v) -> np.ndarray:
    v = np.asarray(v, dtype=complex)
    if v.ndim != 1:
        raise DimensionMismatch(f"expected a 1-d vector, got shape {v.shape}")
    return v


def gram_schmidt_complete(fixed_first, seeds, tol: float = DEGENERACY_TOL,
                          skip_degenerate: bool = False) -> np.ndarray:
    """Complete `fixed_first` (unit norm) to an orthonormal basis.

    Each seed is projected against all previously accepted vectors and
    normalized, in seed order (modified Gram-Schmidt with one
    re-orthogonalization pass).  Returns the basis as rows of an array,
    the first row being `fixed_first` unchanged.

    A seed whose residual norm falls below `tol` raises DegenerateSeed,
    or is silently dropped when `skip_degenerate` is set.
    """
    first = as_complex_vector(fixed_first)
    dim = first.shape[0]
    basis = [first]
    for seed in seeds:
        v = as_complex_vector(seed).copy()
        if v.shape[0] != dim:
            raise DimensionMismatch(
                f"seed has dim {v.shape[0]}, expected {dim}")
        for _ in range(2):  # second pass kills accumulated projection error
            for b in basis:
                v -= (b.conj() @ v) * b
        r = np.linalg.norm(v)
        if r < tol:
            if skip_degenerate:
                continue
            raise DegenerateSeed(
                f"seed residual norm {r:.3e} below {tol:.1e}")
        basis.append(v / r)
    return np.array(basis)


def complete_basis(first, tol: float = DEGENERACY_TOL) -> np.ndarray:
    """Orthonormal basis about `first`, seeded by the canonical basis
    vectors in index order; degenerate seeds are skipped."""
    first = as_complex_vector(first)
    return gram_schmidt_complete(first, np.eye(first.shape[0], dtype=complex),
                                 tol=tol, skip_degenerate=True)


def is_unitary(m, tol: float = DEFAULT_TOL) -> bool:
    """True iff both m^dag m and m m^dag are the identity within `tol`
    (max-abs entry)."""
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise NonSquare(f"expected a square matrix, got shape {m.shape}")
    eye = np.eye(m.shape[0])
    return (np.abs(m.conj().T @ m - eye).max() <= tol
            and np.abs(m @ m.conj().T - eye).max() <= tol)


def tensor_product(a, b) -> np.ndarray:
    """Kronecker product of two vectors or two matrices."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.ndim != b.ndim or a.ndim not in (1, 2):
        raise DimensionMismatch(
            f"operands must both be vectors or both matrices, "
            f"got ndim {a.ndim} and {b.ndim}")
    return np.kron(a, b)
