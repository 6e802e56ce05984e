"""Dense complex linear algebra for small operators.

Matrices are square numpy arrays of complex128.  The eigensolver is a cyclic
Jacobi iteration specialized to Hermitian input: at dimensions 2 and 4
robustness and predictability beat asymptotic speed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

HERMITIAN_RTOL = 1e-10
_OFF_DIAG_RTOL = 1e-13
_MAX_SWEEPS = 100


def as_matrix(m) -> np.ndarray:
    """Coerce to a square complex128 matrix with finite entries."""
    a = np.asarray(m, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a.real)) or not np.all(np.isfinite(a.imag)):
        raise ValueError("matrix entries must be finite")
    return a


def frobenius(m) -> float:
    a = np.asarray(m)
    return float(np.sqrt(np.sum(np.abs(a) ** 2)))


def adjoint(a) -> np.ndarray:
    """Conjugate transpose."""
    return as_matrix(a).conj().T


def is_hermitian(m, rtol: float = HERMITIAN_RTOL) -> bool:
    a = as_matrix(m)
    return frobenius(a - a.conj().T) <= rtol * max(1.0, frobenius(a))


def matmul(a, b) -> np.ndarray:
    a = as_matrix(a)
    b = as_matrix(b)
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape[0]} vs {b.shape[0]}")
    return a @ b


def kron(a, b) -> np.ndarray:
    """Kronecker product; dim of result is the product of the input dims."""
    return np.kron(as_matrix(a), as_matrix(b))


def commutator(x, y) -> np.ndarray:
    """[x, y] = xy - yx; anti-Hermitian whenever x and y are Hermitian."""
    x = as_matrix(x)
    y = as_matrix(y)
    if x.shape != y.shape:
        raise ValueError(f"dimension mismatch: {x.shape[0]} vs {y.shape[0]}")
    return x @ y - y @ x


@dataclass(eq=False)
class EigenDecomposition:
    """Eigenvalues in descending order; eigenvectors as matching columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def hermitian_eigen(m) -> EigenDecomposition:
    """Full eigendecomposition of a Hermitian matrix by cyclic Jacobi.

    Each rotation zeroes one off-diagonal element: the complex phase of
    a[p,q] is absorbed first, then a real 2x2 rotation diagonalizes the
    remaining symmetric block.  Sweeps stop once the off-diagonal Frobenius
    mass falls below 1e-13 relative to max(1, ||m||_F); 100 sweeps is far
    beyond what 4x4 input ever needs, so exceeding the cap signals a bug.

    Raises ValueError for non-Hermitian input and RuntimeError (with the
    residual) on non-convergence.
    """
    a = as_matrix(m).copy()
    n = a.shape[0]
    scale = max(1.0, frobenius(a))
    if frobenius(a - a.conj().T) > HERMITIAN_RTOL * scale:
        raise ValueError("matrix is not Hermitian within tolerance")
    a = 0.5 * (a + a.conj().T)
    v = np.eye(n, dtype=np.complex128)
    off_tol = _OFF_DIAG_RTOL * scale
    # rotations below this size cannot push the off-diagonal mass above off_tol
    skip = off_tol / (4.0 * n * n)
    off_mask = ~np.eye(n, dtype=bool)

    def off_norm() -> float:
        return float(np.sqrt(np.sum(np.abs(a[off_mask]) ** 2)))

    for _ in range(_MAX_SWEEPS):
        if off_norm() <= off_tol:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                r = abs(apq)
                if r <= skip:
                    continue
                phase = apq / r
                tau = (a[q, q].real - a[p, p].real) / (2.0 * r)
                t = (1.0 if tau >= 0.0 else -1.0) / (abs(tau) + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                jp = c * phase
                jq = s * phase
                cp = a[:, p].copy()
                cq = a[:, q].copy()
                a[:, p] = jp * cp - s * cq
                a[:, q] = jq * cp + c * cq
                rp = a[p, :].copy()
                rq = a[q, :].copy()
                a[p, :] = np.conj(jp) * rp - s * rq
                a[q, :] = np.conj(jq) * rp + c * rq
                vp = v[:, p].copy()
                vq = v[:, q].copy()
                v[:, p] = jp * vp - s * vq
                v[:, q] = jq * vp + c * vq
    residual = off_norm()
    if residual > off_tol:
        raise RuntimeError(
            f"Jacobi iteration did not converge in {_MAX_SWEEPS} sweeps "
            f"(off-diagonal residual {residual:.3e})"
        )
    vals = np.diag(a).real.copy()
    order = np.argsort(-vals, kind="stable")
    return EigenDecomposition(eigenvalues=vals[order], eigenvectors=v[:, order])


def operator_norm(m) -> float:
    """Spectral norm of a Hermitian matrix: max |eigenvalue|."""
    eig = hermitian_eigen(m)
    return float(np.max(np.abs(eig.eigenvalues)))
