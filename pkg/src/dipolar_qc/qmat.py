"""Small dense complex linear algebra for 2x2 and 4x4 Hermitian problems.

Matrices are plain ``numpy.ndarray`` objects of dtype ``complex128``.  Every
function returns a fresh array and never modifies its arguments.

The eigensolver is a cyclic complex Jacobi iteration.  For the matrix sizes
used here (at most 4x4) it is fast enough, fully deterministic, and accurate
to a few ulps of the matrix norm.
"""

from typing import NamedTuple

import numpy as np

from .errors import (
    DimensionMismatchError,
    NoConvergenceError,
    NotHermitianError,
    NotPSDError,
)

__all__ = [
    "EigenSystem",
    "pauli",
    "kron",
    "dagger",
    "is_hermitian",
    "hermitian_eig",
    "matrix_sqrt_psd",
    "unit_vector",
    "bloch_observable",
]

HERMITIAN_RTOL = 1e-12
JACOBI_TOL = 1e-13
JACOBI_MAX_SWEEPS = 100
# Eigenvalues this far below zero (relative to the largest magnitude) are
# rounding noise and get clamped; anything more negative is an error.
PSD_RTOL = 1e-10
# Eigenvalues below this (relative) level are indistinguishable from
# rounding noise and are treated as exact zeros before taking a square root.
SQRT_ZERO_RTOL = 1e-14

_PAULI = {
    "identity": np.array([[1, 0], [0, 1]], dtype=complex),
    "x": np.array([[0, 1], [1, 0]], dtype=complex),
    "y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "z": np.array([[1, 0], [0, -1]], dtype=complex),
}
_PAULI["i"] = _PAULI["identity"]


class EigenSystem(NamedTuple):
    """Eigenvalues (ascending) and matching eigenvector columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def pauli(axis):
    """Return the Pauli matrix for ``axis`` in {'x', 'y', 'z', 'identity'}."""
    try:
        return _PAULI[axis.lower()].copy()
    except KeyError:
        raise ValueError(f"unknown Pauli axis {axis!r}") from None


def _as_square(a):
    a = np.array(a, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionMismatchError(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix has non-finite entries")
    return a


def kron(a, b):
    """Tensor product with row blocks indexed by ``a``."""
    return np.kron(_as_square(a), _as_square(b))


def dagger(a):
    return np.conj(np.transpose(a))


def _maxabs(a):
    return float(np.max(np.abs(a))) if a.size else 0.0


def is_hermitian(a, rtol=HERMITIAN_RTOL):
    a = np.asarray(a)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        return False
    return _maxabs(a - dagger(a)) <= rtol * (1.0 + _maxabs(a))


def _off_norm(a):
    off = a - np.diag(np.diag(a))
    return float(np.sqrt(np.sum(np.abs(off) ** 2)))


def hermitian_eig(a):
    """Diagonalize a Hermitian matrix by cyclic complex Jacobi rotations.

    Parameters
    ----------
    a : array_like
        Square Hermitian matrix.

    Returns
    -------
    EigenSystem
        Real eigenvalues in ascending order and a unitary matrix whose
        column ``k`` is the eigenvector for eigenvalue ``k``.

    Raises
    ------
    NotHermitianError
        If ``a`` fails the Hermiticity check.
    NoConvergenceError
        If the off-diagonal norm is not reduced below threshold within
        ``JACOBI_MAX_SWEEPS`` sweeps.
    """
    a = _as_square(a)
    if not is_hermitian(a):
        raise NotHermitianError("matrix is not Hermitian")
    n = a.shape[0]
    a = 0.5 * (a + dagger(a))
    v = np.eye(n, dtype=complex)

    threshold = JACOBI_TOL * np.linalg.norm(a)
    for _ in range(JACOBI_MAX_SWEEPS):
        if _off_norm(a) <= threshold:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                mag = abs(apq)
                # Entries this small cannot keep the off-norm above threshold.
                if mag <= threshold / n:
                    continue
                # Phase e^{-i phi} turns the (p, q) block real symmetric;
                # then a classic real Jacobi rotation zeroes it.
                phase = np.exp(-1j * np.angle(apq))
                tau = (a[q, q].real - a[p, p].real) / (2.0 * mag)
                if tau == 0.0:
                    t = 1.0
                else:
                    t = np.copysign(1.0, tau) / (abs(tau) + np.hypot(1.0, tau))
                c = 1.0 / np.hypot(1.0, t)
                s = t * c
                g = np.eye(n, dtype=complex)
                g[p, p] = c
                g[p, q] = s
                g[q, p] = -s * phase
                g[q, q] = c * phase
                a = dagger(g) @ a @ g
                a[p, q] = a[q, p] = 0.0
                v = v @ g
    else:
        if _off_norm(a) > threshold:
            raise NoConvergenceError(
                f"Jacobi iteration did not converge in {JACOBI_MAX_SWEEPS} sweeps"
            )

    w = np.real(np.diag(a)).copy()
    order = np.argsort(w, kind="stable")
    return EigenSystem(w[order], v[:, order])


def matrix_sqrt_psd(a):
    """Principal square root of a Hermitian positive semidefinite matrix.

    Eigenvalues within ``PSD_RTOL * max|a|`` below zero are clamped to zero.
    Positive eigenvalues at rounding-noise level (``SQRT_ZERO_RTOL`` relative
    to the largest eigenvalue) are also zeroed, since their square roots would
    otherwise inflate 1e-17 noise to 1e-9.
    """
    a = _as_square(a)
    w, v = hermitian_eig(a)
    scale = _maxabs(a)
    if w.size and w[0] < -PSD_RTOL * scale:
        raise NotPSDError(f"matrix has eigenvalue {w[0]:.3e} < 0")
    top = max(float(w[-1]), 0.0) if w.size else 0.0
    w = np.where(w <= SQRT_ZERO_RTOL * top, 0.0, w)
    s = (v * np.sqrt(w)) @ dagger(v)
    return 0.5 * (s + dagger(s))


def unit_vector(r):
    """Normalize a real 3-vector to a Bloch direction."""
    r = np.asarray(r, dtype=float)
    if r.shape != (3,):
        raise DimensionMismatchError(f"Bloch vector must have 3 components, got {r.shape}")
    norm = np.linalg.norm(r)
    if not np.isfinite(norm) or norm == 0.0:
        raise ValueError("Bloch vector must be finite and non-zero")
    return r / norm


def bloch_observable(r):
    """Return sigma . r for one direction or a stack of shape (..., 3).

    The directions are used as given; normalize with :func:`unit_vector`
    first when needed.
    """
    r = np.asarray(r, dtype=float)
    return (
        r[..., 0, None, None] * _PAULI["x"]
        + r[..., 1, None, None] * _PAULI["y"]
        + r[..., 2, None, None] * _PAULI["z"]
    )
