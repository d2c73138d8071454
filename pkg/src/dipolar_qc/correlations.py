"""Skew information, quantum Fisher information and their local minima.

For a bipartite state on C^2 (x) C^n and a local observable
``H = (sigma . r) (x) 1`` with unit ``r``:

* skew information ``I(rho, H) = -1/2 Tr([sqrt(rho), H]^2)``
  ``= 1 - r^T W r`` with ``W_ij = Tr[sqrt(rho) A_i sqrt(rho) A_j]``,
* quantum Fisher information (normalized so a pure state gives the
  variance) ``F(rho, H) = 1/2 sum_{i != j} (p_i - p_j)^2 / (p_i + p_j) |H_ij|^2``
  ``= 1 - r^T M r`` with
  ``M_lk = sum_{i,j} 2 p_i p_j / (p_i + p_j) <i|A_l|j><j|A_k|i>``,

where ``A_i = sigma_i (x) 1``.  Minimizing over ``r`` gives the local quantum
uncertainty ``1 - max eig W`` and the local QFI ``1 - max eig M``.  The sum in
``M`` runs over all pairs, diagonal included; dropping ``i == j`` breaks the
identity ``F = 1 - r^T M r``.

:func:`brute_force_minimize` evaluates ``I`` or ``F`` directly on a dense set
of directions and serves as an independent check of the closed forms.
"""

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatchError, NotDensityMatrixError, NotPSDError
from .model import ThermalState
from .qmat import dagger, hermitian_eig, is_hermitian, matrix_sqrt_psd, pauli, unit_vector

__all__ = [
    "MeasureKind",
    "CorrelationResult",
    "validate_density_matrix",
    "local_observable",
    "skew_information",
    "qfi",
    "w_matrix",
    "m_matrix",
    "lqu",
    "lqfi",
    "bloch_directions",
    "brute_force_minimize",
]

TRACE_ATOL = 1e-10
PSD_ATOL = 1e-10
PAIR_CUTOFF = 1e-15
SYMMETRY_ATOL = 1e-12

_SIGMAS = np.stack([pauli("x"), pauli("y"), pauli("z")])


class MeasureKind(enum.Enum):
    LQU = "lqu"
    LQFI = "lqfi"


@dataclass(frozen=True)
class CorrelationResult:
    """A minimized correlation measure with its diagnostics.

    ``matrix_eigenvalues`` are the eigenvalues of W (LQU) or M (LQFI) in
    ascending order; ``optimal_direction`` is the Bloch direction of the
    minimizing local observable.
    """

    value: float
    matrix_eigenvalues: tuple
    optimal_direction: np.ndarray
    kind: MeasureKind


class _Spectral:
    """Cached spectral data of a density matrix."""

    __slots__ = ("rho", "probs", "basis", "sqrt_rho")

    def __init__(self, rho, probs, basis, sqrt_rho):
        self.rho = rho
        self.probs = probs
        self.basis = basis
        self.sqrt_rho = sqrt_rho


def validate_density_matrix(rho):
    """Return ``rho`` as a complex array or raise NotDensityMatrixError."""
    rho = np.array(rho, dtype=complex)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise NotDensityMatrixError(f"density matrix must be square, got shape {rho.shape}")
    if not np.all(np.isfinite(rho)):
        raise NotDensityMatrixError("density matrix has non-finite entries")
    if not is_hermitian(rho):
        raise NotDensityMatrixError("density matrix is not Hermitian")
    tr = np.trace(rho).real
    if abs(tr - 1.0) > TRACE_ATOL:
        raise NotDensityMatrixError(f"trace is {tr!r}, expected 1")
    return rho


def _spectral(state):
    if isinstance(state, _Spectral):
        return state
    if isinstance(state, ThermalState):
        return _Spectral(np.asarray(state.rho), np.asarray(state.probs),
                         np.asarray(state.basis), state.sqrt_rho())
    rho = validate_density_matrix(state)
    w, v = hermitian_eig(rho)
    if w[0] < -PSD_ATOL:
        raise NotDensityMatrixError(f"density matrix has negative eigenvalue {w[0]:.3e}")
    try:
        sqrt_rho = matrix_sqrt_psd(rho)
    except NotPSDError as exc:
        raise NotDensityMatrixError(str(exc)) from exc
    # Descending populations, to match ThermalState.
    return _Spectral(rho, np.clip(w[::-1], 0.0, None), v[:, ::-1], sqrt_rho)


def _local_sigmas(dim):
    if dim % 2 or dim < 2:
        raise DimensionMismatchError(f"dimension {dim} is not of the form 2 x n")
    eye = np.eye(dim // 2)
    return np.stack([np.kron(s, eye) for s in _SIGMAS])


def local_observable(r, dim=4):
    """``(sigma . r) (x) 1`` for one unit vector or a stack of shape (n, 3)."""
    r = np.asarray(r, dtype=float)
    return np.tensordot(r, _local_sigmas(dim), axes=([-1], [0]))


def _check_observable(h, dim):
    h = np.asarray(h, dtype=complex)
    if h.shape[-2:] != (dim, dim):
        raise DimensionMismatchError(f"observable shape {h.shape[-2:]} does not match state dim {dim}")
    if h.ndim == 2 and not is_hermitian(h):
        raise DimensionMismatchError("observable is not Hermitian")
    return h


def skew_information(state, h):
    """Skew information ``Tr(rho H^2) - Tr(sqrt(rho) H sqrt(rho) H)``.

    ``h`` may be a single observable or a stack of shape (n, d, d), in which
    case an array of n values is returned.
    """
    sp = _spectral(state)
    h = _check_observable(h, sp.rho.shape[0])
    sh = sp.sqrt_rho @ h
    first = np.einsum("ij,...ji->...", sp.rho, h @ h)
    second = np.einsum("...ij,...ji->...", sh, sh)
    out = np.real(first - second)
    return float(out) if out.ndim == 0 else out


def _pair_weights(probs, kernel):
    pi = probs[:, None]
    pj = probs[None, :]
    total = pi + pj
    keep = total > PAIR_CUTOFF
    return np.where(keep, kernel(pi, pj) / np.where(keep, total, 1.0), 0.0)


def qfi(state, h):
    """Quantum Fisher information of ``rho`` for the generator ``h``.

    Normalized as one quarter of the usual SLD Fisher information, so that
    for a pure state it equals the variance of ``h``.  Pairs with
    ``p_i + p_j <= 1e-15`` are dropped.  Accepts a stack of observables like
    :func:`skew_information`.
    """
    sp = _spectral(state)
    h = _check_observable(h, sp.rho.shape[0])
    hb = dagger(sp.basis) @ h @ sp.basis
    k = _pair_weights(sp.probs, lambda a, b: (a - b) ** 2)
    out = 0.5 * np.einsum("ij,...ij->...", k, np.abs(hb) ** 2)
    out = np.real(out)
    return float(out) if out.ndim == 0 else out


def _symmetrize(mat):
    sym = 0.5 * (mat + mat.T)
    residue = float(np.max(np.abs(sym.imag)))
    if residue > SYMMETRY_ATOL:
        raise ArithmeticError(f"imaginary residue {residue:.3e} after symmetrization")
    return sym.real


def w_matrix(state):
    """3x3 matrix ``Tr[sqrt(rho) A_i sqrt(rho) A_j]``."""
    sp = _spectral(state)
    a = _local_sigmas(sp.rho.shape[0])
    sa = sp.sqrt_rho @ a
    return _symmetrize(np.einsum("iab,jba->ij", sa, sa))


def m_matrix(state):
    """3x3 matrix ``sum_ij 2 p_i p_j/(p_i + p_j) <i|A_l|j><j|A_k|i>``."""
    sp = _spectral(state)
    a = _local_sigmas(sp.rho.shape[0])
    ab = dagger(sp.basis) @ a @ sp.basis
    c = _pair_weights(sp.probs, lambda x, y: 2.0 * x * y)
    return _symmetrize(np.einsum("ij,lij,kji->lk", c, ab, ab))


def _result(mat, kind):
    w, v = hermitian_eig(mat)
    direction = np.real(v[:, -1] * np.conj(v[np.argmax(np.abs(v[:, -1])), -1]))
    return CorrelationResult(
        value=1.0 - float(w[-1]),
        matrix_eigenvalues=tuple(float(x) for x in w),
        optimal_direction=unit_vector(direction),
        kind=kind,
    )


def lqu(state):
    """Local quantum uncertainty, ``1 - max eig W``.

    ``state`` is a :class:`ThermalState` or a density matrix on C^2 (x) C^n.
    """
    return _result(w_matrix(state), MeasureKind.LQU)


def lqfi(state):
    """Local quantum Fisher information, ``1 - max eig M``."""
    return _result(m_matrix(state), MeasureKind.LQFI)


_PLASTIC = 1.324717957244746


def bloch_directions(n):
    """First ``n`` points of a low-discrepancy sequence on the upper hemisphere.

    Uses the two-dimensional golden-ratio (plastic number) additive
    recurrence, mapped with the area-preserving cylinder projection.  The
    sequence is nested: ``bloch_directions(m)`` is a prefix of
    ``bloch_directions(n)`` for ``m < n``, so a finer grid never misses a
    point of a coarser one.  The lower hemisphere is redundant because both
    functionals are even in ``r``.
    """
    k = np.arange(n, dtype=float)
    u = np.mod(0.5 + k / _PLASTIC, 1.0)
    w = np.mod(0.5 + k / _PLASTIC**2, 1.0)
    z = u
    rho = np.sqrt(1.0 - z * z)
    phi = 2.0 * math.pi * w
    return np.column_stack([rho * np.cos(phi), rho * np.sin(phi), z])


def brute_force_minimize(state, kind, n_directions=10_000):
    """Minimize skew information or QFI over sampled Bloch directions.

    Returns ``(minimum, direction)``; ties go to the earliest direction.
    """
    if n_directions < 100:
        raise ValueError("n_directions must be at least 100")
    kind = MeasureKind(kind)
    sp = _spectral(state)
    dirs = bloch_directions(n_directions)
    hs = local_observable(dirs, sp.rho.shape[0])
    func = skew_information if kind is MeasureKind.LQU else qfi
    values = func(sp, hs)
    best = int(np.argmin(values))
    return float(values[best]), dirs[best]
