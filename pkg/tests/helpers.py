"""Shared test utilities and independent oracles."""

import numpy as np


def random_hermitian(rng, n=4, scale=1.0):
    a = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return scale * (a + a.conj().T) / 2


def random_unitary(rng, n=2):
    z = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_unit(rng):
    r = rng.normal(size=3)
    return r / np.linalg.norm(r)


def ket(*amps):
    v = np.array(amps, dtype=complex)
    return v / np.linalg.norm(v)


def projector(v):
    return np.outer(v, v.conj())


def bures_qfi(sqrt_rho, h, theta=1e-4):
    """QFI (variance normalization) from the Bures fidelity of rho and e^{i h theta} rho e^{-i h theta}.

    Uses h^2 = 1 so the rotation is cos(theta) + i sin(theta) h.  The root
    fidelity is the trace norm of sqrt(rho) U sqrt(rho), computed with
    LAPACK's SVD so nothing here shares code with the spectral formula.
    """
    u = np.cos(theta) * np.eye(h.shape[0]) + 1j * np.sin(theta) * h
    root_fidelity = np.linalg.svd(sqrt_rho @ u @ sqrt_rho, compute_uv=False).sum()
    return 2.0 * (1.0 - root_fidelity) / theta**2
