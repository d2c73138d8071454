import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dipolar_qc.errors import NotHermitianError, NotPSDError
from dipolar_qc.model import ModelParams, build_hamiltonian, closed_form_spectrum
from dipolar_qc.qmat import (
    bloch_observable,
    hermitian_eig,
    is_hermitian,
    kron,
    matrix_sqrt_psd,
    pauli,
    unit_vector,
)

from helpers import random_hermitian, random_unitary

I2 = np.eye(2)


def test_pauli_z_is_diagonal():
    np.testing.assert_array_equal(pauli("z"), np.diag([1, -1]))


@pytest.mark.parametrize("axis", ["x", "y", "z"])
def test_pauli_squares_to_identity_and_is_traceless(axis):
    s = pauli(axis)
    np.testing.assert_array_equal(s @ s, I2)
    assert np.trace(s) == 0
    assert is_hermitian(s)


def test_pauli_commutator():
    x, y, z = pauli("x"), pauli("y"), pauli("z")
    np.testing.assert_array_equal(x @ y - y @ x, 2j * z)


def test_pauli_rejects_unknown_axis():
    with pytest.raises(ValueError):
        pauli("w")


def test_pauli_returns_copies():
    a = pauli("x")
    a[0, 0] = 5
    assert pauli("x")[0, 0] == 0


def test_kron_identities():
    np.testing.assert_array_equal(kron(I2, I2), np.eye(4))
    np.testing.assert_array_equal(kron(pauli("z"), I2), np.diag([1, 1, -1, -1]))


def test_kron_index_convention():
    rng = np.random.default_rng(3)
    a, b = random_hermitian(rng, 2), random_hermitian(rng, 3)
    k = kron(a, b)
    for p in range(2):
        for q in range(3):
            for r in range(2):
                for s in range(3):
                    assert abs(k[3 * p + q, 3 * r + s] - a[p, r] * b[q, s]) < 1e-14


def test_kron_trace_multiplicative_and_associative():
    rng = np.random.default_rng(4)
    for _ in range(50):
        a, b, c = (random_hermitian(rng, 2) for _ in range(3))
        assert abs(np.trace(kron(a, b)) - np.trace(a) * np.trace(b)) < 1e-12
        np.testing.assert_allclose(kron(kron(a, b), c), kron(a, kron(b, c)), atol=1e-12, rtol=0)


def test_eig_diagonal_input():
    w, v = hermitian_eig(np.diag([3.0, 1.0, 2.0]))
    np.testing.assert_array_equal(w, [1, 2, 3])


def test_eig_pauli_x():
    w, v = hermitian_eig(pauli("x"))
    np.testing.assert_allclose(w, [-1, 1], atol=1e-15)
    minus = np.array([1, -1]) / np.sqrt(2)
    plus = np.array([1, 1]) / np.sqrt(2)
    assert abs(abs(np.vdot(minus, v[:, 0])) - 1) < 1e-14
    assert abs(abs(np.vdot(plus, v[:, 1])) - 1) < 1e-14


def test_eig_of_model_hamiltonian_matches_closed_form():
    p = ModelParams(delta=2, epsilon=2, dm=1)
    w, _ = hermitian_eig(build_hamiltonian(p))
    expected, _ = closed_form_spectrum(p)
    np.testing.assert_allclose(w, np.sort(expected), atol=1e-10, rtol=0)


def test_eig_random_hermitian_reconstruction():
    rng = np.random.default_rng(2024)
    for _ in range(1000):
        a = random_hermitian(rng)
        w, v = hermitian_eig(a)
        tol = 1e-10 * (1 + np.max(np.abs(a)))
        assert np.all(np.diff(w) >= 0)
        assert np.max(np.abs(a - (v * w) @ v.conj().T)) <= tol
        assert np.max(np.abs(v.conj().T @ v - np.eye(4))) <= 1e-10
        assert np.max(np.abs(a @ v - v * w)) <= tol
        assert abs(w.sum() - np.trace(a).real) <= 1e-10


def test_eig_agrees_with_lapack():
    rng = np.random.default_rng(7)
    for _ in range(100):
        a = random_hermitian(rng, scale=5.0)
        np.testing.assert_allclose(hermitian_eig(a).eigenvalues, np.linalg.eigvalsh(a),
                                   atol=1e-11, rtol=0)


def test_eig_is_deterministic():
    a = random_hermitian(np.random.default_rng(11))
    w1, v1 = hermitian_eig(a)
    w2, v2 = hermitian_eig(a)
    np.testing.assert_array_equal(w1, w2)
    np.testing.assert_array_equal(v1, v2)


def test_eig_does_not_modify_input():
    a = random_hermitian(np.random.default_rng(12))
    before = a.copy()
    hermitian_eig(a)
    np.testing.assert_array_equal(a, before)


def test_eig_degenerate_spectrum():
    rng = np.random.default_rng(13)
    u = np.kron(random_unitary(rng), random_unitary(rng))
    a = u @ np.diag([1.0, 1.0, 1.0, -2.0]) @ u.conj().T
    w, v = hermitian_eig(a)
    np.testing.assert_allclose(w, [-2, 1, 1, 1], atol=1e-12)
    np.testing.assert_allclose((v * w) @ v.conj().T, a, atol=1e-12)


def test_eig_rejects_non_hermitian():
    with pytest.raises(NotHermitianError):
        hermitian_eig(np.array([[0, 1], [0, 0]]))


def test_sqrt_of_identity_and_diagonal():
    np.testing.assert_allclose(matrix_sqrt_psd(np.eye(4)), np.eye(4), atol=1e-15)
    np.testing.assert_allclose(matrix_sqrt_psd(np.diag([4.0, 9.0, 0.0, 1.0])),
                               np.diag([2.0, 3.0, 0.0, 1.0]), atol=1e-15)


def test_sqrt_of_thermal_state_squares_back():
    from dipolar_qc.model import thermal_state

    rho = thermal_state(ModelParams(delta=2, epsilon=2, dm=0, temperature=1)).rho
    s = matrix_sqrt_psd(rho)
    assert is_hermitian(s)
    assert np.max(np.abs(s @ s - rho)) <= 1e-9 * (1 + np.max(np.abs(rho)))
    assert np.linalg.eigvalsh(s).min() >= -1e-12


def test_sqrt_clamps_tiny_negative_eigenvalue():
    a = np.diag([1.0, 0.5, 0.0, -1e-13])
    s = matrix_sqrt_psd(a)
    np.testing.assert_allclose(s, np.diag([1.0, np.sqrt(0.5), 0.0, 0.0]), atol=1e-15)


def test_sqrt_rejects_indefinite():
    with pytest.raises(NotPSDError):
        matrix_sqrt_psd(np.diag([1.0, -0.1]))


def test_sqrt_of_random_projectors_is_idempotent():
    rng = np.random.default_rng(21)
    for rank in (1, 2, 3):
        for _ in range(20):
            z = rng.normal(size=(4, rank)) + 1j * rng.normal(size=(4, rank))
            q, _ = np.linalg.qr(z)
            p = q @ q.conj().T
            np.testing.assert_allclose(matrix_sqrt_psd(p), p, atol=1e-12)


def test_sqrt_random_psd_squares_back():
    rng = np.random.default_rng(22)
    for _ in range(200):
        a = random_hermitian(rng)
        a = a @ a
        s = matrix_sqrt_psd(a)
        assert np.max(np.abs(s @ s - a)) <= 1e-9 * (1 + np.max(np.abs(a)))


@settings(max_examples=50, deadline=None)
@given(st.lists(st.floats(-10, 10, allow_nan=False), min_size=3, max_size=3)
       .filter(lambda r: np.linalg.norm(r) > 1e-3))
def test_bloch_observable_is_unit_involution(r):
    r = unit_vector(r)
    assert abs(np.linalg.norm(r) - 1) <= 1e-12
    h = bloch_observable(r)
    np.testing.assert_allclose(h @ h, I2, atol=1e-12)
