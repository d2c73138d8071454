"""Two spin-1/2 particles with dipolar and z-axis Dzyaloshinsky-Moriya coupling.

The Hamiltonian is

    H = -(1/3) S1 . diag(delta - 3 eps, delta + 3 eps, -2 delta) . S2
        + dm (S1 x S2)_z,      S = sigma / 2,

written in the basis |00>, |01>, |10>, |11> with |0> the sigma_z = +1 state.
Energies and temperature share one unit with k_B = 1.

Two independent routes to the thermal state are provided: the closed-form
X-shaped Gibbs matrix and a numerical ``exp(-beta H) / Z`` built from the
Jacobi eigendecomposition of ``H``.  :func:`thermal_state` builds both and
refuses to return if they disagree.

Note on the middle-block energies: expanding the Hamiltonian gives
``(-delta +/- eta) / 6`` with ``eta = sqrt(9 dm^2 + delta^2)``.  This is the
sign that makes the Gibbs weights ``exp(+beta delta / 6) cosh(beta eta / 6)``
come out right; a form with ``+delta`` is inconsistent with them.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import BoltzmannOverflowError, GibbsMismatchError, InvalidTemperatureError
from .qmat import dagger, hermitian_eig, kron, pauli

__all__ = [
    "MIN_TEMPERATURE",
    "ModelParams",
    "ThermalState",
    "build_hamiltonian",
    "build_hamiltonian_from_spins",
    "closed_form_spectrum",
    "eta",
    "partition_function",
    "closed_form_gibbs",
    "numeric_gibbs",
    "thermal_state",
]

MIN_TEMPERATURE = 1e-3
EXP_LIMIT = 700.0
GIBBS_ATOL = 1e-10


@dataclass(frozen=True)
class ModelParams:
    """Couplings and temperature of the dipolar + DM spin pair.

    ``temperature`` is only used by the thermal functions; it defaults to 1
    so a Hamiltonian can be built without choosing one.
    """

    delta: float = 0.0
    epsilon: float = 0.0
    dm: float = 0.0
    temperature: float = 1.0

    def __post_init__(self):
        for name in ("delta", "epsilon", "dm", "temperature"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise ValueError(f"{name} must be finite, got {value}")
            object.__setattr__(self, name, value)
        if self.temperature < MIN_TEMPERATURE:
            raise InvalidTemperatureError(
                f"temperature {self.temperature} is below the floor {MIN_TEMPERATURE}"
            )

    @property
    def beta(self):
        return 1.0 / self.temperature

    def replace(self, **changes):
        fields = dict(
            delta=self.delta, epsilon=self.epsilon, dm=self.dm, temperature=self.temperature
        )
        fields.update(changes)
        return ModelParams(**fields)


@dataclass(frozen=True, eq=False)
class ThermalState:
    """Gibbs state with its spectral decomposition.

    ``probs`` are sorted in descending order and ``basis[:, k]`` is the
    eigenvector carrying ``probs[k]``.  The basis comes from diagonalizing
    the Hamiltonian, so states sharing an energy level share a weight and the
    choice inside a degenerate level is irrelevant to everything downstream.
    """

    rho: np.ndarray
    probs: np.ndarray
    basis: np.ndarray
    params: ModelParams
    partition: float

    def __post_init__(self):
        for name in ("rho", "probs", "basis"):
            arr = np.array(getattr(self, name))
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)

    def sqrt_rho(self):
        """Square root of ``rho`` assembled from the exact spectral weights."""
        s = (self.basis * np.sqrt(self.probs)) @ dagger(self.basis)
        return 0.5 * (s + dagger(s))


def eta(p):
    return math.sqrt(9.0 * p.dm**2 + p.delta**2)


def build_hamiltonian(p):
    """Hamiltonian matrix from the explicit closed-form entries."""
    d6 = p.delta / 6.0
    e2 = p.epsilon / 2.0
    flip = -d6 + 0.5j * p.dm
    return np.array(
        [
            [d6, 0, 0, e2],
            [0, -d6, flip, 0],
            [0, np.conj(flip), -d6, 0],
            [e2, 0, 0, d6],
        ],
        dtype=complex,
    )


def build_hamiltonian_from_spins(p):
    """Same Hamiltonian assembled from spin operators, as an independent check."""
    s = [0.5 * pauli(a) for a in ("x", "y", "z")]
    tensor = (p.delta - 3 * p.epsilon, p.delta + 3 * p.epsilon, -2 * p.delta)
    h = sum(-tensor[k] / 3.0 * kron(s[k], s[k]) for k in range(3))
    cross_z = kron(s[0], s[1]) - kron(s[1], s[0])
    return h + p.dm * cross_z


def closed_form_spectrum(p):
    """Energies and eigenvectors from the analytic block structure.

    Returns
    -------
    energies : ndarray, shape (4,)
        ``((delta + 3 eps)/6, (-delta + eta)/6, (-delta - eta)/6, (delta - 3 eps)/6)``.
    vectors : ndarray, shape (4, 4)
        Column ``k`` belongs to ``energies[k]``.  The outer pair is
        ``(|11> +/- |00>)/sqrt(2)``; the middle pair is
        ``(|01> +/- e^{-i phi}|10>)/sqrt(2)`` where ``phi`` is the phase of the
        flip-flop element ``-delta/6 + i dm/2``.
    """
    et = eta(p)
    energies = np.array(
        [
            (p.delta + 3 * p.epsilon) / 6.0,
            (-p.delta + et) / 6.0,
            (-p.delta - et) / 6.0,
            (p.delta - 3 * p.epsilon) / 6.0,
        ]
    )
    flip = -p.delta / 6.0 + 0.5j * p.dm
    phase = np.exp(-1j * np.angle(flip))
    r = 1.0 / math.sqrt(2.0)
    vectors = np.zeros((4, 4), dtype=complex)
    vectors[[3, 0], 0] = r, r
    vectors[[1, 2], 1] = r, r * phase
    vectors[[1, 2], 2] = r, -r * phase
    vectors[[3, 0], 3] = r, -r
    return energies, vectors


def _check_exponents(p):
    b = p.beta
    for label, x in (
        ("beta*delta/6", b * p.delta / 6.0),
        ("beta*epsilon/2", b * p.epsilon / 2.0),
        ("beta*eta/6", b * eta(p) / 6.0),
    ):
        if abs(x) > EXP_LIMIT:
            raise BoltzmannOverflowError(f"{label} = {x:.6g} exceeds {EXP_LIMIT}")


def _gibbs_elements(p):
    _check_exponents(p)
    b = p.beta
    et = eta(p)
    lo = math.exp(-b * p.delta / 6.0)
    hi = math.exp(b * p.delta / 6.0)
    return (
        lo * math.cosh(b * p.epsilon / 2.0),
        -lo * math.sinh(b * p.epsilon / 2.0),
        hi * math.cosh(b * et / 6.0),
        -hi * math.sinh(b * et / 6.0),
    )


def partition_function(p):
    """Z = 2 e^{-b delta/6} cosh(b eps/2) + 2 e^{b delta/6} cosh(b eta/6)."""
    r11, _, r22, _ = _gibbs_elements(p)
    return 2.0 * r11 + 2.0 * r22


def closed_form_gibbs(p):
    """The X-shaped thermal matrix and partition function.

    The (|01>, |10>) coherence carries the phase of the flip-flop element of
    ``H``; it is real only when ``dm == 0``.
    """
    r11, r14, r22, r23 = _gibbs_elements(p)
    z = 2.0 * r11 + 2.0 * r22
    flip = -p.delta / 6.0 + 0.5j * p.dm
    phase = np.exp(1j * np.angle(flip))
    rho = np.array(
        [
            [r11, 0, 0, r14],
            [0, r22, r23 * phase, 0],
            [0, r23 * np.conj(phase), r22, 0],
            [r14, 0, 0, r11],
        ],
        dtype=complex,
    )
    return rho / z, z


def numeric_gibbs(p, hamiltonian=None):
    """exp(-beta H)/Z from the Jacobi eigendecomposition of ``H``.

    Returns ``(rho, energies, vectors, weights)`` with ``energies`` ascending
    and ``weights = exp(-beta E)/Z`` computed with a ground-state shift.
    """
    h = build_hamiltonian(p) if hamiltonian is None else hamiltonian
    energies, vectors = hermitian_eig(h)
    boltz = np.exp(-p.beta * (energies - energies[0]))
    weights = boltz / boltz.sum()
    rho = (vectors * weights) @ dagger(vectors)
    return 0.5 * (rho + dagger(rho)), energies, vectors, weights


def thermal_state(p):
    """Build the Gibbs state of ``p`` and cross-check the two constructions.

    ``rho`` is the closed-form matrix.  The spectral weights are the
    closed-form populations ``(r11 +/- r14)/Z`` and ``(r22 +/- r23)/Z``,
    evaluated as ``exp(-beta E_k)/Z`` (the same numbers, without the
    cosh - sinh cancellation), and paired with the numerical eigenvectors of
    ``H``.

    Raises
    ------
    BoltzmannOverflowError
        If a Boltzmann exponent exceeds 700.
    GibbsMismatchError
        If the closed-form and numerical states differ by more than 1e-10
        in any entry, or the closed-form populations disagree with the
        numerical Boltzmann weights.
    """
    if p.temperature < MIN_TEMPERATURE:
        raise InvalidTemperatureError(f"temperature {p.temperature} below {MIN_TEMPERATURE}")
    rho, z = closed_form_gibbs(p)
    rho_num, energies, vectors, weights = numeric_gibbs(p)

    gap = float(np.max(np.abs(rho - rho_num)))
    if gap > GIBBS_ATOL:
        raise GibbsMismatchError(f"closed-form and numeric Gibbs states differ by {gap:.3e}")

    r11, r14, r22, r23 = _gibbs_elements(p)
    populations = np.sort(np.array([r11 + r14, r11 - r14, r22 + abs(r23), r22 - abs(r23)]) / z)
    if np.max(np.abs(populations[::-1] - weights)) > GIBBS_ATOL:
        raise GibbsMismatchError("closed-form populations disagree with numeric weights")

    # Ascending energies are descending populations.
    return ThermalState(rho=rho, probs=weights, basis=vectors, params=p, partition=z)
