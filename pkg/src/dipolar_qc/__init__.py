"""Thermal quantum correlations (LQU and local QFI) of a dipolar spin pair
with Dzyaloshinsky-Moriya coupling."""

from .correlations import (
    CorrelationResult,
    MeasureKind,
    brute_force_minimize,
    local_observable,
    lqfi,
    lqu,
    qfi,
    skew_information,
)
from .errors import DipolarQCError
from .model import (
    ModelParams,
    ThermalState,
    build_hamiltonian,
    closed_form_spectrum,
    partition_function,
    thermal_state,
)
from .output import emit_plot, write_csv
from .qmat import hermitian_eig, kron, matrix_sqrt_psd, pauli
from .sweep import PRESETS, SweepRow, SweepSpec, run_sweep

__version__ = "0.1.0"
