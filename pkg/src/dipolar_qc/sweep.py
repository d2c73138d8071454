"""One-dimensional parameter sweeps of LQU and LQFI over the thermal state."""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from .correlations import brute_force_minimize, lqfi, lqu
from .errors import DipolarQCError, OracleMismatchError, SweepError
from .model import MIN_TEMPERATURE, ModelParams, thermal_state

__all__ = [
    "AXES",
    "MEASURES",
    "SweepSpec",
    "SweepRow",
    "Preset",
    "PRESETS",
    "run_sweep",
]

# axis name -> ModelParams field
AXES = {"epsilon": "epsilon", "delta": "delta", "dm": "dm", "temperature": "temperature"}
MEASURES = ("lqu", "lqfi")

ORACLE_EVERY = 10
ORACLE_DIRECTIONS = 10_000
ORACLE_ATOL = 2e-3
ORACLE_SLACK = 1e-10


@dataclass(frozen=True)
class SweepSpec:
    """A sweep of one model parameter with the other three held fixed.

    ``fixed`` maps the three non-axis ``ModelParams`` field names to values.
    """

    axis: str
    minimum: float
    maximum: float
    steps: int = 201
    fixed: dict = field(default_factory=dict)
    measures: tuple = MEASURES
    oracle_check: bool = False

    def __post_init__(self):
        if self.axis not in AXES:
            raise ValueError(f"unknown axis {self.axis!r}; choose from {sorted(AXES)}")
        if not (math.isfinite(self.minimum) and math.isfinite(self.maximum)):
            raise ValueError("range bounds must be finite")
        if not self.minimum < self.maximum:
            raise ValueError(f"min ({self.minimum}) must be below max ({self.maximum})")
        if int(self.steps) != self.steps or self.steps < 2:
            raise ValueError(f"steps must be an integer >= 2, got {self.steps}")
        if self.axis == "temperature" and self.minimum < MIN_TEMPERATURE:
            raise ValueError(f"temperature sweep must start at or above {MIN_TEMPERATURE}")
        measures = tuple(self.measures)
        if not measures:
            raise ValueError("at least one measure is required")
        unknown = set(measures) - set(MEASURES)
        if unknown:
            raise ValueError(f"unknown measures {sorted(unknown)}")
        object.__setattr__(self, "measures", tuple(m for m in MEASURES if m in measures))
        needed = set(AXES.values()) - {AXES[self.axis]}
        fixed = dict(self.fixed)
        if set(fixed) != needed:
            raise ValueError(f"fixed values must be given for exactly {sorted(needed)}")
        object.__setattr__(self, "fixed", {k: float(v) for k, v in sorted(fixed.items())})
        # Surfaces bad fixed values (e.g. temperature below the floor) early.
        self.params_at(self.minimum)

    def xs(self):
        n = int(self.steps)
        span = self.maximum - self.minimum
        return [self.minimum + k * span / (n - 1) for k in range(n)]

    def params_at(self, x):
        return ModelParams(**{AXES[self.axis]: x}, **self.fixed)


@dataclass(frozen=True)
class SweepRow:
    x: float
    lqu: Optional[float]
    lqfi: Optional[float]
    partition: float


def _oracle_check(state, name, value, x):
    oracle, _ = brute_force_minimize(state, name, ORACLE_DIRECTIONS)
    if abs(value - oracle) > ORACLE_ATOL or value > oracle + ORACLE_SLACK:
        raise OracleMismatchError(
            f"{name} at x={x!r}: closed form {value!r} vs brute force {oracle!r} "
            f"({ORACLE_DIRECTIONS} directions, params {state.params})"
        )


def _evaluate(spec, k, x):
    try:
        state = thermal_state(spec.params_at(x))
        values = {}
        if "lqu" in spec.measures:
            values["lqu"] = lqu(state).value
        if "lqfi" in spec.measures:
            values["lqfi"] = lqfi(state).value
        if spec.oracle_check and k % ORACLE_EVERY == 0:
            for name, value in values.items():
                _oracle_check(state, name, value, x)
    except DipolarQCError as exc:
        raise SweepError(f"{spec.axis}={x!r}: {exc}", x=x) from exc
    return SweepRow(x=x, lqu=values.get("lqu"), lqfi=values.get("lqfi"),
                    partition=state.partition)


def run_sweep(spec, workers=None):
    """Evaluate every grid point of ``spec``, in ascending ``x``.

    With ``workers > 1`` rows are computed on a thread pool; each row is a
    pure function of its grid point, so the result is identical to the serial
    run.
    """
    points = list(enumerate(spec.xs()))
    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(lambda kx: _evaluate(spec, *kx), points))
    return [_evaluate(spec, k, x) for k, x in points]


@dataclass(frozen=True)
class Preset:
    """A representative sweep plus the curve family drawn in the matching figure.

    ``family`` holds overrides of the fixed values, one per curve.
    Parameters the source figures leave unstated are conventions chosen here.
    """

    spec: SweepSpec
    family: tuple
    description: str

    def family_specs(self):
        out = []
        for override in self.family:
            fixed = dict(self.spec.fixed)
            fixed.update(override)
            out.append(SweepSpec(self.spec.axis, self.spec.minimum, self.spec.maximum,
                                 self.spec.steps, fixed, self.spec.measures))
        return out


PRESETS = {
    "fig1": Preset(
        SweepSpec("epsilon", -10.0, 10.0, 401, {"delta": 1.0, "dm": 0.0, "temperature": 0.1}),
        tuple({"temperature": t} for t in (0.1, 0.5, 1.0, 2.0)),
        "LQU and LQFI versus epsilon, no DM; delta = 1 is a convention",
    ),
    "fig2": Preset(
        SweepSpec("delta", -10.0, 10.0, 401, {"epsilon": 2.0, "dm": 0.0, "temperature": 0.1}),
        tuple({"temperature": t} for t in (0.1, 0.5, 1.0, 2.0)),
        "LQU and LQFI versus delta at epsilon = 2, no DM",
    ),
    "fig3": Preset(
        SweepSpec("temperature", 0.01, 5.0, 250, {"delta": 2.0, "epsilon": 2.0, "dm": 0.0}),
        tuple({"delta": c, "epsilon": c} for c in (1.0, 2.0, 3.0)),
        "temperature dependence for several (delta, epsilon), no DM; "
        "the (1,1), (2,2), (3,3) family is a convention",
    ),
    "fig4": Preset(
        SweepSpec("temperature", 0.01, 5.0, 250, {"delta": 2.0, "epsilon": 2.0, "dm": 1.0}),
        tuple({"dm": d} for d in (0.0, 1.0, 2.0, 4.0)),
        "temperature dependence for several DM strengths at delta = epsilon = 2; "
        "the DM values are a convention",
    ),
    "fig5": Preset(
        SweepSpec("dm", 0.0, 8.0, 161, {"delta": 2.0, "epsilon": 2.0, "temperature": 0.5}),
        tuple({"temperature": t} for t in (0.5, 1.0, 2.0)),
        "LQU and LQFI versus DM strength up to 8 at delta = epsilon = 2",
    ),
}
