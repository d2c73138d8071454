"""Command line entry point: ``dipolar-qc sweep ...``.

Settings are layered: preset, then ``--config`` file, then flags.  Exit
codes are 0 on success, 1 on usage errors and 2 when the computation or
file output fails.
"""

import argparse
import sys
from dataclasses import dataclass
from typing import Optional

from .errors import DipolarQCError
from .output import emit_plot, write_csv
from .sweep import AXES, MEASURES, PRESETS, SweepSpec, run_sweep

__all__ = ["UsageError", "SweepJob", "parse_cli", "read_config", "main"]

# CLI key -> SweepSpec.fixed / ModelParams field
_FIXED_KEYS = {"delta": "delta", "epsilon": "epsilon", "dm": "dm", "temp": "temperature"}
_AXIS_FLAG = {"epsilon": "epsilon", "delta": "delta", "dm": "dm", "temperature": "temp"}
_KEYS = ("axis", "min", "max", "steps", "delta", "epsilon", "dm", "temp", "measures",
         "out", "plot", "oracle-check", "preset", "workers")
_AXIS_LABELS = {"epsilon": "epsilon", "delta": "Delta", "dm": "D (DM strength)",
                "temperature": "T"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass(frozen=True)
class SweepJob:
    spec: SweepSpec
    out: str
    plot: Optional[str] = None
    workers: Optional[int] = None


def _build_parser():
    parser = _Parser(prog="dipolar-qc",
                     description="Thermal LQU / LQFI sweeps for a dipolar spin pair with DM coupling.")
    sub = parser.add_subparsers(dest="command", required=True)
    sw = sub.add_parser("sweep", help="sweep one parameter and write CSV (and optionally SVG)")
    sw.add_argument("--axis", choices=sorted(AXES))
    sw.add_argument("--min")
    sw.add_argument("--max")
    sw.add_argument("--steps")
    for key in _FIXED_KEYS:
        sw.add_argument(f"--{key}")
    sw.add_argument("--measures", help="comma separated subset of lqu,lqfi")
    sw.add_argument("--out")
    sw.add_argument("--plot")
    sw.add_argument("--oracle-check", dest="oracle_check", action="store_const", const="true")
    sw.add_argument("--preset", choices=sorted(PRESETS))
    sw.add_argument("--config")
    sw.add_argument("--workers")
    return parser


def read_config(path):
    """Parse a ``key = value`` file; keys are flag names without dashes."""
    settings = {}
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from exc
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{lineno}: expected 'key = value'")
        key, value = (part.strip() for part in line.split("=", 1))
        key = key.lstrip("-").replace("_", "-")
        if key not in _KEYS:
            raise UsageError(f"{path}:{lineno}: unknown key {key!r}")
        settings[key] = value
    return settings


def _number(settings, key, kind=float):
    text = settings[key]
    try:
        return kind(text)
    except ValueError:
        raise UsageError(f"--{key} expects a number, got {text!r}") from None


def _truthy(text):
    value = text.strip().lower()
    if value in ("1", "true", "yes", "on"):
        return True
    if value in ("0", "false", "no", "off"):
        return False
    raise UsageError(f"--oracle-check expects true/false, got {text!r}")


def parse_cli(argv):
    """Turn ``argv`` (without the program name) into a :class:`SweepJob`."""
    args = _build_parser().parse_args(argv)

    user = {}
    if args.config:
        user.update(read_config(args.config))
    flags = {k: v for k, v in vars(args).items() if v is not None and k not in ("command", "config")}
    user.update({k.replace("_", "-"): v for k, v in flags.items()})

    settings = {}
    preset_name = user.get("preset")
    if preset_name:
        if preset_name not in PRESETS:
            raise UsageError(f"unknown preset {preset_name!r}")
        spec = PRESETS[preset_name].spec
        settings.update(axis=spec.axis, min=repr(spec.minimum), max=repr(spec.maximum),
                        steps=str(spec.steps), measures=",".join(spec.measures))
        for key, field in _FIXED_KEYS.items():
            if field in spec.fixed:
                settings[key] = repr(spec.fixed[field])
    settings.update(user)

    for key in ("axis", "min", "max", "out"):
        if key not in settings:
            raise UsageError(f"missing required flag --{key}")
    axis = settings["axis"]
    if axis not in AXES:
        raise UsageError(f"unknown axis {axis!r}")
    axis_flag = _AXIS_FLAG[axis]
    if axis_flag in user:
        raise UsageError(f"--{axis_flag} conflicts with --axis {axis}: the axis value comes from the range")
    settings.pop(axis_flag, None)

    fixed = {}
    for key, field in _FIXED_KEYS.items():
        if key == axis_flag:
            continue
        if key not in settings:
            raise UsageError(f"missing required flag --{key}")
        fixed[field] = _number(settings, key)

    measures = tuple(m.strip() for m in settings.get("measures", ",".join(MEASURES)).split(",") if m.strip())
    workers = _number(settings, "workers", int) if "workers" in settings else None
    try:
        spec = SweepSpec(
            axis=axis,
            minimum=_number(settings, "min"),
            maximum=_number(settings, "max"),
            steps=_number(settings, "steps", int) if "steps" in settings else 201,
            fixed=fixed,
            measures=measures,
            oracle_check=_truthy(settings.get("oracle-check", "false")),
        )
    except (ValueError, DipolarQCError) as exc:
        raise UsageError(str(exc)) from exc
    return SweepJob(spec=spec, out=settings["out"], plot=settings.get("plot"), workers=workers)


def main(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        job = parse_cli(argv)
    except UsageError as exc:
        print(f"dipolar-qc: usage error: {exc}", file=sys.stderr)
        return 1
    try:
        rows = run_sweep(job.spec, workers=job.workers)
        write_csv(rows, job.out)
        if job.plot:
            emit_plot(rows, job.plot, x_label=_AXIS_LABELS[job.spec.axis])
    except (DipolarQCError, OSError) as exc:
        print(f"dipolar-qc: error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
