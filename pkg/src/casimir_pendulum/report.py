"""Serialization of trajectories and run reports.

Floats are written with Python's shortest round-trip repr so artifacts can
feed regression tests byte-for-byte; CSV files use LF line endings on every
platform.
"""

import csv
import json
import math
from dataclasses import dataclass

from .analytic import linear_omega, linear_period
from .design import ValidityReport
from .integrator import (
    InsufficientCyclesError,
    Termination,
    Trajectory,
    energy_drift,
    estimate_period,
)
from .pendulum import PendulumParams

__all__ = [
    "TRAJECTORY_HEADER",
    "SimulationReport",
    "build_report",
    "report_to_dict",
    "dumps_report",
    "write_report_json",
    "write_trajectory_csv",
    "validity_to_dict",
    "params_to_dict",
]

TRAJECTORY_HEADER = ("t_s", "phi_rad", "phi_dot_rad_s", "R_m", "energy_J")


@dataclass(frozen=True)
class SimulationReport:
    """Summary of one simulation run.

    simulated_period and period_rel_diff are None when the trajectory holds
    too few zero crossings to measure a period (e.g. release from
    equilibrium).
    """

    analytic_omega: float
    analytic_period: float
    simulated_period: float | None
    period_rel_diff: float | None
    energy_drift: float
    validity: ValidityReport
    termination: Termination


def build_report(traj: Trajectory, validity: ValidityReport) -> SimulationReport:
    """Assemble the report for a finished run."""
    params = traj.params
    omega = linear_omega(params)
    period = linear_period(params)
    try:
        simulated = estimate_period(traj).mean_period
        rel_diff = abs(simulated - period) / period
    except InsufficientCyclesError:
        simulated = None
        rel_diff = None
    return SimulationReport(
        analytic_omega=omega,
        analytic_period=period,
        simulated_period=simulated,
        period_rel_diff=rel_diff,
        energy_drift=energy_drift(traj),
        validity=validity,
        termination=traj.termination,
    )


def validity_to_dict(validity: ValidityReport) -> dict:
    return {
        "near_zone_ok": validity.near_zone_ok,
        "near_zone_ratio": float(validity.near_zone_ratio),
        "gravity_negligible": validity.gravity_negligible,
        "gravity_ratio": float(validity.gravity_ratio),
        "geometry_ok": validity.geometry_ok,
        "small_angle_ok": validity.small_angle_ok,
        "verdict": validity.verdict,
    }


def params_to_dict(params: PendulumParams) -> dict:
    return {
        "d_m": float(params.d),
        "l_m": float(params.l),
        "mass_kg": float(params.mass),
        "alpha0_m3": float(params.atom.alpha0),
        "omega0_rad_s": float(params.atom.omega0),
        "beta": float(params.beta),
        "include_gravity": params.include_gravity,
    }


def report_to_dict(report: SimulationReport) -> dict:
    return {
        "analytic_omega_rad_s": float(report.analytic_omega),
        "analytic_period_s": float(report.analytic_period),
        "simulated_period_s": None if report.simulated_period is None
        else float(report.simulated_period),
        "period_rel_diff": None if report.period_rel_diff is None
        else float(report.period_rel_diff),
        "energy_drift": float(report.energy_drift),
        "validity": validity_to_dict(report.validity),
        "termination": report.termination.value,
    }


def dumps_report(report: SimulationReport) -> str:
    return json.dumps(report_to_dict(report), indent=2) + "\n"


def write_report_json(report: SimulationReport, path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(dumps_report(report))


def _fmt(x: float) -> str:
    # repr() of a finite float is its shortest round-trip form
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"refusing to serialize non-finite value {x!r}")
    return repr(x)


def write_trajectory_csv(traj: Trajectory, path: str) -> None:
    """Write the sample columns as CSV with a fixed header and LF endings."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(TRAJECTORY_HEADER)
        for row in zip(traj.t, traj.phi, traj.phi_dot, traj.r, traj.energy):
            writer.writerow([_fmt(x) for x in row])
