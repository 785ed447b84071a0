"""Implicit homographic (harmonic) scheme for Riccati differential equations.

The heavy lifting lives in the compiled extension ``riccati_hs._core``;
this package adds data-path resolution for the bundled reference table.
"""

from __future__ import annotations

import os

from ._core import (  # noqa: F401
    CaseSpec,
    ClosedLoopTrajectory,
    ControlPlant,
    DataFileError,
    DomainError,
    ErrorBoundConstants,
    ErrorBoundParams,
    NumericalError,
    OrderStudy,
    RiccatiProblem,
    ScalarDiagnostics,
    ScalarProblem,
    SchemeParams,
    SignSplit,
    SteadyResult,
    StepRecord,
    Trajectory,
    __version__,
    are_residual,
    contraction_defect,
    control_gram,
    dt_admissible,
    error_bound_constants,
    exact_solution,
    explicit_integrate,
    explicit_step,
    feedback_gain,
    geometric_ratio,
    harmonic_step,
    homographic_step,
    implicit_shift,
    integrate,
    is_psd,
    lyapunov_operator,
    min_eigenvalue,
    monotonicity_condition,
    order_study,
    oscillator_case,
    quadratic_cost,
    riccati_rhs,
    scalar_diagnostics,
    select_mu,
    shift_condition_holds,
    simulate_closed_loop,
    solve_linear,
    solve_lyapunov,
    solve_steady,
    square_root_case,
    sym_eigen,
    vehicle_dynamics,
    vehicles_case,
    wave_case,
)
from . import _core


def data_dir() -> str:
    """Directory holding the reference tables.

    ``$RICCATI_DATA_DIR`` wins when set; otherwise the copy shipped with
    the package is used.
    """
    env = os.environ.get("RICCATI_DATA_DIR")
    if env:
        return env
    packaged = os.path.join(os.path.dirname(__file__), "data")
    if os.path.isdir(packaged):
        return packaged
    return _core.default_data_dir()


def load_vehicle_reference(directory: str | None = None):
    return _core.load_vehicle_reference(directory if directory is not None else data_dir())


def validate_vehicle_reference(A, directory: str | None = None):
    return _core.validate_vehicle_reference(
        A, directory if directory is not None else data_dir()
    )
