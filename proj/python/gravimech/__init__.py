"""Pulsed cavity-optomechanics predictions: QM vs SN vs CWL dynamics.

Thin re-export of the compiled ``_gravimech`` extension. The extension is
built by the top-level CMake project; put its build directory on
``PYTHONPATH`` (the ``python_smoke`` ctest target does this automatically).
"""

from _gravimech import (  # noqa: F401
    compare_json,
    cwl_pulse_prob,
    feasibility,
    material_scales,
    sn_pulse_prob,
    sn_steady,
    sn_trajectory,
    sweep_json,
    thermal_p0,
)

__all__ = [
    "compare_json",
    "cwl_pulse_prob",
    "feasibility",
    "material_scales",
    "sn_pulse_prob",
    "sn_steady",
    "sn_trajectory",
    "sweep_json",
    "thermal_p0",
]
