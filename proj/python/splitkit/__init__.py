"""Splitting time-integrator toolkit.

Python surface over the C++ core: amplification-factor analysis, the
manufactured-heat / traveling-wave / Schnakenberg convergence studies, and
the hexagon mesh with its partition-of-unity splitting.
"""

from ._core import (
    ConvergenceRecord,
    MeshHex,
    advdiff_eigenvalues,
    convergence_csv,
    heat_mms,
    in_wedge,
    mesh_text,
    pou_psi,
    pou_weight,
    run_heat_table,
    run_schnak_snapshot,
    run_schnak_study,
    run_wave_study,
    sample_wedge_max,
    scan_stability_region,
    schnakenberg_reaction,
    schnakenberg_steady,
    stability_r,
    stability_r_star,
    traveling_wave_exact,
    triangulate_hexagon,
    upwind_equivalent_split,
)

__all__ = [
    "ConvergenceRecord",
    "MeshHex",
    "advdiff_eigenvalues",
    "convergence_csv",
    "heat_mms",
    "in_wedge",
    "mesh_text",
    "pou_psi",
    "pou_weight",
    "run_heat_table",
    "run_schnak_snapshot",
    "run_schnak_study",
    "run_wave_study",
    "sample_wedge_max",
    "scan_stability_region",
    "schnakenberg_reaction",
    "schnakenberg_steady",
    "stability_r",
    "stability_r_star",
    "traveling_wave_exact",
    "triangulate_hexagon",
    "upwind_equivalent_split",
]

__version__ = "0.1.0"
