"""Faddeev-Hopf lattice lab on the flat 3-torus.

Fields are float64 arrays of shape (n, n, n, 3) for sphere-valued maps and
(n, n, n, 4) for unit quaternions (w, x, y, z), indexed [z, y, x, component].
"""

from ._core import (
    FaddeevError,
    conjugate,
    degree,
    energy,
    fix_gauge,
    fluxes,
    generate,
    homotopy_record,
    hopf_charge,
    load,
    minimize,
    save,
)

__all__ = [
    "FaddeevError",
    "conjugate",
    "degree",
    "energy",
    "fix_gauge",
    "fluxes",
    "generate",
    "homotopy_record",
    "hopf_charge",
    "load",
    "minimize",
    "save",
]
