"""PPT entanglement detection and logarithmic negativity for two modes.

Partial transposition acts on the CM as conjugation by I (+) Z.  For
two-mode states the smallest symplectic eigenvalue of the transposed CM
below 1 is necessary and sufficient for entanglement.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import BadVariance, NotASpatialState
from .linalg import I2, PSD_TOL, Z, direct_sum, symplectic_eigs_4x4
from .states import SpaceTimeCM, is_physical_spatial

_PT = direct_sum(I2, Z)


@dataclass
class SymplecticSpectrum:
    nu_minus: float
    nu_plus: float


def partial_transpose(cm: SpaceTimeCM) -> np.ndarray:
    """Conjugate the assembled 4x4 by I (+) Z (flip mode-B momentum)."""
    return _PT @ cm.matrix() @ _PT


def symplectic_min(v: np.ndarray) -> SymplecticSpectrum:
    """Both symplectic eigenvalues of a 4x4 via the Delta formula."""
    lo, hi = symplectic_eigs_4x4(np.asarray(v, dtype=float))
    return SymplecticSpectrum(nu_minus=lo, nu_plus=hi)


def ppt_nu_minus(cm: SpaceTimeCM) -> float:
    """Smallest symplectic eigenvalue of the partially transposed CM."""
    return symplectic_min(partial_transpose(cm)).nu_minus


def _require_spatial(cm: SpaceTimeCM) -> None:
    if not is_physical_spatial(cm):
        raise NotASpatialState("entanglement is undefined for aspatial correlations")


def is_entangled(cm: SpaceTimeCM, tol: float = PSD_TOL) -> bool:
    """PPT criterion: nu_minus of the partial transpose below 1."""
    _require_spatial(cm)
    return ppt_nu_minus(cm) < 1.0 - tol


def log_negativity(cm: SpaceTimeCM) -> float:
    """max(0, -ln nu_minus~), natural logarithm."""
    _require_spatial(cm)
    return max(0.0, -math.log(ppt_nu_minus(cm)))


def example1_thresholds(v: float) -> tuple[float, float]:
    """Entanglement and atemporality thresholds of the squeezed-thermal family.

    r_ent = ln(v)/2; r_atemp = arccosh((v + sqrt(v^2 + 8))/4)/2.  The
    atemporality condition solves cosh(2r) = (v + sqrt(v^2 + 8))/4, so the
    inverse hyperbolic cosine is the correct inverse here.
    """
    if v < 1.0:
        raise BadVariance(f"thermal variance {v} < 1")
    r_ent = 0.5 * math.log(v)
    r_atemp = 0.5 * math.acosh((v + math.sqrt(v * v + 8.0)) / 4.0)
    return r_ent, r_atemp


def max_temporal_negativity(tol: float = 1e-8) -> tuple[float, float]:
    """Maximize g(r) = 2r - ln(cosh 4r / cosh 2r) over r in [0, 1].

    g(r) bounds the logarithmic negativity attainable by squeezed-thermal
    states with zero atemporality robustness.  Golden-section search.
    Returns (max value, argmax).
    """

    def g(r: float) -> float:
        return 2.0 * r - math.log(math.cosh(4.0 * r) / math.cosh(2.0 * r))

    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = 0.0, 1.0
    c = b - invphi * (b - a)
    d = a + invphi * (b - a)
    fc, fd = g(c), g(d)
    while b - a > tol:
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - invphi * (b - a)
            fc = g(c)
        else:
            a, c, fc = c, d, fd
            d = a + invphi * (b - a)
            fd = g(d)
    r_star = 0.5 * (a + b)
    return g(r_star), r_star
