"""Two-mode space-time covariance matrices and named state families.

A space-time CM records local blocks V_A, V_B plus the cross-correlation
block C.  The assembled 4x4 matrix need not be a valid bipartite state CM:
temporally generated correlations are allowed to break global positivity,
only the local blocks must obey the uncertainty relation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import BadTransmissivity, BadVariance, LocalUncertaintyViolation
from .linalg import (
    I2,
    OMEGA2,
    PSD_TOL,
    apply_symplectic,
    beam_splitter,
    det2,
    direct_sum,
    psd_sym2,
    rotation,
    symmetrize,
)

Z = np.diag([1.0, -1.0])


@dataclass
class SpaceTimeCM:
    """Block form {V_A, V_B, C} with an optional mean vector."""

    V_A: np.ndarray
    V_B: np.ndarray
    C: np.ndarray
    mean: np.ndarray = field(default_factory=lambda: np.zeros(4))

    def matrix(self) -> np.ndarray:
        """Assembled 4x4 matrix; block (2,1) is exactly C^T."""
        return np.block([[self.V_A, self.C], [self.C.T, self.V_B]])

    def swap(self) -> "SpaceTimeCM":
        """Exchange the roles of A and B."""
        return SpaceTimeCM(
            self.V_B.copy(),
            self.V_A.copy(),
            self.C.T.copy(),
            np.concatenate([self.mean[2:], self.mean[:2]]),
        )

    def to_json_dict(self) -> dict:
        return {
            "V_A": self.V_A.tolist(),
            "V_B": self.V_B.tolist(),
            "C": self.C.tolist(),
            "mean": self.mean.tolist(),
        }


@dataclass
class StandardFormRecord:
    """Local rotations and subtracted means used to reach standard form."""

    theta_A: float
    theta_B: float
    subtracted_mean: np.ndarray


def _check_local(v: np.ndarray, label: str, tol: float) -> None:
    if not psd_sym2(v, tol):
        raise LocalUncertaintyViolation(f"V_{label} is not positive semidefinite")
    if det2(v) < 1.0 - tol:
        raise LocalUncertaintyViolation(
            f"det V_{label} = {det2(v):g} < 1 violates the uncertainty relation"
        )


def assemble(
    V_A: np.ndarray,
    V_B: np.ndarray,
    C: np.ndarray,
    mean: np.ndarray | None = None,
    tol: float = PSD_TOL,
) -> SpaceTimeCM:
    """Build a space-time CM, validating only local physicality."""
    V_A = symmetrize(np.asarray(V_A, dtype=float))
    V_B = symmetrize(np.asarray(V_B, dtype=float))
    C = np.asarray(C, dtype=float).copy()
    _check_local(V_A, "A", tol)
    _check_local(V_B, "B", tol)
    m = np.zeros(4) if mean is None else np.asarray(mean, dtype=float).copy()
    return SpaceTimeCM(V_A, V_B, C, m)


def from_json_dict(d: dict, tol: float = PSD_TOL) -> SpaceTimeCM:
    """Validate and build a CM from the JSON state descriptor."""
    for key in ("V_A", "V_B", "C"):
        if key not in d:
            raise ValueError(f"state descriptor missing key {key!r}")
        block = np.asarray(d[key], dtype=float)
        if block.shape != (2, 2):
            raise ValueError(f"{key} must be a 2x2 matrix")
    mean = d.get("mean")
    if mean is not None and np.asarray(mean, dtype=float).shape != (4,):
        raise ValueError("mean must have 4 entries")
    return assemble(d["V_A"], d["V_B"], d["C"], mean, tol)


def _standard_angle(v: np.ndarray) -> float:
    """Rotation angle in [-pi/2, pi/2) diagonalizing a local block, q >= p."""
    if abs(v[0, 1]) < 1e-12 and v[0, 0] >= v[1, 1]:
        return 0.0
    phi = 0.5 * math.atan2(2.0 * v[0, 1], v[0, 0] - v[1, 1])
    theta = -phi
    if theta >= math.pi / 2:
        theta -= math.pi
    elif theta < -math.pi / 2:
        theta += math.pi
    return theta


def to_standard_form(cm: SpaceTimeCM) -> tuple[SpaceTimeCM, StandardFormRecord]:
    """Zero the means and rotate each mode so local blocks are diagonal.

    Diagonals come out sorted descending (q-variance >= p-variance); the
    cross block transforms as R(theta_A) C R(theta_B)^T.
    """
    theta_a = _standard_angle(cm.V_A)
    theta_b = _standard_angle(cm.V_B)
    ra = rotation(theta_a)
    rb = rotation(theta_b)
    va = symmetrize(ra @ cm.V_A @ ra.T)
    vb = symmetrize(rb @ cm.V_B @ rb.T)
    # rotated off-diagonals are pure round-off; pin them to zero
    va[0, 1] = va[1, 0] = 0.0
    vb[0, 1] = vb[1, 0] = 0.0
    c = ra @ cm.C @ rb.T
    record = StandardFormRecord(theta_a, theta_b, cm.mean.copy())
    return SpaceTimeCM(va, vb, c, np.zeros(4)), record


def is_physical_spatial(cm: SpaceTimeCM, tol: float = PSD_TOL) -> bool:
    """True iff the correlations admit a bipartite quantum state.

    Equivalent to minimum symplectic eigenvalue >= 1 - tol, but evaluated
    as the Hermitian condition V + i*Omega_2 >= 0, which stays accurate
    when the symplectic spectrum is degenerate (pure states).
    """
    m = cm.matrix()
    scale = max(1.0, float(np.max(np.abs(m))))
    h = m + 1j * OMEGA2
    return float(np.linalg.eigvalsh(h)[0]) >= -tol * scale


def thermal(v: float) -> np.ndarray:
    """Thermal local CM, v * I with v >= 1."""
    if v < 1.0:
        raise BadVariance(f"thermal variance {v} < 1")
    return v * I2


def squeezed(r: float, theta: float = 0.0) -> np.ndarray:
    """Squeezed-vacuum local CM R(theta) diag(e^{2r}, e^{-2r}) R(theta)^T."""
    d = np.diag([math.exp(2.0 * r), math.exp(-2.0 * r)])
    rot = rotation(theta)
    return symmetrize(rot @ d @ rot.T)


def two_mode_squeezed_thermal(v: float, r: float) -> SpaceTimeCM:
    """Two thermal modes of variance v through a two-mode squeezer."""
    if v < 1.0:
        raise BadVariance(f"thermal variance {v} < 1")
    ch = v * math.cosh(2.0 * r)
    sh = v * math.sinh(2.0 * r)
    return SpaceTimeCM(ch * I2.copy(), ch * I2.copy(), sh * Z.copy())


def beam_splitter_mix(V_A: np.ndarray, V_B: np.ndarray, t: float) -> SpaceTimeCM:
    """Interfere two locally physical modes on a beam splitter."""
    if not 0.0 <= t <= 1.0:
        raise BadTransmissivity(f"transmissivity {t} outside [0, 1]")
    _check_local(np.asarray(V_A, dtype=float), "A", PSD_TOL)
    _check_local(np.asarray(V_B, dtype=float), "B", PSD_TOL)
    out = apply_symplectic(beam_splitter(t), direct_sum(V_A, V_B))
    return SpaceTimeCM(out[:2, :2], out[2:, 2:], out[:2, 2:].copy())


def random_pure_state(seed: int) -> SpaceTimeCM:
    """Interfere two random squeezed vacua on a random beam splitter."""
    rng = np.random.default_rng(seed)
    r1, r2 = rng.uniform(0.0, 1.0, size=2)
    phi = rng.uniform(0.0, 2.0 * math.pi)
    t = rng.uniform(0.0, 1.0)
    cm = beam_splitter_mix(squeezed(r1, 0.0), squeezed(r2, phi), t)
    std, _ = to_standard_form(cm)
    return std


def random_mixed_state(seed: int, v: float) -> SpaceTimeCM:
    """Same construction seeded from equally mixed thermal squeezers.

    det of the 4x4 stays v^4, so the ensemble has constant mixedness.
    """
    if v < 1.0:
        raise BadVariance(f"thermal variance {v} < 1")
    rng = np.random.default_rng(seed)
    r1, r2 = rng.uniform(0.0, 1.0, size=2)
    phi = rng.uniform(0.0, 2.0 * math.pi)
    t = rng.uniform(0.0, 1.0)
    cm = beam_splitter_mix(v * squeezed(r1, 0.0), v * squeezed(r2, phi), t)
    std, _ = to_standard_form(cm)
    return std
