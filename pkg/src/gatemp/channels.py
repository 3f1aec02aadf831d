"""Displacement-free Gaussian channels (T, N) and the CP condition.

A channel maps a local CM as V -> T V T^T + N.  Complete positivity is
equivalent to N + i*omega*Omega >= 0 with omega = 1 - det T, using the 2x2
identity T Omega T^T = (det T) Omega.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import BadTransmissivity, NotStandardForm
from .linalg import I2, PSD_TOL, det2, herm2_eigvals, rotation, symmetrize
from .states import SpaceTimeCM, _check_local


@dataclass
class GaussianChannel:
    """Transformation matrix T and symmetric noise matrix N."""

    T: np.ndarray
    N: np.ndarray

    def __post_init__(self):
        self.T = np.asarray(self.T, dtype=float)
        self.N = symmetrize(np.asarray(self.N, dtype=float))

    def omega(self) -> float:
        """1 - det T, the coefficient of the atemporality matrix."""
        return 1.0 - det2(self.T)

    def to_json_dict(self) -> dict:
        return {"T": self.T.tolist(), "N": self.N.tolist()}


@dataclass
class CpVerdict:
    is_cp: bool
    min_eigenvalue: float


def atemporality_matrix(ch: GaussianChannel, mu: float = 0.0) -> np.ndarray:
    """X(T, N + mu I) = N + mu I + i*omega*Omega as a complex 2x2."""
    w = ch.omega()
    n = ch.N
    return np.array(
        [
            [n[0, 0] + mu, n[0, 1] + 1j * w],
            [n[0, 1] - 1j * w, n[1, 1] + mu],
        ]
    )


def apply(ch: GaussianChannel, v: np.ndarray) -> np.ndarray:
    """T V T^T + N, symmetrized.  Output physicality is the caller's problem."""
    return symmetrize(ch.T @ np.asarray(v, dtype=float) @ ch.T.T + ch.N)


def compose(second: GaussianChannel, first: GaussianChannel) -> GaussianChannel:
    """Channel equal to applying `first` then `second`."""
    t = second.T @ first.T
    n = symmetrize(second.T @ first.N @ second.T.T + second.N)
    return GaussianChannel(t, n)


def is_cp(ch: GaussianChannel, tol: float = PSD_TOL) -> CpVerdict:
    """Test the CP condition N + i Omega - i T Omega T^T >= 0."""
    x = atemporality_matrix(ch)
    lo, _ = herm2_eigvals(x)
    return CpVerdict(is_cp=lo >= -tol, min_eigenvalue=lo)


def temporal_mechanism(V_A: np.ndarray, ch: GaussianChannel) -> SpaceTimeCM:
    """Space-time CM of measure-then-evolve through (T, N).

    V_A must be diagonal (standard basis) and locally physical.  The channel
    is not required to be CP, so pseudo-channels can be fed in for testing.
    """
    V_A = np.asarray(V_A, dtype=float)
    if abs(V_A[0, 1]) > 1e-9 or abs(V_A[1, 0]) > 1e-9:
        raise NotStandardForm("temporal_mechanism requires a diagonal V_A")
    _check_local(V_A, "A", PSD_TOL)
    v_b = apply(ch, V_A)
    c = V_A @ ch.T.T
    return SpaceTimeCM(V_A.copy(), v_b, c)


def identity_channel() -> GaussianChannel:
    return GaussianChannel(I2.copy(), np.zeros((2, 2)))


def loss_channel(eta: float) -> GaussianChannel:
    """T = sqrt(eta) I, N = (1 - eta) I."""
    if not 0.0 <= eta <= 1.0:
        raise BadTransmissivity(f"transmission rate {eta} outside [0, 1]")
    return GaussianChannel(math.sqrt(eta) * I2, (1.0 - eta) * I2)


def phase_channel(theta: float) -> GaussianChannel:
    """Noiseless phase rotation, T = R(theta), N = 0."""
    return GaussianChannel(rotation(theta), np.zeros((2, 2)))


def from_json_dict(d: dict) -> GaussianChannel:
    """Build a channel from the JSON descriptor {"T": ..., "N": ...}."""
    for key in ("T", "N"):
        if key not in d:
            raise ValueError(f"channel descriptor missing key {key!r}")
        if np.asarray(d[key], dtype=float).shape != (2, 2):
            raise ValueError(f"{key} must be a 2x2 matrix")
    return GaussianChannel(np.asarray(d["T"], dtype=float), np.asarray(d["N"], dtype=float))
