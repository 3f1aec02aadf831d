"""Exact-shape 2x2 / 4x4 real and Hermitian matrix arithmetic.

Everything works in hbar = 2 units, so the vacuum covariance matrix is the
identity and all variances are dimensionless.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import NegativeRadicand

# Single-mode symplectic form and its two-mode direct sum.
OMEGA = np.array([[0.0, 1.0], [-1.0, 0.0]])
OMEGA2 = np.block([[OMEGA, np.zeros((2, 2))], [np.zeros((2, 2)), OMEGA]])
Z = np.diag([1.0, -1.0])
I2 = np.eye(2)
I4 = np.eye(4)

# Default tolerance for positivity tests; boundary cases count as PSD.
PSD_TOL = 1e-10


def sym2(a11: float, a12: float, a22: float) -> np.ndarray:
    """Symmetric 2x2 matrix from its upper triangle."""
    return np.array([[a11, a12], [a12, a22]])


def herm2(d1: float, d2: float, z: complex) -> np.ndarray:
    """Hermitian 2x2 matrix with real diagonal (d1, d2) and upper entry z."""
    return np.array([[d1, z], [np.conj(z), d2]], dtype=complex)


def det2(m: np.ndarray) -> float:
    """Determinant of a 2x2 matrix, ad - bc."""
    return float(m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0])


def symmetrize(m: np.ndarray) -> np.ndarray:
    """(M + M^T)/2, killing round-off asymmetry after products."""
    return (m + m.T) / 2.0


def psd_sym2(m: np.ndarray, tol: float = PSD_TOL) -> bool:
    """PSD test for a symmetric 2x2 via trace, leading entry and determinant."""
    scale = max(1.0, float(np.max(np.abs(m))) ** 2)
    return (
        m[0, 0] >= -tol
        and m[0, 0] + m[1, 1] >= -tol
        and det2(m) >= -tol * scale
    )


def psd_herm2(h: np.ndarray, tol: float = PSD_TOL) -> bool:
    """PSD test for a Hermitian 2x2 via trace and determinant."""
    d1 = float(h[0, 0].real)
    d2 = float(h[1, 1].real)
    z2 = float(abs(h[0, 1])) ** 2
    scale = max(1.0, abs(d1) ** 2, abs(d2) ** 2, z2)
    return d1 + d2 >= -tol and d1 * d2 - z2 >= -tol * scale


def herm2_eigvals(h: np.ndarray) -> tuple[float, float]:
    """Closed-form eigenvalues (min, max) of a Hermitian 2x2."""
    d1 = float(h[0, 0].real)
    d2 = float(h[1, 1].real)
    half_tr = (d1 + d2) / 2.0
    rad = math.sqrt(((d1 - d2) / 2.0) ** 2 + float(abs(h[0, 1])) ** 2)
    return half_tr - rad, half_tr + rad


def rotation(theta: float) -> np.ndarray:
    """Phase-space rotation R(theta)."""
    c, s = math.cos(theta), math.sin(theta)
    return np.array([[c, -s], [s, c]])


def direct_sum(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Block-diagonal 4x4 from two 2x2 blocks."""
    out = np.zeros((4, 4))
    out[:2, :2] = a
    out[2:, 2:] = b
    return out


def apply_symplectic(s: np.ndarray, v: np.ndarray) -> np.ndarray:
    """S V S^T, explicitly re-symmetrized."""
    return symmetrize(s @ v @ s.T)


def two_mode_squeezer(r: float) -> np.ndarray:
    """Symplectic matrix of a two-mode squeezing operation."""
    ch, sh = math.cosh(r), math.sinh(r)
    return np.block([[ch * I2, sh * Z], [sh * Z, ch * I2]])


def beam_splitter(t: float) -> np.ndarray:
    """Symplectic matrix of a beam splitter with transmissivity t."""
    a, b = math.sqrt(t), math.sqrt(1.0 - t)
    return np.block([[a * I2, b * I2], [-b * I2, a * I2]])


def symplectic_eigs_4x4(v: np.ndarray, tol: float = 1e-12) -> tuple[float, float]:
    """Symplectic spectrum (nu_minus, nu_plus) of a 4x4 symmetric matrix.

    Uses the two-mode invariant Delta = det A + det B + 2 det C.  Tiny
    negative radicands (round-off on degenerate spectra) are clamped to 0;
    genuinely negative ones signal a non-CM input.
    """
    a = det2(v[:2, :2])
    b = det2(v[2:, 2:])
    c = det2(v[:2, 2:])
    delta = a + b + 2.0 * c
    det_v = float(np.linalg.det(v))
    rad = delta * delta - 4.0 * det_v
    scale = max(1.0, delta * delta)
    if rad < -tol * scale:
        raise NegativeRadicand(
            f"Delta^2 - 4 det V = {rad:g} < 0; not a valid covariance matrix"
        )
    root = math.sqrt(max(rad, 0.0))
    lo = max((delta - root) / 2.0, 0.0)
    hi = max((delta + root) / 2.0, 0.0)
    return math.sqrt(lo), math.sqrt(hi)
