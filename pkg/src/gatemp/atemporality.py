"""Pseudo-channel retrieval, atemporality robustness, causal classification.

The forward pseudo-channel of a standard-form space-time CM is the unique
(T, N) with T = C^T V_A^{-1} and N = V_B - C^T V_A^{-1} C.  Its robustness,
the largest amount of added measurement noise E >= 0 (measured by
sqrt(det E)) that keeps X(T, N + E) non-PSD, has the closed form
max(0, |omega| - sqrt(det N)) with omega = 1 - det C / det V_A.  Numerical
oracles (bisection over the noise magnitude with a numerically optimized
noise shape, and a constrained search over general diagonal noise)
cross-check the closed form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .channels import GaussianChannel
from .errors import NotApplicable, NotStandardForm
from .linalg import det2, herm2, psd_herm2, psd_sym2, symmetrize
from .states import SpaceTimeCM, is_physical_spatial, to_standard_form

_DIAG_TOL = 1e-9


class Classification(str, Enum):
    BOTH_TEMPORAL = "both-temporal"
    FORWARD_ONLY_TEMPORAL = "forward-only-temporal"
    REVERSE_ONLY_TEMPORAL = "reverse-only-temporal"
    ATEMPORAL = "atemporal"


@dataclass
class AtemporalityReport:
    forward_f: float
    reverse_f: float
    total_f: float
    omega_fwd: float
    omega_rev: float
    spatially_physical: bool
    classification: Classification

    def to_json_dict(self) -> dict:
        return {
            "forward_f": self.forward_f,
            "reverse_f": self.reverse_f,
            "total_f": self.total_f,
            "omega_fwd": self.omega_fwd,
            "omega_rev": self.omega_rev,
            "spatially_physical": self.spatially_physical,
            "classification": self.classification.value,
        }


def _require_diagonal_va(cm: SpaceTimeCM) -> None:
    if abs(cm.V_A[0, 1]) > _DIAG_TOL:
        raise NotStandardForm("V_A must be diagonal (standard form)")


def retrieve_forward(cm: SpaceTimeCM) -> GaussianChannel:
    """Unique forward pseudo-channel reproducing the CM exactly."""
    _require_diagonal_va(cm)
    d = np.array([cm.V_A[0, 0], cm.V_A[1, 1]])
    c_over_va = cm.C / d[:, None]  # rows scaled by 1/diag(V_A)
    t = c_over_va.T
    n = symmetrize(cm.V_B - cm.C.T @ c_over_va)
    return GaussianChannel(t, n)


def retrieve_reverse(cm: SpaceTimeCM) -> GaussianChannel:
    """Forward retrieval applied to the swapped CM {V_B, V_A, C^T}."""
    return retrieve_forward(cm.swap())


def _omega_and_detn(cm: SpaceTimeCM) -> tuple[float, float]:
    det_va = det2(cm.V_A)
    omega = 1.0 - det2(cm.C) / det_va
    det_n = float(np.linalg.det(cm.matrix())) / det_va  # Schur identity
    return omega, det_n


def _snap(x: float, omega: float, root_n: float) -> float:
    # Pin boundary cases (|omega| = sqrt(det N) up to round-off) to exactly 0.
    scale = max(1.0, abs(omega), root_n)
    return 0.0 if x <= 1e-12 * scale else x


def forward_robustness(cm: SpaceTimeCM) -> float:
    """Closed-form max(0, |omega| - sqrt(det N)) for standard-form input.

    If the retrieved Schur complement N is not PSD (possible only for
    adversarial inputs), det N alone is misleading and the value falls back
    to the bisection oracle on the full atemporality matrix.
    """
    _require_diagonal_va(cm)
    ch = retrieve_forward(cm)
    if not psd_sym2(ch.N):
        return _bisect_mu(ch.N, ch.omega())
    omega, det_n = _omega_and_detn(cm)
    root_n = math.sqrt(max(det_n, 0.0))
    return _snap(abs(omega) - root_n, omega, root_n)


def reverse_robustness(cm: SpaceTimeCM) -> float:
    return forward_robustness(cm.swap())


def _bisect_mu(n: np.ndarray, omega: float, tol: float = 1e-10, max_iter: int = 60) -> float:
    """Smallest mu >= 0 with N + mu I + i*omega*Omega PSD, by bisection."""
    n11, n12, n22 = float(n[0, 0]), float(n[0, 1]), float(n[1, 1])
    z2 = n12 * n12 + omega * omega

    def psd(mu: float) -> bool:
        d1, d2 = n11 + mu, n22 + mu
        return d1 + d2 >= 0.0 and d1 * d2 - z2 >= 0.0

    if psd(0.0):
        return 0.0
    lo = 0.0
    hi = abs(omega) + max(abs(n11), abs(n12), abs(n22)) + 1.0
    for _ in range(max_iter):
        if hi - lo < tol:
            break
        mid = 0.5 * (lo + hi)
        if psd(mid):
            hi = mid
        else:
            lo = mid
    return hi


def _worst_noise_shape(n1: float, n2: float) -> float:
    """Noise aspect ratio t minimizing n1/t + n2*t, found numerically.

    E = mu * diag(t, 1/t) in the eigenbasis of N has sqrt(det E) = mu for
    every t; the shape minimizing det(N + E) is the one that keeps X
    non-PSD the longest, and it does not depend on mu.  Convex in log t,
    so golden-section search converges unconditionally.
    """

    def h(logt: float) -> float:
        return n1 * math.exp(-logt) + n2 * math.exp(logt)

    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = -30.0, 30.0
    c = b - invphi * (b - a)
    d = a + invphi * (b - a)
    fc, fd = h(c), h(d)
    for _ in range(90):
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - invphi * (b - a)
            fc = h(c)
        else:
            a, c, fc = c, d, fd
            d = a + invphi * (b - a)
            fd = h(d)
    return math.exp(0.5 * (a + b))


def robustness_oracle(cm: SpaceTimeCM, direction: str = "forward") -> float:
    """Bisection oracle for the robustness, independent of the closed form.

    Bisects the noise magnitude mu = sqrt(det E): at each candidate it
    tests whether the worst-case-shaped noise of that magnitude still
    leaves the atemporality matrix non-PSD.  The shape search is numeric;
    no determinant identity from the closed form is used.
    """
    if direction == "reverse":
        cm = cm.swap()
    elif direction != "forward":
        raise ValueError(f"unknown direction {direction!r}")
    _require_diagonal_va(cm)
    ch = retrieve_forward(cm)
    omega = ch.omega()
    n1, n2 = (float(x) for x in np.linalg.eigvalsh(ch.N))
    if n1 < 0.0:
        # adversarial input with indefinite N; same fallback as the closed form
        return _bisect_mu(ch.N, omega)
    t = _worst_noise_shape(n1, n2)

    def still_atemporal(mu: float) -> bool:
        x = herm2(n1 + mu * t, n2 + mu / t, 1j * omega)
        return not psd_herm2(x, tol=0.0)

    if not still_atemporal(0.0):
        return 0.0
    lo = 0.0
    hi = abs(omega) + max(n1, n2) + 1.0
    for _ in range(60):
        if hi - lo < 1e-10:
            break
        mid = 0.5 * (lo + hi)
        if still_atemporal(mid):
            lo = mid
        else:
            hi = mid
    return hi


def general_noise_oracle(
    cm: SpaceTimeCM,
    direction: str = "forward",
    full: bool = False,
    grid: int = 4096,
):
    """Search over general diagonal added noise E = diag(e1, e2) >= 0.

    Maximizes sqrt(e1 e2) on the constraint boundary
    |omega| = sqrt((n1 + e1)(n2 + e2)), where n1, n2 are the eigenvalues of
    the retrieved noise matrix.  Grid scan plus golden-section refinement.
    Returns the optimum (and the optimizer when full=True).
    """
    if direction == "reverse":
        cm = cm.swap()
    elif direction != "forward":
        raise ValueError(f"unknown direction {direction!r}")
    _require_diagonal_va(cm)
    ch = retrieve_forward(cm)
    omega = abs(ch.omega())
    n1, n2 = np.linalg.eigvalsh(ch.N)
    n1, n2 = float(n1), float(n2)
    if omega - math.sqrt(max(n1 * n2, 0.0)) <= 0.0:
        raise NotApplicable("zero robustness; nothing to search")
    if n1 <= 1e-12 or n2 <= 1e-12:
        raise NotApplicable("degenerate noise matrix; optimizer unbounded")

    w2 = omega * omega
    ub = w2 / n2 - n1  # largest e1 keeping e2 >= 0

    def prod(e1: float) -> float:
        return e1 * (w2 / (n1 + e1) - n2)

    xs = np.linspace(0.0, ub, grid + 1)
    vals = xs * (w2 / (n1 + xs) - n2)
    k = int(np.argmax(vals))
    lo = xs[max(k - 1, 0)]
    hi = xs[min(k + 1, grid)]
    # golden-section maximization on the bracket
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    c = b - invphi * (b - a)
    d = a + invphi * (b - a)
    fc, fd = prod(c), prod(d)
    for _ in range(200):
        if b - a < 1e-13 * max(1.0, ub):
            break
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - invphi * (b - a)
            fc = prod(c)
        else:
            a, c, fc = c, d, fd
            d = a + invphi * (b - a)
            fd = prod(d)
    e1 = 0.5 * (a + b)
    e2 = w2 / (n1 + e1) - n2
    value = math.sqrt(max(prod(e1), 0.0))
    if full:
        return value, e1, e2
    return value


def classify(cm: SpaceTimeCM) -> AtemporalityReport:
    """Standard-form the input and report both robustness directions."""
    std, _ = to_standard_form(cm)
    fwd = forward_robustness(std)
    rev = reverse_robustness(std)
    total = min(fwd, rev)
    omega_fwd, _ = _omega_and_detn(std)
    omega_rev, _ = _omega_and_detn(std.swap())
    if fwd > 0.0 and rev > 0.0:
        label = Classification.ATEMPORAL
    elif fwd == 0.0 and rev > 0.0:
        label = Classification.FORWARD_ONLY_TEMPORAL
    elif fwd > 0.0:
        label = Classification.REVERSE_ONLY_TEMPORAL
    else:
        label = Classification.BOTH_TEMPORAL
    return AtemporalityReport(
        forward_f=fwd,
        reverse_f=rev,
        total_f=total,
        omega_fwd=omega_fwd,
        omega_rev=omega_rev,
        spatially_physical=is_physical_spatial(std),
        classification=label,
    )
