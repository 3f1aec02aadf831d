"""Finite-sample homodyne simulation and covariance estimation.

Each round fixes one quadrature per party; only the 2x2 bivariate marginal
for that setting pair has to be a valid covariance, never the full 4x4.
Non-PSD marginals mean the scenario admits no joint outcome distribution
for that pair and raise instead of being clamped.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .atemporality import AtemporalityReport, classify, forward_robustness, reverse_robustness
from .errors import InsufficientSamples, UnsamplableMarginal
from .states import SpaceTimeCM

QUAD_INDEX = {"q": 0, "p": 1}

# the eight informative setting pairs; (none, none) rounds carry no moments
SINGLE_A = [("q", None), ("p", None)]
SINGLE_B = [(None, "q"), (None, "p")]
PAIRED = [("q", "q"), ("q", "p"), ("p", "q"), ("p", "p")]
ALL_SETTINGS = SINGLE_A + SINGLE_B + PAIRED


@dataclass
class SampleBatch:
    quad_a: str | None
    quad_b: str | None
    outcomes: np.ndarray  # (count, n_active) with columns [x_a?, x_b?]
    count: int


@dataclass
class CMEstimate:
    estimate: SpaceTimeCM
    standard_errors: np.ndarray  # 4x4
    n_per_setting: int


def setting_marginal(cm: SpaceTimeCM, quad_a: str | None, quad_b: str | None) -> np.ndarray:
    """Covariance of the observed outcomes for one setting pair."""
    cols = []
    if quad_a is not None:
        j = QUAD_INDEX[quad_a]
        cols.append(("a", j))
    if quad_b is not None:
        k = QUAD_INDEX[quad_b]
        cols.append(("b", k))
    dim = len(cols)
    out = np.zeros((dim, dim))
    for r, (pr, ir) in enumerate(cols):
        for c, (pc, ic) in enumerate(cols):
            if pr == "a" and pc == "a":
                out[r, c] = cm.V_A[ir, ic]
            elif pr == "b" and pc == "b":
                out[r, c] = cm.V_B[ir, ic]
            elif pr == "a" and pc == "b":
                out[r, c] = cm.C[ir, ic]
            else:
                out[r, c] = cm.C[ic, ir]
    return out


def sample_setting(
    cm: SpaceTimeCM,
    quad_a: str | None,
    quad_b: str | None,
    n: int,
    seed: int,
    tol: float = 1e-10,
) -> SampleBatch:
    """Draw n zero-mean Gaussian outcome records for one setting pair.

    Degenerate (rank-deficient) marginals sample exactly on their ridge.
    """
    marg = setting_marginal(cm, quad_a, quad_b)
    dim = marg.shape[0]
    if dim == 0:
        return SampleBatch(quad_a, quad_b, np.empty((n, 0)), n)
    w, u = np.linalg.eigh(marg)
    scale = max(1.0, float(np.max(np.abs(marg))))
    if w[0] < -tol * scale:
        raise UnsamplableMarginal(
            f"setting ({quad_a}, {quad_b}) marginal has eigenvalue {w[0]:g} < 0"
        )
    factor = u * np.sqrt(np.clip(w, 0.0, None))
    rng = np.random.default_rng(seed)
    z = rng.standard_normal((n, dim))
    return SampleBatch(quad_a, quad_b, z @ factor.T, n)


def sample_all_settings(cm: SpaceTimeCM, n: int, seed: int) -> dict:
    """One batch per informative setting, with derived per-setting seeds."""
    root = np.random.default_rng(seed)
    sub_seeds = root.integers(0, 2**63 - 1, size=len(ALL_SETTINGS))
    return {
        setting: sample_setting(cm, setting[0], setting[1], n, int(s))
        for setting, s in zip(ALL_SETTINGS, sub_seeds)
    }


def estimate_cm(batches: dict) -> CMEstimate:
    """Empirical space-time CM from one batch per informative setting.

    Local blocks are diagonal by the standard-basis assumption; diagonal
    entries come from single-party settings and cross entries from the
    symmetrized second moment of paired settings.  Means are assumed zero.
    """
    missing = [s for s in ALL_SETTINGS if s not in batches]
    if missing:
        raise InsufficientSamples(f"missing batches for settings {missing}")
    counts = {batches[s].count for s in ALL_SETTINGS}
    n = min(counts)
    if n < 2:
        raise InsufficientSamples("need at least 2 samples per setting")

    v_a = np.zeros((2, 2))
    v_b = np.zeros((2, 2))
    c = np.zeros((2, 2))
    for quad, _ in SINGLE_A:
        x = batches[(quad, None)].outcomes[:, 0]
        v_a[QUAD_INDEX[quad], QUAD_INDEX[quad]] = float(np.mean(x * x))
    for _, quad in SINGLE_B:
        x = batches[(None, quad)].outcomes[:, 0]
        v_b[QUAD_INDEX[quad], QUAD_INDEX[quad]] = float(np.mean(x * x))
    for qa, qb in PAIRED:
        xy = batches[(qa, qb)].outcomes
        c[QUAD_INDEX[qa], QUAD_INDEX[qb]] = float(np.mean(xy[:, 0] * xy[:, 1]))

    est = SpaceTimeCM(v_a, v_b, c)
    full = est.matrix()
    se = np.zeros((4, 4))
    for i in range(4):
        for j in range(4):
            # asymptotic variance of a Gaussian second-moment estimator
            var = (full[i, i] * full[j, j] + full[i, j] ** 2) / n
            se[i, j] = math.sqrt(max(var, 0.0))
    # local off-diagonals are pinned to zero by assumption, not estimated
    se[0, 1] = se[1, 0] = se[2, 3] = se[3, 2] = 0.0
    return CMEstimate(estimate=est, standard_errors=se, n_per_setting=n)


def _perturbed_cm(est: CMEstimate, rng: np.random.Generator) -> SpaceTimeCM | None:
    se = est.standard_errors
    base = est.estimate
    v_a = np.diag(
        [
            base.V_A[0, 0] + rng.normal() * se[0, 0],
            base.V_A[1, 1] + rng.normal() * se[1, 1],
        ]
    )
    v_b = np.diag(
        [
            base.V_B[0, 0] + rng.normal() * se[2, 2],
            base.V_B[1, 1] + rng.normal() * se[3, 3],
        ]
    )
    c = base.C + rng.normal(size=(2, 2)) * se[:2, 2:]
    if v_a[0, 0] <= 0.0 or v_a[1, 1] <= 0.0 or v_b[0, 0] <= 0.0 or v_b[1, 1] <= 0.0:
        return None
    return SpaceTimeCM(v_a, v_b, c)


def classify_with_confidence(
    est: CMEstimate,
    seed: int = 0,
    n_boot: int = 200,
) -> tuple[AtemporalityReport, bool]:
    """Classify the point estimate and flag boundary-uncertain results.

    Parametric bootstrap: resample CMs from the estimator's asymptotic
    Gaussian, recompute both robustness values, and flag when either point
    value lies within 3 bootstrap standard errors of zero.
    """
    report = classify(est.estimate)
    rng = np.random.default_rng(seed)
    fwd_vals = []
    rev_vals = []
    for _ in range(n_boot):
        cm = _perturbed_cm(est, rng)
        if cm is None:
            continue
        try:
            fwd_vals.append(forward_robustness(cm))
            rev_vals.append(reverse_robustness(cm))
        except (ZeroDivisionError, FloatingPointError):
            continue
    if not fwd_vals:
        return report, False
    se_fwd = float(np.std(fwd_vals))
    se_rev = float(np.std(rev_vals))
    uncertain = abs(report.forward_f) < 3.0 * se_fwd or abs(report.reverse_f) < 3.0 * se_rev
    return report, uncertain
