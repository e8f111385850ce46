"""Zero-forcing private directions and the max-min fair common-stream direction.

The common direction maximizes the smaller of the two effective-channel gains
|h1_eff^H f|^2 and |h2_eff^H f|^2 over unit-norm f. When the gain-balancing
combination is feasible it is optimal; otherwise the optimum is the matched
filter of the weaker effective channel (matching it saturates the Cauchy-Schwarz
bound on the min gain).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .channel import ChannelPair, geometry, norm_sq, unit

__all__ = [
    "CommonPrecoderSolution",
    "PrivateDirections",
    "balanced_gain_from_alphas",
    "direction_common_gain",
    "direction_only_common",
    "maxmin_common_direction",
    "zf_directions",
]

# Below this, alpha11 + alpha22 - 2|alpha12| counts as zero: the two effective
# channels are the same direction with the same norm and any matched filter wins.
_DEGENERATE_TOL = 1e-14


@dataclass(frozen=True)
class PrivateDirections:
    """Unit-norm ZF directions: f1 orthogonal to h2 and f2 orthogonal to h1."""

    f1: np.ndarray
    f2: np.ndarray


@dataclass(frozen=True)
class CommonPrecoderSolution:
    """Max-min common direction plus the intermediates of the closed form.

    ``balanced_gain`` is the achieved min_k |hk_eff^H fc|^2. On the balanced
    branch ``lam`` is the closed form's normalization coefficient (equal to the
    balanced gain); on the matched-filter branches it is set to the achieved
    min gain so it stays positive and meaningful.
    """

    fc: np.ndarray
    lam: float
    mu1: float
    mu2: float
    alpha11: float
    alpha22: float
    alpha12: complex
    balanced_gain: float
    balanced: bool


def _canonical_phase(vec: np.ndarray) -> np.ndarray:
    """Rotate a global phase so the first nonzero entry is real nonnegative."""
    for entry in vec:
        mag = abs(entry)
        if mag > 1e-12:
            return vec * (entry.conjugate() / mag)
    return vec


def _first_orthogonal_completion(direction: np.ndarray) -> np.ndarray:
    """First canonical basis vector projected off ``direction``, normalized."""
    for i in range(direction.size):
        cand = -direction * direction[i].conjugate()
        cand[i] += 1.0
        nsq = norm_sq(cand)
        if nsq > 1e-12:
            return cand / math.sqrt(nsq)
    raise ValueError("no orthogonal completion exists (zero direction?)")


def zf_directions(pair: ChannelPair) -> PrivateDirections:
    """Unit ZF directions for the private streams.

    For aligned channels (rho == 0) both directions fall back to the first
    canonical completion orthogonal to the shared direction, so the private
    gains are exactly zero.
    """
    d1 = unit(pair.h1)
    d2 = unit(pair.h2)
    if geometry(pair).rho == 0.0:
        f = _first_orthogonal_completion(d2)
        return PrivateDirections(f1=f, f2=f)
    p1 = d1 - d2 * np.vdot(d2, d1)
    p2 = d2 - d1 * np.vdot(d1, d2)
    return PrivateDirections(f1=unit(p1), f2=unit(p2))


def balanced_gain_from_alphas(a11, a22, m):
    """Max-min gain achieved by the optimal common direction, from the Gram
    entries a11 = |h1_eff|^2, a22 = |h2_eff|^2, m = |h1_eff^H h2_eff|.

    Accepts scalars or numpy arrays (used by the vectorized power sweeps).
    """
    a11 = np.asarray(a11, dtype=float)
    a22 = np.asarray(a22, dtype=float)
    m = np.asarray(m, dtype=float)
    amin = np.minimum(a11, a22)
    denom = a11 + a22 - 2.0 * m
    safe = denom > _DEGENERATE_TOL
    lam = np.where(safe, (a11 * a22 - m * m) / np.where(safe, denom, 1.0), amin)
    gain = np.where((m < amin) & safe, lam, amin)
    if gain.ndim == 0:
        return float(gain)
    return gain


def maxmin_common_direction(h1_eff: np.ndarray, h2_eff: np.ndarray) -> CommonPrecoderSolution:
    """Solve max_f min(|h1_eff^H f|^2, |h2_eff^H f|^2) over unit-norm f.

    Returns the direction with a deterministic global phase (first nonzero
    entry real nonnegative) together with the closed-form intermediates.
    """
    h1e = np.asarray(h1_eff, dtype=np.complex128)
    h2e = np.asarray(h2_eff, dtype=np.complex128)
    a11 = norm_sq(h1e)
    a22 = norm_sq(h2e)
    if a11 <= 0.0 or a22 <= 0.0:
        raise ValueError("effective channels must be nonzero")
    a12 = complex(np.vdot(h1e, h2e))
    m = abs(a12)
    denom = a11 + a22 - 2.0 * m

    if denom <= _DEGENERATE_TOL:
        # Same direction, same norm: any matched filter balances trivially.
        fc = h1e / math.sqrt(a11)
        mu1, mu2 = 1.0, 0.0
        balanced = True
        lam = None
    elif m < min(a11, a22):
        mu1 = (a22 - m) / denom
        mu2 = (a11 - m) / denom
        lam = (a11 * a22 - m * m) / denom
        rot = a12.conjugate() / m if m > 0.0 else 1.0
        fc = (mu1 * h1e + mu2 * rot * h2e) / math.sqrt(lam)
        balanced = True
    else:
        # Balancing infeasible: matched filter of the weaker effective channel.
        if a11 <= a22:
            fc = h1e / math.sqrt(a11)
            mu1, mu2 = 1.0, 0.0
        else:
            fc = h2e / math.sqrt(a22)
            mu1, mu2 = 0.0, 1.0
        balanced = False
        lam = None

    fc = _canonical_phase(fc)
    gain = min(abs(np.vdot(h1e, fc)) ** 2, abs(np.vdot(h2e, fc)) ** 2)
    if lam is None:
        lam = gain
    return CommonPrecoderSolution(
        fc=fc,
        lam=float(lam),
        mu1=float(mu1),
        mu2=float(mu2),
        alpha11=float(a11),
        alpha22=float(a22),
        alpha12=a12,
        balanced_gain=float(gain),
        balanced=balanced,
    )


def direction_only_common(pair: ChannelPair) -> CommonPrecoderSolution:
    """Common direction computed on the unit channel directions alone.

    In the dual-stream regime the effective channels are proportional to the
    directions, so this equals the effective-channel solution there and is
    independent of the private power fraction.
    """
    return maxmin_common_direction(unit(pair.h1), unit(pair.h2))


def direction_common_gain(rho: float) -> float:
    """Worst-user gain |h_dir^H fc|^2 of the direction-only common precoder."""
    return 0.5 * (1.0 + math.sqrt(max(1.0 - rho, 0.0)))
