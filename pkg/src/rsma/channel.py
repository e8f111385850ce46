"""Two-user MISO channel pairs and the geometry scalars that drive all closed forms."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "ChannelPair",
    "Geometry",
    "geometry",
    "pair_from_rho",
    "parametric_pair",
    "rayleigh_pair",
]

# Direction overlaps within this of 1 are treated as exactly aligned so that the
# single-stream regime test t*P <= gap stays exact (gap becomes +inf).
_ALIGNED_SNAP = 1e-14


def norm_sq(vec: np.ndarray) -> float:
    return float(np.vdot(vec, vec).real)


def unit(vec: np.ndarray) -> np.ndarray:
    return vec / math.sqrt(norm_sq(vec))


def _as_channel_vector(entries) -> np.ndarray:
    vec = np.asarray(entries, dtype=np.complex128)
    if vec.ndim != 1 or vec.size < 2:
        raise ValueError("channel vector must be 1-D with at least 2 entries")
    if not np.all(np.isfinite(vec)):
        raise ValueError("channel vector entries must be finite")
    if norm_sq(vec) <= 0.0:
        raise ValueError("channel vector must have a strictly positive norm")
    return vec


@dataclass(frozen=True)
class ChannelPair:
    """The two users' channel vectors, relabeled so user 1 is the stronger one."""

    h1: np.ndarray
    h2: np.ndarray

    def __post_init__(self):
        h1 = _as_channel_vector(self.h1)
        h2 = _as_channel_vector(self.h2)
        if h1.size != h2.size:
            raise ValueError("channel vectors must have the same length")
        if norm_sq(h2) > norm_sq(h1):
            h1, h2 = h2, h1
        object.__setattr__(self, "h1", h1)
        object.__setattr__(self, "h2", h2)

    @property
    def n_t(self) -> int:
        return self.h1.size


@dataclass(frozen=True)
class Geometry:
    """Scalars derived from a pair: direction orthogonality, squared norms, and the
    disparity threshold ``gap`` that separates the single- and dual-stream regimes.

    ``gap`` is ``math.inf`` for aligned channels (rho == 0).
    """

    rho: float
    n1sq: float
    n2sq: float
    gap: float

    @property
    def aligned(self) -> bool:
        return self.rho == 0.0


def parametric_pair(gamma_db: float, theta: float, n_t: int = 2) -> ChannelPair:
    """Deterministic two-antenna family: h1 = [1,1]/sqrt(2), h2 = g*[1,e^{j*theta}]/sqrt(2)
    with g = 10**(gamma_db/20).

    gamma_db must be <= 0 so user 1 keeps the stronger channel.
    """
    if n_t != 2:
        raise ValueError("parametric_pair is defined for n_t = 2 only")
    if gamma_db > 0.0:
        raise ValueError("gamma_db must be <= 0 (user 1 is the stronger user)")
    g = 10.0 ** (gamma_db / 20.0)
    h1 = np.array([1.0, 1.0], dtype=np.complex128) / math.sqrt(2.0)
    h2 = g * np.array([1.0, np.exp(1j * theta)], dtype=np.complex128) / math.sqrt(2.0)
    return ChannelPair(h1, h2)


def pair_from_rho(gamma_db: float, rho: float) -> ChannelPair:
    """Parametric pair with the phase angle chosen so the geometry hits the given rho."""
    if not 0.0 <= rho <= 1.0:
        raise ValueError("rho must lie in [0, 1]")
    theta = math.acos(1.0 - 2.0 * rho)
    return parametric_pair(gamma_db, theta, 2)


def rayleigh_pair(n_t: int, gamma_db: float, rng: np.random.Generator) -> ChannelPair:
    """I.i.d. Rayleigh pair: entries CN(0, 1/n_t) for user 1 and CN(0, g^2/n_t) for
    user 2, relabeled on construction if the draw reverses the strength ordering.
    """
    if n_t < 2:
        raise ValueError("n_t must be >= 2")
    g = 10.0 ** (gamma_db / 20.0)
    s1 = 1.0 / math.sqrt(2.0 * n_t)
    h1 = s1 * rng.standard_normal(n_t) + 1j * s1 * rng.standard_normal(n_t)
    s2 = g * s1
    h2 = s2 * rng.standard_normal(n_t) + 1j * s2 * rng.standard_normal(n_t)
    return ChannelPair(h1, h2)


def geometry(pair: ChannelPair) -> Geometry:
    """Compute (rho, |h1|^2, |h2|^2, gap) for a pair.

    rho = 1 - |<h1_dir, h2_dir>|^2; gap = (1/rho) * (1/|h2|^2 - 1/|h1|^2) and is
    flagged infinite for aligned channels.
    """
    n1sq = norm_sq(pair.h1)
    n2sq = norm_sq(pair.h2)
    overlap_sq = abs(np.vdot(pair.h1, pair.h2)) ** 2 / (n1sq * n2sq)
    rho = min(max(1.0 - overlap_sq, 0.0), 1.0)
    if rho < _ALIGNED_SNAP:
        rho = 0.0
    if rho == 0.0:
        gap = math.inf
    else:
        gap = max((1.0 / n2sq - 1.0 / n1sq) / rho, 0.0)
    return Geometry(rho=rho, n1sq=n1sq, n2sq=n2sq, gap=gap)
