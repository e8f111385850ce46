"""Rate formulas: general expressions for arbitrary precoders, the closed form
for the ZF-plus-balanced-common design, and the high-SNR approximation.

Rates are in bits/s/Hz with the noise power fixed at 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .allocation import PowerSplit
from .channel import ChannelPair, Geometry, geometry
from .precoding import CommonPrecoderSolution

__all__ = [
    "PrecoderSet",
    "RateReport",
    "effective_pair",
    "rate_common",
    "rate_private",
    "sum_rate_high_snr",
    "sum_rate_zf",
]


@dataclass(frozen=True)
class PrecoderSet:
    """Unnormalized precoders; squared norms are the per-stream powers."""

    pc: np.ndarray
    p1: np.ndarray
    p2: np.ndarray


@dataclass(frozen=True)
class RateReport:
    rc: float
    r1: float
    r2: float
    rs: float
    gamma1sq: float
    gamma2sq: float


def rate_common(pair: ChannelPair, precoders: PrecoderSet) -> float:
    """Common-stream rate: the worse of the two users' common-stream SINRs,
    with both private streams treated as noise."""
    sinrs = []
    for h in (pair.h1, pair.h2):
        sig = abs(np.vdot(h, precoders.pc)) ** 2
        noise = 1.0 + abs(np.vdot(h, precoders.p1)) ** 2 + abs(np.vdot(h, precoders.p2)) ** 2
        sinrs.append(sig / noise)
    return math.log2(1.0 + min(sinrs))


def rate_private(pair: ChannelPair, precoders: PrecoderSet, k: int) -> float:
    """Private rate of user k after the common stream has been removed; the other
    user's private stream remains as interference."""
    if k == 1:
        h, own, other = pair.h1, precoders.p1, precoders.p2
    elif k == 2:
        h, own, other = pair.h2, precoders.p2, precoders.p1
    else:
        raise ValueError("user index must be 1 or 2")
    sig = abs(np.vdot(h, own)) ** 2
    noise = 1.0 + abs(np.vdot(h, other)) ** 2
    return math.log2(1.0 + sig / noise)


def effective_pair(pair: ChannelPair, split: PowerSplit) -> tuple[np.ndarray, np.ndarray]:
    """Channels scaled by 1/gamma_k, where gamma_k^2 = 1 + |hk|^2 * rho * Pk is
    user k's private-stream SNR factor under ZF directions."""
    geom = geometry(pair)
    g1 = math.sqrt(1.0 + geom.n1sq * geom.rho * split.p1)
    g2 = math.sqrt(1.0 + geom.n2sq * geom.rho * split.p2)
    return pair.h1 / g1, pair.h2 / g2


def sum_rate_zf(geom: Geometry, fc_sol: CommonPrecoderSolution, split: PowerSplit) -> RateReport:
    """Closed-form rate report for ZF privates plus the max-min common precoder.

    ``fc_sol`` must have been solved on the effective channels matching
    ``split``; its min gain then gives the common rate directly and the private
    rates reduce to log2(gamma_k^2).
    """
    g1sq = 1.0 + geom.n1sq * geom.rho * split.p1
    g2sq = 1.0 + geom.n2sq * geom.rho * split.p2
    rc = math.log2(1.0 + fc_sol.balanced_gain * split.pc)
    r1 = math.log2(g1sq)
    r2 = math.log2(g2sq)
    return RateReport(rc=rc, r1=r1, r2=r2, rs=rc + r1 + r2,
                      gamma1sq=g1sq, gamma2sq=g2sq)


def sum_rate_high_snr(geom: Geometry, fc_gain: float, t: float, total_power: float) -> float:
    """High-SNR sum rate with uniform private powers p1 = p2 = t*P/2.

    ``fc_gain`` is the direction-level common gain |h2_dir^H fc|^2. The leading
    2*log2(P) term reflects the two interference-free streams.
    """
    if geom.rho <= 0.0:
        raise ValueError("the high-SNR expansion requires rho > 0")
    if not 0.0 < t <= 1.0:
        raise ValueError("t must lie in (0, 1]")
    g2 = geom.n2sq * fc_gain
    e = 0.25 * geom.n2sq * geom.rho - 0.5 * g2
    f = 0.5 * g2
    return (math.log2(geom.n1sq * geom.rho) + 2.0 * math.log2(total_power)
            + math.log2(e * t * t + f * t))
