"""Power allocation: water-filling across the private streams, the closed-form
optimal private power fraction t on the dual-stream branch, and the grid/golden
search on the single-stream branch where no closed form exists.

Throughout, noise power is 1, so the total power P doubles as the SNR.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .channel import ChannelPair, Geometry, geometry
from .precoding import balanced_gain_from_alphas, direction_common_gain

__all__ = [
    "PowerSplit",
    "QuadCoeffs",
    "Regime",
    "delta_rs_high_snr",
    "maximize_single_stream",
    "optimize_t",
    "quadratic_coefficients",
    "single_stream_rate",
    "single_stream_split",
    "t_star_closed",
    "t_star_high_snr",
    "waterfill",
    "zf_sum_rate",
]

# 2*fc_gain - rho below this counts as zero: the quadratic degenerates to a
# nondecreasing function of t and all private power is optimal.
_DEGENERATE_DEN = 1e-14

_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


class Regime(str, Enum):
    SINGLE_STREAM = "SingleStream"
    DUAL_STREAM = "DualStream"


@dataclass(frozen=True)
class PowerSplit:
    """Powers of the common and private streams for a fraction t of P on privates.

    ``water_level`` is diagnostic: the two-stream water level for water-filled
    splits, or the level that fills only stream 1 for forced single-stream
    splits (infinite for aligned channels).
    """

    pc: float
    p1: float
    p2: float
    t: float
    water_level: float
    regime: Regime


@dataclass(frozen=True)
class QuadCoeffs:
    """Coefficients of the dual-stream sum rate log2(ac + (ad+bc)t + bd t^2)."""

    a: float
    b: float
    c: float
    d: float

    def sum_rate(self, t):
        """Sum rate in bits at private fraction t (scalar or array)."""
        t = np.asarray(t, dtype=float)
        val = np.log2(self.a * self.c + (self.a * self.d + self.b * self.c) * t
                      + self.b * self.d * t * t)
        if val.ndim == 0:
            return float(val)
        return val


def waterfill(geom: Geometry, t: float, total_power: float) -> PowerSplit:
    """Water-filling split of t*P across the two private streams.

    If t*P <= gap the weak user's stream is off and stream 1 takes all of t*P;
    otherwise the powers are t*P/2 +/- gap/2. For aligned channels (rho == 0)
    the private gains are zero anyway and stream 1 takes t*P by convention.
    """
    if not 0.0 <= t <= 1.0:
        raise ValueError("t must lie in [0, 1]")
    if total_power <= 0.0:
        raise ValueError("total power must be positive")
    tp = t * total_power
    pc = total_power - tp
    if geom.rho == 0.0:
        return PowerSplit(pc, tp, 0.0, t, math.inf, Regime.SINGLE_STREAM)
    level = 0.5 * tp + 0.5 * (1.0 / geom.n1sq + 1.0 / geom.n2sq) / geom.rho
    if tp <= geom.gap:
        p1, p2 = tp, 0.0
    else:
        p2 = 0.5 * (tp - geom.gap)
        p1 = tp - p2
    regime = Regime.SINGLE_STREAM if p2 == 0.0 else Regime.DUAL_STREAM
    return PowerSplit(pc, p1, p2, t, level, regime)


def single_stream_split(geom: Geometry, t: float, total_power: float) -> PowerSplit:
    """Forced split with stream 2 off: p1 = t*P regardless of the gap test."""
    if not 0.0 <= t <= 1.0:
        raise ValueError("t must lie in [0, 1]")
    if total_power <= 0.0:
        raise ValueError("total power must be positive")
    tp = t * total_power
    if geom.rho == 0.0:
        level = math.inf
    else:
        level = tp + 1.0 / (geom.n1sq * geom.rho)
    return PowerSplit(total_power - tp, tp, 0.0, t, level, Regime.SINGLE_STREAM)


def zf_sum_rate(geom: Geometry, split: PowerSplit) -> float:
    """Sum rate in bits for a split under ZF privates and the max-min common
    precoder recomputed on the split's effective channels."""
    g1sq = 1.0 + geom.n1sq * geom.rho * split.p1
    g2sq = 1.0 + geom.n2sq * geom.rho * split.p2
    a11 = geom.n1sq / g1sq
    a22 = geom.n2sq / g2sq
    m = math.sqrt(geom.n1sq * geom.n2sq * (1.0 - geom.rho)) / math.sqrt(g1sq * g2sq)
    gain = balanced_gain_from_alphas(a11, a22, m)
    return (math.log2(1.0 + gain * split.pc)
            + math.log2(g1sq) + math.log2(g2sq))


def single_stream_rate(geom: Geometry, t, total_power: float):
    """Sum rate in bits with stream 2 off and p1 = t*P (t scalar or array).

    The common direction is re-solved per t because user 1's effective channel
    shrinks as its private power grows.
    """
    t = np.asarray(t, dtype=float)
    tp = t * total_power
    g1sq = 1.0 + geom.n1sq * geom.rho * tp
    a11 = geom.n1sq / g1sq
    m = math.sqrt(geom.n1sq * geom.n2sq * (1.0 - geom.rho)) / np.sqrt(g1sq)
    gain = balanced_gain_from_alphas(a11, geom.n2sq, m)
    val = np.log2(1.0 + gain * (total_power - tp)) + np.log2(g1sq)
    if val.ndim == 0:
        return float(val)
    return val


def _golden_max(fun, lo: float, hi: float, tol: float) -> tuple[float, float]:
    """Deterministic golden-section maximization of a scalar function."""
    a, b = lo, hi
    c = b - _INVPHI * (b - a)
    d = a + _INVPHI * (b - a)
    fc, fd = fun(c), fun(d)
    best_t, best_f = (c, fc) if fc >= fd else (d, fd)
    while b - a > tol:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - _INVPHI * (b - a)
            fc = fun(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INVPHI * (b - a)
            fd = fun(d)
        if fc >= fd and fc > best_f:
            best_t, best_f = c, fc
        elif fd > fc and fd > best_f:
            best_t, best_f = d, fd
    return best_t, best_f


def maximize_single_stream(geom: Geometry, total_power: float, t_max: float,
                           grid_step: float = 1e-3, refine_tol: float = 1e-9,
                           ) -> tuple[float, float]:
    """Maximize the stream-2-off sum rate over t in [0, t_max].

    Grid search followed by golden-section refinement around the best cell;
    no global unimodality is assumed.
    """
    if t_max <= 0.0:
        return 0.0, float(single_stream_rate(geom, 0.0, total_power))
    n = max(1, math.ceil(t_max / grid_step))
    ts = np.linspace(0.0, t_max, n + 1)
    rates = np.asarray(single_stream_rate(geom, ts, total_power))
    i = int(np.argmax(rates))
    best_t, best_r = float(ts[i]), float(rates[i])
    lo = float(ts[max(i - 1, 0)])
    hi = float(ts[min(i + 1, n)])
    t_ref, r_ref = _golden_max(
        lambda t: float(single_stream_rate(geom, t, total_power)), lo, hi, refine_tol)
    if r_ref > best_r:
        best_t, best_r = t_ref, r_ref
    return best_t, best_r


def quadratic_coefficients(geom: Geometry, fc_gain: float, total_power: float) -> QuadCoeffs:
    """Coefficients of the dual-stream sum-rate quadratic.

    ``fc_gain`` is the direction-level gain |h2_dir^H fc|^2, so the weak user's
    common gain is n2sq * fc_gain. Valid on the branch t*P > gap.
    """
    if geom.rho <= 0.0:
        raise ValueError("dual-stream coefficients require rho > 0")
    if total_power <= 0.0:
        raise ValueError("total power must be positive")
    g2 = geom.n2sq * fc_gain
    b = 0.5 * geom.n1sq * geom.rho * total_power
    a = 1.0 + geom.gap * b / total_power
    d = 0.5 * geom.n2sq * geom.rho * total_power - g2 * total_power
    c = 1.0 - (geom.gap / total_power) * d + g2 * (total_power - geom.gap)
    return QuadCoeffs(a=a, b=b, c=c, d=d)


def t_star_closed(geom: Geometry, fc_gain: float, total_power: float) -> float:
    """Closed-form maximizer of the dual-stream quadratic, clamped to <= 1.

    When 2*fc_gain - rho vanishes the stationary point degenerates (the rate is
    nondecreasing in t) and all private power is optimal.
    """
    if geom.rho <= 0.0:
        raise ValueError("t_star_closed requires rho > 0")
    den = 2.0 * fc_gain - geom.rho
    if den <= _DEGENERATE_DEN:
        return 1.0
    inv_norms = 1.0 / geom.n1sq + 1.0 / geom.n2sq
    t = (fc_gain / den
         + (0.5 / geom.rho) * inv_norms * (2.0 * (geom.rho - fc_gain) / den) / total_power)
    return min(t, 1.0)


def t_star_high_snr(rho: float, fc_gain: float) -> float:
    """Infinite-power limit of the optimal private fraction."""
    if rho <= 0.0:
        raise ValueError("t_star_high_snr requires rho > 0")
    den = 2.0 * fc_gain - rho
    if den <= _DEGENERATE_DEN:
        return 1.0
    return min(fc_gain / den, 1.0)


def delta_rs_high_snr(rho: float, fc_gain: float) -> float:
    """High-SNR sum-rate gap in bits between the optimized split and t = 1."""
    if t_star_high_snr(rho, fc_gain) >= 1.0:
        return 0.0
    return math.log2(fc_gain * fc_gain / (rho * (2.0 * fc_gain - rho)))


def optimize_t(pair: ChannelPair, total_power: float,
               grid_step: float = 1e-3, refine_tol: float = 1e-9,
               ) -> tuple[float, PowerSplit, float]:
    """Maximize the sum rate over the private power fraction t in [0, 1].

    Two branches are compared: the single-stream branch t <= min(gap/P, 1)
    (searched on a grid since the common direction depends on t there) and the
    dual-stream branch, where the closed-form t* applies. Returns the best
    (t, water-filled split, sum rate in bits).
    """
    if total_power <= 0.0:
        raise ValueError("total power must be positive")
    geom = geometry(pair)
    if math.isfinite(geom.gap):
        t_hi = min(geom.gap / total_power, 1.0)
    else:
        t_hi = 1.0
    best_t, best_rate = maximize_single_stream(
        geom, total_power, t_hi, grid_step, refine_tol)
    if math.isfinite(geom.gap) and geom.gap / total_power < 1.0:
        fc_gain = direction_common_gain(geom.rho)
        t_dual = t_star_closed(geom, fc_gain, total_power)
        t_dual = min(max(t_dual, geom.gap / total_power), 1.0)
        rate_dual = quadratic_coefficients(geom, fc_gain, total_power).sum_rate(t_dual)
        if rate_dual > best_rate:
            best_t, best_rate = t_dual, rate_dual
    split = waterfill(geom, best_t, total_power)
    return best_t, split, zf_sum_rate(geom, split)
