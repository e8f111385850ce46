"""The five named transmission strategies as constrained specializations of the
rate-splitting power sweep, plus classification of the sum-rate maximizer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .allocation import (
    PowerSplit,
    maximize_single_stream,
    optimize_t,
    single_stream_split,
    waterfill,
    zf_sum_rate,
)
from .channel import ChannelPair, geometry

__all__ = [
    "CLASSIFY_TOL",
    "StrategyLabel",
    "StrategyResult",
    "classify",
    "classify_split",
    "evaluate",
    "relative_gain",
]

# Absolute tolerance on t, relative tolerance (vs P) on powers, when matching an
# optimized operating point to one of the named schemes.
CLASSIFY_TOL = 1e-6


class StrategyLabel(str, Enum):
    RS = "RS"
    SDMA = "SDMA"
    NOMA = "NOMA"
    OMA = "OMA"
    MULTICAST = "Multicast"


@dataclass(frozen=True)
class StrategyResult:
    label: StrategyLabel
    t: float
    split: PowerSplit
    rs: float


def classify_split(t: float, split: PowerSplit, total_power: float,
                   tol: float = CLASSIFY_TOL) -> StrategyLabel:
    """Label an operating point. Ties resolve toward the most specialized scheme
    (Multicast, then OMA, then NOMA, then SDMA, then RS)."""
    at_zero = t <= tol
    at_one = t >= 1.0 - tol
    p2_off = split.p2 <= tol * total_power
    if at_zero:
        return StrategyLabel.MULTICAST
    if at_one and p2_off:
        return StrategyLabel.OMA
    if p2_off and not at_one:
        return StrategyLabel.NOMA
    if at_one:
        return StrategyLabel.SDMA
    return StrategyLabel.RS


def evaluate(strategy: StrategyLabel, pair: ChannelPair, total_power: float) -> StrategyResult:
    """Best operating point of one strategy under ZF privates and the max-min
    common precoder.

    RS sweeps t freely; SDMA fixes t = 1 with water-filled privates; NOMA turns
    stream 2 off and sweeps t; OMA serves only user 1; Multicast sends the
    common stream alone. The returned label reflects the achieved point, so a
    degenerate optimum is reported as the scheme it collapses to.
    """
    if total_power <= 0.0:
        raise ValueError("total power must be positive")
    geom = geometry(pair)
    if strategy is StrategyLabel.RS:
        t, split, rs = optimize_t(pair, total_power)
    elif strategy is StrategyLabel.SDMA:
        t = 1.0
        split = waterfill(geom, t, total_power)
        rs = zf_sum_rate(geom, split)
    elif strategy is StrategyLabel.NOMA:
        t, _ = maximize_single_stream(geom, total_power, 1.0)
        split = single_stream_split(geom, t, total_power)
        rs = zf_sum_rate(geom, split)
    elif strategy is StrategyLabel.OMA:
        t = 1.0
        split = single_stream_split(geom, t, total_power)
        rs = zf_sum_rate(geom, split)
    elif strategy is StrategyLabel.MULTICAST:
        t = 0.0
        split = single_stream_split(geom, t, total_power)
        rs = zf_sum_rate(geom, split)
    else:
        raise ValueError(f"unknown strategy: {strategy!r}")
    return StrategyResult(classify_split(t, split, total_power), t, split, rs)


def classify(pair: ChannelPair, total_power: float) -> StrategyResult:
    """Sum-rate-maximizing operating point and the scheme it corresponds to."""
    t, split, rs = optimize_t(pair, total_power)
    return StrategyResult(classify_split(t, split, total_power), t, split, rs)


def relative_gain(pair: ChannelPair, total_power: float) -> tuple[float, float, float]:
    """Percent sum-rate gains of the optimized sweep over (a) dynamic switching
    between SDMA and NOMA, (b) SDMA alone, (c) NOMA alone.

    A zero-rate baseline (SDMA under aligned channels) yields an infinite
    percentage. Sub-noise negative values from the optimizer tolerance are
    snapped to zero.
    """
    rs_best = evaluate(StrategyLabel.RS, pair, total_power).rs
    rs_sdma = evaluate(StrategyLabel.SDMA, pair, total_power).rs
    rs_noma = evaluate(StrategyLabel.NOMA, pair, total_power).rs

    def pct(base: float) -> float:
        if base <= 0.0:
            return math.inf if rs_best > base else 0.0
        val = 100.0 * (rs_best - base) / base
        if -1e-6 < val < 0.0:
            return 0.0
        return val

    return pct(max(rs_sdma, rs_noma)), pct(rs_sdma), pct(rs_noma)
