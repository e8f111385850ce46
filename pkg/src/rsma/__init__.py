"""Two-user MISO rate-splitting analysis.

Core library for the closed-form precoders, water-filling power allocation,
strategy classification, and the sweep/Monte-Carlo experiments; an HTTP
service and a thin CLI client sit on top.
"""

from .allocation import (
    PowerSplit,
    QuadCoeffs,
    Regime,
    delta_rs_high_snr,
    optimize_t,
    quadratic_coefficients,
    t_star_closed,
    t_star_high_snr,
    waterfill,
)
from .channel import (
    ChannelPair,
    Geometry,
    geometry,
    pair_from_rho,
    parametric_pair,
    rayleigh_pair,
)
from .experiments import (
    GridSpec,
    McFractions,
    RegionCell,
    gain_map,
    mc_fractions,
    region_map,
)
from .precoding import (
    CommonPrecoderSolution,
    PrivateDirections,
    direction_only_common,
    maxmin_common_direction,
    zf_directions,
)
from .rates import (
    PrecoderSet,
    RateReport,
    rate_common,
    rate_private,
    sum_rate_high_snr,
    sum_rate_zf,
)
from .strategy import StrategyLabel, StrategyResult, classify, evaluate, relative_gain

__version__ = "0.1.0"

__all__ = [
    "ChannelPair",
    "CommonPrecoderSolution",
    "Geometry",
    "GridSpec",
    "McFractions",
    "PowerSplit",
    "PrecoderSet",
    "PrivateDirections",
    "QuadCoeffs",
    "RateReport",
    "RegionCell",
    "Regime",
    "StrategyLabel",
    "StrategyResult",
    "classify",
    "delta_rs_high_snr",
    "direction_only_common",
    "evaluate",
    "gain_map",
    "geometry",
    "maxmin_common_direction",
    "mc_fractions",
    "optimize_t",
    "pair_from_rho",
    "parametric_pair",
    "quadratic_coefficients",
    "rate_common",
    "rate_private",
    "rayleigh_pair",
    "region_map",
    "relative_gain",
    "sum_rate_high_snr",
    "sum_rate_zf",
    "t_star_closed",
    "t_star_high_snr",
    "waterfill",
    "zf_directions",
    "__version__",
]
