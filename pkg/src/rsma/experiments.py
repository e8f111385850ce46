"""Parameter sweeps and Monte-Carlo studies, with CSV/JSON emission.

Grids are generated as start + i*step (no accumulation) and rounded to 12
decimals so emitted coordinates round-trip exactly. Monte-Carlo trials draw
from per-trial generators seeded with (seed, trial_index), so results are
reproducible and independent of evaluation order.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass

import numpy as np

from .channel import pair_from_rho, rayleigh_pair
from .strategy import StrategyLabel, classify, relative_gain

__all__ = [
    "GAMMA_DB_GRID_DEFAULT",
    "GainCell",
    "GridSpec",
    "McFractions",
    "RHO_GRID_DEFAULT",
    "RegionCell",
    "gain_csv",
    "gain_map",
    "mc_fractions",
    "mc_json",
    "region_csv",
    "region_map",
    "write_text",
]

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class GridSpec:
    """Inclusive arithmetic grid start, start+step, ..., stop."""

    start: float
    stop: float
    step: float

    def __post_init__(self):
        if self.step <= 0.0:
            raise ValueError("grid step must be positive")
        if self.stop < self.start:
            raise ValueError("grid stop must be >= start")
        span = self.stop - self.start
        n = round(span / self.step)
        if abs(n * self.step - span) > 1e-9 * max(1.0, abs(span)):
            raise ValueError("grid span must be an integer number of steps")

    def points(self) -> list[float]:
        n = round((self.stop - self.start) / self.step)
        return [round(self.start + i * self.step, 12) for i in range(n + 1)]

    @classmethod
    def parse(cls, text: str) -> "GridSpec":
        """Parse a 'start:stop:step' string."""
        parts = text.split(":")
        if len(parts) != 3:
            raise ValueError(f"grid spec must be start:stop:step, got {text!r}")
        return cls(float(parts[0]), float(parts[1]), float(parts[2]))


RHO_GRID_DEFAULT = GridSpec(0.0, 1.0, 0.01)
GAMMA_DB_GRID_DEFAULT = GridSpec(-20.0, 0.0, 0.2)


@dataclass(frozen=True)
class RegionCell:
    rho: float
    gamma_db: float
    t_star: float
    p1: float
    p2: float
    pc: float
    rs_bits: float
    label: StrategyLabel


@dataclass(frozen=True)
class GainCell:
    rho: float
    gamma_db: float
    gain_switch_pct: float
    gain_sdma_pct: float
    gain_noma_pct: float


@dataclass(frozen=True)
class McFractions:
    n_t: int
    power_w: float
    gamma_db: float
    trials: int
    seed: int
    fractions: dict[str, float]

    def to_dict(self) -> dict:
        return {
            "n_t": self.n_t,
            "power_w": self.power_w,
            "gamma_db": self.gamma_db,
            "trials": self.trials,
            "seed": self.seed,
            "fractions": dict(self.fractions),
        }


def region_map(power_w: float = 100.0,
               rho_grid: GridSpec = RHO_GRID_DEFAULT,
               gamma_db_grid: GridSpec = GAMMA_DB_GRID_DEFAULT) -> list[RegionCell]:
    """Classify the optimal strategy on a (rho, gamma_db) grid of parametric pairs."""
    cells = []
    gamma_points = gamma_db_grid.points()
    for rho in rho_grid.points():
        for gdb in gamma_points:
            res = classify(pair_from_rho(gdb, rho), power_w)
            cells.append(RegionCell(
                rho=rho, gamma_db=gdb, t_star=res.t,
                p1=res.split.p1, p2=res.split.p2, pc=res.split.pc,
                rs_bits=res.rs, label=res.label))
    log.info("region map: %d cells at P=%g W", len(cells), power_w)
    return cells


def gain_map(power_w: float = 100.0,
             rho_grid: GridSpec = RHO_GRID_DEFAULT,
             gamma_db_grid: GridSpec = GAMMA_DB_GRID_DEFAULT) -> list[GainCell]:
    """Relative sum-rate gains of the optimized sweep on a (rho, gamma_db) grid."""
    cells = []
    gamma_points = gamma_db_grid.points()
    for rho in rho_grid.points():
        for gdb in gamma_points:
            switch, sdma, noma = relative_gain(pair_from_rho(gdb, rho), power_w)
            cells.append(GainCell(rho, gdb, switch, sdma, noma))
    log.info("gain map: %d cells at P=%g W", len(cells), power_w)
    return cells


def mc_fractions(n_t: int, power_w: float, gamma_db: float,
                 trials: int, seed: int) -> McFractions:
    """Fraction of Rayleigh draws on which each strategy maximizes the sum rate."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    counts = {label: 0 for label in StrategyLabel}
    for trial in range(trials):
        rng = np.random.default_rng([seed, trial])
        pair = rayleigh_pair(n_t, gamma_db, rng)
        counts[classify(pair, power_w).label] += 1
    fractions = {label.value: counts[label] / trials for label in StrategyLabel}
    log.info("mc: n_t=%d P=%g gamma_db=%g trials=%d -> %s",
             n_t, power_w, gamma_db, trials, fractions)
    return McFractions(n_t=n_t, power_w=power_w, gamma_db=gamma_db,
                       trials=trials, seed=seed, fractions=fractions)


def _fmt_coord(value: float) -> str:
    return format(value, ".10g")


def _fmt_rate(value: float) -> str:
    return format(value, ".9f")


def region_csv(cells: list[RegionCell]) -> str:
    """Render region cells as CSV (LF line endings, 1e-9-rounded rates)."""
    lines = ["rho,gamma_db,t_star,p1,p2,pc,rs_bits,label"]
    for c in cells:
        lines.append(",".join([
            _fmt_coord(c.rho), _fmt_coord(c.gamma_db),
            _fmt_rate(c.t_star), _fmt_rate(c.p1), _fmt_rate(c.p2),
            _fmt_rate(c.pc), _fmt_rate(c.rs_bits), c.label.value]))
    return "\n".join(lines) + "\n"


def gain_csv(cells: list[GainCell]) -> str:
    lines = ["rho,gamma_db,gain_switch_pct,gain_sdma_pct,gain_noma_pct"]
    for c in cells:
        lines.append(",".join([
            _fmt_coord(c.rho), _fmt_coord(c.gamma_db),
            _fmt_rate(c.gain_switch_pct), _fmt_rate(c.gain_sdma_pct),
            _fmt_rate(c.gain_noma_pct)]))
    return "\n".join(lines) + "\n"


def mc_json(result: McFractions | list[McFractions]) -> str:
    """Render one Monte-Carlo result (or a gamma_db sweep of them) as JSON."""
    if isinstance(result, McFractions):
        payload: object = result.to_dict()
    else:
        payload = [r.to_dict() for r in result]
    return json.dumps(payload, indent=2) + "\n"


def write_text(path: str, text: str) -> None:
    """Write UTF-8 text with LF line endings regardless of platform."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)
