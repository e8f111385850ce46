"""Pydantic request/response models for the HTTP service.

Infinite values (the disparity gap for aligned channels, percent gains over a
zero-rate baseline) are transported as JSON null.
"""

from __future__ import annotations

import math
from typing import Literal, Optional

from pydantic import BaseModel, Field, model_validator


def json_float(value: float) -> Optional[float]:
    """Map non-finite floats to None for JSON transport."""
    return value if math.isfinite(value) else None


class GridSpecModel(BaseModel):
    start: float
    stop: float
    step: float = Field(gt=0.0)


class ChannelSpec(BaseModel):
    """Parametric channel: strength ratio in dB plus exactly one of rho/theta."""

    gamma_db: float = Field(le=0.0, description="20*log10 of the strength ratio, <= 0")
    rho: Optional[float] = Field(default=None, ge=0.0, le=1.0)
    theta: Optional[float] = Field(default=None, description="direction phase angle, radians")

    @model_validator(mode="after")
    def _one_direction_spec(self):
        if (self.rho is None) == (self.theta is None):
            raise ValueError("specify exactly one of rho or theta")
        return self


class PowerSpec(BaseModel):
    """Transmit power in watts, or SNR in dB with the noise power fixed at 1."""

    power_w: Optional[float] = Field(default=None, gt=0.0)
    snr_db: Optional[float] = None

    @model_validator(mode="after")
    def _one_power_spec(self):
        if self.power_w is not None and self.snr_db is not None:
            raise ValueError("specify at most one of power_w or snr_db")
        return self

    def watts(self, default: float = 100.0) -> float:
        if self.power_w is not None:
            return self.power_w
        if self.snr_db is not None:
            return 10.0 ** (self.snr_db / 10.0)
        return default


class EvalRequest(PowerSpec, ChannelSpec):
    pass


class GeometryModel(BaseModel):
    rho: float
    n1sq: float
    n2sq: float
    gap: Optional[float] = Field(description="null means infinite (aligned channels)")


class StrategyEvalModel(BaseModel):
    label: str
    t: float
    pc: float
    p1: float
    p2: float
    rs_bits: float


class EvalResponse(BaseModel):
    power_w: float
    geometry: GeometryModel
    strategies: dict[str, StrategyEvalModel]
    best: str


class RegionMapRequest(PowerSpec):
    rho_grid: Optional[GridSpecModel] = None
    gamma_db_grid: Optional[GridSpecModel] = None
    format: Literal["csv", "json"] = "csv"


class GainMapRequest(RegionMapRequest):
    pass


class RegionCellModel(BaseModel):
    rho: float
    gamma_db: float
    t_star: float
    p1: float
    p2: float
    pc: float
    rs_bits: float
    label: str


class GainCellModel(BaseModel):
    rho: float
    gamma_db: float
    gain_switch_pct: Optional[float]
    gain_sdma_pct: Optional[float]
    gain_noma_pct: Optional[float]


class McRequest(PowerSpec):
    n_t: int = Field(default=2, ge=2)
    gamma_db: float = Field(le=0.0)
    trials: int = Field(default=10000, ge=1)
    seed: int = 0


class McResponse(BaseModel):
    n_t: int
    power_w: float
    gamma_db: float
    trials: int
    seed: int
    fractions: dict[str, float]
