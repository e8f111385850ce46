"""HTTP service exposing single-point strategy evaluation and the experiment
sweeps. All handlers are synchronous compute wrappers around the core library;
map and Monte-Carlo requests can take seconds to minutes at full grid sizes.
"""

from __future__ import annotations

from fastapi import FastAPI, Response

from .. import __version__
from ..channel import ChannelPair, geometry, pair_from_rho, parametric_pair
from ..experiments import (
    GAMMA_DB_GRID_DEFAULT,
    RHO_GRID_DEFAULT,
    GridSpec,
    gain_csv,
    gain_map,
    mc_fractions,
    region_csv,
    region_map,
)
from ..strategy import StrategyLabel, evaluate
from .schemas import (
    EvalRequest,
    EvalResponse,
    GainCellModel,
    GainMapRequest,
    GeometryModel,
    GridSpecModel,
    McRequest,
    McResponse,
    RegionCellModel,
    RegionMapRequest,
    StrategyEvalModel,
    json_float,
)

app = FastAPI(
    title="rsma",
    version=__version__,
    description="Two-user MISO rate-splitting strategy analysis",
)


def _pair_from_spec(req: EvalRequest) -> ChannelPair:
    if req.rho is not None:
        return pair_from_rho(req.gamma_db, req.rho)
    return parametric_pair(req.gamma_db, req.theta, 2)


def _grid(model: GridSpecModel | None, default: GridSpec) -> GridSpec:
    if model is None:
        return default
    return GridSpec(model.start, model.stop, model.step)


@app.get("/health")
def health() -> dict:
    return {"status": "ok", "version": __version__}


@app.post("/eval", response_model=EvalResponse)
def eval_point(req: EvalRequest) -> EvalResponse:
    power = req.watts()
    pair = _pair_from_spec(req)
    geom = geometry(pair)
    strategies = {}
    for label in StrategyLabel:
        res = evaluate(label, pair, power)
        strategies[label.value] = StrategyEvalModel(
            label=res.label.value, t=res.t, pc=res.split.pc,
            p1=res.split.p1, p2=res.split.p2, rs_bits=res.rs)
    return EvalResponse(
        power_w=power,
        geometry=GeometryModel(rho=geom.rho, n1sq=geom.n1sq, n2sq=geom.n2sq,
                               gap=json_float(geom.gap)),
        strategies=strategies,
        best=strategies[StrategyLabel.RS.value].label,
    )


@app.post("/region-map")
def region_map_endpoint(req: RegionMapRequest):
    cells = region_map(req.watts(),
                       _grid(req.rho_grid, RHO_GRID_DEFAULT),
                       _grid(req.gamma_db_grid, GAMMA_DB_GRID_DEFAULT))
    if req.format == "csv":
        return Response(content=region_csv(cells), media_type="text/csv")
    return {"cells": [RegionCellModel(
        rho=c.rho, gamma_db=c.gamma_db, t_star=c.t_star, p1=c.p1, p2=c.p2,
        pc=c.pc, rs_bits=c.rs_bits, label=c.label.value) for c in cells]}


@app.post("/gain-map")
def gain_map_endpoint(req: GainMapRequest):
    cells = gain_map(req.watts(),
                     _grid(req.rho_grid, RHO_GRID_DEFAULT),
                     _grid(req.gamma_db_grid, GAMMA_DB_GRID_DEFAULT))
    if req.format == "csv":
        return Response(content=gain_csv(cells), media_type="text/csv")
    return {"cells": [GainCellModel(
        rho=c.rho, gamma_db=c.gamma_db,
        gain_switch_pct=json_float(c.gain_switch_pct),
        gain_sdma_pct=json_float(c.gain_sdma_pct),
        gain_noma_pct=json_float(c.gain_noma_pct)) for c in cells]}


@app.post("/mc", response_model=McResponse)
def mc_endpoint(req: McRequest) -> McResponse:
    result = mc_fractions(req.n_t, req.watts(), req.gamma_db, req.trials, req.seed)
    return McResponse(**result.to_dict())
