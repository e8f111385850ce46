"""Command-line front end.

The CLI is a thin HTTP client of the service layer: by default it mounts the
app in-process, and with --server it talks to a running instance instead, so
scripted sweeps and a shared deployment behave identically.

Exit codes: 0 success, 1 I/O or server failure, 2 flag/config validation error.
Set RSMA_LOG=INFO (or DEBUG) for progress logging.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys

import httpx

from .experiments import GridSpec

DEFAULT_POWER_W = 100.0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rsma",
        description="Two-user MISO rate-splitting strategy analysis",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--config", help="JSON file of flag defaults (flags override)")
        p.add_argument("--server", help="base URL of a running service; default runs in-process")
        p.add_argument("--power", type=float, default=None,
                       help="total transmit power in W (noise power is 1)")
        p.add_argument("--snr-db", type=float, default=None,
                       help="SNR in dB; alias for --power via P = 10^(snr/10)")

    p_eval = sub.add_parser("eval", help="evaluate all five strategies on one channel")
    add_common(p_eval)
    p_eval.add_argument("--gamma-db", type=float, default=None,
                        help="user-2/user-1 strength ratio in dB (<= 0)")
    p_eval.add_argument("--rho", type=float, default=None,
                        help="direction orthogonality in [0, 1]")
    p_eval.add_argument("--theta", type=float, default=None,
                        help="direction phase angle in radians")
    p_eval.add_argument("--out", default=None, help="also write the JSON to this path")

    for name, help_text in (("region-map", "strategy regions over a (rho, gamma_db) grid"),
                            ("gain-map", "relative sum-rate gains over a (rho, gamma_db) grid")):
        p_map = sub.add_parser(name, help=help_text)
        add_common(p_map)
        p_map.add_argument("--rho-grid", default=None, metavar="START:STOP:STEP",
                           help="rho grid (dimensionless), default 0:1:0.01")
        p_map.add_argument("--gamma-db-grid", default=None, metavar="START:STOP:STEP",
                           help="gamma grid in dB, default -20:0:0.2")
        p_map.add_argument("--out", default=None, help="output file path")
        p_map.add_argument("--format", choices=["csv", "json"], default=None,
                           help="output format (default csv)")

    p_mc = sub.add_parser("mc", help="Monte-Carlo preferred-strategy fractions")
    add_common(p_mc)
    p_mc.add_argument("--nt", type=int, default=None, help="number of transmit antennas (>= 2)")
    p_mc.add_argument("--gamma-db", type=float, default=None,
                      help="user-2 relative strength in dB (<= 0)")
    p_mc.add_argument("--gamma-db-grid", default=None, metavar="START:STOP:STEP",
                      help="sweep gamma in dB; emits a JSON array")
    p_mc.add_argument("--trials", type=int, default=None, help="number of channel draws")
    p_mc.add_argument("--seed", type=int, default=None, help="base seed for the per-trial streams")
    p_mc.add_argument("--out", default=None, help="output file path")

    p_serve = sub.add_parser("serve", help="run the HTTP service")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000)

    return parser


def _apply_config(args: argparse.Namespace, parser: argparse.ArgumentParser) -> None:
    """Fill unset flags from a flat key/value JSON config file."""
    if not getattr(args, "config", None):
        return
    try:
        with open(args.config, encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        parser.error(f"--config: cannot read {args.config}: {exc}")
    if not isinstance(data, dict):
        parser.error("--config: file must contain a flat JSON object")
    for key, value in data.items():
        attr = key.replace("-", "_")
        if hasattr(args, attr) and getattr(args, attr) is None:
            setattr(args, attr, value)


def _power_payload(args: argparse.Namespace, parser: argparse.ArgumentParser) -> dict:
    if args.power is not None and args.snr_db is not None:
        parser.error("--power and --snr-db are mutually exclusive")
    if args.power is not None:
        return {"power_w": args.power}
    if args.snr_db is not None:
        return {"snr_db": args.snr_db}
    return {"power_w": DEFAULT_POWER_W}


def _grid_payload(text: str | None, flag: str, parser: argparse.ArgumentParser) -> dict | None:
    if text is None:
        return None
    try:
        spec = GridSpec.parse(str(text))
    except ValueError as exc:
        parser.error(f"{flag}: {exc}")
    return {"start": spec.start, "stop": spec.stop, "step": spec.step}


def _client(server: str | None) -> httpx.Client:
    if server:
        return httpx.Client(base_url=server, timeout=None)
    # In-process transport over the same HTTP surface a remote server exposes.
    from fastapi.testclient import TestClient

    from .service.app import app

    return TestClient(app)


def _post(args: argparse.Namespace, path: str, payload: dict) -> httpx.Response:
    with _client(getattr(args, "server", None)) as client:
        resp = client.post(path, json=payload)
    if resp.status_code == 422:
        detail = resp.json().get("detail", resp.text)
        print(f"rsma: invalid request: {detail}", file=sys.stderr)
        raise SystemExit(2)
    if resp.status_code != 200:
        print(f"rsma: server error {resp.status_code}: {resp.text}", file=sys.stderr)
        raise SystemExit(1)
    return resp


def _write_out(path: str, text: str) -> None:
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"rsma: cannot write {path}: {exc}", file=sys.stderr)
        raise SystemExit(1)


def _cmd_eval(args, parser) -> int:
    if args.gamma_db is None:
        parser.error("--gamma-db is required")
    if (args.rho is None) == (args.theta is None):
        parser.error("specify exactly one of --rho or --theta")
    payload = {"gamma_db": args.gamma_db, "rho": args.rho, "theta": args.theta}
    payload.update(_power_payload(args, parser))
    resp = _post(args, "/eval", payload)
    text = json.dumps(resp.json(), indent=2) + "\n"
    if args.out:
        _write_out(args.out, text)
    sys.stdout.write(text)
    return 0


def _cmd_map(args, parser, path: str) -> int:
    if args.out is None:
        parser.error("--out is required")
    fmt = args.format or "csv"
    payload = {"format": fmt}
    payload.update(_power_payload(args, parser))
    rho_grid = _grid_payload(args.rho_grid, "--rho-grid", parser)
    gamma_grid = _grid_payload(args.gamma_db_grid, "--gamma-db-grid", parser)
    if rho_grid:
        payload["rho_grid"] = rho_grid
    if gamma_grid:
        payload["gamma_db_grid"] = gamma_grid
    resp = _post(args, path, payload)
    if fmt == "csv":
        _write_out(args.out, resp.text)
    else:
        _write_out(args.out, json.dumps(resp.json(), indent=2) + "\n")
    return 0


def _cmd_mc(args, parser) -> int:
    if args.out is None:
        parser.error("--out is required")
    if (args.gamma_db is None) == (args.gamma_db_grid is None):
        parser.error("specify exactly one of --gamma-db or --gamma-db-grid")
    base = {
        "n_t": args.nt if args.nt is not None else 2,
        "trials": args.trials if args.trials is not None else 10000,
        "seed": args.seed if args.seed is not None else 0,
    }
    base.update(_power_payload(args, parser))
    if args.gamma_db is not None:
        gammas = [args.gamma_db]
    else:
        grid = _grid_payload(args.gamma_db_grid, "--gamma-db-grid", parser)
        gammas = GridSpec(grid["start"], grid["stop"], grid["step"]).points()
    results = []
    for gdb in gammas:
        resp = _post(args, "/mc", dict(base, gamma_db=gdb))
        results.append(resp.json())
    payload = results[0] if args.gamma_db is not None else results
    _write_out(args.out, json.dumps(payload, indent=2) + "\n")
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    from .service.app import app

    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=os.environ.get("RSMA_LOG", "WARNING").upper(),
                        format="%(levelname)s %(name)s: %(message)s")
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command != "serve":
        _apply_config(args, parser)
    if args.command == "eval":
        return _cmd_eval(args, parser)
    if args.command == "region-map":
        return _cmd_map(args, parser, "/region-map")
    if args.command == "gain-map":
        return _cmd_map(args, parser, "/gain-map")
    if args.command == "mc":
        return _cmd_mc(args, parser)
    if args.command == "serve":
        return _cmd_serve(args)
    parser.error(f"unknown command {args.command!r}")
    return 2


if __name__ == "__main__":
    raise SystemExit(main())
