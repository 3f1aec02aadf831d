"""Command-line front end: classify, scan, sample, thresholds, version.

Exit codes: 0 temporally explainable, 10 atemporal, 2 validation error,
3 unsamplable setting marginal.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from . import __version__
from .atemporality import Classification, classify, forward_robustness, reverse_robustness
from .entanglement import example1_thresholds, ppt_nu_minus
from .errors import GatempError, NegativeRadicand, UnsamplableMarginal
from .linalg import I2
from .measurement import ALL_SETTINGS, classify_with_confidence, estimate_cm, sample_all_settings
from .states import (
    SpaceTimeCM,
    from_json_dict,
    is_physical_spatial,
    random_mixed_state,
    random_pure_state,
    to_standard_form,
    two_mode_squeezed_thermal,
)

EXIT_TEMPORAL = 0
EXIT_ATEMPORAL = 10
EXIT_VALIDATION = 2
EXIT_UNSAMPLABLE = 3

FAMILIES = ("example1", "example2", "example3", "tmsv-curve", "random-pure", "random-mixed")

VALUE_COLUMNS = ("forward_f", "reverse_f", "total_f", "log_negativity", "nu_minus", "physical")


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return "%.12g" % value
    return str(value)


def _parse_range(text: str, name: str) -> np.ndarray:
    try:
        lo, hi, steps = text.split(":")
        lo, hi, steps = float(lo), float(hi), int(steps)
    except ValueError:
        raise ValueError(f"--{name} must look like min:max:steps")
    if steps < 2:
        raise ValueError(f"--{name} needs at least 2 steps")
    return np.linspace(lo, hi, steps)


def _error_exit(exc: Exception, code: int) -> int:
    print(json.dumps({"error": type(exc).__name__, "message": str(exc)}))
    return code


def _read_state(path: str) -> SpaceTimeCM:
    raw = sys.stdin.read() if path == "-" else open(path, "r", encoding="utf-8").read()
    return from_json_dict(json.loads(raw))


# ---------------------------------------------------------------- scan rows


def _example2_cm(u: float, v: float) -> SpaceTimeCM:
    s = (u + v) / 2.0
    d = (u - v) / 2.0
    return SpaceTimeCM(s * I2.copy(), s * I2.copy(), np.diag([-d, d]))


def _example3_cm(v1: float, v2: float, eta: float) -> SpaceTimeCM:
    rt = math.sqrt(eta)
    v_b = np.diag([1.0 + (v1 - 1.0) * eta, 1.0 + (v2 - 1.0) * eta])
    return SpaceTimeCM(np.diag([v1, v2]), v_b, np.diag([v1 * rt, v2 * rt]))


def _values_for(cm: SpaceTimeCM) -> dict:
    fwd = forward_robustness(cm)
    rev = reverse_robustness(cm)
    physical = is_physical_spatial(cm)
    try:
        nu = ppt_nu_minus(cm)
    except NegativeRadicand:
        nu = None
    logneg = max(0.0, -math.log(nu)) if (physical and nu is not None and nu > 0.0) else None
    return {
        "forward_f": fwd,
        "reverse_f": rev,
        "total_f": min(fwd, rev),
        "log_negativity": logneg,
        "nu_minus": nu,
        "physical": physical,
    }


def _point_row(task: tuple) -> dict:
    family, params = task
    if family == "example1":
        cm = two_mode_squeezed_thermal(params["v"], params["r"])
    elif family == "example2":
        cm = _example2_cm(params["u"], params["v"])
    elif family == "example3":
        cm = _example3_cm(params["v1"], params["v2"], params["eta"])
    elif family == "tmsv-curve":
        cm = two_mode_squeezed_thermal(params["v"], params["r"])
    elif family == "random-pure":
        cm = random_pure_state(params["seed"])
    else:  # random-mixed
        cm = random_mixed_state(params["seed"], params["v"])
    row = {k: v for k, v in params.items() if k != "seed"}
    row.update(_values_for(cm))
    return row


def _scan_tasks(args) -> tuple[list[tuple], list[str]]:
    fam = args.family
    if fam == "example1":
        vs = _parse_range(args.v or "1:2:41", "v")
        rs = _parse_range(args.r or "0:1:41", "r")
        tasks = [(fam, {"v": float(v), "r": float(r)}) for v in vs for r in rs]
        params = ["v", "r"]
    elif fam == "example2":
        us = _parse_range(args.u or "0.2:3:60", "u")
        vs = _parse_range(args.v or "0.2:3:60", "v")
        tasks = []
        for u in us:
            for v in vs:
                if u * v < 1.0 and not args.include_unphysical:
                    continue
                tasks.append((fam, {"u": float(u), "v": float(v)}))
        params = ["u", "v"]
    elif fam == "example3":
        etas = [float(x) for x in (args.eta or "0.3,0.5,0.7,0.9").split(",")]
        v1s = _parse_range(args.v1 or "0.25:3:30", "v1")
        v2s = _parse_range(args.v2 or "0.25:3:30", "v2")
        tasks = []
        for eta in etas:
            for v1 in v1s:
                for v2 in v2s:
                    if v1 * v2 < 1.0 and not args.include_unphysical:
                        continue
                    tasks.append((fam, {"eta": eta, "v1": float(v1), "v2": float(v2)}))
        params = ["eta", "v1", "v2"]
    elif fam == "tmsv-curve":
        rs = _parse_range(args.r or "0.005:1:200", "r")
        v0 = args.v0
        tasks = [(fam, {"v": v0, "r": float(r)}) for r in rs]
        params = ["v", "r"]
    elif fam == "random-pure":
        n = args.samples if args.samples is not None else 5000
        rng = np.random.default_rng(args.seed)
        seeds = rng.integers(0, 2**63 - 1, size=n)
        tasks = [(fam, {"index": i, "seed": int(s)}) for i, s in enumerate(seeds)]
        params = ["index"]
    elif fam == "random-mixed":
        n = args.samples if args.samples is not None else 20000
        rng = np.random.default_rng(args.seed)
        seeds = rng.integers(0, 2**63 - 1, size=n)
        tasks = [(fam, {"index": i, "seed": int(s), "v": args.v0}) for i, s in enumerate(seeds)]
        params = ["index", "v"]
    else:
        raise ValueError(f"unknown family {fam!r}")
    return tasks, params


def cmd_scan(args) -> int:
    tasks, param_cols = _scan_tasks(args)
    workers = args.workers or int(os.environ.get("GATEMP_WORKERS", "1"))
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_point_row, tasks, chunksize=256))
    else:
        rows = [_point_row(t) for t in tasks]
    header = param_cols + list(VALUE_COLUMNS)
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(_fmt(row.get(col)) for col in header))
    text = "\n".join(lines) + "\n"
    with open(args.out, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)
    return 0


# -------------------------------------------------------------- classify


def cmd_classify(args) -> int:
    try:
        cm = _read_state(args.input)
        report = classify(cm)
    except (GatempError, ValueError, json.JSONDecodeError) as exc:
        return _error_exit(exc, EXIT_VALIDATION)
    print(json.dumps(report.to_json_dict()))
    return EXIT_ATEMPORAL if report.classification is Classification.ATEMPORAL else EXIT_TEMPORAL


# ---------------------------------------------------------------- sample


def cmd_sample(args) -> int:
    try:
        if args.input:
            cm = _read_state(args.input)
        elif args.family == "tmsv":
            cm = two_mode_squeezed_thermal(args.v0, args.r0)
        elif args.family == "example3":
            cm = _example3_cm(args.v1_0, args.v2_0, args.eta0)
        else:
            raise ValueError("sample needs --input or --family {tmsv, example3}")
        std, _ = to_standard_form(cm)
        batches = sample_all_settings(std, args.n, args.seed)
    except UnsamplableMarginal as exc:
        return _error_exit(exc, EXIT_UNSAMPLABLE)
    except (GatempError, ValueError, json.JSONDecodeError) as exc:
        return _error_exit(exc, EXIT_VALIDATION)

    est = estimate_cm(batches)
    report, uncertain = classify_with_confidence(est, seed=args.seed + 1)

    with open(args.out + ".samples.csv", "w", encoding="utf-8", newline="") as fh:
        fh.write("setting_a,setting_b,x_a,x_b\n")
        for setting in ALL_SETTINGS:
            batch = batches[setting]
            qa = setting[0] or ""
            qb = setting[1] or ""
            for rec in batch.outcomes:
                if setting[0] is None:
                    xa, xb = "", _fmt(float(rec[0]))
                elif setting[1] is None:
                    xa, xb = _fmt(float(rec[0])), ""
                else:
                    xa, xb = _fmt(float(rec[0])), _fmt(float(rec[1]))
                fh.write(f"{qa},{qb},{xa},{xb}\n")

    with open(args.out + ".estimate.json", "w", encoding="utf-8") as fh:
        json.dump(
            {
                "estimate": est.estimate.to_json_dict(),
                "standard_errors": est.standard_errors.tolist(),
                "n_per_setting": est.n_per_setting,
            },
            fh,
        )

    payload = report.to_json_dict()
    payload["boundary_uncertain"] = uncertain
    print(json.dumps(payload))
    return EXIT_ATEMPORAL if report.classification is Classification.ATEMPORAL else EXIT_TEMPORAL


def cmd_thresholds(args) -> int:
    try:
        r_ent, r_atemp = example1_thresholds(args.v0)
    except GatempError as exc:
        return _error_exit(exc, EXIT_VALIDATION)
    print(json.dumps({"v": args.v0, "r_ent": r_ent, "r_atemp": r_atemp}))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gatemp")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify a JSON state descriptor")
    p.add_argument("--input", required=True, help="path to state JSON, or - for stdin")

    p = sub.add_parser("scan", help="parameter scan emitting CSV")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--out", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=None, help="random-family sample count")
    p.add_argument("--u", default=None, help="range min:max:steps")
    p.add_argument("--v", default=None, help="range min:max:steps")
    p.add_argument("--r", default=None, help="range min:max:steps")
    p.add_argument("--v1", default=None, help="range min:max:steps")
    p.add_argument("--v2", default=None, help="range min:max:steps")
    p.add_argument("--eta", default=None, help="comma-separated list")
    p.add_argument("--v0", type=float, default=1.0, help="fixed variance for tmsv-curve / mixedness")
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--include-unphysical", action="store_true")

    p = sub.add_parser("sample", help="simulate homodyne rounds and re-estimate")
    p.add_argument("--input", default=None)
    p.add_argument("--family", default=None, choices=("tmsv", "example3"))
    p.add_argument("--v0", type=float, default=1.0)
    p.add_argument("--r0", type=float, default=0.5)
    p.add_argument("--v1-0", dest="v1_0", type=float, default=0.5)
    p.add_argument("--v2-0", dest="v2_0", type=float, default=2.0)
    p.add_argument("--eta0", type=float, default=0.5)
    p.add_argument("--n", type=int, default=10000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True, help="output path prefix")

    p = sub.add_parser("thresholds", help="print squeezed-thermal thresholds")
    p.add_argument("--v", dest="v0", type=float, required=True)

    sub.add_parser("version", help="print version")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "classify":
        code = cmd_classify(args)
    elif args.command == "scan":
        try:
            code = cmd_scan(args)
        except (GatempError, ValueError) as exc:
            code = _error_exit(exc, EXIT_VALIDATION)
    elif args.command == "sample":
        code = cmd_sample(args)
    elif args.command == "thresholds":
        code = cmd_thresholds(args)
    else:
        print(__version__)
        code = 0
    return code


if __name__ == "__main__":
    sys.exit(main())
