"""``qdesign`` command line: construct sets, evaluate bounds and run optimizers.

Exit codes: 0 success, 2 validation failure, 3 optimizer non-convergence
(results are still written).
"""

from __future__ import annotations

import argparse
import csv
import io as _stringio
import json
import logging
import sys
import time
from dataclasses import asdict, dataclass
from pathlib import Path

import numpy as np

from . import __version__
from . import io as qio
from .core import Ensemble, Povm, QuantumValidationError, born_statistics, tolerances
from .designs import (
    as_ensemble,
    as_povm,
    builtin_mub,
    builtin_sic,
    depolarize,
    ququart_witness_basis,
    validate_generalized_mub,
    validate_generalized_sic,
    validate_mub,
    validate_sic,
)
from .info import (
    accinfo_upper_bound,
    bound_set,
    mutual_information,
    pg_mub_value,
    pg_sic_value,
    scrooge_bounds,
)
from .optimize import (
    OptimizerConfig,
    infopower_via_duality,
    maximize_accessible_info,
    maximize_informational_power,
)

log = logging.getLogger("qdesign")

EXIT_OK, EXIT_INVALID, EXIT_NOT_CONVERGED = 0, 2, 3

FIGURE1_COLUMNS = ["d", "accinfo_upper", "scrooge_lower", "pg_sic", "pg_mub",
                   "sic_optimized", "mub_optimized"]


def _fmt(v) -> str:
    return "" if v is None else f"{v:.9f}"


def _parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    return (int(lo), int(hi)) if sep else (int(lo), int(lo))


def _config(args) -> OptimizerConfig:
    kw = {"seed": args.seed}
    if args.restarts is not None:
        kw["restarts"] = args.restarts
    if getattr(args, "outcomes", None):
        kw["outcome_range"] = _parse_range(args.outcomes)
        kw["allow_large_outcomes"] = args.allow_large_outcomes
    if getattr(args, "max_iters", None):
        kw["max_iters"] = args.max_iters
    return OptimizerConfig(**kw)


@dataclass
class RunManifest:
    """Provenance record written beside every output file."""

    command: str
    config: dict
    optimizer: dict | None
    tolerances: dict
    inputs: dict
    version: str = __version__
    duration_s: float = 0.0

    def write(self, out: Path) -> Path:
        path = out.with_name(out.name + ".manifest.json")
        path.write_text(json.dumps(asdict(self), indent=1, default=str) + "\n")
        return path


def _write_manifest(out: Path, args, started: float, inputs=(), config=None) -> Path:
    return RunManifest(
        command=args.command,
        config={k: v for k, v in vars(args).items() if k != "func"},
        optimizer=None if config is None else asdict(config),
        tolerances=asdict(tolerances()),
        inputs={str(p): qio.file_sha256(p) for p in inputs},
        duration_s=round(time.time() - started, 3),
    ).write(out)


def _emit(text: str, out: Path | None):
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text)


# ---------------------------------------------------------------------------


def cmd_construct(args) -> int:
    started = time.time()
    d, kind = args.dim, args.kind
    tol = args.tolerance
    if args.fiducial:
        obj = qio.load(args.fiducial)
        base = obj if not isinstance(obj, (Ensemble, Povm)) else None
        if base is None:
            raise SystemExit("fiducial file must hold a sic-fiducial or a state set")
    elif kind in ("sic", "gen-sic"):
        base = builtin_sic(d)
    else:
        base = builtin_mub(d)
    if kind in ("sic", "mub"):
        report = (validate_sic if kind == "sic" else validate_mub)(base, tol)
        result = base
    else:
        if args.t is None:
            raise SystemExit(f"{kind} needs --t")
        result = depolarize(base, args.t, kind=kind[4:])
        check = validate_generalized_sic if kind == "gen-sic" else validate_generalized_mub
        report = check(result, tol)
    doc = qio.to_doc(result)
    if kind == "sic" and not args.fiducial:
        doc["kind"] = "state-set"
    text = json.dumps(doc, indent=1) + "\n"
    if args.out:
        out = Path(args.out)
        out.write_text(text)
        _write_manifest(out, args, started, [args.fiducial] if args.fiducial else [])
    else:
        sys.stdout.write(text)
    msg = f"{kind} d={result.dim} states={len(result)} max_deviation={report.max_deviation:.3e}"
    if report.parameter is not None:
        msg += f" parameter={report.parameter:.12g}"
    print(msg + (" PASS" if report.passed else " FAIL"), file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_INVALID


def cmd_mi(args) -> int:
    ensemble = qio.load_ensemble(args.ensemble)
    povm = qio.load_povm(args.povm)
    value = mutual_information(born_statistics(ensemble, povm))
    if args.format == "csv":
        print("ensemble,povm,mutual_information_bits")
        print(f"{args.ensemble},{args.povm},{value:.9f}")
    elif args.format == "json":
        print(json.dumps({"mutual_information_bits": value}))
    else:
        print(f"{value:.9f}")
    return EXIT_OK


def cmd_bounds(args) -> int:
    bounds = bound_set(args.dim, a=args.a, k=args.k)
    rows = bounds.as_rows()
    if args.format == "csv":
        print("d," + ",".join(name for name, _ in rows))
        print(f"{args.dim}," + ",".join(f"{v:.9f}" for _, v in rows))
    elif args.format == "json":
        print(json.dumps({"d": args.dim, **dict(rows)}))
    else:
        width = max(len(name) for name, _ in rows)
        print(f"{'d'.ljust(width)}  {args.dim}")
        for name, v in rows:
            print(f"{name.ljust(width)}  {v:.9f}")
    return EXIT_OK


def _optimization_output(args, result, started, inputs, config) -> int:
    payload = {
        "value_bits": result.value,
        "bound_bits": result.bound,
        "gap": result.bound_gap,
        "converged": result.converged,
        "restarts_agreeing": result.restarts_agreeing,
        "seed": result.seed,
        "maximizer": qio.to_doc(result.maximizer),
        "trace_csv_path": None,
    }
    for key in ("certificate_gap", "oracle_gap", "upper_estimate"):
        if key in result.details:
            payload[key] = float(result.details[key])
    if "rho" in result.details:
        rho = result.details["rho"]
        payload["rho"] = {"re": rho.real.tolist(), "im": rho.imag.tolist()}
    if args.out:
        out = Path(args.out)
        trace_path = out.with_name(out.stem + ".trace.csv")
        trace_path.write_text("iteration,value_bits\n" + "".join(
            f"{i},{v:.15g}\n" for i, v in enumerate(result.trace)))
        payload["trace_csv_path"] = str(trace_path)
        out.write_text(json.dumps(payload, indent=1) + "\n")
        _write_manifest(out, args, started, inputs, config)
    if args.format == "json":
        print(json.dumps(payload, indent=1))
    else:
        print(f"value {result.value:.9f} bits  bound {result.bound:.9f}  gap {result.bound_gap:+.3e}"
              f"  converged={result.converged}")
    return EXIT_OK if result.converged else EXIT_NOT_CONVERGED


def cmd_optimize_accinfo(args) -> int:
    started = time.time()
    ensemble = qio.load_ensemble(args.input)
    cfg = _config(args)
    result = maximize_accessible_info(ensemble, cfg)
    return _optimization_output(args, result, started, [args.input], cfg)


def cmd_optimize_power(args) -> int:
    started = time.time()
    povm = qio.load_povm(args.input)
    cfg = _config(args)
    if args.method == "duality":
        result = infopower_via_duality(povm, cfg)
    else:
        result = maximize_informational_power(povm, cfg)
    return _optimization_output(args, result, started, [args.input], cfg)


def _figure1_sets(d: int, fiducial_dir: Path | None):
    sic = mub = None
    if fiducial_dir is not None:
        for name in (f"sic_d{d}.json", f"sic-fiducial_d{d}.json"):
            if (fiducial_dir / name).exists():
                sic = qio.load(fiducial_dir / name)
        if (fiducial_dir / f"mub_d{d}.json").exists():
            mub = qio.load(fiducial_dir / f"mub_d{d}.json")
    if sic is None and d in (2, 3):
        sic = builtin_sic(d)
    if mub is None and d in (2, 3, 4):
        mub = builtin_mub(d)
    return sic, mub


def figure1_rows(dims, cfg: OptimizerConfig, fiducial_dir: Path | None = None,
                 optimize: bool = True) -> list[dict]:
    rows = []
    for d in dims:
        sic, mub = _figure1_sets(d, fiducial_dir)
        row = {
            "d": d,
            "accinfo_upper": accinfo_upper_bound(d),
            "scrooge_lower": scrooge_bounds(d)[0],
            "pg_sic": pg_sic_value(d),
            "pg_mub": pg_mub_value(d),
            "sic_optimized": None,
            "mub_optimized": None,
        }
        if optimize:
            if sic is not None:
                validate_sic(sic)
                row["sic_optimized"] = maximize_accessible_info(as_ensemble(sic), cfg).value
            else:
                log.warning("no SIC available for d=%d; sic_optimized left blank", d)
            if mub is not None:
                row["mub_optimized"] = maximize_accessible_info(as_ensemble(mub), cfg).value
            else:
                log.warning("no maximal MUB set available for d=%d; mub_optimized left blank", d)
        rows.append(row)
    return rows


def figure1_csv(rows: list[dict]) -> str:
    buf = _stringio.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(FIGURE1_COLUMNS)
    for row in rows:
        writer.writerow([row["d"]] + [_fmt(row[c]) for c in FIGURE1_COLUMNS[1:]])
    return buf.getvalue()


def cmd_figure1(args) -> int:
    started = time.time()
    lo, hi = _parse_range(args.dims)
    cfg = _config(args)
    fid_dir = Path(args.fiducial_dir) if args.fiducial_dir else None
    rows = figure1_rows(range(lo, hi + 1), cfg, fid_dir, optimize=not args.bounds_only)
    text = figure1_csv(rows)
    out = Path(args.out) if args.out else None
    _emit(text, out)
    if out is not None:
        inputs = sorted(fid_dir.glob("*.json")) if fid_dir else []
        _write_manifest(out, args, started, inputs, cfg)
    return EXIT_OK


def conjecture_d4_report(cfg: OptimizerConfig) -> dict:
    mub = builtin_mub(4)
    ensemble, povm = as_ensemble(mub), as_povm(mub)
    basis = ququart_witness_basis()
    q = Povm.from_basis(basis)
    f = Ensemble.from_vectors(np.full(4, 0.25), basis)
    i_eq = mutual_information(born_statistics(ensemble, q))
    i_fp = mutual_information(born_statistics(f, povm))
    opt = maximize_accessible_info(ensemble, cfg)
    return {
        "witness_I(E,Q)": i_eq,
        "witness_I(F,P)": i_fp,
        "witness_pass": abs(i_eq - 0.6) <= 1e-9 and abs(i_fp - 0.6) <= 1e-9,
        "optimized_accessible_info": opt.value,
        "optimizer_converged": opt.converged,
        "conjectured": 0.6,
        "ceiling": accinfo_upper_bound(4),
    }


def cmd_conjecture_d4(args) -> int:
    report = conjecture_d4_report(_config(args))
    if args.format == "json":
        print(json.dumps(report, indent=1))
    else:
        print(f"I(E,Q) witness     {report['witness_I(E,Q)']:.9f}")
        print(f"I(F,P) witness     {report['witness_I(F,P)']:.9f}")
        print(f"witness check      {'pass' if report['witness_pass'] else 'FAIL'} (3/5 within 1e-9)")
        print(f"optimizer A(E)     {report['optimized_accessible_info']:.9f}")
        print(f"conjectured value  {report['conjectured']:.9f}")
        print(f"ceiling log(8/5)   {report['ceiling']:.9f}")
    return EXIT_OK if report["witness_pass"] else EXIT_INVALID


# ---------------------------------------------------------------------------


def _add_optimizer_flags(p: argparse.ArgumentParser, outcomes: bool = True):
    p.add_argument("--restarts", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-iters", type=int, default=None)
    if outcomes:
        p.add_argument("--outcomes", help="outcome-count range m1..m2 (default d..d^2)")
        p.add_argument("--allow-large-outcomes", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qdesign", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="write a validated SIC/MUB (or mixed) set file")
    p.add_argument("kind", choices=["sic", "mub", "gen-sic", "gen-mub"])
    p.add_argument("dim", nargs="?", type=int)
    p.add_argument("--dim", dest="dim_flag", type=int)
    p.add_argument("--t", type=float)
    p.add_argument("--fiducial", help="sic-fiducial or state-set file")
    p.add_argument("--tolerance", type=float, default=1e-9)
    p.add_argument("--out")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("mi", help="mutual information of an ensemble and a POVM")
    p.add_argument("ensemble")
    p.add_argument("povm")
    p.add_argument("--format", choices=["table", "csv", "json"], default="table")
    p.set_defaults(func=cmd_mi)

    p = sub.add_parser("bounds", help="closed-form bounds for dimension d")
    p.add_argument("--dim", type=int, required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--a", type=float, help="arbitrary-rank SIC purity parameter")
    g.add_argument("--k", type=float, help="arbitrary-rank MUB purity parameter")
    p.add_argument("--format", choices=["table", "csv", "json"], default="table")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("optimize-accinfo", help="maximize I(E, P) over POVMs")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--out")
    p.add_argument("--format", choices=["table", "json"], default="table")
    _add_optimizer_flags(p)
    p.set_defaults(func=cmd_optimize_accinfo)

    p = sub.add_parser("optimize-power", help="maximize I(E, P) over ensembles")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--out")
    p.add_argument("--method", choices=["direct", "duality"], default="direct")
    p.add_argument("--format", choices=["table", "json"], default="table")
    _add_optimizer_flags(p)
    p.set_defaults(func=cmd_optimize_power)

    p = sub.add_parser("figure1", help="CSV of bounds and optimized values versus d")
    p.add_argument("--dims", default="2..4", help="dimension range d1..d2")
    p.add_argument("--fiducial-dir", help="directory with sic_d<d>.json / mub_d<d>.json")
    p.add_argument("--bounds-only", action="store_true")
    p.add_argument("--out")
    _add_optimizer_flags(p)
    p.set_defaults(func=cmd_figure1)

    p = sub.add_parser("conjecture-d4", help="check the d=4 MUB witness and optimize")
    p.add_argument("--format", choices=["table", "json"], default="table")
    _add_optimizer_flags(p, outcomes=False)
    p.set_defaults(func=cmd_conjecture_d4)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if args.command == "construct":
        args.dim = args.dim if args.dim is not None else args.dim_flag
        if args.dim is None and not args.fiducial:
            parser.error("construct needs a dimension")
    try:
        return args.func(args)
    except (QuantumValidationError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
