"""Command-line interface: ``qillum {sweep,verify,figure3,discord}``."""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from contextlib import contextmanager
from dataclasses import dataclass

import numpy as np

from .discord import discord_encoded, discord_isotropic, discord_report, verify_theorem
from .entanglement import entanglement_report
from .information import conventional_performance, quantum_performance
from .model import IlluminationConfig, isotropic_state
from .oracle import SearchSettings, conditional_entropy_search
from .linalg import ptrace, von_neumann_entropy

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

COLUMNS = [
    "d", "eta", "p0", "i_q", "i_c_max", "delta_i",
    "discord", "discord_avg", "discord_enc", "concurrence", "eof",
]


@dataclass(frozen=True)
class Range:
    start: float
    end: float
    count: int

    def values(self) -> list[float]:
        if self.count == 1:
            return [self.start]
        return [float(v) for v in np.linspace(self.start, self.end, self.count)]

    def as_dict(self) -> dict:
        return {"start": self.start, "end": self.end, "count": self.count}


def parse_range(text: str) -> Range:
    """``start:end:count`` with inclusive endpoints; a bare number is a one-point range."""
    parts = text.split(":")
    try:
        if len(parts) == 1:
            r = Range(float(parts[0]), float(parts[0]), 1)
        elif len(parts) == 3:
            r = Range(float(parts[0]), float(parts[1]), int(parts[2]))
        else:
            raise ValueError
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected start:end:count, got {text!r}") from None
    if r.count < 1:
        raise argparse.ArgumentTypeError(f"count must be >= 1, got {r.count}")
    return r


def eta_range(text: str) -> Range:
    r = parse_range(text)
    if not (0.0 <= r.start <= 1.0 and 0.0 <= r.end <= 1.0):
        raise argparse.ArgumentTypeError(f"eta range {text!r} leaves [0, 1]")
    return r


def eta_value(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid eta {text!r}") from None
    if not 0.0 <= v <= 1.0:
        raise argparse.ArgumentTypeError(f"eta must lie in [0, 1], got {v}")
    return v


def dimension(text: str) -> int:
    try:
        d = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid dimension {text!r}") from None
    if d < 2:
        raise argparse.ArgumentTypeError(f"dimension must be >= 2, got {d}")
    return d


def prior(text: str) -> float:
    try:
        p = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid prior {text!r}") from None
    if not 0.0 < p < 1.0:
        raise argparse.ArgumentTypeError(f"p0 must lie in (0, 1), got {p}")
    return p


def fmt(x) -> str:
    if x is None:
        return ""
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    return f"{float(x) + 0.0:.12g}"


def sweep_record(cfg: IlluminationConfig) -> dict:
    i_q = quantum_performance(cfg)
    i_c = conventional_performance(cfg)
    rec = {
        "d": cfg.d,
        "eta": cfg.eta,
        "p0": cfg.p0,
        "i_q": i_q,
        "i_c_max": i_c,
        "delta_i": i_q - i_c,
        "discord": discord_isotropic(cfg.d, cfg.eta),
        "discord_avg": discord_isotropic(cfg.d, cfg.p0 * cfg.eta),
        "discord_enc": discord_encoded(cfg),
        "concurrence": None,
        "eof": None,
    }
    if cfg.d == 2:
        ent = entanglement_report(isotropic_state(2, cfg.eta))
        rec["concurrence"], rec["eof"] = ent.concurrence, ent.eof
    return rec


class InconsistentRecord(RuntimeError):
    pass


def sweep_records(ds, p0s, etas, tol: float) -> list[dict]:
    records = []
    for d in ds:
        for p0 in p0s:
            for eta in etas:
                rec = sweep_record(IlluminationConfig(d, eta, p0))
                gap = abs(rec["delta_i"] - rec["discord_enc"])
                if gap > tol:
                    raise InconsistentRecord(
                        f"d={d} eta={eta} p0={p0}: |delta_i - discord_enc| = {gap:.3g} exceeds {tol:g}"
                    )
                records.append(rec)
    return records


def records_csv(records: list[dict]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(COLUMNS)
    for rec in records:
        w.writerow([fmt(rec[c]) for c in COLUMNS])
    return buf.getvalue()


def to_json(obj) -> str:
    return json.dumps(obj, indent=2, allow_nan=False) + "\n"


@contextmanager
def _open_out(path: str):
    if path == "-":
        yield sys.stdout
    else:
        with open(path, "w", newline="", encoding="utf-8") as fh:
            yield fh


def _emit(text: str, path: str) -> None:
    with _open_out(path) as fh:
        fh.write(text)


def cmd_sweep(args) -> int:
    try:
        records = sweep_records(args.d, args.p0, args.eta.values(), args.tol)
    except InconsistentRecord as exc:
        print(f"qillum sweep: aborting, inconsistent record: {exc}", file=sys.stderr)
        return EXIT_FAIL
    _emit(records_csv(records), args.out)
    return EXIT_OK


def cmd_figure3(args) -> int:
    try:
        records = sweep_records([2], [0.5], args.eta.values(), args.tol)
    except InconsistentRecord as exc:
        print(f"qillum figure3: aborting, inconsistent record: {exc}", file=sys.stderr)
        return EXIT_FAIL
    _emit(records_csv(records), args.out)
    return EXIT_OK


def verify_payload(ds, etas: Range, p0s, tol: float, seed: int, samples: int) -> dict:
    configs = [IlluminationConfig(d, eta, p0) for d in ds for p0 in p0s for eta in etas.values()]
    rep = verify_theorem(configs, tol=tol, seed=seed, samples=samples)
    return {
        "schema_version": SCHEMA_VERSION,
        "grid": {"d": list(ds), "eta": etas.as_dict(), "p0": list(p0s)},
        "tolerance": tol,
        "seed": seed,
        "samples_per_config": samples,
        "n_configs": rep.n_configs,
        "max_abs_gap_theorem": float(rep.max_abs_gap_theorem),
        "max_abs_gap_statement_i": float(rep.max_abs_gap_statement_i),
        "max_abs_gap_statement_ii": float(rep.max_abs_gap_statement_ii),
        "flatness_max": float(rep.flatness_max),
        "n_failures": rep.n_failures,
        "failures": [{k: float(v) if k != "d" else v for k, v in f.items()} for f in rep.failures],
        "pass": rep.passed,
    }


def cmd_verify(args) -> int:
    payload = verify_payload(args.d, args.eta, args.p0, args.tol, args.seed, args.restarts)
    _emit(to_json(payload), args.out)
    return EXIT_OK if payload["pass"] else EXIT_FAIL


def discord_payload(cfg: IlluminationConfig, oracle: bool = False, seed: int = 0, restarts: int = 16) -> dict:
    rep = discord_report(cfg)
    out = {"schema_version": SCHEMA_VERSION, "d": cfg.d, "eta": cfg.eta, "p0": cfg.p0}
    out.update({k: float(v) for k, v in rep.as_dict().items()})
    i_q, i_c = quantum_performance(cfg), conventional_performance(cfg)
    out.update({"i_q": float(i_q), "i_c_max": float(i_c), "delta_i": float(i_q - i_c)})
    if cfg.d == 2:
        ent = entanglement_report(isotropic_state(2, cfg.eta))
        out.update({"concurrence": ent.concurrence, "eof": ent.eof})
    if oracle:
        rho = isotropic_state(cfg.d, cfg.eta).matrix
        res = conditional_entropy_search(rho, cfg.d, cfg.d, SearchSettings(seed=seed, restarts=restarts))
        d = cfg.d
        out["oracle"] = {
            "seed": seed,
            "restarts": restarts,
            "conditional_entropy": float(res.value),
            "flatness": float(res.flatness),
            "discord": float(von_neumann_entropy(ptrace(rho, d, d, "B")) - von_neumann_entropy(rho) + res.value),
        }
    return out


def cmd_discord(args) -> int:
    cfg = IlluminationConfig(args.d, args.eta, args.p0)
    _emit(to_json(discord_payload(cfg, args.oracle, args.seed, args.restarts)), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qillum", description="Discord and gain in quantum illumination.")
    sub = parser.add_subparsers(dest="command", required=True)

    def out_flag(p):
        p.add_argument("--out", default="-", help="output path, '-' for standard output")

    p = sub.add_parser("sweep", help="CSV of performances and discord over a parameter grid")
    p.add_argument("--d", type=dimension, nargs="+", default=[2])
    p.add_argument("--p0", type=prior, nargs="+", default=[0.5])
    p.add_argument("--eta", type=eta_range, default=parse_range("0:1:101"), help="start:end:count")
    p.add_argument("--tol", type=float, default=1e-9, help="abort if any |delta_i - discord_enc| exceeds this")
    out_flag(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", help="check gain == encoded discord on a grid, JSON report")
    p.add_argument("--d", type=dimension, nargs="+", default=[2, 3, 4, 5])
    p.add_argument("--p0", type=prior, nargs="+", default=[0.25, 0.5, 0.75])
    p.add_argument("--eta", type=eta_range, default=parse_range("0:1:101"), help="start:end:count")
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--restarts", type=int, default=1, help="random idler measurements per grid point")
    out_flag(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("figure3", help="qubit curves at p0 = 1/2, CSV")
    p.add_argument("--eta", type=eta_range, default=parse_range("0:1:101"), help="start:end:count")
    p.add_argument("--tol", type=float, default=1e-9)
    out_flag(p)
    p.set_defaults(func=cmd_figure3)

    p = sub.add_parser("discord", help="discord report at a single point, JSON")
    p.add_argument("--d", type=dimension, default=2)
    p.add_argument("--eta", type=eta_value, default=0.5)
    p.add_argument("--p0", type=prior, default=0.5)
    p.add_argument("--oracle", action="store_true", help="also run the brute-force conditional entropy search")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--restarts", type=int, default=16)
    out_flag(p)
    p.set_defaults(func=cmd_discord)
    return parser


def _join_negative_values(argv: list[str]) -> list[str]:
    # argparse reads "--eta -0.5:1:10" as two flags; glue values that look like negative numbers
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        nxt = argv[i + 1] if i + 1 < len(argv) else None
        if tok.startswith("--") and "=" not in tok and nxt and len(nxt) > 1 and nxt[0] == "-" and (nxt[1].isdigit() or nxt[1] == "."):
            out.append(f"{tok}={nxt}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv=None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    args = parser.parse_args(_join_negative_values(argv))
    if getattr(args, "tol", 0.0) < 0:
        parser.error("--tol must be non-negative")
    if getattr(args, "restarts", 1) < 1:
        parser.error("--restarts must be >= 1")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
