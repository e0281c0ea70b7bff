"""Command line entry point: ``burstgrand <command> ...``."""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .channel import GilbertParams
from .decoder import GrandDecoder, dump_code, load_code, random_linear_code
from .patterns import render
from .sim import ExperimentConfig, emit_pattern_table, run_experiment


def _write(text: str, out):
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _budget(value: str):
    if value.lower() in ("none", "unlimited", "0"):
        return None
    return int(value)


def _max_ones(value: str):
    if value == "auto":
        return "auto"
    if value.lower() in ("none", "unlimited"):
        return None
    return int(value)


def _points(bs, gs):
    if len(bs) == 1:
        bs = bs * len(gs)
    if len(gs) == 1:
        gs = gs * len(bs)
    if len(bs) != len(gs):
        raise SystemExit("--b and --g must have equal length (or one of them a single value)")
    return list(zip(bs, gs))


def _parse_word(text: str, n: int) -> int:
    text = text.strip()
    if text.lower().startswith("0x"):
        word = int(text, 16)
    else:
        if set(text) - {"0", "1"}:
            raise SystemExit(f"received word must be binary or 0x-prefixed hex: {text!r}")
        if len(text) != n:
            raise SystemExit(f"received word has {len(text)} bits, code length is {n}")
        word = int(text, 2)
    if word >> n:
        raise SystemExit(f"received word does not fit in {n} bits")
    return word


def cmd_patterns(args):
    params = GilbertParams(args.b[0], args.g[0])
    max_ones = None if args.max_ones in (None, "auto") else args.max_ones
    text = emit_pattern_table(args.n, params, args.count, fmt=args.format or "csv",
                              delta_l=args.delta_l, max_ones=max_ones)
    _write(text, args.out)


def cmd_simulate(args):
    settings = {}
    if args.config:
        settings = json.loads(Path(args.config).read_text())
    code_path = args.code or settings.get("code")
    if not code_path:
        raise SystemExit("simulate needs --code (or 'code' in --config)")
    if args.b or args.g:
        points = _points(args.b or [settings.get("b")], args.g or [settings.get("g")])
    else:
        points = settings.get("points")
    if not points:
        raise SystemExit("simulate needs --b/--g or 'points' in --config")
    budget = _budget(args.budget if args.budget is not None else str(settings.get("budget", "none")))
    cfg = ExperimentConfig(
        code=load_code(code_path), points=points,
        trials=args.trials or settings.get("trials", 1000),
        budget=budget,
        max_ones=args.max_ones if args.max_ones is not None else _max_ones(str(settings.get("max_ones", "auto"))),
        seed=args.seed if args.seed is not None else settings.get("seed", 0),
        delta_l=args.delta_l if args.delta_l is not None else settings.get("delta_l"),
        decoder=args.decoder, workers=args.workers)
    result = run_experiment(cfg)
    fmt = args.format or ("json" if len(points) == 1 else "csv")
    if fmt == "json":
        text = result.to_json(timing=args.timing)
    elif fmt == "csv":
        text = result.to_csv(timing=args.timing)
    else:
        raise SystemExit(f"simulate supports csv or json, not {fmt}")
    _write(text, args.out)


def cmd_decode(args):
    code = load_code(args.code)
    params = GilbertParams(args.b[0], args.g[0])
    budget = None if args.budget is None else _budget(args.budget)
    max_ones = "auto" if args.max_ones is None else args.max_ones
    dec = GrandDecoder(code, params, budget=budget, max_ones=max_ones, delta_l=args.delta_l)
    received = args.received_opt or args.received
    if received is None:
        raise SystemExit("decode needs a received word")
    r = dec.decode(_parse_word(received, code.n))
    out = {"success": r.success, "queries": r.queries}
    if r.success:
        out.update(message=render(r.message, code.k), codeword=render(r.codeword, code.n),
                   noise=render(r.noise, code.n), log_prob=r.log_prob)
    if (args.format or "json") == "json":
        text = json.dumps(out, indent=2) + "\n"
    else:
        text = "".join(f"{k}={v}\n" for k, v in out.items())
    _write(text, args.out)


def cmd_codegen(args):
    code = random_linear_code(args.n, args.k, seed=args.seed if args.seed is not None else 0)
    _write(dump_code(code), args.out)


def cmd_validate(args):
    from .validation import run_all

    lines, ok = [], True
    for name, passed, detail in run_all():
        ok &= passed
        lines.append(f"{'PASS' if passed else 'FAIL'} {name}: {detail}\n")
    _write("".join(lines), args.out)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="burstgrand", description="Burst-noise GRAND toolkit")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, channel=True):
        if channel:
            p.add_argument("--b", type=float, nargs="+", help="G->B transition probability")
            p.add_argument("--g", type=float, nargs="+", help="B->G transition probability")
            p.add_argument("--delta-l", type=int, default=None,
                           help="only use classes with l_m - m <= this value")
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--out", default=None, help="output file (default stdout)")
        p.add_argument("--format", default=None)

    p = sub.add_parser("patterns", help="emit the first K noise patterns")
    common(p)
    p.add_argument("--n", type=int, required=True, help="code length")
    p.add_argument("-K", "--count", type=int, default=150)
    p.add_argument("--max-ones", type=int, default=None)
    p.set_defaults(func=cmd_patterns)

    p = sub.add_parser("simulate", help="packet error rate sweep")
    common(p)
    p.add_argument("--code")
    p.add_argument("--config", help="JSON file with code, points, trials, budget, seed")
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--budget", default=None, help="query cap; 'none' for unlimited")
    p.add_argument("--max-ones", type=_max_ones, default=None)
    p.add_argument("--decoder", choices=("grand", "ml"), default="grand")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--timing", action="store_true", help="include wall-clock throughput")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("decode", help="decode one received word")
    common(p)
    p.add_argument("--code", required=True)
    p.add_argument("--budget", default=None, help="query cap; 'none' for unlimited")
    p.add_argument("--max-ones", type=_max_ones, default=None)
    p.add_argument("received", nargs="?", help="binary string or 0x-prefixed hex")
    p.add_argument("-y", "--received", dest="received_opt", help="same as the positional argument")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("codegen", help="random systematic linear code")
    common(p, channel=False)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_codegen)

    p = sub.add_parser("validate", help="run the small-size oracle checks")
    common(p, channel=False)
    p.set_defaults(func=cmd_validate)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command in ("patterns", "decode") and not (args.b and args.g):
        raise SystemExit(f"{args.command} needs --b and --g")
    return args.func(args) or 0


if __name__ == "__main__":
    sys.exit(main())
