"""Monte Carlo packet-error experiments and pattern tables."""
from __future__ import annotations

import csv
import io
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Optional, Sequence

import numpy as np

from .channel import GilbertParams, make_rng, sample_noise, sequence_probability
from .decoder import GrandDecoder, LinearCode
from .patterns import from_bits, render
from .schedule import build_schedule, pattern_stream

RNG_NAME = "numpy Philox4x64-10 via SeedSequence([seed, point, trial])"
TIE_TOL = 1e-9


def ml_decode(received: int, code: LinearCode, params: GilbertParams,
              codebook: Optional[Sequence[int]] = None, tie_rank: Optional[dict] = None) -> int:
    """Brute-force maximum-likelihood codeword under the Markov channel.

    Ties (within ``TIE_TOL`` in log probability) go to the noise pattern with
    the smallest ``tie_rank`` when given, otherwise to the first codeword.
    """
    if codebook is None:
        codebook = code.codebook()
    scores = [sequence_probability(received ^ c, code.n, params) for c in codebook]
    best = max(scores)
    tied = [c for c, s in zip(codebook, scores) if s >= best - TIE_TOL]
    if tie_rank is None or len(tied) == 1:
        return tied[0]
    return min(tied, key=lambda c: tie_rank[received ^ c])


@dataclass
class ExperimentConfig:
    code: LinearCode
    points: list  # of (b, g)
    trials: int = 1000
    budget: Optional[int] = None
    max_ones: object = "auto"
    seed: int = 0
    delta_l: Optional[int] = None
    decoder: str = "grand"  # or "ml" for the brute-force oracle
    workers: int = 1

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        self.points = [tuple(map(float, p)) for p in self.points]
        for b, g in self.points:
            GilbertParams(b, g)
        if self.decoder not in ("grand", "ml"):
            raise ValueError(f"unknown decoder {self.decoder!r}")


@dataclass
class PointResult:
    b: float
    g: float
    trials: int
    errors: int
    abandoned: int
    undetected: int
    per: float
    abandon_rate: float
    mean_queries: float
    p50_queries: float
    p90_queries: float
    p99_queries: float
    max_queries: int
    seconds: float = field(default=0.0, compare=False)

    @property
    def throughput(self) -> float:
        return self.trials / self.seconds if self.seconds > 0 else float("inf")


@dataclass
class ExperimentResult:
    code: str
    n: int
    k: int
    seed: int
    rng: str
    points: list

    def to_rows(self, timing: bool = False) -> list[dict]:
        rows = []
        for pr in self.points:
            row = asdict(pr)
            if timing:
                row["trials_per_s"] = pr.throughput
            else:
                del row["seconds"]
            rows.append(row)
        return rows

    def to_csv(self, timing: bool = False) -> str:
        rows = self.to_rows(timing)
        buf = io.StringIO()
        buf.write(f"# code={self.code} n={self.n} k={self.k} seed={self.seed} rng={self.rng}\n")
        w = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        return buf.getvalue()

    def to_json(self, timing: bool = False) -> str:
        meta = {k: getattr(self, k) for k in ("code", "n", "k", "seed", "rng")}
        return json.dumps({**meta, "points": self.to_rows(timing)}, indent=2) + "\n"


def trial_noise(cfg_seed: int, point: int, trial: int, code: LinearCode, params: GilbertParams):
    """Message and noise for one trial; independent of how trials are scheduled."""
    rng = make_rng([cfg_seed, point, trial])
    message = from_bits(rng.integers(0, 2, size=code.k))
    noise = sample_noise(params, code.n, rng)
    return message, noise


def _run_chunk(cfg: ExperimentConfig, point: int, start: int, stop: int):
    b, g = cfg.points[point]
    params = GilbertParams(b, g)
    code = cfg.code
    if cfg.decoder == "grand":
        dec = GrandDecoder(code, params, budget=cfg.budget, max_ones=cfg.max_ones, delta_l=cfg.delta_l)
    else:
        book = code.codebook()
        sched = build_schedule(code.n, params)
        rank = {it.pattern: it.index for it in pattern_stream(sched)}
    out = []
    for t in range(start, stop):
        message, noise = trial_noise(cfg.seed, point, t, code, params)
        sent = code.encode(message)
        y = sent ^ noise
        if cfg.decoder == "grand":
            r = dec.decode(y)
            ok, got, q = r.success, r.codeword, r.queries
        else:
            got, ok, q = ml_decode(y, code, params, book, rank), True, 0
        out.append((ok, ok and got == sent, q))
    return out


def run_experiment(cfg: ExperimentConfig) -> ExperimentResult:
    points = []
    for pi, (b, g) in enumerate(cfg.points):
        t0 = time.perf_counter()
        if cfg.workers > 1:
            edges = np.linspace(0, cfg.trials, cfg.workers + 1).astype(int)
            with ProcessPoolExecutor(cfg.workers) as ex:
                futs = [ex.submit(_run_chunk, cfg, pi, int(a), int(z)) for a, z in zip(edges, edges[1:])]
                outcomes = [o for f in futs for o in f.result()]
        else:
            outcomes = _run_chunk(cfg, pi, 0, cfg.trials)
        seconds = time.perf_counter() - t0
        found = np.array([o[0] for o in outcomes])
        correct = np.array([o[1] for o in outcomes])
        queries = np.array([o[2] for o in outcomes])
        errors = int((~correct).sum())
        abandoned = int((~found).sum())
        points.append(PointResult(
            b=b, g=g, trials=cfg.trials, errors=errors, abandoned=abandoned,
            undetected=errors - abandoned, per=errors / cfg.trials,
            abandon_rate=abandoned / cfg.trials, mean_queries=float(queries.mean()),
            p50_queries=float(np.percentile(queries, 50)),
            p90_queries=float(np.percentile(queries, 90)),
            p99_queries=float(np.percentile(queries, 99)),
            max_queries=int(queries.max()), seconds=seconds))
    code = cfg.code
    return ExperimentResult(code.name or "code", code.n, code.k, cfg.seed, RNG_NAME, points)


# --- pattern tables -----------------------------------------------------------

CSV_FIELDS = ["query_index", "pattern", "case", "m", "l_m", "log_prob"]


def pattern_rows(n: int, params: GilbertParams, count: int, delta_l: Optional[int] = None,
                 max_ones: Optional[int] = None) -> list[dict]:
    sched = build_schedule(n, params, max_ones=max_ones, delta_l=delta_l)
    rows = []
    for it in pattern_stream(sched, count):
        cls = it.entry.pattern_class
        rows.append({"query_index": it.index, "pattern": render(it.pattern, n),
                     "case": cls.case.value, "m": cls.m, "l_m": cls.ones,
                     "log_prob": repr(it.log_prob)})
    return rows


def rows_to_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()


def read_pattern_csv(text: str) -> list[dict]:
    rows = []
    for r in csv.DictReader(io.StringIO(text)):
        rows.append({"query_index": int(r["query_index"]), "pattern": r["pattern"],
                     "case": int(r["case"]), "m": int(r["m"]), "l_m": int(r["l_m"]),
                     "log_prob": float(r["log_prob"])})
    return rows


def dot_figure(patterns: Sequence[str], one: str = "•", zero: str = " ") -> str:
    """Bit position down the page, query order across, one column per pattern."""
    if not patterns:
        return ""
    n = len(patterns[0])
    lines = []
    for i in range(n):
        row = "".join(one if p[i] == "1" else zero for p in patterns)
        lines.append(f"s{i + 1:<3d}|{row}".rstrip())
    return "\n".join(lines) + "\n"


def emit_pattern_table(n: int, params: GilbertParams, count: int, fmt: str = "csv",
                       delta_l: Optional[int] = None, max_ones: Optional[int] = None) -> str:
    if count < 1:
        raise ValueError("count must be >= 1")
    rows = pattern_rows(n, params, count, delta_l=delta_l, max_ones=max_ones)
    if fmt == "csv":
        return rows_to_csv(rows)
    if fmt == "lines":
        return "".join(r["pattern"] + "\n" for r in rows)
    if fmt == "text":
        return dot_figure([r["pattern"] for r in rows])
    raise ValueError(f"unknown format {fmt!r}")
