"""Quick oracle checks run by ``burstgrand validate``.

Each check compares the fast path against an exhaustive computation on small
sizes and returns ``(name, passed, detail)``.
"""
from __future__ import annotations

import itertools
import math

from .channel import GilbertParams, class_probability, sequence_probability
from .compositions import count_compositions, generate_all
from .decoder import GrandDecoder, hamming74, random_linear_code
from .patterns import assemble, class_size, classify, enumerate_class, feasible_classes
from .schedule import build_schedule, pattern_stream
from .sim import TIE_TOL, ml_decode

PARAM_GRID = [(0.05, 0.3), (0.1, 0.3), (0.2, 0.8), (0.01, 0.5), (0.3, 0.6)]


def brute_compositions(bursts: int, total: int) -> set:
    """All compositions via cut points between ``total`` unit symbols."""
    out = set()
    for cuts in itertools.combinations(range(1, total), bursts - 1):
        edges = (0,) + cuts + (total,)
        out.add(tuple(b - a for a, b in zip(edges, edges[1:])))
    return out


def check_compositions(max_total: int = 10):
    for total in range(1, max_total + 1):
        for bursts in range(1, total + 1):
            got = generate_all((bursts, total))
            if (len(got) != len(set(got)) or set(got) != brute_compositions(bursts, total)
                    or len(got) != count_compositions((bursts, total))):
                return "compositions", False, f"mismatch at {{{bursts}, {total}}}"
    return "compositions", True, f"all combos with total <= {max_total}"


def check_partition(max_n: int = 8):
    for n in range(1, max_n + 1):
        seen = {}
        for cls in feasible_classes(n):
            for x in enumerate_class(cls):
                if x in seen:
                    return "partition", False, f"duplicate pattern at n={n}"
                seen[x] = cls
        if len(seen) != 2 ** n or sum(class_size(c) for c in feasible_classes(n)) != 2 ** n:
            return "partition", False, f"coverage failure at n={n}"
        for x, cls in seen.items():
            c = classify(x, n)
            if c.pattern_class != cls or assemble(c.one_parts, c.zero_parts, cls.case, c.orientation) != x:
                return "partition", False, f"classify round trip failed for {x} at n={n}"
    return "partition", True, f"n <= {max_n}"


def check_probabilities(max_n: int = 8):
    for b, g in PARAM_GRID:
        p = GilbertParams.permissive(b, g)
        for n in range(2, max_n + 1):
            total = 0.0
            for cls in feasible_classes(n):
                lp = class_probability(cls, p)
                total += class_size(cls) * math.exp(lp)
                for x in enumerate_class(cls):
                    if not math.isclose(lp, sequence_probability(x, n, p), rel_tol=1e-12):
                        return "probability", False, f"class {cls} at b={b}, g={g}"
            if abs(total - 1) > 1e-10:
                return "probability", False, f"normalisation {total} at n={n}"
    return "probability", True, f"{len(PARAM_GRID)} channels, n <= {max_n}"


def check_stream(max_n: int = 8):
    for b, g in PARAM_GRID:
        p = GilbertParams(b, g)
        for n in range(1, max_n + 1):
            items = list(pattern_stream(build_schedule(n, p)))
            if sorted(it.pattern for it in items) != list(range(2 ** n)):
                return "stream", False, f"not a permutation at n={n}"
            want = sorted((sequence_probability(x, n, p) for x in range(2 ** n)), reverse=True)
            if any(abs(it.log_prob - w) > TIE_TOL for it, w in zip(items, want)):
                return "stream", False, f"order differs from sorted probabilities at n={n}"
    return "stream", True, f"n <= {max_n}"


def check_ml(codes=None):
    codes = codes or [hamming74(), random_linear_code(8, 4, seed=1)]
    for code in codes:
        book = code.codebook()
        for b, g in PARAM_GRID[:3]:
            p = GilbertParams(b, g)
            dec = GrandDecoder(code, p, max_ones=None)
            for y in range(2 ** code.n):
                r = dec.decode(y)
                best = ml_decode(y, code, p, book)
                if not r.success or abs(sequence_probability(y ^ r.codeword, code.n, p)
                                        - sequence_probability(y ^ best, code.n, p)) > TIE_TOL:
                    return "ml", False, f"{code.name}: y={y} at b={b}, g={g}"
    return "ml", True, ", ".join(c.name for c in codes)


ALL_CHECKS = [check_compositions, check_partition, check_probabilities, check_stream, check_ml]


def run_all():
    return [check() for check in ALL_CHECKS]
