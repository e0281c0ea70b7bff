"""Independent oracles shared by the test modules.

Nothing here calls into the code path it is used to check.
"""
import itertools
import math

import numpy as np
import pytest

# (b, g) grid: correlated, memoryless (b + g = 1), strongly bursty, and two
# points with b >= g that only the permissive parameter mode accepts.
PARAM_GRID = [
    (0.05, 0.3), (0.1, 0.3), (0.01, 0.2), (0.02, 0.6), (0.1, 0.6),
    (0.2, 0.8), (0.3, 0.7), (0.001, 0.05), (0.25, 0.5),
    (0.4, 0.4), (0.6, 0.3),
]


def brute_compositions(bursts, total):
    """Compositions from cut-point subsets (stars and bars)."""
    if bursts == 0:
        return {()} if total == 0 else set()
    out = set()
    for cuts in itertools.combinations(range(1, total), bursts - 1):
        edges = (0,) + cuts + (total,)
        out.add(tuple(b - a for a, b in zip(edges, edges[1:])))
    return out


def bits_of(x, n):
    return [(x >> (n - 1 - i)) & 1 for i in range(n)]


def markov_prob(bits, b, g):
    """Linear-domain probability from the 2x2 transition matrix."""
    t = np.array([[1 - b, b], [g, 1 - g]])
    pi = np.array([g, b]) / (b + g)
    p = pi[bits[0]]
    for u, v in zip(bits, bits[1:]):
        p *= t[u, v]
    return p


def markov_logprob(bits, b, g):
    t = np.log(np.array([[1 - b, b], [g, 1 - g]]))
    lp = math.log((g, b)[bits[0]] / (b + g))
    for u, v in zip(bits, bits[1:]):
        lp += t[u, v]
    return lp


def burst_stats(bits):
    """(first bit, last bit, one-run lengths, zero-run lengths) via groupby."""
    ones, zeros = [], []
    for bit, grp in itertools.groupby(bits):
        (ones if bit else zeros).append(len(list(grp)))
    return bits[0], bits[-1], tuple(ones), tuple(zeros)


def case_of(bits):
    first, last = bits[0], bits[-1]
    return 1 + first + last


@pytest.fixture
def hamming_matrices():
    g = np.array([[1, 0, 0, 0, 1, 1, 0],
                  [0, 1, 0, 0, 1, 0, 1],
                  [0, 0, 1, 0, 0, 1, 1],
                  [0, 0, 0, 1, 1, 1, 1]], dtype=np.uint8)
    h = np.array([[1, 1, 0, 1, 1, 0, 0],
                  [1, 0, 1, 1, 0, 1, 0],
                  [0, 1, 1, 1, 0, 0, 1]], dtype=np.uint8)
    return g, h


ACCEPTANCE_LINES = []


@pytest.fixture
def criterion(request):
    """Record a one-line PASS/FAIL verdict for an acceptance criterion."""

    def report(number, title, passed, detail=""):
        line = f"[{'PASS' if passed else 'FAIL'}] AC{number:02d} {title}" + (f" ({detail})" if detail else "")
        ACCEPTANCE_LINES.append(line)
        print(line)
        return passed

    return report


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda l: l.split('] ', 1)[1]):
            terminalreporter.write_line(line)
