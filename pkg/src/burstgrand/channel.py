"""Two-state Markov (Gilbert) burst channel.

State G emits 0 and moves to B with probability ``b``; state B emits 1 and
moves back to G with probability ``g``.  The chain starts from its stationary
distribution.  All probabilities are natural-log values.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .patterns import Case, PatternClass


@dataclass(frozen=True)
class GilbertParams:
    b: float
    g: float
    strict: bool = True

    def __post_init__(self):
        if not (0.0 < self.b < 1.0 and 0.0 < self.g < 1.0):
            raise ValueError(f"transition probabilities must lie in (0, 1): b={self.b}, g={self.g}")
        if self.strict and not self.b < self.g:
            raise ValueError(f"b < g required (flip rate below 1/2); got b={self.b}, g={self.g}")

    @classmethod
    def permissive(cls, b: float, g: float) -> "GilbertParams":
        return cls(b, g, strict=False)

    @property
    def correlation(self) -> float:
        return 1.0 - self.b - self.g

    @property
    def positively_correlated(self) -> bool:
        return self.correlation > 0

    @property
    def memoryless(self) -> bool:
        return math.isclose(self.b + self.g, 1.0, rel_tol=0, abs_tol=1e-15)


def stationary_flip_prob(p: GilbertParams) -> float:
    return p.b / (p.b + p.g)


def _log_terms(p: GilbertParams):
    lb, lg = math.log(p.b), math.log(p.g)
    l1b, l1g = math.log1p(-p.b), math.log1p(-p.g)
    return lb, lg, l1b, l1g


def class_probability(cls: PatternClass, p: GilbertParams) -> float:
    """Log probability of each single pattern in ``cls`` (not the class total)."""
    cls.zero_combo  # raises InfeasibleClassError
    lb, lg, l1b, l1g = _log_terms(p)
    m, ones, n = cls.m, cls.ones, cls.n
    lp = lg - l1b + n * l1b - math.log(p.b + p.g)
    if m:
        lp += m * (lb + lg - l1b - l1g)
    if ones:
        lp += ones * (l1g - l1b)
    if cls.case is Case.TWO:
        lp += l1b - lg
    elif cls.case is Case.THREE:
        lp += 2 * (l1b - lg)
    return lp


def sequence_probability(x: int, n: int, p: GilbertParams) -> float:
    """Log probability of one length-``n`` pattern as a product along the chain."""
    lb, lg, l1b, l1g = _log_terms(p)
    trans = {(0, 0): l1b, (0, 1): lb, (1, 0): lg, (1, 1): l1g}
    prev = (x >> (n - 1)) & 1
    lp = math.log((p.b if prev else p.g) / (p.b + p.g))
    for i in range(n - 2, -1, -1):
        cur = (x >> i) & 1
        lp += trans[prev, cur]
        prev = cur
    return lp


def make_rng(seed) -> np.random.Generator:
    """Counter-based (Philox) generator; ``seed`` may be an int, a sequence or a SeedSequence."""
    if isinstance(seed, np.random.Generator):
        return seed
    ss = seed if isinstance(seed, np.random.SeedSequence) else np.random.SeedSequence(seed)
    return np.random.Generator(np.random.Philox(ss))


def sample_states(p: GilbertParams, n: int, rng) -> np.ndarray:
    """Draw ``n`` channel symbols (0 in G, 1 in B) as a uint8 array.

    Sojourn times are geometric, so the walk costs one draw per burst rather
    than one per symbol.
    """
    rng = make_rng(rng)
    out = np.zeros(n, dtype=np.uint8)
    state = int(rng.random() < stationary_flip_prob(p))
    pos = 0
    while pos < n:
        stay = int(rng.geometric(p.g if state else p.b))
        end = min(n, pos + stay)
        if state:
            out[pos:end] = 1
        pos = end
        state ^= 1
    return out


def sample_noise(p: GilbertParams, n: int, rng) -> int:
    """One length-``n`` noise pattern packed as an int (``s_1`` is the MSB)."""
    bits = sample_states(p, n, rng)
    x = 0
    for v in bits.tolist():
        x = (x << 1) | v
    return x
