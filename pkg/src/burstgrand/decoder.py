"""Binary linear codes and the guessing decoder loop.

Words are ints with the first code bit as the most significant bit, matching
the pattern convention in :mod:`burstgrand.patterns`.  Membership is checked
with a byte-sliced syndrome table: each 8-bit slice of the word indexes a
256-entry table of partial syndromes which are XORed together.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Union

import numpy as np

from . import gf2
from .channel import GilbertParams, make_rng
from .patterns import from_bits, to_bits
from .schedule import build_schedule, pattern_stream


class CodeValidationError(ValueError):
    pass


class LengthMismatchError(ValueError):
    pass


def _row_ints(m: np.ndarray) -> list[int]:
    return [from_bits(row) for row in m]


@dataclass
class LinearCode:
    generator: np.ndarray
    parity_check: np.ndarray
    name: str = ""
    _tables: list = field(init=False, repr=False)

    def __post_init__(self):
        self.generator = gf2.as_gf2(np.atleast_2d(self.generator))
        self.parity_check = gf2.as_gf2(np.atleast_2d(self.parity_check))
        k, n = self.generator.shape
        if self.parity_check.shape[1] != n:
            raise CodeValidationError("generator and parity-check lengths differ")
        if gf2.matmul(self.generator, self.parity_check.T).any():
            raise CodeValidationError("generator rows are not orthogonal to the parity checks")
        if gf2.rank(self.generator) != k:
            raise CodeValidationError("generator is rank deficient")
        if gf2.rank(self.parity_check) != n - k:
            raise CodeValidationError("parity-check matrix must have rank n - k")

        _, self.info_set = gf2.rref(self.generator)
        self._recover = gf2.inv(self.generator[:, self.info_set])
        self._gen_rows = _row_ints(self.generator)
        self._tables = _syndrome_tables(self.parity_check)

    @property
    def n(self) -> int:
        return self.generator.shape[1]

    @property
    def k(self) -> int:
        return self.generator.shape[0]

    @property
    def rate(self) -> float:
        return self.k / self.n

    @classmethod
    def from_generator(cls, generator, name: str = "") -> "LinearCode":
        return cls(generator, gf2.nullspace(generator), name=name)

    def syndrome(self, word: int) -> int:
        s = 0
        for shift, table in self._tables:
            s ^= table[(word >> shift) & 0xFF]
        return s

    def encode(self, message) -> int:
        m = _as_word(message, self.k)
        c = 0
        for i, row in enumerate(self._gen_rows):
            if (m >> (self.k - 1 - i)) & 1:
                c ^= row
        return c

    def is_codeword(self, word) -> bool:
        return self.syndrome(_as_word(word, self.n)) == 0

    def message_of(self, codeword) -> int:
        bits = to_bits(_as_word(codeword, self.n), self.n)
        return from_bits(gf2.matmul(bits[self.info_set][None, :], self._recover)[0])

    def codebook(self) -> list[int]:
        """All 2^k codewords; for oracles on small codes only."""
        return [self.encode(m) for m in range(1 << self.k)]


def _syndrome_tables(h: np.ndarray) -> list[tuple[int, list[int]]]:
    n = h.shape[1]
    # column j of H belongs to code bit j, i.e. int bit n-1-j
    cols = [from_bits(h[:, j]) for j in range(n)]
    by_lsb = cols[::-1]
    tables = []
    for shift in range(0, n, 8):
        chunk = by_lsb[shift:shift + 8]
        table = [0] * 256
        for v in range(1, 256):
            low = (v & -v).bit_length() - 1
            table[v] = table[v & (v - 1)] ^ (chunk[low] if low < len(chunk) else 0)
        tables.append((shift, table))
    return tables


def _as_word(word, n: int) -> int:
    if isinstance(word, (int, np.integer)):
        w = int(word)
        if w < 0 or w >> n:
            raise LengthMismatchError(f"{w} does not fit in {n} bits")
        return w
    if isinstance(word, str):
        word = word.strip()
        if len(word) != n or set(word) - {"0", "1"}:
            raise LengthMismatchError(f"expected {n} binary digits, got {word!r}")
        return int(word, 2)
    bits = np.asarray(word).ravel()
    if bits.size != n:
        raise LengthMismatchError(f"expected {n} bits, got {bits.size}")
    return from_bits(bits)


def encode(message, code: LinearCode) -> int:
    return code.encode(message)


def is_codeword(word, code: LinearCode) -> bool:
    return code.is_codeword(word)


# --- code files and stock codes -------------------------------------------

def load_code(path: Union[str, Path]) -> LinearCode:
    """Read the plain-text format: ``N k``, k generator rows, N-k parity rows."""
    lines = [ln.split("#", 1)[0].strip() for ln in Path(path).read_text().splitlines()]
    lines = [ln for ln in lines if ln]
    try:
        n, k = (int(t) for t in lines[0].split())
    except (IndexError, ValueError) as exc:
        raise CodeValidationError(f"{path}: bad header") from exc
    rows = lines[1:]
    if len(rows) != n:
        raise CodeValidationError(f"{path}: expected {n} matrix rows, found {len(rows)}")
    for r in rows:
        if len(r) != n or set(r) - {"0", "1"}:
            raise CodeValidationError(f"{path}: bad matrix row {r!r}")
    mat = np.array([[int(c) for c in r] for r in rows], dtype=np.uint8)
    return LinearCode(mat[:k], mat[k:], name=Path(path).stem)


def dump_code(code: LinearCode) -> str:
    rows = ["".join(map(str, r)) for r in np.vstack([code.generator, code.parity_check])]
    return "\n".join([f"{code.n} {code.k}"] + rows) + "\n"


def save_code(code: LinearCode, path: Union[str, Path]) -> None:
    Path(path).write_text(dump_code(code))


def hamming74() -> LinearCode:
    p = np.array([[1, 1, 0], [1, 0, 1], [0, 1, 1], [1, 1, 1]], dtype=np.uint8)
    g = np.hstack([np.eye(4, dtype=np.uint8), p])
    h = np.hstack([p.T, np.eye(3, dtype=np.uint8)])
    return LinearCode(g, h, name="hamming74")


def random_linear_code(n: int, k: int, seed=None) -> LinearCode:
    """Systematic random linear code ``[I_k | P]`` with uniform ``P``."""
    if not 0 < k < n:
        raise ValueError("need 0 < k < n")
    rng = make_rng(seed)
    p = rng.integers(0, 2, size=(k, n - k), dtype=np.uint8)
    g = np.hstack([np.eye(k, dtype=np.uint8), p])
    h = np.hstack([p.T, np.eye(n - k, dtype=np.uint8)])
    return LinearCode(g, h, name=f"rlc{n}_{k}")


# --- decoding ---------------------------------------------------------------

@dataclass(frozen=True)
class DecodeResult:
    success: bool
    queries: int
    message: Optional[int] = None
    codeword: Optional[int] = None
    noise: Optional[int] = None
    log_prob: Optional[float] = None


class GrandDecoder:
    """Guess noise patterns in descending probability until one lands on a codeword.

    ``max_ones`` caps the number of flipped bits a guess may contain; the
    default ``"auto"`` uses ``ceil(n / 2)`` and ``None`` guesses everything.
    ``budget`` additionally caps the number of queries.  The guess sequence is
    the same for every received word, so patterns are cached as they are
    produced and reused across calls.
    """

    def __init__(self, code: LinearCode, params: GilbertParams, budget: Optional[int] = None,
                 max_ones: Union[int, None, str] = "auto", delta_l: Optional[int] = None):
        self.code = code
        self.params = params
        if max_ones == "auto":
            max_ones = math.ceil(code.n / 2)
        self.max_ones = max_ones
        self.budget = budget
        self.schedule = build_schedule(code.n, params, max_ones=max_ones, delta_l=delta_l)
        self._stream = pattern_stream(self.schedule, budget)
        self._patterns: list[int] = []
        self._log_probs: list[float] = []
        self._exhausted = False

    def _extend(self, count: int) -> bool:
        pats, lps = self._patterns, self._log_probs
        for item in self._stream:
            pats.append(item.pattern)
            lps.append(item.log_prob)
            count -= 1
            if count <= 0:
                return True
        self._exhausted = True
        return False

    def decode(self, received) -> DecodeResult:
        code = self.code
        y = _as_word(received, code.n)
        tables = code._tables
        i = 0
        while True:
            pats = self._patterns
            for i in range(i, len(pats)):
                w = y ^ pats[i]
                s = 0
                for shift, table in tables:
                    s ^= table[(w >> shift) & 0xFF]
                if not s:
                    return DecodeResult(True, i + 1, code.message_of(w), w, pats[i],
                                        self._log_probs[i])
            i = len(pats)
            if self._exhausted or not self._extend(max(1024, i)):
                if i >= len(self._patterns):
                    return DecodeResult(False, i)


def decode(received, code: LinearCode, params: GilbertParams, budget: Optional[int] = None,
           max_ones: Union[int, None, str] = "auto") -> DecodeResult:
    return GrandDecoder(code, params, budget=budget, max_ones=max_ones).decode(received)
