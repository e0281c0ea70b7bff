"""Noise patterns built by alternately embedding 1-bursts and 0-bursts.

Patterns are plain Python ints of a known length ``n``.  The first transmitted
bit ``s_1`` is the most significant bit, so ``format(x, f"0{n}b")`` prints the
pattern left to right.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

import numpy as np

from .compositions import (
    Composition,
    InvalidComboError,
    ParamCombo,
    count_compositions,
    iter_compositions,
)


class InfeasibleClassError(ValueError):
    pass


class ShapeMismatchError(ValueError):
    pass


class Case(enum.IntEnum):
    """Start/end bit classes: 1 = both zero, 2 = exactly one end is one, 3 = both one."""

    ONE = 1
    TWO = 2
    THREE = 3


class Orientation(enum.Enum):
    STARTS_WITH_ONE = "starts"
    ENDS_WITH_ONE = "ends"


_ZERO_BURST_OFFSET = {Case.ONE: 1, Case.TWO: 0, Case.THREE: -1}


def zero_combo_for(case, one_combo, n: int) -> ParamCombo:
    case = Case(case)
    one_combo = one_combo if isinstance(one_combo, ParamCombo) else ParamCombo(*one_combo)
    m, ones = one_combo.bursts, one_combo.total
    if ones > n:
        raise InfeasibleClassError(f"{ones} ones do not fit in length {n}")
    if case is not Case.ONE and m == 0:
        raise InfeasibleClassError(f"case {case.value} needs at least one 1-burst")
    try:
        return ParamCombo(m + _ZERO_BURST_OFFSET[case], n - ones)
    except InvalidComboError as exc:
        raise InfeasibleClassError(
            f"case {case.value} with {one_combo} infeasible for n={n}") from exc


@dataclass(frozen=True)
class PatternClass:
    case: Case
    one_combo: ParamCombo
    n: int

    def __post_init__(self):
        object.__setattr__(self, "case", Case(self.case))
        if not isinstance(self.one_combo, ParamCombo):
            object.__setattr__(self, "one_combo", ParamCombo(*self.one_combo))

    @property
    def zero_combo(self) -> ParamCombo:
        return zero_combo_for(self.case, self.one_combo, self.n)

    @property
    def m(self) -> int:
        return self.one_combo.bursts

    @property
    def ones(self) -> int:
        return self.one_combo.total

    @property
    def feasible(self) -> bool:
        try:
            self.zero_combo
        except InfeasibleClassError:
            return False
        return True

    def __str__(self):
        return f"case{self.case.value}(m={self.m}, l={self.ones}, n={self.n})"


def feasible_classes(n: int) -> list[PatternClass]:
    """Every non-empty pattern class for length ``n``."""
    out = []
    for ones in range(n + 1):
        for m in range(0, min(ones, n) + 1):
            if m == 0 and ones > 0:
                continue
            for case in Case:
                cls = PatternClass(case, ParamCombo(m, ones), n)
                if cls.feasible:
                    out.append(cls)
    return out


def _check(parts: Sequence[int], combo: ParamCombo, what: str):
    if len(parts) != combo.bursts or sum(parts) != combo.total or any(p < 1 for p in parts):
        raise ShapeMismatchError(f"{what} bursts {tuple(parts)} do not match {combo}")


def _interleave(first: Sequence[int], second: Sequence[int], first_is_one: bool) -> tuple[int, int]:
    x = 0
    n = 0
    bit = first_is_one
    seqs = (first, second)
    for i in range(len(first) + len(second)):
        run = seqs[i % 2][i // 2]
        x <<= run
        if bit:
            x |= (1 << run) - 1
        n += run
        bit = not bit
    return x, n


def assemble(one_parts, zero_parts, case, orientation: Optional[Orientation] = None, n: Optional[int] = None) -> int:
    """Alternately embed the burst lengths; returns the pattern as an int."""
    case = Case(case)
    one_parts, zero_parts = tuple(one_parts), tuple(zero_parts)
    length = sum(one_parts) + sum(zero_parts)
    if n is not None and n != length:
        raise ShapeMismatchError(f"bursts sum to {length}, expected {n}")
    try:
        cls = PatternClass(case, ParamCombo(len(one_parts), sum(one_parts)), length)
        zc = cls.zero_combo
    except (InfeasibleClassError, InvalidComboError) as exc:
        raise ShapeMismatchError(str(exc)) from exc
    _check(zero_parts, zc, "zero")
    _check(one_parts, cls.one_combo, "one")
    if case is Case.TWO:
        if orientation is None:
            raise ShapeMismatchError("case 2 needs an orientation")
        starts = Orientation(orientation) is Orientation.STARTS_WITH_ONE
    elif orientation is not None:
        raise ShapeMismatchError(f"orientation only applies to case 2, got case {case.value}")
    else:
        starts = case is Case.THREE
    if starts:
        return _interleave(one_parts, zero_parts, True)[0]
    return _interleave(zero_parts, one_parts, False)[0]


def enumerate_class(cls: PatternClass) -> Iterator[int]:
    """Patterns of a class: 1-burst compositions outer, 0-burst inner."""
    zero_combo = cls.zero_combo
    if cls.case is Case.TWO:
        orients = (Orientation.STARTS_WITH_ONE, Orientation.ENDS_WITH_ONE)
    else:
        orients = (None,)
    case = cls.case
    for ones in iter_compositions(cls.one_combo):
        for zeros in iter_compositions(zero_combo):
            for o in orients:
                if case is Case.THREE or o is Orientation.STARTS_WITH_ONE:
                    yield _interleave(ones, zeros, True)[0]
                else:
                    yield _interleave(zeros, ones, False)[0]


def class_size(cls: PatternClass) -> int:
    try:
        zero_combo = cls.zero_combo
    except InfeasibleClassError:
        return 0
    size = count_compositions(cls.one_combo) * count_compositions(zero_combo)
    return 2 * size if cls.case is Case.TWO else size


def runs(x: int, n: int) -> list[tuple[int, int]]:
    """Run-length encoding ``[(bit, length), ...]`` from s_1 onwards."""
    out = []
    for i in range(n - 1, -1, -1):
        bit = (x >> i) & 1
        if out and out[-1][0] == bit:
            out[-1][1] += 1
        else:
            out.append([bit, 1])
    return [tuple(r) for r in out]


@dataclass(frozen=True)
class Classification:
    pattern_class: PatternClass
    one_parts: Composition
    zero_parts: Composition
    orientation: Optional[Orientation]


def classify(x: int, n: int) -> Classification:
    if n < 1 or x < 0 or x >> n:
        raise ValueError(f"{x} is not a length-{n} pattern")
    rl = runs(x, n)
    one_parts = tuple(r for b, r in rl if b == 1)
    zero_parts = tuple(r for b, r in rl if b == 0)
    first, last = rl[0][0], rl[-1][0]
    orientation = None
    if first == 0 and last == 0:
        case = Case.ONE
    elif first == 1 and last == 1:
        case = Case.THREE
    else:
        case = Case.TWO
        orientation = Orientation.STARTS_WITH_ONE if first == 1 else Orientation.ENDS_WITH_ONE
    cls = PatternClass(case, ParamCombo(len(one_parts), sum(one_parts)), n)
    return Classification(cls, one_parts, zero_parts, orientation)


def to_bits(x: int, n: int) -> np.ndarray:
    return np.array([(x >> (n - 1 - i)) & 1 for i in range(n)], dtype=np.uint8)


def from_bits(bits) -> int:
    x = 0
    for b in bits:
        x = (x << 1) | (int(b) & 1)
    return x


def render(x: int, n: int, one: str = "1", zero: str = "0") -> str:
    s = format(x, f"0{n}b")
    if one != "1" or zero != "0":
        s = s.replace("1", "\x00").replace("0", zero).replace("\x00", one)
    return s


def parse(text: str) -> int:
    text = text.strip()
    if not text or set(text) - {"0", "1"}:
        raise ValueError(f"not a binary pattern: {text!r}")
    return int(text, 2)
