"""Burst-length compositions generated by successive addition-subtraction.

A composition of ``total`` into ``bursts`` positive parts is the list of burst
lengths of one symbol type inside a noise pattern.  Compositions are produced
in H-grid order: column ``h`` holds every composition whose first part equals
``total - bursts + 1 - h``, columns are emitted left to right and each column
lists its members in the order they were discovered.

Every composition other than the initial one has a unique parent: take the
last part greater than one (at position two or later) and move all but one of
its units back to the first part.  ``expand`` is the inverse of that map, which
is why the enumeration is complete and never repeats itself.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Sequence

Composition = tuple[int, ...]


class InvalidComboError(ValueError):
    pass


class NotGeneralFormError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class ParamCombo:
    """Number of bursts and total symbol count, e.g. ``{m, l_m}``."""

    bursts: int
    total: int

    def __post_init__(self):
        if self.bursts < 0 or self.total < 0:
            raise InvalidComboError(f"negative combo {self}")
        if self.total < self.bursts:
            raise InvalidComboError(f"total {self.total} < bursts {self.bursts}")
        if self.bursts == 0 and self.total != 0:
            raise InvalidComboError("zero bursts cannot carry symbols")

    @property
    def lead(self) -> int:
        """First part of the initial composition."""
        return self.total - self.bursts + 1

    @property
    def grid_size(self) -> int:
        return self.total - self.bursts


class GridPosition(NamedTuple):
    row: int
    column: int


def _as_combo(combo) -> ParamCombo:
    if isinstance(combo, ParamCombo):
        return combo
    return ParamCombo(*combo)


def count_compositions(combo) -> int:
    combo = _as_combo(combo)
    if combo.bursts == 0:
        return 1 if combo.total == 0 else 0
    return math.comb(combo.total - 1, combo.bursts - 1)


def initial_composition(combo) -> Composition:
    combo = _as_combo(combo)
    if combo.bursts < 1:
        raise InvalidComboError("need at least one burst")
    return (combo.lead,) + (1,) * (combo.bursts - 1)


def _suffix_start(parts: Sequence[int]) -> int:
    """Index of the first slot that may receive added units."""
    for i in range(len(parts) - 1, 0, -1):
        if parts[i] > 1:
            return i + 1
    return 1


def is_general_form(parts: Sequence[int]) -> tuple[bool, int]:
    """Return ``(qualifies, suffix_length)`` for the add-subtract step.

    The suffix is the run of ones after the last part (past the first) that
    exceeds one; additions are only allowed there.  A composition qualifies
    when its first part can still give units away and the suffix is non-empty.
    """
    if not parts:
        return False, 0
    suffix = len(parts) - _suffix_start(parts)
    return parts[0] > 1 and suffix > 0, suffix


def grid_position(parts: Sequence[int]) -> GridPosition:
    """Locate a composition in the H grid; the initial one sits at (0, 0)."""
    lead = sum(parts) - len(parts) + 1
    column = lead - parts[0]
    row = 0
    for p in parts[1:]:
        if p > 1:
            row = p - 1
            break
    return GridPosition(row, column)


def expand(parts: Sequence[int]) -> list[tuple[Composition, GridPosition]]:
    """One successive add-subtract step on a general-form composition.

    For every amount ``d`` in ``1 .. parts[0] - 1`` (outer loop) and every
    eligible trailing slot (inner loop, left to right) the first part loses
    ``d`` and the slot gains ``d``.
    """
    parts = tuple(parts)
    ok, suffix = is_general_form(parts)
    if not ok:
        raise NotGeneralFormError(f"{parts} is not in general form")
    start = len(parts) - suffix
    first = parts[0]
    lead = sum(parts) - len(parts) + 1
    parent = grid_position(parts)
    out = []
    for d in range(1, first):
        column = lead - (first - d)
        row = parent.row if parent.column > 0 else column
        head = (first - d,) + parts[1:start]
        for j in range(start, len(parts)):
            new = head + (1,) * (j - start) + (1 + d,) + (1,) * (len(parts) - j - 1)
            out.append((new, GridPosition(row, column)))
    return out


class CompositionIterator:
    """Lazy H-grid ordered walk over all compositions of a combo.

    Column buckets are filled as earlier columns are expanded, so only the
    emitted compositions and their direct children are ever held.  Supports
    ``{0, 0}`` (a single empty composition) for the degenerate burst classes.
    ``clone()`` returns an independent cursor at the same position.
    """

    def __init__(self, combo):
        self.combo = _as_combo(combo)
        if self.combo.bursts == 0:
            self._buckets = [[()]]
        else:
            self._buckets = [[] for _ in range(self.combo.grid_size + 1)]
            self._buckets[0].append(initial_composition(self.combo))
        self._column = 0
        self._index = 0

    def __iter__(self) -> Iterator[Composition]:
        return self

    def __next__(self) -> Composition:
        while self._column < len(self._buckets):
            bucket = self._buckets[self._column]
            if self._index < len(bucket):
                parts = bucket[self._index]
                self._index += 1
                if is_general_form(parts)[0]:
                    for child, pos in expand(parts):
                        self._buckets[pos.column].append(child)
                return parts
            self._buckets[self._column] = None  # column fully emitted
            self._column += 1
            self._index = 0
        raise StopIteration

    def clone(self) -> "CompositionIterator":
        other = object.__new__(CompositionIterator)
        other.combo = self.combo
        other._buckets = [None if b is None else list(b) for b in self._buckets]
        other._column = self._column
        other._index = self._index
        return other


def iter_compositions(combo) -> CompositionIterator:
    return CompositionIterator(combo)


def generate_all(combo) -> list[Composition]:
    combo = _as_combo(combo)
    if combo.bursts < 1:
        raise InvalidComboError("need at least one burst")
    return list(CompositionIterator(combo))


def generate_grid(combo) -> list[tuple[Composition, GridPosition]]:
    """``generate_all`` with each composition's H-grid cell attached."""
    return [(c, grid_position(c)) for c in generate_all(combo)]
