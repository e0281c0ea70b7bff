"""Global noise-pattern order: rank pattern classes, then stream each class."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple, Optional

from .channel import GilbertParams, class_probability
from .patterns import PatternClass, class_size, enumerate_class, feasible_classes

# Log probabilities closer than this are treated as tied and ordered by the
# documented tie-break instead of by float noise.
TIE_DIGITS = 10


@dataclass(frozen=True)
class ScheduleEntry:
    pattern_class: PatternClass
    log_prob: float
    rank: int

    @property
    def size(self) -> int:
        return class_size(self.pattern_class)


class StreamItem(NamedTuple):
    index: int  # 1-based query number
    pattern: int
    log_prob: float
    entry: ScheduleEntry


def _sort_key(cls: PatternClass, lp: float):
    # ties: fewer ones first, then more bursts, then case 3 before 2 before 1
    return (-round(lp, TIE_DIGITS), cls.ones, -cls.m, -cls.case.value)


def build_schedule(n: int, params: GilbertParams, max_ones: Optional[int] = None,
                   max_bursts: Optional[int] = None, delta_l: Optional[int] = None) -> list[ScheduleEntry]:
    """Feasible classes for length ``n`` sorted by per-pattern probability.

    ``max_ones`` and ``max_bursts`` cap ``l_m`` and ``m``.  ``delta_l`` keeps only
    classes whose excess ``l_m - m`` is at most that value; it never reorders.
    """
    scored = []
    for cls in feasible_classes(n):
        if max_ones is not None and cls.ones > max_ones:
            continue
        if max_bursts is not None and cls.m > max_bursts:
            continue
        if delta_l is not None and cls.ones - cls.m > delta_l:
            continue
        scored.append((cls, class_probability(cls, params)))
    scored.sort(key=lambda t: _sort_key(*t))
    return [ScheduleEntry(cls, lp, i) for i, (cls, lp) in enumerate(scored)]


def schedule_size(schedule) -> int:
    return sum(e.size for e in schedule)


def pattern_stream(schedule, budget: Optional[int] = None) -> Iterator[StreamItem]:
    if budget is not None and budget < 1:
        return
    index = 0
    for entry in schedule:
        for x in enumerate_class(entry.pattern_class):
            index += 1
            yield StreamItem(index, x, entry.log_prob, entry)
            if budget is not None and index >= budget:
                return


def class_shards(schedule, workers: int) -> list[list[ScheduleEntry]]:
    """Deal whole classes round-robin to ``workers`` independent streams.

    Shards lose the canonical global order; use them only where order does
    not matter (e.g. building a syndrome census).
    """
    shards = [[] for _ in range(workers)]
    for i, entry in enumerate(schedule):
        shards[i % workers].append(entry)
    return shards
