import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from burstgrand.compositions import ParamCombo
from burstgrand.patterns import (
    Case,
    InfeasibleClassError,
    Orientation,
    PatternClass,
    ShapeMismatchError,
    assemble,
    class_size,
    classify,
    enumerate_class,
    feasible_classes,
    from_bits,
    parse,
    render,
    to_bits,
    zero_combo_for,
)

from conftest import bits_of, burst_stats, case_of


@pytest.mark.parametrize("case, one, n, expected", [
    (Case.ONE, (4, 8), 20, ParamCombo(5, 12)),
    (Case.THREE, (1, 9), 9, ParamCombo(0, 0)),
    (Case.TWO, (2, 5), 8, ParamCombo(2, 3)),
])
def test_zero_combo_for(case, one, n, expected):
    assert zero_combo_for(case, one, n) == expected


@pytest.mark.parametrize("case, one, n", [
    (Case.THREE, (1, 4), 6),   # single 1-burst cannot start and end the word
    (Case.ONE, (3, 5), 7),     # needs 4 zero bursts from 2 zeros
    (Case.TWO, (0, 0), 4),
    (Case.ONE, (1, 9), 8),
])
def test_zero_combo_infeasible(case, one, n):
    with pytest.raises(InfeasibleClassError):
        zero_combo_for(case, one, n)


def test_assemble_examples():
    assert render(assemble((2, 1), (3,), Case.THREE), 6) == "110001"
    assert render(assemble((1,), (1, 1), Case.ONE), 3) == "010"
    assert render(assemble((2, 1), (2, 1), Case.TWO, Orientation.STARTS_WITH_ONE), 6) == "110010"
    assert render(assemble((2, 1), (2, 1), Case.TWO, Orientation.ENDS_WITH_ONE), 6) == "001101"
    assert render(assemble((), (5,), Case.ONE), 5) == "00000"


@pytest.mark.parametrize("args", [
    ((2, 1), (1, 1), Case.THREE, None),          # zero count wrong for case 3
    ((2, 1), (2, 1), Case.TWO, None),            # orientation missing
    ((1,), (1, 1), Case.ONE, Orientation.ENDS_WITH_ONE),
    ((0, 2), (1,), Case.THREE, None),
])
def test_assemble_shape_errors(args):
    with pytest.raises(ShapeMismatchError):
        assemble(*args)


def test_assemble_length_check():
    with pytest.raises(ShapeMismatchError):
        assemble((1,), (1, 1), Case.ONE, n=4)


@pytest.mark.parametrize("cls, expected", [
    (PatternClass(Case.ONE, (1, 1), 3), ["010"]),
    (PatternClass(Case.TWO, (1, 1), 3), ["100", "001"]),
    (PatternClass(Case.ONE, (2, 2), 5), ["01010"]),
    (PatternClass(Case.THREE, (1, 4), 4), ["1111"]),
])
def test_enumerate_class_small(cls, expected):
    assert [render(x, cls.n) for x in enumerate_class(cls)] == expected


def test_enumerate_class_order():
    # 1-burst compositions outer, 0-burst inner, both in grid order
    cls = PatternClass(Case.THREE, (2, 4), 7)
    got = [render(x, 7) for x in enumerate_class(cls)]
    assert got == ["1110001", "1100011", "1000111"]


def test_class_size():
    assert class_size(PatternClass(Case.ONE, (4, 8), 20)) == 35 * 330
    assert class_size(PatternClass(Case.ONE, (0, 0), 9)) == 1
    assert class_size(PatternClass(Case.TWO, (2, 5), 8)) == 2 * 4 * 2
    assert class_size(PatternClass(Case.THREE, (1, 3), 5)) == 0


@pytest.mark.parametrize("n", range(1, 11))
def test_class_sizes_partition_all_words(n):
    assert sum(class_size(c) for c in feasible_classes(n)) == 2 ** n


def test_streamed_size_matches_formula():
    cls = PatternClass(Case.ONE, (4, 8), 20)
    assert sum(1 for _ in enumerate_class(cls)) == 11550


def test_classify_examples():
    c = classify(0, 6)
    assert (c.pattern_class.case, c.pattern_class.m, c.pattern_class.ones) == (Case.ONE, 0, 0)
    c = classify(parse("110001"), 6)
    assert c.pattern_class.case is Case.THREE
    assert (c.one_parts, c.zero_parts) == ((2, 1), (3,))
    c = classify(parse("100101"), 6)
    assert c.pattern_class.case is Case.THREE
    assert (c.one_parts, c.zero_parts) == ((1, 1, 1), (2, 1))
    assert classify(parse("0110"), 4).orientation is None
    assert classify(parse("0011"), 4).orientation is Orientation.ENDS_WITH_ONE


@pytest.mark.parametrize("n", range(1, 13))
def test_bijection_exhaustive(n):
    streams = {}
    for cls in feasible_classes(n):
        members = list(enumerate_class(cls))
        assert len(members) == len(set(members)) == class_size(cls)
        for x in members:
            assert x not in streams
            streams[x] = cls
    assert len(streams) == 2 ** n
    for x, cls in streams.items():
        c = classify(x, n)
        assert c.pattern_class == cls
        assert assemble(c.one_parts, c.zero_parts, cls.case, c.orientation, n=n) == x
        # burst statistics straight from the bits
        bits = bits_of(x, n)
        _, _, ones, zeros = burst_stats(bits)
        assert (c.one_parts, c.zero_parts) == (ones, zeros)
        assert cls.case.value == case_of(bits)


@settings(max_examples=300, deadline=None)
@given(st.integers(1, 64).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, 2 ** n - 1))))
def test_classify_roundtrip_large(nx):
    n, x = nx
    c = classify(x, n)
    assert assemble(c.one_parts, c.zero_parts, c.pattern_class.case, c.orientation, n=n) == x


def test_feasible_classes_respect_burst_limit():
    for n in range(1, 15):
        for cls in feasible_classes(n):
            if cls.case is Case.ONE:
                assert cls.m <= n // 2


def test_bit_helpers():
    assert list(to_bits(0b1011, 4)) == [1, 0, 1, 1]
    assert from_bits([1, 0, 1, 1]) == 0b1011
    assert render(0b101, 3, one="•", zero=" ") == "• •"
    with pytest.raises(ValueError):
        parse("10a")
