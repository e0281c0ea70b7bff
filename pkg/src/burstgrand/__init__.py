"""Guessing decoding for burst-noise channels.

Noise patterns for a two-state Markov channel are generated class by class
(number of 1-bursts, number of ones, start/end bits) from burst-length
compositions, streamed in descending probability and tested against a binary
linear code's parity checks.
"""
from .channel import GilbertParams, class_probability, sample_noise, sequence_probability, stationary_flip_prob
from .compositions import (
    GridPosition,
    InvalidComboError,
    ParamCombo,
    count_compositions,
    expand,
    generate_all,
    initial_composition,
    is_general_form,
    iter_compositions,
)
from .decoder import DecodeResult, GrandDecoder, LinearCode, decode, hamming74, load_code, random_linear_code
from .patterns import Case, Orientation, PatternClass, assemble, class_size, classify, enumerate_class, zero_combo_for
from .schedule import build_schedule, pattern_stream

__version__ = "0.1.0"
