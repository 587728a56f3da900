"""Brute-force reference implementation for validating the miner.

Support is counted by enumerating every index tuple, and patterns are
found by enumerating every element tuple and interval choice directly —
no join, no reuse of lower levels. Deliberately simple and guarded to
small instances; the gap clustering itself is shared with the miner
because it defines which time ranges exist at all.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

from .clustering import cluster, collect_gaps
from .miner import PatternSupport
from .model import (
    Dataset,
    Event,
    IntervalPattern,
    Itemset,
    MiningError,
    Orientation,
    Sequence,
    Support,
    TimeRange,
    WrongOrientationError,
    to_fraction,
    validate_sequence,
)
from .preprocess import TargetSpec, prepare_working_dataset, rereverse_pattern

MAX_SEQUENCES = 12
MAX_EVENTS_PER_SEQUENCE = 10


class InstanceTooLargeError(MiningError):
    """The dataset exceeds the brute-force size guard."""


@dataclass(frozen=True)
class OracleConfig:
    """Exhaustive-search parameters; the length cap keeps runtime sane."""

    min_supp: Fraction
    target: TargetSpec
    max_pattern_length: int = 5

    def __post_init__(self) -> None:
        object.__setattr__(self, "min_supp", to_fraction(self.min_supp))
        if not 0 < self.min_supp <= 1:
            raise ValueError(f"min_supp must be in (0, 1], got {self.min_supp}")
        if not 2 <= self.max_pattern_length <= 5:
            raise ValueError("max_pattern_length must be between 2 and 5")


def _guard(d: Dataset) -> None:
    if d.n > MAX_SEQUENCES:
        raise InstanceTooLargeError(f"{d.n} sequences > {MAX_SEQUENCES}")
    for s in d.sequences:
        if len(s.events) > MAX_EVENTS_PER_SEQUENCE:
            raise InstanceTooLargeError(
                f"sequence {s.id!r} has {len(s.events)} events > {MAX_EVENTS_PER_SEQUENCE}"
            )


def _sequence_matches(events: tuple[Event, ...], p: IntervalPattern, sign: int) -> bool:
    k = len(p.elements)
    for idxs in combinations(range(len(events)), k):
        if any(events[i].itemset != e for i, e in zip(idxs, p.elements)):
            continue
        if all(
            rng.contains(sign * (events[j].time - events[i].time))
            for (i, j), rng in zip(zip(idxs, idxs[1:]), p.intervals)
        ):
            return True
    return False


def naive_support(d: Dataset, p: IntervalPattern) -> Support:
    """Support by full index-tuple enumeration; must agree with the miner."""
    _guard(d)
    if p.orientation is not d.orientation:
        raise WrongOrientationError(
            f"pattern is {p.orientation.value} but dataset is {d.orientation.value}"
        )
    sign = -1 if d.orientation is Orientation.REVERSED else 1
    count = sum(1 for s in d.sequences if _sequence_matches(s.events, p, sign))
    return Support(count, d.n)


def exhaustive_mine(d: Dataset, cfg: OracleConfig) -> list[PatternSupport]:
    """Mine by enumerating every element tuple and interval assignment.

    Time ranges exist only for ordered pairs whose plain support reaches
    the threshold (that is what defines them), but no other knowledge of
    lower levels is reused: every tuple whose adjacent pairs have ranges
    is support-checked from scratch.
    """
    _guard(d)
    working = prepare_working_dataset(d, cfg.target)
    n = working.n
    alphabet = sorted({e.itemset for s in working.sequences for e in s.events})

    def plain_count(elems: tuple[Itemset, ...]) -> int:
        count = 0
        for s in working.sequences:
            if any(
                all(s.events[i].itemset == e for i, e in zip(idxs, elems))
                for idxs in combinations(range(len(s.events)), len(elems))
            ):
                count += 1
        return count

    ranges: dict[tuple[Itemset, Itemset], list[TimeRange]] = {}
    for a, b in product(alphabet, repeat=2):
        if a != b and Fraction(plain_count((a, b)), n) >= cfg.min_supp:
            gaps = collect_gaps(working, a, b)
            ranges[(a, b)] = [c.range for c in cluster(gaps, n, cfg.min_supp)]

    found: list[PatternSupport] = []
    tuples: list[tuple[Itemset, ...]] = [pair for pair in ranges]
    while tuples:
        for elems in tuples:
            for choice in product(*(ranges[pair] for pair in zip(elems, elems[1:]))):
                p = IntervalPattern(elems, choice, Orientation.REVERSED)
                s = naive_support(working, p)
                if s.meets(cfg.min_supp):
                    found.append((p, s))
        if len(tuples[0]) >= cfg.max_pattern_length:
            break
        tuples = [
            elems + (nxt,)
            for elems in tuples
            for nxt in alphabet
            if (elems[-1], nxt) in ranges
        ]

    final = [
        (rereverse_pattern(p), s) for p, s in found if p.contains(cfg.target.target)
    ]
    return sorted(final, key=lambda ps: ps[0].sort_key)


def random_dataset(
    rng: random.Random,
    n_sequences: int,
    alphabet: list[Itemset],
    min_events: int,
    max_events: int,
) -> Dataset:
    """Seeded synthetic dataset with distinct timestamps per sequence."""
    if not alphabet:
        raise ValueError("alphabet must be non-empty")
    if not 1 <= min_events <= max_events:
        raise ValueError("need 1 <= min_events <= max_events")
    horizon = max(31, 4 * max_events)
    sequences = []
    for i in range(n_sequences):
        k = rng.randint(min_events, max_events)
        times = sorted(rng.sample(range(horizon), k))
        events = [(rng.choice(alphabet), t) for t in times]
        sequences.append(validate_sequence(events, f"S{i + 1:03d}"))
    return Dataset(tuple(sequences))


def random_instance(seed: int) -> tuple[Dataset, OracleConfig]:
    """One seeded fuzz case: small dataset plus matching oracle config.

    Sizes are kept small enough for the exhaustive search to finish in
    milliseconds: 2-8 sequences, 3-6 itemsets (occasionally one of them
    multi-item), 2-6 events each, timestamps within [0, 30].
    """
    rng = random.Random(seed)
    items = [f"s{i}" for i in range(1, rng.randint(3, 6) + 1)]
    alphabet = [Itemset.of(item) for item in items]
    if len(items) >= 2 and rng.random() < 0.25:
        alphabet[-1] = Itemset.of(items[-1], items[0])
    dataset = random_dataset(rng, rng.randint(2, 8), alphabet, 2, 6)
    cfg = OracleConfig(
        min_supp=rng.choice([Fraction(1, 5), Fraction(3, 10), Fraction(1, 2)]),
        target=TargetSpec(rng.choice(alphabet)),
        max_pattern_length=5,
    )
    return dataset, cfg
