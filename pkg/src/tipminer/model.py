"""Domain types shared by every mining stage.

All types are immutable and carry a total order, so each stage of the
pipeline can emit canonically sorted, reproducible output. Support
arithmetic is exact (integer counts compared as rationals); decimal
rendering happens only at the presentation boundary.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, NamedTuple

# Item tokens must stay clear of the delimiters used by the canonical
# pattern text and the CSV/TSV formats.
_ITEM_TOKEN = re.compile(r"[^\s,()\[\]<>]+\Z")


class MiningError(Exception):
    """Base class for every error raised by this package."""


class EmptySequenceError(MiningError):
    """A sequence was constructed with no events."""


class DuplicateTimestampError(MiningError):
    """Two events in one sequence share a timestamp; their order would be ambiguous."""


class NegativeTimestampError(MiningError):
    """An event carries a timestamp below zero."""


class WrongOrientationError(MiningError):
    """An operation received data in the wrong orientation."""


class Orientation(Enum):
    """Whether a sequence/pattern is in original time order or reversed."""

    ORIGINAL = "original"
    REVERSED = "reversed"


@dataclass(frozen=True, order=True)
class Itemset:
    """A set of items occurring together, canonicalized to a sorted tuple.

    Itemsets are matched atomically: two itemsets are the same iff they
    contain exactly the same items. Ordering is lexicographic on the
    sorted item tuple.
    """

    items: tuple[str, ...]

    def __post_init__(self) -> None:
        items = tuple(self.items)
        if not items:
            raise ValueError("itemset must contain at least one item")
        for item in items:
            if not isinstance(item, str) or not _ITEM_TOKEN.match(item):
                raise ValueError(f"invalid item token: {item!r}")
        if len(set(items)) != len(items):
            raise ValueError(f"duplicate items in itemset: {items!r}")
        object.__setattr__(self, "items", tuple(sorted(items)))

    @classmethod
    def of(cls, *items: str) -> "Itemset":
        return cls(tuple(items))

    @property
    def bare(self) -> str:
        """Items joined with commas, no delimiters: ``s1`` or ``a,b``."""
        return ",".join(self.items)

    @property
    def text(self) -> str:
        """Parenthesized form used in canonical pattern text: ``(s1)``."""
        return f"({self.bare})"

    def __str__(self) -> str:
        return self.text


@dataclass(frozen=True)
class Event:
    """An itemset stamped with its occurrence time (integer time units)."""

    itemset: Itemset
    time: int

    def __post_init__(self) -> None:
        if self.time < 0:
            raise NegativeTimestampError(f"negative timestamp: {self.time}")


@dataclass(frozen=True)
class Sequence:
    """An ordered list of events belonging to one entity.

    Original orientation requires strictly increasing timestamps along
    the list; reversed orientation requires strictly decreasing ones.
    """

    id: str
    events: tuple[Event, ...]
    orientation: Orientation

    def __post_init__(self) -> None:
        object.__setattr__(self, "events", tuple(self.events))
        if not self.id:
            raise ValueError("sequence id must be non-empty")
        if not self.events:
            raise EmptySequenceError(f"sequence {self.id!r} has no events")
        for a, b in zip(self.events, self.events[1:]):
            if a.time == b.time:
                raise DuplicateTimestampError(
                    f"sequence {self.id!r}: two events at time {a.time}"
                )
            increasing = a.time < b.time
            if increasing != (self.orientation is Orientation.ORIGINAL):
                raise ValueError(
                    f"sequence {self.id!r}: timestamps must strictly "
                    f"{'increase' if self.orientation is Orientation.ORIGINAL else 'decrease'}"
                )

    def contains_itemset(self, itemset: Itemset) -> bool:
        return any(e.itemset == itemset for e in self.events)


@dataclass(frozen=True)
class Dataset:
    """A collection of uniquely identified sequences, all in one orientation."""

    sequences: tuple[Sequence, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "sequences", tuple(self.sequences))
        if not self.sequences:
            raise ValueError("dataset must contain at least one sequence")
        ids = [s.id for s in self.sequences]
        if len(set(ids)) != len(ids):
            raise ValueError("sequence ids must be unique")
        orientations = {s.orientation for s in self.sequences}
        if len(orientations) != 1:
            raise ValueError("all sequences must share one orientation")

    @property
    def n(self) -> int:
        return len(self.sequences)

    @property
    def orientation(self) -> Orientation:
        return self.sequences[0].orientation

    def __iter__(self):
        return iter(self.sequences)


@dataclass(frozen=True)
class Support:
    """An exact support value: supporting-sequence count over dataset size."""

    count: int
    denominator: int

    def __post_init__(self) -> None:
        if self.denominator < 1:
            raise ValueError("support denominator must be >= 1")
        if not 0 <= self.count <= self.denominator:
            raise ValueError(f"support count {self.count} outside [0, {self.denominator}]")

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.count, self.denominator)

    def meets(self, threshold: Fraction) -> bool:
        """Exact rational comparison against a minimum-support threshold."""
        return self.fraction >= threshold


def render_support(s: Support) -> str:
    """Render a support as a decimal rounded half-up to 2 places.

    Trailing zeros are stripped, matching the usual table convention:
    4/6 -> "0.67", 3/6 -> "0.5", 6/6 -> "1", 0/6 -> "0".
    """
    # floor(100*c/d + 1/2) computed in integers keeps the rounding exact.
    hundredths = (200 * s.count + s.denominator) // (2 * s.denominator)
    whole, frac = divmod(hundredths, 100)
    if frac == 0:
        return str(whole)
    if frac % 10 == 0:
        return f"{whole}.{frac // 10}"
    return f"{whole}.{frac:02d}"


class Gap(NamedTuple):
    """One observed time-gap, annotated with the sequence it came from."""

    value: int
    seq_id: str


@dataclass(frozen=True)
class GapList:
    """All gaps observed for one ordered pair of itemsets, sorted ascending."""

    pair: tuple[Itemset, Itemset]
    gaps: tuple[Gap, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "gaps", tuple(Gap(*g) for g in self.gaps))
        for g in self.gaps:
            if g.value <= 0:
                raise ValueError(f"gap values must be positive, got {g.value}")
        values = [g.value for g in self.gaps]
        if values != sorted(values):
            raise ValueError("gaps must be sorted non-decreasing")

    @property
    def values(self) -> tuple[int, ...]:
        return tuple(g.value for g in self.gaps)


@dataclass(frozen=True, order=True)
class TimeRange:
    """A closed interval [lo, hi] of gap values."""

    lo: int
    hi: int

    def __post_init__(self) -> None:
        if not 0 < self.lo <= self.hi:
            raise ValueError(f"need 0 < lo <= hi, got [{self.lo}, {self.hi}]")

    def contains(self, gap: int) -> bool:
        return self.lo <= gap <= self.hi

    @property
    def text(self) -> str:
        return f"[{self.lo},{self.hi}]"

    def __str__(self) -> str:
        return self.text


@dataclass(frozen=True)
class IntervalPattern:
    """A sequence pattern: k itemsets, optionally separated by k-1 time ranges.

    ``intervals`` is empty for a plain pattern (order only) and has
    exactly ``len(elements) - 1`` entries for a time-interval pattern.
    The canonical text interleaves both: ``<(s2), [1,5], (s1)>``.
    """

    elements: tuple[Itemset, ...]
    intervals: tuple[TimeRange, ...]
    orientation: Orientation

    def __post_init__(self) -> None:
        object.__setattr__(self, "elements", tuple(self.elements))
        object.__setattr__(self, "intervals", tuple(self.intervals))
        if not self.elements:
            raise ValueError("pattern must contain at least one element")
        if self.intervals and len(self.intervals) != len(self.elements) - 1:
            raise ValueError(
                f"{len(self.elements)} elements need {len(self.elements) - 1} "
                f"intervals or none, got {len(self.intervals)}"
            )

    @property
    def length(self) -> int:
        return len(self.elements)

    @property
    def is_annotated(self) -> bool:
        """True when the pattern carries a time range between each element pair."""
        return len(self.elements) == 1 or bool(self.intervals)

    def contains(self, itemset: Itemset) -> bool:
        return itemset in self.elements

    @property
    def sort_key(self) -> tuple:
        """Total order: lexicographic on elements, then on intervals."""
        return (self.elements, self.intervals)

    def __lt__(self, other: "IntervalPattern") -> bool:
        if not isinstance(other, IntervalPattern):
            return NotImplemented
        return self.sort_key < other.sort_key

    @property
    def text(self) -> str:
        parts = [self.elements[0].text]
        for i, element in enumerate(self.elements[1:]):
            if self.intervals:
                parts.append(self.intervals[i].text)
            parts.append(element.text)
        return "<" + ", ".join(parts) + ">"

    def __str__(self) -> str:
        return self.text


_RANGE_TOKEN = re.compile(r"\[(\d+),(\d+)\]\Z")
_ITEMSET_TOKEN = re.compile(r"\(([^()]+)\)\Z")


def parse_pattern(text: str, orientation: Orientation = Orientation.ORIGINAL) -> IntervalPattern:
    """Parse the canonical pattern text back into an IntervalPattern.

    Inverse of ``IntervalPattern.text`` (the text does not encode
    orientation, so the caller supplies it).
    """
    s = text.strip()
    if not (s.startswith("<") and s.endswith(">")):
        raise ValueError(f"pattern text must be wrapped in <>: {text!r}")
    tokens = s[1:-1].split(", ")
    elements: list[Itemset] = []
    intervals: list[TimeRange] = []
    for tok in tokens:
        if m := _ITEMSET_TOKEN.match(tok):
            elements.append(Itemset(tuple(m.group(1).split(","))))
        elif m := _RANGE_TOKEN.match(tok):
            intervals.append(TimeRange(int(m.group(1)), int(m.group(2))))
        else:
            raise ValueError(f"unrecognized pattern token: {tok!r}")
    if intervals and len(intervals) != len(elements) - 1:
        raise ValueError(f"malformed pattern text: {text!r}")
    # Annotated text must alternate itemset/range; re-render to verify.
    pattern = IntervalPattern(tuple(elements), tuple(intervals), orientation)
    if pattern.text != s:
        raise ValueError(f"non-canonical pattern text: {text!r}")
    return pattern


def validate_sequence(raw: Iterable[tuple[Itemset, int]], id: str) -> Sequence:
    """Build an original-orientation sequence from (itemset, time) pairs.

    Events are sorted by time; equal timestamps are rejected because the
    relative order of such events would be ambiguous.
    """
    pairs = list(raw)
    if not pairs:
        raise EmptySequenceError(f"sequence {id!r} has no events")
    events = sorted((Event(itemset, time) for itemset, time in pairs), key=lambda e: e.time)
    return Sequence(id, tuple(events), Orientation.ORIGINAL)


def to_fraction(value: Fraction | int | float | str) -> Fraction:
    """Convert a user-supplied threshold to an exact Fraction.

    Floats go through their shortest decimal repr, so 0.3 means 3/10
    rather than the nearest binary double.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a valid threshold")
    if isinstance(value, (int, str)):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(str(value))
    raise TypeError(f"cannot interpret {value!r} as a fraction")
