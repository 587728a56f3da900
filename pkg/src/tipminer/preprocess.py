"""Target-orientation transforms.

The mining pipeline anchors a target itemset by reversing every
sequence, dropping sequences that never contain the target, and cutting
each retained sequence down to the suffix that starts at the target.
After mining, patterns are filtered to those containing the target and
reversed back into original time order.
"""

from __future__ import annotations

from .model import (
    Dataset,
    IntervalPattern,
    Itemset,
    MiningError,
    Orientation,
    Sequence,
    WrongOrientationError,
)
from dataclasses import dataclass


class EmptyResultError(MiningError):
    """No sequence contains the target; mining cannot proceed."""


class TargetAbsentError(MiningError):
    """A sequence was expected to contain the target but does not."""


@dataclass(frozen=True)
class TargetSpec:
    """The itemset that every emitted pattern must contain."""

    target: Itemset

    @classmethod
    def of(cls, *items: str) -> "TargetSpec":
        return cls(Itemset.of(*items))

    def matches(self, itemset: Itemset) -> bool:
        return itemset == self.target


def _require(orientation: Orientation, obj: Sequence | Dataset | IntervalPattern, what: str) -> None:
    if obj.orientation is not orientation:
        raise WrongOrientationError(f"{what} must be {orientation.value}, got {obj.orientation.value}")


def reverse_sequence(s: Sequence) -> Sequence:
    """Reverse an original sequence so its last event comes first."""
    _require(Orientation.ORIGINAL, s, "sequence")
    return Sequence(s.id, tuple(reversed(s.events)), Orientation.REVERSED)


def filter_by_target(d: Dataset, t: TargetSpec) -> Dataset:
    """Keep only the reversed sequences that contain the target itemset.

    The size of the returned dataset becomes the support denominator for
    every later mining stage.
    """
    _require(Orientation.REVERSED, d, "dataset")
    kept = tuple(s for s in d.sequences if s.contains_itemset(t.target))
    if not kept:
        raise EmptyResultError(f"no sequence contains target {t.target.text}")
    return Dataset(kept)


def truncate_before_target(s: Sequence, t: TargetSpec) -> Sequence:
    """Drop every event before the first target occurrence in the reversed list.

    With reversed input this keeps the suffix anchored at the latest
    target occurrence in original time.
    """
    _require(Orientation.REVERSED, s, "sequence")
    for i, event in enumerate(s.events):
        if t.matches(event.itemset):
            return s if i == 0 else Sequence(s.id, s.events[i:], Orientation.REVERSED)
    raise TargetAbsentError(f"sequence {s.id!r} does not contain target {t.target.text}")


def prepare_working_dataset(d: Dataset, t: TargetSpec) -> Dataset:
    """Reverse, filter, and truncate an original dataset in one step.

    Every sequence of the result starts with a target event.
    """
    _require(Orientation.ORIGINAL, d, "dataset")
    reversed_ds = Dataset(tuple(reverse_sequence(s) for s in d.sequences))
    filtered = filter_by_target(reversed_ds, t)
    return Dataset(tuple(truncate_before_target(s, t) for s in filtered.sequences))


def filter_patterns_by_target(
    ps: list[IntervalPattern], t: TargetSpec
) -> list[IntervalPattern]:
    """Keep the patterns that contain the target itemset as an element."""
    for p in ps:
        _require(Orientation.REVERSED, p, "pattern")
    return [p for p in ps if p.contains(t.target)]


def rereverse_pattern(p: IntervalPattern) -> IntervalPattern:
    """Flip a mined (reversed) pattern back into original time order.

    Elements and intervals are both reversed, so each time range stays
    attached to the same adjacent element pair.
    """
    _require(Orientation.REVERSED, p, "pattern")
    return IntervalPattern(
        tuple(reversed(p.elements)),
        tuple(reversed(p.intervals)),
        Orientation.ORIGINAL,
    )
