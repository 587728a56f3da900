"""Recursive maximal-gap clustering of a pair's time-gap list.

The gap list of a frequent 2-sequence is split recursively at the
largest difference between adjacent values. Children that keep enough
distinct supporting sequences are split further; children that don't are
deleted. A cluster whose children all fail the threshold, whose adjacent
differences are all equal, or which has fewer than two values, is
non-dividable and is kept whole. The surviving clusters become the
frequent time ranges of the pair.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .model import (
    Dataset,
    Gap,
    GapList,
    Itemset,
    Orientation,
    Support,
    TimeRange,
    WrongOrientationError,
)


@dataclass(frozen=True)
class GapCluster:
    """A contiguous run of a sorted gap list, kept with its sequence ids."""

    gaps: tuple[Gap, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "gaps", tuple(Gap(*g) for g in self.gaps))
        if not self.gaps:
            raise ValueError("cluster must contain at least one gap")
        values = [g.value for g in self.gaps]
        if values != sorted(values):
            raise ValueError("cluster gaps must be sorted")

    @property
    def values(self) -> tuple[int, ...]:
        return tuple(g.value for g in self.gaps)

    @property
    def range(self) -> TimeRange:
        return TimeRange(self.gaps[0].value, self.gaps[-1].value)

    @property
    def sequence_ids(self) -> frozenset[str]:
        return frozenset(g.seq_id for g in self.gaps)

    def support(self, n: int) -> Support:
        """Distinct contributing sequences over dataset size.

        A sequence with several gaps in the cluster still counts once.
        """
        return Support(len(self.sequence_ids), n)


def collect_gaps(d: Dataset, a: Itemset, b: Itemset) -> GapList:
    """List every time-gap between an ``a`` event and a later ``b`` event.

    Embeddings need not be adjacent: every (a, b) position pair in list
    order contributes one gap. With reversed input the gaps are the
    earlier-listed timestamp minus the later-listed one, hence positive.
    """
    if d.orientation is not Orientation.REVERSED:
        raise WrongOrientationError("gap collection expects the reversed working dataset")
    gaps: list[Gap] = []
    for s in d.sequences:
        for i, first in enumerate(s.events):
            if first.itemset != a:
                continue
            for second in s.events[i + 1 :]:
                if second.itemset == b:
                    gaps.append(Gap(first.time - second.time, s.id))
    gaps.sort()
    return GapList((a, b), tuple(gaps))


def split_at_max_gap(c: GapCluster) -> tuple[GapCluster, GapCluster] | None:
    """Split a cluster at the largest adjacent difference, or report non-dividable.

    Returns None when the cluster has fewer than two gaps or all adjacent
    differences are equal (a single difference counts as all-equal).
    Ties on the maximum break to the leftmost position.
    """
    if len(c.gaps) < 2:
        return None
    diffs = [c.gaps[i + 1].value - c.gaps[i].value for i in range(len(c.gaps) - 1)]
    if len(set(diffs)) == 1:
        return None
    cut = diffs.index(max(diffs)) + 1
    return GapCluster(c.gaps[:cut]), GapCluster(c.gaps[cut:])


def cluster(gaps: GapList, n: int, min_supp: Fraction) -> list[GapCluster]:
    """Recursively split a gap list into its non-dividable frequent clusters.

    After each split, children with support >= min_supp are kept and
    recursed into; the rest are deleted. If neither child survives, the
    parent itself is non-dividable and is kept whole. Returned clusters
    are ordered by their lower bound.
    """
    if not gaps.gaps:
        raise ValueError(f"no gaps to cluster for pair {gaps.pair[0].text}->{gaps.pair[1].text}")

    def finalize(c: GapCluster) -> list[GapCluster]:
        parts = split_at_max_gap(c)
        if parts is None:
            return [c]
        reserved = [child for child in parts if child.support(n).meets(min_supp)]
        if not reserved:
            return [c]
        out: list[GapCluster] = []
        for child in reserved:
            out.extend(finalize(child))
        return out

    return sorted(finalize(GapCluster(gaps.gaps)), key=lambda c: c.range)


def debug_line(gaps: GapList, clusters: list[GapCluster]) -> str:
    """One-line dump of a pair's gaps and final clusters, for debugging."""
    a, b = gaps.pair
    gap_text = "[" + ",".join(str(v) for v in gaps.values) + "]"
    cluster_text = "[" + ",".join(
        "[" + ",".join(str(v) for v in c.values) + "]" for c in clusters
    ) + "]"
    return f"({a.bare},{b.bare}): gaps={gap_text} clusters={cluster_text}"
