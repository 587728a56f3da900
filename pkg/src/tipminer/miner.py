"""Level-wise mining engine for target-oriented time-interval patterns.

Pipeline: reverse/filter/truncate the input around the target, find
frequent single itemsets and frequent ordered pairs, cluster each pair's
gap list into frequent time ranges, then grow longer candidates by
joining patterns that overlap on all but their outermost element,
filtering by support at every level. Finally keep the patterns that
contain the target and flip them back into original time order.

Everything here is a pure function of its inputs; per-candidate support
counting may fan out over worker threads without affecting the output.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence as Seq, TypeVar

from .clustering import GapCluster, cluster, collect_gaps
from .model import (
    Dataset,
    Event,
    GapList,
    IntervalPattern,
    Itemset,
    Orientation,
    Support,
    WrongOrientationError,
    to_fraction,
)
from .preprocess import (
    TargetSpec,
    filter_patterns_by_target,
    prepare_working_dataset,
    rereverse_pattern,
)

T = TypeVar("T")
U = TypeVar("U")

PatternSupport = tuple[IntervalPattern, Support]


@dataclass(frozen=True)
class MiningConfig:
    """Run parameters: support threshold, target, optional length cap."""

    min_supp: Fraction
    target: TargetSpec
    max_length: int | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "min_supp", to_fraction(self.min_supp))
        if not 0 < self.min_supp <= 1:
            raise ValueError(f"min_supp must be in (0, 1], got {self.min_supp}")
        if self.max_length is not None and self.max_length < 2:
            raise ValueError("max_length must be at least 2")


@dataclass(frozen=True)
class LevelResult:
    """Candidates and the frequent survivors at one pattern length."""

    k: int
    candidates: tuple[PatternSupport, ...]
    frequent: tuple[PatternSupport, ...]


@dataclass(frozen=True)
class PairClustering:
    """A frequent pair's gap list together with its surviving clusters."""

    gap_list: GapList
    clusters: tuple[GapCluster, ...]


@dataclass(frozen=True)
class MiningTrace:
    """Every intermediate table of one mining run, for dumps and audits."""

    working: Dataset
    level1: LevelResult
    level2: LevelResult
    pair_clusterings: tuple[PairClustering, ...]
    ftis2: tuple[PatternSupport, ...]
    interval_levels: tuple[LevelResult, ...]
    patterns: tuple[PatternSupport, ...]

    def level(self, k: int) -> LevelResult:
        """The interval-pattern level result for k >= 3."""
        for lv in self.interval_levels:
            if lv.k == k:
                return lv
        raise KeyError(f"no level {k} in this run")


def _pmap(fn: Callable[[T], U], items: Seq[T], workers: int | None) -> list[U]:
    # Order-preserving map; identical results with or without threads.
    if workers is not None and workers > 1 and len(items) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(fn, items))
    return [fn(item) for item in items]


def _embeds_plain(events: tuple[Event, ...], elems: Seq[Itemset]) -> bool:
    pos = 0
    for event in events:
        if event.itemset == elems[pos]:
            pos += 1
            if pos == len(elems):
                return True
    return False


def _embeds_interval(events: tuple[Event, ...], p: IntervalPattern, sign: int) -> bool:
    # sign turns the raw time difference into an elapsed gap: reversed
    # sequences run back in time, original ones forward.
    elements, intervals = p.elements, p.intervals

    def place(ei: int, prev_pos: int) -> bool:
        if ei == len(elements):
            return True
        for pos in range(prev_pos + 1, len(events)):
            if events[pos].itemset != elements[ei]:
                continue
            if ei > 0:
                gap = sign * (events[pos].time - events[prev_pos].time)
                if not intervals[ei - 1].contains(gap):
                    continue
            if place(ei + 1, pos):
                return True
        return False

    return place(0, -1)


def support_plain(d: Dataset, elems: Seq[Itemset]) -> Support:
    """Fraction of sequences containing the itemsets in order (gaps ignored)."""
    if not elems:
        raise ValueError("need at least one element")
    count = sum(1 for s in d.sequences if _embeds_plain(s.events, elems))
    return Support(count, d.n)


def support_interval(d: Dataset, p: IntervalPattern) -> Support:
    """Fraction of sequences with an embedding satisfying every time range.

    An embedding assigns pattern elements to events in list order; each
    consecutive pair's elapsed gap must fall inside the pattern's closed
    interval for that position.
    """
    if p.orientation is not d.orientation:
        raise WrongOrientationError(
            f"pattern is {p.orientation.value} but dataset is {d.orientation.value}"
        )
    if not p.intervals:
        return support_plain(d, p.elements)
    sign = -1 if d.orientation is Orientation.REVERSED else 1
    count = sum(1 for s in d.sequences if _embeds_interval(s.events, p, sign))
    return Support(count, d.n)


def gen_cs1(d: Dataset) -> list[IntervalPattern]:
    """One candidate 1-sequence per distinct itemset in the dataset."""
    distinct = {e.itemset for s in d.sequences for e in s.events}
    return [IntervalPattern((it,), (), d.orientation) for it in sorted(distinct)]


def filter_frequent(
    cands: Iterable[PatternSupport], min_supp: Fraction
) -> list[PatternSupport]:
    """Keep candidates whose exact support reaches the threshold."""
    return [(p, s) for p, s in cands if s.meets(min_supp)]


def gen_cs2(fs1: Seq[IntervalPattern]) -> list[IntervalPattern]:
    """All ordered pairs of distinct frequent 1-sequences."""
    for p in fs1:
        if p.length != 1:
            raise ValueError(f"expected 1-sequences, got length {p.length}")
    out = []
    for first in fs1:
        for second in fs1:
            if first.elements != second.elements:
                out.append(
                    IntervalPattern(
                        first.elements + second.elements, (), first.orientation
                    )
                )
    return sorted(out)


def analyze_pairs(
    fs2: Seq[IntervalPattern], d: Dataset, min_supp: Fraction
) -> list[PairClustering]:
    """Collect and cluster the gap list of each frequent 2-sequence."""
    out = []
    for p in fs2:
        a, b = p.elements
        gaps = collect_gaps(d, a, b)
        out.append(PairClustering(gaps, tuple(cluster(gaps, d.n, min_supp))))
    return out


def extend_to_ftis2(
    fs2: Seq[PatternSupport],
    d: Dataset,
    min_supp: Fraction,
    workers: int | None = None,
) -> list[PatternSupport]:
    """Annotate each frequent 2-sequence with its frequent time ranges.

    Each surviving gap cluster yields one time-interval 2-sequence whose
    support is recounted against the dataset.
    """
    analyses = analyze_pairs([p for p, _ in fs2], d, min_supp)
    return _ftis2_from_clusterings(analyses, d, workers)


def _ftis2_from_clusterings(
    analyses: Seq[PairClustering], d: Dataset, workers: int | None
) -> list[PatternSupport]:
    patterns = [
        IntervalPattern(pc.gap_list.pair, (c.range,), d.orientation)
        for pc in analyses
        for c in pc.clusters
    ]
    supports = _pmap(lambda p: support_interval(d, p), patterns, workers)
    return sorted(zip(patterns, supports), key=lambda ps: ps[0].sort_key)


def join_ctis(ftis_prev: Seq[IntervalPattern]) -> list[IntervalPattern]:
    """Grow level-k candidates from overlapping (k-1)-patterns.

    Two patterns join when the first one minus its head equals the second
    one minus its tail, elements and intervals alike; the joined
    candidate extends the first pattern by the second's final interval
    and element. Output is deduplicated and canonically sorted.
    """
    for p in ftis_prev:
        if p.length < 2 or not p.is_annotated:
            raise ValueError("join requires time-interval patterns of length >= 2")
    out = set()
    for s1 in ftis_prev:
        for s2 in ftis_prev:
            if (
                s1.elements[1:] == s2.elements[:-1]
                and s1.intervals[1:] == s2.intervals[:-1]
            ):
                out.add(
                    IntervalPattern(
                        s1.elements + (s2.elements[-1],),
                        s1.intervals + (s2.intervals[-1],),
                        s1.orientation,
                    )
                )
    return sorted(out)


def mine_detailed(
    d_original: Dataset, cfg: MiningConfig, workers: int | None = None
) -> MiningTrace:
    """Run the full pipeline and keep every intermediate table."""
    if d_original.orientation is not Orientation.ORIGINAL:
        raise WrongOrientationError("mining expects an original-orientation dataset")
    working = prepare_working_dataset(d_original, cfg.target)

    cs1 = gen_cs1(working)
    cs1_supported = list(
        zip(cs1, _pmap(lambda p: support_plain(working, p.elements), cs1, workers))
    )
    fs1 = filter_frequent(cs1_supported, cfg.min_supp)
    level1 = LevelResult(1, tuple(cs1_supported), tuple(fs1))

    cs2 = gen_cs2([p for p, _ in fs1])
    cs2_supported = list(
        zip(cs2, _pmap(lambda p: support_plain(working, p.elements), cs2, workers))
    )
    fs2 = filter_frequent(cs2_supported, cfg.min_supp)
    level2 = LevelResult(2, tuple(cs2_supported), tuple(fs2))

    clusterings = analyze_pairs([p for p, _ in fs2], working, cfg.min_supp)
    ftis2 = _ftis2_from_clusterings(clusterings, working, workers)

    interval_levels: list[LevelResult] = []
    frequent_prev = ftis2
    k = 3
    while frequent_prev and (cfg.max_length is None or k <= cfg.max_length):
        candidates = join_ctis([p for p, _ in frequent_prev])
        if not candidates:
            break
        supported = list(
            zip(candidates, _pmap(lambda p: support_interval(working, p), candidates, workers))
        )
        frequent = filter_frequent(supported, cfg.min_supp)
        interval_levels.append(LevelResult(k, tuple(supported), tuple(frequent)))
        frequent_prev = frequent
        k += 1

    pool = list(ftis2)
    for level in interval_levels:
        pool.extend(level.frequent)
    targeted = set(filter_patterns_by_target([p for p, _ in pool], cfg.target))
    final = sorted(
        ((rereverse_pattern(p), s) for p, s in pool if p in targeted),
        key=lambda ps: ps[0].sort_key,
    )

    return MiningTrace(
        working=working,
        level1=level1,
        level2=level2,
        pair_clusterings=tuple(clusterings),
        ftis2=tuple(ftis2),
        interval_levels=tuple(interval_levels),
        patterns=tuple(final),
    )


def mine(
    d_original: Dataset, cfg: MiningConfig, workers: int | None = None
) -> list[PatternSupport]:
    """Mine the target-oriented time-interval patterns of a dataset.

    Returns original-orientation patterns with their supports, sorted
    canonically; every pattern contains the target itemset.
    """
    return list(mine_detailed(d_original, cfg, workers).patterns)
