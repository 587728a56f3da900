from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from tipminer import (
    Dataset,
    DuplicateTimestampError,
    EmptySequenceError,
    Event,
    IntervalPattern,
    Itemset,
    NegativeTimestampError,
    Orientation,
    Sequence,
    Support,
    TimeRange,
    parse_pattern,
    render_support,
    to_fraction,
    validate_sequence,
)

import worked_example as wx


def ev(item: str, t: int) -> Event:
    return Event(Itemset.of(item), t)


class TestItemset:
    def test_canonical_sorted(self):
        assert Itemset.of("b", "a").items == ("a", "b")
        assert Itemset.of("b", "a") == Itemset.of("a", "b")

    def test_rejects_duplicates_and_empties(self):
        with pytest.raises(ValueError):
            Itemset.of("a", "a")
        with pytest.raises(ValueError):
            Itemset(())
        with pytest.raises(ValueError):
            Itemset.of("")

    def test_rejects_delimiter_characters(self):
        for bad in ("a,b", "a b", "(a)", "[a]", "<a>"):
            with pytest.raises(ValueError):
                Itemset.of(bad)

    def test_ordering_is_lexicographic(self):
        assert Itemset.of("s1") < Itemset.of("s2") < Itemset.of("s7")
        assert Itemset.of("a") < Itemset.of("a", "b")

    def test_text_forms(self):
        assert Itemset.of("s7").text == "(s7)"
        assert Itemset.of("b", "a").bare == "a,b"


class TestValidateSequence:
    def test_reference_row(self):
        s = validate_sequence(
            [(Itemset.of("s5"), 8), (Itemset.of("s4"), 15), (Itemset.of("s6"), 20)],
            "C001",
        )
        assert s.id == "C001"
        assert len(s.events) == 3
        assert s.orientation is Orientation.ORIGINAL

    def test_singleton(self):
        s = validate_sequence([(Itemset.of("s7"), 7)], "X")
        assert [e.time for e in s.events] == [7]

    def test_sorts_unordered_input(self):
        s = validate_sequence(
            [(Itemset.of("b"), 9), (Itemset.of("a"), 2), (Itemset.of("c"), 5)], "S"
        )
        assert [e.time for e in s.events] == [2, 5, 9]

    def test_duplicate_timestamp_rejected(self):
        with pytest.raises(DuplicateTimestampError):
            validate_sequence([(Itemset.of("a"), 5), (Itemset.of("b"), 5)], "S")

    def test_empty_rejected(self):
        with pytest.raises(EmptySequenceError):
            validate_sequence([], "S")

    def test_negative_timestamp_rejected(self):
        with pytest.raises(NegativeTimestampError):
            validate_sequence([(Itemset.of("a"), -1)], "S")

    @given(st.permutations(list(range(0, 40, 3))))
    def test_sorting_is_canonical(self, times):
        s = validate_sequence([(Itemset.of("x"), t) for t in times], "S")
        assert [e.time for e in s.events] == sorted(times)


class TestSequenceInvariants:
    def test_reversed_requires_decreasing(self):
        Sequence("ok", (ev("a", 9), ev("b", 3)), Orientation.REVERSED)
        with pytest.raises(ValueError):
            Sequence("bad", (ev("a", 3), ev("b", 9)), Orientation.REVERSED)

    def test_original_requires_increasing(self):
        with pytest.raises(ValueError):
            Sequence("bad", (ev("a", 9), ev("b", 3)), Orientation.ORIGINAL)


class TestDataset:
    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            Dataset(())

    def test_rejects_duplicate_ids(self):
        s = validate_sequence([(Itemset.of("a"), 1)], "S")
        with pytest.raises(ValueError):
            Dataset((s, s))

    def test_rejects_mixed_orientation(self):
        a = validate_sequence([(Itemset.of("a"), 1)], "A")
        b = Sequence("B", (ev("b", 2),), Orientation.REVERSED)
        with pytest.raises(ValueError):
            Dataset((a, b))

    def test_n(self, table1):
        assert table1.n == 10


class TestSupport:
    def test_bounds(self):
        with pytest.raises(ValueError):
            Support(7, 6)
        with pytest.raises(ValueError):
            Support(0, 0)

    def test_exact_threshold_comparison(self):
        # 2/6 passes a 0.3 threshold, 1/6 fails; no decimal rounding involved.
        assert Support(2, 6).meets(Fraction(3, 10))
        assert not Support(1, 6).meets(Fraction(3, 10))
        assert Support(3, 6).meets(Fraction(1, 2))

    @pytest.mark.parametrize(
        "count,denom,expected",
        [
            (4, 6, "0.67"),
            (5, 6, "0.83"),
            (0, 6, "0"),
            (3, 6, "0.5"),
            (6, 6, "1"),
            (1, 6, "0.17"),
            (2, 6, "0.33"),
            (1, 8, "0.13"),  # 0.125 rounds half-up
            (1, 20, "0.05"),
            (1, 10, "0.1"),
        ],
    )
    def test_render(self, count, denom, expected):
        assert render_support(Support(count, denom)) == expected

    @given(st.integers(1, 400).flatmap(lambda d: st.tuples(st.integers(0, d), st.just(d))))
    def test_render_matches_decimal_half_up(self, cd):
        from decimal import ROUND_HALF_UP, Decimal

        count, denom = cd
        got = render_support(Support(count, denom))
        want = (Decimal(count) / Decimal(denom)).quantize(
            Decimal("0.01"), rounding=ROUND_HALF_UP
        )
        assert Decimal(got) == want.normalize()
        assert not (("." in got) and got.endswith("0"))


class TestTimeRange:
    def test_closed_interval(self):
        r = TimeRange(3, 5)
        assert r.contains(3) and r.contains(5) and r.contains(4)
        assert not r.contains(2) and not r.contains(6)

    def test_invalid(self):
        with pytest.raises(ValueError):
            TimeRange(0, 4)
        with pytest.raises(ValueError):
            TimeRange(5, 4)


class TestIntervalPattern:
    def test_interval_arity(self):
        a, b, c = Itemset.of("a"), Itemset.of("b"), Itemset.of("c")
        IntervalPattern((a, b, c), (), Orientation.ORIGINAL)  # plain is fine
        IntervalPattern((a, b, c), (TimeRange(1, 2), TimeRange(2, 3)), Orientation.ORIGINAL)
        with pytest.raises(ValueError):
            IntervalPattern((a, b, c), (TimeRange(1, 2),), Orientation.ORIGINAL)
        with pytest.raises(ValueError):
            IntervalPattern((), (), Orientation.ORIGINAL)

    def test_canonical_text(self):
        p = wx.make_pattern(
            ("s2", "s1", "s7"), ((1, 5), (15, 15)), Orientation.ORIGINAL
        )
        assert p.text == "<(s2), [1,5], (s1), [15,15], (s7)>"

    def test_plain_text(self):
        p = wx.make_pattern(("s7", "s6"), (), Orientation.REVERSED)
        assert p.text == "<(s7), (s6)>"

    def test_total_order_elements_then_intervals(self):
        p1 = wx.make_pattern(("s1", "s3"), ((1, 2),), Orientation.ORIGINAL)
        p2 = wx.make_pattern(("s1", "s7"), ((1, 2),), Orientation.ORIGINAL)
        p3 = wx.make_pattern(("s1", "s7"), ((2, 2),), Orientation.ORIGINAL)
        assert sorted([p3, p2, p1]) == [p1, p2, p3]


_items = st.text(alphabet="abcdefgs124567", min_size=1, max_size=3)
_itemsets = st.builds(lambda xs: Itemset(tuple(xs)), st.sets(_items, min_size=1, max_size=3))
_ranges = st.builds(
    lambda lo, extra: TimeRange(lo, lo + extra), st.integers(1, 40), st.integers(0, 20)
)


@st.composite
def _patterns(draw):
    k = draw(st.integers(1, 5))
    elements = tuple(draw(_itemsets) for _ in range(k))
    annotated = draw(st.booleans()) and k > 1
    intervals = tuple(draw(_ranges) for _ in range(k - 1)) if annotated else ()
    orientation = draw(st.sampled_from(list(Orientation)))
    return IntervalPattern(elements, intervals, orientation)


class TestPatternTextRoundTrip:
    @given(_patterns())
    def test_parse_inverts_render(self, p):
        assert parse_pattern(p.text, p.orientation) == p

    def test_reference_pattern(self):
        text = "<(s2), [1,5], (s1), [15,15], (s7)>"
        p = parse_pattern(text)
        assert p.text == text
        assert [e.bare for e in p.elements] == ["s2", "s1", "s7"]

    @pytest.mark.parametrize(
        "bad",
        ["", "<>", "(s1)", "<(s1), [1,2]>", "<[1,2], (s1), (s2)>", "<(s1), (s2), [1,2], (s3)>", "<(s1),(s2)>"],
    )
    def test_rejects_malformed(self, bad):
        with pytest.raises(ValueError):
            parse_pattern(bad)


class TestToFraction:
    def test_decimal_intent_of_floats(self):
        assert to_fraction(0.3) == Fraction(3, 10)
        assert to_fraction(0.5) == Fraction(1, 2)

    def test_strings_and_fractions(self):
        assert to_fraction("0.3") == Fraction(3, 10)
        assert to_fraction("3/10") == Fraction(3, 10)
        assert to_fraction(Fraction(1, 3)) == Fraction(1, 3)

    def test_rejects_bool(self):
        with pytest.raises(TypeError):
            to_fraction(True)
