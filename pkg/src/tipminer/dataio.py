"""Dataset ingestion, result serialization, and intermediate-table dumps.

Two input formats are supported. CSV carries one item per row as
``sequence_id,timestamp,item``; rows sharing a sequence id and timestamp
aggregate into one event's itemset. JSONL carries one sequence per line
as ``{"id": ..., "events": [{"t": <int>, "items": [<str>, ...]}, ...]}``.
"""

from __future__ import annotations

import csv
import json
from enum import Enum
from pathlib import Path

from .miner import MiningTrace, PatternSupport
from .model import (
    Dataset,
    IntervalPattern,
    Itemset,
    MiningError,
    Support,
    render_support,
    validate_sequence,
)


class ParseError(MiningError):
    """The input file could not be parsed; carries a line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class ValidationError(MiningError):
    """A parsed sequence violates a model invariant."""

    def __init__(self, seq_id: str, cause: Exception):
        self.seq_id = seq_id
        super().__init__(f"sequence {seq_id!r}: {cause}")


class InputFormat(Enum):
    CSV = "csv"
    JSONL = "jsonl"

    @classmethod
    def parse(cls, name: str) -> "InputFormat":
        try:
            return cls(name.lower())
        except ValueError:
            raise ValueError(f"unknown input format: {name!r} (expected csv or jsonl)")


def _build(raw: dict[str, dict[int, set[str]]]) -> Dataset:
    sequences = []
    for seq_id, by_time in raw.items():
        try:
            events = [(Itemset(tuple(items)), t) for t, items in by_time.items()]
            sequences.append(validate_sequence(events, seq_id))
        except (MiningError, ValueError) as exc:
            raise ValidationError(seq_id, exc) from exc
    if not sequences:
        raise ParseError("input contains no sequences")
    return Dataset(tuple(sequences))


def _load_csv(path: Path) -> Dataset:
    raw: dict[str, dict[int, set[str]]] = {}
    with open(path, newline="", encoding="utf-8") as fh:
        for lineno, row in enumerate(csv.reader(fh), start=1):
            if not row or (len(row) == 1 and not row[0].strip()):
                continue
            if len(row) != 3:
                raise ParseError(f"expected 3 fields, got {len(row)}", lineno)
            seq_id, time_text, item = (field.strip() for field in row)
            try:
                time = int(time_text)
            except ValueError:
                raise ParseError(f"timestamp is not an integer: {time_text!r}", lineno)
            raw.setdefault(seq_id, {}).setdefault(time, set()).add(item)
    return _build(raw)


def _load_jsonl(path: Path) -> Dataset:
    raw: dict[str, dict[int, set[str]]] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise ParseError(f"invalid JSON: {exc.msg}", lineno)
            if not isinstance(obj, dict) or "id" not in obj or "events" not in obj:
                raise ParseError("each line needs 'id' and 'events'", lineno)
            seq_id = obj["id"]
            if not isinstance(seq_id, str):
                raise ParseError("'id' must be a string", lineno)
            if not isinstance(obj["events"], list):
                raise ParseError("'events' must be a list", lineno)
            if seq_id in raw:
                raise ParseError(f"duplicate sequence id {seq_id!r}", lineno)
            by_time: dict[int, set[str]] = {}
            for event in obj["events"]:
                if (
                    not isinstance(event, dict)
                    or not isinstance(event.get("t"), int)
                    or isinstance(event.get("t"), bool)
                    or not isinstance(event.get("items"), list)
                    or not all(isinstance(i, str) for i in event["items"])
                ):
                    raise ParseError(
                        "each event needs an integer 't' and a string list 'items'",
                        lineno,
                    )
                if event["t"] in by_time:
                    raise ParseError(f"duplicate timestamp {event['t']}", lineno)
                by_time[event["t"]] = set(event["items"])
            raw[seq_id] = by_time
    return _build(raw)


def load_dataset(path: str | Path, fmt: InputFormat) -> Dataset:
    """Parse a dataset file; sequences keep their order of first appearance."""
    loaders = {InputFormat.CSV: _load_csv, InputFormat.JSONL: _load_jsonl}
    return loaders[fmt](Path(path))


def save_dataset(d: Dataset, path: str | Path, fmt: InputFormat) -> None:
    """Write a dataset so that loading it back gives an identical dataset."""
    path = Path(path)
    if fmt is InputFormat.CSV:
        with open(path, "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh)
            for s in d.sequences:
                for e in s.events:
                    for item in e.itemset.items:
                        writer.writerow([s.id, e.time, item])
    else:
        with open(path, "w", encoding="utf-8") as fh:
            for s in d.sequences:
                obj = {
                    "id": s.id,
                    "events": [
                        {"t": e.time, "items": list(e.itemset.items)} for e in s.events
                    ],
                }
                fh.write(json.dumps(obj, separators=(",", ":")) + "\n")


def report_json(results: list[PatternSupport]) -> str:
    """JSON report: canonical order, exact counts alongside rendered supports."""
    rows = [
        {
            "elements": [list(e.items) for e in p.elements],
            "intervals": [{"lo": r.lo, "hi": r.hi} for r in p.intervals],
            "support": render_support(s),
            "count": s.count,
            "denominator": s.denominator,
        }
        for p, s in sorted(results, key=lambda ps: ps[0].sort_key)
    ]
    return json.dumps(rows, indent=2) + "\n"


def report_table(results: list[PatternSupport]) -> str:
    """Plain-text report: one pattern per line with its rendered support."""
    lines = [
        f"{p.text}\t{render_support(s)}"
        for p, s in sorted(results, key=lambda ps: ps[0].sort_key)
    ]
    return "".join(line + "\n" for line in lines)


def _write_rows(path: Path, rows: list[list[str]]) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for row in rows:
            fh.write("\t".join(row) + "\n")


def dump_intermediate(trace: MiningTrace, outdir: str | Path) -> list[Path]:
    """Write every intermediate table of a run as TSV files.

    Produces ``fs1.tsv`` (frequent single itemsets), ``cs2.tsv`` (all
    ordered-pair candidates), ``gaps.tsv`` (per-pair gap lists),
    ``clusters.tsv`` (per-pair surviving clusters and their ranges), and
    one ``ctis<k>.tsv`` per join level. Rows are canonically ordered.
    """
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    written = []

    def emit(name: str, rows: list[list[str]]) -> None:
        path = outdir / name
        _write_rows(path, rows)
        written.append(path)

    emit(
        "fs1.tsv",
        [[p.elements[0].bare, render_support(s)] for p, s in trace.level1.frequent],
    )
    emit(
        "cs2.tsv",
        [
            [p.elements[0].bare, p.elements[1].bare, render_support(s)]
            for p, s in trace.level2.candidates
        ],
    )
    emit(
        "gaps.tsv",
        [
            [
                pc.gap_list.pair[0].bare,
                pc.gap_list.pair[1].bare,
                ",".join(str(v) for v in pc.gap_list.values),
            ]
            for pc in trace.pair_clusterings
        ],
    )
    emit(
        "clusters.tsv",
        [
            [
                pc.gap_list.pair[0].bare,
                pc.gap_list.pair[1].bare,
                ",".join(str(v) for v in c.values),
                c.range.text,
            ]
            for pc in trace.pair_clusterings
            for c in pc.clusters
        ],
    )
    for level in trace.interval_levels:
        emit(
            f"ctis{level.k}.tsv",
            [[p.text, render_support(s)] for p, s in level.candidates],
        )
    return written
