"""Parsing of the comma separated interaction log.

Each input line is a 5-tuple::

    user_id_1,user_id_2,timestamp,relationship_strength,relationship_class

Timestamps follow ``yyyy[/mm[/dd[-hr[:mn[:sc]]]]]``: any contiguous
prefix of the pattern is accepted and its length determines the
precision of the resulting time point. Malformed lines are reported as
diagnostics and skipped rather than aborting the whole file.
"""

from __future__ import annotations

import enum
import re
from calendar import monthrange
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .errors import EmptyInput, MalformedTimestamp


class Precision(enum.IntEnum):
    YEAR = 1
    MONTH = 2
    DAY = 3
    HOUR = 4
    MINUTE = 5
    SECOND = 6


_TIMESTAMP_RE = re.compile(
    r"^(\d{4})"
    r"(?:/(\d{1,2})"
    r"(?:/(\d{1,2})"
    r"(?:-(\d{1,2})"
    r"(?::(\d{1,2})"
    r"(?::(\d{1,2}))?)?)?)?)?$"
)


@dataclass(frozen=True, order=False)
class TimePoint:
    """A timestamp with explicit precision.

    Populated fields form a contiguous prefix: a set ``second`` implies
    set ``minute``, ``hour``, ``day`` and ``month``. Ordering compares
    the field prefix lexicographically with absent fields treated as 0,
    so coarser points sort before anything inside the same period.
    """

    year: int
    month: int | None = None
    day: int | None = None
    hour: int | None = None
    minute: int | None = None
    second: int | None = None

    def __post_init__(self) -> None:
        fields = (self.month, self.day, self.hour, self.minute, self.second)
        seen_absent = False
        for value in fields:
            if value is None:
                seen_absent = True
            elif seen_absent:
                raise ValueError("populated fields must form a contiguous prefix")
        if self.year < 1:
            raise ValueError(f"year {self.year} out of range")
        if self.month is not None and not 1 <= self.month <= 12:
            raise ValueError(f"month {self.month} out of range")
        if self.day is not None:
            # Real calendar dates only; interval arithmetic maps days to ordinals.
            last = monthrange(self.year, self.month)[1]
            if not 1 <= self.day <= last:
                raise ValueError(f"day {self.day} out of range for {self.year}/{self.month:02d}")
        if self.hour is not None and not 0 <= self.hour <= 23:
            raise ValueError(f"hour {self.hour} out of range")
        if self.minute is not None and not 0 <= self.minute <= 59:
            raise ValueError(f"minute {self.minute} out of range")
        if self.second is not None and not 0 <= self.second <= 59:
            raise ValueError(f"second {self.second} out of range")

    @property
    def precision(self) -> Precision:
        for level, value in (
            (Precision.SECOND, self.second),
            (Precision.MINUTE, self.minute),
            (Precision.HOUR, self.hour),
            (Precision.DAY, self.day),
            (Precision.MONTH, self.month),
        ):
            if value is not None:
                return level
        return Precision.YEAR

    def sort_key(self) -> tuple[int, int, int, int, int, int]:
        return (
            self.year,
            self.month or 0,
            self.day or 0,
            self.hour or 0,
            self.minute or 0,
            self.second or 0,
        )

    def __lt__(self, other: "TimePoint") -> bool:
        return self.sort_key() < other.sort_key()

    def __le__(self, other: "TimePoint") -> bool:
        return self.sort_key() <= other.sort_key()

    def __gt__(self, other: "TimePoint") -> bool:
        return self.sort_key() > other.sort_key()

    def __ge__(self, other: "TimePoint") -> bool:
        return self.sort_key() >= other.sort_key()

    def format(self) -> str:
        """Render back to the input syntax at this point's precision."""
        out = f"{self.year:04d}"
        if self.month is None:
            return out
        out += f"/{self.month:02d}"
        if self.day is None:
            return out
        out += f"/{self.day:02d}"
        if self.hour is None:
            return out
        out += f"-{self.hour:02d}"
        if self.minute is None:
            return out
        out += f":{self.minute:02d}"
        if self.second is None:
            return out
        return out + f":{self.second:02d}"


def parse_timestamp(text: str) -> TimePoint:
    """Parse ``yyyy[/mm[/dd[-hr[:mn[:sc]]]]]``, consuming the whole input."""
    match = _TIMESTAMP_RE.match(text)
    if match is None:
        raise MalformedTimestamp(f"unparseable timestamp {text!r}")
    parts = [int(g) if g is not None else None for g in match.groups()]
    try:
        return TimePoint(*parts)  # type: ignore[arg-type]
    except ValueError as exc:
        raise MalformedTimestamp(f"bad timestamp {text!r}: {exc}") from exc


@dataclass(frozen=True)
class InteractionRecord:
    """One parsed input line."""

    user_a: str
    user_b: str
    time: TimePoint
    strength: float
    rel_class: str


@dataclass(frozen=True)
class LineDiagnostic:
    line_no: int
    reason: str


def _parse_line(line_no: int, line: str) -> InteractionRecord:
    fields = [f.strip() for f in line.split(",")]
    if len(fields) != 5:
        raise ValueError(f"expected 5 fields, got {len(fields)}")
    user_a, user_b, raw_time, raw_strength, rel_class = fields
    if not user_a or not user_b:
        raise ValueError("empty user id")
    time = parse_timestamp(raw_time)
    try:
        strength = float(raw_strength)
    except ValueError:
        raise ValueError(f"strength {raw_strength!r} is not a number") from None
    if not 0.0 <= strength < float("inf"):
        raise ValueError(f"strength {raw_strength!r} must be a finite non-negative number")
    return InteractionRecord(user_a, user_b, time, strength, rel_class)


def parse_records(
    lines: Iterable[str],
) -> tuple[list[InteractionRecord], list[LineDiagnostic]]:
    """Parse a line stream, keeping well-formed records in input order.

    Malformed lines become `LineDiagnostic` entries and are skipped;
    blank lines are ignored entirely. Raises `EmptyInput` when not a
    single well-formed record appears.
    """
    records: list[InteractionRecord] = []
    diagnostics: list[LineDiagnostic] = []
    for line_no, raw in enumerate(lines, start=1):
        line = raw.rstrip("\r\n")
        if not line.strip():
            continue
        try:
            records.append(_parse_line(line_no, line))
        except (ValueError, MalformedTimestamp) as exc:
            diagnostics.append(LineDiagnostic(line_no, str(exc)))
    if not records:
        raise EmptyInput("no well-formed interaction records", diagnostics)
    return records, diagnostics


@dataclass(frozen=True)
class DynamicGraph:
    """All interaction events over the observed time span.

    Events are stable-sorted by time, so records sharing a timestamp
    keep their input order. Self-loops are dropped at construction and
    only counted; every surviving record's endpoints appear in `nodes`.
    """

    nodes: frozenset[str]
    events: tuple[InteractionRecord, ...]
    span: tuple[TimePoint, TimePoint]
    dropped_self_loops: int = 0

    def events_sorted(self) -> Iterator[InteractionRecord]:
        return iter(self.events)


def build_dynamic_graph(records: Iterable[InteractionRecord]) -> DynamicGraph:
    """Assemble the in-memory dynamic graph from parsed records."""
    kept: list[InteractionRecord] = []
    dropped = 0
    for rec in records:
        if rec.user_a == rec.user_b:
            dropped += 1
        else:
            kept.append(rec)
    if not kept:
        raise EmptyInput("no records left after dropping self-loops")
    kept.sort(key=lambda r: r.time.sort_key())
    nodes = frozenset(r.user_a for r in kept) | frozenset(r.user_b for r in kept)
    return DynamicGraph(
        nodes=nodes,
        events=tuple(kept),
        span=(kept[0].time, kept[-1].time),
        dropped_self_loops=dropped,
    )


def load_dynamic_graph(path: str) -> tuple[DynamicGraph, list[LineDiagnostic]]:
    """Read a log file from disk and build its dynamic graph."""
    with open(path, "r", encoding="utf-8") as handle:
        records, diagnostics = parse_records(handle)
    return build_dynamic_graph(records), diagnostics
