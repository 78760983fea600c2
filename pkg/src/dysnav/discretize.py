"""Conversion of the dynamic graph into a grid of static snapshots.

The time axis is cut into half-open intervals of a fixed width (the
final closing point is folded into the last interval). Each interval is
aggregated into one weighted snapshot and then filtered at progressively
higher weight cutoffs, one per slice, computed over the global weight
range so a given slice row is comparable across time columns.

Interval width is a count of a calendar unit, written ``3y``, ``2mo``,
``1d``, ``6h``, ``15m`` or ``30s``. Day-and-finer arithmetic maps dates
to real calendar ordinals, so windows tile actual days/hours/... of the
data. Units finer than the data's precision are allowed but produce
sparse grids.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from datetime import date
from typing import Iterable

from .errors import InvalidEpsilon, InvalidOmega
from .graphs import Graph, edge_key
from .ingest import DynamicGraph, InteractionRecord, TimePoint


class MetricKind(enum.Enum):
    """How repeated interactions of one pair collapse to an edge weight."""

    TOTAL_TIME = "total"
    AVERAGE_TIME = "average"
    OCCURRENCY = "occurrency"


class TimeUnit(enum.Enum):
    YEAR = "y"
    MONTH = "mo"
    DAY = "d"
    HOUR = "h"
    MINUTE = "m"
    SECOND = "s"


_DURATION_RE = re.compile(r"^\s*(\d+)\s*(mo|y|d|h|m|s)\s*$")


@dataclass(frozen=True)
class Duration:
    count: int
    unit: TimeUnit

    def __str__(self) -> str:
        return f"{self.count}{self.unit.value}"


def parse_duration(text: str) -> Duration:
    match = _DURATION_RE.match(text)
    if match is None:
        raise InvalidEpsilon(f"bad interval width {text!r}; expected e.g. 1d, 3y, 15m")
    count = int(match.group(1))
    if count < 1:
        raise InvalidEpsilon("interval width must be positive")
    return Duration(count, TimeUnit(match.group(2)))


def unit_index(tp: TimePoint, unit: TimeUnit) -> int:
    """Monotone integer position of a time point in whole units.

    Absent fields are treated as the start of their period, matching the
    ordering convention (coarse points sort at the start of the period
    they denote).
    """
    if unit is TimeUnit.YEAR:
        return tp.year
    month = tp.month if tp.month is not None else 1
    if unit is TimeUnit.MONTH:
        return tp.year * 12 + month - 1
    day = tp.day if tp.day is not None else 1
    days = date(tp.year, month, day).toordinal()
    if unit is TimeUnit.DAY:
        return days
    hours = days * 24 + (tp.hour or 0)
    if unit is TimeUnit.HOUR:
        return hours
    minutes = hours * 60 + (tp.minute or 0)
    if unit is TimeUnit.MINUTE:
        return minutes
    return minutes * 60 + (tp.second or 0)


def timepoint_at(index: int, unit: TimeUnit) -> TimePoint:
    """Inverse of `unit_index`, at the unit's own precision."""
    if unit is TimeUnit.YEAR:
        return TimePoint(index)
    if unit is TimeUnit.MONTH:
        return TimePoint(index // 12, index % 12 + 1)
    seconds = minutes = hours = None
    if unit is TimeUnit.SECOND:
        index, seconds = divmod(index, 60)
        unit = TimeUnit.MINUTE
    if unit is TimeUnit.MINUTE:
        index, minutes = divmod(index, 60)
        unit = TimeUnit.HOUR
    if unit is TimeUnit.HOUR:
        index, hours = divmod(index, 24)
    d = date.fromordinal(index)
    return TimePoint(d.year, d.month, d.day, hours, minutes, seconds)


@dataclass(frozen=True)
class Interval:
    """Half-open time interval [start, end) at position `index`."""

    start: TimePoint
    end: TimePoint
    index: int
    unit: TimeUnit
    start_index: int
    end_index: int

    def contains(self, tp: TimePoint) -> bool:
        return self.start_index <= unit_index(tp, self.unit) < self.end_index


class SnapshotGraph(Graph):
    """Static weighted graph for one (interval, slice) grid cell.

    The vertex set is always the full node set of the dynamic graph;
    only edges are interval- and slice-dependent.
    """

    __slots__ = ("interval", "slice_index", "metric", "cutoff")

    def __init__(
        self,
        nodes: Iterable[str],
        edges: Iterable[tuple[str, str, float]],
        interval: Interval,
        slice_index: int,
        metric: MetricKind,
        cutoff: float,
    ):
        super().__init__(nodes, edges)
        self.interval = interval
        self.slice_index = slice_index
        self.metric = metric
        self.cutoff = cutoff


@dataclass(frozen=True)
class SnapshotGrid:
    """All snapshots, indexed cells[interval][slice]."""

    cells: tuple[tuple[SnapshotGraph, ...], ...]
    epsilon: Duration
    omega: int
    weight_range: tuple[float, float]
    metric: MetricKind
    intervals: tuple[Interval, ...]

    @property
    def alpha(self) -> int:
        return len(self.cells)

    def cutoffs(self) -> tuple[float, ...]:
        lo, hi = self.weight_range
        return tuple(lo + j * (hi - lo) / self.omega for j in range(self.omega))


def _aggregate_edges(
    records: Iterable[InteractionRecord], metric: MetricKind
) -> list[tuple[str, str, float]]:
    sums: dict[tuple[str, str], float] = {}
    counts: dict[tuple[str, str], int] = {}
    for rec in records:
        key = edge_key(rec.user_a, rec.user_b)
        sums[key] = sums.get(key, 0.0) + rec.strength
        counts[key] = counts.get(key, 0) + 1
    edges = []
    for key in sorted(sums):
        if metric is MetricKind.TOTAL_TIME:
            weight = sums[key]
        elif metric is MetricKind.AVERAGE_TIME:
            weight = sums[key] / counts[key]
        else:
            weight = float(counts[key])
        edges.append((key[0], key[1], weight))
    return edges


def aggregate_interval(
    dg: DynamicGraph, interval: Interval, metric: MetricKind
) -> SnapshotGraph:
    """Collapse all records inside one interval into a weighted snapshot.

    An interval without records yields the edgeless graph over the full
    node set.
    """
    records = [r for r in dg.events if interval.contains(r.time)]
    edges = _aggregate_edges(records, metric)
    return SnapshotGraph(dg.nodes, edges, interval, 0, metric, 0.0)


def discretize(
    dg: DynamicGraph,
    epsilon: Duration | str,
    omega: int,
    metric: MetricKind,
) -> SnapshotGrid:
    """Build the full interval-by-slice snapshot grid.

    Every record lands in exactly one interval: index
    floor((t - t_min) / epsilon), with the span's final point folded
    into the last interval. Slice cutoffs are evenly spaced over the
    global weight range; a degenerate range (min == max) collapses all
    cutoffs onto the minimum so every slice equals slice 0.
    """
    if isinstance(epsilon, str):
        epsilon = parse_duration(epsilon)
    if epsilon.count < 1:
        raise InvalidEpsilon("interval width must be positive")
    if omega < 1:
        raise InvalidOmega(f"slice count must be >= 1, got {omega}")

    unit, width = epsilon.unit, epsilon.count
    lo_idx = unit_index(dg.span[0], unit)
    hi_idx = unit_index(dg.span[1], unit)
    alpha = (hi_idx - lo_idx) // width + 1
    if alpha < 2:
        raise InvalidEpsilon(
            f"interval width {epsilon} covers the whole span; need at least 2 intervals"
        )

    intervals = tuple(
        Interval(
            start=timepoint_at(lo_idx + i * width, unit),
            end=timepoint_at(lo_idx + (i + 1) * width, unit),
            index=i,
            unit=unit,
            start_index=lo_idx + i * width,
            end_index=lo_idx + (i + 1) * width,
        )
        for i in range(alpha)
    )

    buckets: list[list[InteractionRecord]] = [[] for _ in range(alpha)]
    for rec in dg.events:
        buckets[(unit_index(rec.time, unit) - lo_idx) // width].append(rec)

    base_edges = [_aggregate_edges(bucket, metric) for bucket in buckets]
    all_weights = [w for edges in base_edges for (_, _, w) in edges]
    if all_weights:
        weight_range = (min(all_weights), max(all_weights))
    else:
        weight_range = (0.0, 0.0)
    lo_w, hi_w = weight_range
    cutoffs = [lo_w + j * (hi_w - lo_w) / omega for j in range(omega)]

    columns = []
    for i, interval in enumerate(intervals):
        column = []
        for j, cutoff in enumerate(cutoffs):
            edges = [(u, v, w) for (u, v, w) in base_edges[i] if w >= cutoff]
            column.append(SnapshotGraph(dg.nodes, edges, interval, j, metric, cutoff))
        columns.append(tuple(column))
    return SnapshotGrid(tuple(columns), epsilon, omega, weight_range, metric, intervals)
