"""Isomorph-free graph streams: internal generation and graph6 ingestion.

The internal generator works level by level: every class on k+1 vertices
arises from some class on k vertices by attaching one new vertex, so each
level extends every representative by every neighborhood subset and keeps
one representative per canonical form. Hereditary properties (triangle-free,
C4-free, bounded degree) prune at every level; everything else is filtered
on the finished order. Output order is lexicographic by canonical form, so
runs are diffable.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple

from .canonical import canonical_form, column_key
from .graph import Graph, bits, class_predicates, vertex_connectivity
from .graph6 import Graph6Error, encode_graph6, parse_graph6

MAX_INTERNAL_ORDER = 12


@dataclass(frozen=True)
class ClassFilter:
    """Graph-class gate: connectivity, degree, regularity, forbidden cycles."""

    min_connectivity: int = 0
    regular_degree: int | None = None
    triangle_free: bool = False
    c4_free: bool = False
    min_degree: int = 0

    def __post_init__(self):
        if self.min_connectivity < 0 or self.min_degree < 0:
            raise ValueError("negative bound in class filter")
        if self.regular_degree is not None and self.min_degree > self.regular_degree:
            raise ValueError("min_degree exceeds regular_degree")

    def passes(self, g: Graph) -> bool:
        preds = class_predicates(g)
        if preds.min_degree < self.min_degree:
            return False
        if self.regular_degree is not None and preds.regular_degree != self.regular_degree:
            return False
        if self.triangle_free and not preds.triangle_free:
            return False
        if self.c4_free and not preds.c4_free:
            return False
        if self.min_connectivity > 0 and vertex_connectivity(g) < self.min_connectivity:
            return False
        return True

    def describe(self) -> dict:
        return {
            "min_connectivity": self.min_connectivity,
            "regular_degree": self.regular_degree,
            "triangle_free": self.triangle_free,
            "c4_free": self.c4_free,
            "min_degree": self.min_degree,
        }


def _neighborhood_ok(masks: tuple[int, ...], subset: int, filt: ClassFilter) -> bool:
    """Hereditary admissibility of attaching a new vertex adjacent to ``subset``."""
    if filt.regular_degree is not None:
        d = filt.regular_degree
        if subset.bit_count() > d:
            return False
        for v in bits(subset):
            if masks[v].bit_count() + 1 > d:
                return False
    if filt.triangle_free or filt.c4_free:
        verts = list(bits(subset))
        for i, a in enumerate(verts):
            for b in verts[i + 1:]:
                if filt.triangle_free and masks[a] >> b & 1:
                    return False
                if filt.c4_free and masks[a] & masks[b]:
                    return False
    return True


def _levels(max_n: int, filt: ClassFilter) -> Iterator[tuple[int, list[tuple[int, ...]]]]:
    """Yield (order, canonical representatives sorted by canonical form)."""
    level = [(0,)]
    yield 1, level
    for k in range(1, max_n):
        out: set[tuple[int, ...]] = set()
        for masks in level:
            for subset in range(1 << k):
                if not _neighborhood_ok(masks, subset, filt):
                    continue
                child = [m | (subset >> v & 1) << k for v, m in enumerate(masks)]
                child.append(subset)
                out.add(canonical_form(k + 1, tuple(child)))
        level = sorted(out, key=lambda m: column_key(k + 1, m))
        yield k + 1, level


class StreamRecord(NamedTuple):
    index: int          # 0-based position in the stream
    graph: Graph
    graph6: str
    line_no: int | None  # 1-based input line for external sources


@dataclass
class GraphStream:
    """Single-reader stream of graphs with provenance and parse-error tally."""

    source: str
    records: Iterator[StreamRecord]
    errors: list[tuple[int, str]] = field(default_factory=list)

    def __iter__(self) -> Iterator[StreamRecord]:
        return self.records


def generate_range(lo: int, hi: int, filt: ClassFilter | None = None) -> Iterator[StreamRecord]:
    """Internal generation for every order in [lo, hi], one shared level pass."""
    filt = filt or ClassFilter()
    if not 1 <= lo <= hi <= MAX_INTERNAL_ORDER:
        raise ValueError(
            f"internal generation supports orders 1..{MAX_INTERNAL_ORDER}, got {lo}..{hi}"
        )
    index = 0
    for order, reps in _levels(hi, filt):
        if order < lo:
            continue
        for masks in reps:
            g = Graph(order, masks)
            if filt.passes(g):
                yield StreamRecord(index, g, encode_graph6(g), None)
                index += 1


def enumerate_graphs(n: int, filt: ClassFilter | None = None) -> GraphStream:
    """Every isomorphism class of order n passing the filter, exactly once."""
    return GraphStream(source=f"internal:{n}", records=generate_range(n, n, filt))


def ingest_stream(source, on_error: str = "abort") -> GraphStream:
    """Parse one graph6 record per line from a path, '-' (stdin), or an
    iterable of lines. Blank lines and '>>' headers are skipped; parse
    failures either abort with the line number or are skipped and counted.
    """
    if on_error not in ("abort", "skip"):
        raise ValueError(f"unknown parse-error policy {on_error!r}")

    if source == "-":
        lines: Iterable[str] = sys.stdin
        name = "stdin"
    elif isinstance(source, (str, bytes)):
        lines = open(source, "r", encoding="ascii")
        name = str(source)
    else:
        lines = source
        name = "stream"

    stream = GraphStream(source=name, records=iter(()))

    def reader() -> Iterator[StreamRecord]:
        index = 0
        try:
            for line_no, raw in enumerate(lines, start=1):
                text = raw.strip()
                if not text or text.startswith(">>"):
                    continue
                try:
                    g = parse_graph6(text)
                except Graph6Error as exc:
                    if on_error == "abort":
                        raise Graph6Error(f"line {line_no}: {exc}", exc.offset) from exc
                    stream.errors.append((line_no, str(exc)))
                    continue
                yield StreamRecord(index, g, text, line_no)
                index += 1
        finally:
            if hasattr(lines, "close") and lines is not sys.stdin:
                lines.close()

    stream.records = reader()
    return stream
