"""Young diagrams, skew shapes, and right-aligned strip enumeration.

Coordinates: columns are numbered 1..width left to right; heights are
measured upward from the diagram's lowest edge, so the bottom row of the
diagram sits at height 0 and the box (c, h) occupies [c-1, c] x [h, h+1].

A right-aligned partial horizontal strip ("r-strip") is equivalent to a
monotone lattice path across the shape: the path crosses column c with one
east step at height y_c, lo_c <= y_c <= hi_c + 1, heights weakly increasing
left to right.  The strip box of column c sits directly below the east step
(at height y_c - 1) and is omitted exactly when the step lies on the
column's bottom edge (y_c = lo_c).  This is the unique convention under
which path-derived strips coincide with the definition-checked right-aligned
box sets.
"""

from __future__ import annotations

from dataclasses import dataclass

from .partitions import Partition, as_partition


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition

    def __post_init__(self):
        object.__setattr__(self, "outer", as_partition(self.outer))
        object.__setattr__(self, "inner", as_partition(self.inner))
        if len(self.inner) > len(self.outer):
            raise ValueError("inner partition has more rows than outer")
        for i, v in enumerate(self.inner):
            if v > self.outer[i]:
                raise ValueError(
                    f"inner row {i + 1} ({v}) exceeds outer row ({self.outer[i]})"
                )

    @property
    def rows(self) -> int:
        return len(self.outer)

    @property
    def width(self) -> int:
        return self.outer[0] if self.outer else 0

    def column_interval(self, c: int) -> tuple[int, int] | None:
        """Inclusive (lo, hi) height interval of column c, or None if empty."""
        r = self.rows
        t = sum(1 for x in self.outer if x >= c)
        s = sum(1 for x in self.inner if x >= c)
        if t <= s:
            return None
        return (r - t, r - s - 1)

    def contains_box(self, c: int, h: int) -> bool:
        iv = self.column_interval(c)
        return iv is not None and iv[0] <= h <= iv[1]

    def box_count(self) -> int:
        return sum(self.outer) - sum(self.inner)

    def boxes(self) -> list[tuple[int, int]]:
        out = []
        for c in range(1, self.width + 1):
            iv = self.column_interval(c)
            if iv:
                out.extend((c, h) for h in range(iv[0], iv[1] + 1))
        return out


def stretched_staircase(n: int, k: int) -> SkewShape:
    """(n^{kn}) / ((n-1)^k, ..., 2^k, 1^k)."""
    if n < 1 or k < 1:
        raise ValueError("need n >= 1 and k >= 1")
    inner = tuple(v for v in range(n - 1, 0, -1) for _ in range(k))
    return SkewShape((n,) * (k * n), inner)


def rectangle(n: int, k: int) -> SkewShape:
    """(n^{kn})."""
    if n < 1 or k < 1:
        raise ValueError("need n >= 1 and k >= 1")
    return SkewShape((n,) * (k * n), ())


def column_heights(shape: SkewShape) -> dict[int, tuple[int, int]]:
    """Map each nonempty column to its inclusive (lo, hi) height interval."""
    out = {}
    for c in range(1, shape.width + 1):
        iv = shape.column_interval(c)
        if iv:
            out[c] = iv
    return out


def _profile(shape: SkewShape) -> tuple[list[int], list[int], list[int]]:
    """(columns, lo, hi) over nonempty columns; requires contiguous support."""
    cols = sorted(column_heights(shape))
    if cols and cols != list(range(cols[0], cols[-1] + 1)):
        raise ValueError(f"column support is not contiguous: {cols}")
    lo = [shape.column_interval(c)[0] for c in cols]
    hi = [shape.column_interval(c)[1] for c in cols]
    return cols, lo, hi


@dataclass(frozen=True)
class RStrip:
    """A right-aligned partial horizontal strip; boxes sorted by column."""

    shape: SkewShape
    boxes: tuple[tuple[int, int], ...]

    def __post_init__(self):
        boxes = tuple(sorted((int(c), int(h)) for c, h in self.boxes))
        object.__setattr__(self, "boxes", boxes)
        ok, why = _check_r_strip(self.shape, boxes)
        if not ok:
            raise ValueError(f"not an r-strip: {why}")


def _is_partial_horizontal_strip(shape: SkewShape, boxes) -> bool:
    boxes = sorted(boxes)
    cols = [c for c, _ in boxes]
    if len(set(cols)) != len(cols):
        return False
    heights = [h for _, h in boxes]
    if any(heights[i] > heights[i + 1] for i in range(len(heights) - 1)):
        return False
    return all(shape.contains_box(c, h) for c, h in boxes)


def _check_r_strip(shape: SkewShape, boxes) -> tuple[bool, str]:
    boxes = sorted(boxes)
    if not _is_partial_horizontal_strip(shape, boxes):
        return False, "not a partial horizontal strip inside the shape"
    box_set = set(boxes)
    for c, h in boxes:
        candidate = (c + 1, h)
        if candidate in box_set:
            continue
        if shape.contains_box(*candidate) and _is_partial_horizontal_strip(
            shape, boxes + [candidate]
        ):
            return False, f"box {candidate} can be added to the right of ({c}, {h})"
    return True, ""


def is_r_strip(shape: SkewShape, boxes) -> bool:
    """Direct definition check: the oracle for the path characterization."""
    return _check_r_strip(shape, boxes)[0]


def iter_strip_heights(shape: SkewShape):
    """East-step height vectors of all monotone paths across the shape.

    Yields tuples (y_c) with lo_c <= y_c <= hi_c + 1, weakly increasing,
    in lexicographic order.  Each vector corresponds to exactly one r-strip.
    """
    cols, lo, hi = _profile(shape)
    w = len(cols)
    if w == 0:
        yield ()
        return
    vec = [0] * w

    def rec(i: int, prev: int):
        if i == w:
            yield tuple(vec)
            return
        for y in range(max(lo[i], prev), hi[i] + 2):
            vec[i] = y
            yield from rec(i + 1, y)

    yield from rec(0, lo[0])


def _boxes_from_heights(shape: SkewShape, heights) -> tuple[tuple[int, int], ...]:
    cols, lo, _ = _profile(shape)
    return tuple(
        (c, y - 1) for c, l, y in zip(cols, lo, heights) if y > l
    )


def strip_type_of_heights(shape: SkewShape, heights) -> Partition:
    """Type of the strip encoded by an east-step height vector."""
    cols, lo, _ = _profile(shape)
    sizes = []
    run = 0
    prev_boxed_height = None
    for c, l, y in zip(cols, lo, heights):
        if y > l:
            if run and y - 1 == prev_boxed_height:
                run += 1
            else:
                if run:
                    sizes.append(run)
                run = 1
            prev_boxed_height = y - 1
        else:
            if run:
                sizes.append(run)
            run = 0
            prev_boxed_height = None
    if run:
        sizes.append(run)
    return tuple(sorted(sizes, reverse=True))


def enumerate_r_strips(shape: SkewShape) -> list[RStrip]:
    """All r-strips of the shape, in path (height-vector) lexicographic order."""
    return [
        RStrip(shape, _boxes_from_heights(shape, hs))
        for hs in iter_strip_heights(shape)
    ]


def strip_type(strip: RStrip) -> Partition:
    """Sorted sizes of the strip's blocks (maximal equal-height column runs)."""
    sizes = []
    run = 0
    prev = None
    for c, h in strip.boxes:
        if prev is not None and c == prev[0] + 1 and h == prev[1]:
            run += 1
        else:
            if run:
                sizes.append(run)
            run = 1
        prev = (c, h)
    if run:
        sizes.append(run)
    return tuple(sorted(sizes, reverse=True))


def _heights_from_strip(strip: RStrip) -> tuple[int, ...]:
    cols, lo, _ = _profile(strip.shape)
    by_col = dict(strip.boxes)
    return tuple(
        by_col[c] + 1 if c in by_col else l for c, l in zip(cols, lo)
    )


def path_from_strip(strip: RStrip) -> str:
    """E/N word of the strip's lattice path, bottom-left to top-right corner."""
    cols, lo, hi = _profile(strip.shape)
    if not cols:
        return ""
    heights = _heights_from_strip(strip)
    word = []
    y = lo[0]
    for yc in heights:
        word.append("N" * (yc - y))
        word.append("E")
        y = yc
    word.append("N" * (hi[-1] + 1 - y))
    return "".join(word)


def heights_from_path(shape: SkewShape, word: str) -> tuple[int, ...]:
    """Parse a path word into its east-step height vector, validating bounds."""
    cols, lo, hi = _profile(shape)
    if set(word) - {"E", "N"}:
        raise ValueError(f"path word must be over {{E, N}}: {word!r}")
    if word.count("E") != len(cols):
        raise ValueError(
            f"path must have one E step per column ({len(cols)}), got {word.count('E')}"
        )
    span = (hi[-1] + 1 - lo[0]) if cols else 0
    if word.count("N") != span:
        raise ValueError(f"path must have {span} N steps, got {word.count('N')}")
    heights = []
    y = lo[0] if cols else 0
    for step in word:
        if step == "N":
            y += 1
        else:
            heights.append(y)
    for i, (l, h, yc) in enumerate(zip(lo, hi, heights)):
        if not l <= yc <= h + 1:
            raise ValueError(
                f"east step over column {cols[i]} at height {yc} leaves the shape"
            )
    return tuple(heights)


def strip_from_path(shape: SkewShape, word: str) -> RStrip:
    heights = heights_from_path(shape, word)
    return RStrip(shape, _boxes_from_heights(shape, heights))


def enumerate_horizontal_strips(shape: SkewShape) -> list[tuple[int, ...]]:
    """Height sequences of all strips with exactly one box per column."""
    cols, lo, hi = _profile(shape)
    if len(cols) != len(column_heights(shape)) or (
        shape.width and len(cols) != shape.width
    ):
        raise ValueError("shape has an empty column")
    out: list[tuple[int, ...]] = []
    vec = [0] * len(cols)

    def rec(i: int, prev: int):
        if i == len(cols):
            out.append(tuple(vec))
            return
        for h in range(max(lo[i], prev), hi[i] + 1):
            vec[i] = h
            rec(i + 1, h)

    if cols:
        rec(0, lo[0])
    else:
        out.append(())
    return out


def format_shape(shape: SkewShape) -> str:
    outer = ",".join(str(x) for x in shape.outer)
    inner = ",".join(str(x) for x in shape.inner)
    return f"{outer}/{inner}"


def parse_shape(text: str) -> SkewShape:
    """Shape literal: "3,2/1" (outer (3,2), inner (1)); "3,2/" for empty inner."""
    text = text.strip()
    outer_s, _, inner_s = text.partition("/")
    parse = lambda s: tuple(int(x) for x in s.split(",")) if s else ()
    try:
        return SkewShape(parse(outer_s), parse(inner_s))
    except ValueError as e:
        raise ValueError(f"bad shape literal {text!r}: {e}") from None


def format_strip(strip: RStrip) -> str:
    """Per-column literal, "-" for a boxless column: "-,0,1"."""
    cols, _, _ = _profile(strip.shape)
    by_col = dict(strip.boxes)
    return ",".join(str(by_col[c]) if c in by_col else "-" for c in cols)


def parse_strip(shape: SkewShape, text: str) -> RStrip:
    cols, _, _ = _profile(shape)
    entries = [e.strip() for e in text.strip().split(",")] if text.strip() else []
    if len(entries) != len(cols):
        raise ValueError(
            f"strip literal needs {len(cols)} entries (one per column), got {len(entries)}"
        )
    boxes = [
        (c, int(e)) for c, e in zip(cols, entries) if e != "-"
    ]
    return RStrip(shape, tuple(boxes))
