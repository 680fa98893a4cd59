"""Box-ball states, one-step evolution, configuration arrays and soliton decompositions."""

from __future__ import annotations

import os
from bisect import bisect_right
from dataclasses import dataclass
from typing import Iterator, Sequence

from .core import Permutation, Tableau

# e.g. BOXBALL_CHECK_STEPPERS=1 makes every steady-state run compare both steppers
CHECK_STEPPERS = os.environ.get("BOXBALL_CHECK_STEPPERS", "") not in ("", "0")


class SteppersDisagree(AssertionError):
    pass


@dataclass(frozen=True)
class BbsState:
    """Balls in boxes. `content` starts and ends with a ball; None marks an empty box."""

    offset: int
    content: tuple[int | None, ...]

    def __post_init__(self):
        content = tuple(self.content)
        object.__setattr__(self, "content", content)
        if self.offset < 0:
            raise ValueError(f"negative offset {self.offset}")
        if not content or content[0] is None or content[-1] is None:
            raise ValueError(f"content must start and end with a ball: {content}")
        balls = sorted(b for b in content if b is not None)
        if balls != list(range(1, len(balls) + 1)):
            raise ValueError(f"ball labels must be 1..n exactly once: {content}")

    @classmethod
    def from_boxes(cls, boxes: Sequence[int | None], offset: int = 0) -> "BbsState":
        """Trim empty boxes from both ends of `boxes`, which starts at absolute box `offset`."""
        lo = 0
        while lo < len(boxes) and boxes[lo] is None:
            lo += 1
        hi = len(boxes)
        while hi > lo and boxes[hi - 1] is None:
            hi -= 1
        return cls(offset + lo, tuple(boxes[lo:hi]))

    @classmethod
    def parse(cls, text: str) -> "BbsState":
        """'ee45e2136' or '..45.2136'; leading empties set the offset."""
        boxes = [None if c in "e." else int(c) for c in text.strip()]
        return cls.from_boxes(boxes)

    @property
    def n(self) -> int:
        return sum(1 for b in self.content if b is not None)

    def balls(self) -> Permutation:
        """Ball labels read left to right, empties dropped."""
        return Permutation(b for b in self.content if b is not None)

    def positions(self) -> dict[int, int]:
        return {b: self.offset + i for i, b in enumerate(self.content) if b is not None}

    def render(self, empty: str = ".") -> str:
        boxes = [empty] * self.offset + [empty if b is None else str(b) for b in self.content]
        if self.n <= 9:
            return "".join(boxes)
        return " ".join(boxes)

    def to_json(self) -> dict:
        return {"offset": self.offset, "content": list(self.content)}

    @classmethod
    def from_json(cls, obj: dict) -> "BbsState":
        return cls(obj["offset"], tuple(obj["content"]))

    def __str__(self) -> str:
        return self.render()


def state_from_permutation(w: Sequence[int]) -> BbsState:
    return BbsState(0, tuple(Permutation(w)))


def step_direct(s: BbsState) -> BbsState:
    """One BBS move: balls 1, 2, ..., n in turn jump to the nearest empty box on their right."""
    pos = s.positions()
    occupied = set(pos.values())
    for ball in range(1, len(pos) + 1):
        p = pos[ball]
        q = p + 1
        while q in occupied:
            q += 1
        occupied.remove(p)
        occupied.add(q)
        pos[ball] = q
    lo = min(occupied)
    boxes: list[int | None] = [None] * (max(occupied) - lo + 1)
    for ball, p in pos.items():
        boxes[p - lo] = ball
    return BbsState(lo, tuple(boxes))


def carrier_trace(seq: Sequence[int], n: int) -> Iterator[tuple[list[int], list[int], int]]:
    """Run the carrier over `seq`, where n + 1 stands for an empty box.

    Yields (ejected, carrier, consumed) after the initial load and after every
    insertion; `consumed` counts elements of seq taken so far, and the flushing
    steps report consumed == len(seq).
    """
    e = n + 1
    carrier = [e] * n
    out: list[int] = []
    yield out, carrier, 0

    def insert(p: int) -> None:
        k = bisect_right(carrier, p)
        if k < len(carrier):
            # smallest element larger than p; bisect_right lands on the leftmost e on ties
            out.append(carrier[k])
            carrier[k] = p
        else:
            out.append(carrier.pop(0))
            carrier.append(p)

    for i, p in enumerate(seq):
        insert(p)
        yield out, carrier, i + 1
    while any(c != e for c in carrier):
        insert(e)
        yield out, carrier, len(seq)


def run_carrier(seq: Sequence[int], n: int) -> list[int]:
    """Ejected sequence of the carrier algorithm, with n + 1 for empty boxes."""
    out: list[int] = []
    for out, _, _ in carrier_trace(seq, n):
        pass
    return list(out)


def step_carrier(s: BbsState) -> BbsState:
    """One BBS move computed with the carrier algorithm."""
    n = s.n
    e = n + 1
    seq = [e if b is None else b for b in s.content]
    out = run_carrier(seq, n)
    return BbsState.from_boxes([None if v == e else v for v in out], s.offset)


def format_carrier_trace(s: BbsState) -> list[str]:
    """Carrier run as text, one line per step: 'ee4[25eeee]ee136'."""
    n = s.n
    e = n + 1
    seq = [e if b is None else b for b in s.content]
    sep = "" if n <= 9 else " "

    def show(vals):
        return sep.join("e" if v == e else str(v) for v in vals)

    lines = []
    for out, carrier, consumed in carrier_trace(seq, n):
        lines.append(f"{show(out)}[{show(carrier)}]{show(seq[consumed:])}")
    return lines


@dataclass(frozen=True)
class SkewArray:
    """Rows of (offset, entries); row 0 is the top row, minimum offset is 0."""

    rows: tuple[tuple[int, tuple[int, ...]], ...]

    @property
    def row_lengths(self) -> tuple[int, ...]:
        return tuple(len(entries) for _, entries in self.rows)

    def columns(self) -> dict[int, list[int]]:
        cols: dict[int, list[int]] = {}
        for off, entries in self.rows:
            for j, v in enumerate(entries):
                cols.setdefault(off + j, []).append(v)
        return cols

    def is_standard(self) -> bool:
        return all(
            all(a < b for a, b in zip(col, col[1:])) for col in self.columns().values()
        )

    def __str__(self) -> str:
        width = max(len(str(v)) for _, entries in self.rows for v in entries)
        blank = " " * width
        return "\n".join(
            " ".join([blank] * off + [str(v).rjust(width) for v in entries]).rstrip()
            for off, entries in self.rows
        )


def increasing_runs(s: BbsState) -> list[tuple[list[int], int]]:
    """Maximal increasing runs of consecutive balls, left to right.

    Each run is paired with the number of empty boxes separating it from the
    next run on its right (0 for the last run).
    """
    runs: list[tuple[list[int], int]] = []
    current: list[int] = []
    gap = 0
    for b in s.content:
        if b is None:
            gap += 1
            continue
        if current and (gap or b < current[-1]):
            runs.append((current, gap))
            current = []
        current.append(b)
        gap = 0
    runs.append((current, 0))
    return runs


def configuration_array(s: BbsState) -> SkewArray:
    runs = increasing_runs(s)
    rows = []
    offset = 0
    # rightmost run is the top row; each gap shifts the row below to the left
    for k in range(len(runs) - 1, -1, -1):
        entries, gap = runs[k]
        offset -= gap
        rows.append((offset, tuple(entries)))
    low = min(off for off, _ in rows)
    return SkewArray(tuple((off - low, entries) for off, entries in rows))


def is_steady(s: BbsState) -> bool:
    arr = configuration_array(s)
    lengths = arr.row_lengths
    if any(a < b for a, b in zip(lengths, lengths[1:])):
        return False
    return arr.is_standard()


def step(s: BbsState, stepper: str = "direct") -> BbsState:
    if stepper == "direct":
        return step_direct(s)
    if stepper == "carrier":
        return step_carrier(s)
    if stepper == "both":
        a, b = step_direct(s), step_carrier(s)
        if a != b:
            raise SteppersDisagree(f"from {s.render()}: direct {a.render()} != carrier {b.render()}")
        return a
    raise ValueError(f"unknown stepper {stepper!r}")


def evolve(s: BbsState, steps: int, stepper: str = "direct") -> list[BbsState]:
    """States at times 0..steps."""
    states = [s]
    for _ in range(steps):
        states.append(step(states[-1], stepper))
    return states


def run_to_steady(w: Sequence[int], cross_check: bool | None = None) -> tuple[int, BbsState]:
    """First time the system seeded by w is steady, and the state at that time."""
    if cross_check is None:
        cross_check = CHECK_STEPPERS
    stepper = "both" if cross_check else "direct"
    s = w if isinstance(w, BbsState) else state_from_permutation(w)
    cap = 3 * s.n
    t = 0
    while not is_steady(s):
        if t >= cap:
            raise RuntimeError(f"no steady state within {cap} steps from {s.render()}")
        s = step(s, stepper)
        t += 1
    return t, s


def steady_state_time(w: Sequence[int], cross_check: bool | None = None) -> int:
    return run_to_steady(w, cross_check)[0]


def soliton_decomposition(w: Sequence[int]) -> Tableau:
    """Solitons of the steady state stacked with the rightmost on top."""
    _, s = run_to_steady(w)
    return Tableau(entries for _, entries in configuration_array(s).rows)
