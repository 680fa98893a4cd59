"""Permutations, partitions and tableaux."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate
from typing import Iterable, Iterator, Sequence


class InvalidPermutation(ValueError):
    pass


class InvalidTableau(ValueError):
    pass


class Permutation(tuple):
    """One-line notation of a permutation of {1..n}, n >= 1."""

    def __new__(cls, word: Iterable[int]):
        word = tuple(int(v) for v in word)
        if not word:
            raise InvalidPermutation("empty permutation")
        n = len(word)
        seen = set()
        for i, v in enumerate(word):
            if not 1 <= v <= n:
                raise InvalidPermutation(f"position {i + 1}: value {v} outside 1..{n}")
            if v in seen:
                raise InvalidPermutation(f"position {i + 1}: duplicate value {v}")
            seen.add(v)
        return super().__new__(cls, word)

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Accepts '452361' (n <= 9) or '4,5,2,3,6,1' (any n)."""
        text = text.strip()
        if "," in text:
            parts = [p.strip() for p in text.split(",")]
        else:
            parts = list(text)
        word = []
        for i, p in enumerate(parts):
            if not p.isdigit():
                raise InvalidPermutation(f"position {i + 1}: {p!r} is not a positive integer")
            word.append(int(p))
        return cls(word)

    @property
    def n(self) -> int:
        return len(self)

    def __str__(self) -> str:
        if len(self) <= 9:
            return "".join(map(str, self))
        return ",".join(map(str, self))

    def __repr__(self) -> str:
        return f"Permutation({str(self)!r})"

    def descents(self) -> list[int]:
        """1-based positions m with w_m > w_{m+1}."""
        return [i + 1 for i in range(len(self) - 1) if self[i] > self[i + 1]]


def all_permutations(n: int) -> Iterator[Permutation]:
    """S_n in lexicographic order."""
    from itertools import permutations

    for w in permutations(range(1, n + 1)):
        yield Permutation(w)


class Partition(tuple):
    """Weakly decreasing tuple of positive integers."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        for i, p in enumerate(parts):
            if p < 1:
                raise ValueError(f"partition parts must be positive, got {parts}")
            if i and parts[i - 1] < p:
                raise ValueError(f"partition {parts} is not weakly decreasing")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def partial_sums(self, length: int | None = None) -> tuple[int, ...]:
        """(p_1, p_1+p_2, ...) padded with the total up to `length` entries."""
        sums = list(accumulate(self))
        if length is not None:
            total = sums[-1] if sums else 0
            sums = (sums + [total] * length)[:length]
        return tuple(sums)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)})"


def conjugate(p: Sequence[int]) -> Partition:
    if not p:
        return Partition()
    return Partition(sum(1 for part in p if part > j) for j in range(p[0]))


def dominance_leq(a: Sequence[int], b: Sequence[int]) -> bool:
    """True iff a is below or equal to b in dominance order."""
    if sum(a) != sum(b):
        raise ValueError(f"dominance order needs equal sizes, got {sum(a)} and {sum(b)}")
    sa = sb = 0
    for k in range(max(len(a), len(b))):
        sa += a[k] if k < len(a) else 0
        sb += b[k] if k < len(b) else 0
        if sa > sb:
            return False
    return True


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n, in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield Partition()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield Partition((first,) + tuple(rest))


@dataclass(frozen=True)
class Tableau:
    """Filling of a Young diagram; rows are weakly decreasing in length.

    No ordering of entries is enforced here; see `is_row_strict` and
    `is_standard`.
    """

    rows: tuple[tuple[int, ...], ...]

    def __init__(self, rows: Iterable[Iterable[int]]):
        rows = tuple(tuple(int(v) for v in row) for row in rows)
        if any(not row for row in rows):
            raise InvalidTableau(f"empty row in {rows}")
        for i in range(1, len(rows)):
            if len(rows[i]) > len(rows[i - 1]):
                raise InvalidTableau(f"row lengths not weakly decreasing: {rows}")
        if any(v < 1 for row in rows for v in row):
            raise InvalidTableau(f"entries must be positive: {rows}")
        object.__setattr__(self, "rows", rows)

    @property
    def shape(self) -> Partition:
        return Partition(len(row) for row in self.rows)

    @property
    def size(self) -> int:
        return sum(len(row) for row in self.rows)

    def entries(self) -> list[int]:
        return [v for row in self.rows for v in row]

    def columns(self) -> list[tuple[int, ...]]:
        if not self.rows:
            return []
        return [
            tuple(row[j] for row in self.rows if j < len(row))
            for j in range(len(self.rows[0]))
        ]

    def transpose(self) -> "Tableau":
        return Tableau(self.columns())

    def is_row_strict(self) -> bool:
        return all(a < b for row in self.rows for a, b in zip(row, row[1:]))

    def is_standard(self) -> bool:
        return is_standard(self)

    def to_json(self) -> list[list[int]]:
        return [list(row) for row in self.rows]

    def __str__(self) -> str:
        width = max((len(str(v)) for v in self.entries()), default=1)
        return "\n".join(" ".join(str(v).rjust(width) for v in row) for row in self.rows)

    def __repr__(self) -> str:
        return f"Tableau({[list(r) for r in self.rows]})"


def is_standard(t: Tableau) -> bool:
    """Rows and columns strictly increase."""
    if not t.is_row_strict():
        return False
    for upper, lower in zip(t.rows, t.rows[1:]):
        if any(lower[j] <= upper[j] for j in range(len(lower))):
            return False
    return True


def shape(t: Tableau) -> Partition:
    return t.shape


def row_reading_word(t: Tableau) -> Permutation:
    """Rows concatenated bottom to top, each read left to right."""
    word = [v for row in reversed(t.rows) for v in row]
    if sorted(word) != list(range(1, len(word) + 1)):
        raise InvalidTableau(f"entries of {t!r} are not 1..{len(word)}")
    return Permutation(word)


def standard_tableaux(sh: Sequence[int]) -> Iterator[Tableau]:
    """All standard tableaux of a shape, by backtracking on the position of n, n-1, ..., 1.

    Output is in increasing order of row reading word.
    """
    sh = Partition(sh)
    n = sh.size
    if n == 0:
        return
    found = []
    filling = [[0] * part for part in sh]
    lengths = list(sh)

    def place(v: int) -> None:
        if v == 0:
            found.append(Tableau(filling))
            return
        # v goes in an outer corner of the diagram still unfilled
        for i, length in enumerate(lengths):
            if length == 0:
                continue
            below = lengths[i + 1] if i + 1 < len(lengths) else 0
            if length > below:
                lengths[i] -= 1
                filling[i][length - 1] = v
                place(v - 1)
                lengths[i] += 1

    place(n)
    found.sort(key=lambda t: tuple(row_reading_word(t)))
    yield from found
