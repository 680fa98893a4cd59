"""Robinson-Schensted row insertion and its inverse."""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from typing import Sequence

from .core import Partition, Permutation, Tableau, is_standard, standard_tableaux


@dataclass(frozen=True)
class RsPair:
    p: Tableau
    q: Tableau

    @property
    def shape(self) -> Partition:
        return self.p.shape


def _insert(rows: list[list[int]], v: int) -> int:
    """Row-insert v into rows in place; return the index of the row that grew."""
    for i, row in enumerate(rows):
        k = bisect_right(row, v)
        if k == len(row):
            row.append(v)
            return i
        row[k], v = v, row[k]
    rows.append([v])
    return len(rows) - 1


def insertion_rows(w: Sequence[int]) -> list[list[int]]:
    """Rows of P(w) as plain lists; the fast path for sweeps."""
    rows: list[list[int]] = []
    for v in w:
        _insert(rows, v)
    return rows


def rs_insert(w: Sequence[int]) -> RsPair:
    w = Permutation(w)
    p: list[list[int]] = []
    q: list[list[int]] = []
    for step, v in enumerate(w, start=1):
        i = _insert(p, v)
        if i == len(q):
            q.append([])
        q[i].append(step)
    return RsPair(Tableau(p), Tableau(q))


def insertion_tableau(w: Sequence[int]) -> Tableau:
    return Tableau(insertion_rows(w))


def recording_tableau(w: Sequence[int]) -> Tableau:
    return rs_insert(w).q


def inverse_rs(pair: RsPair) -> Permutation:
    """The unique permutation whose RS pair is `pair`."""
    p, q = pair.p, pair.q
    if p.shape != q.shape:
        raise ValueError(f"shapes differ: {p.shape} vs {q.shape}")
    n = p.size
    for t in (p, q):
        if not is_standard(t) or sorted(t.entries()) != list(range(1, n + 1)):
            raise ValueError(f"not a standard tableau: {t!r}")
    rows = [list(r) for r in p.rows]
    where = {v: i for i, r in enumerate(q.rows) for v in r}
    word = [0] * n
    for step in range(n, 0, -1):
        i = where[step]
        v = rows[i].pop()
        if not rows[i]:
            rows.pop()
        # bump back up: v replaces the largest entry smaller than it in the row above
        for j in range(i - 1, -1, -1):
            row = rows[j]
            k = bisect_right(row, v) - 1
            row[k], v = v, row[k]
        word[step - 1] = v
    return Permutation(word)


def qhat_tableau(n: int) -> Tableau:
    """Recording tableau with rows 1 2 5 6 ... n-1 / 3 4 / n."""
    if n < 5:
        raise ValueError(f"Q-hat needs n >= 5, got {n}")
    return Tableau([[1, 2, *range(5, n)], [3, 4], [n]])


def enumerate_qhat_class(n: int) -> list[Permutation]:
    """All w in S_n with Q(w) = Q-hat, sorted."""
    qhat = qhat_tableau(n)
    return sorted(inverse_rs(RsPair(p, qhat)) for p in standard_tableaux(qhat.shape))
