"""Classical and localized Greene statistics.

The classical statistics incr_k / decr_k come with brute-force oracles that
never touch RS insertion: a subsequence is k-increasing iff its longest
strictly decreasing subsequence has length <= k (Dilworth), so maximizing
over position subsets gives incr_k directly.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Sequence

from .bbs import soliton_decomposition
from .core import Partition, Permutation, conjugate
from .rs import insertion_rows

# hard limits for the exhaustive oracles; exceeding them raises BudgetExceeded
SUBSET_BUDGET = 2**16
ASSIGNMENT_BUDGET = 10**7


class BudgetExceeded(RuntimeError):
    pass


def lis_length(seq: Sequence[int]) -> int:
    """Longest strictly increasing subsequence (patience sorting)."""
    tails: list[int] = []
    for v in seq:
        k = bisect_left(tails, v)
        if k == len(tails):
            tails.append(v)
        else:
            tails[k] = v
    return len(tails)


def lds_length(seq: Sequence[int]) -> int:
    return lis_length([-v for v in seq])


def _check_k(w: Sequence[int], k: int) -> None:
    if not 1 <= k <= len(w):
        raise ValueError(f"k={k} outside 1..{len(w)}")


@lru_cache(maxsize=4096)
def _subset_profiles(w: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    n = len(w)
    if 2**n > SUBSET_BUDGET:
        raise BudgetExceeded(f"2^{n} subsets exceeds budget {SUBSET_BUDGET}")
    # best_by_lds[d]: largest subset whose longest decreasing subsequence is d
    best_by_lds = [0] * (n + 1)
    best_by_lis = [0] * (n + 1)
    for mask in range(1, 2**n):
        sub = [w[i] for i in range(n) if mask >> i & 1]
        size = len(sub)
        d = lds_length(sub)
        if size > best_by_lds[d]:
            best_by_lds[d] = size
        a = lis_length(sub)
        if size > best_by_lis[a]:
            best_by_lis[a] = size
    incr, decr = [], []
    run_i = run_d = 0
    for k in range(1, n + 1):
        run_i = max(run_i, best_by_lds[k])
        run_d = max(run_d, best_by_lis[k])
        incr.append(run_i)
        decr.append(run_d)
    return tuple(incr), tuple(decr)


def incr_profile_oracle(w: Sequence[int]) -> tuple[int, ...]:
    """(incr_1, ..., incr_n) by maximizing over position subsets."""
    return _subset_profiles(tuple(Permutation(w)))[0]


def decr_profile_oracle(w: Sequence[int]) -> tuple[int, ...]:
    return _subset_profiles(tuple(Permutation(w)))[1]


def incr_k_oracle(w: Sequence[int], k: int) -> int:
    _check_k(w, k)
    return incr_profile_oracle(w)[k - 1]


def decr_k_oracle(w: Sequence[int], k: int) -> int:
    _check_k(w, k)
    return decr_profile_oracle(w)[k - 1]


def local_incr_profile(w: Sequence[int]) -> tuple[int, ...]:
    """(localincr_1, ..., localincr_n): best cut of w into k consecutive blocks.

    Empty blocks are allowed, so the values are monotone in k.
    """
    w = tuple(w)
    n = len(w)
    # lis[i][j] = LIS of w[i:j]
    lis = [[0] * (n + 1) for _ in range(n + 1)]
    for i in range(n):
        tails: list[int] = []
        for j in range(i, n):
            k = bisect_left(tails, w[j])
            if k == len(tails):
                tails.append(w[j])
            else:
                tails[k] = w[j]
            lis[i][j + 1] = len(tails)
    best = [lis[0][j] for j in range(n + 1)]  # one block covering w[:j]
    out = [best[n]]
    for _ in range(2, n + 1):
        best = [max(best[i] + lis[i][j] for i in range(j + 1)) for j in range(n + 1)]
        out.append(best[n])
    return tuple(out)


def local_incr_k(w: Sequence[int], k: int) -> int:
    _check_k(w, k)
    return local_incr_profile(w)[k - 1]


def local_decr(u: Sequence[int]) -> int:
    """0 for the empty sequence, else 1 + number of descents."""
    if not u:
        return 0
    return 1 + sum(1 for a, b in zip(u, u[1:]) if a > b)


def _local_decr_exhaustive(w: tuple[int, ...], k: int) -> int:
    n = len(w)
    if k**n > ASSIGNMENT_BUDGET:
        raise BudgetExceeded(f"{k}^{n} assignments exceeds budget {ASSIGNMENT_BUDGET}")
    best = 0
    for labels in product(range(k), repeat=n):
        # only the first position may fix label 0; the rest is symmetric
        if labels[0] != 0:
            break
        parts: list[list[int]] = [[] for _ in range(k)]
        for v, j in zip(w, labels):
            parts[j].append(v)
        best = max(best, sum(local_decr(u) for u in parts))
    return best


def _local_decr_dp(w: tuple[int, ...], k: int) -> int:
    """Exact maximum over assignments, tracking only each subsequence's last value.

    Appending v to a subsequence scores 1 when it starts the subsequence or
    creates a descent, so an empty subsequence acts as last value +infinity.
    """
    inf = len(w) + 1
    states = {(inf,) * k: 0}
    for v in w:
        nxt: dict[tuple[int, ...], int] = {}
        for state, score in states.items():
            for last in set(state):
                new = list(state)
                new[new.index(last)] = v
                key = tuple(sorted(new))
                val = score + (last > v)
                if nxt.get(key, -1) < val:
                    nxt[key] = val
        states = nxt
    return max(states.values())


def local_decr_k(w: Sequence[int], k: int, method: str = "dp") -> int:
    """localdecr_k(w): best split of w into k disjoint subsequences, each scored 1 + descents.

    method: "dp" (exact search over last values), "exhaustive" (every
    assignment; needs k^n <= ASSIGNMENT_BUDGET) or "fast" (partial sums of the
    conjugate soliton partition).
    """
    w = tuple(Permutation(w))
    _check_k(w, k)
    if method == "dp":
        return _local_decr_dp(w, k)
    if method == "exhaustive":
        return _local_decr_exhaustive(w, k)
    if method == "fast":
        return conjugate(soliton_decomposition(w).shape).partial_sums(len(w))[k - 1]
    raise ValueError(f"unknown method {method!r}")


@dataclass(frozen=True)
class GreeneProfile:
    incr: tuple[int, ...]
    decr: tuple[int, ...]
    local_incr: tuple[int, ...]
    local_decr: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "incr": list(self.incr),
            "decr": list(self.decr),
            "local_incr": list(self.local_incr),
            "local_decr": list(self.local_decr),
        }


def greene_profile(w: Sequence[int]) -> GreeneProfile:
    """All four statistics for k = 1..n, read off the RS and soliton partitions."""
    w = Permutation(w)
    n = len(w)
    lam = Partition(len(r) for r in insertion_rows(w))
    big = soliton_decomposition(w).shape
    return GreeneProfile(
        incr=lam.partial_sums(n),
        decr=conjugate(lam).partial_sums(n),
        local_incr=big.partial_sums(n),
        local_decr=conjugate(big).partial_sums(n),
    )


def greene_profile_oracle(w: Sequence[int], exhaustive: bool = False) -> GreeneProfile:
    """Same profile computed from the definitions, without RS or box-ball evolution."""
    w = Permutation(w)
    n = len(w)
    method = "exhaustive" if exhaustive else "dp"
    return GreeneProfile(
        incr=incr_profile_oracle(w),
        decr=decr_profile_oracle(w),
        local_incr=local_incr_profile(w),
        local_decr=tuple(local_decr_k(w, k, method) for k in range(1, n + 1)),
    )
