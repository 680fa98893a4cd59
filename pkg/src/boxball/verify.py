"""Exhaustive sweeps over S_n checking the box-ball theorems and conjectures.

Each suite returns a VerificationReport whose violations are self-contained
reproducers: the offending permutation plus both sides of the failed check.
"""

from __future__ import annotations

import json
import os
import time
from collections import Counter, defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from math import factorial
from typing import Callable

from .bbs import (
    configuration_array,
    is_steady,
    run_to_steady,
    state_from_permutation,
    step_carrier,
    step_direct,
)
from .core import (
    Partition,
    Permutation,
    Tableau,
    conjugate,
    dominance_leq,
    is_standard,
    partitions_of,
    row_reading_word,
    standard_tableaux,
)
from .greene import (
    BudgetExceeded,
    incr_profile_oracle,
    decr_profile_oracle,
    local_decr_k,
    local_incr_profile,
)
from .knuth import MoveKind, knuth_class, knuth_neighbors
from .rs import enumerate_qhat_class, insertion_rows, qhat_tableau, rs_insert

# largest n each suite sweeps by default; BOXBALL_MAX_N overrides all of them
MAX_N = {
    "tfae": 8,
    "t0": 8,
    "t1": 8,
    "qhat": 9,
    "qhat-conjecture": 8,
    "q-time": 8,
    "knuth-paths": 7,
    "steppers": 8,
    "fukuda": 8,
    "dominance": 8,
}
# TFAE uses the subset/DP oracles up to this n unless told otherwise
ORACLE_MAX_N = 7


def max_n(suite: str) -> int:
    env = os.environ.get("BOXBALL_MAX_N")
    return int(env) if env else MAX_N[suite]


@dataclass
class VerificationReport:
    claim_id: str
    n: int
    checked: int
    violations: list[dict]
    elapsed: float
    conjecture: bool = False
    stats: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "claim_id": self.claim_id,
            "n": self.n,
            "checked": self.checked,
            "violations": self.violations,
            "elapsed": round(self.elapsed, 3),
            "conjecture": self.conjecture,
            "stats": self.stats,
        }

    def to_text(self) -> str:
        tag = "CONJECTURE " if self.conjecture else ""
        if self.passed:
            status = "PASS"
        else:
            status = "WARN" if self.conjecture else "FAIL"
        lines = [
            f"{status} {tag}{self.claim_id} n={self.n}: checked {self.checked}, "
            f"{len(self.violations)} violation(s) in {self.elapsed:.2f}s"
        ]
        for key, val in self.stats.items():
            if not isinstance(val, (list, dict)):
                lines.append(f"  {key}: {val}")
        for v in self.violations[:10]:
            lines.append("  violation: " + json.dumps(v))
        if len(self.violations) > 10:
            lines.append(f"  ... {len(self.violations) - 10} more")
        return "\n".join(lines)


def _check_budget(suite: str, n: int, low: int = 1) -> None:
    if n < low:
        raise ValueError(f"{suite} needs n >= {low}, got {n}")
    if n > max_n(suite):
        raise BudgetExceeded(f"{suite}: n={n} exceeds budget {max_n(suite)} (set BOXBALL_MAX_N to raise)")


def _rows(t: Tableau) -> list[list[int]]:
    return t.to_json()


def _sd_and_time(w) -> tuple[Tableau, int]:
    t, s = run_to_steady(w)
    return Tableau(entries for _, entries in configuration_array(s).rows), t


# per-permutation checks: each returns (violation or None, stats Counter)


def _check_tfae(w, oracle: bool):
    n = len(w)
    sd, _ = _sd_and_time(w)
    p = Tableau(insertion_rows(w))
    if oracle:
        incr = incr_profile_oracle(w)
        decr = decr_profile_oracle(w)
        lincr = local_incr_profile(w)
        ldecr = tuple(local_decr_k(w, k, "dp") for k in range(1, n + 1))
    else:
        incr = p.shape.partial_sums(n)
        decr = conjugate(p.shape).partial_sums(n)
        lincr = sd.shape.partial_sums(n)
        ldecr = conjugate(sd.shape).partial_sums(n)
    conds = [
        sd == p,
        is_standard(sd),
        sd.shape == p.shape,
        lincr == incr,
        ldecr == decr,
    ]
    stats = Counter({"sd_equals_p": int(conds[0])})
    if len(set(conds)) > 1:
        return {
            "w": list(w),
            "conditions": conds,
            "sd": _rows(sd),
            "p": _rows(p),
            "incr": list(incr),
            "local_incr": list(lincr),
            "decr": list(decr),
            "local_decr": list(ldecr),
        }, stats
    return None, stats


@lru_cache(maxsize=None)
def reading_words(n: int) -> frozenset[tuple[int, ...]]:
    """Row reading words of every standard tableau with n cells."""
    return frozenset(
        tuple(row_reading_word(t)) for sh in partitions_of(n) for t in standard_tableaux(sh)
    )


def _check_t0(w):
    t = run_to_steady(w)[0]
    is_reading = tuple(w) in reading_words(len(w))
    stats = Counter({"time_zero": int(t == 0)})
    if (t == 0) != is_reading:
        return {"w": list(w), "steady_time": t, "is_reading_word": is_reading}, stats
    return None, stats


def _check_qhat_conjecture(w):
    n = len(w)
    pair = rs_insert(w)
    t = run_to_steady(w)[0]
    if pair.q == qhat_tableau(n):
        return None, Counter({"qhat_members": 1})
    if t >= n - 3:
        return {"w": list(w), "q": _rows(pair.q), "steady_time": t, "bound": n - 3}, Counter()
    return None, Counter()


def _check_q_time(w):
    q = rs_insert(w).q
    t = run_to_steady(w)[0]
    key = json.dumps(_rows(q))
    return None, Counter({(key, t): 1})


def _check_steppers(w):
    s = state_from_permutation(w)
    steady_at = None
    t = 0
    while steady_at is None or t < steady_at + 2:
        if steady_at is None and is_steady(s):
            steady_at = t
        a, b = step_direct(s), step_carrier(s)
        if a != b:
            return {"w": list(w), "t": t, "state": s.to_json(), "direct": a.to_json(), "carrier": b.to_json()}, Counter()
        s = a
        t += 1
    return None, Counter({"steps": t})


def _check_fukuda(w):
    p0 = insertion_rows(w)
    s = state_from_permutation(w)
    steady_at = None
    t = 0
    while True:
        if steady_at is None and is_steady(s):
            steady_at = t
        p = insertion_rows(s.balls())
        if p != p0:
            return {"w": list(w), "t": t, "state": s.to_json(), "p0": p0, "p_t": p}, Counter()
        if steady_at is not None and t >= steady_at + 2:
            return None, Counter()
        s = step_direct(s)
        t += 1


def _check_dominance(w):
    sd, _ = _sd_and_time(w)
    lam = Partition(len(r) for r in insertion_rows(w))
    if not dominance_leq(sd.shape, lam):
        return {"w": list(w), "sd_shape": list(sd.shape), "p_shape": list(lam)}, Counter()
    return None, Counter()


CHECKS: dict[str, Callable] = {
    "tfae": _check_tfae,
    "t0": _check_t0,
    "qhat-conjecture": _check_qhat_conjecture,
    "q-time": _check_q_time,
    "steppers": _check_steppers,
    "fukuda": _check_fukuda,
    "dominance": _check_dominance,
}


def _run_chunk(args):
    name, n, first, kwargs = args
    check = CHECKS[name]
    rest = [v for v in range(1, n + 1) if v != first]
    violations = []
    stats: Counter = Counter()
    count = 0
    for tail in permutations(rest):
        w = Permutation((first,) + tail)
        bad, st = check(w, **kwargs)
        count += 1
        stats.update(st)
        if bad is not None:
            violations.append(bad)
    return count, violations, stats


def sweep(name: str, n: int, jobs: int = 1, **kwargs) -> tuple[int, list[dict], Counter]:
    """Apply a per-permutation check to all of S_n, chunked by first letter."""
    tasks = [(name, n, first, kwargs) for first in range(1, n + 1)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_chunk, tasks))
    else:
        results = [_run_chunk(t) for t in tasks]
    count = 0
    violations: list[dict] = []
    stats: Counter = Counter()
    for c, v, s in results:
        count += c
        violations.extend(v)
        stats.update(s)
    return count, violations, stats


def verify_tfae(n: int, jobs: int = 1, oracle: bool | None = None) -> VerificationReport:
    """SD = P, SD standard, equal shapes, localincr = incr, localdecr = decr: all or none."""
    _check_budget("tfae", n)
    if oracle is None:
        oracle = n <= ORACLE_MAX_N
    start = time.perf_counter()
    count, violations, stats = sweep("tfae", n, jobs, oracle=oracle)
    return VerificationReport(
        "tfae", n, count, violations, time.perf_counter() - start,
        stats={
            "oracle": oracle,
            "sd_equals_p": stats["sd_equals_p"],
            "fraction_sd_equals_p": stats["sd_equals_p"] / count,
        },
    )


def verify_t0(n: int, jobs: int = 1) -> VerificationReport:
    """Steady-state time 0 exactly for row reading words of standard tableaux."""
    _check_budget("t0", n)
    start = time.perf_counter()
    count, violations, stats = sweep("t0", n, jobs)
    return VerificationReport(
        "t0", n, count, violations, time.perf_counter() - start,
        stats={"time_zero": stats["time_zero"], "reading_words": len(reading_words(n))},
    )


def verify_t1(n: int, jobs: int = 1) -> VerificationReport:
    """Every proper K1/K2 neighbour of a reading word has steady-state time 1."""
    _check_budget("t1", n)
    start = time.perf_counter()
    violations = []
    checked = 0
    for r in sorted(reading_words(n)):
        for w, label in knuth_neighbors(r):
            if label.kind is MoveKind.KB:
                continue
            checked += 1
            t = run_to_steady(w)[0]
            if t != 1:
                violations.append({"r": list(r), "w": list(w), "move": str(label), "steady_time": t})
    return VerificationReport("t1", n, checked, violations, time.perf_counter() - start)


def syt_count(sh) -> int:
    """Number of standard tableaux of a shape, by the hook length formula."""
    sh = Partition(sh)
    conj = [sum(1 for p in sh if p > j) for j in range(sh[0])] if sh else []
    hooks = 1
    for i, part in enumerate(sh):
        for j in range(part):
            hooks *= (part - j - 1) + (conj[j] - i - 1) + 1
    return factorial(sh.size) // hooks


def verify_qhat(n: int, jobs: int = 1) -> VerificationReport:
    """Every permutation with recording tableau Q-hat reaches steady state at exactly n - 3."""
    _check_budget("qhat", n, low=5)
    start = time.perf_counter()
    members = enumerate_qhat_class(n)
    violations = []
    times = Counter()
    qhat = qhat_tableau(n)
    for w in members:
        t = run_to_steady(w)[0]
        times[t] += 1
        if t != n - 3 or rs_insert(w).q != qhat:
            violations.append({"w": list(w), "steady_time": t, "expected": n - 3})
    expected_size = syt_count((n - 3, 2, 1))
    if len(members) != expected_size:
        violations.append({"class_size": len(members), "expected": expected_size})
    return VerificationReport(
        "qhat", n, len(members), violations, time.perf_counter() - start,
        stats={"class_size": len(members), "expected_class_size": expected_size},
    )


def verify_qhat_conjecture(n: int, jobs: int = 1) -> VerificationReport:
    """Every w with Q(w) != Q-hat reaches steady state before time n - 3."""
    _check_budget("qhat-conjecture", n, low=5)
    start = time.perf_counter()
    count, violations, stats = sweep("qhat-conjecture", n, jobs)
    return VerificationReport(
        "qhat-conjecture", n, count, violations, time.perf_counter() - start,
        conjecture=True, stats={"qhat_members": stats["qhat_members"]},
    )


def verify_q_determines_time(n: int, jobs: int = 1) -> VerificationReport:
    """Permutations sharing a recording tableau share their steady-state time."""
    _check_budget("q-time", n)
    start = time.perf_counter()
    count, _, stats = sweep("q-time", n, jobs)
    by_q: dict[str, dict[int, int]] = defaultdict(dict)
    for (key, t), c in stats.items():
        by_q[key][t] = c
    violations = []
    table = []
    for key in sorted(by_q):
        times = by_q[key]
        table.append({"q": json.loads(key), "times": sorted(times)})
        if len(times) > 1:
            violations.append({"q": json.loads(key), "time_counts": {str(t): c for t, c in sorted(times.items())}})
    return VerificationReport(
        "q-time", n, count, violations, time.perf_counter() - start,
        conjecture=True,
        stats={"groups": len(by_q), "max_time": max(t for times in by_q.values() for t in times), "table": table},
    )


def _knuth_class_violations(vertices: list[Permutation]) -> list[dict]:
    sd = {w: _sd_and_time(w)[0] for w in vertices}
    adj = {w: knuth_neighbors(w) for w in vertices}
    violations = []
    # KB parity from the smallest vertex; proper moves keep it, KB moves flip it
    parity = {vertices[0]: 0}
    order = [vertices[0]]
    for u in order:
        for v, label in adj[u]:
            bit = parity[u] ^ (label.kind is MoveKind.KB)
            if v not in parity:
                parity[v] = bit
                order.append(v)
            elif parity[v] != bit:
                violations.append({"part": "parity", "u": list(u), "v": list(v), "move": str(label)})
    for i, u in enumerate(vertices):
        for v in vertices[i + 1:]:
            if parity[u] != parity[v] and sd[u] == sd[v]:
                violations.append({"part": "odd-KB", "u": list(u), "v": list(v), "sd": _rows(sd[u])})
    # components of the graph without KB edges must have constant SD shape
    comp: dict[Permutation, Permutation] = {}
    for root in vertices:
        if root in comp:
            continue
        comp[root] = root
        stack = [root]
        while stack:
            u = stack.pop()
            for v, label in adj[u]:
                if label.kind is not MoveKind.KB and v not in comp:
                    comp[v] = root
                    stack.append(v)
                    if sd[v].shape != sd[root].shape:
                        violations.append({
                            "part": "non-KB", "u": list(root), "v": list(v),
                            "shape_u": list(sd[root].shape), "shape_v": list(sd[v].shape),
                        })
    return violations


def knuth_classes(n: int) -> list[list[Permutation]]:
    """Partition of S_n into Knuth classes by breadth-first search, in lex order of minima."""
    seen: set[Permutation] = set()
    classes = []
    for w in permutations(range(1, n + 1)):
        w = Permutation(w)
        if w in seen:
            continue
        cls = knuth_class(w)
        seen.update(cls)
        classes.append(cls)
    return classes


def verify_knuth_paths(n: int, jobs: int = 1) -> VerificationReport:
    """Odd KB count along a path forces different SD; KB-free paths keep the SD shape."""
    _check_budget("knuth-paths", n)
    start = time.perf_counter()
    classes = knuth_classes(n)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_knuth_class_violations, classes, chunksize=16))
    else:
        results = [_knuth_class_violations(c) for c in classes]
    violations = [v for r in results for v in r]
    return VerificationReport(
        "knuth-paths", n, sum(len(c) for c in classes), violations, time.perf_counter() - start,
        stats={"classes": len(classes)},
    )


def _simple(name: str, doc: str):
    def suite(n: int, jobs: int = 1) -> VerificationReport:
        _check_budget(name, n)
        start = time.perf_counter()
        count, violations, stats = sweep(name, n, jobs)
        return VerificationReport(name, n, count, violations, time.perf_counter() - start,
                                  stats={k: v for k, v in stats.items() if isinstance(k, str)})

    suite.__name__ = "verify_" + name
    suite.__doc__ = doc
    return suite


verify_steppers = _simple("steppers", "Direct and carrier steppers agree through steady state + 2 steps.")
verify_fukuda = _simple("fukuda", "P of the ball word is constant along every trajectory.")
verify_dominance = _simple("dominance", "shape(SD(w)) is dominated by shape(P(w)).")


SUITES: dict[str, Callable[..., VerificationReport]] = {
    "tfae": verify_tfae,
    "t0": verify_t0,
    "t1": verify_t1,
    "qhat": verify_qhat,
    "qhat-conjecture": verify_qhat_conjecture,
    "q-time": verify_q_determines_time,
    "knuth-paths": verify_knuth_paths,
    "steppers": verify_steppers,
    "fukuda": verify_fukuda,
    "dominance": verify_dominance,
}
