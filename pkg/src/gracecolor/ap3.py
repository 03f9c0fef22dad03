"""Exact search over 3-AP-free integer sets.

A set is 3-AP-free when no three distinct members a < b < c satisfy
a + c = 2b.  This module computes, with witnesses:

  L(m)  - the size of the largest 3-AP-free subset of [1..m];
  a(k)  - the least m with L(m) >= k, i.e. the minimal span of a k-element
          3-AP-free set of positive integers.

L is computed as an incremental ladder: L(m) is L(m-1) or L(m-1)+1, so each
level is a single decision search seeded with the previous level's answer,
and every proven L value sharpens the pruning bound for later levels.
"""

from __future__ import annotations

import time
from bisect import bisect_left
from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence

from .budget import TIME_CHECK_INTERVAL, BudgetExhausted, BudgetMeter, SolveBudget

_NO_LIMIT = 1 << 62


def is_ap3_free(elements: Sequence[int]) -> bool:
    """True iff no pair a < c in the set has its midpoint in the set.

    Input must be strictly increasing.  Pairs with odd a+c have no integer
    midpoint and are skipped.
    """
    xs = list(elements)
    for prev, cur in zip(xs, xs[1:]):
        if prev >= cur:
            raise ValueError("input must be strictly increasing without duplicates")
    members = set(xs)
    for i, a in enumerate(xs):
        for c in xs[i + 1:]:
            if (a + c) % 2 == 0 and (a + c) // 2 in members:
                return False
    return True


@dataclass
class SearchStats:
    nodes: int = 0
    prunes_by_bound: int = 0
    elapsed: float = 0.0


@dataclass(frozen=True)
class Ap3Result:
    """Outcome of one exact computation.

    For longest-subset queries value is L(m); for minimal-span queries value
    is a(k).  When proven is False the budget ran out: for longest queries
    value/witness are the best proven lower bound, for span queries value is
    the largest span proven insufficient and the witness is empty.  Unproven
    results are never written to any cache.
    """

    value: int
    witness: tuple[int, ...]
    stats: SearchStats
    proven: bool


class Ap3Engine:
    """Incremental L(m) ladder with witnesses, reusable across queries.

    All stored levels are exact.  An engine may be seeded from a persistent
    cache of previously proven values (see gracecolor.tables); seeded entries
    are validated for witness correctness and unit steps, then trusted.
    """

    def __init__(self):
        self._lengths: list[int] = [0]
        self._witnesses: list[tuple[int, ...]] = [()]

    @property
    def frontier(self) -> int:
        """Largest m with a proven L(m)."""
        return len(self._lengths) - 1

    def length(self, m: int) -> int | None:
        """Proven L(m), or None if the ladder has not reached m."""
        if 0 <= m <= self.frontier:
            return self._lengths[m]
        return None

    def witness(self, m: int) -> tuple[int, ...] | None:
        if 0 <= m <= self.frontier:
            return self._witnesses[m]
        return None

    def proven_levels(self) -> Iterator[tuple[int, int, tuple[int, ...]]]:
        """Yield (m, L(m), witness) for every proven level, m ascending."""
        for m in range(1, len(self._lengths)):
            yield m, self._lengths[m], self._witnesses[m]

    def seed(self, entries: Mapping[int, tuple[int, tuple[int, ...]]]) -> int:
        """Adopt proven (m -> (L, witness)) entries contiguous with the frontier.

        Entries beyond the first gap are ignored (bounds need every smaller
        level).  Inconsistent entries raise ValueError.
        """
        applied = 0
        m = self.frontier + 1
        while m in entries:
            value, witness = entries[m]
            prev = self._lengths[m - 1]
            if value not in (prev, prev + 1):
                raise ValueError(f"L({m})={value} inconsistent with L({m-1})={prev}")
            witness = tuple(witness)
            if len(witness) != value or not witness or witness[-1] > m or witness[0] < 1:
                raise ValueError(f"witness for L({m})={value} does not fit [1..{m}]")
            if not is_ap3_free(witness):
                raise ValueError(f"witness for L({m}) contains a 3-term progression")
            self._lengths.append(value)
            self._witnesses.append(witness)
            applied += 1
            m += 1
        return applied

    # -- queries ------------------------------------------------------------

    def longest(self, m: int, budget: SolveBudget | None = None,
                meter: BudgetMeter | None = None) -> Ap3Result:
        """L(m) with an attaining witness; exact unless the budget runs out."""
        if m < 1:
            raise ValueError("m must be >= 1")
        meter = meter or BudgetMeter(budget)
        stats = SearchStats()
        start = time.perf_counter()
        proven = True
        try:
            while self.frontier < m:
                self._advance(meter, stats)
        except BudgetExhausted:
            proven = False
        stats.elapsed = time.perf_counter() - start
        level = min(m, self.frontier)
        return Ap3Result(self._lengths[level], self._witnesses[level], stats, proven)

    def min_span(self, k: int, budget: SolveBudget | None = None,
                 meter: BudgetMeter | None = None) -> Ap3Result:
        """Least m with L(m) >= k, plus a k-element witness spanning exactly [1..m]."""
        if k < 1:
            raise ValueError("k must be >= 1")
        meter = meter or BudgetMeter(budget)
        stats = SearchStats()
        start = time.perf_counter()
        proven = True
        try:
            while self._lengths[-1] < k:
                self._advance(meter, stats)
        except BudgetExhausted:
            proven = False
        stats.elapsed = time.perf_counter() - start
        if not proven:
            return Ap3Result(self.frontier, (), stats, False)
        m = bisect_left(self._lengths, k)
        return Ap3Result(m, self._witnesses[m], stats, True)

    # -- ladder internals ----------------------------------------------------

    def _advance(self, meter: BudgetMeter, stats: SearchStats) -> None:
        """Prove the next level: L(m) = L(m-1) + 1 if attainable, else L(m-1)."""
        m = len(self._lengths)
        target = self._lengths[m - 1] + 1
        found = _find_of_size(m, target, self._lengths, meter, stats)
        if found is not None:
            self._lengths.append(target)
            self._witnesses.append(found)
        else:
            self._lengths.append(self._lengths[m - 1])
            self._witnesses.append(self._witnesses[m - 1])


def _find_of_size(m: int, target: int, lengths: Sequence[int],
                  meter: BudgetMeter, stats: SearchStats) -> tuple[int, ...] | None:
    """Find a 3-AP-free subset of [1..m] with exactly `target` elements, or
    prove that none exists.

    Depth-first over candidate values in increasing order.  State per branch:
    a bitmask of blocked values (after choosing a then b > a, the value 2b-a
    would complete a progression and is blocked) and a mirrored copy of the
    chosen set, so the blocks added by candidate v are one shift of the
    mirror.  A branch is abandoned when the chosen count plus the smaller of
    the remaining window's L value and its unblocked candidate count cannot
    reach the target; both bounds shrink as v grows, so the whole candidate
    loop ends there.  The first element is restricted to the lower half of
    [1..m]: the reflection x -> m+1-x maps witnesses to witnesses, so some
    witness survives the restriction whenever one exists.

    Requires lengths[t] = L(t) for all t < m.
    """
    full = (1 << (m + 1)) - 2  # bits 1..m
    max_first = (m + 1) // 2
    limit = meter.node_limit()
    node_cap = _NO_LIMIT if limit is None else limit
    counters = [0, 0]  # nodes, bound prunes
    chosen: list[int] = []
    timed = meter.deadline is not None

    def dfs(count: int, blocked: int, mirror: int, lo: int) -> bool:
        free = full & ~blocked & -(1 << lo)
        need = target - count - 1
        while free:
            bit = free & -free
            free ^= bit
            if counters[0] >= node_cap:
                raise BudgetExhausted("node limit reached")
            counters[0] += 1
            if timed and counters[0] % TIME_CHECK_INTERVAL == 0:
                meter.check_time()
            v = bit.bit_length() - 1
            if count == 0 and v > max_first:
                return False  # mirrored first elements: already covered
            if need > lengths[m - v] or need > free.bit_count():
                counters[1] += 1
                return False
            chosen.append(v)
            if need == 0:
                return True
            shift = 2 * v - m
            blocks = mirror << shift if shift >= 0 else mirror >> -shift
            if dfs(count + 1, blocked | (blocks & full), mirror | (1 << (m - v)), v + 1):
                return True
            chosen.pop()
        return False

    try:
        if dfs(0, 0, 0, 1):
            return tuple(chosen)
        return None
    finally:
        meter.spend(counters[0])
        stats.nodes += counters[0]
        stats.prunes_by_bound += counters[1]


# -- module-level conveniences (fresh engine per call) ------------------------


def longest_ap3_free(m: int, budget: SolveBudget | None = None,
                     engine: Ap3Engine | None = None) -> Ap3Result:
    """L(m) = size of the largest 3-AP-free subset of [1..m], with witness."""
    return (engine or Ap3Engine()).longest(m, budget)


def min_span_ap3_free(k: int, budget: SolveBudget | None = None,
                      engine: Ap3Engine | None = None) -> Ap3Result:
    """Minimal m admitting a k-element 3-AP-free subset of [1..m], with witness."""
    return (engine or Ap3Engine()).min_span(k, budget)


def enumerate_witnesses(k: int, m: int, limit: int) -> list[tuple[int, ...]]:
    """Up to `limit` k-element 3-AP-free subsets of [1..m], lexicographic order."""
    if k < 1 or m < 1:
        raise ValueError("k and m must be >= 1")
    out: list[tuple[int, ...]] = []
    if limit <= 0 or k > m:
        return out
    full = (1 << (m + 1)) - 2
    chosen: list[int] = []

    def walk(count: int, blocked: int, mirror: int, lo: int) -> bool:
        free = full & ~blocked & -(1 << lo)
        need = k - count - 1
        while free:
            bit = free & -free
            free ^= bit
            v = bit.bit_length() - 1
            if need > m - v:
                return False
            chosen.append(v)
            if need == 0:
                out.append(tuple(chosen))
                chosen.pop()
                if len(out) >= limit:
                    return True
                continue
            shift = 2 * v - m
            blocks = mirror << shift if shift >= 0 else mirror >> -shift
            if walk(count + 1, blocked | (blocks & full), mirror | (1 << (m - v)), v + 1):
                return True
            chosen.pop()
        return False

    walk(0, 0, 0, 1)
    return out
