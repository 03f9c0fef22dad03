"""Exact graceful chromatic numbers and chromatic numbers for small graphs.

The graceful chromatic number is computed by iterative deepening: a decision
search proves or refutes the existence of a graceful k-coloring for k =
lower_bound, lower_bound+1, ... and the first success is exact because every
smaller k was refuted exhaustively.

The decision search assigns vertices in a fixed order (degree descending,
index ascending) and keeps, for every uncolored vertex, the set of colors not
yet forbidden.  A color c is forbidden at v when a colored neighbor u has
color c, or |c - color(u)| collides with an incident edge color at u, or two
colored neighbors of v would both induce the same edge color |c - color(u)|.
The first vertex only tries colors up to ceil(k/2): reflecting every color x
to k+1-x preserves gracefulness, so half the palette suffices there.
"""

from __future__ import annotations

import concurrent.futures
import time
from dataclasses import dataclass

from .budget import TIME_CHECK_INTERVAL, BudgetExhausted, BudgetMeter, SolveBudget
from .checking import GracefulColoring
from .graphs import Graph, diameter, is_connected, max_degree, regularity

SOLVED = "solved"
INFEASIBLE = "infeasible-at-k"
EXHAUSTED = "budget-exhausted"

_NO_LIMIT = 1 << 62


@dataclass(frozen=True)
class SolveReport:
    """Result of one exact computation.

    witness is a GracefulColoring for graceful solves and a plain color tuple
    for chromatic-number solves; it is present exactly when status is solved.
    """

    status: str
    value: int | None
    witness: GracefulColoring | tuple[int, ...] | None
    nodes: int
    elapsed: float


@dataclass(frozen=True)
class Characterization:
    chi: int
    chi_g: int
    equal: bool
    chi_g_is_3: bool


def _require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise ValueError("graph must be connected")


def graceful_lower_bound(g: Graph) -> int:
    """Largest applicable structural lower bound for the graceful chromatic number.

    Bounds: max degree + 1 for any connected graph; r + 2 for r-regular
    graphs with r >= 2 (the only 1-regular connected graph is the single
    edge, which needs just 2 colors); the vertex count when the diameter is
    at most 2, since all colors must then be distinct.
    """
    _require_connected(g)
    bound = max_degree(g) + 1
    r = regularity(g)
    if r is not None and r >= 2:
        bound = max(bound, r + 2)
    if diameter(g) <= 2:
        bound = max(bound, g.n)
    return bound


def _search_order(g: Graph) -> list[int]:
    return sorted(range(g.n), key=lambda v: (-len(g.adjacency[v]), v))


def _decide(g: Graph, k: int, meter: BudgetMeter,
            root_colors: range) -> tuple[int, ...] | None:
    """Find a graceful k-coloring with the first-ordered vertex colored from
    root_colors, or prove none exists.  Returns per-vertex colors or None."""
    n = g.n
    adj = g.adjacency
    order = _search_order(g)
    full = (1 << (k + 1)) - 2  # colors 1..k
    limit = meter.node_limit()
    node_cap = _NO_LIMIT if limit is None else limit
    timed = meter.deadline is not None
    counters = [0]
    colors = [0] * n
    root_mask = 0
    for c in root_colors:
        root_mask |= 1 << c

    def dfs(i: int, domains: list[int]) -> bool:
        x = order[i]
        dom = domains[x]
        if i == 0:
            dom &= root_mask
        while dom:
            bit = dom & -dom
            dom ^= bit
            if counters[0] >= node_cap:
                raise BudgetExhausted("node limit reached")
            counters[0] += 1
            if timed and counters[0] % TIME_CHECK_INTERVAL == 0:
                meter.check_time()
            c = bit.bit_length() - 1
            colors[x] = c
            if i + 1 == n:
                return True
            nd = list(domains)
            alive = True
            for v in adj[x]:
                if colors[v]:
                    continue
                mask = nd[v] & ~bit
                for w in adj[x]:
                    cw = colors[w]
                    if cw and w != v:
                        d = c - cw if c > cw else cw - c
                        if c - d >= 1:
                            mask &= ~(1 << (c - d))
                        if c + d <= k:
                            mask &= ~(1 << (c + d))
                for u2 in adj[v]:
                    c2 = colors[u2]
                    if c2 and u2 != x:
                        if c2 == c:
                            mask = 0  # every color clashes between x and u2 at v
                        elif (c + c2) % 2 == 0:
                            mask &= ~(1 << ((c + c2) // 2))
                nd[v] = mask
                if not mask:
                    alive = False
                    break
            if alive:
                for u in adj[x]:
                    cu = colors[u]
                    if not cu:
                        continue
                    d = cu - c if cu > c else c - cu
                    for v in adj[u]:
                        if colors[v] or v == x:
                            continue
                        mask = nd[v]
                        if cu - d >= 1:
                            mask &= ~(1 << (cu - d))
                        if cu + d <= k:
                            mask &= ~(1 << (cu + d))
                        nd[v] = mask
                        if not mask:
                            alive = False
                            break
                    if not alive:
                        break
            if alive and dfs(i + 1, nd):
                return True
        colors[x] = 0
        return False

    try:
        if dfs(0, [full] * n):
            return tuple(colors)
        return None
    finally:
        meter.spend(counters[0])


def _decide_branch(payload):
    """Worker entry for one root-color branch of the decision search."""
    n, edges, k, root_color, max_nodes, max_seconds = payload
    g = Graph.from_edges(n, edges)
    meter = BudgetMeter(SolveBudget(max_nodes, max_seconds))
    try:
        witness = _decide(g, k, meter, range(root_color, root_color + 1))
    except BudgetExhausted:
        return root_color, EXHAUSTED, None, meter.nodes
    status = SOLVED if witness is not None else INFEASIBLE
    return root_color, status, witness, meter.nodes


def _decision(g: Graph, k: int, meter: BudgetMeter, workers: int) -> SolveReport:
    start = time.perf_counter()
    root_colors = range(1, (k + 1) // 2 + 1)
    if workers <= 1 or len(root_colors) <= 1:
        before = meter.nodes
        try:
            witness = _decide(g, k, meter, root_colors)
        except BudgetExhausted:
            return SolveReport(EXHAUSTED, None, None, meter.nodes - before,
                               time.perf_counter() - start)
        elapsed = time.perf_counter() - start
        if witness is None:
            return SolveReport(INFEASIBLE, None, None, meter.nodes - before, elapsed)
        coloring = GracefulColoring(witness, k)
        return SolveReport(SOLVED, k, coloring, meter.nodes - before, elapsed)

    # Parallel mode: explore each root color in its own process, each with the
    # currently remaining budget.  Branch outcomes are combined in ascending
    # root-color order, which mirrors the sequential search exactly: the
    # status, value, and witness are independent of scheduling.
    remaining_nodes = meter.node_limit()
    remaining_seconds = None
    if meter.deadline is not None:
        remaining_seconds = max(meter.deadline - time.monotonic(), 0.001)
    payloads = [(g.n, g.edges, k, c, remaining_nodes, remaining_seconds)
                for c in root_colors]
    outcomes = {}
    with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as pool:
        futures = {pool.submit(_decide_branch, p): p[3] for p in payloads}
        cancel_above: int | None = None
        for future in concurrent.futures.as_completed(futures):
            if future.cancelled():
                continue
            root, status, witness, nodes = future.result()
            outcomes[root] = (status, witness, nodes)
            if status == SOLVED and (cancel_above is None or root < cancel_above):
                cancel_above = root
                for other, oroot in futures.items():
                    if oroot > root:
                        other.cancel()
    elapsed = time.perf_counter() - start
    total = 0
    for c in root_colors:
        if c not in outcomes:  # cancelled before starting: a lower root solved
            continue
        status, witness, nodes = outcomes[c]
        total += nodes
        if status == EXHAUSTED:
            meter.spend(total)
            return SolveReport(EXHAUSTED, None, None, total, elapsed)
        if status == SOLVED:
            meter.spend(total)
            return SolveReport(SOLVED, k, GracefulColoring(witness, k), total, elapsed)
    meter.spend(total)
    return SolveReport(INFEASIBLE, None, None, total, elapsed)


def solve_graceful_decision(g: Graph, k: int, budget: SolveBudget | None = None,
                            workers: int = 1) -> SolveReport:
    """Decide whether g admits a graceful k-coloring.

    Returns a solved report with a witness, an infeasible report when the
    exhaustive search proves none exists, or budget-exhausted.
    """
    if k < 2:
        raise ValueError(f"palette size must be >= 2, got {k}")
    _require_connected(g)
    return _decision(g, k, BudgetMeter(budget), workers)


def chi_g(g: Graph, budget: SolveBudget | None = None, workers: int = 1) -> SolveReport:
    """Exact graceful chromatic number by iterative deepening on k.

    The budget spans the whole deepening run.  A budget-exhausted decision at
    any level makes the whole computation budget-exhausted; no unproven
    minimum is ever reported.
    """
    _require_connected(g)
    meter = BudgetMeter(budget)
    start = time.perf_counter()
    k = max(2, graceful_lower_bound(g))
    while True:
        report = _decision(g, k, meter, workers)
        if report.status == SOLVED:
            return SolveReport(SOLVED, k, report.witness, meter.nodes,
                               time.perf_counter() - start)
        if report.status == EXHAUSTED:
            return SolveReport(EXHAUSTED, None, None, meter.nodes,
                               time.perf_counter() - start)
        k += 1


# -- plain chromatic number ---------------------------------------------------


def _greedy_clique(g: Graph) -> list[int]:
    order = _search_order(g)
    clique: list[int] = []
    for v in order:
        if all(u in g.adjacency[v] for u in clique):
            clique.append(v)
    return clique


def _greedy_coloring(g: Graph) -> tuple[int, ...]:
    colors = [0] * g.n
    for v in _search_order(g):
        taken = {colors[u] for u in g.adjacency[v] if colors[u]}
        c = 1
        while c in taken:
            c += 1
        colors[v] = c
    return tuple(colors)


def _chi_decide(g: Graph, k: int, meter: BudgetMeter) -> tuple[int, ...] | None:
    """Proper k-coloring by backtracking, or None; new colors introduced in
    canonical order to break color-permutation symmetry."""
    n = g.n
    adj = g.adjacency
    order = _search_order(g)
    limit = meter.node_limit()
    node_cap = _NO_LIMIT if limit is None else limit
    timed = meter.deadline is not None
    counters = [0]
    colors = [0] * n

    def dfs(i: int, used: int) -> bool:
        x = order[i]
        forbid = 0
        for u in adj[x]:
            forbid |= 1 << colors[u]
        for c in range(1, min(k, used + 1) + 1):
            if forbid >> c & 1:
                continue
            if counters[0] >= node_cap:
                raise BudgetExhausted("node limit reached")
            counters[0] += 1
            if timed and counters[0] % TIME_CHECK_INTERVAL == 0:
                meter.check_time()
            colors[x] = c
            if i + 1 == n or dfs(i + 1, max(used, c)):
                return True
        colors[x] = 0
        return False

    try:
        if dfs(0, 0):
            return tuple(colors)
        return None
    finally:
        meter.spend(counters[0])


def chromatic_number(g: Graph, budget: SolveBudget | None = None) -> SolveReport:
    """Exact chromatic number: greedy clique lower bound, greedy coloring
    upper bound, backtracking decisions in between."""
    _require_connected(g)
    meter = BudgetMeter(budget)
    start = time.perf_counter()
    lower = len(_greedy_clique(g))
    greedy = _greedy_coloring(g)
    upper = max(greedy)
    value, witness = upper, greedy
    for k in range(lower, upper):
        try:
            found = _chi_decide(g, k, meter)
        except BudgetExhausted:
            return SolveReport(EXHAUSTED, None, None, meter.nodes,
                               time.perf_counter() - start)
        if found is not None:
            value, witness = k, found
            break
    return SolveReport(SOLVED, value, witness, meter.nodes,
                       time.perf_counter() - start)


def characterize(g: Graph, budget: SolveBudget | None = None,
                 workers: int = 1) -> Characterization:
    """Both chromatic numbers plus the two characterization predicates.

    Raises BudgetExhausted when either exact computation runs out of budget.
    """
    _require_connected(g)
    chi_report = chromatic_number(g, budget)
    if chi_report.status != SOLVED:
        raise BudgetExhausted("chromatic number computation ran out of budget")
    graceful_report = chi_g(g, budget, workers)
    if graceful_report.status != SOLVED:
        raise BudgetExhausted("graceful chromatic number computation ran out of budget")
    return Characterization(
        chi=chi_report.value,
        chi_g=graceful_report.value,
        equal=chi_report.value == graceful_report.value,
        chi_g_is_3=graceful_report.value == 3,
    )
