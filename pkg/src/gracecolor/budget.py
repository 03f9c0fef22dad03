"""Node and wall-clock limits shared by the exact search engines."""

from __future__ import annotations

import time
from dataclasses import dataclass

TIME_CHECK_INTERVAL = 4096  # nodes between wall-clock checks


class BudgetExhausted(Exception):
    """Raised inside a search when the node or time limit is hit."""


@dataclass(frozen=True)
class SolveBudget:
    """Limits for one exact computation; None means unlimited.

    Node counts are checked on every search node; the wall clock is checked
    every TIME_CHECK_INTERVAL nodes.
    """

    max_nodes: int | None = None
    max_seconds: float | None = None

    def __post_init__(self):
        if self.max_nodes is not None and self.max_nodes < 1:
            raise ValueError("max_nodes must be positive")
        if self.max_seconds is not None and self.max_seconds <= 0:
            raise ValueError("max_seconds must be positive")


UNLIMITED = SolveBudget()


class BudgetMeter:
    """Mutable node counter plus deadline for one logical solve.

    A single meter may span several decision searches (iterative deepening
    shares one budget); kernels call spend() with batches of locally counted
    nodes and use node_limit()/deadline to enforce limits in their hot loops.
    """

    __slots__ = ("budget", "nodes", "deadline")

    def __init__(self, budget: SolveBudget | None):
        self.budget = budget or UNLIMITED
        self.nodes = 0
        self.deadline = (
            time.monotonic() + self.budget.max_seconds
            if self.budget.max_seconds is not None
            else None
        )

    def node_limit(self) -> int | None:
        """Remaining node allowance, or None when unlimited."""
        if self.budget.max_nodes is None:
            return None
        return self.budget.max_nodes - self.nodes

    def spend(self, nodes: int) -> None:
        self.nodes += nodes

    def check_time(self) -> None:
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise BudgetExhausted("wall-clock limit reached")
