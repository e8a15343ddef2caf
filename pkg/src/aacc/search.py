"""Search for large codes with a given property at small parameters.

All supported properties are hereditary (every subcode of a good code is
good) and invariant under relabelling symbols position by position, so the
exhaustive search only grows codes that contain the all-zero word and
prunes any branch whose prefix already fails.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .code import Code
from .props import Budget, BudgetExceeded, check

__all__ = ["SearchResult", "SEARCH_PROPERTIES", "all_words", "greedy_search", "exhaustive_search"]

SEARCH_PROPERTIES = ("fpc", "sc", "ssc", "smippc", "udc")


@dataclass(frozen=True)
class SearchResult:
    code: Code
    prop: str
    t: int
    mode: str
    optimal: bool
    budget_used: int
    exhausted: bool = False

    @property
    def M(self) -> int:
        return self.code.M


def all_words(n: int, q: int) -> list[tuple[int, ...]]:
    return list(itertools.product(range(q), repeat=n))


def _holds(prop, words, q, t, budget) -> bool:
    return check(prop, Code(tuple(words), q), t, budget).holds


def _check_prop(prop: str) -> None:
    if prop not in SEARCH_PROPERTIES:
        raise ValueError(f"search supports {SEARCH_PROPERTIES}, got {prop!r}")


def greedy_search(
    n: int, q: int, t: int, prop: str, trials: int = 10, seed: int = 0, budget: int = 10**7
) -> SearchResult:
    """Best of ``trials`` random-order greedy column additions."""
    _check_prop(prop)
    rng = random.Random(seed)
    words = all_words(n, q)
    meter = Budget(budget)
    best: list[tuple[int, ...]] = [words[0]]
    exhausted = False
    try:
        for _ in range(trials):
            order = words[:]
            rng.shuffle(order)
            chosen: list[tuple[int, ...]] = []
            for w in order:
                if _holds(prop, chosen + [w], q, t, meter):
                    chosen.append(w)
            if len(chosen) > len(best):
                best = chosen
    except BudgetExceeded:
        exhausted = True
    return SearchResult(Code(tuple(best), q), prop, t, "greedy", False, meter.used, exhausted)


def exhaustive_search(n: int, q: int, t: int, prop: str, budget: int = 10**7) -> SearchResult:
    """Branch-and-bound for the largest code; ``optimal`` only if it ran to completion."""
    _check_prop(prop)
    words = all_words(n, q)
    meter = Budget(budget)
    best = [words[0]]
    chosen = [words[0]]

    def grow(start: int) -> None:
        nonlocal best
        if len(chosen) > len(best):
            best = chosen[:]
        for k in range(start, len(words)):
            if len(chosen) + len(words) - k <= len(best):
                return
            chosen.append(words[k])
            if _holds(prop, chosen, q, t, meter):
                grow(k + 1)
            chosen.pop()

    try:
        grow(1)
        optimal, exhausted = True, False
    except BudgetExceeded:
        optimal, exhausted = False, True
    return SearchResult(Code(tuple(best), q), prop, t, "exhaustive", optimal, meter.used, exhausted)
