"""Brute-force verifiers for the fingerprinting code classes.

Every checker walks the colluder sets of size 1..t (size-major, colex
within a size) and stops at the first violation, which becomes the
verdict's witness.  A shared budget bounds the number of subsets looked
at; running out raises :class:`BudgetExceeded` instead of answering.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import reduce
from operator import or_
from typing import Callable, Iterator

from .code import Code
from .descend import DEFAULT_PARENT_CAP, _suspects_packed, parent_intersection

__all__ = [
    "BudgetExceeded",
    "Budget",
    "PropertyVerdict",
    "DEFAULT_BUDGET",
    "colex_subsets",
    "is_frameproof",
    "is_separable",
    "is_scld",
    "is_strongly_separable",
    "is_smippc",
    "has_udc",
    "code_rate",
    "CHECKERS",
    "check",
]

DEFAULT_BUDGET = 10**7


class BudgetExceeded(RuntimeError):
    pass


class Budget:
    """Countdown of subset evaluations, shareable across several checks."""

    def __init__(self, limit: int = DEFAULT_BUDGET):
        self.limit = limit
        self.used = 0

    def spend(self, k: int = 1) -> None:
        self.used += k
        if self.used > self.limit:
            raise BudgetExceeded(f"subset budget of {self.limit} evaluations exhausted")


@dataclass(frozen=True)
class PropertyVerdict:
    prop: str
    t: int
    holds: bool
    witness: tuple[tuple[int, ...], ...] | None = None
    checked_subsets: int = 0
    detail: str | None = field(default=None, compare=False)

    def __bool__(self) -> bool:
        return self.holds

    def to_dict(self) -> dict:
        out = {
            "property": self.prop,
            "t": self.t,
            "holds": self.holds,
            "witness": [list(w) for w in self.witness] if self.witness else None,
            "checked_subsets": self.checked_subsets,
        }
        if self.detail:
            out["detail"] = self.detail
        return out


def colex_subsets(k: int, m: int) -> Iterator[tuple[int, ...]]:
    """``k``-subsets of ``1..m`` in colexicographic order."""
    if k == 0:
        yield ()
        return
    for top in range(k, m + 1):
        for rest in colex_subsets(k - 1, top - 1):
            yield rest + (top,)


def _small_subsets(M: int, t: int) -> Iterator[tuple[int, ...]]:
    for k in range(1, min(t, M) + 1):
        yield from colex_subsets(k, M)


def _validate_t(code: Code, t: int) -> None:
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")


def _scan(
    name: str,
    code: Code,
    t: int,
    budget: Budget | None,
    violation: Callable[[tuple[int, ...], int, list[int]], str | None],
) -> PropertyVerdict:
    _validate_t(code, t)
    budget = budget or Budget()
    packed = code.packed
    seen = 0
    for S in _small_subsets(code.M, t):
        budget.spend()
        seen += 1
        D = reduce(or_, (packed[j - 1] for j in S), 0)
        why = violation(S, D, _suspects_packed(packed, D))
        if why is not None:
            return PropertyVerdict(name, t, False, (S,), seen, why)
    return PropertyVerdict(name, t, True, None, seen)


def is_frameproof(code: Code, t: int, budget: Budget | None = None) -> PropertyVerdict:
    """``desc(C0)`` meets the code exactly in ``C0`` for all ``|C0| <= t``."""

    def violation(S, D, sus):
        if tuple(sus) != S:
            extra = sorted(set(sus) - set(S))
            return f"codewords {extra} are framed"
        return None

    return _scan("fpc", code, t, budget, violation)


def _separable_scan(name, code, t, budget, list_cap):
    _validate_t(code, t)
    budget = budget or Budget()
    packed = code.packed
    by_desc: dict[int, tuple[int, ...]] = {}
    seen = 0
    for S in _small_subsets(code.M, t):
        budget.spend()
        seen += 1
        D = reduce(or_, (packed[j - 1] for j in S), 0)
        if D in by_desc:
            return PropertyVerdict(
                name, t, False, (by_desc[D], S), seen, "equal descendant codes"
            )
        by_desc[D] = S
        if list_cap is not None:
            sus = _suspects_packed(packed, D)
            if len(sus) > list_cap:
                return PropertyVerdict(
                    name, t, False, (S,), seen, f"{len(sus)} suspects exceed list cap {list_cap}"
                )
    return PropertyVerdict(name, t, True, None, seen)


def is_separable(code: Code, t: int, budget: Budget | None = None) -> PropertyVerdict:
    """Distinct colluder sets of size ``<= t`` have distinct descendant codes."""
    return _separable_scan("sc", code, t, budget, None)


def is_scld(code: Code, t: int, list_cap: int, budget: Budget | None = None) -> PropertyVerdict:
    if list_cap < 1:
        raise ValueError(f"list_cap must be >= 1, got {list_cap}")
    return _separable_scan("scld", code, t, budget, list_cap)


def _parent_scan(name, code, t, budget, bad, cap):
    _validate_t(code, t)
    budget = budget or Budget()
    seen = 0
    for S in _small_subsets(code.M, t):
        inter, _, candidates = parent_intersection(code, S, cap)
        budget.spend(candidates)
        seen += 1
        if bad(S, inter):
            return PropertyVerdict(
                name, t, False, (S,), seen, f"parent-set intersection is {list(inter)}"
            )
    return PropertyVerdict(name, t, True, None, seen)


def is_strongly_separable(
    code: Code, t: int, budget: Budget | None = None, cap: int = DEFAULT_PARENT_CAP
) -> PropertyVerdict:
    """The parent sets of every ``C0`` with ``|C0| <= t`` intersect exactly in ``C0``."""
    return _parent_scan("ssc", code, t, budget, lambda S, inter: inter != S, cap)


def is_smippc(
    code: Code, t: int, budget: Budget | None = None, cap: int = DEFAULT_PARENT_CAP
) -> PropertyVerdict:
    """The parent sets of every ``C0`` with ``|C0| <= t`` share a codeword."""
    return _parent_scan("smippc", code, t, budget, lambda S, inter: not inter, cap)


def has_udc(code: Code, t: int, budget: Budget | None = None) -> PropertyVerdict:
    """t-uniqueness descendant code.

    Every ``C0`` with ``|C0| <= t`` has a member whose symbol at some
    position differs from that of every other suspect.
    """
    cols = code.columns
    n = code.n

    def violation(S, D, sus):
        for c in S:
            col = cols[c - 1]
            for i in range(n):
                s = col[i]
                if all(cols[o - 1][i] != s for o in sus if o != c):
                    return None
        return "no colluder holds a suspect-unique symbol"

    return _scan("udc", code, t, budget, violation)


def code_rate(code: Code) -> float:
    return math.log(code.M, code.q) / code.n


CHECKERS: dict[str, Callable[..., PropertyVerdict]] = {
    "fpc": is_frameproof,
    "sc": is_separable,
    "ssc": is_strongly_separable,
    "smippc": is_smippc,
    "udc": has_udc,
}


def check(
    prop: str, code: Code, t: int, budget: Budget | None = None, list_cap: int | None = None
) -> PropertyVerdict:
    """Dispatch by short property name (``fpc sc scld ssc smippc udc``)."""
    if prop == "scld":
        return is_scld(code, t, code.M if list_cap is None else list_cap, budget)
    try:
        fn = CHECKERS[prop]
    except KeyError:
        raise ValueError(f"unknown property {prop!r}") from None
    return fn(code, t, budget)
