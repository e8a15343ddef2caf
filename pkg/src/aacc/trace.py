"""Soft tracing of averaging-attack colluders.

Four tracers share one loop shape: recompute the residual word of the
untraced colluders, read off its descendant code, keep the suspects, and
accept every suspect holding a symbol that no other suspect holds.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Union

from .attack import AttackError, residual_word
from .code import Code, CodewordMultiset, GeneratedWord, PositionSets, index_set
from .concat import ConcatSpec, window
from .descend import _check_dims, desc_from_word, suspects

__all__ = [
    "TraceStatus",
    "TraceStep",
    "TraceOutcome",
    "find_inter",
    "unique_contributors",
    "colluder_count_max",
    "colluder_count_lcm",
    "soft_trace",
    "multiset_soft_trace",
    "two_stage_trace",
]


class TraceStatus(str, enum.Enum):
    SUCCESS = "success"
    CONDITIONS_VIOLATED = "conditions_violated"


@dataclass(frozen=True)
class TraceStep:
    """One pass of a tracing loop."""

    word: GeneratedWord
    R: PositionSets
    suspects: tuple[int, ...]
    found: Union[tuple[int, ...], CodewordMultiset]


Colluders = Union[tuple[int, ...], CodewordMultiset]


@dataclass(frozen=True)
class TraceOutcome:
    status: TraceStatus
    colluders: Colluders | None
    iterations: int
    t0: int | None = None
    steps: tuple[TraceStep, ...] = field(default=(), compare=False)
    reason: str | None = None

    @property
    def ok(self) -> bool:
        return self.status is TraceStatus.SUCCESS

    def to_dict(self) -> dict:
        if self.colluders is None:
            colluders = []
        elif isinstance(self.colluders, CodewordMultiset):
            colluders = self.colluders.to_list()
        else:
            colluders = list(self.colluders)
        out = {"status": self.status.value, "colluders": colluders, "iterations": self.iterations}
        if self.reason:
            out["reason"] = self.reason
        return out


def _violated(iterations, t0, steps, reason) -> TraceOutcome:
    return TraceOutcome(
        TraceStatus.CONDITIONS_VIOLATED, None, iterations, t0, tuple(steps), reason
    )


def unique_contributors(
    code: Code, R: PositionSets, X: tuple[int, ...] | None = None
) -> dict[int, int]:
    """Map each suspect holding a suspect-unique symbol of ``R`` to its first such position.

    Positions in the returned dict are 0-based.
    """
    if X is None:
        X = suspects(code, R)
    cols = code.columns
    found: dict[int, int] = {}
    for i, mask in enumerate(R.masks):
        counts = [0] * code.q
        for j in X:
            counts[cols[j - 1][i]] += 1
        unique = [k for k in range(code.q) if counts[k] == 1 and mask >> k & 1]
        if not unique:
            continue
        for j in X:
            if cols[j - 1][i] in unique and j not in found:
                found[j] = i
    return found


def find_inter(code: Code, R: PositionSets) -> tuple[int, ...]:
    """Suspects of ``R`` that are the sole suspect carrying some symbol of ``R(i)``.

    An empty result is a valid answer; callers treat it as a failed condition.
    """
    _check_dims(code, R)
    return tuple(sorted(unique_contributors(code, R)))


def colluder_count_max(x: GeneratedWord) -> int:
    return max(x.denominators)


def colluder_count_lcm(x: GeneratedWord) -> int:
    return math.lcm(*x.denominators)


def soft_trace(code: Code, x: GeneratedWord, t_cap: int) -> TraceOutcome:
    """Recover the colluder set behind ``x`` on a binary code.

    Succeeds on every attack of at most ``t_cap`` colluders when the code
    has ``t_cap``-uniqueness descendant code.
    """
    if code.q != 2:
        raise ValueError(f"soft tracing needs a binary code, got q={code.q}")
    if len(x) != code.n:
        raise ValueError(f"word length {len(x)} != code length {code.n}")
    t0 = colluder_count_max(x)
    if t0 > t_cap:
        return _violated(0, t0, (), f"colluder count {t0} exceeds bound {t_cap}")
    traced: set[int] = set()
    steps: list[TraceStep] = []
    while len(traced) < t0:
        try:
            w = residual_word(x, t0, traced, code)
        except AttackError as exc:
            return _violated(len(steps), t0, steps, str(exc))
        R = desc_from_word(w)
        X = suspects(code, R)
        found = tuple(sorted(unique_contributors(code, R, X)))
        steps.append(TraceStep(w, R, X, found))
        if not found:
            return _violated(len(steps), t0, steps, "no suspect holds a unique symbol")
        traced.update(found)
    if len(traced) != t0:
        return _violated(len(steps), t0, steps, f"traced {len(traced)} codewords, expected {t0}")
    return TraceOutcome(TraceStatus.SUCCESS, index_set(traced), len(steps), t0, tuple(steps))


def multiset_soft_trace(code: Code, x: GeneratedWord, size: int) -> TraceOutcome:
    """Recover a colluder multiset of known ``size`` on a binary code.

    A codeword that is the only suspect with symbol ``s`` at position ``i``
    accounts for every copy of ``s`` there, so its multiplicity equals the
    residual count of ``s`` at ``i``.
    """
    if code.q != 2:
        raise ValueError(f"soft tracing needs a binary code, got q={code.q}")
    if len(x) != code.n:
        raise ValueError(f"word length {len(x)} != code length {code.n}")
    if size < 1:
        raise ValueError(f"multiset size must be positive, got {size}")
    traced: dict[int, int] = {}
    steps: list[TraceStep] = []
    while sum(traced.values()) < size:
        try:
            w = residual_word(x, size, CodewordMultiset.of(traced), code)
        except AttackError as exc:
            return _violated(len(steps), size, steps, str(exc))
        rest = size - sum(traced.values())
        R = desc_from_word(w)
        X = suspects(code, R)
        hits = unique_contributors(code, R, X)
        found: dict[int, int] = {}
        for j, i in sorted(hits.items()):
            ones = w[i] * rest
            mult = ones if code.columns[j - 1][i] == 1 else rest - ones
            if mult.denominator != 1 or mult < 1:
                return _violated(len(steps) + 1, size, steps, f"inconsistent multiplicity {mult}")
            found[j] = int(mult)
        steps.append(TraceStep(w, R, X, CodewordMultiset.of(found) if found else CodewordMultiset(())))
        if not found:
            return _violated(len(steps), size, steps, "no suspect holds a unique symbol")
        for j, r in found.items():
            traced[j] = traced.get(j, 0) + r
    if sum(traced.values()) != size:
        return _violated(len(steps), size, steps, "recovered multiset overshoots the size")
    return TraceOutcome(
        TraceStatus.SUCCESS, CodewordMultiset.of(traced), len(steps), size, tuple(steps)
    )


def two_stage_trace(outer: Code, inner: Code, x: GeneratedWord, t_cap: int) -> TraceOutcome:
    """Recover colluders of the concatenated code ``outer o inner``.

    Each pass traces the inner multiset in every window of the residual word,
    turns the recovered inner indices into outer symbols, and runs the
    unique-symbol search against the outer code.
    """
    spec = ConcatSpec(outer, inner)
    code = spec.code
    n1 = outer.n
    if len(x) != code.n:
        raise ValueError(f"word length {len(x)} is not {n1} windows of {inner.n}")
    t0 = colluder_count_lcm(x)
    if t0 > t_cap:
        return _violated(0, t0, (), f"colluder count {t0} exceeds bound {t_cap}")
    traced: set[int] = set()
    steps: list[TraceStep] = []
    while len(traced) < t0:
        try:
            w = residual_word(x, t0, traced, code)
        except AttackError as exc:
            return _violated(len(steps), t0, steps, str(exc))
        rest = t0 - len(traced)
        sets = []
        for i in range(1, n1 + 1):
            inner_out = multiset_soft_trace(inner, window(w, n1, i), rest)
            if not inner_out.ok or inner_out.colluders.size != rest:
                return _violated(
                    len(steps) + 1, t0, steps, f"inner trace failed in window {i}"
                )
            sets.append([j - 1 for j in inner_out.colluders.support])
        R = PositionSets.from_sets(sets, outer.q)
        X = suspects(outer, R)
        found = tuple(sorted(unique_contributors(outer, R, X)))
        steps.append(TraceStep(w, R, X, found))
        if not found:
            return _violated(len(steps), t0, steps, "no outer suspect holds a unique symbol")
        traced.update(found)
    if len(traced) != t0:
        return _violated(len(steps), t0, steps, f"traced {len(traced)} codewords, expected {t0}")
    return TraceOutcome(TraceStatus.SUCCESS, index_set(traced), len(steps), t0, tuple(steps))
