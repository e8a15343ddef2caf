"""Exact averaging attacks and residual words for iterative tracing."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .code import Code, CodewordMultiset, GeneratedWord, index_set

__all__ = [
    "AttackError",
    "averaging_attack",
    "multiset_averaging_attack",
    "residual_word",
]


class AttackError(ValueError):
    """Invalid colluder input, or a residual that no colluder subset can produce."""


def _require_binary(code: Code) -> None:
    # Generated words live in [0, 1]; only binary codes embed as watermarks.
    if code.q != 2:
        raise AttackError(f"averaging attacks are defined on binary codes, got q={code.q}")


def multiset_averaging_attack(code: Code, colluders: CodewordMultiset) -> GeneratedWord:
    """Average of the codewords in ``colluders``, each weighted by its multiplicity."""
    _require_binary(code)
    size = colluders.size
    if size == 0:
        raise AttackError("empty colluder multiset")
    sums = [0] * code.n
    for j, r in colluders.counts:
        for i, s in enumerate(code.codeword(j)):
            sums[i] += r * s
    return GeneratedWord(tuple(Fraction(s, size) for s in sums))


def averaging_attack(code: Code, colluders: Iterable[int]) -> GeneratedWord:
    """Generated word of a colluder set: the entrywise mean of their codewords."""
    idx = index_set(colluders, code.M)
    if not idx:
        raise AttackError("empty colluder set")
    return multiset_averaging_attack(code, CodewordMultiset.of(idx))


def residual_word(
    original: GeneratedWord,
    t0: int,
    traced: Iterable[int] | CodewordMultiset,
    code: Code,
) -> GeneratedWord:
    """Generated word of the colluders not yet traced.

    Always computed from the untouched ``original`` word and the full traced
    set: ``(t0 * x - sum of traced codewords) / (t0 - |traced|)``.
    ``traced`` may be a plain index set or a multiset.
    """
    if isinstance(traced, CodewordMultiset):
        counts = traced.counts
    else:
        counts = tuple((j, 1) for j in index_set(traced, code.M))
    removed = sum(r for _, r in counts)
    if removed >= t0:
        raise AttackError(f"traced {removed} codewords but only {t0} colluders")
    if len(original) != code.n:
        raise AttackError(f"word length {len(original)} != code length {code.n}")
    sums = [t0 * e for e in original.entries]
    for j, r in counts:
        for i, s in enumerate(code.codeword(j)):
            if s:
                sums[i] -= r * s
    rest = t0 - removed
    entries = tuple(v / rest for v in sums)
    for i, e in enumerate(entries, start=1):
        if not 0 <= e <= 1:
            raise AttackError(
                f"residual entry {i} = {e} outside [0, 1]; traced set is not a colluder subset"
            )
    return GeneratedWord(entries)
