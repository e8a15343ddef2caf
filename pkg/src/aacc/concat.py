"""Concatenation of a q-ary outer code with a binary inner code."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .code import Code, CodeError, GeneratedWord

__all__ = ["ConcatSpec", "concatenate", "window", "decompose"]


@dataclass(frozen=True)
class ConcatSpec:
    """``outer o inner`` with outer symbol ``k`` replaced by inner codeword ``k + 1``."""

    outer: Code
    inner: Code

    def __post_init__(self):
        if self.inner.q != 2:
            raise CodeError(f"inner code must be binary, got q={self.inner.q}")
        if self.inner.M != self.outer.q:
            raise CodeError(
                f"inner code has {self.inner.M} codewords but outer alphabet has {self.outer.q} symbols"
            )

    @property
    def n1(self) -> int:
        return self.outer.n

    @property
    def n2(self) -> int:
        return self.inner.n

    @cached_property
    def code(self) -> Code:
        inner = self.inner.columns
        cols = tuple(
            tuple(bit for sym in b for bit in inner[sym]) for b in self.outer.columns
        )
        return Code(cols, 2)


def concatenate(outer: Code, inner: Code) -> Code:
    return ConcatSpec(outer, inner).code


def window(x: GeneratedWord, n1: int, i: int) -> GeneratedWord:
    """The ``i``-th (1-based) of ``n1`` equal contiguous blocks of ``x``."""
    if n1 < 1 or len(x) % n1:
        raise ValueError(f"word length {len(x)} not divisible by n1={n1}")
    if not 1 <= i <= n1:
        raise IndexError(f"window {i} outside 1..{n1}")
    n2 = len(x) // n1
    return GeneratedWord(x.entries[(i - 1) * n2 : i * n2])


def decompose(code: Code, n1: int) -> ConcatSpec:
    """Split a binary code into outer and inner parts over ``n1`` windows.

    The inner code is the set of distinct blocks, numbered in order of first
    appearance (column-major); it is a subcode of any inner code that could
    have produced ``code``.
    """
    if code.q != 2:
        raise CodeError("only binary codes can be decomposed")
    if n1 < 1 or code.n % n1:
        raise CodeError(f"code length {code.n} not divisible by n1={n1}")
    n2 = code.n // n1
    blocks: dict[tuple[int, ...], int] = {}
    outer_cols = []
    for col in code.columns:
        syms = []
        for i in range(n1):
            blk = col[i * n2 : (i + 1) * n2]
            syms.append(blocks.setdefault(blk, len(blocks)))
        outer_cols.append(tuple(syms))
    inner = Code(tuple(blocks), 2)
    q = max(2, len(blocks))
    if len(blocks) < 2:
        # a one-symbol outer alphabet still needs q >= 2 inner codewords
        filler = next(
            tuple((v >> b) & 1 for b in range(n2))
            for v in range(2**n2)
            if tuple((v >> b) & 1 for b in range(n2)) not in blocks
        )
        inner = Code(tuple(blocks) + (filler,), 2)
    return ConcatSpec(Code(tuple(outer_cols), q), inner)
