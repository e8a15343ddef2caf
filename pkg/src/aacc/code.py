"""Core data model: codes, generated words, position sets and multisets.

Codewords are addressed by 1-based column index throughout the package.
Exact rationals are :class:`fractions.Fraction`, which is always stored
reduced with zero canonically ``0/1``.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Sequence

__all__ = [
    "CodeError",
    "Code",
    "GeneratedWord",
    "PositionSets",
    "CodewordMultiset",
    "index_set",
    "parse_code",
    "serialize_code",
]


class CodeError(ValueError):
    """Malformed code text or an invalid code matrix."""


@dataclass(frozen=True)
class Code:
    """An ``(n, M, q)`` code stored column-wise.

    ``columns[j - 1]`` is codeword ``c_j``; ``columns[j - 1][i - 1]`` is
    ``c_j(i)``.
    """

    columns: tuple[tuple[int, ...], ...]
    q: int

    def __post_init__(self):
        cols = tuple(tuple(int(s) for s in col) for col in self.columns)
        object.__setattr__(self, "columns", cols)
        if self.q < 2:
            raise CodeError(f"alphabet size must be >= 2, got {self.q}")
        if not cols:
            raise CodeError("a code needs at least one codeword")
        n = len(cols[0])
        if n < 1:
            raise CodeError("codewords must have length >= 1")
        for j, col in enumerate(cols, start=1):
            if len(col) != n:
                raise CodeError(f"codeword {j} has length {len(col)}, expected {n}")
            for s in col:
                if not 0 <= s < self.q:
                    raise CodeError(f"symbol {s} in codeword {j} outside 0..{self.q - 1}")
        if len(set(cols)) != len(cols):
            seen: dict[tuple[int, ...], int] = {}
            for j, col in enumerate(cols, start=1):
                if col in seen:
                    raise CodeError(f"codewords {seen[col]} and {j} are identical")
                seen[col] = j

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], q: int) -> Code:
        """Build from the incidence matrix (row ``i`` = position ``i``)."""
        if not rows:
            raise CodeError("a code needs at least one position")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise CodeError("ragged rows")
        return cls(tuple(zip(*rows)), q)

    @property
    def n(self) -> int:
        return len(self.columns[0])

    @property
    def M(self) -> int:
        return len(self.columns)

    @property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        return tuple(zip(*self.columns))

    def codeword(self, j: int) -> tuple[int, ...]:
        if not 1 <= j <= self.M:
            raise IndexError(f"codeword index {j} outside 1..{self.M}")
        return self.columns[j - 1]

    @property
    def is_binary(self) -> bool:
        return self.q == 2

    @cached_property
    def packed(self) -> tuple[int, ...]:
        """One-hot packing of each codeword: bit ``i*q + c(i)`` (0-based ``i``)."""
        q = self.q
        return tuple(
            sum(1 << (i * q + s) for i, s in enumerate(col)) for col in self.columns
        )

    def subcode(self, indices: Iterable[int]) -> Code:
        return Code(tuple(self.codeword(j) for j in indices), self.q)


def index_set(indices: Iterable[int], M: int | None = None) -> tuple[int, ...]:
    """Normalize to a sorted duplicate-free tuple of 1-based indices."""
    out = tuple(sorted(set(int(j) for j in indices)))
    if out and out[0] < 1:
        raise ValueError(f"codeword indices are 1-based, got {out[0]}")
    if M is not None and out and out[-1] > M:
        raise ValueError(f"codeword index {out[-1]} outside 1..{M}")
    return out


def _as_fraction(value) -> Fraction:
    if isinstance(value, Mapping):
        return Fraction(int(value["num"]), int(value["den"]))
    if isinstance(value, float):
        raise TypeError("generated-word entries must be exact; use rationalize() for floats")
    return Fraction(value)


@dataclass(frozen=True)
class GeneratedWord:
    """Exact averaging-attack output: one reduced rational in [0, 1] per position."""

    entries: tuple[Fraction, ...]

    def __post_init__(self):
        entries = tuple(_as_fraction(e) for e in self.entries)
        for i, e in enumerate(entries, start=1):
            if not 0 <= e <= 1:
                raise ValueError(f"entry {i} = {e} outside [0, 1]")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def of(cls, *values) -> GeneratedWord:
        return cls(tuple(values))

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    @property
    def denominators(self) -> tuple[int, ...]:
        return tuple(e.denominator for e in self.entries)

    def to_dict(self) -> dict:
        return {"entries": [{"num": e.numerator, "den": e.denominator} for e in self.entries]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: Mapping) -> GeneratedWord:
        try:
            return cls(tuple(data["entries"]))
        except (KeyError, TypeError, ZeroDivisionError) as exc:
            raise ValueError(f"malformed generated word: {exc}") from exc

    @classmethod
    def from_json(cls, text: str) -> GeneratedWord:
        return cls.from_dict(json.loads(text))

    def __str__(self) -> str:
        return "(" + ", ".join(str(e) for e in self.entries) + ")"


@dataclass(frozen=True)
class PositionSets:
    """Per-position symbol sets ``R(1) x ... x R(n)`` stored as alphabet bitmasks.

    Bit ``s`` of ``masks[i]`` is set when symbol ``s`` belongs to ``R(i + 1)``.
    """

    masks: tuple[int, ...]
    q: int

    def __post_init__(self):
        masks = tuple(int(m) for m in self.masks)
        object.__setattr__(self, "masks", masks)
        full = (1 << self.q) - 1
        for i, m in enumerate(masks, start=1):
            if m == 0:
                raise ValueError(f"position set {i} is empty")
            if m & ~full:
                raise ValueError(f"position set {i} has symbols outside 0..{self.q - 1}")

    @classmethod
    def from_sets(cls, sets: Iterable[Iterable[int]], q: int) -> PositionSets:
        masks = []
        for s in sets:
            m = 0
            for sym in s:
                if not 0 <= sym < q:
                    raise ValueError(f"symbol {sym} outside 0..{q - 1}")
                m |= 1 << sym
            masks.append(m)
        return cls(tuple(masks), q)

    @classmethod
    def full(cls, n: int, q: int) -> PositionSets:
        return cls(((1 << q) - 1,) * n, q)

    @classmethod
    def from_packed(cls, packed: int, n: int, q: int) -> PositionSets:
        low = (1 << q) - 1
        return cls(tuple((packed >> (i * q)) & low for i in range(n)), q)

    def packed(self) -> int:
        q = self.q
        return sum(m << (i * q) for i, m in enumerate(self.masks))

    def __len__(self) -> int:
        return len(self.masks)

    def __getitem__(self, i: int) -> frozenset[int]:
        m = self.masks[i]
        return frozenset(s for s in range(self.q) if m >> s & 1)

    def sets(self) -> list[frozenset[int]]:
        return [self[i] for i in range(len(self.masks))]

    def contains(self, word: Sequence[int]) -> bool:
        return len(word) == len(self.masks) and all(
            m >> s & 1 for m, s in zip(self.masks, word)
        )

    def __str__(self) -> str:
        return " x ".join("{" + ",".join(map(str, sorted(s))) + "}" for s in self.sets())


@dataclass(frozen=True)
class CodewordMultiset:
    """Codeword indices with positive multiplicities, kept sorted by index."""

    counts: tuple[tuple[int, int], ...]

    def __post_init__(self):
        merged: Counter[int] = Counter()
        for j, r in self.counts:
            if int(j) < 1:
                raise ValueError(f"codeword indices are 1-based, got {j}")
            if int(r) < 1:
                raise ValueError(f"multiplicity of {j} must be positive, got {r}")
            merged[int(j)] += int(r)
        object.__setattr__(self, "counts", tuple(sorted(merged.items())))

    @classmethod
    def of(cls, items: Mapping[int, int] | Iterable[int]) -> CodewordMultiset:
        """From ``{index: multiplicity}`` or an iterable of (repeated) indices."""
        if isinstance(items, Mapping):
            return cls(tuple(items.items()))
        return cls(tuple(Counter(items).items()))

    @property
    def size(self) -> int:
        return sum(r for _, r in self.counts)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(j for j, _ in self.counts)

    def as_dict(self) -> dict[int, int]:
        return dict(self.counts)

    def to_list(self) -> list[dict]:
        return [{"index": j, "mult": r} for j, r in self.counts]

    @classmethod
    def from_list(cls, data: Iterable[Mapping]) -> CodewordMultiset:
        return cls(tuple((d["index"], d["mult"]) for d in data))


def parse_code(text: str) -> Code:
    """Parse the ``n M q`` header plus ``n`` rows of ``M`` symbols.

    Blank lines and lines starting with ``#`` are ignored.
    """
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise CodeError("empty code text")
    header = lines[0].split()
    if len(header) != 3:
        raise CodeError(f"header must be 'n M q', got {lines[0]!r}")
    try:
        n, M, q = (int(v) for v in header)
    except ValueError as exc:
        raise CodeError(f"non-integer header {lines[0]!r}") from exc
    if n < 1 or M < 1:
        raise CodeError(f"need n >= 1 and M >= 1, got n={n}, M={M}")
    body = lines[1:]
    if len(body) != n:
        raise CodeError(f"expected {n} rows, got {len(body)}")
    rows = []
    for i, ln in enumerate(body, start=1):
        try:
            row = [int(v) for v in ln.split()]
        except ValueError as exc:
            raise CodeError(f"row {i}: non-integer symbol") from exc
        if len(row) != M:
            raise CodeError(f"row {i} has {len(row)} symbols, expected {M}")
        rows.append(row)
    return Code.from_rows(rows, q)


def serialize_code(code: Code) -> str:
    lines = [f"{code.n} {code.M} {code.q}"]
    lines.extend(" ".join(map(str, row)) for row in code.rows)
    return "\n".join(lines) + "\n"
