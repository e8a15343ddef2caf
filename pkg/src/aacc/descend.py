"""Descendant codes, suspect filtering and parent-set enumeration."""

from __future__ import annotations

from functools import reduce
from operator import or_
from typing import Iterable

import numpy as np

from .code import Code, GeneratedWord, PositionSets, index_set

__all__ = [
    "EnumerationCapExceeded",
    "DEFAULT_PARENT_CAP",
    "descendant",
    "desc_from_word",
    "suspects",
    "parent_sets",
    "parent_intersection",
]

DEFAULT_PARENT_CAP = 1 << 24


class EnumerationCapExceeded(RuntimeError):
    """Too many candidate subsets to enumerate parent sets explicitly."""


def _packed_desc(code: Code, idx: Iterable[int]) -> int:
    packed = code.packed
    return reduce(or_, (packed[j - 1] for j in idx), 0)


def descendant(code: Code, subset: Iterable[int]) -> PositionSets:
    """``desc(C')``: at each position, the symbols used by the codewords in ``subset``."""
    idx = index_set(subset, code.M)
    if not idx:
        raise ValueError("descendant of an empty subset is undefined")
    return PositionSets.from_packed(_packed_desc(code, idx), code.n, code.q)


def desc_from_word(x: GeneratedWord) -> PositionSets:
    """Binary descendant code read off a generated word.

    ``{0}`` where the entry is 0, ``{1}`` where it is 1, ``{0, 1}`` otherwise.
    """
    masks = []
    for e in x.entries:
        if e == 0:
            masks.append(0b01)
        elif e == 1:
            masks.append(0b10)
        else:
            masks.append(0b11)
    return PositionSets(tuple(masks), 2)


def _check_dims(code: Code, R: PositionSets) -> None:
    if len(R) != code.n:
        raise ValueError(f"position sets have {len(R)} positions, code has {code.n}")
    if R.q > code.q and any(m >> code.q for m in R.masks):
        raise ValueError(f"position sets use symbols outside the code alphabet 0..{code.q - 1}")


def _suspects_packed(packed: tuple[int, ...], D: int) -> list[int]:
    outside = ~D
    return [j for j, e in enumerate(packed, start=1) if not e & outside]


def suspects(code: Code, R: PositionSets) -> tuple[int, ...]:
    """Indices of codewords lying inside ``R`` (i.e. ``R`` intersected with the code)."""
    _check_dims(code, R)
    D = sum(m << (i * code.q) for i, m in enumerate(R.masks))
    return tuple(_suspects_packed(code.packed, D))


def _subset_or_table(elems: list[int]) -> np.ndarray | list[int]:
    """OR of every subset of ``elems``; entry ``k`` is the OR over the bits of ``k``."""
    width = reduce(or_, elems, 0).bit_length()
    if width <= 63:
        table = np.zeros(1, dtype=np.uint64)
        for e in elems:
            table = np.concatenate((table, table | np.uint64(e)))
        return table
    table_py = [0]
    for e in elems:
        table_py = table_py + [v | e for v in table_py]
    return table_py


def _parent_masks(code: Code, subset: Iterable[int], cap: int):
    idx = index_set(subset, code.M)
    if not idx:
        raise ValueError("parent sets of an empty subset are undefined")
    D = _packed_desc(code, idx)
    sus = _suspects_packed(code.packed, D)
    if 2 ** len(sus) > cap:
        raise EnumerationCapExceeded(
            f"{len(sus)} suspects means 2^{len(sus)} candidate subsets (cap {cap})"
        )
    table = _subset_or_table([code.packed[j - 1] for j in sus])
    if isinstance(table, np.ndarray):
        hits = np.flatnonzero(table == np.uint64(D))
    else:
        hits = np.array([k for k, v in enumerate(table) if v == D], dtype=np.int64)
    return sus, hits, 2 ** len(sus)


def _unmask(sus: list[int], mask: int) -> tuple[int, ...]:
    return tuple(j for b, j in enumerate(sus) if mask >> b & 1)


def parent_sets(
    code: Code, subset: Iterable[int], cap: int = DEFAULT_PARENT_CAP
) -> list[tuple[int, ...]]:
    """All ``S`` with ``desc(S) == desc(subset)``, sorted.

    Any such ``S`` lies inside the suspect set of ``desc(subset)``, so only
    subsets of the suspects are enumerated.
    """
    sus, hits, _ = _parent_masks(code, subset, cap)
    return sorted(_unmask(sus, int(k)) for k in hits)


def parent_intersection(
    code: Code, subset: Iterable[int], cap: int = DEFAULT_PARENT_CAP
) -> tuple[tuple[int, ...], int, int]:
    """Intersection of all parent sets of ``subset``.

    Returns ``(intersection, number_of_parent_sets, candidates_enumerated)``.
    """
    sus, hits, n_candidates = _parent_masks(code, subset, cap)
    inter = int(np.bitwise_and.reduce(hits)) if len(hits) else 0
    return _unmask(sus, inter), len(hits), n_candidates
