"""Definitional reference implementations used as independent test oracles.

Deliberately naive: codes are plain lists of tuples, descendant codes are
tuples of frozensets, parent sets range over every subset of the code.
Nothing here imports the package's bitmask machinery.
"""

from __future__ import annotations

import itertools
from fractions import Fraction


def columns(rows):
    return [tuple(c) for c in zip(*rows)]


def desc(cols, S):
    n = len(cols[0])
    return tuple(frozenset(cols[j - 1][i] for j in S) for i in range(n))


def in_desc(word, d):
    return all(s in d[i] for i, s in enumerate(word))


def suspects(cols, d):
    return {j for j, c in enumerate(cols, start=1) if in_desc(c, d)}


def small_subsets(M, t):
    for k in range(1, min(t, M) + 1):
        yield from itertools.combinations(range(1, M + 1), k)


def all_subsets(M):
    for k in range(1, M + 1):
        yield from itertools.combinations(range(1, M + 1), k)


def attack(cols, S):
    n = len(cols[0])
    return tuple(Fraction(sum(cols[j - 1][i] for j in S), len(S)) for i in range(n))


def multiset_attack(cols, mult):
    n = len(cols[0])
    size = sum(mult.values())
    return tuple(Fraction(sum(r * cols[j - 1][i] for j, r in mult.items()), size) for i in range(n))


def parents(cols, S):
    target = desc(cols, S)
    return [set(P) for P in all_subsets(len(cols)) if desc(cols, P) == target]


def fpc(cols, t):
    return all(suspects(cols, desc(cols, S)) == set(S) for S in small_subsets(len(cols), t))


def sc(cols, t):
    subs = list(small_subsets(len(cols), t))
    return all(
        desc(cols, a) != desc(cols, b) for a, b in itertools.combinations(subs, 2)
    )


def scld(cols, t, L):
    return sc(cols, t) and all(
        len(suspects(cols, desc(cols, S))) <= L for S in small_subsets(len(cols), t)
    )


def ssc(cols, t):
    for S in small_subsets(len(cols), t):
        if set.intersection(*parents(cols, S)) != set(S):
            return False
    return True


def smippc(cols, t):
    for S in small_subsets(len(cols), t):
        if not set.intersection(*parents(cols, S)):
            return False
    return True


def udc(cols, t):
    n = len(cols[0])
    for S in small_subsets(len(cols), t):
        sus = suspects(cols, desc(cols, S))
        ok = any(
            all(cols[o - 1][i] != cols[c - 1][i] for o in sus - {c})
            for c in S
            for i in range(n)
        )
        if not ok:
            return False
    return True


ORACLES = {"fpc": fpc, "sc": sc, "ssc": ssc, "smippc": smippc, "udc": udc}


def max_code_size(n, q, t, prop):
    """Largest M over every subset of Q^n; brute force, tiny parameters only."""
    words = list(itertools.product(range(q), repeat=n))
    check = ORACLES[prop]
    for M in range(len(words), 0, -1):
        for cols in itertools.combinations(words, M):
            if check(list(cols), t):
                return M
    return 0
