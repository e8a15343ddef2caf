from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from aacc import (
    Code,
    EnumerationCapExceeded,
    GeneratedWord,
    PositionSets,
    averaging_attack,
    desc_from_word,
    descendant,
    parent_intersection,
    parent_sets,
    suspects,
)
from strategies import binary_codes, codes


def ps(*sets, q=2):
    return PositionSets.from_sets(sets, q)


def test_descendant_examples(ex_code):
    assert descendant(ex_code, {1, 2, 3}) == ps({0}, {0, 1}, {0, 1}, {0, 1})
    assert descendant(ex_code, {4, 5}) == ps({0, 1}, {0}, {0}, {0, 1})
    for j in range(1, 6):
        assert descendant(ex_code, [j]) == ps(*({s} for s in ex_code.codeword(j)))
    with pytest.raises(ValueError):
        descendant(ex_code, [])


def test_desc_from_word_examples():
    F = Fraction
    assert desc_from_word(GeneratedWord.of(0, F(2, 3), F(2, 3), F(1, 3))) == ps({0}, {0, 1}, {0, 1}, {0, 1})
    assert desc_from_word(GeneratedWord.of(0, 1, F(1, 2), 0)) == ps({0}, {1}, {0, 1}, {0})
    assert desc_from_word(GeneratedWord.of(0, 0, 0)) == ps({0}, {0}, {0})


def test_suspects_examples(ex_code):
    assert suspects(ex_code, ps({0}, {0, 1}, {0, 1}, {0, 1})) == (1, 2, 3, 5)
    assert suspects(ex_code, PositionSets.full(4, 2)) == (1, 2, 3, 4, 5)
    assert suspects(ex_code, ps({0}, {1}, {0, 1}, {0})) == (1, 2)
    with pytest.raises(ValueError):
        suspects(ex_code, PositionSets.full(3, 2))
    with pytest.raises(ValueError):
        suspects(ex_code, ps({2}, {0}, {0}, {0}, q=3))


def test_parent_sets_examples(ex_code):
    for j in range(1, 6):
        assert parent_sets(ex_code, [j]) == [(j,)]
    got = parent_sets(ex_code, [1, 2, 3])
    assert (1, 2, 3) in got
    # oracle: every subset of the whole code with the same descendant code
    expected = sorted(tuple(sorted(P)) for P in oracles.parents(ex_code.columns, (1, 2, 3)))
    assert expected == [(1, 2, 3), (1, 2, 3, 5), (1, 3, 5), (2, 3), (2, 3, 5)]
    assert got == expected
    assert parent_intersection(ex_code, [1, 2, 3])[:2] == ((3,), 5)


def test_parent_cap(ex_code):
    with pytest.raises(EnumerationCapExceeded):
        parent_sets(ex_code, [1, 2, 3], cap=8)


def test_wide_codes_use_python_fallback():
    # 40 positions over q=3 -> 120-bit packed words, beyond uint64
    code = Code(tuple(tuple((j >> (i % 3)) & 1 for i in range(40)) for j in range(3)) + ((2,) * 40,), 3)
    assert parent_sets(code, [1, 2]) == sorted(
        tuple(sorted(P)) for P in oracles.parents(code.columns, (1, 2))
    )


@given(binary_codes(), st.data())
def test_desc_from_word_matches_descendant(code, data):
    S = data.draw(st.sets(st.integers(1, code.M), min_size=1))
    assert desc_from_word(averaging_attack(code, S)) == descendant(code, S)


@given(codes(), st.data())
def test_colluders_are_suspects(code, data):
    S = data.draw(st.sets(st.integers(1, code.M), min_size=1))
    R = descendant(code, S)
    assert set(S) <= set(suspects(code, R))
    assert set(suspects(code, R)) == oracles.suspects(code.columns, oracles.desc(code.columns, S))


@settings(max_examples=60)
@given(codes(max_n=4, max_m=7), st.data())
def test_parent_sets_match_oracle(code, data):
    S = tuple(sorted(data.draw(st.sets(st.integers(1, code.M), min_size=1))))
    got = parent_sets(code, S)
    assert S in got
    for P in got:
        assert descendant(code, P) == descendant(code, S)
    assert got == sorted(tuple(sorted(P)) for P in oracles.parents(code.columns, S))
