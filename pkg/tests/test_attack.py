import itertools
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from aacc import AttackError, Code, CodewordMultiset, GeneratedWord
from aacc import averaging_attack, multiset_averaging_attack, residual_word
from strategies import binary_codes


def test_worked_example_word(ex_code):
    assert averaging_attack(ex_code, {1, 2, 3}) == GeneratedWord.of(0, F(2, 3), F(2, 3), F(1, 3))


def test_all_five_colluders(ex_code):
    # oracle: direct column sums of the incidence matrix
    expected = oracles.attack(ex_code.columns, (1, 2, 3, 4, 5))
    assert expected == (F(1, 5), F(2, 5), F(2, 5), F(2, 5))
    assert averaging_attack(ex_code, range(1, 6)).entries == expected


def test_single_colluder_is_codeword(ex_code):
    for j in range(1, 6):
        x = averaging_attack(ex_code, [j])
        assert x.entries == ex_code.codeword(j)
        assert x.denominators == (1,) * 4


def test_attack_errors(ex_code):
    with pytest.raises(AttackError):
        averaging_attack(ex_code, [])
    with pytest.raises(ValueError):
        averaging_attack(ex_code, [6])
    with pytest.raises(AttackError):
        averaging_attack(Code.from_rows([[0, 2]], 3), [1, 2])


def test_multiset_examples(inner_d):
    assert multiset_averaging_attack(inner_d, CodewordMultiset.of({2: 2, 3: 1})) == GeneratedWord.of(
        F(2, 3), F(1, 3)
    )
    assert multiset_averaging_attack(inner_d, CodewordMultiset.of([1, 2, 3])) == GeneratedWord.of(
        F(1, 3), F(1, 3)
    )
    for j in (1, 2, 3):
        for k in (1, 4):
            assert multiset_averaging_attack(inner_d, CodewordMultiset.of({j: k})).entries == inner_d.codeword(j)
    with pytest.raises(AttackError):
        multiset_averaging_attack(inner_d, CodewordMultiset(()))


def test_residual_examples(ex_code):
    x = GeneratedWord.of(0, F(2, 3), F(2, 3), F(1, 3))
    assert residual_word(x, 3, {3}, ex_code) == GeneratedWord.of(0, 1, F(1, 2), 0)
    assert residual_word(x, 3, set(), ex_code) == x
    assert residual_word(x, 3, {3, 1}, ex_code) == averaging_attack(ex_code, [2])


def test_residual_errors(ex_code):
    x = averaging_attack(ex_code, [1, 2, 3])
    with pytest.raises(AttackError):
        residual_word(x, 3, {1, 2, 3}, ex_code)
    # c4 is not a colluder: its 1 in position 1 drives the residual negative
    with pytest.raises(AttackError, match="outside"):
        residual_word(x, 3, {4}, ex_code)


@given(binary_codes(), st.data())
def test_attack_bounds_and_denominators(code, data):
    S = data.draw(st.sets(st.integers(1, code.M), min_size=1))
    x = averaging_attack(code, S)
    assert all(0 <= e <= 1 for e in x)
    assert all(len(S) % d == 0 for d in x.denominators)
    assert x.entries == oracles.attack(code.columns, sorted(S))


@given(binary_codes(max_n=5, max_m=6))
def test_residual_consistency_exhaustive(code):
    for S in oracles.all_subsets(code.M):
        x = averaging_attack(code, S)
        for k in range(len(S)):
            for T in itertools.combinations(S, k):
                rest = sorted(set(S) - set(T))
                assert residual_word(x, len(S), T, code) == averaging_attack(code, rest)


@given(binary_codes(), st.data())
def test_unit_multiset_equals_set_attack(code, data):
    S = data.draw(st.sets(st.integers(1, code.M), min_size=1))
    assert multiset_averaging_attack(code, CodewordMultiset.of(S)) == averaging_attack(code, S)


@given(binary_codes(), st.data())
def test_multiset_residual(code, data):
    mult = data.draw(st.dictionaries(st.integers(1, code.M), st.integers(1, 3), min_size=1))
    x = multiset_averaging_attack(code, CodewordMultiset.of(mult))
    assert x.entries == oracles.multiset_attack(code.columns, mult)
    size = sum(mult.values())
    j = min(mult)
    part = {j: mult[j]}
    rest = {k: r for k, r in mult.items() if k != j}
    if rest:
        assert residual_word(x, size, CodewordMultiset.of(part), code) == multiset_averaging_attack(
            code, CodewordMultiset.of(rest)
        )
