import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from aacc import (
    Code,
    CodeError,
    CodewordMultiset,
    ConcatSpec,
    GeneratedWord,
    averaging_attack,
    concatenate,
    decompose,
    has_udc,
    multiset_averaging_attack,
    window,
)
from aacc.bench import unit_vector_code
from conftest import C_ROWS
from strategies import codes


def test_concatenation_example(outer_b, inner_d):
    code = concatenate(outer_b, inner_d)
    assert (code.n, code.M, code.q) == (4, 6, 2)
    assert code.rows == tuple(tuple(r) for r in C_ROWS)


def test_single_outer_column(inner_d):
    outer = Code(((0, 0),), 3)
    assert concatenate(outer, inner_d).columns == (inner_d.codeword(1) * 2,)


def test_concat_errors(outer_b, inner_d):
    with pytest.raises(CodeError):
        concatenate(outer_b, Code(((0,), (1,)), 2))
    with pytest.raises(CodeError):
        concatenate(outer_b, Code(((0,), (1,), (2,)), 3))


def test_window():
    x = GeneratedWord.of(0, 1, 0, 1)
    assert window(x, 2, 2).entries == (0, 1)
    assert window(x, 1, 1) == x
    with pytest.raises(ValueError):
        window(x, 3, 1)
    with pytest.raises(IndexError):
        window(x, 2, 3)


def test_window_of_example_attack(outer_b, inner_d):
    code = concatenate(outer_b, inner_d)
    x = averaging_attack(code, [1, 2, 3])
    inner_multiset = CodewordMultiset.of([outer_b.codeword(j)[0] + 1 for j in (1, 2, 3)])
    assert inner_multiset == CodewordMultiset.of({1: 2, 2: 1})
    assert window(x, 2, 1) == multiset_averaging_attack(inner_d, inner_multiset)


@settings(max_examples=40, deadline=None)
@given(codes(max_n=3, max_m=6, max_q=4), st.data())
def test_window_structure_exhaustive(outer, data):
    n2 = data.draw(st.integers(2, 4))
    inner_words = data.draw(
        st.lists(st.tuples(*[st.integers(0, 1)] * n2), min_size=outer.q, max_size=outer.q, unique=True)
        if 2**n2 >= outer.q
        else st.nothing()
    )
    inner = Code(tuple(inner_words), 2)
    code = concatenate(outer, inner)
    for S in oracles.all_subsets(outer.M):
        x = averaging_attack(code, S)
        for i in range(1, outer.n + 1):
            m = CodewordMultiset.of([outer.codeword(j)[i - 1] + 1 for j in S])
            assert window(x, outer.n, i) == multiset_averaging_attack(inner, m)


def test_unit_vector_inner_preserves_udc():
    for outer_rows, q in [([[0, 0, 1, 1, 2, 2], [0, 1, 1, 2, 2, 0]], 3), ([[0, 1, 2, 3], [0, 1, 2, 3]], 4)]:
        outer = Code.from_rows(outer_rows, q)
        code = concatenate(outer, unit_vector_code(q))
        for t in (1, 2, 3):
            assert has_udc(code, t).holds == has_udc(outer, t).holds
            assert oracles.udc(list(code.columns), t) == oracles.udc(list(outer.columns), t)


def test_decompose_round_trip(outer_b, inner_d):
    code = concatenate(outer_b, inner_d)
    spec = decompose(code, 2)
    assert isinstance(spec, ConcatSpec)
    assert spec.code == code
    assert spec.outer.M == 6
    with pytest.raises(CodeError):
        decompose(code, 3)


def test_decompose_single_block_pads_inner():
    code = Code(((0, 1, 0, 1),), 2)
    spec = decompose(code, 2)
    assert spec.code == code and spec.inner.M == 2
