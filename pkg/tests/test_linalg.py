from fractions import Fraction

import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from mixedsum.linalg import Echelon, Field, bareiss_rank, kernel, matrix_rank, rank, solve

small_matrices = st.integers(1, 5).flatmap(
    lambda r: st.integers(1, 5).flatmap(
        lambda c: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c), min_size=r, max_size=r)))


def dense_rank_mod(matrix, p):
    m = [[x % p for x in row] for row in matrix]
    r = 0
    for c in range(len(m[0])):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], p - 2, p)
        for i in range(len(m)):
            if i != r and m[i][c]:
                t = m[i][c] * inv
                m[i] = [(a - t * b) % p for a, b in zip(m[i], m[r])]
        r += 1
    return r


def columns_of(matrix):
    cols = {}
    for i, row in enumerate(matrix):
        for j, x in enumerate(row):
            if x:
                cols.setdefault(j, {})[i] = x
    for j in range(len(matrix[0])):
        cols.setdefault(j, {})
    return cols


@settings(max_examples=150)
@given(small_matrices)
def test_rank_matches_sympy(matrix):
    expected = sympy.Matrix(matrix).rank()
    assert bareiss_rank(matrix) == expected
    assert matrix_rank(matrix, 0) == expected
    assert rank(columns_of(matrix).values(), Field(0)) == expected


@settings(max_examples=150)
@given(small_matrices, st.sampled_from([2, 3, 5]))
def test_rank_mod_p(matrix, p):
    assert matrix_rank(matrix, p) == dense_rank_mod(matrix, p)


@settings(max_examples=100)
@given(small_matrices, st.sampled_from([0, 2, 7]))
def test_kernel_is_kernel(matrix, p):
    f = Field(p)
    cols = columns_of(matrix)
    ker = kernel(cols, f)
    assert len(ker) == len(cols) - rank(cols.values(), f)
    for c in ker:
        total = {}
        for j, a in c.items():
            for i, x in cols[j].items():
                total[i] = f.reduce(total.get(i, 0) + a * x)
        assert not any(total.values())


@settings(max_examples=100)
@given(small_matrices, st.lists(st.integers(-2, 2), min_size=5, max_size=5))
def test_solve(matrix, weights):
    f = Field(0)
    cols = columns_of(matrix)
    target = {}
    for j, w in zip(cols, weights):
        for i, x in cols[j].items():
            target[i] = target.get(i, 0) + w * x
    target = {i: x for i, x in target.items() if x}
    c = solve(cols, target, f)
    assert c is not None
    got = {}
    for j, a in c.items():
        for i, x in cols[j].items():
            got[i] = got.get(i, 0) + a * x
    assert {i: x for i, x in got.items() if x} == target


def test_solve_inconsistent():
    assert solve({0: {0: 1}}, {1: 1}, Field(0)) is None


def test_field_arithmetic():
    assert Field(0).inv(3) == Fraction(1, 3)
    assert Field(7).inv(3) * 3 % 7 == 1
    assert Field(5)(Fraction(1, 2)) == 3
    assert Field(0)(2) == Fraction(2)


def test_echelon_express():
    e = Echelon(Field(0), track=True)
    e.add({0: 1, 1: 1}, "a")
    e.add({1: 1}, "b")
    assert e.express({0: 2, 1: 3}) == {"a": 2, "b": 1}
    assert e.add({0: 1}, "c") == {"a": -1, "b": 1, "c": 1}
