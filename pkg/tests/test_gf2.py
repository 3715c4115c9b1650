import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_kernel
from pinborel import gf2
from pinborel.gf2 import DimensionError, Gf2Matrix


def test_rank_identity():
    assert gf2.rank(Gf2Matrix.identity(3)) == 3


def test_rank_zero():
    assert gf2.rank(Gf2Matrix.zeros(2, 5)) == 0


def test_rank_repeated_rows():
    assert gf2.rank(Gf2Matrix.from_rows([[1, 1], [1, 1]])) == 1


def test_kernel_of_single_row():
    assert gf2.kernel_basis(Gf2Matrix.from_rows([[1, 1]])) == [0b11]


def test_solve_identity_returns_rhs():
    for b in range(8):
        assert gf2.solve(Gf2Matrix.identity(3), b) == b


def test_image_of_repeated_column():
    assert gf2.image_basis(Gf2Matrix.from_rows([[1, 0], [1, 0]])) == [0b11]


def test_solve_unsolvable():
    assert gf2.solve(Gf2Matrix.from_rows([[1, 1], [1, 1]]), 0b01) is None


def test_dimension_errors():
    with pytest.raises(DimensionError):
        Gf2Matrix.identity(2) @ Gf2Matrix.identity(3)
    with pytest.raises(DimensionError):
        gf2.solve(Gf2Matrix.identity(2), 0b100)
    with pytest.raises(IndexError):
        Gf2Matrix.identity(2)[2, 0]


def test_preimage_space():
    m = Gf2Matrix.from_rows([[1, 0, 1], [0, 1, 1]])
    pre = gf2.preimage_space(m, [0b01])
    span = {0}
    for v in pre:
        span |= {x ^ v for x in span}
    assert span == {x for x in range(8) if m.apply(x) in (0, 0b01)}


def test_subquotient_coordinates():
    q = gf2.Subquotient([0b011, 0b110], [0b101])
    assert q.dim == 1
    assert q.coords(0b101) == 0
    assert q.coords(0b011) == 1


matrices = st.integers(0, 5).flatmap(
    lambda r: st.integers(0, 6).flatmap(
        lambda c: st.lists(st.lists(st.integers(0, 1), min_size=c, max_size=c), min_size=r, max_size=r)
        .map(lambda rows: (r, c, rows))))


@given(matrices)
def test_rank_nullity(data):
    r, c, rows = data
    m = Gf2Matrix.from_rows(rows, c)
    assert m.rank + len(gf2.kernel_basis(m)) == c


@given(matrices)
def test_kernel_matches_enumeration(data):
    r, c, rows = data
    m = Gf2Matrix.from_rows(rows, c)
    basis = gf2.kernel_basis(m)
    assert all(m.apply(v) == 0 for v in basis)
    span = {0}
    for v in basis:
        span |= {x ^ v for x in span}
    assert span == set(brute_kernel(r, c, rows))


@given(matrices, st.integers(0, 31))
def test_solve_is_lexicographically_least(data, b):
    r, c, rows = data
    m = Gf2Matrix.from_rows(rows, c)
    b &= (1 << r) - 1
    sols = [x for x in range(1 << c) if m.apply(x) == b]
    got = gf2.solve(m, b)
    if not sols:
        assert got is None
    else:
        # coordinate 0 is the most significant for the lexicographic order
        def key(x):
            return [(x >> i) & 1 for i in range(c)]
        assert got == min(sols, key=key)


@settings(max_examples=50)
@given(matrices)
def test_deterministic(data):
    r, c, rows = data
    m1 = Gf2Matrix.from_rows(rows, c)
    m2 = Gf2Matrix.from_rows([list(row) for row in rows], c)
    assert gf2.kernel_basis(m1) == gf2.kernel_basis(m2)
    assert gf2.image_basis(m1) == gf2.image_basis(m2)


@given(matrices)
def test_transpose_preserves_rank(data):
    r, c, rows = data
    m = Gf2Matrix.from_rows(rows, c)
    assert m.transpose().rank == m.rank
    assert m.transpose().transpose() == m
