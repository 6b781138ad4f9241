from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfcheck.linalg import (
    EchelonBasis,
    Matrix,
    SingularMatrixError,
    invert_matrix,
    nullspace,
    rank,
    solve_linear,
)
from hopfcheck.scalars import PrimeField, QQ


def mat(rows):
    return Matrix.from_rows(QQ, [[Fraction(x) for x in row] for row in rows])


def naive_solve(rows, rhs):
    """Independent fraction-by-fraction elimination used as an oracle.

    Returns one solution or None; written without consulting the library
    code so the two can disagree.
    """
    m = [[Fraction(x) for x in row] + [Fraction(b)]
         for row, b in zip(rows, rhs)]
    ncols = len(rows[0]) if rows else 0
    where = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        m[r] = [x / m[r][c] for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        where.append(c)
        r += 1
    for i in range(r, len(m)):
        if m[i][ncols] != 0:
            return None
    out = [Fraction(0)] * ncols
    for row_idx, c in enumerate(where):
        out[c] = m[row_idx][ncols]
    return out


small = st.integers(min_value=-4, max_value=4)


@st.composite
def system(draw):
    n = draw(st.integers(min_value=1, max_value=4))
    m = draw(st.integers(min_value=1, max_value=4))
    rows = [[Fraction(draw(small)) for _ in range(n)] for _ in range(m)]
    rhs = [Fraction(draw(small)) for _ in range(m)]
    return rows, rhs


@settings(max_examples=150, deadline=None)
@given(system())
def test_solver_agrees_with_oracle(sys_pair):
    rows, rhs = sys_pair
    got = solve_linear(mat(rows), tuple(rhs))
    expect = naive_solve(rows, rhs)
    if expect is None:
        assert got is None
    else:
        assert got is not None
        a = mat(rows)
        assert list(a.apply(got.particular)) == rhs
        for h in got.homogeneous:
            assert all(v == 0 for v in a.apply(h))


def test_solve_shapes():
    a = mat([[1, 2], [3, 4]])
    sol = solve_linear(a, (Fraction(5), Fraction(11)))
    assert sol is not None and sol.unique
    assert sol.particular == (Fraction(1), Fraction(2))
    with pytest.raises(ValueError):
        solve_linear(a, (Fraction(1),))


def test_inconsistent_system():
    a = mat([[1, 1], [1, 1]])
    assert solve_linear(a, (Fraction(0), Fraction(1))) is None


def test_nullspace_and_rank():
    a = mat([[1, 2, 3], [2, 4, 6]])
    assert rank(a) == 1
    basis = nullspace(a)
    assert len(basis) == 2
    for v in basis:
        assert all(x == 0 for x in a.apply(v))


def test_invert_matrix():
    a = mat([[2, 1], [1, 1]])
    b = invert_matrix(a)
    assert a * b == Matrix.identity(QQ, 2)
    assert b * a == Matrix.identity(QQ, 2)
    with pytest.raises(SingularMatrixError):
        invert_matrix(mat([[1, 2], [2, 4]]))
    with pytest.raises(SingularMatrixError):
        invert_matrix(mat([[1, 2, 3]]))


def test_matrix_arithmetic_prime_field():
    f5 = PrimeField(5)
    a = Matrix.from_rows(f5, [[f5.parse(2), f5.parse(3)],
                              [f5.parse(1), f5.parse(3)]])
    inv = invert_matrix(a)
    assert a * inv == Matrix.identity(f5, 2)


class TestEchelonBasis:
    def test_insert_and_coords(self):
        span = EchelonBasis(QQ, 3)
        v1 = (Fraction(1), Fraction(2), Fraction(0))
        v2 = (Fraction(0), Fraction(1), Fraction(1))
        assert span.insert(v1)
        assert span.insert(v2)
        assert not span.insert((Fraction(1), Fraction(3), Fraction(1)))
        assert span.dim == 2
        combo = tuple(2 * a + 3 * b for a, b in zip(v1, v2))
        coords = span.coords(combo)
        assert coords is not None
        rebuilt = [Fraction(0)] * 3
        for c, vec in zip(coords, span.vectors):
            rebuilt = [r + c * x for r, x in zip(rebuilt, vec)]
        assert tuple(rebuilt) == combo
        assert span.coords((Fraction(0), Fraction(0), Fraction(1))) is None

    def test_contains(self):
        span = EchelonBasis(QQ, 2)
        span.insert((Fraction(1), Fraction(1)))
        assert span.contains((Fraction(2), Fraction(2)))
        assert not span.contains((Fraction(1), Fraction(0)))

    @settings(max_examples=100, deadline=None)
    @given(st.lists(st.tuples(small, small, small), max_size=6))
    def test_dim_matches_rank(self, vecs):
        span = EchelonBasis(QQ, 3)
        for v in vecs:
            span.insert(tuple(Fraction(x) for x in v))
        expected = rank(mat(vecs)) if vecs else 0
        assert span.dim == expected
        for v in vecs:
            assert span.contains(tuple(Fraction(x) for x in v))
