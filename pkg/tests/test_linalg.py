import random
from fractions import Fraction

from acalg.linalg import (
    ExactMatrix,
    SpanReducer,
    same_span,
    select_independent,
    solve_columns,
    span_rank,
)
from acalg.scalars import GaussianRational, ONE, ZERO


def rand_matrix(rng, nrows, ncols, density=0.6):
    rows = []
    for _ in range(nrows):
        rows.append(
            [
                GaussianRational(
                    Fraction(rng.randint(-4, 4), rng.randint(1, 3)),
                    Fraction(rng.randint(-2, 2)),
                )
                if rng.random() < density
                else ZERO
                for _ in range(ncols)
            ]
        )
    return ExactMatrix(rows, ncols=ncols)


def test_rank_simple():
    m = ExactMatrix([[ONE, ONE], [ONE, ONE]])
    assert m.rank() == 1
    assert ExactMatrix.identity(4).rank() == 4
    assert ExactMatrix.zeros(3, 5).rank() == 0


def test_rank_row_vs_column_echelon():
    rng = random.Random(3)
    for _ in range(40):
        m = rand_matrix(rng, rng.randint(1, 7), rng.randint(1, 7))
        assert m.rank() == m.transpose().rank()


def test_rank_plus_nullity():
    rng = random.Random(4)
    for _ in range(40):
        m = rand_matrix(rng, rng.randint(1, 7), rng.randint(1, 7))
        assert m.rank() + len(m.nullspace()) == m.ncols


def test_nullspace_vectors_are_in_kernel():
    rng = random.Random(5)
    for _ in range(30):
        m = rand_matrix(rng, rng.randint(1, 6), rng.randint(1, 6))
        for vec in m.nullspace():
            assert all(not x for x in m.apply(vec))


def test_bareiss_agrees_with_rref_rank():
    rng = random.Random(6)
    for _ in range(40):
        m = rand_matrix(rng, rng.randint(1, 7), rng.randint(1, 7))
        _, pivots = m.rref()
        assert m.rank() == len(pivots)


def test_solve_columns():
    cols = [[ONE, ZERO, ONE], [ZERO, ONE, ONE]]
    inside = [ONE + ONE, ONE, ONE + ONE + ONE]  # 2*c0 + 1*c1
    outside = [ONE, ZERO, ZERO]
    got = solve_columns(cols, [inside, outside])
    assert got[0] == [ONE + ONE, ONE]
    assert got[1] is None


def test_solve_columns_reproduces_combination():
    rng = random.Random(7)
    for _ in range(25):
        m = rand_matrix(rng, 6, 4)
        cols = m.columns()
        coeffs = [GaussianRational(rng.randint(-3, 3), rng.randint(-2, 2)) for _ in cols]
        rhs = [
            sum((cols[j][i] * coeffs[j] for j in range(4)), ZERO) for i in range(6)
        ]
        sol = solve_columns(cols, [rhs])[0]
        assert sol is not None
        rebuilt = [
            sum((cols[j][i] * sol[j] for j in range(4)), ZERO) for i in range(6)
        ]
        assert rebuilt == rhs


def test_matmul_and_apply():
    a = ExactMatrix([[ONE, ONE], [ZERO, ONE]])
    b = ExactMatrix([[ONE, ZERO], [ONE, ONE]])
    assert (a @ b).rows == ExactMatrix([[ONE + ONE, ONE], [ONE, ONE]]).rows
    assert a.apply([ONE, ONE]) == [ONE + ONE, ONE]


def test_span_reducer_greedy():
    v1 = [ONE, ZERO, ZERO]
    v2 = [ZERO, ONE, ZERO]
    v12 = [ONE, ONE, ZERO]
    assert select_independent([v1, v2, v12]) == [0, 1]
    assert select_independent([v12, v12, v1]) == [0, 2]
    reducer = SpanReducer([v1, v12])
    assert reducer.contains(v2)
    assert not reducer.contains([ZERO, ZERO, ONE])
    assert span_rank([v1, v2, v12]) == 2


def test_same_span():
    v1 = [ONE, ZERO]
    v2 = [ZERO, ONE]
    assert same_span([v1, v2], [[ONE, ONE], [ONE, -ONE]])
    assert not same_span([v1], [v2])
    assert not same_span([v1], [v1, v2])
