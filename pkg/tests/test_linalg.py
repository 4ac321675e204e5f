import random

import pytest
from hypothesis import given, settings, strategies as st

from whlab.errors import FieldMismatch
from whlab.fields import GF, QQ
from whlab.linalg import EchelonSpace, Matrix, RowSpace, row_reduce, solve


def test_identity_full_rank():
    rr = row_reduce(Matrix.identity(QQ, 2))
    assert rr.rank == 2
    assert rr.kernel == ()


def test_zero_matrix():
    rr = row_reduce(Matrix.zero(QQ, 2, 3))
    assert rr.rank == 0
    assert len(rr.kernel) == 3


def test_f2_ones_matrix():
    # hand Gaussian elimination: one pivot, kernel spanned by (1,1)
    rr = row_reduce(Matrix(GF(2), [[1, 1], [1, 1]]))
    assert rr.rank == 1
    assert rr.kernel == ((1, 1),)


def test_mixed_fields_error():
    a = Matrix(QQ, [[1]])
    b = Matrix(GF(2), [[1]])
    with pytest.raises(FieldMismatch):
        a @ b
    with pytest.raises(FieldMismatch):
        a.vstack(b)


@given(st.data())
@settings(max_examples=40, deadline=None)
def test_rank_transpose_and_kernel(data):
    field = data.draw(st.sampled_from([QQ, GF(2), GF(5)]))
    rows = data.draw(st.integers(1, 12))
    cols = data.draw(st.integers(1, 12))
    entries = data.draw(st.lists(st.integers(-4, 4), min_size=rows * cols, max_size=rows * cols))
    m = Matrix(field, [entries[i * cols:(i + 1) * cols] for i in range(rows)])
    rr = row_reduce(m)
    assert rr.rank == row_reduce(m.transpose()).rank
    assert rr.rank + len(rr.kernel) == cols
    for v in rr.kernel:
        assert all(field.is_zero(x) for x in m.apply(v))


def test_solve_consistent_and_inconsistent():
    m = Matrix(QQ, [[1, 2], [3, 4]])
    x = solve(m, (5, 11))
    assert m.apply(x) == (QQ.of(5), QQ.of(11))
    singular = Matrix(QQ, [[1, 1], [1, 1]])
    assert solve(singular, (0, 1)) is None


def test_echelon_space_membership():
    sp = EchelonSpace(GF(3), 3)
    assert sp.add((1, 2, 0))
    assert sp.add((0, 1, 1))
    assert not sp.add((1, 0, 1))  # = row1 - 2·row2 over F3
    assert sp.dim == 2
    assert sp.contains((2, 1, 2))
    assert not sp.contains((0, 0, 1))


def test_rowspace_batched_matches_echelon():
    rng = random.Random(7)
    for field in (GF(2), GF(7), QQ):
        ncols = 9
        vectors = [tuple(rng.randrange(-3, 4) for _ in range(ncols)) for _ in range(25)]
        rs = RowSpace(field, ncols)
        rs.add_rows([tuple(field.of(x) for x in v) for v in vectors[:10]])
        rs.add_rows([tuple(field.of(x) for x in v) for v in vectors[10:]])
        ref = EchelonSpace(field, ncols)
        for v in vectors:
            ref.add(v)
        assert rs.dim == ref.dim
        # residues vanish exactly on members
        for v in vectors:
            assert all(field.is_zero(x) for x in rs.reduce(tuple(field.of(x) for x in v)))
