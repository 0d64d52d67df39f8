"""Exact field arithmetic and sparse linear algebra against dense oracles."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hopfcyclic import QQ, GF, field_by_name, Matrix, Subspace, quotient_space
from hopfcyclic.linalg import kernel_basis, vec_add, vec_scale, vec_sub


def dense_rank_oracle(field, rows, cols, entries):
    """Plain dense Gaussian elimination, written independently of Matrix."""
    a = [[entries.get((i, j), field.zero) for j in range(cols)]
         for i in range(rows)]
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if not field.is_zero(a[i][c])),
                   None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = field.inv(a[r][c])
        a[r] = [field.mul(inv, x) for x in a[r]]
        for i in range(rows):
            if i != r and not field.is_zero(a[i][c]):
                f = a[i][c]
                a[i] = [field.sub(x, field.mul(f, y))
                        for x, y in zip(a[i], a[r])]
        r += 1
    return r


FIELDS = [QQ, GF(2), GF(5)]


def small_entries(field):
    if field is QQ:
        return st.fractions(min_value=-3, max_value=3, max_denominator=4)
    return st.integers(min_value=0, max_value=field.p - 1)


@pytest.mark.parametrize("field", FIELDS, ids=str)
def test_field_axioms(field):
    xs = ([Fraction(a, b) for a in (-2, -1, 0, 1, 3) for b in (1, 2)]
          if field is QQ else list(range(field.p)))
    for x in xs:
        assert field.add(x, field.zero) == x
        assert field.mul(x, field.one) == x
        assert field.is_zero(field.add(x, field.neg(x)))
        if not field.is_zero(x):
            assert field.mul(x, field.inv(x)) == field.one
        for y in xs:
            assert field.add(x, y) == field.add(y, x)
            assert field.mul(x, y) == field.mul(y, x)
            for z in xs:
                assert field.mul(x, field.add(y, z)) == \
                    field.add(field.mul(x, y), field.mul(x, z))


def test_field_by_name_round_trip():
    assert field_by_name("Q") is QQ
    assert field_by_name("7") == GF(7)
    assert field_by_name("7").p == 7
    with pytest.raises(ValueError):
        GF(6)


def test_prime_field_division():
    f = GF(7)
    assert f(3, 5) == (3 * pow(5, -1, 7)) % 7
    with pytest.raises(ZeroDivisionError):
        f(1, 7)


@pytest.mark.parametrize("field", FIELDS, ids=str)
@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_rank_matches_dense_oracle(field, data):
    rows = data.draw(st.integers(1, 6))
    cols = data.draw(st.integers(1, 6))
    entries = data.draw(st.dictionaries(
        st.tuples(st.integers(0, rows - 1), st.integers(0, cols - 1)),
        small_entries(field), max_size=12))
    m = Matrix(field, rows, cols, entries)
    assert m.rank() == dense_rank_oracle(field, rows, cols, entries)


@pytest.mark.parametrize("field", FIELDS, ids=str)
@settings(max_examples=30, deadline=None)
@given(data=st.data())
def test_kernel_is_killed_and_full(field, data):
    rows = data.draw(st.integers(1, 5))
    cols = data.draw(st.integers(1, 5))
    entries = data.draw(st.dictionaries(
        st.tuples(st.integers(0, rows - 1), st.integers(0, cols - 1)),
        small_entries(field), max_size=10))
    m = Matrix(field, rows, cols, entries)
    ker = kernel_basis(m)
    # rank-nullity, and every basis vector really is in the kernel
    assert ker.dim == cols - m.rank()
    for v in ker.basis:
        assert not m.apply(v)


@pytest.mark.parametrize("field", FIELDS, ids=str)
@settings(max_examples=25, deadline=None)
@given(data=st.data())
def test_matrix_product_associative(field, data):
    def draw_mat(r, c):
        ent = data.draw(st.dictionaries(
            st.tuples(st.integers(0, r - 1), st.integers(0, c - 1)),
            small_entries(field), max_size=8))
        return Matrix(field, r, c, ent)
    a, b, c = data.draw(st.integers(1, 4)), data.draw(st.integers(1, 4)), \
        data.draw(st.integers(1, 4)),
    d = data.draw(st.integers(1, 4))
    m1, m2, m3 = draw_mat(a, b), draw_mat(b, c), draw_mat(c, d)
    assert (m1 * m2) * m3 == m1 * (m2 * m3)


def test_matrix_inverse_and_powers():
    f = QQ
    m = Matrix(f, 2, 2, {(0, 0): f(1), (0, 1): f(1), (1, 1): f(1)})
    inv = m.inverse()
    assert m * inv == Matrix.identity(f, 2)
    assert m.pow_int(3) * m.pow_int(-3) == Matrix.identity(f, 2)


def test_kron_shape_and_entries():
    f = QQ
    a = Matrix(f, 2, 2, {(0, 1): f(2)})
    b = Matrix.identity(f, 3)
    k = a.kron(b)
    assert (k.rows, k.cols) == (6, 6)
    assert k.entries == {(0 * 3 + i, 1 * 3 + i): f(2) for i in range(3)}


def test_subspace_membership_and_growth():
    f = QQ
    s = Subspace.from_vectors(f, 3, [{0: f.one, 1: f.one}])
    assert s.contains({0: f(2), 1: f(2)})
    assert not s.contains({0: f.one})
    assert s.add_vector({2: f.one})
    assert not s.add_vector({0: f(3), 1: f(3), 2: f(-5)})
    assert s.dim == 2


def test_quotient_space_kills_subspace():
    f = QQ
    s = Subspace.from_vectors(f, 3, [{0: f.one, 1: f.one}])
    dim, proj, sect = quotient_space(3, s)
    assert dim == 2 and proj.rows == 2 and proj.cols == 3
    # the subspace maps to zero, and the section splits the projection
    assert not proj.apply({0: f.one, 1: f.one})
    assert proj * sect == Matrix.identity(f, 2)


def test_vector_helpers():
    f = QQ
    u = {0: f.one}
    v = {0: f.neg(f.one), 1: f(3)}
    assert vec_add(f, u, v) == {1: f(3)}
    assert vec_sub(f, u, u) == {}
    assert vec_scale(f, f.zero, v) == {}
